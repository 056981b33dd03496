//! Voronoi sums `V_{m,n}(a,b) = sum_k k^m floor(ak/b)^n` against their
//! expansions through gap-polynomial values at roots of unity, in the
//! Mirimanoff and Apostol–Bernoulli forms.
//!
//!     cargo run --example voronoi_sums

use sdlab::dedekind::{apostol_bernoulli, mirimanoff, mirimanoff_via_apostol, voronoi_sum, VoronoiParams};
use sdlab::identities::{check_prop2, check_prop2_vm1, check_prop6, Mode};
use sdlab::polyring::{int, rat};

fn main() -> sdlab::Result<()> {
    let (a, b) = (3, 5);
    for (m, n) in [(1, 1), (2, 1), (2, 2), (3, 3)] {
        println!("V_{{{m},{n}}}({a},{b}) = {}", voronoi_sum(&VoronoiParams::new(a, b, m, n))?);
    }

    println!("\nMirimanoff M_4(-1, 2) = {}", mirimanoff(&int(-1), 2, 5));
    println!("via Apostol-Bernoulli  = {}", mirimanoff_via_apostol(&int(-1), 2, 5));
    println!("B_3(x, 2) at x = 1/2   = {}", apostol_bernoulli(3, &rat(1, 2), &int(2)));

    println!("\nroot-of-unity expansions (float residuals):");
    for r in check_prop2(a, b, 2, 2)? {
        println!("  {:<18} {}  residual {:.3e}  {}", r.id, r.params_string(), r.residual, r.verdict);
    }
    for r in check_prop2_vm1(7, 40, 3)? {
        println!("  {:<18} {}  residual {:.3e}  {}", r.id, r.params_string(), r.residual, r.verdict);
    }
    for mode in [Mode::Exact, Mode::Float] {
        let r = check_prop6(a, b, mode)?;
        println!("  {:<18} {}  {mode}  residual {:.3e}  {}", r.id, r.params_string(), r.residual, r.verdict);
    }
    Ok(())
}
