//! Dedekind–Carlitz polynomials `c(q,t;a,b)`, the Zolotarev permutation,
//! the `R_{1,1}` / `T_{1,1}` polynomials and their closed expressions.
//!
//!     cargo run --example dedekind_carlitz -- 3 5

use sdlab::dedekind::{carlitz_floor_sum, carlitz_poly, floor_poly, rt_poly, zolotarev, RtKind};
use sdlab::identities::{check_prop3, check_prop4, r11_display, Mode};

fn main() -> sdlab::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (a, b) = match args[..] {
        [a, b] => (a, b),
        _ => (3, 5),
    };
    println!("pi: k -> {a}k mod {b} = {:?}", zolotarev(a, b)?.images());
    println!("c(q,t)      = {}", carlitz_poly(a, b)?);
    println!("c(1,1)      = {}", carlitz_poly(a, b)?.eval_at_one());
    println!("sum floor(ak/b) q^k = {}", floor_poly(a, b)?);
    let (l, r) = carlitz_floor_sum(a, b)?;
    println!("sum q^floor(ak/b)   = {l}  (closed: {r})");

    let r11 = rt_poly(RtKind::R, 1, 1, a, b)?;
    println!("\nR_11 = {r11}");
    println!("closed R_11 = {}", r11_display(a, b)?);
    println!("T_11 = {}", rt_poly(RtKind::T, 1, 1, a, b)?);
    println!("R_11(1,1) = T_11(1,1) = {}", r11.eval_at_one());

    for mode in [Mode::Exact, Mode::Float] {
        let r = check_prop3(a, b, mode)?;
        println!("\nc(q^b, t) via d_j kernels ({mode}): {} (residual {:.2e})", r.verdict, r.residual);
    }
    for r in check_prop4(a, b)? {
        println!("{}: {}", r.id, r.verdict);
        if !r.detail.is_empty() {
            println!("  {}", r.detail);
        }
    }
    Ok(())
}
