//! Root-of-unity averages done exactly. `(1/n) sum_j w^{-jk} f(w^j q)` keeps
//! the exponents congruent to `k` mod `n`, so the class of the Apéry element
//! `a_k` can be read off the gap polynomial without complex arithmetic.
//!
//!     cargo run --example apery_multisection

use sdlab::NumericalSemigroup;

fn main() -> sdlab::Result<()> {
    let s = NumericalSemigroup::from_generators(&[4, 7, 9])?;
    let c = s.gap_poly();
    let m = 4;
    let ap = s.apery(m)?;
    println!("C(q) = {c}");
    println!("Ap_{m} = {:?}\n", ap.elements());

    for k in 0..m {
        let class = c.root_class_sum(m, k as i64);
        // the float average over the m-th roots, for comparison
        let float: f64 = (0..m as i64)
            .map(|j| (sdlab::polyring::root_of_unity(m, -j * k as i64) * c.root_eval(m, j)).re)
            .sum::<f64>()
            / m as f64;
        println!(
            "k = {k}: class part {:<16}  gaps in class = {}  avg over roots = {:.12}  floor(a_k/{m}) = {}",
            class.to_string(),
            class.coefficient_sum(),
            float,
            ap.elements()[k as usize] / m
        );
    }

    let parts: Vec<_> = (0..m as i64).map(|r| c.multisection(m, r)).collect();
    let total = parts.iter().fold(sdlab::LaurentPoly::zero(), |acc, p| &acc + p);
    assert_eq!(total, c);
    println!("\nsum of the {m} multisections gives C back");

    let z = c.root_eval(5, 2);
    println!("C(w_5^2) = {:.6} + {:.6}i", z.re, z.im);
    Ok(())
}
