//! Genus of a quotient `S/d = {x : dx in S}` three ways: brute force, an
//! average of gap-polynomial values at `d`-th roots of unity, and floors of
//! an Apéry set.
//!
//!     cargo run --example quotient_genus

use sdlab::NumericalSemigroup;

fn main() -> sdlab::Result<()> {
    let s = NumericalSemigroup::from_generators(&[4, 7, 9])?;
    println!("S = <4,7,9>, genus {}", s.genus());
    println!(" d  S/d generators     brute  roots   floors over Ap_ds for valid s <= 20");
    for d in 1..=8 {
        let q = s.quotient(d);
        let trig = s.genus_quotient_trig(d);
        let floors: Vec<u64> = (1..=20)
            .filter(|&x| s.contains(d * x))
            .map(|x| s.genus_quotient_apery(d, x))
            .collect::<sdlab::Result<_>>()?;
        println!(
            "{d:>2}  {:<18} {:>5}  {:>5}   {:?}",
            format!("{:?}", q.generators()),
            q.genus(),
            trig.to_string(),
            floors
        );
    }
    println!("\nfloat root average for d = 3: {:.12}", s.genus_quotient_trig_float(3));
    Ok(())
}
