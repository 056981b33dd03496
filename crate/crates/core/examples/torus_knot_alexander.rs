//! Alexander polynomials of torus knots as semigroup polynomials of
//! `<a, b>`, three ways, and the gap set from `ab - ia - jb`.
//!
//!     cargo run --example torus_knot_alexander -- 3 5

use sdlab::polyring::int;
use sdlab::semigroup::{alexander_closed_form, torus_gaps_mordell};
use sdlab::{CoprimePair, LaurentPoly};

fn main() -> sdlab::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (a, b) = match args[..] {
        [a, b] => (a, b),
        _ => (3, 5),
    };
    let p = CoprimePair::new(a, b)?;
    let s = p.semigroup();

    let closed = alexander_closed_form(p)?;
    let from_gaps = s.semigroup_poly();
    let one_minus_q = LaurentPoly::from_terms([(0, int(1)), (1, int(-1))]);
    let n = a * b;
    let from_hilbert = &(&s.hilbert_trunc(n) * &one_minus_q) + &LaurentPoly::monomial(int(1), n as i64 + 1);

    println!("T({a},{b}) Alexander polynomial");
    println!("  closed form      {closed}");
    println!("  1 - (1-q) C(q)   {from_gaps}");
    println!("  (1-q) H(q)       {from_hilbert}");
    assert!(closed == from_gaps && closed == from_hilbert);

    let gaps = torus_gaps_mordell(p)?;
    println!("gaps via ab - ia - jb: {gaps:?}");
    assert_eq!(gaps, s.gaps());
    println!(
        "genus {} = (a-1)(b-1)/2 = {}; value at q = 1: {}",
        s.genus(),
        p.genus_closed_form(),
        closed.coefficient_sum()
    );

    println!("\nsmall torus knots:");
    for (a, b) in [(2, 3), (2, 5), (3, 4), (2, 7), (3, 7)] {
        let p = CoprimePair::new(a, b)?;
        println!("  T({a},{b})  g = {:>2}  {}", p.genus_closed_form(), alexander_closed_form(p)?);
    }
    Ok(())
}
