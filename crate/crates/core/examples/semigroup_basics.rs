//! Invariants of a numerical semigroup: gaps, Frobenius number, genus,
//! Apéry sets, and the gap / Hilbert / semigroup polynomials.
//!
//!     cargo run --example semigroup_basics -- 4 7 9

use sdlab::NumericalSemigroup;

fn main() -> sdlab::Result<()> {
    let gens: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("generators are positive integers"))
        .collect();
    let gens = if gens.is_empty() { vec![4, 7, 9] } else { gens };

    let s = NumericalSemigroup::from_generators(&gens)?;
    let gens: Vec<String> = s.generators().iter().map(u64::to_string).collect();
    println!("S = <{}>", gens.join(","));
    println!("gaps       {:?}", s.gaps());
    println!("frobenius  {}", s.frobenius());
    println!("genus      {}", s.genus());
    println!("conductor  {}", s.conductor());
    println!("members    {:?}", s.members_up_to(20).collect::<Vec<_>>());

    let m = s.multiplicity();
    let ap = s.apery(m)?;
    println!("Ap_{m}(S)    {:?}  (floors {:?})", ap.elements(), ap.floors());
    println!("max(Ap) - {m} = {} = frobenius", ap.max() as i64 - m as i64);

    println!("C_S(q) = {}", s.gap_poly());
    println!("A_S(q) = {}", s.semigroup_poly());
    println!("H_S(q) = {} + ...", s.hilbert_trunc(12));
    assert_eq!(s.gap_poly_from_apery(m)?, s.gap_poly());
    println!("gap polynomial rebuilt from Ap_{m}: matches");

    match NumericalSemigroup::from_generators(&[4, 6]) {
        Err(e) => println!("<4,6>: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
