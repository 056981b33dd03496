//! `s(a, b)` by every route (sawtooth, weighted floors, root products,
//! Cayley, cotangent, Voronoi), plus reciprocity.
//!
//!     cargo run --example dedekind_sums -- 5 12

use sdlab::dedekind::{dedekind_sum, reciprocity_rhs, DedekindRoute, SumValue};

fn show(v: &SumValue) -> String {
    match v {
        SumValue::Exact(r) => r.to_string(),
        SumValue::Float(x) => format!("{x:.15}"),
    }
}

fn main() -> sdlab::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (a, b) = match args[..] {
        [a, b] => (a, b),
        _ => (5, 12),
    };
    println!("s({a},{b}):");
    for route in DedekindRoute::ALL {
        let kind = if route.is_exact() { "exact" } else { "float" };
        println!("  {:<12} {kind}  {}", route.name(), show(&dedekind_sum(a, b, route)?));
    }

    let ab = dedekind_sum(a, b, DedekindRoute::Sawtooth)?.exact().cloned().unwrap();
    let ba = dedekind_sum(b, a, DedekindRoute::Sawtooth)?.exact().cloned().unwrap();
    println!("\ns({a},{b}) + s({b},{a}) = {}", ab.clone() + ba.clone());
    println!("-1/4 + (a/b + b/a + 1/ab)/12 = {}", reciprocity_rhs(a, b));
    assert_eq!(ab + ba, reciprocity_rhs(a, b));

    println!("\ns(a,7) for a = 1..6:");
    for a in 1..7 {
        println!("  s({a},7) = {}", show(&dedekind_sum(a, 7, DedekindRoute::Weighted)?));
    }
    Ok(())
}
