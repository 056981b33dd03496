mod common;

use num_complex::Complex64;
use proptest::prelude::*;
use sdlab::dedekind::{dedekind_sum, zolotarev, DedekindRoute};
use sdlab::identities::{check_prop1_ab, check_prop3, check_prop5, check_prop6, check_prop7, Mode};
use sdlab::polyring::{int, root_of_unity};
use sdlab::{BiLaurent, CoprimePair, LaurentPoly, NumericalSemigroup, Rational};

fn poly(max_terms: usize, lo: i64, hi: i64) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((lo..hi, -9i64..=9, 1i64..=4), 0..max_terms).prop_map(|ts| {
        LaurentPoly::from_terms(ts.into_iter().map(|(e, n, d)| (e, Rational::new(n.into(), d.into()))))
    })
}

fn bipoly() -> impl Strategy<Value = BiLaurent> {
    prop::collection::vec((-4i64..6, -3i64..5, -9i64..=9), 0..8).prop_map(|ts| {
        BiLaurent::from_terms(ts.into_iter().map(|(a, b, c)| ((a, b), int(c))))
    })
}

fn coprime() -> impl Strategy<Value = (u64, u64)> {
    (2u64..=30).prop_flat_map(|b| (1..b, Just(b))).prop_filter("coprime", |&(a, b)| common::gcd(a, b) == 1)
}

fn semigroup_gens() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(2u64..=30, 2..=4).prop_filter("gcd 1", |g| g.iter().fold(0, |x, &y| common::gcd(x, y)) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(f in poly(8, -5, 10), g in poly(8, -5, 10), h in poly(8, -5, 10)) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn bivariate_ring_laws(f in bipoly(), g in bipoly(), h in bipoly()) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
    }

    #[test]
    fn multisection_reassembles(f in poly(60, -40, 200), n in 1u64..=20) {
        let mut sum = LaurentPoly::zero();
        for r in 0..n as i64 {
            sum = &sum + &f.multisection(n, r);
        }
        prop_assert_eq!(sum, f);
    }

    #[test]
    fn class_sum_matches_root_average(
        f in poly(200, 0, 400),
        n in 1u64..=20,
        k_seed in 0u64..1000,
        qs in prop::collection::vec(0.05f64..0.95, 5),
    ) {
        let k = (k_seed % n) as i64;
        let class = f.root_class_sum(n, k);
        for q in qs {
            let avg: Complex64 = (0..n as i64)
                .map(|j| root_of_unity(n, -j * k) * f.eval_complex(root_of_unity(n, j) * q))
                .sum::<Complex64>() / n as f64;
            let exact = class.eval_f64(q);
            prop_assert!((avg - exact).norm() <= 1e-8, "{avg} vs {exact}");
        }
    }

    #[test]
    fn root_eval_is_multiplicative(f in poly(100, -20, 80), g in poly(100, -20, 80), n in 1u64..=24, j in -30i64..30) {
        let lhs = (&f * &g).root_eval(n, j);
        let rhs = f.root_eval(n, j) * g.root_eval(n, j);
        prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + rhs.norm()), "{lhs} vs {rhs}");
    }

    #[test]
    fn json_round_trip(f in poly(20, -10, 30), g in bipoly()) {
        let back: LaurentPoly = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        prop_assert_eq!(back, f);
        let back: BiLaurent = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn zolotarev_inverse_composes_to_identity((a, b) in coprime()) {
        let inv = (1..=b).find(|x| a * x % b == 1 % b).unwrap();
        let p = zolotarev(a, b).unwrap();
        let q = zolotarev(inv, b).unwrap();
        let id: Vec<u64> = (0..b).collect();
        prop_assert_eq!(p.compose(&q), id.clone());
        prop_assert_eq!(q.compose(&p), id);
    }

    #[test]
    fn semigroup_matches_oracle(gens in semigroup_gens()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let gaps = common::gaps(&gens);
        prop_assert_eq!(s.gaps(), gaps.as_slice());
        prop_assert_eq!(s.genus(), gaps.len());
        prop_assert_eq!(s.frobenius(), gaps.last().map_or(-1, |&g| g as i64));
        for m in (1..=25).filter(|&m| s.contains(m)) {
            let ap = s.apery(m).unwrap();
            prop_assert_eq!(ap.elements().to_vec(), common::apery(&gens, m));
            prop_assert_eq!(ap.max() as i64 - m as i64, s.frobenius());
            prop_assert_eq!(s.gap_poly_from_apery(m).unwrap(), s.gap_poly());
        }
    }

    #[test]
    fn quotient_genus_agrees(gens in semigroup_gens(), d in 1u64..=8) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let oracle = common::quotient_genus(&gens, d);
        prop_assert_eq!(s.quotient(d).genus(), oracle);
        prop_assert_eq!(s.genus_quotient_trig(d), int(oracle as i64));
        for x in (1..=20).filter(|&x| s.contains(d * x)) {
            prop_assert_eq!(s.genus_quotient_apery(d, x).unwrap() as usize, oracle);
        }
    }

    #[test]
    fn dedekind_matches_oracle((a, b) in coprime()) {
        let (n, d) = common::dedekind(a, b);
        let want = Rational::new(n.into(), d.into());
        for route in DedekindRoute::ALL {
            let v = dedekind_sum(a, b, route).unwrap();
            match v.exact() {
                Some(x) => prop_assert_eq!(x, &want),
                None => prop_assert!((v.to_f64() - n as f64 / d as f64).abs() < 1e-9),
            }
        }
    }

    #[test]
    fn exact_and_float_verdicts_agree((a, b) in coprime(), k_seed in 0u64..100, d in 1u64..=8) {
        let k = k_seed % b;
        let both = |f: &dyn Fn(Mode) -> Vec<bool>| (f(Mode::Exact), f(Mode::Float));
        let (e, f) = both(&|m| check_prop1_ab(a, b, k, m).unwrap().iter().map(|r| r.passed()).collect());
        prop_assert_eq!(e, f);
        for check in [check_prop3, check_prop5, check_prop6] {
            prop_assert_eq!(check(a, b, Mode::Exact).unwrap().passed(), check(a, b, Mode::Float).unwrap().passed());
        }
        let s = CoprimePair::new(a, b).unwrap().semigroup();
        if let (Ok(e), Ok(f)) = (check_prop7(&s, d, 20, Mode::Exact), check_prop7(&s, d, 20, Mode::Float)) {
            prop_assert_eq!(e.passed(), f.passed());
        }
    }
}
