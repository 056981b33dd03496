use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Pow, Zero};
use serde::Serialize;

use super::require_coprime;
use crate::polyring::{int, rat, root_of_unity, to_f64, Rational};
use crate::Result;

/// `pi(k) = a k mod b` on `[0, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZolotarevPerm {
    a: u64,
    b: u64,
    images: Vec<u64>,
}

impl ZolotarevPerm {
    pub fn images(&self) -> &[u64] {
        &self.images
    }

    pub fn apply(&self, k: u64) -> u64 {
        self.images[(k % self.b) as usize]
    }

    /// `floor(a k / b)`, the quotient paired with `pi(k)` in `a k = b floor + pi(k)`.
    pub fn quotient(&self, k: u64) -> u64 {
        self.a * k / self.b
    }

    /// `self` after `other`: `k -> self(other(k))`.
    pub fn compose(&self, other: &ZolotarevPerm) -> Vec<u64> {
        assert_eq!(self.b, other.b, "compose: moduli differ");
        other.images.iter().map(|&k| self.apply(k)).collect()
    }
}

pub fn zolotarev(a: u64, b: u64) -> Result<ZolotarevPerm> {
    require_coprime(a, b)?;
    Ok(ZolotarevPerm {
        a,
        b,
        images: (0..b).map(|k| a * k % b).collect(),
    })
}

/// `((x))`: `x - floor(x) - 1/2` off the integers, `0` on them.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        Rational::zero()
    } else {
        x - x.floor() - rat(1, 2)
    }
}

/// Exponents `m`, `n` and the pair `(a, b)` of `V_{m,n}(a,b) = sum_{k<b} k^m floor(ak/b)^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VoronoiParams {
    pub a: u64,
    pub b: u64,
    pub m: u32,
    pub n: u32,
}

impl VoronoiParams {
    pub fn new(a: u64, b: u64, m: u32, n: u32) -> Self {
        Self { a, b, m, n }
    }
}

pub fn voronoi_sum(p: &VoronoiParams) -> Result<BigInt> {
    require_coprime(p.a, p.b)?;
    Ok((1..p.b)
        .map(|k| BigInt::from(k).pow(p.m) * BigInt::from(p.a * k / p.b).pow(p.n))
        .sum())
}

/// Which displayed expression evaluates `s(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DedekindRoute {
    /// `sum ((k/b)) ((ak/b))`
    Sawtooth,
    /// `sum (k/b) ((ak/b))`
    Weighted,
    /// `-(1/b) sum 1/((w^{ak} - 1)(w^k - 1)) + (b - 1)/(4b)`
    RootProduct,
    /// `(1/4b) sum (1 + w^k)/(1 - w^k) (1 + w^{-ak})/(1 - w^{-ak})`
    Cayley,
    /// `(1/4b) sum cot(pi k/b) cot(pi ak/b)`
    Cotangent,
    /// `-(1/b) V_{1,1}(a,b) + (b-1)/4 (4a/3 - 2a/(3b) - 1)`
    Voronoi,
}

impl DedekindRoute {
    pub const ALL: [DedekindRoute; 6] = [
        DedekindRoute::Sawtooth,
        DedekindRoute::Weighted,
        DedekindRoute::RootProduct,
        DedekindRoute::Cayley,
        DedekindRoute::Cotangent,
        DedekindRoute::Voronoi,
    ];

    pub fn is_exact(self) -> bool {
        matches!(self, Self::Sawtooth | Self::Weighted | Self::Voronoi)
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Sawtooth => "sawtooth",
            Self::Weighted => "weighted",
            Self::RootProduct => "root_product",
            Self::Cayley => "cayley",
            Self::Cotangent => "cotangent",
            Self::Voronoi => "voronoi",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SumValue {
    Exact(Rational),
    Float(f64),
}

impl SumValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            SumValue::Exact(r) => to_f64(r),
            SumValue::Float(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            SumValue::Exact(r) => Some(r),
            SumValue::Float(_) => None,
        }
    }
}

/// The classical Dedekind sum `s(a, b)` along one of its equivalent routes.
pub fn dedekind_sum(a: u64, b: u64, route: DedekindRoute) -> Result<SumValue> {
    require_coprime(a, b)?;
    let bb = b as i64;
    let ks = 1..bb;
    let w = |e: i64| root_of_unity(b, e);
    let one = Complex64::new(1.0, 0.0);
    let a_i = a as i64;
    Ok(match route {
        DedekindRoute::Sawtooth => SumValue::Exact(
            ks.map(|k| sawtooth(&rat(k, bb)) * sawtooth(&rat(a_i * k, bb)))
                .sum(),
        ),
        DedekindRoute::Weighted => {
            SumValue::Exact(ks.map(|k| rat(k, bb) * sawtooth(&rat(a_i * k, bb))).sum())
        }
        DedekindRoute::Voronoi => {
            let v = voronoi_sum(&VoronoiParams::new(a, b, 1, 1))?;
            let v = Rational::from_integer(v);
            let a_r = int(a_i);
            let tail = rat(bb - 1, 4) * (a_r.clone() * rat(4, 3) - a_r * rat(2, 3 * bb) - int(1));
            SumValue::Exact(-v / int(bb) + tail)
        }
        DedekindRoute::RootProduct => {
            let s: Complex64 = ks.map(|k| one / ((w(a_i * k) - one) * (w(k) - one))).sum();
            SumValue::Float(-s.re / b as f64 + (b as f64 - 1.0) / (4.0 * b as f64))
        }
        DedekindRoute::Cayley => {
            let s: Complex64 = ks
                .map(|k| (one + w(k)) / (one - w(k)) * (one + w(-a_i * k)) / (one - w(-a_i * k)))
                .sum();
            SumValue::Float(s.re / (4.0 * b as f64))
        }
        DedekindRoute::Cotangent => {
            let cot = |num: i64| {
                // reduce the angle mod pi before the trig call
                let r = num.rem_euclid(bb) as f64;
                1.0 / (PI * r / b as f64).tan()
            };
            let s: f64 = ks.map(|k| cot(k) * cot(a_i * k)).sum();
            SumValue::Float(s / (4.0 * b as f64))
        }
    })
}

/// `-1/4 + (a/b + b/a + 1/(ab))/12`, the classical value of `s(a,b) + s(b,a)`.
pub fn reciprocity_rhs(a: u64, b: u64) -> Rational {
    let (a, b) = (a as i64, b as i64);
    rat(-1, 4) + (rat(a, b) + rat(b, a) + rat(1, a * b)) / int(12)
}

// integer floor helper shared with the polynomial constructions
pub(crate) fn floor_ratio(n: u64, d: u64) -> u64 {
    n / d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zolotarev_examples() {
        assert_eq!(zolotarev(3, 5).unwrap().images(), &[0, 3, 1, 4, 2]);
        assert_eq!(zolotarev(1, 6).unwrap().images(), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(zolotarev(2, 3).unwrap().images(), &[0, 2, 1]);
        assert!(zolotarev(2, 4).is_err());
        let z = zolotarev(3, 5).unwrap();
        for k in 0..5 {
            assert_eq!(3 * k, 5 * z.quotient(k) + z.apply(k));
        }
    }

    #[test]
    fn zolotarev_inverse_composes_to_identity() {
        // 3 * 2 = 6 = 1 mod 5
        let z = zolotarev(3, 5).unwrap();
        let zi = zolotarev(2, 5).unwrap();
        assert_eq!(z.compose(&zi), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn sawtooth_examples() {
        assert_eq!(sawtooth(&rat(1, 3)), rat(-1, 6));
        assert_eq!(sawtooth(&int(2)), int(0));
        assert_eq!(sawtooth(&rat(7, 5)), rat(-1, 10));
        assert_eq!(sawtooth(&rat(-7, 5)), rat(1, 10));
    }

    #[test]
    fn dedekind_examples() {
        let exact = |a, b, r| dedekind_sum(a, b, r).unwrap().exact().unwrap().clone();
        for r in [DedekindRoute::Sawtooth, DedekindRoute::Weighted, DedekindRoute::Voronoi] {
            assert_eq!(exact(1, 3, r), rat(1, 18));
            assert_eq!(exact(3, 5, r), int(0));
            assert_eq!(exact(1, 1, r), int(0));
            assert_eq!(exact(5, 12, r), rat(-1, 72));
        }
        for r in [DedekindRoute::RootProduct, DedekindRoute::Cayley, DedekindRoute::Cotangent] {
            let v = dedekind_sum(1, 3, r).unwrap().to_f64();
            assert!((v - 1.0 / 18.0).abs() < 1e-12, "{r:?}: {v}");
        }
        assert!(dedekind_sum(4, 6, DedekindRoute::Sawtooth).is_err());
    }

    #[test]
    fn voronoi_examples() {
        let v = |a, b, m, n| voronoi_sum(&VoronoiParams::new(a, b, m, n)).unwrap();
        assert_eq!(v(3, 5, 1, 1), BigInt::from(13));
        assert_eq!(v(1, 3, 1, 1), BigInt::from(0));
        assert_eq!(v(3, 5, 2, 1), BigInt::from(45));
        assert_eq!(v(3, 5, 2, 2), BigInt::from(77));
    }

    #[test]
    fn reciprocity_small() {
        let s = |a, b| dedekind_sum(a, b, DedekindRoute::Sawtooth).unwrap().exact().unwrap().clone();
        assert_eq!(s(3, 5) + s(5, 3), reciprocity_rhs(3, 5));
        assert_eq!(s(1, 7) + s(7, 1), reciprocity_rhs(1, 7));
    }
}
