//! Polynomials assembled from the floors `floor(ak/b)` and the Zolotarev
//! permutation: Dedekind–Carlitz `c(q,t;a,b)`, the `d_j` kernels, and the
//! bivariate `R_{m,n}` / `T_{m,n}` families.

use num_complex::Complex64;
use num_traits::One;

use super::require_coprime;
use super::sums::floor_ratio;
use crate::polyring::{int, rat, root_of_unity, BiLaurent, LaurentPoly, Rational};
use crate::Result;

/// `c(q, t; a, b) = sum_{k=1}^{b-1} q^{floor(ak/b)} t^{k-1}`.
pub fn carlitz_poly(a: u64, b: u64) -> Result<BiLaurent> {
    require_coprime(a, b)?;
    Ok(BiLaurent::from_terms((1..b).map(|k| {
        ((floor_ratio(a * k, b) as i64, k as i64 - 1), Rational::one())
    })))
}

/// One term `w_b^{root_exp} q^{q_exp} t^{t_exp}` of a `d_j` kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DjTerm {
    pub root_exp: u64,
    pub q_exp: i64,
    pub t_exp: i64,
}

/// `d_j(q, t; a, b) = sum_{k=1}^{b-1} w_b^{-jak} t^{k-1} / q^{pi(k)}`, kept
/// exact by recording each coefficient as a power of `w_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DjPoly {
    b: u64,
    terms: Vec<DjTerm>,
}

impl DjPoly {
    pub fn modulus(&self) -> u64 {
        self.b
    }

    pub fn terms(&self) -> &[DjTerm] {
        &self.terms
    }

    /// Complex coefficient of the `t^{k-1}` term.
    pub fn coefficient(&self, term: &DjTerm) -> Complex64 {
        root_of_unity(self.b, term.root_exp as i64)
    }

    pub fn eval(&self, q: Complex64, t: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|x| self.coefficient(x) * q.powi(x.q_exp as i32) * t.powi(x.t_exp as i32))
            .sum()
    }

    /// The rational polynomial, when every coefficient is `1` (e.g. `j = 0 mod b`).
    pub fn to_bilaurent(&self) -> Option<BiLaurent> {
        if self.terms.iter().any(|x| x.root_exp != 0) {
            return None;
        }
        Some(BiLaurent::from_terms(
            self.terms.iter().map(|x| ((x.q_exp, x.t_exp), Rational::one())),
        ))
    }
}

pub fn dj_poly(j: i64, a: u64, b: u64) -> Result<DjPoly> {
    require_coprime(a, b)?;
    let bi = b as i128;
    let terms = (1..b)
        .map(|k| {
            let ak = (a * k) as i128;
            DjTerm {
                root_exp: (-(j as i128) * ak).rem_euclid(bi) as u64,
                q_exp: -((a * k % b) as i64),
                t_exp: k as i64 - 1,
            }
        })
        .collect();
    Ok(DjPoly { b, terms })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RtKind {
    R,
    T,
}

/// `R_{m,n} = sum_k ((q^{f_k} - 1)/(q - 1))^n ((t^k - 1)/(t - 1))^m` and
/// `T_{m,n} = sum_k ((q^{ak} - q^{pi(k)})/(q^b - 1))^n ((t^k - 1)/(t - 1))^m`
/// with `f_k = floor(ak/b)`. Every factor is a geometric sum, so both are
/// polynomials.
pub fn rt_poly(kind: RtKind, m: u32, n: u32, a: u64, b: u64) -> Result<BiLaurent> {
    require_coprime(a, b)?;
    let mut out = BiLaurent::zero();
    for k in 1..b {
        let f = floor_ratio(a * k, b);
        let q_factor = match kind {
            RtKind::R => BiLaurent::geometric_q(f, 1),
            // (q^{ak} - q^{pi(k)})/(q^b - 1) = q^{pi(k)} (1 + q^b + ... + q^{b(f-1)})
            RtKind::T => BiLaurent::geometric_q(f, b as i64).shift((a * k % b) as i64, 0),
        };
        let t_factor = BiLaurent::geometric_t(k);
        out = &out + &(&q_factor.pow(n) * &t_factor.pow(m));
    }
    Ok(out)
}

/// Both sides of `sum_{k=1}^{b-1} q^{floor(ak/b)} = (b-1) q^{a-1} - (q-1) sum_{k=1}^{a-1} floor(bk/a) q^{k-1}`.
pub fn carlitz_floor_sum(a: u64, b: u64) -> Result<(LaurentPoly, LaurentPoly)> {
    require_coprime(a, b)?;
    let lhs = LaurentPoly::from_exponents((1..b).map(|k| floor_ratio(a * k, b) as i64));
    let correction = LaurentPoly::from_terms(
        (1..a).map(|k| (k as i64 - 1, int(floor_ratio(b * k, a) as i64))),
    );
    let q_minus_one = LaurentPoly::from_terms([(1, int(1)), (0, int(-1))]);
    let rhs = &LaurentPoly::monomial(int(b as i64 - 1), a as i64 - 1) - &(&q_minus_one * &correction);
    Ok((lhs, rhs))
}

/// `sum_{k=0}^{b-1} floor(ak/b) q^k`.
pub fn floor_poly(a: u64, b: u64) -> Result<LaurentPoly> {
    require_coprime(a, b)?;
    Ok(LaurentPoly::from_terms(
        (0..b).map(|k| (k as i64, int(floor_ratio(a * k, b) as i64))),
    ))
}

/// `sum_{k=0}^{b-1} (ak/b - floor(ak/b) - 1/2) q^k`, term by term.
pub fn carlitz_sawtooth_poly(a: u64, b: u64) -> Result<LaurentPoly> {
    require_coprime(a, b)?;
    let (ai, bi) = (a as i64, b as i64);
    Ok(LaurentPoly::from_terms((0..bi).map(|k| {
        let x = rat(ai * k, bi);
        (k, x.clone() - x.floor() - rat(1, 2))
    })))
}

/// The closed expression
/// `(a/b) (b q^b (q-1) - q (q^b - 1))/(q-1)^2 - (q^b - 1)/(2(q-1)) - sum floor(ak/b) q^k`
/// as a single fraction `(numerator, denominator)` over `2b(q-1)^2`.
pub fn carlitz_sawtooth_display(a: u64, b: u64) -> Result<(LaurentPoly, LaurentPoly)> {
    let floors = floor_poly(a, b)?;
    let (ai, bi) = (a as i64, b as i64);
    let q = LaurentPoly::q();
    let one = LaurentPoly::one();
    let qm1 = &q - &one;
    let qb = LaurentPoly::monomial(int(1), bi);
    let qbm1 = &qb - &one;
    let weighted = &(&qb.scale(&int(bi)) * &qm1) - &(&q * &qbm1);
    let den = (&qm1 * &qm1).scale(&int(2 * bi));
    let num = &(&weighted.scale(&int(2 * ai)) - &(&qbm1 * &qm1).scale(&int(bi))) - &(&den * &floors);
    Ok((num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational_eq;

    fn bp(terms: &[(i64, i64, i64)]) -> BiLaurent {
        BiLaurent::from_terms(terms.iter().map(|&(a, b, c)| ((a, b), int(c))))
    }

    #[test]
    fn carlitz_examples() {
        assert_eq!(
            carlitz_poly(3, 5).unwrap(),
            bp(&[(0, 0, 1), (1, 1, 1), (1, 2, 1), (2, 3, 1)])
        );
        assert_eq!(carlitz_poly(1, 6).unwrap(), BiLaurent::geometric_t(5));
        assert_eq!(carlitz_poly(2, 3).unwrap(), bp(&[(0, 0, 1), (1, 1, 1)]));
        assert_eq!(carlitz_poly(7, 12).unwrap().eval_at_one(), int(11));
    }

    #[test]
    fn dj_examples() {
        let d0 = dj_poly(0, 3, 5).unwrap().to_bilaurent().unwrap();
        assert_eq!(d0, bp(&[(-3, 0, 1), (-1, 1, 1), (-4, 2, 1), (-2, 3, 1)]));
        let id = dj_poly(0, 1, 6).unwrap().to_bilaurent().unwrap();
        assert_eq!(id, BiLaurent::from_terms((1..6).map(|k| ((-k, k - 1), int(1)))));
        assert_eq!(dj_poly(5, 3, 5).unwrap(), dj_poly(0, 3, 5).unwrap());
        assert!(dj_poly(1, 3, 5).unwrap().to_bilaurent().is_none());
    }

    #[test]
    fn rt_examples() {
        assert_eq!(rt_poly(RtKind::R, 1, 1, 3, 5).unwrap().eval_at_one(), int(13));
        assert_eq!(rt_poly(RtKind::T, 1, 1, 3, 5).unwrap().eval_at_one(), int(13));
        let g = BiLaurent::geometric_t;
        let expected = &(&g(2) + &g(3)) + &(&BiLaurent::geometric_q(2, 1) * &g(4));
        assert_eq!(rt_poly(RtKind::R, 1, 1, 3, 5).unwrap(), expected);
    }

    #[test]
    fn floor_sum_examples() {
        let (l, r) = carlitz_floor_sum(3, 5).unwrap();
        let expect = LaurentPoly::from_terms([(0, int(1)), (1, int(2)), (2, int(1))]);
        assert_eq!((l.clone(), r), (expect.clone(), expect));
        let (l, r) = carlitz_floor_sum(1, 9).unwrap();
        assert_eq!((l, r), (LaurentPoly::from(8), LaurentPoly::from(8)));
        let (l, r) = carlitz_floor_sum(2, 3).unwrap();
        assert_eq!(l, r);
        assert_eq!(l, LaurentPoly::geometric(2));
    }

    #[test]
    fn sawtooth_poly_examples() {
        assert_eq!(carlitz_sawtooth_poly(1, 2).unwrap(), LaurentPoly::constant(rat(-1, 2)));
        assert_eq!(carlitz_sawtooth_poly(4, 1).unwrap(), LaurentPoly::constant(rat(-1, 2)));
        let coeffs = [rat(-1, 2), rat(1, 10), rat(-3, 10), rat(3, 10), rat(-1, 10)];
        let f = carlitz_sawtooth_poly(3, 5).unwrap();
        for (k, c) in coeffs.iter().enumerate() {
            assert_eq!(&f.coeff(k as i64), c);
        }
        let (num, den) = carlitz_sawtooth_display(3, 5).unwrap();
        assert!(rational_eq(&f, &LaurentPoly::one(), &num, &den));
    }
}
