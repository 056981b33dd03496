//! Exact rational Laurent polynomials in one and two variables.
//!
//! Polynomials are stored sparsely as exponent -> coefficient maps with no
//! zero coefficients. Root-of-unity averages `(1/n) sum_j w^{-jk} f(w^j q)`
//! are realized exactly by [`LaurentPoly::multisection`]; complex evaluation
//! at roots of unity exists for cross-checking.

mod bilaurent;
mod laurent;
mod serial;

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

pub use bilaurent::{BiLaurent, Var};
pub use laurent::LaurentPoly;
pub use serial::{parse_rational, rational_to_string};

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Complex value in binary64 components.
pub type CxVal = Complex64;

/// Shorthand for the rational `n/d`.
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `e^{2 pi i j / n}`, with the exponent reduced mod `n` before any trig.
///
/// The four axis points are returned exactly.
pub fn root_of_unity(n: u64, j: i64) -> Complex64 {
    assert!(n >= 1, "root of unity of order 0");
    let n_i = n as i128;
    let r = (j as i128).rem_euclid(n_i);
    if r == 0 {
        return Complex64::new(1.0, 0.0);
    }
    if 2 * r == n_i {
        return Complex64::new(-1.0, 0.0);
    }
    if 4 * r == n_i {
        return Complex64::new(0.0, 1.0);
    }
    if 4 * r == 3 * n_i {
        return Complex64::new(0.0, -1.0);
    }
    let angle = 2.0 * PI * (r as f64) / (n as f64);
    let (s, c) = angle.sin_cos();
    Complex64::new(c, s)
}

/// Equality of the rational functions `fnum/fden` and `gnum/gden` by
/// cross-multiplication.
///
/// Panics if either denominator is the zero polynomial.
pub fn rational_eq(
    fnum: &LaurentPoly,
    fden: &LaurentPoly,
    gnum: &LaurentPoly,
    gden: &LaurentPoly,
) -> bool {
    assert!(
        !fden.is_zero() && !gden.is_zero(),
        "rational_eq: zero denominator"
    );
    fnum * gden == gnum * fden
}

/// The geometric factor `(v^m - 1)/(v - 1) = 1 + v + ... + v^{m-1}` in the
/// chosen variable of a bivariate polynomial. `m = 0` gives zero.
pub fn geom_quotient(m: u64, var: Var) -> BiLaurent {
    match var {
        Var::Q => BiLaurent::geometric_q(m, 1),
        Var::T => BiLaurent::geometric_t(m),
    }
}

/// Sum of absolute values of a coefficient iterator, as a float.
pub(crate) fn abs_sum<'a, I: IntoIterator<Item = &'a Rational>>(coeffs: I) -> f64 {
    coeffs
        .into_iter()
        .filter(|c| !c.is_zero())
        .map(|c| to_f64(c).abs())
        .fold(0.0, |acc, x| acc + x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_roots_are_exact() {
        assert_eq!(root_of_unity(4, 1), Complex64::new(0.0, 1.0));
        assert_eq!(root_of_unity(4, -1), Complex64::new(0.0, -1.0));
        assert_eq!(root_of_unity(6, 3), Complex64::new(-1.0, 0.0));
        assert_eq!(root_of_unity(7, 14), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn root_reduction_matches_direct_angle() {
        let w = root_of_unity(5, 7);
        let direct = Complex64::from_polar(1.0, 2.0 * PI * 2.0 / 5.0);
        assert!((w - direct).norm() < 1e-15);
    }

    #[test]
    fn rational_eq_examples() {
        let q = LaurentPoly::q();
        let one = LaurentPoly::one();
        // (1-q^3)/(1-q) vs 1+q+q^2
        let lhs_num = &one - &q.pow(3);
        let lhs_den = &one - &q;
        assert!(rational_eq(&lhs_num, &lhs_den, &LaurentPoly::geometric(3), &one));
        // q/1 vs q^2/q
        assert!(rational_eq(&q, &one, &q.pow(2), &q));
        // trefoil: (1-q^6)(1-q) / ((1-q^2)(1-q^3)) vs 1-q+q^2
        let num = &(&one - &q.pow(6)) * &(&one - &q);
        let den = &(&one - &q.pow(2)) * &(&one - &q.pow(3));
        let trefoil = LaurentPoly::from_terms([(0, int(1)), (1, int(-1)), (2, int(1))]);
        assert!(rational_eq(&num, &den, &trefoil, &one));
        assert!(!rational_eq(&num, &den, &q, &one));
    }

    #[test]
    fn geom_quotient_examples() {
        assert!(geom_quotient(0, Var::Q).is_zero());
        assert_eq!(geom_quotient(1, Var::T), BiLaurent::one());
        let g = geom_quotient(4, Var::T);
        assert_eq!(g.len(), 4);
        for e in 0..4 {
            assert_eq!(g.coeff(0, e), int(1));
        }
    }
}
