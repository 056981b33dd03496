use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::laurent::{monomial_str, rational_pow, write_terms};
use super::{abs_sum, to_f64, LaurentPoly, Rational};
use crate::Error;

/// Variable selector for [`BiLaurent`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Q,
    T,
}

/// Bivariate Laurent polynomial in `(q, t)` with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiLaurent {
    terms: BTreeMap<(i64, i64), Rational>,
}

impl BiLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, q_exp: i64, t_exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(q_exp, t_exp, c);
        p
    }

    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((i64, i64), Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for ((eq, et), c) in terms {
            p.add_term(eq, et, c);
        }
        p
    }

    /// Embeds a univariate polynomial as a polynomial in `q`.
    pub fn from_q(f: &LaurentPoly) -> Self {
        Self::from_terms(f.terms().map(|(e, c)| ((e, 0), c.clone())))
    }

    /// Embeds a univariate polynomial as a polynomial in `t`.
    pub fn from_t(f: &LaurentPoly) -> Self {
        Self::from_terms(f.terms().map(|(e, c)| ((0, e), c.clone())))
    }

    /// `1 + q^step + ... + q^{(m-1) step}`.
    pub fn geometric_q(m: u64, step: i64) -> Self {
        Self::from_q(&LaurentPoly::geometric_step(m, step))
    }

    /// `1 + t + ... + t^{m-1}`.
    pub fn geometric_t(m: u64) -> Self {
        Self::from_t(&LaurentPoly::geometric(m))
    }

    fn add_term(&mut self, q_exp: i64, t_exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (q_exp, t_exp);
        let slot = self.terms.entry(key).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, q_exp: i64, t_exp: i64) -> Rational {
        self.terms
            .get(&(q_exp, t_exp))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms ordered by `(q exponent, t exponent)`.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &Rational)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    #[allow(clippy::len_without_is_empty)] // see is_zero
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_q_exp(&self) -> Option<i64> {
        self.terms.keys().map(|k| k.0).min()
    }

    pub fn min_t_exp(&self) -> Option<i64> {
        self.terms.keys().map(|k| k.1).min()
    }

    pub fn max_q_exp(&self) -> Option<i64> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn max_t_exp(&self) -> Option<i64> {
        self.terms.keys().map(|k| k.1).max()
    }

    /// Multiplies by `q^dq t^dt`.
    pub fn shift(&self, dq: i64, dt: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((a + dq, b + dt), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Substitutes `q -> q^b`.
    pub fn substitute_q_power(&self, b: i64) -> Self {
        assert!(b != 0, "substitute_q_power: q -> q^0 collapses the ring");
        Self {
            terms: self
                .terms
                .iter()
                .map(|((eq, et), c)| ((eq * b, *et), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `q = t = 1`.
    pub fn eval_at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Exact value at rational `(q, t)`; `None` if a zero meets a negative
    /// exponent.
    pub fn eval(&self, q: &Rational, t: &Rational) -> Option<Rational> {
        let mut acc = Rational::zero();
        for ((eq, et), c) in &self.terms {
            if (q.is_zero() && *eq < 0) || (t.is_zero() && *et < 0) {
                return None;
            }
            acc += c * rational_pow(q, *eq) * rational_pow(t, *et);
        }
        Some(acc)
    }

    pub fn eval_complex(&self, q: Complex64, t: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|((eq, et), c)| q.powi(*eq as i32) * t.powi(*et as i32) * to_f64(c))
            .sum()
    }

    pub fn eval_f64(&self, q: f64, t: f64) -> f64 {
        self.terms
            .iter()
            .map(|((eq, et), c)| to_f64(c) * q.powi(*eq as i32) * t.powi(*et as i32))
            .sum()
    }

    /// Specializes `t = 1`, leaving a polynomial in `q`.
    pub fn at_t_one(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|((eq, _), c)| (*eq, c.clone())))
    }

    /// Specializes `q = 1`, leaving a polynomial in `t`.
    pub fn at_q_one(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|((_, et), c)| (*et, c.clone())))
    }

    /// Exact division by `(v - 1)` for the chosen variable.
    pub fn div_by_var_minus_one(&self, var: Var) -> Result<Self, Error> {
        let mut slices: BTreeMap<i64, Vec<(i64, Rational)>> = BTreeMap::new();
        for ((eq, et), c) in &self.terms {
            let (outer, inner) = match var {
                Var::Q => (*et, *eq),
                Var::T => (*eq, *et),
            };
            slices.entry(outer).or_default().push((inner, c.clone()));
        }
        let divisor = LaurentPoly::from_terms([(1, Rational::one()), (0, -Rational::one())]);
        let mut out = Self::zero();
        for (outer, slice) in slices {
            let quot = LaurentPoly::from_terms(slice).div_exact(&divisor)?;
            for (inner, c) in quot.into_terms() {
                match var {
                    Var::Q => out.add_term(inner, outer, c),
                    Var::T => out.add_term(outer, inner, c),
                }
            }
        }
        Ok(out)
    }

    pub fn abs_coeff_sum(&self) -> f64 {
        abs_sum(self.terms.values())
    }

    pub fn l1_distance(&self, other: &Self) -> f64 {
        (self - other).abs_coeff_sum()
    }
}

impl<'a> Add<&'a BiLaurent> for &'a BiLaurent {
    type Output = BiLaurent;
    fn add(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = self.clone();
        for ((eq, et), c) in &rhs.terms {
            out.add_term(*eq, *et, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BiLaurent> for &'a BiLaurent {
    type Output = BiLaurent;
    fn sub(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = self.clone();
        for ((eq, et), c) in &rhs.terms {
            out.add_term(*eq, *et, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a BiLaurent> for &'a BiLaurent {
    type Output = BiLaurent;
    fn mul(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = BiLaurent::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiLaurent {
    type Output = BiLaurent;
    fn neg(self) -> BiLaurent {
        BiLaurent {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<BiLaurent> for BiLaurent {
            type Output = BiLaurent;
            fn $m(self, rhs: BiLaurent) -> BiLaurent {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms.iter().map(|((eq, et), c)| {
                let mono = [monomial_str("q", *eq), monomial_str("t", *et)]
                    .into_iter()
                    .filter(|s| !s.is_empty())
                    .collect::<Vec<_>>()
                    .join(" ");
                (c, mono)
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::int;

    fn bp(terms: &[(i64, i64, i64)]) -> BiLaurent {
        BiLaurent::from_terms(terms.iter().map(|&(a, b, c)| ((a, b), int(c))))
    }

    #[test]
    fn arithmetic() {
        let f = bp(&[(1, 0, 1), (0, 1, 1)]);
        let sq = &f * &f;
        assert_eq!(sq, bp(&[(2, 0, 1), (1, 1, 2), (0, 2, 1)]));
        assert!((&sq - &sq).is_zero());
        assert_eq!(sq.eval_at_one(), int(4));
    }

    #[test]
    fn divide_by_linear_factor() {
        let qm1 = bp(&[(1, 0, 1), (0, 0, -1)]);
        let tm1 = bp(&[(0, 1, 1), (0, 0, -1)]);
        let g = bp(&[(2, 3, 5), (-1, 0, 2), (0, -2, 1)]);
        let prod = &(&g * &qm1) * &tm1;
        let back = prod
            .div_by_var_minus_one(Var::Q)
            .and_then(|x| x.div_by_var_minus_one(Var::T))
            .unwrap();
        assert_eq!(back, g);
        assert_eq!(
            BiLaurent::t().div_by_var_minus_one(Var::T),
            Err(Error::InexactDivision)
        );
    }

    #[test]
    fn substitution_and_specialization() {
        let f = bp(&[(1, 2, 3), (0, 1, 1)]);
        assert_eq!(f.substitute_q_power(5), bp(&[(5, 2, 3), (0, 1, 1)]));
        assert_eq!(f.at_t_one(), LaurentPoly::from_terms([(1, int(3)), (0, int(1))]));
        assert_eq!(f.at_q_one(), LaurentPoly::from_terms([(2, int(3)), (1, int(1))]));
    }

    #[test]
    fn display() {
        assert_eq!(bp(&[(0, 0, 1), (1, 1, 1), (2, 3, -2)]).to_string(), "1 + q t - 2 q^2 t^3");
    }
}
