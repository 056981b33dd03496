use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::{abs_sum, int, root_of_unity, to_f64, Rational};
use crate::Error;

/// Univariate Laurent polynomial in `q` with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Repeated
    /// exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// `sum q^e` over the given exponents (repeats accumulate).
    pub fn from_exponents<I: IntoIterator<Item = i64>>(exps: I) -> Self {
        Self::from_terms(exps.into_iter().map(|e| (e, Rational::one())))
    }

    /// `1 + q + ... + q^{m-1}`.
    pub fn geometric(m: u64) -> Self {
        Self::geometric_step(m, 1)
    }

    /// `1 + q^step + ... + q^{(m-1) step}`, i.e. `(q^{m step} - 1)/(q^step - 1)`.
    pub fn geometric_step(m: u64, step: i64) -> Self {
        Self::from_exponents((0..m as i64).map(|i| i * step))
    }

    pub(crate) fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    #[allow(clippy::len_without_is_empty)] // see is_zero
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Substitutes `q -> q^b`.
    pub fn substitute_power(&self, b: i64) -> Self {
        assert!(b != 0, "substitute_power: q -> q^0 collapses the ring");
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * b, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Terms whose exponent is congruent to `r` mod `n`, exponents unchanged.
    pub fn multisection(&self, n: u64, r: i64) -> Self {
        assert!(n >= 1, "multisection modulus must be positive");
        let n = n as i64;
        let r = r.rem_euclid(n);
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.rem_euclid(n) == r)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// `(1/n) sum_{j<n} w^{-jk} f(w^j q)` with `w = e^{2 pi i/n}`, computed
    /// exactly: the average keeps precisely the exponents `= k mod n`.
    pub fn root_class_sum(&self, n: u64, k: i64) -> Self {
        self.multisection(n, k)
    }

    /// `f(w^j)` for `w = e^{2 pi i/n}`.
    pub fn root_eval(&self, n: u64, j: i64) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| root_of_unity(n, j.wrapping_mul(*e)) * to_f64(c))
            .sum()
    }

    /// `f(w^j x)` for `w = e^{2 pi i/n}` and real `x != 0`. The angle is
    /// reduced exactly, so only the modulus `x^e` is a floating power.
    pub fn eval_root_scaled(&self, n: u64, j: i64, x: f64) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| root_of_unity(n, j.wrapping_mul(*e)) * (to_f64(c) * x.powi(*e as i32)))
            .sum()
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| z.powi(*e as i32) * to_f64(c))
            .sum()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| to_f64(c) * x.powi(*e as i32))
            .sum()
    }

    /// Exact value at a rational point; `None` when `x = 0` meets a negative
    /// exponent.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            if x.is_zero() && *e < 0 {
                return None;
            }
            acc += c * rational_pow(x, *e);
        }
        Some(acc)
    }

    /// `f(1)`.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    pub fn abs_coeff_sum(&self) -> f64 {
        abs_sum(self.terms.values())
    }

    /// Exact quotient `self / divisor`; fails unless the division leaves no
    /// remainder in the Laurent ring.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, Error> {
        let (Some(d_lo), Some(d_hi)) = (divisor.min_exp(), divisor.max_exp()) else {
            return Err(Error::InexactDivision);
        };
        let Some(s_lo) = self.min_exp() else {
            return Ok(Self::zero());
        };
        // Normalize both to ordinary polynomials with nonzero constant term
        // on the divisor side.
        let d = divisor.shift(-d_lo);
        let d_deg = d_hi - d_lo;
        let lead = d.coeff(d_deg);
        let mut rem = self.shift(-s_lo);
        let mut quot = Self::zero();
        while let Some(top) = rem.max_exp() {
            if top < d_deg {
                return Err(Error::InexactDivision);
            }
            let c = rem.coeff(top) / &lead;
            let step = Self::monomial(c, top - d_deg);
            rem = &rem - &(&step * &d);
            quot = &quot + &step;
        }
        Ok(quot.shift(s_lo - d_lo))
    }

    /// `sum |coefficient|` of `self - other`, as a float. Zero iff equal.
    pub fn l1_distance(&self, other: &Self) -> f64 {
        (self - other).abs_coeff_sum()
    }

    pub(crate) fn into_terms(self) -> BTreeMap<i64, Rational> {
        self.terms
    }
}

pub(crate) fn rational_pow(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(int(c))
    }
}

/// Writes `c * var^e` terms joined by signs, e.g. `1 - q + 3/2 q^4`.
pub(crate) fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (&'a Rational, String)>,
{
    let mut first = true;
    for (c, mono) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        match (mag.is_one(), mono.is_empty()) {
            (true, true) => write!(f, "1")?,
            (true, false) => write!(f, "{mono}")?,
            (false, true) => write!(f, "{mag}")?,
            (false, false) => write!(f, "{mag} {mono}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

pub(crate) fn monomial_str(var: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(e, c)| (c, monomial_str("q", *e))))
    }
}
