//! Mirimanoff polynomials, Bernoulli and Apostol–Bernoulli polynomials over
//! any field-like scalar (exact rationals or complex floats).

use std::fmt::Debug;

use num_traits::{FromPrimitive, Num};

/// Numeric kinds the polynomial families are evaluated over.
pub trait Scalar: Clone + Num + FromPrimitive + Debug {}
impl<T: Clone + Num + FromPrimitive + Debug> Scalar for T {}

fn lift<T: Scalar>(n: u64) -> T {
    T::from_u64(n).expect("small integer lifts into every scalar")
}

fn binomial_row(n: usize) -> Vec<u64> {
    assert!(n <= 60, "binomial row {n} overflows u64");
    let mut row = vec![1u64; n + 1];
    for i in 1..n {
        row[i] = row[i - 1] * (n - i + 1) as u64 / i as u64;
    }
    row
}

fn powi<T: Scalar>(x: &T, e: usize) -> T {
    num_traits::pow(x.clone(), e)
}

/// `M_{b-1}(lambda, m) = sum_{k=0}^{b-1} k^m lambda^k`, with `0^0 = 1`.
pub fn mirimanoff<T: Scalar>(lambda: &T, m: u32, b: u64) -> T {
    let mut acc = T::zero();
    let mut lam_k = T::one();
    for k in 0..b {
        let km = if k == 0 && m == 0 {
            T::one()
        } else {
            powi(&lift::<T>(k), m as usize)
        };
        acc = acc + km * lam_k.clone();
        lam_k = lam_k * lambda.clone();
    }
    acc
}

/// Bernoulli numbers `B_0..=B_n` with `B_1 = -1/2`.
pub fn bernoulli_numbers<T: Scalar>(n: usize) -> Vec<T> {
    let mut out: Vec<T> = Vec::with_capacity(n + 1);
    out.push(T::one());
    for k in 1..=n {
        // sum_{i<=k} C(k+1, i) B_i = 0
        let row = binomial_row(k + 1);
        let s = (0..k).fold(T::zero(), |acc, i| acc + lift::<T>(row[i]) * out[i].clone());
        out.push(T::zero() - s / lift::<T>(row[k]));
    }
    out
}

/// Classical Bernoulli polynomial `B_k(x)` from `t e^{xt}/(e^t - 1)`.
pub fn bernoulli_poly<T: Scalar>(k: usize, x: &T) -> T {
    let nums = bernoulli_numbers::<T>(k);
    let row = binomial_row(k);
    (0..=k).fold(T::zero(), |acc, i| {
        acc + lift::<T>(row[i]) * nums[i].clone() * powi(x, k - i)
    })
}

/// Apostol–Bernoulli polynomial `B_k(x, lambda)` from
/// `t e^{xt}/(lambda e^t - 1)`.
///
/// For `lambda != 1` uses `(lambda - 1) B_n + lambda sum_{i<n} C(n,i) B_i = n x^{n-1}`
/// with `B_0 = 0`; `lambda == 1` is the classical family.
pub fn apostol_bernoulli<T: Scalar>(k: usize, x: &T, lambda: &T) -> T {
    if lambda == &T::one() {
        return bernoulli_poly(k, x);
    }
    let denom = lambda.clone() - T::one();
    let mut vals: Vec<T> = vec![T::zero()];
    for n in 1..=k {
        let row = binomial_row(n);
        let s = (0..n).fold(T::zero(), |acc, i| acc + lift::<T>(row[i]) * vals[i].clone());
        let rhs = lift::<T>(n as u64) * powi(x, n - 1) - lambda.clone() * s;
        vals.push(rhs / denom.clone());
    }
    vals.pop().unwrap()
}

/// `(lambda^b B_{m+1}(b, lambda) - B_{m+1}(0, lambda)) / (m + 1)`, the
/// Apostol–Bernoulli closed form of `M_{b-1}(lambda, m)`.
pub fn mirimanoff_via_apostol<T: Scalar>(lambda: &T, m: u32, b: u64) -> T {
    let k = m as usize + 1;
    let hi = apostol_bernoulli(k, &lift::<T>(b), lambda);
    let lo = apostol_bernoulli(k, &T::zero(), lambda);
    (powi(lambda, b as usize) * hi - lo) / lift::<T>(k as u64)
}
