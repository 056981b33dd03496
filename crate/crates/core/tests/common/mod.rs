//! Brute-force oracles shared by the integration tests. None of these call
//! into the library; they work on plain integers and dense coefficient
//! vectors.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn coprime_pairs(a_min: u64, b_max: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for b in 2..=b_max {
        for a in a_min..b {
            if gcd(a, b) == 1 {
                out.push((a, b));
            }
        }
    }
    out
}

/// Safe search bound: the Frobenius number is below `(min - 1)(max - 1)`.
pub fn bound(gens: &[u64]) -> u64 {
    let lo = *gens.iter().min().unwrap();
    let hi = *gens.iter().max().unwrap();
    (lo.max(2) - 1) * (hi.max(2) - 1) + 2 * hi
}

/// Members up to `n`, by closing `{0}` under adding generators.
pub fn members(gens: &[u64], n: u64) -> BTreeSet<u64> {
    let mut set = BTreeSet::from([0u64]);
    let mut frontier = vec![0u64];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = x + g;
            if y <= n && set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

pub fn gaps(gens: &[u64]) -> Vec<u64> {
    let n = bound(gens);
    let m = members(gens, n);
    (0..=n).filter(|x| !m.contains(x)).collect()
}

/// `a_k`, the least member `= k mod s`, by scanning upward.
pub fn apery(gens: &[u64], s: u64) -> Vec<u64> {
    let n = bound(gens) + s;
    let m = members(gens, n);
    (0..s)
        .map(|k| (k..=n).step_by(s as usize).find(|x| m.contains(x)).unwrap())
        .collect()
}

/// `#{x >= 0 : dx not in S}`.
pub fn quotient_genus(gens: &[u64], d: u64) -> usize {
    let g = gaps(gens);
    g.iter().filter(|&&x| x % d == 0).count()
}

/// `s(a, b)` as a reduced fraction `(num, den)` with `den > 0`, from
/// `((x/b)) = (x mod b)/b - 1/2` off multiples of `b`.
pub fn dedekind(a: u64, b: u64) -> (i128, i128) {
    let (a, b) = (a as i128, b as i128);
    let mut num = 0i128;
    for k in 1..b {
        let ak = (a * k) % b;
        if ak == 0 {
            continue;
        }
        num += (2 * k - b) * (2 * ak - b);
    }
    reduce(num, 4 * b * b)
}

pub fn reduce(n: i128, d: i128) -> (i128, i128) {
    let g = gcd(n.unsigned_abs() as u64, d.unsigned_abs() as u64).max(1) as i128;
    let s = if d < 0 { -1 } else { 1 };
    (s * n / g, s * d / g)
}

pub fn voronoi(a: u64, b: u64, m: u32, n: u32) -> i128 {
    (1..b)
        .map(|k| (k as i128).pow(m) * ((a * k / b) as i128).pow(n))
        .sum()
}

/// Dense polynomial product.
pub fn mul(f: &[i64], g: &[i64]) -> Vec<i64> {
    let mut out = vec![0; f.len() + g.len() - 1];
    for (i, x) in f.iter().enumerate() {
        for (j, y) in g.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact quotient of dense polynomials (divisor with leading and constant
/// coefficient `+-1`), panicking on a remainder.
pub fn div(f: &[i64], g: &[i64]) -> Vec<i64> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    let lead = g[dg];
    assert!(lead.abs() == 1);
    let mut q = vec![0; r.len().saturating_sub(dg)];
    for i in (0..q.len()).rev() {
        let c = r[i + dg] * lead;
        q[i] = c;
        for (j, y) in g.iter().enumerate() {
            r[i + j] -= c * y;
        }
    }
    assert!(r.iter().all(|&x| x == 0), "remainder");
    q
}

/// `1 - q^e` as a dense vector.
pub fn one_minus(e: usize) -> Vec<i64> {
    let mut v = vec![0; e + 1];
    v[0] = 1;
    v[e] -= 1;
    v
}

/// `(1 - q^{ab})(1 - q) / ((1 - q^a)(1 - q^b))`, trimmed.
pub fn torus_alexander(a: u64, b: u64) -> Vec<i64> {
    let (a, b) = (a as usize, b as usize);
    let num = mul(&one_minus(a * b), &one_minus(1));
    let den = mul(&one_minus(a), &one_minus(b));
    trim(div(&num, &den))
}

pub fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// `1 - (1 - q) sum_{g in gaps} q^g`, dense.
pub fn alexander_from_gaps(gaps: &[u64]) -> Vec<i64> {
    let n = gaps.iter().max().map_or(0, |&g| g as usize + 2);
    let mut v = vec![0i64; n.max(1)];
    v[0] = 1;
    for &g in gaps {
        v[g as usize] -= 1;
        v[g as usize + 1] += 1;
    }
    trim(v)
}

/// 2–4 generators from `[2, 30]`, by a small LCG, for tests that want a
/// population independent of the library's sampler.
pub fn lcg_semigroups(seed: u64, count: usize) -> Vec<Vec<u64>> {
    let mut x = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut next = |m: u64| {
        x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (x >> 33) % m
    };
    let mut out = Vec::new();
    while out.len() < count {
        let n = 2 + next(3) as usize;
        let gens: Vec<u64> = (0..n).map(|_| 2 + next(29)).collect();
        if gens.iter().fold(0, |g, &y| gcd(g, y)) == 1 {
            out.push(gens);
        }
    }
    out
}
