//! Numerical semigroups generated by finitely many positive integers.

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::polyring::{int, LaurentPoly, Rational};
use crate::{Error, Result};

/// A numerical semigroup together with its membership table and gap data.
///
/// The membership table covers `[0, min_gen * max_gen + max_gen]`, which
/// contains the conductor; everything beyond the Frobenius number is a member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    membership: Vec<bool>,
    gaps: Vec<u64>,
    frobenius: i64,
}

impl NumericalSemigroup {
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        let g = generators.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::GcdNotOne {
                values: generators,
                gcd: g,
            });
        }
        let lo = generators[0];
        let hi = *generators.last().unwrap();
        let bound = (lo * hi + hi) as usize;
        let mut membership = vec![false; bound + 1];
        membership[0] = true;
        for x in 1..=bound {
            membership[x] = generators
                .iter()
                .any(|&g| g as usize <= x && membership[x - g as usize]);
        }
        let gaps: Vec<u64> = (0..=bound as u64)
            .filter(|&x| !membership[x as usize])
            .collect();
        let frobenius = gaps.last().map_or(-1, |&f| f as i64);
        Ok(Self {
            generators,
            membership,
            gaps,
            frobenius,
        })
    }

    /// The full semigroup `Z>=0 = <1>`.
    pub fn full() -> Self {
        Self::from_generators(&[1]).expect("<1> is a numerical semigroup")
    }

    /// Generators as given, sorted and deduplicated.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn contains(&self, x: u64) -> bool {
        self.membership.get(x as usize).copied().unwrap_or(true)
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Largest gap, or `-1` for the full semigroup.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn conductor(&self) -> u64 {
        (self.frobenius + 1) as u64
    }

    /// Smallest nonzero member.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Members in `[0, n]`.
    pub fn members_up_to(&self, n: u64) -> impl Iterator<Item = u64> + '_ {
        (0..=n).filter(move |&x| self.contains(x))
    }

    /// The Apéry set of a nonzero member `s`: the least member in each
    /// residue class mod `s`.
    pub fn apery(&self, s: u64) -> Result<AperySet> {
        if s == 0 || !self.contains(s) {
            return Err(Error::NotAMember { value: s });
        }
        let elements = (0..s)
            .map(|k| {
                let mut x = k;
                while !self.contains(x) {
                    x += s;
                }
                x
            })
            .collect();
        Ok(AperySet {
            modulus: s,
            elements,
        })
    }

    /// `C_S(q) = sum of q^g over the gaps`.
    pub fn gap_poly(&self) -> LaurentPoly {
        LaurentPoly::from_exponents(self.gaps.iter().map(|&g| g as i64))
    }

    /// `A_S(q) = 1 - (1 - q) C_S(q)`.
    pub fn semigroup_poly(&self) -> LaurentPoly {
        let one_minus_q = LaurentPoly::from_terms([(0, int(1)), (1, int(-1))]);
        &LaurentPoly::one() - &(&one_minus_q * &self.gap_poly())
    }

    /// `sum of q^k over members k <= n`.
    pub fn hilbert_trunc(&self, n: u64) -> LaurentPoly {
        LaurentPoly::from_exponents(self.members_up_to(n).map(|k| k as i64))
    }

    /// Rebuilds the gap polynomial column by column from `Ap_s(S)`: class `k`
    /// contributes `q^k + q^{k+s} + ... + q^{a_k - s}`.
    pub fn gap_poly_from_apery(&self, s: u64) -> Result<LaurentPoly> {
        let ap = self.apery(s)?;
        let mut out = LaurentPoly::zero();
        for (k, &a) in ap.elements.iter().enumerate().skip(1) {
            let column = LaurentPoly::geometric_step(a / s, s as i64).shift(k as i64);
            out = &out + &column;
        }
        Ok(out)
    }

    /// `S/d = { x >= 0 : d x in S }`.
    pub fn quotient(&self, d: u64) -> NumericalSemigroup {
        assert!(d >= 1, "quotient by zero");
        if d == 1 {
            return self.clone();
        }
        let member = |x: u64| self.contains(d * x);
        // Everything past frobenius/d is a member of S/d.
        let last_gap = (0..=self.conductor() / d).filter(|&x| !member(x)).max();
        let Some(last_gap) = last_gap else {
            return Self::full();
        };
        let m = (1..).find(|&x| member(x)).unwrap();
        let limit = last_gap + m + 1;
        let members: Vec<u64> = (1..=limit).filter(|&x| member(x)).collect();
        let minimal: Vec<u64> = members
            .iter()
            .copied()
            .filter(|&x| {
                !members
                    .iter()
                    .take_while(|&&y| 2 * y <= x)
                    .any(|&y| member(x - y))
            })
            .collect();
        Self::from_generators(&minimal).expect("quotient of a numerical semigroup is one")
    }

    /// `g(S/d)` by the root-of-unity average `(1/d) sum_{k<d} C_S(w_d^k)`,
    /// realized exactly as the coefficient sum of the class-0 multisection:
    /// the number of gaps divisible by `d`.
    pub fn genus_quotient_trig(&self, d: u64) -> Rational {
        assert!(d >= 1, "quotient by zero");
        self.gap_poly().root_class_sum(d, 0).coefficient_sum()
    }

    /// Floating evaluation of `(1/d)(g(S) + sum_{k=1}^{d-1} C_S(w_d^k))`.
    pub fn genus_quotient_trig_float(&self, d: u64) -> f64 {
        assert!(d >= 1, "quotient by zero");
        let c = self.gap_poly();
        let tail: f64 = (1..d as i64).map(|k| c.root_eval(d, k).re).sum();
        (self.genus() as f64 + tail) / d as f64
    }

    /// `g(S/d) = sum_{i=1}^{s-1} floor(a_{di} / (ds))` over `Ap_{ds}(S)`,
    /// for a nonzero `s` in `S/d`.
    pub fn genus_quotient_apery(&self, d: u64, s: u64) -> Result<u64> {
        assert!(d >= 1, "quotient by zero");
        if s == 0 || !self.contains(d * s) {
            return Err(Error::NotAMember { value: s });
        }
        let ds = d * s;
        let ap = self.apery(ds)?;
        Ok((1..s).map(|i| ap.elements[(d * i) as usize] / ds).sum())
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            generators: &'a [u64],
            frobenius: i64,
            genus: usize,
            gaps: &'a [u64],
        }
        Wire {
            generators: &self.generators,
            frobenius: self.frobenius,
            genus: self.genus(),
            gaps: &self.gaps,
        }
        .serialize(ser)
    }
}

/// `Ap_s(S)` indexed by residue: `elements[k]` is the least member `= k mod s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AperySet {
    modulus: u64,
    elements: Vec<u64>,
}

impl AperySet {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    /// `floor(a_k / s)` for each residue `k`.
    pub fn floors(&self) -> Vec<u64> {
        self.elements.iter().map(|a| a / self.modulus).collect()
    }

    pub fn max(&self) -> u64 {
        self.elements.iter().copied().max().unwrap_or(0)
    }
}

/// Coprime positive integers `(a, b)`: the semigroup `<a, b>` and the
/// `(a, b)` torus knot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoprimePair {
    a: u64,
    b: u64,
}

impl CoprimePair {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::ZeroGenerator);
        }
        let g = a.gcd(&b);
        if g != 1 {
            return Err(Error::GcdNotOne {
                values: vec![a, b],
                gcd: g,
            });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(&[self.a, self.b]).expect("coprime pair")
    }

    /// `(a - 1)(b - 1)/2`.
    pub fn genus_closed_form(&self) -> u64 {
        (self.a - 1) * (self.b - 1) / 2
    }
}

/// Gaps of `<a, b>` as `{ab - ia - jb : 0 < i < b, 0 < j < a, ia + jb < ab}`.
pub fn torus_gaps_mordell(p: CoprimePair) -> Result<Vec<u64>> {
    let (a, b) = (p.a, p.b);
    let mut out = Vec::new();
    for i in 1..b {
        for j in 1..a {
            if i * a + j * b < a * b {
                out.push(a * b - i * a - j * b);
            }
        }
    }
    out.sort_unstable();
    if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateGap(w[0]));
    }
    Ok(out)
}

/// `(1 - q^{ab})(1 - q) / ((1 - q^a)(1 - q^b))` by exact division.
pub fn alexander_closed_form(p: CoprimePair) -> Result<LaurentPoly> {
    let one_minus = |e: u64| LaurentPoly::from_terms([(0, int(1)), (e as i64, int(-1))]);
    let num = &one_minus(p.a * p.b) * &one_minus(1);
    let den = &one_minus(p.a) * &one_minus(p.b);
    num.div_exact(&den)
}

/// Number of gaps of `S` divisible by `d`, as an integer.
pub fn genus_quotient_trig_int(s: &NumericalSemigroup, d: u64) -> u64 {
    let g = s.genus_quotient_trig(d);
    assert!(g.is_integer(), "class-0 gap count must be an integer");
    g.to_integer().try_into().expect("nonnegative count")
}
