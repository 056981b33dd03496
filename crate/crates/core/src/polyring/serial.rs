//! JSON encoding of polynomials: `{"terms": [[exp, "num/den"], ...]}` in
//! ascending exponent order, `[[eq, et, "num/den"], ...]` for two variables.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{BiLaurent, LaurentPoly, Rational};
use crate::Error;

/// Renders as `num/den`, including `n/1` for integers.
pub fn rational_to_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

#[derive(Serialize, Deserialize)]
struct UniWire {
    terms: Vec<(i64, String)>,
}

#[derive(Serialize, Deserialize)]
struct BiWire {
    terms: Vec<(i64, i64, String)>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        UniWire {
            terms: self.terms().map(|(e, c)| (e, rational_to_string(c))).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let wire = UniWire::deserialize(de)?;
        let mut terms = Vec::with_capacity(wire.terms.len());
        for (e, c) in wire.terms {
            terms.push((e, parse_rational(&c).map_err(D::Error::custom)?));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl Serialize for BiLaurent {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        BiWire {
            terms: self
                .terms()
                .map(|((eq, et), c)| (eq, et, rational_to_string(c)))
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for BiLaurent {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let wire = BiWire::deserialize(de)?;
        let mut terms = Vec::with_capacity(wire.terms.len());
        for (eq, et, c) in wire.terms {
            terms.push(((eq, et), parse_rational(&c).map_err(D::Error::custom)?));
        }
        Ok(BiLaurent::from_terms(terms))
    }
}
