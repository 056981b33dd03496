//! Dedekind-type sums and the polynomials built from `floor(ak/b)`.

mod bernoulli;
mod carlitz;
mod sums;

pub use bernoulli::{
    apostol_bernoulli, bernoulli_numbers, bernoulli_poly, mirimanoff, mirimanoff_via_apostol,
    Scalar,
};
pub use carlitz::{
    carlitz_floor_sum, carlitz_poly, carlitz_sawtooth_display, carlitz_sawtooth_poly, dj_poly,
    floor_poly, rt_poly, DjPoly, DjTerm, RtKind,
};
pub use sums::{
    dedekind_sum, reciprocity_rhs, sawtooth, voronoi_sum, zolotarev, DedekindRoute, SumValue,
    VoronoiParams, ZolotarevPerm,
};

use num_integer::Integer;

use crate::{Error, Result};

pub(crate) fn require_coprime(a: u64, b: u64) -> Result<()> {
    let g = a.gcd(&b);
    if g != 1 {
        return Err(Error::GcdNotOne {
            values: vec![a, b],
            gcd: g,
        });
    }
    Ok(())
}
