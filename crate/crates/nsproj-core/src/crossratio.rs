//! Cross-ratios of pairs in the plane through the origin model: elements of
//! the punctured two-dimensional space over the series field.
//!
//! The cross-ratio is computed on the inputs exactly as given. Scaling any
//! argument multiplies a numerator and a denominator bracket by the same
//! factor, so representative independence holds exactly and no rescaling
//! is wanted here, in contrast to the rank-one predicates.

use core::fmt;

use crate::error::Error;
use crate::field::{ComplexRational, FieldConfig, HyperNumber};

/// Element of the punctured plane `K^2 \ {0}` (projective line coordinates).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarPair(pub [HyperNumber; 2]);

impl PlanarPair {
    pub fn new(a: HyperNumber, b: HyperNumber) -> Self {
        PlanarPair([a, b])
    }

    pub fn entries(&self) -> &[HyperNumber; 2] {
        &self.0
    }

    pub fn is_zero_pair(&self) -> bool {
        self.0[0].is_zero() && self.0[1].is_zero()
    }
}

impl fmt::Display for PlanarPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.0[0], self.0[1])
    }
}

/// 2x2 bracket `A1*B2 - A2*B1`.
pub fn bracket2(a: &PlanarPair, b: &PlanarPair, cfg: FieldConfig) -> HyperNumber {
    a.0[0]
        .mul(&b.0[1], cfg)
        .sub(&a.0[1].mul(&b.0[0], cfg), cfg)
}

/// `(A, B; C, D) = [A,C][B,D] / ([A,D][B,C])` on the raw inputs.
pub fn cross_ratio(
    a: &PlanarPair,
    b: &PlanarPair,
    c: &PlanarPair,
    d: &PlanarPair,
    cfg: FieldConfig,
) -> Result<HyperNumber, Error> {
    let ad = bracket2(a, d, cfg);
    let bc = bracket2(b, c, cfg);
    if ad.is_zero() || bc.is_zero() {
        return Err(Error::DegenerateCrossRatio);
    }
    let num = bracket2(a, c, cfg).mul(&bracket2(b, d, cfg), cfg);
    let den = ad.mul(&bc, cfg);
    num.div(&den, cfg)
}

/// Shadow of the cross-ratio; defined when the value is limited, which the
/// bracket magnitudes decide.
pub fn cross_ratio_shadow(
    a: &PlanarPair,
    b: &PlanarPair,
    c: &PlanarPair,
    d: &PlanarPair,
    cfg: FieldConfig,
) -> Result<ComplexRational, Error> {
    cross_ratio(a, b, c, d, cfg)?.shadow()
}
