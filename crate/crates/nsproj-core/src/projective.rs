//! Homogeneous coordinate vectors over the series field and the almost
//! relations between them.
//!
//! Entries of a projective element may sit at wildly different magnitudes;
//! every predicate therefore first rescales its inputs to an appreciable
//! representative. The normalizer is the pure power `eps^v` where `v` is the
//! minimal leading exponent over the entries (ties are irrelevant for a pure
//! power). Dividing by `eps^v` only shifts exponents, so normalization is
//! exact and never consumes truncation budget. `eps^v` lies in the magnitude
//! of the Euclidean norm, which is what the rescaling needs; a norm-based
//! variant is available for cross-checks.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::field::{ComplexRational, FieldConfig, FieldMode, HyperNumber, Rational};

/// Cosmetic role tag: points and lines share the same algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Point,
    Line,
    Plain,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Point => "point",
            Role::Line => "line",
            Role::Plain => "vector",
        }
    }
}

/// Classification of a vector by the classes of its entries.
///
/// `classify` returns the most specific class; `Limited` is the umbrella
/// for everything except `Unlimited` and is kept for completeness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VectorClass {
    Limited,
    Infinitesimal,
    Appreciable,
    Unlimited,
}

impl VectorClass {
    pub fn as_str(self) -> &'static str {
        match self {
            VectorClass::Limited => "limited",
            VectorClass::Infinitesimal => "infinitesimal",
            VectorClass::Appreciable => "appreciable",
            VectorClass::Unlimited => "unlimited",
        }
    }

    pub fn is_limited(self) -> bool {
        !matches!(self, VectorClass::Unlimited)
    }
}

impl fmt::Display for VectorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Vector of series entries with a role tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperVector {
    entries: Vec<HyperNumber>,
    role: Role,
}

impl HyperVector {
    pub fn new(entries: Vec<HyperNumber>, role: Role) -> Self {
        assert!(!entries.is_empty(), "a vector needs at least one entry");
        HyperVector { entries, role }
    }

    pub fn point(entries: [HyperNumber; 3]) -> Self {
        Self::new(entries.into(), Role::Point)
    }

    pub fn line(entries: [HyperNumber; 3]) -> Self {
        Self::new(entries.into(), Role::Line)
    }

    pub fn plain(entries: Vec<HyperNumber>) -> Self {
        Self::new(entries, Role::Plain)
    }

    pub fn entries(&self) -> &[HyperNumber] {
        &self.entries
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn with_role(mut self, role: Role) -> Self {
        self.role = role;
        self
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero_vector(&self) -> bool {
        self.entries.iter().all(HyperNumber::is_zero)
    }

    pub fn classify(&self) -> VectorClass {
        let mut all_infinitesimal = true;
        let mut any_appreciable = false;
        for e in &self.entries {
            let class = e.classify();
            if !class.is_limited() {
                return VectorClass::Unlimited;
            }
            if !class.is_infinitesimal_or_zero() {
                all_infinitesimal = false;
            }
            if class == crate::field::NumberClass::Appreciable {
                any_appreciable = true;
            }
        }
        if all_infinitesimal {
            VectorClass::Infinitesimal
        } else if any_appreciable {
            VectorClass::Appreciable
        } else {
            VectorClass::Limited
        }
    }

    /// Minimal leading exponent over the nonzero entries.
    pub fn min_valuation(&self) -> Option<Rational> {
        self.entries
            .iter()
            .filter_map(|e| e.leading_exponent())
            .min()
            .cloned()
    }

    /// Rescales so that every entry is limited and at least one is
    /// appreciable, dividing by `eps^v` with `v` the minimal entry
    /// valuation. Exact: only exponents shift.
    pub fn appreciable_representative(&self) -> Result<Self, Error> {
        let v = self.min_valuation().ok_or(Error::ZeroVector)?;
        if v.is_zero() {
            return Ok(self.clone());
        }
        let one = ComplexRational::one();
        Ok(HyperVector {
            entries: self
                .entries
                .iter()
                .map(|e| e.div_monomial(&v, &one))
                .collect(),
            role: self.role,
        })
    }

    /// Norm-based rescaling for cross-checks: divides by the square root of
    /// the norm square. Real model only, and the root must stay rational.
    pub fn appreciable_representative_euclidean(&self, cfg: FieldConfig) -> Result<Self, Error> {
        if self.is_zero_vector() {
            return Err(Error::ZeroVector);
        }
        let norm = self.norm_squared(cfg).nth_root(2, cfg)?;
        let inv = norm.reciprocal(cfg)?;
        Ok(HyperVector {
            entries: self.entries.iter().map(|e| e.mul(&inv, cfg)).collect(),
            role: self.role,
        })
    }

    /// Sum of `conj(entry) * entry`; real coefficients in both models.
    pub fn norm_squared(&self, cfg: FieldConfig) -> HyperNumber {
        let mut acc = HyperNumber::zero();
        for e in &self.entries {
            acc = acc.add(&e.conjugate().mul(e, cfg), cfg);
        }
        acc
    }

    /// Entry-wise shadow of the appreciable representative. Never all zero.
    pub fn projective_shadow(&self) -> Result<Vec<ComplexRational>, Error> {
        let rep = self.appreciable_representative()?;
        rep.entries.iter().map(|e| e.shadow()).collect()
    }

    /// Pairing on the raw entries, without rescaling: conjugate-linear in
    /// `self` in the complex model, plain bilinear in the real model.
    /// Representative-dependent; kept for diagnostics and comparisons.
    pub fn raw_scalar_product(&self, rhs: &Self, cfg: FieldConfig) -> Result<HyperNumber, Error> {
        if self.dim() != rhs.dim() {
            return Err(Error::DimensionMismatch);
        }
        let mut acc = HyperNumber::zero();
        for (a, b) in self.entries.iter().zip(&rhs.entries) {
            let left = match cfg.mode() {
                FieldMode::Complex => a.conjugate(),
                FieldMode::Real => a.clone(),
            };
            acc = acc.add(&left.mul(b, cfg), cfg);
        }
        Ok(acc)
    }

    /// Scalar product of the appreciable representatives. This is the
    /// pairing whose infinitesimality is representative-independent.
    pub fn scalar_product(&self, rhs: &Self, cfg: FieldConfig) -> Result<HyperNumber, Error> {
        let a = self.appreciable_representative()?;
        let b = rhs.appreciable_representative()?;
        a.raw_scalar_product(&b, cfg)
    }

    /// Cross product of the raw entries; three-dimensional only.
    pub fn raw_cross_product(&self, rhs: &Self, cfg: FieldConfig) -> Result<Self, Error> {
        if self.dim() != 3 || rhs.dim() != 3 {
            return Err(Error::DimensionMismatch);
        }
        let a = &self.entries;
        let b = &rhs.entries;
        let c = |i: usize, j: usize| a[i].mul(&b[j], cfg).sub(&a[j].mul(&b[i], cfg), cfg);
        Ok(HyperVector {
            entries: alloc::vec![c(1, 2), c(2, 0), c(0, 1)],
            role: Role::Plain,
        })
    }

    /// Cross product of the appreciable representatives. The result is not
    /// rescaled again; exactly dependent inputs give the zero vector.
    pub fn cross_product(&self, rhs: &Self, cfg: FieldConfig) -> Result<Self, Error> {
        let a = self.appreciable_representative()?;
        let b = rhs.appreciable_representative()?;
        a.raw_cross_product(&b, cfg)
    }

    /// Connecting line of two points.
    pub fn join(&self, rhs: &Self, cfg: FieldConfig) -> Result<Self, Error> {
        Ok(self.cross_product(rhs, cfg)?.with_role(Role::Line))
    }

    /// Intersection point of two lines.
    pub fn meet(&self, rhs: &Self, cfg: FieldConfig) -> Result<Self, Error> {
        Ok(self.cross_product(rhs, cfg)?.with_role(Role::Point))
    }

    /// Entry-wise shadow of the appreciable cross product. An all-zero
    /// result signals that the inputs are almost equivalent and the
    /// connecting element is not determined at standard precision.
    pub fn shadow_cross_product(
        &self,
        rhs: &Self,
        cfg: FieldConfig,
    ) -> Result<Vec<ComplexRational>, Error> {
        let cross = self.cross_product(rhs, cfg)?;
        cross.entries.iter().map(|e| e.shadow()).collect()
    }

    /// Same projective point at infinitesimal resolution: the appreciable
    /// cross product is an infinitesimal vector.
    pub fn almost_equivalent(&self, rhs: &Self, cfg: FieldConfig) -> Result<bool, Error> {
        let cross = self.cross_product(rhs, cfg)?;
        Ok(cross.classify() == VectorClass::Infinitesimal)
    }

    /// Alias for [`HyperVector::almost_equivalent`]: membership in the
    /// projective halo.
    pub fn in_projective_halo(&self, rhs: &Self, cfg: FieldConfig) -> Result<bool, Error> {
        self.almost_equivalent(rhs, cfg)
    }

    /// The last coordinate of the appreciable representative is zero or
    /// infinitesimal: the point sits at or infinitesimally close to the
    /// line at infinity.
    pub fn is_almost_far_point(&self) -> Result<bool, Error> {
        let rep = self.appreciable_representative()?;
        let last = rep.entries.last().expect("vectors are nonempty");
        Ok(last.is_infinitesimal_or_zero())
    }

    /// Exact proportionality over the field, checked by cross-multiplying
    /// entries without truncation.
    pub fn proportional_to(&self, rhs: &Self) -> bool {
        if self.dim() != rhs.dim() {
            return false;
        }
        if self.is_zero_vector() || rhs.is_zero_vector() {
            return false;
        }
        let n = self.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                let left = self.entries[i].mul_exact(&rhs.entries[j]);
                let right = self.entries[j].mul_exact(&rhs.entries[i]);
                if left != right {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for HyperVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, "]")
    }
}

/// Scalar product of the appreciable representatives is zero or
/// infinitesimal.
pub fn almost_incident(p: &HyperVector, l: &HyperVector, cfg: FieldConfig) -> Result<bool, Error> {
    Ok(p.scalar_product(l, cfg)?.is_infinitesimal_or_zero())
}

/// Two lines are almost parallel when their intersection is an almost far
/// point. Exactly dependent lines have no determined intersection.
pub fn almost_parallel(l: &HyperVector, m: &HyperVector, cfg: FieldConfig) -> Result<bool, Error> {
    let meet = l.meet(m, cfg)?;
    if meet.is_zero_vector() {
        return Err(Error::DegeneratePair);
    }
    meet.is_almost_far_point()
}

pub(crate) fn det3(
    x: &[HyperNumber],
    y: &[HyperNumber],
    z: &[HyperNumber],
    cfg: FieldConfig,
) -> HyperNumber {
    let minor = |a: &HyperNumber, b: &HyperNumber, c: &HyperNumber, d: &HyperNumber| {
        a.mul(d, cfg).sub(&b.mul(c, cfg), cfg)
    };
    let m0 = minor(&y[1], &z[1], &y[2], &z[2]);
    let m1 = minor(&y[0], &z[0], &y[2], &z[2]);
    let m2 = minor(&y[0], &z[0], &y[1], &z[1]);
    x[0].mul(&m0, cfg)
        .sub(&x[1].mul(&m1, cfg), cfg)
        .add(&x[2].mul(&m2, cfg), cfg)
}

fn check_triple_dim(x: &HyperVector, y: &HyperVector, z: &HyperVector) -> Result<(), Error> {
    if x.dim() == 3 && y.dim() == 3 && z.dim() == 3 {
        Ok(())
    } else {
        Err(Error::DimensionMismatch)
    }
}

/// Determinant of the three appreciable representatives as columns.
///
/// Infinitesimality of this value is necessary but not sufficient for
/// almost collinearity: when two of the points are almost equivalent the
/// determinant collapses regardless of the third point. Use
/// [`normalized_determinant`] for the faithful test.
pub fn appreciable_determinant(
    x: &HyperVector,
    y: &HyperVector,
    z: &HyperVector,
    cfg: FieldConfig,
) -> Result<HyperNumber, Error> {
    check_triple_dim(x, y, z)?;
    let xa = x.appreciable_representative()?;
    let ya = y.appreciable_representative()?;
    let za = z.appreciable_representative()?;
    Ok(det3(xa.entries(), ya.entries(), za.entries(), cfg))
}

/// Determinant of the appreciable representatives, rescaled by the leading
/// term of the minimally valued entry of `y_A x z_A` (ties broken by lowest
/// index). This compensates the collapse of the connecting line and makes
/// infinitesimality equivalent to almost collinearity.
pub fn normalized_determinant(
    x: &HyperVector,
    y: &HyperVector,
    z: &HyperVector,
    cfg: FieldConfig,
) -> Result<HyperNumber, Error> {
    check_triple_dim(x, y, z)?;
    let xa = x.appreciable_representative()?;
    let ya = y.appreciable_representative()?;
    let za = z.appreciable_representative()?;
    let cross = ya.raw_cross_product(&za, cfg)?;
    if cross.is_zero_vector() {
        return Err(Error::DegeneratePair);
    }
    let v = cross.min_valuation().expect("cross is nonzero");
    let lead = cross
        .entries()
        .iter()
        .find(|e| e.leading_exponent() == Some(&v))
        .expect("some entry attains the minimal valuation");
    let c = lead.leading_coefficient().expect("entry is nonzero").clone();
    let det = det3(xa.entries(), ya.entries(), za.entries(), cfg);
    Ok(det.div_monomial(&v, &c))
}

/// The normalized determinant is zero or infinitesimal.
pub fn almost_collinear(
    x: &HyperVector,
    y: &HyperVector,
    z: &HyperVector,
    cfg: FieldConfig,
) -> Result<bool, Error> {
    Ok(normalized_determinant(x, y, z, cfg)?.is_infinitesimal_or_zero())
}

/// Almost linear dependence for two vectors (almost equivalence) or three
/// vectors (almost collinearity).
pub fn almost_linearly_dependent(vs: &[HyperVector], cfg: FieldConfig) -> Result<bool, Error> {
    match vs {
        [a, b] => a.almost_equivalent(b, cfg),
        [a, b, c] => almost_collinear(a, b, c, cfg),
        _ => Err(Error::UnsupportedArity),
    }
}

/// Exact proportionality of standard homogeneous vectors.
pub fn projectively_equal(a: &[ComplexRational], b: &[ComplexRational]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let nonzero = |v: &[ComplexRational]| v.iter().any(|c| !c.re.is_zero() || !c.im.is_zero());
    if !nonzero(a) || !nonzero(b) {
        return false;
    }
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            if a[i].clone() * b[j].clone() != a[j].clone() * b[i].clone() {
                return false;
            }
        }
    }
    true
}
