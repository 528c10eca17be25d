//! Projective transformations as 3x3 series matrices, with
//! singularity-aware classification.
//!
//! As with vectors, a matrix is rescaled to an appreciable representative
//! (division by the pure power `eps^v`, `v` the minimal entry valuation)
//! before anything magnitude-sensitive is read off. A matrix whose
//! representative has infinitesimal but nonzero determinant is "almost
//! singular": it is invertible in the field, yet collapses standard
//! structure, so it gets its own class instead of being lumped with the
//! regular ones.

use core::fmt;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::field::{FieldConfig, FieldMode, HyperNumber, NumberClass, Rational};
use crate::projective::{det3, HyperVector, Role, VectorClass};

/// Determinant class of the appreciable representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixClass {
    Singular,
    AlmostSingular,
    NonSingular,
}

impl MatrixClass {
    pub fn as_str(self) -> &'static str {
        match self {
            MatrixClass::Singular => "singular",
            MatrixClass::AlmostSingular => "almost_singular",
            MatrixClass::NonSingular => "non_singular",
        }
    }
}

impl fmt::Display for MatrixClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// 3x3 matrix of series entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperMatrix {
    rows: [[HyperNumber; 3]; 3],
}

impl HyperMatrix {
    pub fn new(rows: [[HyperNumber; 3]; 3]) -> Self {
        HyperMatrix { rows }
    }

    pub fn identity() -> Self {
        let o = HyperNumber::one;
        let z = HyperNumber::zero;
        Self::new([[o(), z(), z()], [z(), o(), z()], [z(), z(), o()]])
    }

    pub fn diagonal(a: HyperNumber, b: HyperNumber, c: HyperNumber) -> Self {
        let z = HyperNumber::zero;
        Self::new([[a, z(), z()], [z(), b, z()], [z(), z(), c]])
    }

    pub fn rows(&self) -> &[[HyperNumber; 3]; 3] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &HyperNumber {
        &self.rows[i][j]
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.rows.iter().flatten().all(HyperNumber::is_zero)
    }

    pub fn min_valuation(&self) -> Option<Rational> {
        self.rows
            .iter()
            .flatten()
            .filter_map(|e| e.leading_exponent())
            .min()
            .cloned()
    }

    /// Division by `eps^v` with `v` the minimal entry valuation; exact.
    pub fn appreciable_representative(&self) -> Result<Self, Error> {
        let v = self.min_valuation().ok_or(Error::ZeroMatrix)?;
        if v.is_zero() {
            return Ok(self.clone());
        }
        let one = num_complex::Complex::one();
        Ok(Self::new(self.rows.clone().map(|row| {
            row.map(|e| e.div_monomial(&v, &one))
        })))
    }

    /// Determinant of the entries as given (no rescaling).
    pub fn determinant(&self, cfg: FieldConfig) -> HyperNumber {
        // det M = det M^T, so rows can serve as columns.
        det3(&self.rows[0], &self.rows[1], &self.rows[2], cfg)
    }

    pub fn classify(&self, cfg: FieldConfig) -> Result<MatrixClass, Error> {
        let det = self.appreciable_representative()?.determinant(cfg);
        Ok(match det.classify() {
            NumberClass::Zero => MatrixClass::Singular,
            NumberClass::Infinitesimal => MatrixClass::AlmostSingular,
            NumberClass::Appreciable => MatrixClass::NonSingular,
            NumberClass::Unlimited => {
                unreachable!("determinant of limited entries is limited")
            }
        })
    }

    /// Transposed cofactor matrix of the entries as given. Satisfies
    /// `M * adj(M) = det(M) * I` exactly within truncation.
    pub fn adjugate(&self, cfg: FieldConfig) -> Result<Self, Error> {
        if self.is_zero_matrix() {
            return Err(Error::ZeroMatrix);
        }
        let m = &self.rows;
        let minor = |i: usize, j: usize| {
            let r: [usize; 2] = match i {
                0 => [1, 2],
                1 => [0, 2],
                _ => [0, 1],
            };
            let c: [usize; 2] = match j {
                0 => [1, 2],
                1 => [0, 2],
                _ => [0, 1],
            };
            m[r[0]][c[0]]
                .mul(&m[r[1]][c[1]], cfg)
                .sub(&m[r[0]][c[1]].mul(&m[r[1]][c[0]], cfg), cfg)
        };
        let cof = |i: usize, j: usize| {
            let v = minor(i, j);
            if (i + j) % 2 == 1 {
                v.neg()
            } else {
                v
            }
        };
        let mut rows: [[HyperNumber; 3]; 3] = Default::default();
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                // Transposition: entry (i, j) is the cofactor of (j, i).
                *e = cof(j, i);
            }
        }
        Ok(Self::new(rows))
    }

    /// Inverse via the adjugate of the appreciable representative. Exactly
    /// singular representatives are rejected; almost singular matrices are
    /// inverted (their inverses have unlimited entries).
    pub fn inverse(&self, cfg: FieldConfig) -> Result<Self, Error> {
        let rep = self.appreciable_representative()?;
        let det = rep.determinant(cfg);
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let inv_det = det.reciprocal(cfg)?;
        let adj = rep.adjugate(cfg)?;
        Ok(Self::new(
            adj.rows.map(|row| row.map(|e| e.mul(&inv_det, cfg))),
        ))
    }

    pub fn transpose(&self) -> Self {
        let mut rows: [[HyperNumber; 3]; 3] = Default::default();
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = self.rows[j][i].clone();
            }
        }
        Self::new(rows)
    }

    pub fn conjugate_transpose(&self) -> Self {
        let t = self.transpose();
        Self::new(t.rows.map(|row| row.map(|e| e.conjugate())))
    }

    pub fn mul_matrix(&self, rhs: &Self, cfg: FieldConfig) -> Self {
        let mut rows: [[HyperNumber; 3]; 3] = Default::default();
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                let mut acc = HyperNumber::zero();
                for k in 0..3 {
                    acc = acc.add(&self.rows[i][k].mul(&rhs.rows[k][j], cfg), cfg);
                }
                *e = acc;
            }
        }
        Self::new(rows)
    }

    fn apply(&self, v: &HyperVector, cfg: FieldConfig, role: Role) -> Result<HyperVector, Error> {
        if v.dim() != 3 {
            return Err(Error::DimensionMismatch);
        }
        let m = self.appreciable_representative()?;
        let rep = v.appreciable_representative()?;
        let mut entries = alloc::vec::Vec::with_capacity(3);
        for row in &m.rows {
            let mut acc = HyperNumber::zero();
            for (e, x) in row.iter().zip(rep.entries()) {
                acc = acc.add(&e.mul(x, cfg), cfg);
            }
            entries.push(acc);
        }
        Ok(HyperVector::new(entries, role))
    }

    /// Image `M_A * p_A` of a point; not rescaled afterwards.
    pub fn apply_to_point(&self, p: &HyperVector, cfg: FieldConfig) -> Result<HyperVector, Error> {
        self.apply(p, cfg, Role::Point)
    }

    /// Image of a line under the inverse conjugate-transpose, which is the
    /// map that preserves incidences alongside `apply_to_point`.
    pub fn apply_to_line(&self, l: &HyperVector, cfg: FieldConfig) -> Result<HyperVector, Error> {
        let inv = self.inverse(cfg)?;
        inv.conjugate_transpose().apply(l, cfg, Role::Line)
    }

    /// Membership in the epsilon kernel: the image of the appreciable
    /// representative is an infinitesimal vector, so the transformation
    /// collapses this direction below standard resolution.
    pub fn eps_kernel_member(&self, v: &HyperVector, cfg: FieldConfig) -> Result<bool, Error> {
        let image = self.apply(v, cfg, Role::Plain)?;
        Ok(image.classify() == VectorClass::Infinitesimal)
    }

    /// Frobenius norm square of the entries as given.
    pub fn frobenius_norm_squared(&self, cfg: FieldConfig) -> HyperNumber {
        let mut acc = HyperNumber::zero();
        for e in self.rows.iter().flatten() {
            acc = acc.add(&e.conjugate().mul(e, cfg), cfg);
        }
        acc
    }

    /// Real model only: after rescaling by the lower-right entry the matrix
    /// is an affine map whose linear part is a rotation-scaling up to
    /// infinitesimal deviation, with an infinitesimal projective defect in
    /// the bottom row allowed.
    pub fn is_almost_affine(&self, cfg: FieldConfig) -> Result<bool, Error> {
        if cfg.mode() != FieldMode::Real {
            return Err(Error::ComplexModeUnsupported);
        }
        let m = self.appreciable_representative()?;
        let corner = &m.rows[2][2];
        if corner.classify() != NumberClass::Appreciable {
            return Ok(false);
        }
        let inv = corner.reciprocal(cfg)?;
        let e = |i: usize, j: usize| m.rows[i][j].mul(&inv, cfg);
        if !e(2, 0).is_infinitesimal_or_zero() || !e(2, 1).is_infinitesimal_or_zero() {
            return Ok(false);
        }
        let c = e(0, 0);
        let s = e(0, 1);
        if !e(1, 0).add(&s, cfg).is_infinitesimal_or_zero() {
            return Ok(false);
        }
        if !e(1, 1).sub(&c, cfg).is_infinitesimal_or_zero() {
            return Ok(false);
        }
        let scale = c.mul(&c, cfg).add(&s.mul(&s, cfg), cfg);
        Ok(scale.classify() == NumberClass::Appreciable)
    }
}

impl fmt::Display for HyperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", e)?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
