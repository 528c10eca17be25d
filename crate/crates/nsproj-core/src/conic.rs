//! Conics as symmetric 3x3 forms, the conic through five points, and the
//! near-cocircularity test through the circular points at infinity.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::{FieldConfig, FieldMode, HyperNumber, Rational};
use crate::projective::{det3, HyperVector};
use crate::transform::HyperMatrix;

/// Symmetric 3x3 coefficient matrix of a plane conic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicForm {
    matrix: HyperMatrix,
}

impl ConicForm {
    /// Wraps a coefficient matrix, insisting on exact symmetry.
    pub fn new(matrix: HyperMatrix) -> Result<Self, Error> {
        for i in 0..3 {
            for j in (i + 1)..3 {
                if matrix.entry(i, j) != matrix.entry(j, i) {
                    return Err(Error::AsymmetricConic);
                }
            }
        }
        if matrix.is_zero_matrix() {
            return Err(Error::ZeroMatrix);
        }
        Ok(ConicForm { matrix })
    }

    pub fn matrix(&self) -> &HyperMatrix {
        &self.matrix
    }

    /// The quadratic form `p^T C p` on appreciable representatives of both
    /// the point and the coefficient matrix. Plain bilinear evaluation, no
    /// conjugation: a complex point lies on the conic when its coordinates
    /// satisfy the polynomial equation, as for the circular points.
    pub fn value_at(&self, p: &HyperVector, cfg: FieldConfig) -> Result<HyperNumber, Error> {
        if p.dim() != 3 {
            return Err(Error::DimensionMismatch);
        }
        let pr = p.appreciable_representative()?;
        let m = self.matrix.appreciable_representative()?;
        let pe = pr.entries();
        let mut acc = HyperNumber::zero();
        for i in 0..3 {
            let mut row = HyperNumber::zero();
            for j in 0..3 {
                row = row.add(&m.entry(i, j).mul(&pe[j], cfg), cfg);
            }
            acc = acc.add(&pe[i].mul(&row, cfg), cfg);
        }
        Ok(acc)
    }

    /// Whether the point lies on the conic up to an infinitesimal residual.
    pub fn almost_contains(&self, p: &HyperVector, cfg: FieldConfig) -> Result<bool, Error> {
        Ok(self.value_at(p, cfg)?.is_infinitesimal_or_zero())
    }

    /// The conic through five points, by the six signed maximal minors of
    /// the 5x6 coefficient system built from appreciable representatives.
    /// No division happens, so the construction stays exact.
    pub fn through_five(points: &[HyperVector; 5], cfg: FieldConfig) -> Result<Self, Error> {
        let mut rows: Vec<Vec<HyperNumber>> = Vec::with_capacity(5);
        for p in points {
            if p.dim() != 3 {
                return Err(Error::DimensionMismatch);
            }
            let r = p.appreciable_representative()?;
            let e = r.entries();
            let (x, y, z) = (&e[0], &e[1], &e[2]);
            rows.push(vec![
                x.mul(x, cfg),
                y.mul(y, cfg),
                z.mul(z, cfg),
                x.mul(y, cfg),
                x.mul(z, cfg),
                y.mul(z, cfg),
            ]);
        }
        let mut coeffs: Vec<HyperNumber> = Vec::with_capacity(6);
        for drop in 0..6 {
            let minor: Vec<Vec<HyperNumber>> = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != drop)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let mut d = det_n(&minor, cfg);
            if drop % 2 == 1 {
                d = d.neg();
            }
            coeffs.push(d);
        }
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::DegenerateFivePoints);
        }
        let half = HyperNumber::from_rational(Rational::new(1.into(), 2.into()));
        let half_d = coeffs[3].mul(&half, cfg);
        let half_e = coeffs[4].mul(&half, cfg);
        let half_f = coeffs[5].mul(&half, cfg);
        let matrix = HyperMatrix::new([
            [coeffs[0].clone(), half_d.clone(), half_e.clone()],
            [half_d, coeffs[1].clone(), half_f.clone()],
            [half_e, half_f, coeffs[2].clone()],
        ]);
        ConicForm::new(matrix)
    }
}

/// Determinant of a small square matrix by cofactor expansion along the
/// first row. Division-free on purpose; the sizes in play never exceed 5.
fn det_n(rows: &[Vec<HyperNumber>], cfg: FieldConfig) -> HyperNumber {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = HyperNumber::zero();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<HyperNumber>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let mut term = rows[0][j].mul(&det_n(&minor, cfg), cfg);
        if j % 2 == 1 {
            term = term.neg();
        }
        acc = acc.add(&term, cfg);
    }
    acc
}

/// The circular points at infinity `I = (-i, 1, 0)` and `J = (i, 1, 0)`.
pub fn points_i_j(cfg: FieldConfig) -> Result<(HyperVector, HyperVector), Error> {
    if cfg.mode() != FieldMode::Complex {
        return Err(Error::RealModeUnsupported);
    }
    let i = HyperNumber::imaginary();
    let ci = HyperVector::point([i.neg(), HyperNumber::one(), HyperNumber::zero()]);
    let cj = HyperVector::point([i, HyperNumber::one(), HyperNumber::zero()]);
    Ok((ci, cj))
}

fn bracket3(
    x: &HyperVector,
    y: &HyperVector,
    z: &HyperVector,
    cfg: FieldConfig,
) -> Result<HyperNumber, Error> {
    let xr = x.appreciable_representative()?;
    let yr = y.appreciable_representative()?;
    let zr = z.appreciable_representative()?;
    Ok(det3(xr.entries(), yr.entries(), zr.entries(), cfg))
}

/// The cocircularity residual
/// `[CAI][DBI][DAJ][CBJ] - [CAJ][DBJ][DAI][CBI]`
/// over determinant brackets of appreciable representatives. The quadruple
/// is concyclic in the classical sense exactly when this vanishes; here it
/// is measured against the infinitesimals instead.
pub fn cocircularity_residual(
    a: &HyperVector,
    b: &HyperVector,
    c: &HyperVector,
    d: &HyperVector,
    cfg: FieldConfig,
) -> Result<HyperNumber, Error> {
    for p in [a, b, c, d] {
        if p.dim() != 3 {
            return Err(Error::DimensionMismatch);
        }
    }
    let (ci, cj) = points_i_j(cfg)?;
    let cai = bracket3(c, a, &ci, cfg)?;
    let dbi = bracket3(d, b, &ci, cfg)?;
    let daj = bracket3(d, a, &cj, cfg)?;
    let cbj = bracket3(c, b, &cj, cfg)?;
    let caj = bracket3(c, a, &cj, cfg)?;
    let dbj = bracket3(d, b, &cj, cfg)?;
    let dai = bracket3(d, a, &ci, cfg)?;
    let cbi = bracket3(c, b, &ci, cfg)?;
    let lhs = cai.mul(&dbi, cfg).mul(&daj.mul(&cbj, cfg), cfg);
    let rhs = caj.mul(&dbj, cfg).mul(&dai.mul(&cbi, cfg), cfg);
    Ok(lhs.sub(&rhs, cfg))
}

/// Whether four points lie on a common circle up to infinitesimal error.
pub fn is_almost_cocircular(
    a: &HyperVector,
    b: &HyperVector,
    c: &HyperVector,
    d: &HyperVector,
    cfg: FieldConfig,
) -> Result<bool, Error> {
    Ok(cocircularity_residual(a, b, c, d, cfg)?.is_infinitesimal_or_zero())
}
