//! Rescaling generators into `SL(d, q)`: `M -> λM` with `λ^d = det(M)^{-1}`.

use crate::det_theory::{classify, det_tower_closed, CaseParams, Verdict};
use crate::error::{Error, Result};
use crate::field::{dth_root, FieldElement};
use crate::generators::{gen_tower, GeneratorId};
use crate::matrix::MatrixFq;

/// Canonical `λ` with `λ^d · det = 1`; `λ = 1` when `det = 1`.
pub fn sl_scalar(det: &FieldElement, d: u64) -> Result<FieldElement> {
    if det.is_zero() {
        return Err(Error::Singular);
    }
    if det.is_one() {
        return Ok(det.clone());
    }
    dth_root(&det.inv()?, d)
}

/// `λM` with `det(λM) = 1`, computing `det(M)` by elimination.
pub fn scale_to_sl(matrix: &MatrixFq, d: u64) -> Result<MatrixFq> {
    if !matrix.is_square() {
        return Err(Error::NotSquare {
            nrows: matrix.nrows(),
            ncols: matrix.ncols(),
        });
    }
    if matrix.nrows() as u64 != d {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix scaled with d = {d}",
            matrix.nrows(),
            matrix.ncols()
        )));
    }
    let det = matrix.det()?;
    if det.is_one() {
        return Ok(matrix.clone());
    }
    Ok(matrix.scale(&sl_scalar(&det, d)?))
}

/// The tower matrix of `id` scaled into `SL(d, q)` without computing a
/// `d x d` determinant: the classification decides whether scaling is needed
/// or possible, and the closed-form determinant supplies `λ`.
///
/// The scalar is the same canonical `λ` that [`scale_to_sl`] would pick, so
/// both paths return identical matrices.
pub fn scale_tower_to_sl(id: &GeneratorId) -> Result<MatrixFq> {
    let params = CaseParams::new(id.field(), id.r(), id.m())?;
    let class = classify(id.family(), &params)?;
    match class.verdict {
        Verdict::NoRoot => Err(Error::NoRoot { d: params.d() }),
        Verdict::DeterminantIsOne => gen_tower(id),
        Verdict::RootExists => {
            let det = det_tower_closed(id.family(), &params)?;
            let lambda = sl_scalar(&det, params.d())?;
            let matrix = gen_tower(id)?;
            if lambda.is_one() {
                Ok(matrix)
            } else {
                Ok(matrix.scale(&lambda))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use crate::generators::{gen_v, Family};

    #[test]
    fn scale_fourier_f7() {
        let f7 = make_field(7, 1).unwrap();
        let v = gen_v(&f7, 3).unwrap();
        assert_eq!(sl_scalar(&v.det().unwrap(), 3).unwrap(), f7.from_int(3));
        let scaled = scale_to_sl(&v, 3).unwrap();
        assert_eq!(scaled, v.scale(&f7.from_int(3)));
        assert!(scaled.det().unwrap().is_one());
    }

    #[test]
    fn identity_unchanged() {
        let f = make_field(13, 1).unwrap();
        let id = MatrixFq::identity(&f, 4);
        assert_eq!(scale_to_sl(&id, 4).unwrap(), id);
    }

    #[test]
    fn fourier_f5_has_no_square_root() {
        let f5 = make_field(5, 1).unwrap();
        let v = gen_v(&f5, 2).unwrap();
        assert_eq!(scale_to_sl(&v, 2).unwrap_err(), Error::NoRoot { d: 2 });
    }

    #[test]
    fn scale_errors() {
        let f = make_field(5, 1).unwrap();
        assert_eq!(scale_to_sl(&MatrixFq::zeros(&f, 2, 2), 2).unwrap_err(), Error::Singular);
        assert!(matches!(scale_to_sl(&MatrixFq::zeros(&f, 2, 3), 2), Err(Error::NotSquare { .. })));
        assert!(matches!(
            scale_to_sl(&MatrixFq::identity(&f, 2), 3),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn tower_fast_paths() {
        let f11 = make_field(11, 1).unwrap();
        let id = GeneratorId::new(&f11, Family::U, 5, 1, 1).unwrap();
        assert_eq!(scale_tower_to_sl(&id).unwrap(), gen_tower(&id).unwrap());

        let f17 = make_field(17, 1).unwrap();
        let id = GeneratorId::new(&f17, Family::W, 2, 2, 1).unwrap();
        let scaled = scale_tower_to_sl(&id).unwrap();
        assert!(scaled.det().unwrap().is_one());
        assert_eq!(scaled, scale_to_sl(&gen_tower(&id).unwrap(), 4).unwrap());

        let f5 = make_field(5, 1).unwrap();
        let id = GeneratorId::new(&f5, Family::V, 2, 1, 1).unwrap();
        assert_eq!(scale_tower_to_sl(&id).unwrap_err(), Error::NoRoot { d: 2 });
    }
}
