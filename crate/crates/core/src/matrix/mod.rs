//! Dense matrices over a [`Field`].
//!
//! Indices are 0-based and storage is row-major. The Kronecker product uses
//! the block convention `(A ⊗ B)[i1·nB + i2, j1·mB + j2] = A[i1,j1]·B[i2,j2]`.

mod io;
mod permutation;

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

pub use io::MatrixJson;
pub use permutation::{permutation_matrix, Permutation};

#[derive(Clone, PartialEq, Eq)]
pub struct MatrixFq {
    field: Field,
    nrows: usize,
    ncols: usize,
    entries: Vec<FieldElement>,
}

impl MatrixFq {
    pub fn new(field: &Field, nrows: usize, ncols: usize, entries: Vec<FieldElement>) -> Result<Self> {
        if nrows == 0 || ncols == 0 {
            return Err(Error::DimensionMismatch("matrices must be non-empty".into()));
        }
        if entries.len() != nrows * ncols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {nrows}x{ncols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|x| x.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Self {
            field: field.clone(),
            nrows,
            ncols,
            entries,
        })
    }

    pub fn from_fn(
        field: &Field,
        nrows: usize,
        ncols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Self {
        assert!(nrows > 0 && ncols > 0, "matrices must be non-empty");
        let entries = (0..nrows * ncols).map(|k| f(k / ncols, k % ncols)).collect();
        Self {
            field: field.clone(),
            nrows,
            ncols,
            entries,
        }
    }

    pub fn zeros(field: &Field, nrows: usize, ncols: usize) -> Self {
        let zero = field.zero();
        Self::from_fn(field, nrows, ncols, |_, _| zero.clone())
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        Self::diagonal(field, &vec![field.one(); n])
    }

    pub fn diagonal(field: &Field, diag: &[FieldElement]) -> Self {
        let zero = field.zero();
        Self::from_fn(field, diag.len(), diag.len(), |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                zero.clone()
            }
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        assert!(i < self.nrows && j < self.ncols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.ncols + j]
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.ncols, self.nrows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, lambda: &FieldElement) -> Self {
        assert!(lambda.field() == &self.field, "field mismatch in scale");
        Self {
            field: self.field.clone(),
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self.entries.iter().map(|x| x * lambda).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.ncols != other.nrows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let zero = self.field.zero();
        Ok(Self::from_fn(&self.field, self.nrows, other.ncols, |i, j| {
            (0..self.ncols).fold(zero.clone(), |acc, k| acc + self.get(i, k) * other.get(k, j))
        }))
    }

    pub fn kron(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let (nb, mb) = (other.nrows, other.ncols);
        Ok(Self::from_fn(
            &self.field,
            self.nrows * nb,
            self.ncols * mb,
            |i, j| self.get(i / nb, j / mb) * other.get(i % nb, j % mb),
        ))
    }

    pub fn trace(&self) -> Result<FieldElement> {
        self.require_square()?;
        Ok((0..self.nrows).fold(self.field.zero(), |acc, k| acc + self.get(k, k)))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.nrows).all(|i| (0..self.ncols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.nrows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                nrows: self.nrows,
                ncols: self.ncols,
            })
        }
    }

    /// Determinant by Gaussian elimination, pivoting on the first nonzero
    /// entry of each column.
    pub fn det(&self) -> Result<FieldElement> {
        self.require_square()?;
        let n = self.nrows;
        let mut rows: Vec<Vec<FieldElement>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut det = self.field.one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
                return Ok(self.field.zero());
            };
            if pivot != col {
                rows.swap(pivot, col);
                det = -det;
            }
            let pivot_inv = rows[col][col].inv()?;
            det *= &rows[col][col];
            let (head, tail) = rows.split_at_mut(col + 1);
            let pivot_row = &head[col];
            for row in tail.iter_mut() {
                if row[col].is_zero() {
                    continue;
                }
                let factor = &row[col] * &pivot_inv;
                for k in col..n {
                    let delta = &factor * &pivot_row[k];
                    row[k] -= &delta;
                }
            }
        }
        Ok(det)
    }
}

/// Free-function form of [`MatrixFq::kron`].
pub fn kron(a: &MatrixFq, b: &MatrixFq) -> Result<MatrixFq> {
    a.kron(b)
}

/// Free-function form of [`MatrixFq::det`].
pub fn det(a: &MatrixFq) -> Result<FieldElement> {
    a.det()
}

impl fmt::Debug for MatrixFq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixFq {}x{} over {}", self.nrows, self.ncols, self.field)?;
        f.write_str(&self.to_text())
    }
}
