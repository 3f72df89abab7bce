use num_traits::Zero;

use super::matrix::{rref, Matrix};
use super::{LinalgError, Rational};

/// Subspace of `Q^ambient`, stored as a reduced row-echelon basis with zero
/// rows dropped. The representation is canonical: two subspaces are equal as
/// sets iff they are equal as values.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Span of the rows of `m`.
    pub fn from_rows(m: &Matrix) -> Self {
        let r = rref(m);
        let nonzero: Vec<Vec<Rational>> = (0..r.rows())
            .filter(|&i| r.row(i).iter().any(|x| !x.is_zero()))
            .map(|i| r.row_vec(i))
            .collect();
        Subspace {
            ambient: m.cols(),
            basis: Matrix::from_rows_with_width(nonzero, m.cols()),
        }
    }

    /// Span of the given vectors, all of length `ambient`.
    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "span vector length mismatch");
        }
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        Subspace::from_rows(&Matrix::from_rows(vectors.to_vec()))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.dim()).map(|i| self.basis.row_vec(i)).collect()
    }

    pub fn contains_vector(&self, v: &[Rational]) -> Result<bool, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::VectorLength {
                expected: self.ambient,
                got: v.len(),
            });
        }
        if v.iter().all(Zero::is_zero) {
            return Ok(true);
        }
        // Reduce v against the echelon basis; membership iff the residue is 0.
        let mut w = v.to_vec();
        for i in 0..self.dim() {
            let pivot = self
                .basis
                .row(i)
                .iter()
                .position(|x| !x.is_zero())
                .expect("basis rows are nonzero");
            if !w[pivot].is_zero() {
                let factor = w[pivot].clone();
                for (wj, bj) in w.iter_mut().zip(self.basis.row(i)) {
                    *wj -= &factor * bj;
                }
            }
        }
        Ok(w.iter().all(Zero::is_zero))
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        for v in other.basis_vectors() {
            if !self.contains_vector(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        Ok(Subspace::from_rows(&self.basis.vstack(&other.basis)))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        // Kernel vectors (u, v) of [A^T B^T] satisfy u*A = -v*B, which ranges
        // exactly over the intersection.
        let stacked = self.basis.transpose().hstack(&other.basis.transpose());
        let ker = super::solve::kernel(&stacked);
        let k = self.dim();
        let mut vecs = Vec::new();
        for coeffs in ker.basis_vectors() {
            let mut v = vec![super::rat(0); self.ambient];
            for (i, c) in coeffs[..k].iter().enumerate() {
                for (vj, bj) in v.iter_mut().zip(self.basis.row(i)) {
                    *vj += c * bj;
                }
            }
            vecs.push(v);
        }
        Ok(Subspace::span(self.ambient, &vecs))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of {}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

impl Matrix {
    /// `from_rows` that keeps the column count when there are no rows.
    fn from_rows_with_width(rows: Vec<Vec<Rational>>, width: usize) -> Matrix {
        if rows.is_empty() {
            Matrix::zeros(0, width)
        } else {
            Matrix::from_rows(rows)
        }
    }

    /// Stack `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows(), other.rows(), "hstack row mismatch");
        Matrix::from_fn(self.rows(), self.cols() + other.cols(), |i, j| {
            if j < self.cols() {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols()).clone()
            }
        })
    }
}

/// Basis vectors of `whole` that extend `sub` to a basis of `whole`,
/// chosen greedily in the order of `whole`'s canonical basis.
pub(crate) fn complement_within(sub: &Subspace, whole: &Subspace) -> Vec<Vec<Rational>> {
    assert_eq!(sub.ambient_dim(), whole.ambient_dim());
    let mut current = sub.clone();
    let mut added = Vec::new();
    for v in whole.basis_vectors() {
        if !current.contains_vector(&v).expect("same ambient") {
            added.push(v.clone());
            current = current
                .sum(&Subspace::span(sub.ambient_dim(), &[v]))
                .expect("same ambient");
        }
    }
    assert_eq!(current.dim(), whole.dim());
    added
}
