use num_traits::Zero;

use super::matrix::{rref_with_transform, Matrix};
use super::subspace::Subspace;
use super::{rat, Rational};

/// One solution of `a x = b` together with the full homogeneous solution
/// space, so the affine solution set is `particular + kernel`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<Rational>,
    pub kernel: Subspace,
}

/// Exact solution of the linear system `a x = b`. Returns `None` when the
/// system is infeasible; that is an outcome, not an error.
pub fn solve_affine(a: &Matrix, b: &[Rational]) -> Option<AffineSolution> {
    assert_eq!(a.rows(), b.len(), "solve_affine shape mismatch");
    let aug = a.with_column(b);
    let (r, _, pivots) = rref_with_transform(&aug);
    if pivots.contains(&a.cols()) {
        return None;
    }
    let mut particular = vec![rat(0); a.cols()];
    for (row, &col) in pivots.iter().enumerate() {
        particular[col] = r.at(row, a.cols()).clone();
    }
    Some(AffineSolution {
        particular,
        kernel: kernel(a),
    })
}

/// The kernel `{x : m x = 0}` as a subspace of `Q^cols`.
pub fn kernel(m: &Matrix) -> Subspace {
    let (r, _, pivots) = rref_with_transform(m);
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut vecs = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![rat(0); n];
        v[f] = rat(1);
        for (row, &col) in pivots.iter().enumerate() {
            v[col] = -r.at(row, f).clone();
        }
        vecs.push(v);
    }
    Subspace::span(n, &vecs)
}

/// Precomputed coordinate solver for a fixed independent family of row
/// vectors: answers "express v in this basis" by a single matrix-vector
/// product.
#[derive(Clone, PartialEq, Eq)]
pub struct BasisSolver {
    k: usize,
    ambient: usize,
    transform: Matrix,
}

impl BasisSolver {
    /// `rows` must be linearly independent; returns `None` otherwise.
    pub fn new(rows: &Matrix) -> Option<Self> {
        let k = rows.rows();
        let bt = rows.transpose();
        let (r, t, pivots) = rref_with_transform(&bt);
        if pivots.len() < k {
            return None;
        }
        // Full column rank: the rref of the transpose is I_k stacked on zeros.
        debug_assert!((0..k).all(|i| (0..k).all(|j| {
            let expect = if i == j { rat(1) } else { rat(0) };
            *r.at(i, j) == expect
        })));
        Some(BasisSolver {
            k,
            ambient: rows.cols(),
            transform: t,
        })
    }

    pub fn basis_len(&self) -> usize {
        self.k
    }

    /// Coordinates of `v` in the basis, or `None` when `v` is not in the span.
    pub fn coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient, "coords length mismatch");
        let w = self.transform.mul_vec(v);
        self.split(w)
    }

    /// Same as `coords` for a vector given by its nonzero cells.
    pub fn coords_sparse(&self, cells: &[(usize, Rational)]) -> Option<Vec<Rational>> {
        let mut w = vec![rat(0); self.ambient];
        for (c, v) in cells {
            assert!(*c < self.ambient, "sparse cell out of range");
            for (i, wi) in w.iter_mut().enumerate() {
                let t = self.transform.at(i, *c);
                if !t.is_zero() {
                    *wi += t * v;
                }
            }
        }
        self.split(w)
    }

    fn split(&self, w: Vec<Rational>) -> Option<Vec<Rational>> {
        if w[self.k..].iter().all(Zero::is_zero) {
            let mut w = w;
            w.truncate(self.k);
            Some(w)
        } else {
            None
        }
    }
}

impl std::fmt::Debug for BasisSolver {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BasisSolver(k={}, ambient={})", self.k, self.ambient)
    }
}

#[cfg(test)]
mod tests {
    use super::super::frac;
    use super::*;

    #[test]
    fn cramer_two_by_two() {
        let a = Matrix::from_i64(&[&[2, -1], &[-1, 2]]);
        let sol = solve_affine(&a, &[rat(1), rat(1)]).unwrap();
        assert_eq!(sol.particular, vec![rat(1), rat(1)]);
        assert!(sol.kernel.is_zero());
    }

    #[test]
    fn single_homogeneous_row() {
        let a = Matrix::from_i64(&[&[1, 1]]);
        let sol = solve_affine(&a, &[rat(0)]).unwrap();
        assert_eq!(sol.particular, vec![rat(0), rat(0)]);
        assert_eq!(
            sol.kernel,
            Subspace::span(2, &[vec![rat(1), rat(-1)]])
        );
    }

    #[test]
    fn contradictory_rows_infeasible() {
        let a = Matrix::from_i64(&[&[1], &[1]]);
        assert!(solve_affine(&a, &[rat(0), rat(1)]).is_none());
    }

    #[test]
    fn affine_identity_holds() {
        let a = Matrix::from_i64(&[&[1, 2, 3], &[0, 1, 1]]);
        let b = [rat(6), rat(2)];
        let sol = solve_affine(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&sol.particular), b.to_vec());
        for k in sol.kernel.basis_vectors() {
            let shifted: Vec<Rational> = sol
                .particular
                .iter()
                .zip(&k)
                .map(|(p, q)| p + q)
                .collect();
            assert_eq!(a.mul_vec(&shifted), b.to_vec());
        }
    }

    #[test]
    fn basis_solver_roundtrip() {
        let rows = Matrix::from_i64(&[&[1, 1, 0], &[0, 2, 2]]);
        let solver = BasisSolver::new(&rows).unwrap();
        let v = vec![rat(1), rat(2), rat(1)];
        assert_eq!(solver.coords(&v).unwrap(), vec![rat(1), frac(1, 2)]);
        assert!(solver.coords(&[rat(0), rat(0), rat(1)]).is_none());
    }

    #[test]
    fn basis_solver_rejects_dependent_rows() {
        let rows = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(BasisSolver::new(&rows).is_none());
    }
}
