//! Simultaneous diagonalization of commuting rational matrices.
//!
//! Eigenvalues are obtained exactly: the matrix is scaled to integer entries,
//! its minimal polynomial is built from Krylov sequences, and the integer
//! roots of that (monic, integer) polynomial are isolated with Sturm chains.
//! A matrix whose minimal polynomial is not a product of distinct rational
//! linear factors is not diagonalizable over Q and is reported as not split.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use super::matrix::Matrix;
use super::poly::{integer_roots, poly_with_roots, RatPoly};
use super::solve::{kernel, BasisSolver};
use super::subspace::Subspace;
use super::{rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EigenError {
    #[error("operator {index} is not square")]
    NotSquare { index: usize },
    #[error("operator {index} is {got}x{got}, expected {expected}x{expected}")]
    SizeMismatch { index: usize, got: usize, expected: usize },
    #[error("operators {i} and {j} do not commute")]
    NotCommuting { i: usize, j: usize },
    #[error("operator {op_index} is not diagonalizable over the rationals")]
    NotSplit { op_index: usize },
}

/// Common eigenspace decomposition of a pairwise-commuting family acting on
/// `Q^ambient_dim`. Each returned entry pairs the eigenvalue tuple (one value
/// per operator, in input order) with the exact common eigenspace; the spaces
/// are independent and their dimensions sum to the ambient dimension.
pub fn simultaneous_eigenspaces(
    ops: &[Matrix],
    ambient_dim: usize,
) -> Result<Vec<(Vec<Rational>, Subspace)>, EigenError> {
    for (index, op) in ops.iter().enumerate() {
        if !op.is_square() {
            return Err(EigenError::NotSquare { index });
        }
        if op.rows() != ambient_dim {
            return Err(EigenError::SizeMismatch {
                index,
                got: op.rows(),
                expected: ambient_dim,
            });
        }
    }
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            if &ops[i] * &ops[j] != &ops[j] * &ops[i] {
                return Err(EigenError::NotCommuting { i, j });
            }
        }
    }

    let mut blocks: Vec<(Vec<Rational>, Subspace)> =
        vec![(vec![], Subspace::full(ambient_dim))];
    for (op_index, op) in ops.iter().enumerate() {
        let mut next = Vec::new();
        for (tuple, space) in &blocks {
            let restricted = restrict_to(op, space);
            let Some(eigenvalues) = rational_spectrum(&restricted) else {
                return Err(EigenError::NotSplit { op_index });
            };
            let mut seen = 0;
            for lambda in eigenvalues {
                let shifted = &restricted - &Matrix::identity(space.dim()).scale(&lambda);
                let ker = kernel(&shifted);
                debug_assert!(!ker.is_zero());
                // Lift coordinate vectors back to the ambient space.
                let lifted: Vec<Vec<Rational>> = ker
                    .basis_vectors()
                    .into_iter()
                    .map(|coords| combine(space.basis(), &coords))
                    .collect();
                seen += lifted.len();
                let mut tuple2 = tuple.clone();
                tuple2.push(lambda);
                next.push((tuple2, Subspace::span(ambient_dim, &lifted)));
            }
            if seen != space.dim() {
                return Err(EigenError::NotSplit { op_index });
            }
        }
        blocks = next;
    }
    blocks.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(blocks)
}

/// Matrix of `op` on the (invariant) subspace, in the subspace's canonical
/// basis coordinates.
fn restrict_to(op: &Matrix, space: &Subspace) -> Matrix {
    let solver = BasisSolver::new(space.basis()).expect("canonical basis is independent");
    let k = space.dim();
    let mut out = Matrix::zeros(k, k);
    for j in 0..k {
        let image = op.mul_vec(space.basis().row(j));
        let coords = solver
            .coords(&image)
            .expect("commuting operators preserve common eigenspaces");
        for i in 0..k {
            out.set(i, j, coords[i].clone());
        }
    }
    out
}

/// Linear combination of the rows of `basis` with the given coefficients.
fn combine(basis: &Matrix, coords: &[Rational]) -> Vec<Rational> {
    let mut v = vec![rat(0); basis.cols()];
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (vj, bj) in v.iter_mut().zip(basis.row(i)) {
            *vj += c * bj;
        }
    }
    v
}

/// The eigenvalues of `m` when it is diagonalizable with all-rational
/// spectrum, `None` otherwise. Exactness argument: after scaling `m` by the
/// lcm of its entry denominators the minimal polynomial is monic with integer
/// coefficients, so every rational eigenvalue is an integer of the scaled
/// matrix; the matrix is split iff the minimal polynomial equals the product
/// of `x - root` over the integer roots found.
pub(crate) fn rational_spectrum(m: &Matrix) -> Option<Vec<Rational>> {
    assert!(m.is_square());
    if m.rows() == 0 {
        return Some(vec![]);
    }
    let denom_lcm = entry_denominator_lcm(m);
    let scale = Rational::from_integer(denom_lcm.clone());
    let scaled = m.scale(&scale);
    let min_poly = minimal_polynomial(&scaled);
    let roots: Vec<Rational> = integer_roots(&min_poly)
        .into_iter()
        .map(Rational::from_integer)
        .collect();
    if poly_with_roots(&roots) == min_poly {
        Some(roots.into_iter().map(|r| r / &scale).collect())
    } else {
        None
    }
}

fn entry_denominator_lcm(m: &Matrix) -> BigInt {
    let mut l = BigInt::one();
    for i in 0..m.rows() {
        for v in m.row(i) {
            l = l.lcm(v.denom());
        }
    }
    l
}

/// Minimal polynomial via Krylov sequences: the lcm over standard basis
/// vectors of the local annihilating polynomials.
fn minimal_polynomial(m: &Matrix) -> RatPoly {
    let n = m.rows();
    let mut min_poly = RatPoly::one();
    for i in 0..n {
        let mut e = vec![rat(0); n];
        e[i] = rat(1);
        if apply_poly(m, &min_poly, &e).iter().all(Zero::is_zero) {
            continue;
        }
        let local = local_min_poly(m, &e);
        min_poly = RatPoly::lcm(&min_poly, &local);
        if min_poly.degree() == n {
            break;
        }
    }
    min_poly
}

/// Evaluate `p(m) v` by Horner iteration on the vector.
fn apply_poly(m: &Matrix, p: &RatPoly, v: &[Rational]) -> Vec<Rational> {
    if p.is_zero() {
        return vec![rat(0); v.len()];
    }
    let mut acc = vec![rat(0); v.len()];
    for c in p.coeffs().iter().rev() {
        acc = m.mul_vec(&acc);
        for (a, x) in acc.iter_mut().zip(v) {
            *a += c * x;
        }
    }
    acc
}

/// Least-degree monic polynomial with `p(m) v = 0`, from the first linear
/// dependence in the Krylov sequence v, m v, m^2 v, ...
fn local_min_poly(m: &Matrix, v: &[Rational]) -> RatPoly {
    let mut krylov: Vec<Vec<Rational>> = vec![v.to_vec()];
    loop {
        let next = m.mul_vec(krylov.last().expect("nonempty"));
        let rows = Matrix::from_rows(krylov.clone());
        if let Some(solver) = BasisSolver::new(&rows) {
            if let Some(coords) = solver.coords(&next) {
                // next = sum coords_j m^j v, so x^k - sum coords_j x^j kills v.
                let k = krylov.len();
                let mut coeffs = coords.iter().map(|c| -c.clone()).collect::<Vec<_>>();
                coeffs.push(rat(1));
                debug_assert_eq!(coeffs.len(), k + 1);
                return RatPoly::from_coeffs(coeffs);
            }
        } else {
            unreachable!("Krylov prefix stays independent until first dependence");
        }
        krylov.push(next);
    }
}
