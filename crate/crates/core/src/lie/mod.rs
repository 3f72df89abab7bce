//! Lie algebras presented by structure constants over the rationals.
//!
//! A bracket table is stored only for basis pairs `i < j`; antisymmetry is
//! synthesized, so `validate` only has to confirm the Jacobi identity.

mod builders;

pub use builders::{build_classical, BuildError, Family};

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{kernel, rat, solve_affine, BasisSolver, Matrix, Rational, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("bracket entry ({i},{j}) must have i < j")]
    BadPair { i: usize, j: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("{got} labels supplied for dimension {dim}")]
    LabelCount { got: usize, dim: usize },
    #[error("Jacobi identity fails on basis triple ({i},{j},{k})")]
    JacobiViolation { i: usize, j: usize, k: usize },
    #[error("element is not ad-nilpotent")]
    NotNilpotent,
    #[error("the given vectors do not span a subalgebra")]
    NotClosed,
}

/// Element of a Lie algebra: coordinates against the algebra basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Element {
    coords: Vec<Rational>,
}

impl Element {
    pub fn new(coords: Vec<Rational>) -> Self {
        Element { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Element { coords: vec![rat(0); dim] }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut coords = vec![rat(0); dim];
        coords[i] = rat(1);
        Element { coords }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Element {
        Element {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        Element {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        Element {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            coords: self.coords.iter().map(|x| -x.clone()).collect(),
        }
    }
}

impl std::fmt::Debug for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Sparse vector: list of (basis index, coefficient), sorted by index.
pub type SparseVec = Vec<(usize, Rational)>;

/// Finite-dimensional Lie algebra given by a structure-constant table.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    table: BTreeMap<(usize, usize), SparseVec>,
}

impl LieAlgebra {
    /// Build from a table of `[b_i, b_j] = sum c_k b_k` entries with `i < j`.
    /// Antisymmetry is implied; the Jacobi identity is not checked here, call
    /// `validate` before trusting the algebra.
    pub fn new(
        dim: usize,
        labels: Vec<String>,
        entries: impl IntoIterator<Item = ((usize, usize), SparseVec)>,
    ) -> Result<Self, LieError> {
        if labels.len() != dim {
            return Err(LieError::LabelCount { got: labels.len(), dim });
        }
        let mut table: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        for ((i, j), terms) in entries {
            if i >= j {
                return Err(LieError::BadPair { i, j });
            }
            if j >= dim {
                return Err(LieError::IndexOutOfRange { index: j, dim });
            }
            let mut merged: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, c) in terms {
                if k >= dim {
                    return Err(LieError::IndexOutOfRange { index: k, dim });
                }
                *merged.entry(k).or_insert_with(|| rat(0)) += c;
            }
            let cleaned: SparseVec = merged.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !cleaned.is_empty() {
                table.insert((i, j), cleaned);
            }
        }
        Ok(LieAlgebra { dim, labels, table })
    }

    /// Abelian algebra: every bracket vanishes.
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            labels: (0..dim).map(|i| format!("z{i}")).collect(),
            table: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn table(&self) -> &BTreeMap<(usize, usize), SparseVec> {
        &self.table
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim, i)
    }

    /// `[b_i, b_j]` as a sparse vector, any index order.
    pub fn bracket_basis(&self, i: usize, j: usize) -> SparseVec {
        if i == j {
            return vec![];
        }
        if i < j {
            self.table.get(&(i, j)).cloned().unwrap_or_default()
        } else {
            self.table
                .get(&(j, i))
                .map(|terms| terms.iter().map(|(k, c)| (*k, -c.clone())).collect())
                .unwrap_or_default()
        }
    }

    /// Bilinear bracket of two elements.
    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        assert_eq!(x.dim(), self.dim, "element dimension mismatch");
        assert_eq!(y.dim(), self.dim, "element dimension mismatch");
        let mut out = vec![rat(0); self.dim];
        for ((i, j), terms) in &self.table {
            // [x, y] picks up (x_i y_j - x_j y_i) [b_i, b_j].
            let coeff = &x.coords[*i] * &y.coords[*j] - &x.coords[*j] * &y.coords[*i];
            if coeff.is_zero() {
                continue;
            }
            for (k, c) in terms {
                out[*k] += &coeff * c;
            }
        }
        Element::new(out)
    }

    /// Confirms the Jacobi identity on all basis triples; antisymmetry and
    /// bilinearity hold by construction, so this is the full Lie check.
    pub fn validate(&self) -> Result<(), LieError> {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let a = self.bracket_sparse(i, &self.bracket_basis(j, k));
                    let b = self.bracket_sparse(j, &self.bracket_basis(k, i));
                    let c = self.bracket_sparse(k, &self.bracket_basis(i, j));
                    let mut sum = vec![rat(0); self.dim];
                    for (idx, v) in a.into_iter().chain(b).chain(c) {
                        sum[idx] += v;
                    }
                    if sum.iter().any(|v| !v.is_zero()) {
                        return Err(LieError::JacobiViolation { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// `[b_i, v]` for sparse `v`.
    fn bracket_sparse(&self, i: usize, v: &SparseVec) -> SparseVec {
        let mut out: BTreeMap<usize, Rational> = BTreeMap::new();
        for (j, c) in v {
            for (k, d) in self.bracket_basis(i, *j) {
                *out.entry(k).or_insert_with(|| rat(0)) += c * &d;
            }
        }
        out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Matrix of `ad x`; column j is `[x, b_j]`.
    pub fn ad_matrix(&self, x: &Element) -> Matrix {
        assert_eq!(x.dim(), self.dim, "element dimension mismatch");
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.bracket(x, &self.basis_element(j));
            for (i, v) in col.coords().iter().enumerate() {
                if !v.is_zero() {
                    m.set(i, j, v.clone());
                }
            }
        }
        m
    }

    /// Killing form `tr(ad x . ad y)`.
    pub fn killing_form(&self, x: &Element, y: &Element) -> Rational {
        let ax = self.ad_matrix(x);
        let ay = self.ad_matrix(y);
        let mut t = rat(0);
        for i in 0..self.dim {
            for k in 0..self.dim {
                t += ax.at(i, k) * ay.at(k, i);
            }
        }
        t
    }

    /// Gram matrix of the Killing form on the basis.
    pub fn killing_gram(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim)
            .map(|i| self.ad_matrix(&self.basis_element(i)))
            .collect();
        Matrix::from_fn(self.dim, self.dim, |i, j| {
            let mut t = rat(0);
            for a in 0..self.dim {
                for b in 0..self.dim {
                    t += ads[i].at(a, b) * ads[j].at(b, a);
                }
            }
            t
        })
    }

    /// Center: kernel of `x -> ad x`.
    pub fn center(&self) -> Subspace {
        // Column i of the stacked matrix is the vectorized ad of basis i.
        let mut big = Matrix::zeros(self.dim * self.dim, self.dim);
        for i in 0..self.dim {
            let ad = self.ad_matrix(&self.basis_element(i));
            for r in 0..self.dim {
                for c in 0..self.dim {
                    if !ad.at(r, c).is_zero() {
                        big.set(r * self.dim + c, i, ad.at(r, c).clone());
                    }
                }
            }
        }
        kernel(&big)
    }

    /// Derived subalgebra `[L, L]`: span of all basis brackets.
    pub fn derived_subalgebra(&self) -> Subspace {
        let mut vecs = Vec::new();
        for terms in self.table.values() {
            let mut v = vec![rat(0); self.dim];
            for (k, c) in terms {
                v[*k] = c.clone();
            }
            vecs.push(v);
        }
        Subspace::span(self.dim, &vecs)
    }

    /// Radical of the Killing form; the algebra is semisimple iff it is zero.
    pub fn killing_radical(&self) -> Subspace {
        kernel(&self.killing_gram())
    }

    pub fn is_semisimple(&self) -> bool {
        self.killing_radical().is_zero()
    }

    /// In finite dimension, local nilpotency of `ad x` is plain matrix
    /// nilpotency, decided by `ad^dim = 0`.
    pub fn is_ad_nilpotent(&self, x: &Element) -> bool {
        let ad = self.ad_matrix(x);
        nilpotency_index(&ad, self.dim).is_some()
    }

    /// `exp(ad x)` as a finite exact sum; requires `x` ad-nilpotent.
    pub fn exp_ad(&self, x: &Element) -> Result<Matrix, LieError> {
        let ad = self.ad_matrix(x);
        let Some(index) = nilpotency_index(&ad, self.dim) else {
            return Err(LieError::NotNilpotent);
        };
        let mut sum = Matrix::identity(self.dim);
        let mut power = Matrix::identity(self.dim);
        let mut factorial = rat(1);
        for k in 1..index {
            power = &power * &ad;
            factorial *= rat(k as i64);
            sum = &sum + &power.scale(&(rat(1) / &factorial));
        }
        Ok(sum)
    }

    /// Block direct sum; cross brackets vanish.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let dim = self.dim + other.dim;
        let mut labels: Vec<String> = self.labels.iter().map(|l| format!("1:{l}")).collect();
        labels.extend(other.labels.iter().map(|l| format!("2:{l}")));
        let mut table = BTreeMap::new();
        for ((i, j), terms) in &self.table {
            table.insert((*i, *j), terms.clone());
        }
        for ((i, j), terms) in &other.table {
            table.insert(
                (i + self.dim, j + self.dim),
                terms.iter().map(|(k, c)| (k + self.dim, c.clone())).collect(),
            );
        }
        LieAlgebra { dim, labels, table }
    }
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LieAlgebra(dim {}, {} bracket entries)", self.dim, self.table.len())
    }
}

/// Least `k <= cap + 1` with `m^k = 0`, if any.
fn nilpotency_index(m: &Matrix, cap: usize) -> Option<usize> {
    let mut power = Matrix::identity(m.rows());
    for k in 0..=cap {
        if power.is_zero() {
            return Some(k);
        }
        power = &power * m;
    }
    if power.is_zero() {
        Some(cap + 1)
    } else {
        None
    }
}

/// A subalgebra re-expressed as a structure-constant algebra on its own
/// basis, with the inclusion kept for moving between coordinates.
#[derive(Debug, Clone)]
pub struct InducedAlgebra {
    pub algebra: Arc<LieAlgebra>,
    /// Rows are the new basis vectors in parent coordinates.
    pub inclusion: Matrix,
}

impl InducedAlgebra {
    /// Parent-coordinate vector for new-coordinate `coords`.
    pub fn embed(&self, coords: &[Rational]) -> Vec<Rational> {
        assert_eq!(coords.len(), self.inclusion.rows());
        let mut v = vec![rat(0); self.inclusion.cols()];
        for (i, c) in coords.iter().enumerate() {
            for (vj, bj) in v.iter_mut().zip(self.inclusion.row(i)) {
                *vj += c * bj;
            }
        }
        v
    }
}

/// Structure constants of the subalgebra spanned by `space`, in its canonical
/// basis. Fails with `NotClosed` when a bracket escapes the span.
pub fn subalgebra_on(parent: &LieAlgebra, space: &Subspace) -> Result<InducedAlgebra, LieError> {
    assert_eq!(space.ambient_dim(), parent.dim());
    let rows = space.basis().clone();
    let k = space.dim();
    let labels = (0..k).map(|i| format!("s{i}")).collect();
    let mut entries = Vec::new();
    if k > 0 {
        let solver = BasisSolver::new(&rows).expect("canonical bases are independent");
        for i in 0..k {
            for j in (i + 1)..k {
                let br = parent.bracket(
                    &Element::new(rows.row_vec(i)),
                    &Element::new(rows.row_vec(j)),
                );
                let Some(coords) = solver.coords(br.coords()) else {
                    return Err(LieError::NotClosed);
                };
                let terms: SparseVec = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                entries.push(((i, j), terms));
            }
        }
    }
    Ok(InducedAlgebra {
        algebra: Arc::new(LieAlgebra::new(k, labels, entries)?),
        inclusion: rows,
    })
}

/// Quotient of the subalgebra `space` by an ideal `by` of it, realized on a
/// complement basis completed from `space`'s canonical basis.
pub fn quotient_algebra(
    parent: &LieAlgebra,
    space: &Subspace,
    by: &Subspace,
) -> Result<InducedAlgebra, LieError> {
    assert_eq!(by.ambient_dim(), space.ambient_dim());
    assert!(space.contains(by).expect("same ambient"), "quotient by a non-subspace");
    let section = crate::linalg::complement_within(by, space);
    let q = section.len();
    let mut stacked_rows = by.basis_vectors();
    stacked_rows.extend(section.iter().cloned());
    let labels = (0..q).map(|i| format!("q{i}")).collect();
    let section_mat = if q == 0 {
        Matrix::zeros(0, space.ambient_dim())
    } else {
        Matrix::from_rows(section)
    };
    let mut entries = Vec::new();
    if q > 0 {
        let stacked = Matrix::from_rows(stacked_rows);
        let solver = BasisSolver::new(&stacked).expect("completion is independent");
        let z = by.dim();
        for i in 0..q {
            for j in (i + 1)..q {
                let br = parent.bracket(
                    &Element::new(section_mat.row_vec(i)),
                    &Element::new(section_mat.row_vec(j)),
                );
                let Some(coords) = solver.coords(br.coords()) else {
                    return Err(LieError::NotClosed);
                };
                // Drop the ideal part: the quotient forgets it.
                let terms: SparseVec = coords[z..]
                    .iter()
                    .cloned()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                entries.push(((i, j), terms));
            }
        }
    }
    Ok(InducedAlgebra {
        algebra: Arc::new(LieAlgebra::new(q, labels, entries)?),
        inclusion: section_mat,
    })
}

/// Span of all brackets `[u, w]` with `u` over `a`'s basis, `w` over `b`'s.
pub fn bracket_span(parent: &LieAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut vecs = Vec::new();
    for u in a.basis_vectors() {
        for w in b.basis_vectors() {
            let br = parent.bracket(&Element::new(u.clone()), &Element::new(w.clone()));
            if !br.is_zero() {
                vecs.push(br.coords().to_vec());
            }
        }
    }
    Subspace::span(parent.dim(), &vecs)
}

/// Whether `[L, candidate] <= candidate`.
pub fn is_ideal(parent: &LieAlgebra, candidate: &Subspace) -> bool {
    let image = bracket_span(parent, &Subspace::full(parent.dim()), candidate);
    candidate.contains(&image).expect("same ambient")
}

/// Centralizer of `space` inside `within`: `{x in within : [x, space] = 0}`.
pub fn centralizer_in(parent: &LieAlgebra, within: &Subspace, space: &Subspace) -> Subspace {
    let rows = within.basis();
    let k = within.dim();
    if k == 0 {
        return Subspace::zero(parent.dim());
    }
    // Unknowns are coefficients against `within`'s basis; one block of
    // equations per generator of `space`.
    let mut eq_rows: Vec<Vec<Rational>> = Vec::new();
    for s in space.basis_vectors() {
        let s = Element::new(s);
        let images: Vec<Element> = (0..k)
            .map(|i| parent.bracket(&Element::new(rows.row_vec(i)), &s))
            .collect();
        for coord in 0..parent.dim() {
            let row: Vec<Rational> = images.iter().map(|im| im.coords()[coord].clone()).collect();
            if row.iter().any(|c| !c.is_zero()) {
                eq_rows.push(row);
            }
        }
    }
    let coeff_space = if eq_rows.is_empty() {
        Subspace::full(k)
    } else {
        let b = vec![rat(0); eq_rows.len()];
        solve_affine(&Matrix::from_rows(eq_rows), &b)
            .expect("homogeneous systems are feasible")
            .kernel
    };
    let vecs: Vec<Vec<Rational>> = coeff_space
        .basis_vectors()
        .into_iter()
        .map(|coeffs| {
            let mut v = vec![rat(0); parent.dim()];
            for (i, c) in coeffs.iter().enumerate() {
                for (vj, bj) in v.iter_mut().zip(rows.row(i)) {
                    *vj += c * bj;
                }
            }
            v
        })
        .collect();
    Subspace::span(parent.dim(), &vecs)
}
