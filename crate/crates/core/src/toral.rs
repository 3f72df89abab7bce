//! Split toral subalgebras and weight space decompositions, including
//! restriction of a decomposition to a smaller toral subalgebra.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

use crate::lie::{Element, LieAlgebra};
use crate::linalg::{
    dot, rat, simultaneous_eigenspaces, BasisSolver, EigenError, Matrix, Rational, Subspace,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToralError {
    #[error("a toral subalgebra must be nontrivial")]
    Empty,
    #[error("basis element has dimension {got}, algebra has {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the chosen basis is linearly dependent")]
    Dependent,
    #[error("subalgebra is not abelian: [basis {i}, basis {j}] != 0")]
    NotAbelian { i: usize, j: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("adjoint action is not split: operator {op_index} has no rational eigenbasis")]
    NotSplit { op_index: usize },
    #[error(transparent)]
    Eigen(EigenError),
}

impl From<EigenError> for DecomposeError {
    fn from(e: EigenError) -> Self {
        match e {
            EigenError::NotSplit { op_index } => DecomposeError::NotSplit { op_index },
            other => DecomposeError::Eigen(other),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RestrictError {
    #[error("decomposition and subalgebra live in different algebras")]
    DifferentAlgebra,
    #[error("the subalgebra is not contained in the decomposition's toral subalgebra")]
    NotContained,
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
    #[error("merged restriction disagrees with the direct recomputation")]
    CoherenceFailure,
}

/// Linear functional on a toral subalgebra, stored as its values on the
/// chosen ordered basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Weight(vec![rat(0); dim])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Value on an element of the toral subalgebra given in chosen-basis
    /// coordinates.
    pub fn eval_coords(&self, coords: &[Rational]) -> Rational {
        dot(&self.0, coords)
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|x| -x.clone()).collect())
    }
}

impl std::fmt::Debug for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Split toral subalgebra: abelian, with simultaneously diagonalizable
/// adjoint action. Abelianness is enforced at construction; splitness is
/// decided when a weight decomposition is requested.
#[derive(Clone)]
pub struct ToralSubalgebra {
    algebra: Arc<LieAlgebra>,
    space: Subspace,
    chosen_basis: Vec<Element>,
    solver: BasisSolver,
}

impl PartialEq for ToralSubalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other)
            && self.space == other.space
            && self.chosen_basis == other.chosen_basis
    }
}
impl Eq for ToralSubalgebra {}

impl std::fmt::Debug for ToralSubalgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ToralSubalgebra(dim {} in algebra of dim {})",
            self.dim(),
            self.algebra.dim()
        )
    }
}

impl ToralSubalgebra {
    /// A nonzero abelian subalgebra with the given fixed ordered basis.
    pub fn new(algebra: Arc<LieAlgebra>, basis: Vec<Element>) -> Result<Self, ToralError> {
        if basis.is_empty() {
            return Err(ToralError::Empty);
        }
        for b in &basis {
            if b.dim() != algebra.dim() {
                return Err(ToralError::DimensionMismatch {
                    expected: algebra.dim(),
                    got: b.dim(),
                });
            }
        }
        let rows = Matrix::from_rows(basis.iter().map(|b| b.coords().to_vec()).collect());
        let Some(solver) = BasisSolver::new(&rows) else {
            return Err(ToralError::Dependent);
        };
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                if !algebra.bracket(&basis[i], &basis[j]).is_zero() {
                    return Err(ToralError::NotAbelian { i, j });
                }
            }
        }
        Ok(ToralSubalgebra {
            space: Subspace::from_rows(&rows),
            algebra,
            chosen_basis: basis,
            solver,
        })
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn chosen_basis(&self) -> &[Element] {
        &self.chosen_basis
    }

    pub fn dim(&self) -> usize {
        self.chosen_basis.len()
    }

    /// Coordinates of `x` against the chosen basis; `None` if `x` is outside.
    pub fn coords_of(&self, x: &Element) -> Option<Vec<Rational>> {
        self.solver.coords(x.coords())
    }

    /// Value `w(x)` for `x` in this subalgebra.
    pub fn eval_weight(&self, w: &Weight, x: &Element) -> Option<Rational> {
        Some(w.eval_coords(&self.coords_of(x)?))
    }

    pub fn same_algebra(&self, other: &ToralSubalgebra) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra
    }
}

/// Whether `space` is a split toral subalgebra of `algebra`: nonzero,
/// abelian, and with simultaneously diagonalizable adjoint action over Q.
pub fn is_toral(algebra: &LieAlgebra, space: &Subspace) -> bool {
    if space.is_zero() || space.ambient_dim() != algebra.dim() {
        return false;
    }
    let basis: Vec<Element> = space.basis_vectors().into_iter().map(Element::new).collect();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            if !algebra.bracket(&basis[i], &basis[j]).is_zero() {
                return false;
            }
        }
    }
    let ops: Vec<Matrix> = basis.iter().map(|b| algebra.ad_matrix(b)).collect();
    simultaneous_eigenspaces(&ops, algebra.dim()).is_ok()
}

/// Weight space decomposition of the algebra under a toral subalgebra.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightDecomposition {
    toral: ToralSubalgebra,
    spaces: BTreeMap<Weight, Subspace>,
}

impl std::fmt::Debug for WeightDecomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .spaces
            .iter()
            .map(|(w, s)| format!("{w}: dim {}", s.dim()))
            .collect();
        write!(f, "WeightDecomposition {{ {} }}", parts.join(", "))
    }
}

impl WeightDecomposition {
    pub fn toral(&self) -> &ToralSubalgebra {
        &self.toral
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        self.toral.algebra()
    }

    /// All weight spaces, including the zero weight.
    pub fn spaces(&self) -> &BTreeMap<Weight, Subspace> {
        &self.spaces
    }

    /// The nonzero weights: the root system of the pair.
    pub fn roots(&self) -> Vec<Weight> {
        self.spaces.keys().filter(|w| !w.is_zero()).cloned().collect()
    }

    pub fn zero_space(&self) -> &Subspace {
        &self.spaces[&Weight::zero(self.toral.dim())]
    }

    pub fn space_of(&self, w: &Weight) -> Option<&Subspace> {
        self.spaces.get(w)
    }

    pub fn is_weight(&self, w: &Weight) -> bool {
        self.spaces.contains_key(w)
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        !w.is_zero() && self.spaces.contains_key(w)
    }

    /// The weight whose space contains `v`, for `v` lying in a single
    /// weight space.
    pub fn weight_of_vector(&self, v: &[Rational]) -> Option<Weight> {
        self.spaces
            .iter()
            .find(|(_, s)| s.contains_vector(v).unwrap_or(false))
            .map(|(w, _)| w.clone())
    }
}

/// Computes the weight space decomposition of the ambient algebra with
/// respect to `toral`, by simultaneous diagonalization of the adjoint
/// operators of the chosen basis.
pub fn weight_decomposition(
    toral: &ToralSubalgebra,
) -> Result<WeightDecomposition, DecomposeError> {
    let algebra = toral.algebra();
    let ops: Vec<Matrix> = toral
        .chosen_basis()
        .iter()
        .map(|b| algebra.ad_matrix(b))
        .collect();
    let blocks = simultaneous_eigenspaces(&ops, algebra.dim())?;
    let mut spaces = BTreeMap::new();
    let mut total = 0;
    for (tuple, space) in blocks {
        total += space.dim();
        spaces.insert(Weight::new(tuple), space);
    }
    debug_assert_eq!(total, algebra.dim());
    debug_assert!(spaces.contains_key(&Weight::zero(toral.dim())));
    Ok(WeightDecomposition {
        toral: toral.clone(),
        spaces,
    })
}

/// Restriction of a weight decomposition to a smaller toral subalgebra
/// (Lemma-style merge): the space of a restricted weight is the sum of all
/// old spaces restricting to it. The merge is verified against a direct
/// recomputation before returning.
pub fn restrict(
    d: &WeightDecomposition,
    t_sub: &ToralSubalgebra,
) -> Result<WeightDecomposition, RestrictError> {
    if !d.toral().same_algebra(t_sub) {
        return Err(RestrictError::DifferentAlgebra);
    }
    if !d
        .toral()
        .space()
        .contains(t_sub.space())
        .map_err(|_| RestrictError::DifferentAlgebra)?
    {
        return Err(RestrictError::NotContained);
    }
    // Express the small basis in the big chosen coordinates once.
    let sub_coords: Vec<Vec<Rational>> = t_sub
        .chosen_basis()
        .iter()
        .map(|u| d.toral().coords_of(u).expect("containment checked"))
        .collect();
    let mut merged: BTreeMap<Weight, Subspace> = BTreeMap::new();
    for (alpha, space) in d.spaces() {
        let beta = Weight::new(
            sub_coords
                .iter()
                .map(|coords| alpha.eval_coords(coords))
                .collect(),
        );
        merged
            .entry(beta)
            .and_modify(|acc| *acc = acc.sum(space).expect("same ambient"))
            .or_insert_with(|| space.clone());
    }
    let result = WeightDecomposition {
        toral: t_sub.clone(),
        spaces: merged,
    };
    let direct = weight_decomposition(t_sub)?;
    if result.spaces != direct.spaces {
        return Err(RestrictError::CoherenceFailure);
    }
    Ok(result)
}
