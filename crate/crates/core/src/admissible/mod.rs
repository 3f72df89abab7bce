//! sl2-triples, splitting elements, and the admissibility condition: the
//! toral subalgebra must lie in the span of opposite-root-space brackets,
//! and every nonzero root vector must embed as the `e` of an sl2-triple
//! whose `f` sits in the opposite root space and whose `h` is toral.
//!
//! Finding a triple for `x` is a linear problem: once `[x,y]` is toral and
//! `alpha([x,y]) = 2`, the remaining triple relations follow from the weight
//! grading. The solver imposes only those two linear conditions and then
//! re-verifies the full triple.

mod ideals;
mod props;

pub use ideals::{
    complement_ideal, core, ideal_root_subset, simple_ideal_decomposition, sub_from_roots,
    ComplementError, Core, CoreError, IdealError, IdealRootSubset, SimpleDecompositionError,
    SubFromRootsError, SubalgebraDatum,
};
pub use props::{
    is_maximal_toral, killing_identities, loc5_suite, root_string, scaled_root_check,
    splitting_elements_unique, theta_automorphism, KillingViolation, Loc5Violation,
    RootStringError, SplittingViolation, ThetaError,
};

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::lie::{Element, LieAlgebra};
use crate::linalg::{
    complement_within, rat, rref_with_transform, solve_affine, AffineSolution, Matrix, Rational,
    Subspace,
};
use crate::toral::{ToralSubalgebra, Weight, WeightDecomposition};

/// Standard sl2-triple attached to a root: `[e,f] = h`, `[h,e] = 2e`,
/// `[h,f] = -2f`, with `e` in the root space, `f` in the opposite one and
/// `h` in the toral subalgebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: Element,
    pub h: Element,
    pub f: Element,
    pub root: Weight,
}

/// Reproducible sampling for the randomized strengthening of the per-root
/// check: besides every basis vector of a root space, `samples` seeded
/// nonzero combinations are required to embed into triples as well.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplingOptions {
    pub seed: u64,
    pub samples: usize,
}

impl Default for SamplingOptions {
    fn default() -> Self {
        SamplingOptions { seed: 0, samples: 5 }
    }
}

/// Failure of the per-root sl2 analysis, with the witness that reproduces it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDatumError {
    #[error("the root system is empty")]
    EmptyRootSystem,
    #[error("root {root} has no opposite root")]
    MissingOppositeRoot { root: Weight },
    #[error("no sl2-triple through root {root} for witness vector {witness:?}")]
    NoSl2Triple { root: Weight, witness: Element },
}

/// Failure of the admissibility condition, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdmissibilityFailure {
    /// Clause 1: the toral subalgebra is not inside the span of the
    /// `[L_a, L_{-a}]`; the witness is a toral vector outside that span.
    #[error("toral element {witness:?} is not in the span of opposite root-space brackets")]
    ToralNotCovered { witness: Element },
    /// Clause 2 or a degenerate root system.
    #[error(transparent)]
    Datum(#[from] RootDatumError),
}

/// Extracted root system of a pair `(L, h)`: the nonzero weights with their
/// sl2-triple witnesses, splitting elements, and integrability flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    decomposition: WeightDecomposition,
    roots: Vec<Weight>,
    triples: BTreeMap<Weight, Sl2Triple>,
    integrable: BTreeMap<Weight, bool>,
}

impl RootDatum {
    pub fn decomposition(&self) -> &WeightDecomposition {
        &self.decomposition
    }

    pub fn algebra(&self) -> &std::sync::Arc<LieAlgebra> {
        self.decomposition.algebra()
    }

    pub fn toral(&self) -> &ToralSubalgebra {
        self.decomposition.toral()
    }

    /// The nonzero weights, sorted.
    pub fn roots(&self) -> &[Weight] {
        &self.roots
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.decomposition.is_root(w)
    }

    pub fn triple(&self, root: &Weight) -> Option<&Sl2Triple> {
        self.triples.get(root)
    }

    /// The splitting element `h_a` kept for a root.
    pub fn splitting_element(&self, root: &Weight) -> Option<&Element> {
        self.triples.get(root).map(|t| &t.h)
    }

    pub fn splitting_elements(&self) -> impl Iterator<Item = (&Weight, &Element)> {
        self.triples.iter().map(|(w, t)| (w, &t.h))
    }

    pub fn is_integrable(&self, root: &Weight) -> bool {
        self.integrable.get(root).copied().unwrap_or(false)
    }

    pub fn all_integrable(&self) -> bool {
        self.roots.iter().all(|r| self.is_integrable(r))
    }

    /// The pairing `beta(h_alpha)`.
    pub fn pairing(&self, beta: &Weight, alpha: &Weight) -> Rational {
        let h = self
            .splitting_element(alpha)
            .expect("pairing against a known root");
        self.toral()
            .eval_weight(beta, h)
            .expect("splitting elements lie in the toral subalgebra")
    }

    /// Root space of a root.
    pub fn space_of(&self, w: &Weight) -> Option<&Subspace> {
        self.decomposition.space_of(w)
    }
}

/// Linear solver context for sl2-triples over one fixed decomposition.
pub(crate) struct TripleContext<'a> {
    d: &'a WeightDecomposition,
    /// Inverse of the transpose of the stacked basis (chosen toral basis
    /// followed by a complement); maps a vector to its coordinates, the
    /// first `k` of which are chosen-basis coordinates whenever the vector
    /// is toral.
    inv: Matrix,
}

impl<'a> TripleContext<'a> {
    pub(crate) fn new(d: &'a WeightDecomposition) -> Self {
        let toral = d.toral();
        let n = d.algebra().dim();
        let mut rows: Vec<Vec<Rational>> = toral
            .chosen_basis()
            .iter()
            .map(|b| b.coords().to_vec())
            .collect();
        rows.extend(complement_within(toral.space(), &Subspace::full(n)));
        let stacked = Matrix::from_rows(rows);
        let (r, inv, _) = rref_with_transform(&stacked.transpose());
        debug_assert_eq!(r, Matrix::identity(n));
        TripleContext { d, inv }
    }

    /// The affine system for `y in L_{-alpha}` with `[x,y]` toral and
    /// `alpha([x,y]) = 2`, returned with the basis of the opposite space.
    /// `None` when the opposite space is missing or the system is infeasible.
    pub(crate) fn solve_raw(
        &self,
        alpha: &Weight,
        x: &Element,
    ) -> Option<(AffineSolution, Matrix)> {
        let k = self.d.toral().dim();
        let n = self.d.algebra().dim();
        let opposite = self.d.space_of(&-alpha)?;
        let m = opposite.dim();
        // Column j holds the coordinates of [x, v_j].
        let mut w = Matrix::zeros(n, m);
        for j in 0..m {
            let v = Element::new(opposite.basis().row_vec(j));
            let br = self.d.algebra().bracket(x, &v);
            for (i, c) in br.coords().iter().enumerate() {
                w.set(i, j, c.clone());
            }
        }
        let tw = &self.inv * &w;
        // Rows k.. must vanish ([x,y] toral), and alpha applied to the first
        // k rows must give 2.
        let mut rows: Vec<Vec<Rational>> = (k..n).map(|i| tw.row_vec(i)).collect();
        let mut rhs = vec![rat(0); n - k];
        let alpha_row: Vec<Rational> = (0..m)
            .map(|j| {
                let mut acc = rat(0);
                for (i, a) in alpha.coords().iter().enumerate() {
                    acc += a * tw.at(i, j);
                }
                acc
            })
            .collect();
        rows.push(alpha_row);
        rhs.push(rat(2));
        let sol = solve_affine(&Matrix::from_rows(rows), &rhs)?;
        Some((sol, opposite.basis().clone()))
    }

    pub(crate) fn find(&self, alpha: &Weight, x: &Element) -> Option<Sl2Triple> {
        let (sol, basis) = self.solve_raw(alpha, x)?;
        let y = combine_rows(&basis, &sol.particular);
        let h = self.d.algebra().bracket(x, &y);
        let triple = Sl2Triple {
            e: x.clone(),
            h,
            f: y,
            root: alpha.clone(),
        };
        debug_assert!(verify_triple(self.d, &triple));
        Some(triple)
    }
}

/// Exact re-verification of all sl2-triple relations and memberships.
pub fn verify_triple(d: &WeightDecomposition, t: &Sl2Triple) -> bool {
    let l = d.algebra();
    let toral = d.toral();
    let two = rat(2);
    let in_root_space = |w: &Weight, v: &Element| {
        d.space_of(w)
            .is_some_and(|s| s.contains_vector(v.coords()).unwrap_or(false))
    };
    toral.coords_of(&t.h).is_some()
        && toral.eval_weight(&t.root, &t.h) == Some(two.clone())
        && in_root_space(&t.root, &t.e)
        && in_root_space(&-&t.root, &t.f)
        && l.bracket(&t.e, &t.f) == t.h
        && l.bracket(&t.h, &t.e) == t.e.scale(&two)
        && l.bracket(&t.h, &t.f) == t.f.scale(&-two)
}

fn combine_rows(basis: &Matrix, coeffs: &[Rational]) -> Element {
    let mut v = vec![rat(0); basis.cols()];
    for (i, c) in coeffs.iter().enumerate() {
        for (vj, bj) in v.iter_mut().zip(basis.row(i)) {
            *vj += c * bj;
        }
    }
    Element::new(v)
}

/// Searches for an sl2-triple `(x, [x,y], y)` with `y` in the opposite root
/// space. `x` must be a nonzero element of the `alpha` root space. Absence
/// of a solution returns `None`, which falsifies admissibility for `x`.
pub fn find_sl2_triple(
    d: &WeightDecomposition,
    alpha: &Weight,
    x: &Element,
) -> Option<Sl2Triple> {
    assert!(!x.is_zero(), "witness vector must be nonzero");
    assert!(
        d.space_of(alpha)
            .is_some_and(|s| s.contains_vector(x.coords()).unwrap_or(false)),
        "witness vector must lie in the root space"
    );
    assert!(!alpha.is_zero(), "alpha must be a nonzero weight");
    TripleContext::new(d).find(alpha, x)
}

/// Per-root sl2 analysis: every basis vector of every root space (plus
/// seeded random nonzero combinations) must embed into an sl2-triple. The
/// triple kept for a root is the one through its first basis vector.
pub fn root_datum(
    d: &WeightDecomposition,
    opts: &SamplingOptions,
) -> Result<RootDatum, RootDatumError> {
    let roots = d.roots();
    if roots.is_empty() {
        return Err(RootDatumError::EmptyRootSystem);
    }
    let ctx = TripleContext::new(d);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut triples = BTreeMap::new();
    let mut integrable = BTreeMap::new();
    for alpha in &roots {
        if d.space_of(&-alpha).is_none() {
            return Err(RootDatumError::MissingOppositeRoot { root: alpha.clone() });
        }
        let space = d.space_of(alpha).expect("roots have spaces");
        let basis = space.basis_vectors();
        let mut kept: Option<Sl2Triple> = None;
        for v in &basis {
            let x = Element::new(v.clone());
            match ctx.find(alpha, &x) {
                Some(t) => {
                    if kept.is_none() {
                        kept = Some(t);
                    }
                }
                None => {
                    return Err(RootDatumError::NoSl2Triple {
                        root: alpha.clone(),
                        witness: x,
                    })
                }
            }
        }
        for _ in 0..opts.samples {
            let mut coeffs: Vec<Rational> =
                (0..basis.len()).map(|_| rat(rng.gen_range(-3..=3))).collect();
            if coeffs.iter().all(num_traits::Zero::is_zero) {
                coeffs[0] = rat(1);
            }
            let x = combine_rows(space.basis(), &coeffs);
            if ctx.find(alpha, &x).is_none() {
                return Err(RootDatumError::NoSl2Triple {
                    root: alpha.clone(),
                    witness: x,
                });
            }
        }
        let t = kept.expect("root spaces are nonzero");
        let is_int =
            d.algebra().is_ad_nilpotent(&t.e) && d.algebra().is_ad_nilpotent(&t.f);
        integrable.insert(alpha.clone(), is_int);
        triples.insert(alpha.clone(), t);
    }
    Ok(RootDatum {
        decomposition: d.clone(),
        roots,
        triples,
        integrable,
    })
}

/// Full admissibility check: clause 1 (the toral subalgebra is contained in
/// the span of the opposite-root-space brackets) plus the per-root sl2
/// analysis. On success the extracted root datum is returned; on failure a
/// witness identifies the clause, the root, and the vector.
pub fn is_admissible(
    d: &WeightDecomposition,
    opts: &SamplingOptions,
) -> Result<RootDatum, AdmissibilityFailure> {
    let roots = d.roots();
    if roots.is_empty() {
        return Err(RootDatumError::EmptyRootSystem.into());
    }
    let span = opposite_bracket_span(d);
    if !span
        .contains(d.toral().space())
        .expect("same ambient")
    {
        let witness = d
            .toral()
            .chosen_basis()
            .iter()
            .find(|b| !span.contains_vector(b.coords()).unwrap_or(false))
            .cloned()
            .expect("containment failed on some basis vector");
        return Err(AdmissibilityFailure::ToralNotCovered { witness });
    }
    Ok(root_datum(d, opts)?)
}

/// `sum over roots of [L_a, L_{-a}]` as a subspace.
pub fn opposite_bracket_span(d: &WeightDecomposition) -> Subspace {
    let l = d.algebra();
    let mut vecs = Vec::new();
    for alpha in d.roots() {
        let Some(minus) = d.space_of(&-&alpha) else {
            continue;
        };
        let plus = d.space_of(&alpha).expect("roots have spaces");
        for u in plus.basis_vectors() {
            for w in minus.basis_vectors() {
                let br = l.bracket(&Element::new(u.clone()), &Element::new(w.clone()));
                if !br.is_zero() {
                    vecs.push(br.coords().to_vec());
                }
            }
        }
    }
    Subspace::span(l.dim(), &vecs)
}
