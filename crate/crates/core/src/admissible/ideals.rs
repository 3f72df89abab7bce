//! Ideal/root-subset correspondence, complementary ideals, the core and its
//! center, subalgebras generated by symmetric closed root subsets, and the
//! decomposition into simple ideals via connectedness of roots.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use thiserror::Error;

use super::{is_admissible, AdmissibilityFailure, RootDatum, SamplingOptions};
use crate::lie::{
    bracket_span, centralizer_in, is_ideal, quotient_algebra, subalgebra_on, Element,
    InducedAlgebra, LieError,
};
use crate::linalg::{BasisSolver, Rational, Subspace};
use crate::toral::{
    weight_decomposition, DecomposeError, ToralError, ToralSubalgebra, Weight,
};

/// An ideal together with its root support `R_I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealRootSubset {
    pub ideal: Subspace,
    pub roots: BTreeSet<Weight>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("the subspace is not an ideal")]
    NotAnIdeal,
    #[error("R_I is not symmetric: {root} lacks its opposite")]
    NotSymmetric { root: Weight },
    #[error("R_I is not closed: {a} + {b} is a root outside R_I")]
    NotClosed { a: Weight, b: Weight },
    #[error("root space of {root} meets the ideal without being contained in it")]
    SpaceNotContained { root: Weight },
    #[error("ideal dimension {got} differs from its root decomposition total {expected}")]
    DecompositionMismatch { expected: usize, got: usize },
}

/// Computes `R_I = {a in R : I meets L_a}` and verifies it is symmetric and
/// closed with `I = (I n L_0) + sum of L_a over R_I`.
pub fn ideal_root_subset(
    rd: &RootDatum,
    ideal: &Subspace,
) -> Result<IdealRootSubset, IdealError> {
    let l = rd.algebra();
    if !is_ideal(l, ideal) {
        return Err(IdealError::NotAnIdeal);
    }
    let mut roots = BTreeSet::new();
    for alpha in rd.roots() {
        let space = rd.space_of(alpha).expect("roots have spaces");
        if !ideal.intersect(space).expect("same ambient").is_zero() {
            roots.insert(alpha.clone());
        }
    }
    for alpha in &roots {
        if !roots.contains(&-alpha) {
            return Err(IdealError::NotSymmetric { root: alpha.clone() });
        }
        if !ideal
            .contains(rd.space_of(alpha).unwrap())
            .expect("same ambient")
        {
            return Err(IdealError::SpaceNotContained { root: alpha.clone() });
        }
    }
    for a in &roots {
        for b in &roots {
            let sum = a + b;
            if rd.is_root(&sum) && !roots.contains(&sum) {
                return Err(IdealError::NotClosed {
                    a: a.clone(),
                    b: b.clone(),
                });
            }
        }
    }
    let zero_part = ideal
        .intersect(rd.decomposition().zero_space())
        .expect("same ambient");
    let total: usize = zero_part.dim()
        + roots
            .iter()
            .map(|a| rd.space_of(a).unwrap().dim())
            .sum::<usize>();
    if total != ideal.dim() {
        return Err(IdealError::DecompositionMismatch {
            expected: total,
            got: ideal.dim(),
        });
    }
    Ok(IdealRootSubset {
        ideal: ideal.clone(),
        roots,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplementError {
    #[error("L_0 is not the span of the opposite root-space brackets")]
    ZeroSpaceNotCovered,
    #[error("the built complement is not an ideal")]
    NotAnIdeal,
    #[error("I + J does not recover the algebra")]
    SumNotFull,
    #[error("I and J intersect outside the center")]
    IntersectionNotCentral,
}

/// The complementary ideal `J` over the roots outside `R_I`. Requires
/// `L_0 = sum [L_a, L_{-a}]`; verifies that `J` is an ideal, `L = I + J`,
/// and `I n J` is central.
pub fn complement_ideal(
    rd: &RootDatum,
    iis: &IdealRootSubset,
) -> Result<Subspace, ComplementError> {
    let l = rd.algebra();
    let zero_cover = super::opposite_bracket_span(rd.decomposition());
    if &zero_cover != rd.decomposition().zero_space() {
        return Err(ComplementError::ZeroSpaceNotCovered);
    }
    let delta: Vec<&Weight> = rd
        .roots()
        .iter()
        .filter(|a| !iis.roots.contains(a))
        .collect();
    let mut j = Subspace::zero(l.dim());
    for alpha in &delta {
        let plus = rd.space_of(alpha).unwrap();
        if let Some(minus) = rd.space_of(&-*alpha) {
            j = j
                .sum(&bracket_span(l, plus, minus))
                .expect("same ambient");
        }
        j = j.sum(plus).expect("same ambient");
    }
    if !is_ideal(l, &j) {
        return Err(ComplementError::NotAnIdeal);
    }
    if iis.ideal.sum(&j).expect("same ambient") != Subspace::full(l.dim()) {
        return Err(ComplementError::SumNotFull);
    }
    let meet = iis.ideal.intersect(&j).expect("same ambient");
    if !l.center().contains(&meet).expect("same ambient") {
        return Err(ComplementError::IntersectionNotCentral);
    }
    Ok(j)
}

/// The core `L_c = L_{0,0} + sum L_a` and its center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Core {
    pub core_space: Subspace,
    pub center_of_core: Subspace,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("root {0} is not integrable")]
    NotIntegrable(Weight),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("the centerless core has a nonzero Killing radical")]
    QuotientNotSemisimple,
}

/// Builds the core and its center, and checks that the quotient of the core
/// by its center — re-expressed as a structure-constant algebra on a
/// complement basis — is semisimple.
pub fn core(rd: &RootDatum) -> Result<Core, CoreError> {
    if let Some(bad) = rd.roots().iter().find(|r| !rd.is_integrable(r)) {
        return Err(CoreError::NotIntegrable(bad.clone()));
    }
    let l = rd.algebra();
    let mut core_space = super::opposite_bracket_span(rd.decomposition());
    for alpha in rd.roots() {
        core_space = core_space
            .sum(rd.space_of(alpha).unwrap())
            .expect("same ambient");
    }
    let center_of_core = centralizer_in(l, &core_space, &core_space);
    let quotient = quotient_algebra(l, &core_space, &center_of_core)?;
    if !quotient.algebra.is_semisimple() {
        return Err(CoreError::QuotientNotSemisimple);
    }
    Ok(Core {
        core_space,
        center_of_core,
    })
}

/// The subalgebra generated by a symmetric closed subset of integrable
/// roots, re-expressed with its own toral subalgebra and admissible datum.
#[derive(Debug, Clone)]
pub struct SubalgebraDatum {
    pub induced: InducedAlgebra,
    pub toral: ToralSubalgebra,
    pub datum: RootDatum,
    /// Parent root in Delta -> root of the new datum.
    pub root_map: BTreeMap<Weight, Weight>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubFromRootsError {
    #[error("Delta is empty")]
    EmptyDelta,
    #[error("{0} is not a root of the datum")]
    UnknownRoot(Weight),
    #[error("root {0} is not integrable")]
    NotIntegrable(Weight),
    #[error("Delta is not symmetric: missing {0}")]
    NotSymmetric(Weight),
    #[error("Delta is not closed: {a} + {b} escapes")]
    NotClosed { a: Weight, b: Weight },
    #[error("restriction to h_Delta identifies {a} and {b}")]
    InjectivityFailure { a: Weight, b: Weight },
    #[error("the pair (L_Delta, h_Delta) is not admissible: {0}")]
    NotAdmissible(AdmissibilityFailure),
    #[error("the root system of (L_Delta, h_Delta) is not Delta")]
    RootSetMismatch,
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Toral(#[from] ToralError),
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
}

/// Builds `L_Delta = sum [L_a, L_{-a}] + sum L_a` over `Delta` with
/// `h_Delta = h n sum [L_a, L_{-a}]`, checks injectivity of restriction on
/// `Delta u {0}`, and certifies that the pair is admissible with root set
/// exactly `Delta`.
pub fn sub_from_roots(
    rd: &RootDatum,
    delta: &BTreeSet<Weight>,
    opts: &SamplingOptions,
) -> Result<SubalgebraDatum, SubFromRootsError> {
    if delta.is_empty() {
        return Err(SubFromRootsError::EmptyDelta);
    }
    for alpha in delta {
        if !rd.is_root(alpha) {
            return Err(SubFromRootsError::UnknownRoot(alpha.clone()));
        }
        if !rd.is_integrable(alpha) {
            return Err(SubFromRootsError::NotIntegrable(alpha.clone()));
        }
        if !delta.contains(&-alpha) {
            return Err(SubFromRootsError::NotSymmetric(alpha.clone()));
        }
    }
    for a in delta {
        for b in delta {
            let sum = a + b;
            if rd.is_root(&sum) && !delta.contains(&sum) {
                return Err(SubFromRootsError::NotClosed {
                    a: a.clone(),
                    b: b.clone(),
                });
            }
        }
    }
    let l = rd.algebra();
    let mut zero_part = Subspace::zero(l.dim());
    for alpha in delta {
        let plus = rd.space_of(alpha).unwrap();
        let minus = rd.space_of(&-alpha).unwrap();
        zero_part = zero_part
            .sum(&bracket_span(l, plus, minus))
            .expect("same ambient");
    }
    let mut sub_space = zero_part.clone();
    for alpha in delta {
        sub_space = sub_space
            .sum(rd.space_of(alpha).unwrap())
            .expect("same ambient");
    }
    let h_delta = rd
        .toral()
        .space()
        .intersect(&zero_part)
        .expect("same ambient");

    // Injectivity of the restriction on Delta u {0}: the value lists on the
    // h_Delta basis must be pairwise distinct.
    let signature = |w: &Weight| -> Vec<Rational> {
        h_delta
            .basis_vectors()
            .iter()
            .map(|v| {
                rd.toral()
                    .eval_weight(w, &Element::new(v.clone()))
                    .expect("h_Delta sits inside the toral subalgebra")
            })
            .collect()
    };
    let mut sigs: Vec<(Weight, Vec<Rational>)> = delta
        .iter()
        .map(|w| (w.clone(), signature(w)))
        .collect();
    sigs.push((
        Weight::zero(rd.toral().dim()),
        vec![crate::linalg::rat(0); h_delta.dim()],
    ));
    for i in 0..sigs.len() {
        for j in (i + 1)..sigs.len() {
            if sigs[i].1 == sigs[j].1 {
                return Err(SubFromRootsError::InjectivityFailure {
                    a: sigs[i].0.clone(),
                    b: sigs[j].0.clone(),
                });
            }
        }
    }

    let induced = subalgebra_on(l, &sub_space)?;
    let solver =
        BasisSolver::new(&induced.inclusion).expect("canonical bases are independent");
    let toral_elems: Vec<Element> = h_delta
        .basis_vectors()
        .into_iter()
        .map(|v| {
            Element::new(
                solver
                    .coords(&v)
                    .expect("h_Delta lies inside the subalgebra"),
            )
        })
        .collect();
    let toral = ToralSubalgebra::new(induced.algebra.clone(), toral_elems)?;
    let d_new = weight_decomposition(&toral)?;
    let datum = is_admissible(&d_new, opts).map_err(SubFromRootsError::NotAdmissible)?;

    // The eigenvalue lists on the h_Delta basis are exactly the restricted
    // weights, so the root sets must agree under the signature map.
    let mut root_map = BTreeMap::new();
    let mut expected: BTreeSet<Weight> = BTreeSet::new();
    for alpha in delta {
        let image = Weight::new(signature(alpha));
        root_map.insert(alpha.clone(), image.clone());
        expected.insert(image);
    }
    let got: BTreeSet<Weight> = datum.roots().iter().cloned().collect();
    if expected != got {
        return Err(SubFromRootsError::RootSetMismatch);
    }
    Ok(SubalgebraDatum {
        induced,
        toral,
        datum,
        root_map,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimpleDecompositionError {
    #[error("the algebra is not semisimple")]
    NotSemisimple,
    #[error("the toral subalgebra is not maximal")]
    NotMaximalToral,
    #[error("component {index} is not an ideal")]
    ComponentNotIdeal { index: usize },
    #[error("components {i} and {j} have a nonzero cross bracket")]
    CrossBracketNonzero { i: usize, j: usize },
    #[error("the components do not sum to the algebra")]
    SumNotFull,
    #[error("the toral subalgebra does not split across the components")]
    ToralSumMismatch,
}

/// Splits a semisimple admissible pair with maximal toral subalgebra into
/// its simple ideals: roots are grouped by connectedness through nonzero
/// pairings with the fixed splitting elements, each class generating one
/// ideal. Ideal-ness, vanishing cross brackets, `L = sum of components`
/// and `h = direct sum of h_i` are all verified.
pub fn simple_ideal_decomposition(
    rd: &RootDatum,
) -> Result<Vec<IdealRootSubset>, SimpleDecompositionError> {
    let l = rd.algebra();
    if !l.is_semisimple() {
        return Err(SimpleDecompositionError::NotSemisimple);
    }
    if !super::is_maximal_toral(rd.decomposition()) {
        return Err(SimpleDecompositionError::NotMaximalToral);
    }
    let roots = rd.roots();
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let connected = !rd.pairing(&roots[j], &roots[i]).is_zero()
                || !rd.pairing(&roots[i], &roots[j]).is_zero();
            if connected {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<Weight>> = BTreeMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        classes.entry(r).or_default().push(roots[i].clone());
    }
    let mut components = Vec::new();
    for class in classes.values() {
        let mut space = Subspace::zero(l.dim());
        for alpha in class {
            let plus = rd.space_of(alpha).unwrap();
            if let Some(minus) = rd.space_of(&-alpha) {
                space = space
                    .sum(&bracket_span(l, plus, minus))
                    .expect("same ambient");
            }
            space = space.sum(plus).expect("same ambient");
        }
        components.push(IdealRootSubset {
            ideal: space,
            roots: class.iter().cloned().collect(),
        });
    }
    components.sort_by(|a, b| a.roots.iter().next().cmp(&b.roots.iter().next()));

    for (index, c) in components.iter().enumerate() {
        if !is_ideal(l, &c.ideal) {
            return Err(SimpleDecompositionError::ComponentNotIdeal { index });
        }
    }
    for i in 0..components.len() {
        for j in (i + 1)..components.len() {
            if !bracket_span(l, &components[i].ideal, &components[j].ideal).is_zero() {
                return Err(SimpleDecompositionError::CrossBracketNonzero { i, j });
            }
        }
    }
    let mut total = Subspace::zero(l.dim());
    let mut dims = 0;
    for c in &components {
        total = total.sum(&c.ideal).expect("same ambient");
        dims += c.ideal.dim();
    }
    if total != Subspace::full(l.dim()) || dims != l.dim() {
        return Err(SimpleDecompositionError::SumNotFull);
    }
    let mut h_sum = Subspace::zero(l.dim());
    let mut h_dims = 0;
    for c in &components {
        let h_i = rd
            .toral()
            .space()
            .intersect(&c.ideal)
            .expect("same ambient");
        h_dims += h_i.dim();
        h_sum = h_sum.sum(&h_i).expect("same ambient");
    }
    if &h_sum != rd.toral().space() || h_dims != rd.toral().dim() {
        return Err(SimpleDecompositionError::ToralSumMismatch);
    }
    Ok(components)
}

#[cfg(test)]
mod tests {
    use super::super::SamplingOptions;
    use super::*;
    use crate::lie::{build_classical, Family, LieAlgebra};
    use crate::linalg::rat;
    use crate::toral::weight_decomposition;
    use std::sync::Arc;

    fn sl2_sl3_datum() -> RootDatum {
        let (a, _) = build_classical(Family::Sl, 2).unwrap();
        let (b, _) = build_classical(Family::Sl, 3).unwrap();
        let sum = Arc::new(a.direct_sum(&b));
        // Cartans: H1 of the first block (index 0), H1/H2 of the second
        // (indices 3, 4).
        let toral = ToralSubalgebra::new(
            Arc::clone(&sum),
            vec![
                sum.basis_element(0),
                sum.basis_element(3),
                sum.basis_element(4),
            ],
        )
        .unwrap();
        let d = weight_decomposition(&toral).unwrap();
        super::super::is_admissible(&d, &SamplingOptions::default()).unwrap()
    }

    #[test]
    fn block_ideal_has_block_roots() {
        let rd = sl2_sl3_datum();
        let l = rd.algebra().clone();
        // First block spans coordinates 0..3.
        let block: Vec<Vec<crate::linalg::Rational>> =
            (0..3).map(|i| l.basis_element(i).coords().to_vec()).collect();
        let ideal = Subspace::span(l.dim(), &block);
        let iis = ideal_root_subset(&rd, &ideal).unwrap();
        assert_eq!(iis.roots.len(), 2);
        for r in &iis.roots {
            // sl2 roots vanish on the sl3 Cartan coordinates.
            assert_eq!(r.coords()[1], rat(0));
            assert_eq!(r.coords()[2], rat(0));
        }
    }

    #[test]
    fn whole_algebra_and_zero_ideals() {
        let rd = sl2_sl3_datum();
        let l = rd.algebra().clone();
        let all = ideal_root_subset(&rd, &Subspace::full(l.dim())).unwrap();
        assert_eq!(all.roots.len(), rd.roots().len());
        let none = ideal_root_subset(&rd, &Subspace::zero(l.dim())).unwrap();
        assert!(none.roots.is_empty());
    }

    #[test]
    fn non_ideal_rejected() {
        let rd = sl2_sl3_datum();
        let l = rd.algebra().clone();
        let line = Subspace::span(l.dim(), &[l.basis_element(1).coords().to_vec()]);
        assert_eq!(ideal_root_subset(&rd, &line), Err(IdealError::NotAnIdeal));
    }

    #[test]
    fn complement_of_block_is_other_block() {
        let rd = sl2_sl3_datum();
        let l = rd.algebra().clone();
        let block: Vec<Vec<crate::linalg::Rational>> =
            (0..3).map(|i| l.basis_element(i).coords().to_vec()).collect();
        let ideal = Subspace::span(l.dim(), &block);
        let iis = ideal_root_subset(&rd, &ideal).unwrap();
        let j = complement_ideal(&rd, &iis).unwrap();
        let other: Vec<Vec<crate::linalg::Rational>> =
            (3..11).map(|i| l.basis_element(i).coords().to_vec()).collect();
        assert_eq!(j, Subspace::span(l.dim(), &other));
        assert!(ideal.intersect(&j).unwrap().is_zero());
    }

    #[test]
    fn complement_of_everything_is_zero() {
        let rd = sl2_sl3_datum();
        let l = rd.algebra().clone();
        let iis = ideal_root_subset(&rd, &Subspace::full(l.dim())).unwrap();
        let j = complement_ideal(&rd, &iis).unwrap();
        assert!(j.is_zero());
    }

    #[test]
    fn core_of_simple_algebra_is_everything() {
        let (_, t) = build_classical(Family::Sl, 3).unwrap();
        let d = weight_decomposition(&t).unwrap();
        let rd = super::super::is_admissible(&d, &SamplingOptions::default()).unwrap();
        let c = core(&rd).unwrap();
        assert_eq!(c.core_space, Subspace::full(8));
        assert!(c.center_of_core.is_zero());
    }

    #[test]
    fn core_of_gl_is_sl() {
        let (l, t) = build_classical(Family::Gl, 3).unwrap();
        let d = weight_decomposition(&t).unwrap();
        // gl is not admissible (clause 1), but the per-root datum exists.
        let rd = super::super::root_datum(&d, &SamplingOptions::default()).unwrap();
        let c = core(&rd).unwrap();
        assert_eq!(c.core_space.dim(), 8);
        assert!(c.center_of_core.is_zero());
        // The core is the traceless part: it does not contain E(1,1).
        let e11 = l.labels().iter().position(|s| s == "E(1,1)").unwrap();
        assert!(!c
            .core_space
            .contains_vector(l.basis_element(e11).coords())
            .unwrap());
    }

    #[test]
    fn core_of_sl2_plus_line() {
        let l = Arc::new(crate::lie::tests::sl2_efh().direct_sum(&LieAlgebra::abelian(1)));
        let toral = ToralSubalgebra::new(
            Arc::clone(&l),
            vec![l.basis_element(2), l.basis_element(3)],
        )
        .unwrap();
        let d = weight_decomposition(&toral).unwrap();
        let rd = super::super::root_datum(&d, &SamplingOptions::default()).unwrap();
        let c = core(&rd).unwrap();
        assert_eq!(c.core_space.dim(), 3);
        assert!(!c
            .core_space
            .contains_vector(l.basis_element(3).coords())
            .unwrap());
    }

    #[test]
    fn sub_from_single_root_pair_of_sl3_is_sl2() {
        let (l, t) = build_classical(Family::Sl, 3).unwrap();
        let d = weight_decomposition(&t).unwrap();
        let rd = super::super::is_admissible(&d, &SamplingOptions::default()).unwrap();
        let idx = |label: &str| l.labels().iter().position(|s| s == label).unwrap();
        let a1 = rd
            .decomposition()
            .weight_of_vector(l.basis_element(idx("E(1,2)")).coords())
            .unwrap();
        let delta: BTreeSet<Weight> = [a1.clone(), -&a1].into_iter().collect();
        let sub = sub_from_roots(&rd, &delta, &SamplingOptions::default()).unwrap();
        assert_eq!(sub.induced.algebra.dim(), 3);
        assert_eq!(sub.toral.dim(), 1);
        assert_eq!(sub.datum.roots().len(), 2);
        assert!(sub.induced.algebra.is_semisimple());
    }

    #[test]
    fn sub_from_all_roots_of_sl3_is_sl3() {
        let (_, t) = build_classical(Family::Sl, 3).unwrap();
        let d = weight_decomposition(&t).unwrap();
        let rd = super::super::is_admissible(&d, &SamplingOptions::default()).unwrap();
        let delta: BTreeSet<Weight> = rd.roots().iter().cloned().collect();
        let sub = sub_from_roots(&rd, &delta, &SamplingOptions::default()).unwrap();
        assert_eq!(sub.induced.algebra.dim(), 8);
        assert_eq!(sub.datum.roots().len(), 6);
    }

    #[test]
    fn sub_rejects_asymmetric_delta() {
        let (_, t) = build_classical(Family::Sl, 3).unwrap();
        let d = weight_decomposition(&t).unwrap();
        let rd = super::super::is_admissible(&d, &SamplingOptions::default()).unwrap();
        let alpha = rd.roots()[0].clone();
        let delta: BTreeSet<Weight> = [alpha].into_iter().collect();
        assert!(matches!(
            sub_from_roots(&rd, &delta, &SamplingOptions::default()),
            Err(SubFromRootsError::NotSymmetric(_))
        ));
    }

    #[test]
    fn two_blocks_decompose() {
        let rd = sl2_sl3_datum();
        let comps = simple_ideal_decomposition(&rd).unwrap();
        assert_eq!(comps.len(), 2);
        let mut dims: Vec<usize> = comps.iter().map(|c| c.ideal.dim()).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![3, 8]);
    }

    #[test]
    fn sl4_is_one_component() {
        let (_, t) = build_classical(Family::Sl, 4).unwrap();
        let d = weight_decomposition(&t).unwrap();
        let rd = super::super::is_admissible(&d, &SamplingOptions::default()).unwrap();
        let comps = simple_ideal_decomposition(&rd).unwrap();
        assert_eq!(comps.len(), 1);
    }
}
