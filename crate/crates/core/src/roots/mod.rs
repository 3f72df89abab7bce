//! Abstract root system engine, independent of any Lie algebra: axiom
//! checking, reflections, connected components, symmetric closed closures,
//! partial-sum witnesses, Cartan-matrix solving, semi-divisible subsets, and
//! extraction of an abstract system from an admissible root datum.
//!
//! Roots are exact-rational coordinate vectors; coroots are stored covectors
//! rather than being recomputed from an inner product.

mod families;

pub use families::{chain_check, family_truncation, ChainReport, ChainStep, FamilyError, RootFamily};

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;
use thiserror::Error;

use crate::admissible::RootDatum;
use crate::linalg::{dot, rat, solve_affine, BasisSolver, Matrix, Rational, Subspace};
use crate::toral::Weight;

/// Root (or covector) as exact rational coordinates.
pub type RootVector = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomViolation {
    #[error("the candidate set contains 0")]
    ContainsZero,
    #[error("the candidate set spans only the zero space")]
    SpansNothing,
    #[error("root {root:?} has no coroot")]
    MissingCoroot { root: RootVector },
    #[error("coroot of {root:?} evaluates to {value} on it, expected 2")]
    CorootNormalization { root: RootVector, value: Rational },
    #[error("reflection of {beta:?} along {alpha:?} gives {image:?}, outside the set")]
    ReflectionEscapes {
        alpha: RootVector,
        beta: RootVector,
        image: RootVector,
    },
    #[error("pairing coroot({alpha:?})({beta:?}) = {value} is not an integer")]
    NonIntegralPairing {
        alpha: RootVector,
        beta: RootVector,
        value: Rational,
    },
    #[error("vector {0:?} has the wrong length")]
    WrongLength(RootVector),
}

/// Locally finite root system axioms at finite scale: no zero, a nontrivial
/// spanned space, coroot normalization, reflection closure, and integrality
/// of pairings. The system's vector space is the span of the roots (the
/// ambient coordinate dimension may be larger, as in the `e_i - e_j`
/// realization of the A family). The first violation is reported.
pub fn check_axioms(
    ambient: usize,
    roots: &BTreeSet<RootVector>,
    coroots: &BTreeMap<RootVector, RootVector>,
) -> Result<(), AxiomViolation> {
    for v in roots {
        if v.len() != ambient {
            return Err(AxiomViolation::WrongLength(v.clone()));
        }
        if v.iter().all(Zero::is_zero) {
            return Err(AxiomViolation::ContainsZero);
        }
    }
    if roots.is_empty() {
        return Err(AxiomViolation::SpansNothing);
    }
    for alpha in roots {
        let Some(cv) = coroots.get(alpha) else {
            return Err(AxiomViolation::MissingCoroot { root: alpha.clone() });
        };
        if cv.len() != ambient {
            return Err(AxiomViolation::WrongLength(cv.clone()));
        }
        let norm = dot(cv, alpha);
        if norm != rat(2) {
            return Err(AxiomViolation::CorootNormalization {
                root: alpha.clone(),
                value: norm,
            });
        }
    }
    for alpha in roots {
        let cv = &coroots[alpha];
        for beta in roots {
            let p = dot(cv, beta);
            if !p.is_integer() {
                return Err(AxiomViolation::NonIntegralPairing {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    value: p,
                });
            }
            let image: RootVector = beta
                .iter()
                .zip(alpha)
                .map(|(b, a)| b - &(&p * a))
                .collect();
            if !roots.contains(&image) {
                return Err(AxiomViolation::ReflectionEscapes {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    image,
                });
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("{0:?} is not a root of the system")]
    UnknownRoot(RootVector),
    #[error("the pairing matrix of the base is singular")]
    SingularPairing,
    #[error("solving the pairing system does not reproduce the target root")]
    ReconstructionFailure,
    #[error("the members are not reflection-closed: s_{alpha:?}({beta:?}) escapes")]
    NotASubsystem { alpha: RootVector, beta: RootVector },
}

/// Finite (truncation of a) locally finite root system with stored coroots.
/// Roots are coordinate vectors of length `ambient_dim`; the system's vector
/// space is their span, of dimension `rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractRootSystem {
    ambient: usize,
    rank: usize,
    roots: BTreeSet<RootVector>,
    coroots: BTreeMap<RootVector, RootVector>,
}

/// A reflection-closed subset of a root system's roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subsystem {
    pub members: BTreeSet<RootVector>,
}

impl AbstractRootSystem {
    /// Validates the axioms and builds the system.
    pub fn new(
        ambient: usize,
        roots: BTreeSet<RootVector>,
        coroots: BTreeMap<RootVector, RootVector>,
    ) -> Result<Self, AxiomViolation> {
        check_axioms(ambient, &roots, &coroots)?;
        let rank = Subspace::span(ambient, &roots.iter().cloned().collect::<Vec<_>>()).dim();
        Ok(AbstractRootSystem {
            ambient,
            rank,
            roots,
            coroots,
        })
    }

    /// Coordinate length of the stored vectors.
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Dimension of the spanned space.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &BTreeSet<RootVector> {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, v: &RootVector) -> bool {
        self.roots.contains(v)
    }

    pub fn contains_or_zero(&self, v: &RootVector) -> bool {
        v.iter().all(Zero::is_zero) || self.roots.contains(v)
    }

    pub fn coroot(&self, alpha: &RootVector) -> Option<&RootVector> {
        self.coroots.get(alpha)
    }

    /// `coroot(alpha)(v)` for any vector `v`.
    pub fn pairing(&self, alpha: &RootVector, v: &RootVector) -> Result<Rational, RootSystemError> {
        let cv = self
            .coroots
            .get(alpha)
            .ok_or_else(|| RootSystemError::UnknownRoot(alpha.clone()))?;
        Ok(dot(cv, v))
    }

    /// `s_alpha(v) = v - coroot(alpha)(v) alpha`.
    pub fn reflect(&self, alpha: &RootVector, v: &RootVector) -> Result<RootVector, RootSystemError> {
        let p = self.pairing(alpha, v)?;
        Ok(v.iter().zip(alpha).map(|(b, a)| b - &(&p * a)).collect())
    }

    /// Connected components under "some pairing in either direction is
    /// nonzero"; every component is a closed subsystem.
    pub fn connected_components(&self) -> Vec<BTreeSet<RootVector>> {
        let roots: Vec<&RootVector> = self.roots.iter().collect();
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
                let linked = !dot(&self.coroots[roots[i]], roots[j]).is_zero()
                    || !dot(&self.coroots[roots[j]], roots[i]).is_zero();
                if linked {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut classes: BTreeMap<usize, BTreeSet<RootVector>> = BTreeMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            classes.entry(r).or_default().insert(roots[i].clone());
        }
        classes.into_values().collect()
    }

    pub fn is_irreducible(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// `(S + S) n R <= S`.
    pub fn is_closed_subset(&self, s: &BTreeSet<RootVector>) -> bool {
        for a in s {
            for b in s {
                let sum: RootVector = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if self.roots.contains(&sum) && !s.contains(&sum) {
                    return false;
                }
            }
        }
        true
    }

    /// Validated reflection-closed subset.
    pub fn subsystem(&self, members: BTreeSet<RootVector>) -> Result<Subsystem, RootSystemError> {
        for alpha in &members {
            if !self.roots.contains(alpha) {
                return Err(RootSystemError::UnknownRoot(alpha.clone()));
            }
        }
        for alpha in &members {
            for beta in &members {
                let image = self.reflect(alpha, beta)?;
                if !members.contains(&image) {
                    return Err(RootSystemError::NotASubsystem {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                    });
                }
            }
        }
        Ok(Subsystem { members })
    }

    /// Smallest subset of `R` containing `m u -m` that is closed under
    /// negation and pairwise sums landing in `R`, via fixed-point iteration.
    pub fn closure_delta_m(
        &self,
        m: &[RootVector],
    ) -> Result<BTreeSet<RootVector>, RootSystemError> {
        for v in m {
            if !self.roots.contains(v) {
                return Err(RootSystemError::UnknownRoot(v.clone()));
            }
        }
        let mut delta: BTreeSet<RootVector> = BTreeSet::new();
        for v in m {
            delta.insert(v.clone());
            delta.insert(v.iter().map(|c| -c.clone()).collect());
        }
        loop {
            let mut added = Vec::new();
            for a in &delta {
                for b in &delta {
                    let sum: RootVector = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    if self.roots.contains(&sum) && !delta.contains(&sum) {
                        added.push(sum);
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            delta.extend(added);
        }
        Ok(delta)
    }

    /// A permutation of the summands whose every prefix sum lies in
    /// `R u {0}`, found by masked depth-first search with failure memoing.
    /// `None` is the falsification signal when the summands add to a root
    /// (or zero) but no such ordering exists.
    pub fn partial_sum_witness(
        &self,
        summands: &[RootVector],
        beta: &RootVector,
    ) -> Option<Vec<usize>> {
        let n = summands.len();
        assert!(n > 0 && n <= 24, "witness search is for small sums");
        let total = summands.iter().fold(vec![rat(0); self.ambient], |acc, s| {
            acc.iter().zip(s).map(|(a, b)| a + b).collect()
        });
        assert_eq!(&total, beta, "summands must add up to beta");
        let mut failed: HashMap<u32, ()> = HashMap::new();
        let mut order = Vec::with_capacity(n);
        let zero = vec![rat(0); self.ambient];
        if self.search(summands, 0u32, &zero, &mut order, &mut failed) {
            Some(order)
        } else {
            None
        }
    }

    fn search(
        &self,
        summands: &[RootVector],
        mask: u32,
        sum: &RootVector,
        order: &mut Vec<usize>,
        failed: &mut HashMap<u32, ()>,
    ) -> bool {
        if order.len() == summands.len() {
            return true;
        }
        if failed.contains_key(&mask) {
            return false;
        }
        for (i, s) in summands.iter().enumerate() {
            if mask & (1 << i) != 0 {
                continue;
            }
            let next: RootVector = sum.iter().zip(s).map(|(a, b)| a + b).collect();
            if !self.contains_or_zero(&next) {
                continue;
            }
            order.push(i);
            if self.search(summands, mask | (1 << i), &next, order, failed) {
                return true;
            }
            order.pop();
        }
        failed.insert(mask, ());
        false
    }

    /// Pairing (Cartan) matrix of a base: entry (j, i) is
    /// `coroot(base_j)(base_i)`.
    pub fn pairing_matrix(&self, base: &[RootVector]) -> Result<Matrix, RootSystemError> {
        let n = base.len();
        let mut m = Matrix::zeros(n, n);
        for (j, bj) in base.iter().enumerate() {
            for (i, bi) in base.iter().enumerate() {
                m.set(j, i, self.pairing(bj, bi)?);
            }
        }
        Ok(m)
    }

    /// Solves `sum_i coroot(base_j)(base_i) x_i = coroot(base_j)(eta)`; when
    /// `eta` lies in the span of the base, the solution is verified to
    /// reproduce `eta` as `sum x_i base_i`.
    pub fn cartan_solve(
        &self,
        base: &[RootVector],
        eta: &RootVector,
    ) -> Result<Vec<Rational>, RootSystemError> {
        let a = self.pairing_matrix(base)?;
        let rhs: Vec<Rational> = base
            .iter()
            .map(|bj| self.pairing(bj, eta))
            .collect::<Result<_, _>>()?;
        let sol = solve_affine(&a, &rhs).ok_or(RootSystemError::SingularPairing)?;
        if !sol.kernel.is_zero() {
            return Err(RootSystemError::SingularPairing);
        }
        let span = Subspace::span(self.ambient, &base.to_vec());
        if span.contains_vector(eta).unwrap_or(false) {
            let mut rebuilt = vec![rat(0); self.ambient];
            for (x, b) in sol.particular.iter().zip(base) {
                for (r, c) in rebuilt.iter_mut().zip(b) {
                    *r += x * c;
                }
            }
            if &rebuilt != eta {
                return Err(RootSystemError::ReconstructionFailure);
            }
        }
        Ok(sol.particular)
    }

    /// The semi-divisible subset `R \ {a : 2a in R}` together with the
    /// reduced flag; the result is verified to be a subsystem.
    pub fn sdiv(&self) -> Result<(Subsystem, bool), RootSystemError> {
        let members: BTreeSet<RootVector> = self
            .roots
            .iter()
            .filter(|a| {
                let doubled: RootVector = a.iter().map(|c| c * rat(2)).collect();
                !self.roots.contains(&doubled)
            })
            .cloned()
            .collect();
        let reduced = members.len() == self.roots.len();
        let sub = self.subsystem(members)?;
        Ok((sub, reduced))
    }

    pub fn is_reduced(&self) -> bool {
        self.sdiv().map(|(_, reduced)| reduced).unwrap_or(false)
    }

    /// Multiset of sorted Cartan-matrix rows over a deterministic base
    /// choice, used as a cheap isomorphism fingerprint.
    pub fn cartan_fingerprint(&self) -> Vec<Vec<Rational>> {
        let mut rows: Vec<Vec<Rational>> = self
            .roots
            .iter()
            .map(|a| {
                let mut row: Vec<Rational> = self
                    .roots
                    .iter()
                    .map(|b| dot(&self.coroots[a], b))
                    .collect();
                row.sort();
                row
            })
            .collect();
        rows.sort();
        rows
    }
}

/// Abstract system extracted from an admissible root datum, with the map
/// from weights to abstract coordinates kept for compatibility checks.
#[derive(Debug, Clone)]
pub struct ExtractedSystem {
    pub system: AbstractRootSystem,
    pub weight_map: BTreeMap<Weight, RootVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractError {
    #[error("root {0} is not integrable")]
    NotIntegrable(Weight),
    #[error(transparent)]
    Axiom(#[from] AxiomViolation),
}

/// Reinterprets the weights of an admissible datum as vectors in the span of
/// the root set, with coroots built from the splitting elements via
/// `coroot(a)(b) = b(h_a)`; the axioms are checked on the result.
pub fn extract_abstract(rd: &RootDatum) -> Result<ExtractedSystem, ExtractError> {
    if let Some(bad) = rd.roots().iter().find(|r| !rd.is_integrable(r)) {
        return Err(ExtractError::NotIntegrable(bad.clone()));
    }
    let k = rd.toral().dim();
    let weight_vecs: Vec<RootVector> = rd.roots().iter().map(|w| w.coords().to_vec()).collect();
    let span = Subspace::span(k, &weight_vecs);
    let solver = BasisSolver::new(span.basis()).expect("canonical bases are independent");
    let rank = span.dim();
    let mut roots = BTreeSet::new();
    let mut coroots = BTreeMap::new();
    let mut weight_map = BTreeMap::new();
    for alpha in rd.roots() {
        let vec = solver
            .coords(alpha.coords())
            .expect("roots lie in their own span");
        let h = rd.splitting_element(alpha).expect("datum covers roots");
        let h_coords = rd
            .toral()
            .coords_of(h)
            .expect("splitting elements are toral");
        // New covector entry j is the old covector paired with basis row j.
        let covector: RootVector = (0..rank)
            .map(|j| dot(span.basis().row(j), &h_coords))
            .collect();
        roots.insert(vec.clone());
        coroots.insert(vec.clone(), covector);
        weight_map.insert(alpha.clone(), vec);
    }
    let system = AbstractRootSystem::new(rank, roots, coroots)?;
    Ok(ExtractedSystem { system, weight_map })
}

/// Brute-force closure oracle: the intersection of all symmetric closed
/// subsets of `R` containing `m`. Exponential in the number of root pairs;
/// intended for systems with at most ~12 roots.
pub fn minimal_symmetric_closed_superset(
    rs: &AbstractRootSystem,
    m: &[RootVector],
) -> BTreeSet<RootVector> {
    let pairs: Vec<(RootVector, RootVector)> = {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for a in rs.roots() {
            let neg: RootVector = a.iter().map(|c| -c.clone()).collect();
            if seen.contains(a) || seen.contains(&neg) {
                continue;
            }
            seen.insert(a.clone());
            out.push((a.clone(), neg));
        }
        out
    };
    assert!(pairs.len() <= 20, "oracle is exponential in root pairs");
    let mut best: Option<BTreeSet<RootVector>> = None;
    for mask in 0u32..(1 << pairs.len()) {
        let mut s = BTreeSet::new();
        for (i, (a, neg)) in pairs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                s.insert(a.clone());
                s.insert(neg.clone());
            }
        }
        if !m.iter().all(|v| s.contains(v)) {
            continue;
        }
        if !rs.is_closed_subset(&s) {
            continue;
        }
        best = Some(match best {
            None => s,
            Some(prev) => prev.intersection(&s).cloned().collect(),
        });
    }
    best.expect("the full set is symmetric and closed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;

    fn a2() -> AbstractRootSystem {
        family_truncation(RootFamily::A, 2).unwrap()
    }

    #[test]
    fn a2_axioms_pass() {
        let rs = a2();
        assert_eq!(rs.len(), 6);
    }

    #[test]
    fn alpha_with_triple_alpha_fails() {
        // {a, 3a} cannot carry a root system structure.
        let alpha = vec![rat(1)];
        let triple = vec![rat(3)];
        let roots: BTreeSet<RootVector> = [alpha.clone(), triple.clone()].into_iter().collect();
        let coroots: BTreeMap<RootVector, RootVector> = [
            (alpha, vec![rat(2)]),
            (triple, vec![frac(2, 3)]),
        ]
        .into_iter()
        .collect();
        assert!(check_axioms(1, &roots, &coroots).is_err());
    }

    #[test]
    fn zero_in_set_fails() {
        let roots: BTreeSet<RootVector> =
            [vec![rat(0), rat(0)], vec![rat(1), rat(0)]].into_iter().collect();
        assert_eq!(
            check_axioms(2, &roots, &BTreeMap::new()),
            Err(AxiomViolation::ContainsZero)
        );
    }

    #[test]
    fn reflection_examples() {
        let rs = a2();
        // In the e_i - e_j realization of A2 the simple roots are
        // a1 = e1 - e2 and a2 = e2 - e3.
        let a1 = vec![rat(1), rat(-1), rat(0)];
        let a2v = vec![rat(0), rat(1), rat(-1)];
        // s_a(a) = -a.
        let neg: RootVector = a1.iter().map(|c| -c.clone()).collect();
        assert_eq!(rs.reflect(&a1, &a1).unwrap(), neg);
        // s_{a1}(a2) = a1 + a2.
        let sum: RootVector = a1.iter().zip(&a2v).map(|(x, y)| x + y).collect();
        assert_eq!(rs.reflect(&a1, &a2v).unwrap(), sum);
        // Fixed hyperplane: pairing zero means fixed vector.
        let v = vec![rat(1), rat(1), rat(0)];
        assert_eq!(rs.pairing(&a1, &v).unwrap(), rat(0));
        assert_eq!(rs.reflect(&a1, &v).unwrap(), v);
    }

    #[test]
    fn component_counts() {
        assert_eq!(a2().connected_components().len(), 1);
        assert_eq!(
            family_truncation(RootFamily::D, 2).unwrap().connected_components().len(),
            2
        );
        assert_eq!(
            family_truncation(RootFamily::BC, 2).unwrap().connected_components().len(),
            1
        );
        // Components are closed subsystems.
        let d2 = family_truncation(RootFamily::D, 2).unwrap();
        for c in d2.connected_components() {
            assert!(d2.is_closed_subset(&c));
            assert!(d2.subsystem(c).is_ok());
        }
    }

    #[test]
    fn closure_examples() {
        let rs = a2();
        let a1 = vec![rat(1), rat(-1), rat(0)];
        let a2v = vec![rat(0), rat(1), rat(-1)];
        let single = rs.closure_delta_m(std::slice::from_ref(&a1)).unwrap();
        assert_eq!(single.len(), 2);
        let both = rs.closure_delta_m(&[a1, a2v]).unwrap();
        assert_eq!(both.len(), 6);
        let empty = rs.closure_delta_m(&[]).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn closure_matches_brute_force_oracle() {
        for rs in [
            a2(),
            family_truncation(RootFamily::B, 2).unwrap(),
            family_truncation(RootFamily::BC, 2).unwrap(),
        ] {
            let roots: Vec<RootVector> = rs.roots().iter().cloned().collect();
            for a in &roots {
                let got = rs.closure_delta_m(std::slice::from_ref(a)).unwrap();
                let want = minimal_symmetric_closed_superset(&rs, std::slice::from_ref(a));
                assert_eq!(got, want);
            }
            for (i, a) in roots.iter().enumerate() {
                for b in roots.iter().skip(i + 1) {
                    let m = vec![a.clone(), b.clone()];
                    let got = rs.closure_delta_m(&m).unwrap();
                    let want = minimal_symmetric_closed_superset(&rs, &m);
                    assert_eq!(got, want);
                }
            }
        }
    }

    #[test]
    fn partial_sum_witnesses() {
        let rs = a2();
        let a1 = vec![rat(1), rat(-1), rat(0)];
        let a2v = vec![rat(0), rat(1), rat(-1)];
        let theta: RootVector = a1.iter().zip(&a2v).map(|(x, y)| x + y).collect();
        assert_eq!(
            rs.partial_sum_witness(&[a1.clone(), a2v.clone()], &theta),
            Some(vec![0, 1])
        );
        // (a1, a1+a2, -a1) also has a valid ordering.
        let neg_a1: RootVector = a1.iter().map(|c| -c.clone()).collect();
        let w = rs
            .partial_sum_witness(&[a1.clone(), theta.clone(), neg_a1], &theta)
            .unwrap();
        assert_eq!(w.len(), 3);
        // Single summand: identity.
        assert_eq!(rs.partial_sum_witness(&[theta.clone()], &theta), Some(vec![0]));
    }

    #[test]
    fn cartan_solve_examples() {
        let rs = a2();
        let a1 = vec![rat(1), rat(-1), rat(0)];
        let a2v = vec![rat(0), rat(1), rat(-1)];
        let base = vec![a1.clone(), a2v.clone()];
        let theta: RootVector = a1.iter().zip(&a2v).map(|(x, y)| x + y).collect();
        assert_eq!(rs.cartan_solve(&base, &theta).unwrap(), vec![rat(1), rat(1)]);
        assert_eq!(rs.cartan_solve(&base, &a1).unwrap(), vec![rat(1), rat(0)]);
        let neg: RootVector = theta.iter().map(|c| -c.clone()).collect();
        assert_eq!(rs.cartan_solve(&base, &neg).unwrap(), vec![rat(-1), rat(-1)]);
        // Pairing matrix is the A2 Cartan matrix.
        assert_eq!(
            rs.pairing_matrix(&base).unwrap(),
            Matrix::from_i64(&[&[2, -1], &[-1, 2]])
        );
    }

    #[test]
    fn sdiv_examples() {
        let (sub, reduced) = a2().sdiv().unwrap();
        assert!(reduced);
        assert_eq!(sub.members.len(), 6);

        let b2 = family_truncation(RootFamily::B, 2).unwrap();
        let (sub, reduced) = b2.sdiv().unwrap();
        assert!(reduced);
        assert_eq!(sub.members.len(), 8);

        let bc2 = family_truncation(RootFamily::BC, 2).unwrap();
        assert_eq!(bc2.len(), 12);
        let (sub, reduced) = bc2.sdiv().unwrap();
        assert!(!reduced);
        assert_eq!(sub.members.len(), 8);
        // What survives is the C2 shape: the doubled and mixed roots.
        assert!(sub.members.contains(&vec![rat(2), rat(0)]));
        assert!(!sub.members.contains(&vec![rat(1), rat(0)]));
    }

    #[test]
    fn sdiv_is_idempotent() {
        let bc2 = family_truncation(RootFamily::BC, 2).unwrap();
        let (sub, _) = bc2.sdiv().unwrap();
        // Build the C2 system out of the surviving roots and check it is
        // already reduced.
        let coroots: BTreeMap<RootVector, RootVector> = sub
            .members
            .iter()
            .map(|a| (a.clone(), bc2.coroot(a).unwrap().clone()))
            .collect();
        let c2 = AbstractRootSystem::new(2, sub.members.clone(), coroots).unwrap();
        let (again, reduced) = c2.sdiv().unwrap();
        assert!(reduced);
        assert_eq!(again.members, sub.members);
    }
}
