//! Standard coordinate realizations of the classical locally finite families
//! A, B, C, D, BC at finite truncation scale, and the chain checks realizing
//! the direct-limit picture: each truncation embeds into the next as a
//! closed subsystem, irreducibility is reported per level, and the union of
//! the lower levels is exactly the top truncation cut to their span.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use thiserror::Error;

use super::{AbstractRootSystem, AxiomViolation, RootVector};
use crate::linalg::rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootFamily {
    A,
    B,
    C,
    D,
    BC,
}

impl std::fmt::Display for RootFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RootFamily::A => "A",
            RootFamily::B => "B",
            RootFamily::C => "C",
            RootFamily::D => "D",
            RootFamily::BC => "BC",
        };
        write!(f, "{s}")
    }
}

impl FromStr for RootFamily {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(RootFamily::A),
            "B" | "b" => Ok(RootFamily::B),
            "C" | "c" => Ok(RootFamily::C),
            "D" | "d" => Ok(RootFamily::D),
            "BC" | "bc" | "Bc" => Ok(RootFamily::BC),
            other => Err(format!("unknown root family {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unsupported parameters: {family}_{n}")]
    Unsupported { family: RootFamily, n: usize },
    #[error(transparent)]
    Axiom(#[from] AxiomViolation),
}

impl RootFamily {
    pub fn min_rank(&self) -> usize {
        match self {
            RootFamily::D => 2,
            _ => 1,
        }
    }
}

fn unit(dim: usize, i: usize, scale: i64) -> RootVector {
    let mut v = vec![rat(0); dim];
    v[i] = rat(scale);
    v
}

fn combine(dim: usize, i: usize, si: i64, j: usize, sj: i64) -> RootVector {
    let mut v = vec![rat(0); dim];
    v[i] = rat(si);
    v[j] = rat(sj);
    v
}

/// The standard coordinate truncation of a classical family:
/// A_n in dimension n+1 with roots `e_i - e_j`; B_n with `±e_i, ±e_i±e_j`;
/// C_n with `±2e_i, ±e_i±e_j`; D_n with `±e_i±e_j`; BC_n with all of
/// `±e_i, ±2e_i, ±e_i±e_j`.
pub fn family_truncation(family: RootFamily, n: usize) -> Result<AbstractRootSystem, FamilyError> {
    if n < family.min_rank() {
        return Err(FamilyError::Unsupported { family, n });
    }
    let mut roots: BTreeSet<RootVector> = BTreeSet::new();
    let mut coroots: BTreeMap<RootVector, RootVector> = BTreeMap::new();
    let mut push = |root: RootVector, coroot: RootVector| {
        coroots.insert(root.clone(), coroot);
        roots.insert(root);
    };
    let rank = if family == RootFamily::A { n + 1 } else { n };
    match family {
        RootFamily::A => {
            for i in 0..=n {
                for j in 0..=n {
                    if i != j {
                        let r = combine(rank, i, 1, j, -1);
                        push(r.clone(), r);
                    }
                }
            }
        }
        RootFamily::B | RootFamily::C | RootFamily::D | RootFamily::BC => {
            let short = matches!(family, RootFamily::B | RootFamily::BC);
            let long = matches!(family, RootFamily::C | RootFamily::BC);
            let mixed = true;
            for i in 0..n {
                for s in [1i64, -1] {
                    if short {
                        push(unit(rank, i, s), unit(rank, i, 2 * s));
                    }
                    if long {
                        push(unit(rank, i, 2 * s), unit(rank, i, s));
                    }
                }
            }
            if mixed && n >= 2 {
                for i in 0..n {
                    for j in (i + 1)..n {
                        for si in [1i64, -1] {
                            for sj in [1i64, -1] {
                                let r = combine(rank, i, si, j, sj);
                                push(r.clone(), r);
                            }
                        }
                    }
                }
            }
            if family == RootFamily::D && n < 2 {
                return Err(FamilyError::Unsupported { family, n });
            }
        }
    }
    Ok(AbstractRootSystem::new(rank, roots, coroots)?)
}

/// One inclusion step of a truncation chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    /// The lower level `n`; the step embeds level `n` into `n + 1`.
    pub n: usize,
    /// The zero-padded lower root set is a subset of the upper one.
    pub embeds: bool,
    /// The image is a closed subset of the upper system.
    pub closed: bool,
    /// The image is reflection-closed inside the upper system.
    pub subsystem: bool,
    /// The lower truncation is connected.
    pub lower_irreducible: bool,
}

/// Report of a full chain check for one family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub family: RootFamily,
    pub n_max: usize,
    pub steps: Vec<ChainStep>,
    /// The union of all lower levels equals the top truncation restricted
    /// to the union's span.
    pub union_matches_top: bool,
}

impl ChainReport {
    /// Structural chain properties: inclusions, closedness, subsystem
    /// property, and the direct-union identity. Irreducibility is reported
    /// per step, not folded in (D_2 is genuinely disconnected).
    pub fn pass(&self) -> bool {
        self.union_matches_top
            && self
                .steps
                .iter()
                .all(|s| s.embeds && s.closed && s.subsystem)
    }

    /// First level from which every lower truncation in the chain is
    /// irreducible.
    pub fn irreducible_from(&self) -> Option<usize> {
        let mut from = None;
        for s in &self.steps {
            if s.lower_irreducible {
                if from.is_none() {
                    from = Some(s.n);
                }
            } else {
                from = None;
            }
        }
        from
    }
}

fn pad(v: &RootVector, dim: usize) -> RootVector {
    let mut w = v.clone();
    w.resize(dim, rat(0));
    w
}

/// Embeds each truncation into the next by coordinate inclusion and checks
/// the directed-system properties up to `n_max`.
pub fn chain_check(family: RootFamily, n_max: usize) -> Result<ChainReport, FamilyError> {
    let n_min = family.min_rank();
    if n_max < n_min + 1 {
        return Err(FamilyError::Unsupported { family, n: n_max });
    }
    let systems: Vec<AbstractRootSystem> = (n_min..=n_max)
        .map(|n| family_truncation(family, n))
        .collect::<Result<_, _>>()?;
    let mut steps = Vec::new();
    for w in systems.windows(2) {
        let (low, high) = (&w[0], &w[1]);
        let image: BTreeSet<RootVector> =
            low.roots().iter().map(|r| pad(r, high.ambient_dim())).collect();
        let embeds = image.iter().all(|r| high.contains(r));
        let closed = embeds && high.is_closed_subset(&image);
        let subsystem = embeds && high.subsystem(image).is_ok();
        steps.push(ChainStep {
            n: level_of(family, low.ambient_dim()),
            embeds,
            closed,
            subsystem,
            lower_irreducible: low.is_irreducible(),
        });
    }
    // Union of the lower levels is the second-largest truncation; compare it
    // with the top truncation cut down to the union's span.
    let top = systems.last().expect("chain has at least two levels");
    let union: BTreeSet<RootVector> = systems[..systems.len() - 1]
        .iter()
        .flat_map(|s| s.roots().iter().map(|r| pad(r, top.ambient_dim())))
        .collect();
    let union_span = crate::linalg::Subspace::span(
        top.ambient_dim(),
        &union.iter().cloned().collect::<Vec<_>>(),
    );
    let cut: BTreeSet<RootVector> = top
        .roots()
        .iter()
        .filter(|r| union_span.contains_vector(r).unwrap_or(false))
        .cloned()
        .collect();
    let union_matches_top = union == cut;
    Ok(ChainReport {
        family,
        n_max,
        steps,
        union_matches_top,
    })
}

fn level_of(family: RootFamily, ambient: usize) -> usize {
    if family == RootFamily::A {
        ambient - 1
    } else {
        ambient
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_counts() {
        assert_eq!(family_truncation(RootFamily::A, 2).unwrap().len(), 6);
        assert_eq!(family_truncation(RootFamily::B, 2).unwrap().len(), 8);
        assert_eq!(family_truncation(RootFamily::C, 2).unwrap().len(), 8);
        assert_eq!(family_truncation(RootFamily::D, 2).unwrap().len(), 4);
        assert_eq!(family_truncation(RootFamily::BC, 2).unwrap().len(), 12);
        assert_eq!(family_truncation(RootFamily::BC, 1).unwrap().len(), 4);
        assert_eq!(family_truncation(RootFamily::B, 1).unwrap().len(), 2);
    }

    #[test]
    fn d2_splits_into_two_a1() {
        let d2 = family_truncation(RootFamily::D, 2).unwrap();
        assert_eq!(d2.len(), 4);
        assert_eq!(d2.connected_components().len(), 2);
    }

    #[test]
    fn unsupported_parameters() {
        assert!(matches!(
            family_truncation(RootFamily::D, 1),
            Err(FamilyError::Unsupported { .. })
        ));
        assert!(matches!(
            family_truncation(RootFamily::A, 0),
            Err(FamilyError::Unsupported { .. })
        ));
    }

    #[test]
    fn a_chain_is_clean() {
        let report = chain_check(RootFamily::A, 3).unwrap();
        assert!(report.pass());
        assert_eq!(report.steps.len(), 2);
        assert!(report.steps.iter().all(|s| s.lower_irreducible));
        assert_eq!(report.irreducible_from(), Some(1));
    }

    #[test]
    fn d_chain_reports_the_reducible_bottom() {
        let report = chain_check(RootFamily::D, 4).unwrap();
        assert!(report.pass());
        let first = &report.steps[0];
        assert_eq!(first.n, 2);
        assert!(!first.lower_irreducible);
        assert!(first.embeds && first.closed && first.subsystem);
        assert_eq!(report.irreducible_from(), Some(3));
    }

    #[test]
    fn bc_chain_is_clean() {
        let report = chain_check(RootFamily::BC, 2).unwrap();
        assert!(report.pass());
        assert!(report.steps.iter().all(|s| s.lower_irreducible));
    }
}
