//! Per-proposition checks on a root datum: splitting-element uniqueness and
//! linearity, Killing-form identities, root strings, scaled-root bounds,
//! maximality of the toral subalgebra, and the reflection automorphisms
//! `theta_a = exp(ad e) exp(ad -f) exp(ad e)`.

use num_traits::{Signed, Zero};
use thiserror::Error;

use super::{RootDatum, TripleContext};
use crate::lie::Element;
use crate::linalg::{frac, rat, Matrix, Rational, Subspace};
use crate::toral::{Weight, WeightDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplittingViolation {
    #[error("root {root}: two different middle elements {first:?} and {second:?}")]
    DifferentH {
        root: Weight,
        first: Element,
        second: Element,
    },
    #[error("root {root}: h lies outside the span of the base splitting elements")]
    LinearityFailure { root: Weight, base: Vec<Weight> },
}

/// Verifies that the splitting element of each root does not depend on the
/// choice of `x` in the root space or of the feasible partner `y`, and that
/// splitting elements depend linearly on roots: if a root lies in the span
/// of one or two other roots, its `h` lies in the span of theirs.
pub fn splitting_elements_unique(rd: &RootDatum) -> Result<(), SplittingViolation> {
    let d = rd.decomposition();
    let l = rd.algebra();
    let ctx = TripleContext::new(d);
    for alpha in rd.roots() {
        let reference = rd.splitting_element(alpha).expect("datum covers roots");
        let space = rd.space_of(alpha).expect("roots have spaces");
        for v in space.basis_vectors() {
            let x = Element::new(v);
            let (sol, basis) = ctx
                .solve_raw(alpha, &x)
                .expect("admissible datum solves every basis vector");
            let y = super::combine_rows(&basis, &sol.particular);
            let h = l.bracket(&x, &y);
            if &h != reference {
                return Err(SplittingViolation::DifferentH {
                    root: alpha.clone(),
                    first: reference.clone(),
                    second: h,
                });
            }
            // Shifting y inside the solution set must not move h.
            for kvec in sol.kernel.basis_vectors() {
                let shift = l.bracket(&x, &super::combine_rows(&basis, &kvec));
                if !shift.is_zero() {
                    return Err(SplittingViolation::DifferentH {
                        root: alpha.clone(),
                        first: h.clone(),
                        second: &h + &shift,
                    });
                }
            }
        }
    }
    linearity_over_small_spans(rd)
}

/// Linearity of splitting elements over singleton and pair spans.
fn linearity_over_small_spans(rd: &RootDatum) -> Result<(), SplittingViolation> {
    let roots = rd.roots();
    let k = rd.toral().dim();
    let h_span = |base: &[&Weight]| {
        Subspace::span(
            rd.algebra().dim(),
            &base
                .iter()
                .map(|b| rd.splitting_element(b).unwrap().coords().to_vec())
                .collect::<Vec<_>>(),
        )
    };
    for alpha in roots {
        let h_alpha = rd.splitting_element(alpha).unwrap();
        for beta in roots {
            if beta == alpha {
                continue;
            }
            if in_span(alpha, &[beta], k)
                && !h_span(&[beta]).contains_vector(h_alpha.coords()).unwrap()
            {
                return Err(SplittingViolation::LinearityFailure {
                    root: alpha.clone(),
                    base: vec![beta.clone()],
                });
            }
        }
        for (i, b1) in roots.iter().enumerate() {
            for b2 in roots.iter().skip(i + 1) {
                if in_span(alpha, &[b1, b2], k)
                    && !h_span(&[b1, b2]).contains_vector(h_alpha.coords()).unwrap()
                {
                    return Err(SplittingViolation::LinearityFailure {
                        root: alpha.clone(),
                        base: vec![b1.clone(), b2.clone()],
                    });
                }
            }
        }
    }
    Ok(())
}

fn in_span(alpha: &Weight, base: &[&Weight], dim: usize) -> bool {
    Subspace::span(dim, &base.iter().map(|b| b.coords().to_vec()).collect::<Vec<_>>())
        .contains_vector(alpha.coords())
        .unwrap()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KillingViolation {
    #[error("the algebra is not semisimple")]
    NotSemisimple,
    #[error("the toral subalgebra is not maximal")]
    NotMaximalToral,
    #[error("kappa(h_b, h_b) = 0 for root {root}")]
    ZeroNorm { root: Weight },
    #[error("b(t) kappa(h_b,h_b) != 2 kappa(t,h_b) for root {root}, toral basis {toral_index}")]
    Identity { root: Weight, toral_index: usize },
    #[error("splitting elements span a {got}-dimensional subspace of the {expected}-dimensional toral subalgebra")]
    SpanDeficit { got: usize, expected: usize },
}

/// Killing-form identities for a semisimple algebra with a maximal toral
/// subalgebra: nonzero norms, `b(t) kappa(h_b,h_b) = 2 kappa(t,h_b)`, and
/// the splitting elements spanning the toral subalgebra.
pub fn killing_identities(rd: &RootDatum) -> Result<(), KillingViolation> {
    let l = rd.algebra();
    if !l.is_semisimple() {
        return Err(KillingViolation::NotSemisimple);
    }
    if !is_maximal_toral(rd.decomposition()) {
        return Err(KillingViolation::NotMaximalToral);
    }
    let toral = rd.toral();
    for beta in rd.roots() {
        let h_beta = rd.splitting_element(beta).unwrap();
        let norm = l.killing_form(h_beta, h_beta);
        if norm.is_zero() {
            return Err(KillingViolation::ZeroNorm { root: beta.clone() });
        }
        for (i, t) in toral.chosen_basis().iter().enumerate() {
            let lhs = &beta.coords()[i] * &norm;
            let rhs = rat(2) * l.killing_form(t, h_beta);
            if lhs != rhs {
                return Err(KillingViolation::Identity {
                    root: beta.clone(),
                    toral_index: i,
                });
            }
        }
    }
    let span = Subspace::span(
        l.dim(),
        &rd.splitting_elements()
            .map(|(_, h)| h.coords().to_vec())
            .collect::<Vec<_>>(),
    );
    if &span != toral.space() {
        return Err(KillingViolation::SpanDeficit {
            got: span.dim(),
            expected: toral.dim(),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootStringError {
    #[error("{0} is not a root of the datum")]
    NotARoot(Weight),
    #[error("root {0} is not integrable")]
    NotIntegrable(Weight),
    #[error("pairing {beta}({alpha}) is not an integer: {value}")]
    NonIntegralPairing {
        beta: Weight,
        alpha: Weight,
        value: Rational,
    },
    #[error("string of {beta} through {alpha} is not an interval: {ks:?}")]
    NotAnInterval {
        beta: Weight,
        alpha: Weight,
        ks: Vec<i64>,
    },
    #[error("reflection of {beta} along {alpha} escapes the root system")]
    ReflectionEscapes { beta: Weight, alpha: Weight },
}

/// All integers `k` with `beta + k alpha` a root or zero, sorted. The
/// postconditions — the list is a contiguous interval and the reflection
/// `beta - beta(h_alpha) alpha` stays in `R` — are verified before returning.
pub fn root_string(
    rd: &RootDatum,
    beta: &Weight,
    alpha: &Weight,
) -> Result<Vec<i64>, RootStringError> {
    if !rd.is_root(beta) {
        return Err(RootStringError::NotARoot(beta.clone()));
    }
    if !rd.is_root(alpha) {
        return Err(RootStringError::NotARoot(alpha.clone()));
    }
    if !rd.is_integrable(alpha) {
        return Err(RootStringError::NotIntegrable(alpha.clone()));
    }
    let mut ks = Vec::new();
    let k_dim = rd.toral().dim();
    let mut candidates: Vec<Weight> = rd.roots().to_vec();
    candidates.push(Weight::zero(k_dim));
    for gamma in &candidates {
        let delta = gamma - beta;
        if let Some(k) = rational_multiple(&delta, alpha) {
            if k.is_integer() {
                ks.push(i64::try_from(k.to_integer()).expect("desk-scale string"));
            }
        }
    }
    ks.sort_unstable();
    ks.dedup();
    let contiguous = ks.windows(2).all(|w| w[1] == w[0] + 1);
    if !contiguous {
        return Err(RootStringError::NotAnInterval {
            beta: beta.clone(),
            alpha: alpha.clone(),
            ks,
        });
    }
    let p = rd.pairing(beta, alpha);
    if !p.is_integer() {
        return Err(RootStringError::NonIntegralPairing {
            beta: beta.clone(),
            alpha: alpha.clone(),
            value: p,
        });
    }
    // The reflection of a root is never zero, so membership in R is exact.
    let reflected = beta - &alpha.scale(&p);
    if !rd.is_root(&reflected) {
        return Err(RootStringError::ReflectionEscapes {
            beta: beta.clone(),
            alpha: alpha.clone(),
        });
    }
    Ok(ks)
}

/// `delta = k * alpha` for a unique rational `k`, if any (`delta` may be 0).
fn rational_multiple(delta: &Weight, alpha: &Weight) -> Option<Rational> {
    let i = alpha
        .coords()
        .iter()
        .position(|c| !c.is_zero())
        .expect("roots are nonzero");
    let k = &delta.coords()[i] / &alpha.coords()[i];
    if delta == &alpha.scale(&k) {
        Some(k)
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Loc5Violation {
    #[error(transparent)]
    String(#[from] RootStringError),
    #[error("[L_a, L_b] = 0 although a, b, a+b are roots ({alpha}, {beta})")]
    VanishingBracket { alpha: Weight, beta: Weight },
    #[error("sign rule fails for beta {beta}, alpha {alpha}")]
    SignRule { beta: Weight, alpha: Weight },
    #[error("{factor} * {root} is a root although the factor is outside {{±1, ±1/2, ±2}}")]
    ScaledRoot { root: Weight, factor: Rational },
}

/// The sl2-module-theory suite over all root pairs: integrality of pairings,
/// reflections staying in `R`, strings being intervals, nonvanishing of
/// `[L_a, L_b]` when `a+b` is a root, the sign rule, and the scaled-root
/// bound. The first violation is reported with its pair.
pub fn loc5_suite(rd: &RootDatum) -> Result<(), Loc5Violation> {
    let l = rd.algebra();
    for alpha in rd.roots() {
        for beta in rd.roots() {
            root_string(rd, beta, alpha)?;
            let p = rd.pairing(beta, alpha);
            // Sign rule.
            if p.is_positive() {
                let down = beta - alpha;
                if !(down.is_zero() || rd.is_root(&down)) {
                    return Err(Loc5Violation::SignRule {
                        beta: beta.clone(),
                        alpha: alpha.clone(),
                    });
                }
            }
            if p.is_negative() {
                let up = beta + alpha;
                if !(up.is_zero() || rd.is_root(&up)) {
                    return Err(Loc5Violation::SignRule {
                        beta: beta.clone(),
                        alpha: alpha.clone(),
                    });
                }
            }
            // Nonvanishing bracket when the sum is a root.
            let sum = alpha + beta;
            if rd.is_root(&sum) {
                let sa = rd.space_of(alpha).unwrap();
                let sb = rd.space_of(beta).unwrap();
                let image = crate::lie::bracket_span(l, sa, sb);
                if image.is_zero() {
                    return Err(Loc5Violation::VanishingBracket {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                    });
                }
            }
        }
    }
    scaled_root_check(rd)?;
    Ok(())
}

/// For every root `a`, the set `{k : k a in R}` is inside `{±1, ±1/2, ±2}`.
pub fn scaled_root_check(rd: &RootDatum) -> Result<(), Loc5Violation> {
    let allowed = [rat(1), rat(-1), rat(2), rat(-2), frac(1, 2), frac(-1, 2)];
    for alpha in rd.roots() {
        for gamma in rd.roots() {
            if let Some(k) = rational_multiple(gamma, alpha) {
                if !allowed.contains(&k) {
                    return Err(Loc5Violation::ScaledRoot {
                        root: alpha.clone(),
                        factor: k,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Maximality criterion: the zero weight space coincides with the toral
/// subalgebra. Sufficient: any toral subalgebra containing `h` centralizes
/// `h`, hence lies in `L_0 = h`.
pub fn is_maximal_toral(d: &WeightDecomposition) -> bool {
    d.zero_space() == d.toral().space()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThetaError {
    #[error("{0} is not a root of the datum")]
    NotARoot(Weight),
    #[error("root {0} is not integrable")]
    NotIntegrable(Weight),
    #[error("theta of {alpha} does not map the {beta} space onto the reflected space")]
    ReflectionMismatch { alpha: Weight, beta: Weight },
}

/// The automorphism `theta_a = exp(ad e) exp(ad -f) exp(ad e)` for the kept
/// triple of an integrable root. Before returning, checks that it maps each
/// weight space onto the space of the reflected weight, exactly.
pub fn theta_automorphism(rd: &RootDatum, alpha: &Weight) -> Result<Matrix, ThetaError> {
    if !rd.is_root(alpha) {
        return Err(ThetaError::NotARoot(alpha.clone()));
    }
    if !rd.is_integrable(alpha) {
        return Err(ThetaError::NotIntegrable(alpha.clone()));
    }
    let l = rd.algebra();
    let t = rd.triple(alpha).expect("datum covers roots");
    let exp_e = l.exp_ad(&t.e).expect("integrable witnesses are nilpotent");
    let exp_mf = l.exp_ad(&-&t.f).expect("integrable witnesses are nilpotent");
    let theta = &(&exp_e * &exp_mf) * &exp_e;
    for (w, space) in rd.decomposition().spaces() {
        let p = rd.pairing(w, alpha);
        let target_weight = w - &alpha.scale(&p);
        let images: Vec<Vec<Rational>> = space
            .basis_vectors()
            .into_iter()
            .map(|v| theta.mul_vec(&v))
            .collect();
        let image = Subspace::span(l.dim(), &images);
        let ok = match rd.decomposition().space_of(&target_weight) {
            Some(target) => &image == target,
            None => false,
        };
        if !ok {
            return Err(ThetaError::ReflectionMismatch {
                alpha: alpha.clone(),
                beta: w.clone(),
            });
        }
    }
    Ok(theta)
}

#[cfg(test)]
mod tests {
    use super::super::{is_admissible, root_datum, SamplingOptions};
    use super::*;
    use crate::lie::{build_classical, Family, LieAlgebra};
    use crate::toral::{weight_decomposition, ToralSubalgebra};
    use std::sync::Arc;

    fn datum(family: Family, n: usize) -> RootDatum {
        let (_, t) = build_classical(family, n).unwrap();
        let d = weight_decomposition(&t).unwrap();
        is_admissible(&d, &SamplingOptions::default()).unwrap()
    }

    #[test]
    fn sl2_unique_splitting() {
        let rd = datum(Family::Sl, 2);
        assert_eq!(splitting_elements_unique(&rd), Ok(()));
    }

    #[test]
    fn sl3_splitting_additivity() {
        let rd = datum(Family::Sl, 3);
        assert_eq!(splitting_elements_unique(&rd), Ok(()));
        // h_{a1+a2} = h_{a1} + h_{a2}: find the roots by their spaces.
        let l = rd.algebra().clone();
        let idx = |label: &str| l.labels().iter().position(|s| s == label).unwrap();
        let w_of = |label: &str| {
            rd.decomposition()
                .weight_of_vector(l.basis_element(idx(label)).coords())
                .unwrap()
        };
        let a1 = w_of("E(1,2)");
        let a2 = w_of("E(2,3)");
        let a12 = w_of("E(1,3)");
        assert_eq!(&a1 + &a2, a12);
        let h1 = rd.splitting_element(&a1).unwrap();
        let h2 = rd.splitting_element(&a2).unwrap();
        let h12 = rd.splitting_element(&a12).unwrap();
        assert_eq!(&(h1 + h2), h12);
    }

    #[test]
    fn block_splitting_elements_stay_in_their_block() {
        let (a, _) = build_classical(Family::Sl, 2).unwrap();
        let (b, _) = build_classical(Family::Sl, 2).unwrap();
        let sum = Arc::new(a.direct_sum(&b));
        let toral = ToralSubalgebra::new(
            Arc::clone(&sum),
            vec![sum.basis_element(0), sum.basis_element(3)],
        )
        .unwrap();
        let d = weight_decomposition(&toral).unwrap();
        let rd = is_admissible(&d, &SamplingOptions::default()).unwrap();
        for alpha in rd.roots() {
            let h = rd.splitting_element(alpha).unwrap();
            let first_block_nonzero = h.coords()[..3].iter().any(|c| !c.is_zero());
            let second_block_nonzero = h.coords()[3..].iter().any(|c| !c.is_zero());
            assert!(first_block_nonzero != second_block_nonzero);
        }
        assert_eq!(splitting_elements_unique(&rd), Ok(()));
    }

    #[test]
    fn killing_identities_sl2_sl3_so5() {
        for (f, n) in [(Family::Sl, 2), (Family::Sl, 3), (Family::SoOdd, 2)] {
            let rd = datum(f, n);
            assert_eq!(killing_identities(&rd), Ok(()));
        }
    }

    #[test]
    fn killing_identities_reject_non_semisimple() {
        let l = Arc::new(crate::lie::tests::sl2_efh().direct_sum(&LieAlgebra::abelian(1)));
        let toral = ToralSubalgebra::new(
            Arc::clone(&l),
            vec![l.basis_element(2), l.basis_element(3)],
        )
        .unwrap();
        let d = weight_decomposition(&toral).unwrap();
        let rd = root_datum(&d, &SamplingOptions::default()).unwrap();
        assert_eq!(killing_identities(&rd), Err(KillingViolation::NotSemisimple));
    }

    #[test]
    fn sl2_root_string() {
        let rd = datum(Family::Sl, 2);
        let alpha = rd.roots().iter().find(|r| !r.is_zero()).unwrap().clone();
        // String of alpha through alpha: alpha - 2 alpha = -alpha,
        // alpha - alpha = 0, alpha itself; 2 alpha is not a root.
        let ks = root_string(&rd, &alpha, &alpha).unwrap();
        assert_eq!(ks, vec![-2, -1, 0]);
    }

    #[test]
    fn sl3_root_string() {
        let rd = datum(Family::Sl, 3);
        let l = rd.algebra().clone();
        let idx = |label: &str| l.labels().iter().position(|s| s == label).unwrap();
        let w_of = |label: &str| {
            rd.decomposition()
                .weight_of_vector(l.basis_element(idx(label)).coords())
                .unwrap()
        };
        let a1 = w_of("E(1,2)");
        let a2 = w_of("E(2,3)");
        assert_eq!(root_string(&rd, &a1, &a2).unwrap(), vec![0, 1]);
    }

    #[test]
    fn loc5_suite_passes_on_b2() {
        let rd = datum(Family::SoOdd, 2);
        assert_eq!(rd.roots().len(), 8);
        assert_eq!(loc5_suite(&rd), Ok(()));
    }

    #[test]
    fn maximality_criterion() {
        let rd = datum(Family::Sl, 3);
        assert!(is_maximal_toral(rd.decomposition()));
        // Restricting to the H1 line leaves L_0 = the full Cartan, which is
        // strictly larger; that pair is not even admissible.
        let l = rd.algebra().clone();
        let line = ToralSubalgebra::new(Arc::clone(&l), vec![l.basis_element(0)]).unwrap();
        let d = weight_decomposition(&line).unwrap();
        assert!(!is_maximal_toral(&d));
        assert!(matches!(
            root_datum(&d, &SamplingOptions::default()),
            Err(super::super::RootDatumError::NoSl2Triple { .. })
        ));
    }

    #[test]
    fn theta_swaps_root_spaces_in_sl2() {
        let rd = datum(Family::Sl, 2);
        let alpha = Weight::new(vec![rat(2)]);
        let theta = theta_automorphism(&rd, &alpha).unwrap();
        let l = rd.algebra().clone();
        // h = H1 goes to -H1.
        assert_eq!(
            theta.mul_vec(l.basis_element(0).coords()),
            vec![rat(-1), rat(0), rat(0)]
        );
    }

    #[test]
    fn theta_moves_a2_spaces_by_reflection() {
        let rd = datum(Family::Sl, 3);
        let l = rd.algebra().clone();
        let idx = |label: &str| l.labels().iter().position(|s| s == label).unwrap();
        let w_of = |label: &str| {
            rd.decomposition()
                .weight_of_vector(l.basis_element(idx(label)).coords())
                .unwrap()
        };
        let a1 = w_of("E(1,2)");
        let _a2 = w_of("E(2,3)");
        let theta = theta_automorphism(&rd, &a1).unwrap();
        // s_{a1}(a2) = a1 + a2, so L_{a2} lands on L_{a1+a2} = span E(1,3).
        let image = theta.mul_vec(l.basis_element(idx("E(2,3)")).coords());
        let target = Subspace::span(l.dim(), &[l.basis_element(idx("E(1,3)")).coords().to_vec()]);
        assert!(target.contains_vector(&image).unwrap());
    }

    #[test]
    fn theta_squared_preserves_spaces() {
        let rd = datum(Family::Sl, 3);
        let alpha = rd.roots()[0].clone();
        let theta = theta_automorphism(&rd, &alpha).unwrap();
        let theta2 = &theta * &theta;
        for (_, space) in rd.decomposition().spaces() {
            let images: Vec<Vec<Rational>> = space
                .basis_vectors()
                .into_iter()
                .map(|v| theta2.mul_vec(&v))
                .collect();
            assert_eq!(&Subspace::span(rd.algebra().dim(), &images), space);
        }
    }
}
