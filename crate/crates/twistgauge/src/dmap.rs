//! The intertwiner `D` between twisted-classical and braided derivations.
//!
//! For a diagonal torus twist the general formula collapses to pure phase
//! bookkeeping: `D(X)(a_s) = w^{star_phase(w_X, s)} X(a_s)` on homogeneous
//! arguments. Since a derivation is stored as (plain action, weight, mode),
//! `D` is a mode flip and `D^{-1} ∘ D = id` holds on the nose.

use crate::derivations::{
    braided_bracket, bracket_twisted_f, module_act, module_act_f, Derivation, DerivationError,
    EvalMode,
};
use crate::grading::PhaseConvention;
use crate::polyalg::{Poly, RelationSet};
use crate::starprod::star;

/// Sends a plain (twisted-classical) derivation to the braided derivation
/// with the same plain action. Errors on inhomogeneous input.
pub fn d_apply(x: &Derivation) -> Result<Derivation, DerivationError> {
    if x.mode() != EvalMode::Plain {
        return Err(DerivationError::WrongMode { expected: EvalMode::Plain, got: x.mode() });
    }
    x.weight()
        .ok_or_else(|| DerivationError::Inhomogeneous(x.label().to_string()))?;
    let images = (0..x.table().len()).map(|i| x.image(i).clone()).collect();
    Ok(Derivation::from_parts(
        format!("D({})", x.label()),
        x.table().clone(),
        images,
        x.weight(),
        EvalMode::PhaseTwisted,
    ))
}

/// Inverse intertwiner: strips the phase rule, recovering the plain
/// derivation. Errors on inhomogeneous input.
pub fn d_inverse(x: &Derivation) -> Result<Derivation, DerivationError> {
    if x.mode() != EvalMode::PhaseTwisted {
        return Err(DerivationError::WrongMode {
            expected: EvalMode::PhaseTwisted,
            got: x.mode(),
        });
    }
    x.weight()
        .ok_or_else(|| DerivationError::Inhomogeneous(x.label().to_string()))?;
    let images = (0..x.table().len()).map(|i| x.image(i).clone()).collect();
    Ok(Derivation::from_parts(
        format!("Dinv({})", x.label()),
        x.table().clone(),
        images,
        x.weight(),
        EvalMode::Plain,
    ))
}

#[derive(Clone, Debug)]
pub struct DIsoFailure {
    pub check: &'static str,
    pub participants: Vec<String>,
}

#[derive(Clone, Debug, Default)]
pub struct DIsoReport {
    pub bracket_pairs: u64,
    pub module_samples: u64,
    pub roundtrips: u64,
    pub failures: Vec<DIsoFailure>,
}

impl DIsoReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verifies that `D` intertwines brackets and module structures:
///
/// * `D([X,Y]_F) = [D(X), D(Y)]_{braided}` on all pairs of the family,
/// * `D(b ._F X) = b . D(X)` on the supplied base samples,
/// * `(b . D(X))(a) = b . (D(X)(a))` (the defining module property),
/// * `D^{-1} ∘ D = id` and `D ∘ D^{-1} = id` on every family member.
pub fn verify_d_isomorphism(
    family: &[Derivation],
    base_samples: &[Poly],
    rel: &RelationSet,
    conv: PhaseConvention,
) -> Result<DIsoReport, DerivationError> {
    let mut report = DIsoReport::default();

    for x in family {
        report.roundtrips += 1;
        let dx = d_apply(x)?;
        let back = d_inverse(&dx)?;
        let same = (0..x.table().len()).all(|i| x.image(i) == back.image(i))
            && back.mode() == EvalMode::Plain;
        if !same {
            report.failures.push(DIsoFailure {
                check: "roundtrip D^{-1} D = id",
                participants: vec![x.label().to_string()],
            });
        }
    }

    for (i, x) in family.iter().enumerate() {
        for y in family.iter().skip(i) {
            report.bracket_pairs += 1;
            let lhs = d_apply(&bracket_twisted_f(x, y, conv)?)?;
            let rhs = braided_bracket(&d_apply(x)?, &d_apply(y)?, conv)?;
            if !lhs.equal_mod(&rhs, rel, conv) {
                report.failures.push(DIsoFailure {
                    check: "D intertwines brackets",
                    participants: vec![x.label().to_string(), y.label().to_string()],
                });
            }
        }
    }

    for b in base_samples {
        for x in family {
            report.module_samples += 1;
            let lhs = d_apply(&module_act_f(b, x, conv)?)?;
            let dx = d_apply(x)?;
            let rhs = module_act(b, &dx, conv)?;
            if !lhs.equal_mod(&rhs, rel, conv) {
                report.failures.push(DIsoFailure {
                    check: "D intertwines module structures",
                    participants: vec![b.to_string(), x.label().to_string()],
                });
            }
            // Defining property of the module action on braided derivations:
            // evaluating b . X~ on a generator equals the star product of b
            // with the evaluation.
            for i in 0..x.table().len() {
                let g = Poly::generator(x.table(), i);
                let direct = star(b, &dx.apply(&g, conv), conv);
                let stored = rhs.apply(&g, conv);
                if direct != stored {
                    report.failures.push(DIsoFailure {
                        check: "(b.X~)(a) = b.(X~(a))",
                        participants: vec![
                            b.to_string(),
                            x.label().to_string(),
                            x.table().generator(i).name.clone(),
                        ],
                    });
                    break;
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::Weight;
    use crate::polyalg::{Generator, GeneratorTable};
    use crate::scalars::Scalar;
    use std::sync::Arc;

    fn table() -> Arc<GeneratorTable> {
        Arc::new(GeneratorTable::new(vec![
            Generator { name: "z".into(), weight: Weight(1, -1), star_partner: 1, u_degree: 0, invertible: false },
            Generator { name: "zc".into(), weight: Weight(-1, 1), star_partner: 0, u_degree: 0, invertible: false },
        ]))
    }

    #[test]
    fn d_is_identity_on_zero_weight() {
        let t = table();
        let conv = PhaseConvention::calibrated();
        // H = (z d/dz - zc d/dzc)/2, weight (0,0)
        let h = Derivation::plain(
            "H",
            &t,
            vec![
                Poly::generator(&t, 0).scale(&Scalar::from_ratio(1, 2)),
                Poly::generator(&t, 1).scale(&Scalar::from_ratio(-1, 2)),
            ],
        );
        let dh = d_apply(&h).unwrap();
        let z2 = &Poly::generator(&t, 0) * &Poly::generator(&t, 0);
        assert_eq!(dh.apply(&z2, conv), h.apply(&z2, conv));
    }

    #[test]
    fn d_adds_phase_on_nonzero_weight() {
        let t = table();
        let conv = PhaseConvention::calibrated();
        // X: z -> zc, weight (-2, 2)
        let x = Derivation::plain("X", &t, vec![Poly::generator(&t, 1), Poly::zero(&t)]);
        let dx = d_apply(&x).unwrap();
        let z = Poly::generator(&t, 0);
        // star_phase((-2,2),(1,-1)) with the calibrated sign:
        // wedge((-2,2),(1,-1)) = 2 - 2 = 0 -> no phase here;
        // use z^2 (weight (2,-2)): still wedge = 0. Nonzero example needs a
        // second independent weight direction, covered by bundle tests.
        assert_eq!(dx.apply(&z, conv), x.apply(&z, conv));
        // roundtrip
        let back = d_inverse(&dx).unwrap();
        assert_eq!(back.apply(&z, conv), x.apply(&z, conv));
    }

    #[test]
    fn theta_zero_means_d_is_identity() {
        let t = table();
        let conv = PhaseConvention::calibrated();
        let x = Derivation::plain("X", &t, vec![Poly::generator(&t, 1), Poly::zero(&t)]);
        let dx = d_apply(&x).unwrap();
        let p = &Poly::generator(&t, 0) * &Poly::generator(&t, 1);
        assert_eq!(
            dx.apply(&p, conv).eval_at_omega_one(),
            x.apply(&p, conv).eval_at_omega_one()
        );
    }
}
