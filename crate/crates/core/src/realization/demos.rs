use std::sync::Arc;

use super::{decidable_universe, Certificates, DemoError, DemoKind, Demonstration, Inputs, Valued};
use crate::algebra::TruthValue;
use crate::calculus::{derived, internalize, JCalculus, JProof, ProofBuilder};
use crate::gen::Generator;
use crate::models::{
    check_cs_respect, crisp_shift, eval_with, make_x_rooted, CrispDirection, Decision,
    EvidenceSpec, Model, ModelClass, Refutation, RootLogic, Semantics, TheoremhoodOracle,
    Valuation,
};
use crate::syntax::{JFormula, JustTerm};

/// Sampling parameters shared by all demonstrations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DemoOptions {
    pub seed: u64,
    /// Minimum number of sampled `(t, phi)` pairs.
    pub universe_size: usize,
    /// Constant chains checked against the total specification.
    pub cs_chains: usize,
}

impl Default for DemoOptions {
    fn default() -> Self {
        DemoOptions {
            seed: 20_240_617,
            universe_size: 200,
            cs_chains: 20,
        }
    }
}

/// `~~t:phi -> s:~~phi`.
pub fn z_instance(t: &JustTerm, s: &JustTerm, phi: &JFormula) -> JFormula {
    JFormula::implies(
        JFormula::neg(JFormula::neg(JFormula::holds(t.clone(), phi.clone()))),
        JFormula::holds(s.clone(), JFormula::neg(JFormula::neg(phi.clone()))),
    )
}

fn atom_refutation(k: u32, phi: JFormula, class: ModelClass, semantics: Semantics) -> Refutation {
    Refutation {
        formula: phi,
        model: Model::new(
            EvidenceSpec::AllOnes,
            Valuation::default().with(k, TruthValue::zero()),
        ),
        class,
        semantics,
    }
}

/// Supplies the refutations of `target` and `~~target`: explicit ones for
/// atoms, searched ones otherwise.
fn seed_target(
    oracle: &TheoremhoodOracle,
    root: RootLogic,
    target: &JFormula,
) -> Result<(), DemoError> {
    let (class, semantics) = match root {
        RootLogic::Gj45Tcs => (ModelClass::GM45, Semantics::Standard),
        RootLogic::GlpTcs => (ModelClass::GM4, Semantics::Star),
    };
    let nn = JFormula::neg(JFormula::neg(target.clone()));
    if let JFormula::Atom(k) = target {
        oracle.add_refutation(atom_refutation(*k, target.clone(), class, semantics))?;
        oracle.add_refutation(atom_refutation(*k, nn.clone(), class, semantics))?;
    }
    for f in [target, &nn] {
        if !matches!(oracle.decide(f), Decision::NonTheorem(_)) {
            return Err(DemoError::TargetNotRefuted(f.clone()));
        }
    }
    Ok(())
}

fn cs_sample(root: RootLogic, opts: &DemoOptions) -> Vec<JFormula> {
    let mut g = Generator::new(opts.seed ^ 0x00c5_c5c5).with_alphabet(3, 3, 3);
    (0..opts.cs_chains)
        .map(|_| g.cs_chain(root.calculus().logic, 3))
        .collect()
}

struct Run {
    name: String,
    kind: DemoKind,
    root: RootLogic,
    inputs: Inputs,
    semantics: Semantics,
    class: ModelClass,
    instances: Vec<JFormula>,
    intermediates: Vec<JFormula>,
    conclusion: String,
}

fn assemble(
    run: Run,
    model: &Model,
    oracle: &TheoremhoodOracle,
    opts: &DemoOptions,
) -> Result<Demonstration, DemoError> {
    let value = |f: &JFormula| -> Result<Valued, DemoError> {
        Ok(Valued {
            formula: f.clone(),
            value: eval_with(model, f, run.semantics)?,
        })
    };
    let instances: Vec<Valued> = run.instances.iter().map(value).collect::<Result<_, _>>()?;
    let intermediates: Vec<Valued> = run
        .intermediates
        .iter()
        .map(value)
        .collect::<Result<_, _>>()?;
    let mut formulas = run.instances.clone();
    formulas.extend(run.intermediates.iter().cloned());
    let logic = run.root.calculus().logic;
    let (universe, class_verdict) = decidable_universe(
        model,
        run.class,
        logic,
        &formulas,
        opts.seed,
        opts.universe_size,
    )?;
    let sample = cs_sample(run.root, opts);
    let cs_verdict = check_cs_respect(model, &run.root.calculus(), &sample)?;
    let evaluation = instances[0].value.clone();
    Ok(Demonstration {
        name: run.name,
        kind: run.kind,
        root: run.root.name().to_string(),
        inputs: run.inputs,
        semantics: run.semantics,
        model: model.to_string(),
        class: run.class,
        class_verdict,
        cs_verdict,
        instances,
        intermediates,
        evaluation,
        conclusion: run.conclusion,
        seed: opts.seed,
        universe: universe.iter().cloned().collect(),
        cs_sample: sample,
        certificates: Certificates::from_oracle(oracle),
    })
}

fn expect_counterexample(demo: &Demonstration) -> Result<(), DemoError> {
    if !demo.class_verdict.is_accept() {
        return Err(DemoError::Inconsistent(format!(
            "model leaves {}: {}",
            demo.class, demo.class_verdict
        )));
    }
    if !demo.cs_verdict.is_accept() {
        return Err(DemoError::Inconsistent(format!(
            "model violates the specification: {}",
            demo.cs_verdict
        )));
    }
    if demo.evaluation != demo.inputs.x {
        return Err(DemoError::Inconsistent(format!(
            "instance evaluates to {}, not {}",
            demo.evaluation, demo.inputs.x
        )));
    }
    Ok(())
}

/// Evaluates `~~t:phi -> s:~~phi` in the x-rooted GJ45 model, where `phi`
/// is `target` (any formula whose double negation the oracle refutes).
pub fn demo_z_failure_no_factivity(
    x: TruthValue,
    t: &JustTerm,
    s: &JustTerm,
    target: &JFormula,
    opts: &DemoOptions,
) -> Result<Demonstration, DemoError> {
    let root = RootLogic::Gj45Tcs;
    if !x.is_interior() {
        return Err(crate::models::ModelError::RootOutOfRange(x).into());
    }
    let oracle = Arc::new(TheoremhoodOracle::searching(root.calculus()));
    seed_target(&oracle, root, target)?;
    let model = make_x_rooted(x.clone(), root, oracle.clone())?;
    let instance = z_instance(t, s, target);
    let holds_t = JFormula::holds(t.clone(), target.clone());
    let run = Run {
        name: format!("z_failure[{t}, {s}]"),
        kind: DemoKind::ZFailure,
        root,
        inputs: Inputs { x: x.clone(), t: t.clone(), s: s.clone(), target: target.clone() },
        semantics: Semantics::Standard,
        class: ModelClass::GM45,
        intermediates: vec![
            holds_t.clone(),
            JFormula::neg(JFormula::neg(holds_t)),
            JFormula::holds(s.clone(), JFormula::neg(JFormula::neg(target.clone()))),
        ],
        instances: vec![instance.clone()],
        conclusion: format!(
            "`{instance}` takes value {x} < 1 in a {}-model respecting the total specification, so it is not a theorem of {root}",
            ModelClass::GM45
        ),
    };
    let demo = assemble(run, &model, &oracle, opts)?;
    expect_counterexample(&demo)?;
    Ok(demo)
}

/// Evaluates `~~t:p -> s:~~p` under the pre-model evaluation in the
/// x-rooted GLP model. Only atoms are accepted as `target`.
pub fn demo_z_failure_with_factivity(
    x: TruthValue,
    t: &JustTerm,
    s: &JustTerm,
    target: &JFormula,
    opts: &DemoOptions,
) -> Result<Demonstration, DemoError> {
    let root = RootLogic::GlpTcs;
    if !matches!(target, JFormula::Atom(_)) {
        return Err(DemoError::NonAtomTarget(target.clone()));
    }
    if !x.is_interior() {
        return Err(crate::models::ModelError::RootOutOfRange(x).into());
    }
    let oracle = Arc::new(TheoremhoodOracle::searching(root.calculus()));
    seed_target(&oracle, root, target)?;
    let model = make_x_rooted(x.clone(), root, oracle.clone())?;
    let instance = z_instance(t, s, target);
    let nn = JFormula::neg(JFormula::neg(target.clone()));
    let run = Run {
        name: format!("z_failure_factive[{t}, {s}]"),
        kind: DemoKind::ZFailureFactive,
        root,
        inputs: Inputs { x: x.clone(), t: t.clone(), s: s.clone(), target: target.clone() },
        semantics: Semantics::Star,
        class: ModelClass::GM4,
        intermediates: vec![JFormula::holds(t.clone(), target.clone()), nn.clone(), JFormula::holds(s.clone(), nn)],
        instances: vec![instance.clone()],
        conclusion: format!(
            "`{instance}` takes pre-model value {x} < 1 in a {}-model respecting the total specification, so it is not a theorem of {root}",
            ModelClass::GM4
        ),
    };
    let demo = assemble(run, &model, &oracle, opts)?;
    expect_counterexample(&demo)?;
    Ok(demo)
}

/// The proof of `phi -> ~~phi` and its internalization `r:(phi -> ~~phi)`.
fn dn_witness(calc: &JCalculus, phi: &JFormula) -> Result<(JProof, JProof, JustTerm), DemoError> {
    let mut b = ProofBuilder::new(calc.clone());
    derived::double_negation_intro(&mut b, phi);
    let proof = b.finish();
    let lifted = internalize(&proof).map_err(|e| DemoError::Witness(e.to_string()))?;
    Ok((proof, lifted.proof, lifted.term))
}

/// Moves `x` of the GJ45 construction to 1 or 0 and shows that realized
/// (Z) instances become valid.
///
/// Towards 1 every instance is valid; three are evaluated. Towards 0 the
/// second term is `r*t` with `r` internalizing `phi -> ~~phi` for the
/// theorem `phi = bot -> p1`: once with `t = c1`, where `|- t:phi`, and once
/// with `t = x1`, where the antecedent vanishes.
pub fn demo_crisp_recovery(
    direction: CrispDirection,
    opts: &DemoOptions,
) -> Result<Demonstration, DemoError> {
    let root = RootLogic::Gj45Tcs;
    let calc = root.calculus();
    let oracle = Arc::new(TheoremhoodOracle::searching(calc.clone()));
    let model = crisp_shift(direction, root, oracle.clone())?;
    let (p1, p2) = (JFormula::atom(1), JFormula::atom(2));
    let (x1, x2, x3, c1) = (
        JustTerm::var(1),
        JustTerm::var(2),
        JustTerm::var(3),
        JustTerm::constant(1),
    );
    let run = match direction {
        CrispDirection::ToOne => {
            let both = JFormula::and(p1.clone(), p2.clone());
            Run {
                name: "crisp_to_one".into(),
                kind: DemoKind::CrispToOne,
                root,
                inputs: Inputs { x: TruthValue::one(), t: x1.clone(), s: x2.clone(), target: p1.clone() },
                semantics: Semantics::Standard,
                class: ModelClass::GM45,
                instances: vec![
                    z_instance(&x1, &x2, &p1),
                    z_instance(&c1, &x3, &p2),
                    z_instance(&JustTerm::sum(x1.clone(), x2.clone()), &JustTerm::bang(x1.clone()), &both),
                ],
                intermediates: vec![],
                conclusion: "with x = 1 every evidence value and atom is 1, so each realized instance is valid".into(),
            }
        }
        CrispDirection::ToZero => {
            let phi = JFormula::implies(JFormula::Bottom, p1.clone());
            let (dn, lifted, r) = dn_witness(&calc, &phi)?;
            oracle.add_theorem(dn)?;
            oracle.add_theorem(lifted)?;
            let rc1 = JustTerm::app(r.clone(), c1.clone());
            let rx1 = JustTerm::app(r.clone(), x1.clone());
            let nn = JFormula::neg(JFormula::neg(phi.clone()));
            Run {
                name: "crisp_to_zero".into(),
                kind: DemoKind::CrispToZero,
                root,
                inputs: Inputs { x: TruthValue::zero(), t: c1.clone(), s: rc1.clone(), target: phi.clone() },
                semantics: Semantics::Standard,
                // The (?) condition fails once x = 0, so only the
                // conditions up to positive introspection are checked.
                class: ModelClass::GM4,
                instances: vec![z_instance(&c1, &rc1, &phi), z_instance(&x1, &rx1, &phi)],
                intermediates: vec![
                    JFormula::holds(c1.clone(), phi.clone()),
                    JFormula::holds(rc1, nn),
                    JFormula::holds(x1.clone(), phi.clone()),
                    JFormula::neg(JFormula::neg(JFormula::holds(x1, phi.clone()))),
                ],
                conclusion: format!(
                    "with x = 0 and r = {r} internalizing `{phi} -> ~~({phi})`, both realized instances are valid"
                ),
            }
        }
    };
    let demo = assemble(run, &model, &oracle, opts)?;
    if let Some(v) = demo.instances.iter().find(|v| !v.value.is_one()) {
        return Err(DemoError::Inconsistent(format!(
            "`{}` evaluates to {}",
            v.formula, v.value
        )));
    }
    Ok(demo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realization::recheck;

    fn quick() -> DemoOptions {
        DemoOptions {
            universe_size: 40,
            cs_chains: 5,
            ..DemoOptions::default()
        }
    }

    #[test]
    fn z_failure_at_one_half() {
        let d = demo_z_failure_no_factivity(
            TruthValue::ratio(1, 2),
            &JustTerm::var(1),
            &JustTerm::var(2),
            &JFormula::atom(1),
            &quick(),
        )
        .unwrap();
        assert_eq!(d.evaluation, TruthValue::ratio(1, 2));
        let inter: Vec<_> = d.intermediates.iter().map(|v| v.value.clone()).collect();
        assert_eq!(
            inter,
            [
                TruthValue::ratio(1, 2),
                TruthValue::one(),
                TruthValue::ratio(1, 2)
            ]
        );
        recheck(&d).unwrap();
    }

    #[test]
    fn factive_needs_atoms() {
        let err = demo_z_failure_with_factivity(
            TruthValue::ratio(1, 2),
            &JustTerm::var(1),
            &JustTerm::var(2),
            &JFormula::neg(JFormula::atom(1)),
            &quick(),
        );
        assert!(matches!(err, Err(DemoError::NonAtomTarget(_))));
    }

    #[test]
    fn boundary_x_is_rejected() {
        let err = demo_z_failure_no_factivity(
            TruthValue::one(),
            &JustTerm::var(1),
            &JustTerm::var(2),
            &JFormula::atom(1),
            &quick(),
        );
        assert!(err.is_err());
    }

    #[test]
    fn crisp_demos_recheck() {
        for dir in [CrispDirection::ToOne, CrispDirection::ToZero] {
            let d = demo_crisp_recovery(dir, &quick()).unwrap();
            assert!(d.instances.iter().all(|v| v.value.is_one()));
            recheck(&d).unwrap();
        }
    }
}
