//! x-rooted provability models, their crisp shifts, and the passage between
//! factive models and pre-models.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::classes::{check_conditions, Condition, Universe};
use super::eval::eval_star;
use super::evidence::{
    EvidenceSpec, FiniteEvidence, Model, ModelError, RootLogic, Valuation, XRootedEvidence,
};
use super::oracle::TheoremhoodOracle;
use crate::algebra::{tnorm, TruthValue};
use crate::syntax::{JFormula, JustTerm};

fn rooted(
    x: TruthValue,
    logic: RootLogic,
    oracle: Arc<TheoremhoodOracle>,
) -> Result<Model, ModelError> {
    let expected = logic.calculus();
    if *oracle.calculus() != expected {
        return Err(ModelError::OracleMismatch {
            expected: expected.to_string(),
            found: oracle.calculus().to_string(),
        });
    }
    Ok(Model::new(
        EvidenceSpec::XRooted(XRootedEvidence {
            x: x.clone(),
            logic,
            oracle,
        }),
        Valuation::constant(x),
    ))
}

/// The model with evidence 1 on provable pairs and `x` elsewhere, and every
/// atom valued `x`.
pub fn make_x_rooted(
    x: TruthValue,
    logic: RootLogic,
    oracle: Arc<TheoremhoodOracle>,
) -> Result<Model, ModelError> {
    if !x.is_interior() {
        return Err(ModelError::RootOutOfRange(x));
    }
    rooted(x, logic, oracle)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrispDirection {
    ToZero,
    ToOne,
}

/// The x-rooted construction with `x` moved to 0 or 1.
pub fn crisp_shift(
    direction: CrispDirection,
    logic: RootLogic,
    oracle: Arc<TheoremhoodOracle>,
) -> Result<Model, ModelError> {
    let x = match direction {
        CrispDirection::ToZero => TruthValue::zero(),
        CrispDirection::ToOne => TruthValue::one(),
    };
    rooted(x, logic, oracle)
}

/// A factive model is its own pre-model: both evaluations agree on it.
/// Fails unless the model passes the factivity condition (exactly, or on
/// `universe` for sampled evidence).
pub fn normal_to_pre(model: &Model, universe: Option<&Universe>) -> Result<Model, ModelError> {
    let verdict = check_conditions(model, &[Condition::Factivity], universe)?;
    match verdict.violation {
        None => Ok(model.clone()),
        Some(v) => Err(ModelError::Precondition(format!(
            "model is not factive: {v}"
        ))),
    }
}

/// Materializes `E'(t, phi) = E(t, phi) min |phi|*` on the override keys
/// and on every `t:phi` occurring in `universe`; everything else gets 0.
pub fn pre_to_normal(model: &Model, universe: &[JFormula]) -> Result<Model, ModelError> {
    let mut keys: BTreeSet<(JustTerm, JFormula)> = BTreeSet::new();
    match &model.evidence {
        EvidenceSpec::Finite(f) => keys.extend(f.entries().map(|(t, p, _)| (t.clone(), p.clone()))),
        EvidenceSpec::AllOnes => {}
        other => {
            return Err(ModelError::Precondition(format!(
                "pre-model transformation needs finite or all-ones evidence, got {}",
                other.kind()
            )))
        }
    }
    for phi in universe {
        phi.holds_subformulas(&mut keys);
    }
    let mut ev = FiniteEvidence::new(TruthValue::zero());
    for (t, phi) in keys {
        let e = model.evidence_value(&t, &phi)?;
        let v = if e.is_zero() {
            e
        } else {
            tnorm(&e, &eval_star(model, &phi)?)
        };
        ev.set(t, phi, v);
    }
    Ok(Model::new(
        EvidenceSpec::Finite(ev),
        model.valuation.clone(),
    ))
}
