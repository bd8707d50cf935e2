//! The standard evaluation and the pre-model evaluation `|.|*`.

use super::evidence::{EvidenceSpec, Model, ModelError};
use super::oracle::Verdict;
use crate::algebra::{residuum, tnorm, TruthValue};
use crate::syntax::{JFormula, JustTerm};

/// Which clause interprets `t:phi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Semantics {
    /// `|t:phi| = E(t, phi)`.
    Standard,
    /// `|t:phi|* = E(t, phi) min |phi|*`.
    Star,
}

impl Model {
    /// `E(t, phi)`.
    pub fn evidence_value(&self, t: &JustTerm, phi: &JFormula) -> Result<TruthValue, ModelError> {
        match &self.evidence {
            EvidenceSpec::Finite(f) => Ok(f.get(t, phi).clone()),
            EvidenceSpec::AllOnes => Ok(TruthValue::one()),
            EvidenceSpec::Transparent => eval(self, phi),
            EvidenceSpec::XRooted(xr) => {
                if xr.x.is_one() {
                    return Ok(TruthValue::one());
                }
                match xr.oracle.decide_pair(t, phi) {
                    Verdict::Yes => Ok(TruthValue::one()),
                    Verdict::No => Ok(xr.x.clone()),
                    Verdict::Unknown => Err(ModelError::Undecided {
                        term: t.clone(),
                        formula: phi.clone(),
                    }),
                }
            }
        }
    }
}

fn evaluate(model: &Model, phi: &JFormula, sem: Semantics) -> Result<TruthValue, ModelError> {
    Ok(match phi {
        JFormula::Bottom => TruthValue::zero(),
        JFormula::Atom(i) => model.valuation.get(*i).clone(),
        JFormula::Implies(a, b) => {
            let va = evaluate(model, a, sem)?;
            // A false antecedent makes the consequent irrelevant, so no
            // evidence lookups are spent on it.
            if va.is_zero() {
                TruthValue::one()
            } else {
                residuum(&va, &evaluate(model, b, sem)?)
            }
        }
        JFormula::And(a, b) => {
            let va = evaluate(model, a, sem)?;
            if va.is_zero() {
                va
            } else {
                tnorm(&va, &evaluate(model, b, sem)?)
            }
        }
        JFormula::Holds(t, body) => {
            let e = model.evidence_value(t, body)?;
            match sem {
                Semantics::Standard => e,
                Semantics::Star if e.is_zero() => e,
                Semantics::Star => tnorm(&e, &evaluate(model, body, sem)?),
            }
        }
    })
}

/// `|phi|` in the model.
pub fn eval(model: &Model, phi: &JFormula) -> Result<TruthValue, ModelError> {
    evaluate(model, phi, Semantics::Standard)
}

/// `|phi|*` in the model.
pub fn eval_star(model: &Model, phi: &JFormula) -> Result<TruthValue, ModelError> {
    evaluate(model, phi, Semantics::Star)
}

pub fn eval_with(model: &Model, phi: &JFormula, sem: Semantics) -> Result<TruthValue, ModelError> {
    evaluate(model, phi, sem)
}

/// Infimum over a finite set; the empty set evaluates to 1.
pub fn eval_set<'a>(
    model: &Model,
    gamma: impl IntoIterator<Item = &'a JFormula>,
    sem: Semantics,
) -> Result<TruthValue, ModelError> {
    let mut acc = TruthValue::one();
    for phi in gamma {
        acc = tnorm(&acc, &evaluate(model, phi, sem)?);
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{FiniteEvidence, Valuation};
    use crate::syntax::parse_jformula;

    fn j(s: &str) -> JFormula {
        parse_jformula(s).unwrap()
    }
    fn r(n: i64, d: i64) -> TruthValue {
        TruthValue::ratio(n, d)
    }

    #[test]
    fn standard_examples() {
        let m = Model::new(
            EvidenceSpec::Finite(FiniteEvidence::new(r(1, 2))),
            Valuation::constant(r(1, 2))
                .with(1, r(1, 3))
                .with(2, r(2, 3)),
        );
        assert_eq!(eval(&m, &j("bot")).unwrap(), TruthValue::zero());
        assert_eq!(eval(&m, &j("p1 & p2")).unwrap(), r(1, 3));
        assert_eq!(eval(&m, &j("p2 -> p1")).unwrap(), r(1, 3));
        assert_eq!(eval(&m, &j("p1 -> p2")).unwrap(), TruthValue::one());
        assert_eq!(eval(&m, &j("x1:p1")).unwrap(), r(1, 2));
        assert_eq!(eval(&m, &j("~p1")).unwrap(), TruthValue::zero());
        assert_eq!(
            eval_set(&m, [], Semantics::Standard).unwrap(),
            TruthValue::one()
        );
        assert_eq!(
            eval_set(&m, [&j("p1"), &j("p2")], Semantics::Standard).unwrap(),
            r(1, 3)
        );
        assert_eq!(
            eval_set(&m, [&j("bot")], Semantics::Standard).unwrap(),
            TruthValue::zero()
        );
    }

    #[test]
    fn star_examples() {
        let m = Model::new(
            EvidenceSpec::Finite(FiniteEvidence::new(TruthValue::zero()).with(
                JustTerm::var(1),
                j("p1"),
                TruthValue::one(),
            )),
            Valuation::constant(r(1, 2)),
        );
        assert_eq!(eval_star(&m, &j("x1:p1")).unwrap(), r(1, 2));
        assert_eq!(eval(&m, &j("x1:p1")).unwrap(), TruthValue::one());
        let ones = Model::new(EvidenceSpec::AllOnes, Valuation::constant(r(1, 2)));
        assert_eq!(eval_star(&ones, &j("x1:bot")).unwrap(), TruthValue::zero());
    }

    #[test]
    fn transparent_reads_through() {
        let m = Model::new(EvidenceSpec::Transparent, Valuation::constant(r(1, 3)));
        assert_eq!(eval(&m, &j("x1:p1")).unwrap(), r(1, 3));
        assert_eq!(eval(&m, &j("x1:(x2:p1 -> p1)")).unwrap(), TruthValue::one());
    }
}
