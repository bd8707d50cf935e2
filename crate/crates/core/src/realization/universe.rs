//! Sampling windows for class checks on oracle-backed models.

use std::collections::BTreeSet;

use super::DemoError;
use crate::calculus::JLogic;
use crate::gen::Generator;
use crate::models::{check_model_class, ClassVerdict, Model, ModelClass, ModelError, Universe};
use crate::syntax::{Formula, JFormula, JustTerm};

const MAX_ROUNDS: usize = 4096;

/// Every `(t, phi)` with `t` a subterm and `phi` a subformula of `formulas`.
pub fn occurring_pairs(formulas: &[JFormula]) -> Vec<(JustTerm, JFormula)> {
    let mut terms = BTreeSet::new();
    let mut subs = BTreeSet::new();
    for f in formulas {
        f.terms(&mut terms);
        f.subformulas(&mut subs);
    }
    let mut out = Vec::new();
    for t in &terms {
        for phi in &subs {
            out.push((t.clone(), phi.clone()));
        }
    }
    out
}

/// Pairs whose evidence the model can look up.
fn known(model: &Model, t: &JustTerm, phi: &JFormula) -> Result<bool, ModelError> {
    match model.evidence_value(t, phi) {
        Ok(_) => Ok(true),
        Err(ModelError::Undecided { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Drops the pairs that make the check look up `(term, formula)`.
fn drop_sources(u: &mut Universe, term: &JustTerm, formula: &JFormula) -> bool {
    let mut removed = u.remove(term, formula);
    match term {
        JustTerm::App(a, _) => {
            let before = u.len();
            u.retain(|(t, f)| {
                !(t == &**a && matches!(f, JFormula::Implies(_, c) if **c == *formula))
            });
            removed |= u.len() < before;
        }
        JustTerm::Sum(a, b) => {
            removed |= u.remove(a, formula);
            removed |= u.remove(b, formula);
        }
        JustTerm::Bang(a) => {
            if let JFormula::Holds(a2, psi) = formula {
                if *a2 == **a {
                    removed |= u.remove(a, psi);
                }
            }
        }
        JustTerm::Query(a) => {
            if let Some((JFormula::Holds(a2, psi), JFormula::Bottom)) = formula.as_implies() {
                if *a2 == **a {
                    removed |= u.remove(a, psi);
                }
            }
        }
        _ => {}
    }
    removed
}

/// A deterministic window of at least `size` pairs on which the class
/// check of `model` runs to completion: the pairs occurring in `formulas`
/// plus seeded random pairs, restricted to those the model can decide.
/// Returns the window and the verdict on it.
pub fn decidable_universe(
    model: &Model,
    class: ModelClass,
    logic: JLogic,
    formulas: &[JFormula],
    seed: u64,
    size: usize,
) -> Result<(Universe, ClassVerdict), DemoError> {
    let mut u = Universe::new();
    for (t, phi) in occurring_pairs(formulas) {
        if known(model, &t, &phi)? {
            u.insert(t, phi);
        }
    }
    let pool: Vec<JFormula> = {
        let mut s = BTreeSet::new();
        for f in formulas {
            f.subformulas(&mut s);
        }
        s.into_iter().collect()
    };
    let mut g = Generator::new(seed).with_alphabet(3, 3, 2);
    let target = u.len() + size;
    let mut attempts = 0;
    for _ in 0..MAX_ROUNDS {
        while u.len() < target && attempts < 40 * target {
            attempts += 1;
            let t = g.term(2);
            let phi = match g.below(8) {
                0..=2 => g.jformula(2),
                3..=4 => g.axiom_instance(logic, 1).1,
                5 => g.cs_chain(logic, 1),
                _ if !pool.is_empty() => g.pick(&pool).clone(),
                _ => g.jformula(1),
            };
            if known(model, &t, &phi)? {
                u.insert(t, phi);
            }
        }
        match check_model_class(model, class, Some(&u)) {
            Ok(v) if u.len() >= size || attempts >= 40 * target => return Ok((u, v)),
            Ok(_) => {}
            Err(ModelError::Undecided { term, formula }) => {
                if !drop_sources(&mut u, &term, &formula) {
                    return Err(ModelError::Undecided { term, formula }.into());
                }
            }
            Err(e) => return Err(e.into()),
        }
    }
    Err(DemoError::Inconsistent(
        "sampling window did not stabilize".into(),
    ))
}
