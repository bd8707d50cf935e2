//! Lifting and internalization.

use thiserror::Error;

use super::proof::{check_proof, JProof, ProofBuilder, ProofDefect, Rule};
use super::schemes::{AxiomScheme, Bindings};
use super::system::CsError;
use crate::syntax::{JFormula, JustTerm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiftError {
    #[error("input proof is invalid: {0}")]
    Invalid(#[from] ProofDefect),
    #[error("{given} terms supplied for {needed} hypotheses")]
    TermCount { given: usize, needed: usize },
    #[error("internalization needs a proof without hypotheses; this one has {0}")]
    HasHypotheses(usize),
    #[error("constant specification cannot justify a line: {0}")]
    Cs(#[from] CsError),
}

/// A proof of `term:phi` from the lifted hypotheses.
#[derive(Debug, Clone, PartialEq)]
pub struct Lifted {
    pub term: JustTerm,
    pub proof: JProof,
}

/// Turns a proof of `phi` from `psi_1..psi_n` into a proof of `t:phi` from
/// `terms[0]:psi_1, ..., terms[n-1]:psi_n`, in the same calculus.
pub fn lift(proof: &JProof, terms: &[JustTerm]) -> Result<Lifted, LiftError> {
    check_proof(proof)?;
    if terms.len() != proof.hypotheses.len() {
        return Err(LiftError::TermCount {
            given: terms.len(),
            needed: proof.hypotheses.len(),
        });
    }
    let calc = &proof.system;
    let hyps = terms
        .iter()
        .zip(&proof.hypotheses)
        .map(|(t, h)| JFormula::holds(t.clone(), h.clone()))
        .collect();
    let mut b = ProofBuilder::with_hypotheses(calc.clone(), hyps);
    // out[i] = (line in the new proof, term justifying input line i + 1)
    let mut out: Vec<(usize, JustTerm)> = Vec::with_capacity(proof.lines.len());
    for line in &proof.lines {
        let step = match &line.rule {
            Rule::Assume(k) => (b.assume(*k), terms[k - 1].clone()),
            Rule::Axiom { .. } | Rule::Cs => {
                let c = JustTerm::Constant(calc.cs.constant_for(calc.logic, &line.formula)?);
                (b.cs(JFormula::holds(c.clone(), line.formula.clone())), c)
            }
            Rule::Mp { major, minor } => {
                let (lmaj, tmaj) = out[major - 1].clone();
                let (lmin, tmin) = out[minor - 1].clone();
                let (phi, psi) = match &proof.lines[major - 1].formula {
                    JFormula::Implies(a, c) => ((**a).clone(), (**c).clone()),
                    _ => unreachable!("checked proof"),
                };
                let j = b.axiom(
                    AxiomScheme::J,
                    Bindings::new()
                        .t(tmaj.clone())
                        .s(tmin.clone())
                        .phi(phi)
                        .psi(psi),
                );
                let l = b.mp(j, lmaj);
                (b.mp(l, lmin), JustTerm::app(tmaj, tmin))
            }
            Rule::NBox(_) => unreachable!("necessitation is rejected by the checker"),
        };
        out.push(step);
    }
    let term = out.pop().expect("checked proof is non-empty").1;
    Ok(Lifted {
        term,
        proof: b.finish(),
    })
}

/// Lifting of a hypothesis-free proof: a ground term `t` with `|- t:phi`.
pub fn internalize(proof: &JProof) -> Result<Lifted, LiftError> {
    if !proof.hypotheses.is_empty() {
        return Err(LiftError::HasHypotheses(proof.hypotheses.len()));
    }
    lift(proof, &[])
}
