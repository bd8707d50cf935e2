//! Forgetful projection of whole proofs.

use thiserror::Error;

use super::derived;
use super::proof::{check_proof, JProof, MProof, ProofBuilder, ProofDefect, Rule};
use super::schemes::{match_scheme, AxiomScheme};
use super::system::{axiom_scheme_of, chain_length, JLogic, MLogic};
use crate::syntax::{forgetful_projection, JFormula, JustTerm, MFormula};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProjectError {
    #[error("input proof is invalid: {0}")]
    Invalid(#[from] ProofDefect),
    #[error("{0} has no modal counterpart")]
    NoCounterpart(JLogic),
    #[error("`{0}` is not an axiom instance of {1}")]
    NotAnAxiom(JFormula, JLogic),
}

/// Maps a proof in a justification logic to a proof of the projected
/// conclusion, from the projected hypotheses, in the modal counterpart.
pub fn project_proof(proof: &JProof) -> Result<MProof, ProjectError> {
    check_proof(proof)?;
    let logic = proof.system.logic;
    let target = logic
        .modal_counterpart()
        .ok_or(ProjectError::NoCounterpart(logic))?;
    let hyps = proof.hypotheses.iter().map(forgetful_projection).collect();
    let mut b = ProofBuilder::with_hypotheses(target, hyps);
    let mut out: Vec<usize> = Vec::with_capacity(proof.lines.len());
    for line in &proof.lines {
        let l = match &line.rule {
            Rule::Assume(k) => b.assume(*k),
            Rule::Axiom { scheme, .. } => project_axiom(&mut b, *scheme, &line.formula),
            Rule::Cs => {
                let n = chain_length(&line.formula);
                let mut core = &line.formula;
                while let JFormula::Holds(JustTerm::Constant(_), body) = core {
                    core = body;
                }
                let scheme = axiom_scheme_of(logic, core)
                    .ok_or_else(|| ProjectError::NotAnAxiom(core.clone(), logic))?;
                let mut l = project_axiom(&mut b, scheme, core);
                for _ in 0..n {
                    l = b.nbox(l);
                }
                l
            }
            Rule::Mp { major, minor } => b.mp(out[major - 1], out[minor - 1]),
            Rule::NBox(_) => unreachable!("necessitation is rejected by the checker"),
        };
        out.push(l);
    }
    Ok(b.finish())
}

fn modal_scheme(s: AxiomScheme) -> Option<AxiomScheme> {
    use AxiomScheme::*;
    match s {
        A1 | A2 | A3 | A5a | A5b | A6 | A7 | G4 => Some(s),
        J => Some(K),
        F => Some(T),
        Bang => Some(Four),
        Query => Some(NegIntro),
        Plus1 | Plus2 => None,
        K | Z | T | Four | NegIntro => Some(s),
    }
}

/// Derives the projection of an axiom instance; sum axioms collapse to
/// `[]phi -> []phi`, which takes the five-line identity derivation.
fn project_axiom(b: &mut ProofBuilder<MLogic>, scheme: AxiomScheme, axiom: &JFormula) -> usize {
    let projected = forgetful_projection(axiom);
    match modal_scheme(scheme) {
        Some(target) => {
            debug_assert!(match_scheme(target, &projected).is_some());
            b.axiom_formula(target, projected)
        }
        None => {
            let MFormula::Implies(theta, _) = &projected else {
                unreachable!("sum axioms are implications")
            };
            derived::identity(b, theta)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{JCalculus, ProofBuilder};
    use crate::syntax::{parse_jformula, parse_mformula};

    fn j(s: &str) -> JFormula {
        parse_jformula(s).unwrap()
    }

    #[test]
    fn factivity_projects_to_reflexivity() {
        let mut b = ProofBuilder::new(JCalculus::total(JLogic::GJT));
        b.axiom_formula(AxiomScheme::F, j("x1:p1 -> p1"));
        let m = project_proof(&b.finish()).unwrap();
        assert_eq!(m.system, MLogic::GT);
        let c = check_proof(&m).unwrap();
        assert_eq!(c.conclusion, parse_mformula("[]p1 -> p1").unwrap());
    }

    #[test]
    fn sums_and_chains_project() {
        let mut b = ProofBuilder::new(JCalculus::total(JLogic::GJ4));
        b.axiom_formula(AxiomScheme::Plus2, j("x2:p1 -> (x1+x2):p1"));
        b.cs(j("c2:c1:(x1:p1 -> !x1:x1:p1)"));
        let m = project_proof(&b.finish()).unwrap();
        let c = check_proof(&m).unwrap();
        assert_eq!(
            c.conclusion,
            parse_mformula("[][]([]p1 -> [][]p1)").unwrap()
        );
        assert_eq!(m.lines.len(), 5 + 3);
        assert_eq!(m.lines[4].formula, parse_mformula("[]p1 -> []p1").unwrap());
    }

    #[test]
    fn no_counterpart_for_gjt45() {
        let mut b = ProofBuilder::new(JCalculus::total(JLogic::GJT45));
        b.axiom_formula(AxiomScheme::A7, j("bot -> p1"));
        assert_eq!(
            project_proof(&b.finish()),
            Err(ProjectError::NoCounterpart(JLogic::GJT45))
        );
    }
}
