//! Hilbert-style proofs and their checker.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use super::schemes::{instantiate, match_scheme, AxiomScheme, Bindings};
use super::system::{JCalculus, MLogic, ProofSystem};
use crate::syntax::{Formula, View};

/// Justification of a single proof line. Line indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule<F> {
    /// The `k`-th hypothesis.
    Assume(usize),
    /// An instance of `scheme`; explicit bindings are checked if given.
    Axiom {
        scheme: AxiomScheme,
        bindings: Option<Bindings<F>>,
    },
    /// Modus ponens: line `major` is `A -> B`, line `minor` is `A`.
    Mp { major: usize, minor: usize },
    /// A member of the constant specification.
    Cs,
    /// Necessitation of line `premise`, which must not depend on hypotheses.
    NBox(usize),
}

impl<F: Formula> Rule<F> {
    pub fn axiom(scheme: AxiomScheme) -> Self {
        Rule::Axiom {
            scheme,
            bindings: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofLine<F> {
    pub formula: F,
    pub rule: Rule<F>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Proof<S: ProofSystem> {
    pub system: S,
    pub hypotheses: Vec<S::Formula>,
    pub lines: Vec<ProofLine<S::Formula>>,
}

pub type JProof = Proof<JCalculus>;
pub type MProof = Proof<MLogic>;

impl<S: ProofSystem> Proof<S> {
    pub fn new(system: S) -> Self {
        Proof {
            system,
            hypotheses: Vec::new(),
            lines: Vec::new(),
        }
    }

    pub fn conclusion(&self) -> Option<&S::Formula> {
        self.lines.last().map(|l| &l.formula)
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DefectKind {
    #[error("the proof has no lines")]
    Empty,
    #[error("reference to line {0}, which is not an earlier line")]
    BadReference(usize),
    #[error("hypothesis {0} does not exist")]
    NoSuchHypothesis(usize),
    #[error("formula differs from hypothesis {0}")]
    HypothesisMismatch(usize),
    #[error("scheme {0} is not an axiom of this calculus")]
    SchemeNotInCalculus(AxiomScheme),
    #[error("formula is not an instance of {0}")]
    NotAnInstance(AxiomScheme),
    #[error("formula is not the instance of {0} under the stated bindings")]
    BindingsMismatch(AxiomScheme),
    #[error("line {0} is not an implication")]
    MajorNotImplication(usize),
    #[error("antecedent of line {major} differs from line {minor}")]
    AntecedentMismatch { major: usize, minor: usize },
    #[error("formula differs from the consequent of line {0}")]
    ConsequentMismatch(usize),
    #[error("formula is not in the constant specification")]
    NotInConstantSpec,
    #[error("necessitation is not a rule of this calculus")]
    NoNecessitation,
    #[error("necessitation applied to line {premise}, which depends on hypotheses {deps:?}")]
    NecessitationOfAssumption { premise: usize, deps: Vec<usize> },
    #[error("formula is not a box of line {0}")]
    NecessitationMismatch(usize),
}

/// The first line that fails, and why.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ProofDefect {
    pub line: usize,
    pub kind: DefectKind,
}

/// A proof that passed the checker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckedProof<F> {
    pub conclusion: F,
    /// For each line, the hypotheses it depends on.
    pub dependencies: Vec<BTreeSet<usize>>,
}

impl<F> CheckedProof<F> {
    pub fn is_theorem(&self) -> bool {
        self.dependencies.last().is_some_and(|d| d.is_empty())
    }
}

pub fn check_proof<S: ProofSystem>(
    proof: &Proof<S>,
) -> Result<CheckedProof<S::Formula>, ProofDefect> {
    if proof.lines.is_empty() {
        return Err(ProofDefect {
            line: 0,
            kind: DefectKind::Empty,
        });
    }
    let mut deps: Vec<BTreeSet<usize>> = Vec::with_capacity(proof.lines.len());
    for (idx, line) in proof.lines.iter().enumerate() {
        let n = idx + 1;
        let fail = |kind| Err(ProofDefect { line: n, kind });
        let earlier = |i: usize| (1..n).contains(&i);
        let d = match &line.rule {
            Rule::Assume(k) => {
                let Some(h) = k.checked_sub(1).and_then(|i| proof.hypotheses.get(i)) else {
                    return fail(DefectKind::NoSuchHypothesis(*k));
                };
                if *h != line.formula {
                    return fail(DefectKind::HypothesisMismatch(*k));
                }
                BTreeSet::from([*k])
            }
            Rule::Axiom { scheme, bindings } => {
                if !proof.system.has_scheme(*scheme) {
                    return fail(DefectKind::SchemeNotInCalculus(*scheme));
                }
                match bindings {
                    Some(b) => {
                        if instantiate(*scheme, b).as_ref() != Some(&line.formula) {
                            return fail(DefectKind::BindingsMismatch(*scheme));
                        }
                    }
                    None => {
                        if match_scheme(*scheme, &line.formula).is_none() {
                            return fail(DefectKind::NotAnInstance(*scheme));
                        }
                    }
                }
                BTreeSet::new()
            }
            Rule::Mp { major, minor } => {
                for i in [*major, *minor] {
                    if !earlier(i) {
                        return fail(DefectKind::BadReference(i));
                    }
                }
                let Some((ante, cons)) = proof.lines[major - 1].formula.as_implies() else {
                    return fail(DefectKind::MajorNotImplication(*major));
                };
                if *ante != proof.lines[minor - 1].formula {
                    return fail(DefectKind::AntecedentMismatch {
                        major: *major,
                        minor: *minor,
                    });
                }
                if *cons != line.formula {
                    return fail(DefectKind::ConsequentMismatch(*major));
                }
                deps[major - 1].union(&deps[minor - 1]).copied().collect()
            }
            Rule::Cs => {
                if !proof.system.cs_member(&line.formula) {
                    return fail(DefectKind::NotInConstantSpec);
                }
                BTreeSet::new()
            }
            Rule::NBox(p) => {
                if !proof.system.has_necessitation() {
                    return fail(DefectKind::NoNecessitation);
                }
                if !earlier(*p) {
                    return fail(DefectKind::BadReference(*p));
                }
                if !deps[p - 1].is_empty() {
                    return fail(DefectKind::NecessitationOfAssumption {
                        premise: *p,
                        deps: deps[p - 1].iter().copied().collect(),
                    });
                }
                match line.formula.view() {
                    View::Box(body) if *body == proof.lines[p - 1].formula => {}
                    _ => return fail(DefectKind::NecessitationMismatch(*p)),
                }
                BTreeSet::new()
            }
        };
        deps.push(d);
    }
    Ok(CheckedProof {
        conclusion: proof.lines.last().unwrap().formula.clone(),
        dependencies: deps,
    })
}

/// Incremental construction of proofs that are correct by construction.
///
/// Methods panic when asked to build an ill-formed step; they are meant for
/// internal derivations whose shape is known.
#[derive(Debug, Clone)]
pub struct ProofBuilder<S: ProofSystem> {
    proof: Proof<S>,
}

impl<S: ProofSystem> ProofBuilder<S> {
    pub fn new(system: S) -> Self {
        ProofBuilder {
            proof: Proof::new(system),
        }
    }

    pub fn with_hypotheses(system: S, hypotheses: Vec<S::Formula>) -> Self {
        ProofBuilder {
            proof: Proof {
                system,
                hypotheses,
                lines: Vec::new(),
            },
        }
    }

    pub fn system(&self) -> &S {
        &self.proof.system
    }

    pub fn len(&self) -> usize {
        self.proof.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.proof.lines.is_empty()
    }

    pub fn formula(&self, line: usize) -> &S::Formula {
        &self.proof.lines[line - 1].formula
    }

    pub fn push(&mut self, formula: S::Formula, rule: Rule<S::Formula>) -> usize {
        self.proof.lines.push(ProofLine { formula, rule });
        self.proof.lines.len()
    }

    pub fn assume(&mut self, k: usize) -> usize {
        let f = self.proof.hypotheses[k - 1].clone();
        self.push(f, Rule::Assume(k))
    }

    /// Adds an instance of `scheme`.
    pub fn axiom(&mut self, scheme: AxiomScheme, bindings: Bindings<S::Formula>) -> usize {
        let f = instantiate(scheme, &bindings)
            .unwrap_or_else(|| panic!("incomplete bindings {bindings} for {scheme}"));
        self.push(f, Rule::axiom(scheme))
    }

    /// Adds a formula already known to be an instance of `scheme`.
    pub fn axiom_formula(&mut self, scheme: AxiomScheme, f: S::Formula) -> usize {
        debug_assert!(
            match_scheme(scheme, &f).is_some(),
            "{f} is not an instance of {scheme}"
        );
        self.push(f, Rule::axiom(scheme))
    }

    pub fn mp(&mut self, major: usize, minor: usize) -> usize {
        let (ante, cons) = self
            .formula(major)
            .as_implies()
            .unwrap_or_else(|| panic!("line {major} is not an implication"));
        assert_eq!(
            ante,
            self.formula(minor),
            "modus ponens antecedent mismatch"
        );
        let cons = cons.clone();
        self.push(cons, Rule::Mp { major, minor })
    }

    pub fn cs(&mut self, f: S::Formula) -> usize {
        self.push(f, Rule::Cs)
    }

    pub fn nbox(&mut self, premise: usize) -> usize {
        let f = S::Formula::mk_box(self.formula(premise).clone())
            .expect("necessitation needs a modal language");
        self.push(f, Rule::NBox(premise))
    }

    /// Appends the lines of `other`, renumbering references. Hypothesis `k`
    /// of `other` becomes hypothesis `hyp_map(k)` of this proof. Returns the
    /// index of the last appended line.
    pub fn splice(&mut self, other: &Proof<S>, hyp_map: impl Fn(usize) -> usize) -> usize {
        let offset = self.proof.lines.len();
        for line in &other.lines {
            let rule = match &line.rule {
                Rule::Assume(k) => Rule::Assume(hyp_map(*k)),
                Rule::Axiom { scheme, bindings } => Rule::Axiom {
                    scheme: *scheme,
                    bindings: bindings.clone(),
                },
                Rule::Mp { major, minor } => Rule::Mp {
                    major: major + offset,
                    minor: minor + offset,
                },
                Rule::Cs => Rule::Cs,
                Rule::NBox(p) => Rule::NBox(p + offset),
            };
            self.proof.lines.push(ProofLine {
                formula: line.formula.clone(),
                rule,
            });
        }
        self.proof.lines.len()
    }

    pub fn finish(self) -> Proof<S> {
        self.proof
    }
}

impl<F: Formula> fmt::Display for Rule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Assume(k) => write!(f, "assume {k}"),
            Rule::Axiom {
                scheme,
                bindings: None,
            } => write!(f, "axiom {scheme}"),
            Rule::Axiom {
                scheme,
                bindings: Some(b),
            } => write!(f, "axiom {scheme} {b}"),
            Rule::Mp { major, minor } => write!(f, "mp {major} {minor}"),
            Rule::Cs => f.write_str("cs"),
            Rule::NBox(p) => write!(f, "nbox {p}"),
        }
    }
}
