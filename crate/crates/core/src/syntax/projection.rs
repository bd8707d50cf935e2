//! Forgetful projection, polarity of modal occurrences, and realization
//! checking.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::ast::{JFormula, JustTerm, MFormula};

/// Replaces every `t:φ` by `□φ°`.
pub fn forgetful_projection(phi: &JFormula) -> MFormula {
    match phi {
        JFormula::Bottom => MFormula::Bottom,
        JFormula::Atom(i) => MFormula::Atom(*i),
        JFormula::Implies(a, b) => {
            MFormula::implies(forgetful_projection(a), forgetful_projection(b))
        }
        JFormula::And(a, b) => MFormula::and(forgetful_projection(a), forgetful_projection(b)),
        JFormula::Holds(_, a) => MFormula::boxed(forgetful_projection(a)),
    }
}

/// Image of a set of formulas under the projection.
pub fn project_set<'a>(gamma: impl IntoIterator<Item = &'a JFormula>) -> BTreeSet<MFormula> {
    gamma.into_iter().map(forgetful_projection).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Step {
    Antecedent,
    Consequent,
    Left,
    Right,
    Body,
}

/// Address of a subformula, as the sequence of steps from the root.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Path(pub Vec<Step>);

impl Path {
    fn child(&self, step: Step) -> Path {
        let mut v = self.0.clone();
        v.push(step);
        Path(v)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        let parts: Vec<&str> = self
            .0
            .iter()
            .map(|s| match s {
                Step::Antecedent => "ant",
                Step::Consequent => "cons",
                Step::Left => "left",
                Step::Right => "right",
                Step::Body => "body",
            })
            .collect();
        f.write_str(&parts.join("."))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    pub fn flip(self) -> Self {
        match self {
            Polarity::Positive => Polarity::Negative,
            Polarity::Negative => Polarity::Positive,
        }
    }
}

/// One entry per `□` occurrence, in pre-order.
pub fn modal_polarities(phi: &MFormula) -> Vec<(Path, Polarity)> {
    fn go(f: &MFormula, path: Path, pol: Polarity, out: &mut Vec<(Path, Polarity)>) {
        match f {
            MFormula::Bottom | MFormula::Atom(_) => {}
            MFormula::Implies(a, b) => {
                go(a, path.child(Step::Antecedent), pol.flip(), out);
                go(b, path.child(Step::Consequent), pol, out);
            }
            MFormula::And(a, b) => {
                go(a, path.child(Step::Left), pol, out);
                go(b, path.child(Step::Right), pol, out);
            }
            MFormula::Box(a) => {
                out.push((path.clone(), pol));
                go(a, path.child(Step::Body), pol, out);
            }
        }
    }
    let mut out = Vec::new();
    go(phi, Path::default(), Polarity::Positive, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum RealizationVerdict {
    Accept,
    /// The projection differs from the modal formula at `path`.
    ProjectionMismatch {
        path: Path,
        expected: String,
        found: String,
    },
    /// A negative occurrence is realized by something other than a variable.
    NonVariableNegative {
        path: Path,
        term: String,
    },
}

impl RealizationVerdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, RealizationVerdict::Accept)
    }
}

impl fmt::Display for RealizationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealizationVerdict::Accept => f.write_str("accept"),
            RealizationVerdict::ProjectionMismatch {
                path,
                expected,
                found,
            } => {
                write!(
                    f,
                    "reject: projection mismatch at {path}: expected `{expected}`, found `{found}`"
                )
            }
            RealizationVerdict::NonVariableNegative { path, term } => {
                write!(
                    f,
                    "reject: negative occurrence at {path} realized by non-variable `{term}`"
                )
            }
        }
    }
}

/// Is `phi` a realization of `psi`? With `normal`, negative occurrences
/// must carry justification variables. Positive occurrences accept any term.
pub fn check_realization(phi: &JFormula, psi: &MFormula, normal: bool) -> RealizationVerdict {
    fn go(
        phi: &JFormula,
        psi: &MFormula,
        path: Path,
        pol: Polarity,
        normal: bool,
    ) -> RealizationVerdict {
        let mismatch = |path: Path| RealizationVerdict::ProjectionMismatch {
            path,
            expected: psi.to_string(),
            found: forgetful_projection(phi).to_string(),
        };
        match (phi, psi) {
            (JFormula::Bottom, MFormula::Bottom) => RealizationVerdict::Accept,
            (JFormula::Atom(i), MFormula::Atom(j)) if i == j => RealizationVerdict::Accept,
            (JFormula::Implies(a, b), MFormula::Implies(c, d)) => {
                match go(a, c, path.child(Step::Antecedent), pol.flip(), normal) {
                    RealizationVerdict::Accept => {
                        go(b, d, path.child(Step::Consequent), pol, normal)
                    }
                    bad => bad,
                }
            }
            (JFormula::And(a, b), MFormula::And(c, d)) => {
                match go(a, c, path.child(Step::Left), pol, normal) {
                    RealizationVerdict::Accept => go(b, d, path.child(Step::Right), pol, normal),
                    bad => bad,
                }
            }
            (JFormula::Holds(t, a), MFormula::Box(c)) => {
                if normal && pol == Polarity::Negative && !t.is_variable() {
                    return RealizationVerdict::NonVariableNegative {
                        path,
                        term: t.to_string(),
                    };
                }
                go(a, c, path.child(Step::Body), pol, normal)
            }
            _ => mismatch(path),
        }
    }
    go(phi, psi, Path::default(), Polarity::Positive, normal)
}

/// Replaces the `k`-th `□` (pre-order) by `terms[k]:`.
///
/// Panics if `terms` is shorter than the number of boxes.
pub fn realize(psi: &MFormula, terms: &[JustTerm]) -> JFormula {
    fn go(psi: &MFormula, terms: &[JustTerm], next: &mut usize) -> JFormula {
        match psi {
            MFormula::Bottom => JFormula::Bottom,
            MFormula::Atom(i) => JFormula::Atom(*i),
            MFormula::Implies(a, b) => {
                let a = go(a, terms, next);
                JFormula::implies(a, go(b, terms, next))
            }
            MFormula::And(a, b) => {
                let a = go(a, terms, next);
                JFormula::and(a, go(b, terms, next))
            }
            MFormula::Box(a) => {
                let t = terms[*next].clone();
                *next += 1;
                JFormula::holds(t, go(a, terms, next))
            }
        }
    }
    let mut next = 0;
    go(psi, terms, &mut next)
}
