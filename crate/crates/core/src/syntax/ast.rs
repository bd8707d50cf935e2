use std::collections::BTreeSet;
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use super::ParseError;

/// Justification terms: constants, variables, sum, application, `!` and `?`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JustTerm {
    Constant(u32),
    Variable(u32),
    Sum(Box<JustTerm>, Box<JustTerm>),
    App(Box<JustTerm>, Box<JustTerm>),
    Bang(Box<JustTerm>),
    Query(Box<JustTerm>),
}

impl JustTerm {
    pub fn constant(i: u32) -> Self {
        JustTerm::Constant(i)
    }

    pub fn var(i: u32) -> Self {
        JustTerm::Variable(i)
    }

    pub fn sum(a: JustTerm, b: JustTerm) -> Self {
        JustTerm::Sum(Box::new(a), Box::new(b))
    }

    pub fn app(a: JustTerm, b: JustTerm) -> Self {
        JustTerm::App(Box::new(a), Box::new(b))
    }

    pub fn bang(a: JustTerm) -> Self {
        JustTerm::Bang(Box::new(a))
    }

    pub fn query(a: JustTerm) -> Self {
        JustTerm::Query(Box::new(a))
    }

    pub fn is_variable(&self) -> bool {
        matches!(self, JustTerm::Variable(_))
    }

    pub fn depth(&self) -> usize {
        match self {
            JustTerm::Constant(_) | JustTerm::Variable(_) => 0,
            JustTerm::Sum(a, b) | JustTerm::App(a, b) => 1 + a.depth().max(b.depth()),
            JustTerm::Bang(a) | JustTerm::Query(a) => 1 + a.depth(),
        }
    }

    pub fn subterms(&self, out: &mut BTreeSet<JustTerm>) {
        out.insert(self.clone());
        match self {
            JustTerm::Constant(_) | JustTerm::Variable(_) => {}
            JustTerm::Sum(a, b) | JustTerm::App(a, b) => {
                a.subterms(out);
                b.subterms(out);
            }
            JustTerm::Bang(a) | JustTerm::Query(a) => a.subterms(out),
        }
    }

    /// Largest constant and variable index occurring in the term.
    pub fn max_indices(&self) -> (u32, u32) {
        match self {
            JustTerm::Constant(i) => (*i, 0),
            JustTerm::Variable(i) => (0, *i),
            JustTerm::Sum(a, b) | JustTerm::App(a, b) => {
                let (c1, v1) = a.max_indices();
                let (c2, v2) = b.max_indices();
                (c1.max(c2), v1.max(v2))
            }
            JustTerm::Bang(a) | JustTerm::Query(a) => a.max_indices(),
        }
    }
}

/// Formulas of the justification language.
///
/// `¬φ` is not a constructor; it is `Implies(φ, Bottom)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JFormula {
    Bottom,
    Atom(u32),
    Implies(Box<JFormula>, Box<JFormula>),
    And(Box<JFormula>, Box<JFormula>),
    Holds(JustTerm, Box<JFormula>),
}

/// Formulas of the modal language.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MFormula {
    Bottom,
    Atom(u32),
    Implies(Box<MFormula>, Box<MFormula>),
    And(Box<MFormula>, Box<MFormula>),
    Box(Box<MFormula>),
}

impl JFormula {
    pub fn atom(i: u32) -> Self {
        JFormula::Atom(i)
    }

    pub fn implies(a: JFormula, b: JFormula) -> Self {
        JFormula::Implies(Box::new(a), Box::new(b))
    }

    pub fn and(a: JFormula, b: JFormula) -> Self {
        JFormula::And(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(a: JFormula) -> Self {
        JFormula::implies(a, JFormula::Bottom)
    }

    pub fn top() -> Self {
        JFormula::implies(JFormula::Bottom, JFormula::Bottom)
    }

    pub fn holds(t: JustTerm, a: JFormula) -> Self {
        JFormula::Holds(t, Box::new(a))
    }

    /// Number of `t:` occurrences.
    pub fn holds_count(&self) -> usize {
        match self {
            JFormula::Bottom | JFormula::Atom(_) => 0,
            JFormula::Implies(a, b) | JFormula::And(a, b) => a.holds_count() + b.holds_count(),
            JFormula::Holds(_, a) => 1 + a.holds_count(),
        }
    }

    /// All `(t, φ)` pairs such that `t:φ` is a subformula.
    pub fn holds_subformulas(&self, out: &mut BTreeSet<(JustTerm, JFormula)>) {
        match self {
            JFormula::Bottom | JFormula::Atom(_) => {}
            JFormula::Implies(a, b) | JFormula::And(a, b) => {
                a.holds_subformulas(out);
                b.holds_subformulas(out);
            }
            JFormula::Holds(t, a) => {
                out.insert((t.clone(), (**a).clone()));
                a.holds_subformulas(out);
            }
        }
    }

    pub fn subformulas(&self, out: &mut BTreeSet<JFormula>) {
        out.insert(self.clone());
        match self {
            JFormula::Bottom | JFormula::Atom(_) => {}
            JFormula::Implies(a, b) | JFormula::And(a, b) => {
                a.subformulas(out);
                b.subformulas(out);
            }
            JFormula::Holds(_, a) => a.subformulas(out),
        }
    }

    pub fn terms(&self, out: &mut BTreeSet<JustTerm>) {
        match self {
            JFormula::Bottom | JFormula::Atom(_) => {}
            JFormula::Implies(a, b) | JFormula::And(a, b) => {
                a.terms(out);
                b.terms(out);
            }
            JFormula::Holds(t, a) => {
                t.subterms(out);
                a.terms(out);
            }
        }
    }

    /// Largest atom, constant and variable index occurring anywhere.
    pub fn max_indices(&self) -> (u32, u32, u32) {
        match self {
            JFormula::Bottom => (0, 0, 0),
            JFormula::Atom(i) => (*i, 0, 0),
            JFormula::Implies(a, b) | JFormula::And(a, b) => {
                let x = a.max_indices();
                let y = b.max_indices();
                (x.0.max(y.0), x.1.max(y.1), x.2.max(y.2))
            }
            JFormula::Holds(t, a) => {
                let (c, v) = t.max_indices();
                let x = a.max_indices();
                (x.0, x.1.max(c), x.2.max(v))
            }
        }
    }
}

impl MFormula {
    pub fn atom(i: u32) -> Self {
        MFormula::Atom(i)
    }

    pub fn implies(a: MFormula, b: MFormula) -> Self {
        MFormula::Implies(Box::new(a), Box::new(b))
    }

    pub fn and(a: MFormula, b: MFormula) -> Self {
        MFormula::And(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(a: MFormula) -> Self {
        MFormula::implies(a, MFormula::Bottom)
    }

    pub fn top() -> Self {
        MFormula::implies(MFormula::Bottom, MFormula::Bottom)
    }

    pub fn boxed(a: MFormula) -> Self {
        MFormula::Box(Box::new(a))
    }

    pub fn box_count(&self) -> usize {
        match self {
            MFormula::Bottom | MFormula::Atom(_) => 0,
            MFormula::Implies(a, b) | MFormula::And(a, b) => a.box_count() + b.box_count(),
            MFormula::Box(a) => 1 + a.box_count(),
        }
    }
}

/// A borrowed, language-independent view of one formula node.
#[derive(Debug, Clone, Copy)]
pub enum View<'a, F> {
    Bottom,
    Atom(u32),
    Implies(&'a F, &'a F),
    And(&'a F, &'a F),
    Holds(&'a JustTerm, &'a F),
    Box(&'a F),
}

/// Operations shared by both formula languages, so that axiom schemes,
/// proofs and derivation templates can be written once.
pub trait Formula:
    Clone + Eq + Hash + Ord + Debug + Display + FromStr<Err = ParseError> + Send + Sync + 'static
{
    fn bottom() -> Self;
    fn mk_atom(i: u32) -> Self;
    fn mk_implies(a: Self, b: Self) -> Self;
    fn mk_and(a: Self, b: Self) -> Self;
    /// `t:φ`; `None` in the modal language.
    fn mk_holds(t: JustTerm, body: Self) -> Option<Self>;
    /// `□φ`; `None` in the justification language.
    fn mk_box(body: Self) -> Option<Self>;
    fn view(&self) -> View<'_, Self>;

    fn mk_neg(a: Self) -> Self {
        Self::mk_implies(a, Self::bottom())
    }

    fn as_implies(&self) -> Option<(&Self, &Self)> {
        match self.view() {
            View::Implies(a, b) => Some((a, b)),
            _ => None,
        }
    }

    fn size(&self) -> usize {
        match self.view() {
            View::Bottom | View::Atom(_) => 1,
            View::Implies(a, b) | View::And(a, b) => 1 + a.size() + b.size(),
            View::Holds(_, a) | View::Box(a) => 1 + a.size(),
        }
    }

    fn depth(&self) -> usize {
        match self.view() {
            View::Bottom | View::Atom(_) => 0,
            View::Implies(a, b) | View::And(a, b) => 1 + a.depth().max(b.depth()),
            View::Holds(_, a) | View::Box(a) => 1 + a.depth(),
        }
    }

    fn atoms(&self, out: &mut BTreeSet<u32>) {
        match self.view() {
            View::Bottom => {}
            View::Atom(i) => {
                out.insert(i);
            }
            View::Implies(a, b) | View::And(a, b) => {
                a.atoms(out);
                b.atoms(out);
            }
            View::Holds(_, a) | View::Box(a) => a.atoms(out),
        }
    }
}

impl Formula for JFormula {
    fn bottom() -> Self {
        JFormula::Bottom
    }
    fn mk_atom(i: u32) -> Self {
        JFormula::Atom(i)
    }
    fn mk_implies(a: Self, b: Self) -> Self {
        JFormula::implies(a, b)
    }
    fn mk_and(a: Self, b: Self) -> Self {
        JFormula::and(a, b)
    }
    fn mk_holds(t: JustTerm, body: Self) -> Option<Self> {
        Some(JFormula::holds(t, body))
    }
    fn mk_box(_: Self) -> Option<Self> {
        None
    }
    fn view(&self) -> View<'_, Self> {
        match self {
            JFormula::Bottom => View::Bottom,
            JFormula::Atom(i) => View::Atom(*i),
            JFormula::Implies(a, b) => View::Implies(a, b),
            JFormula::And(a, b) => View::And(a, b),
            JFormula::Holds(t, a) => View::Holds(t, a),
        }
    }
}

impl Formula for MFormula {
    fn bottom() -> Self {
        MFormula::Bottom
    }
    fn mk_atom(i: u32) -> Self {
        MFormula::Atom(i)
    }
    fn mk_implies(a: Self, b: Self) -> Self {
        MFormula::implies(a, b)
    }
    fn mk_and(a: Self, b: Self) -> Self {
        MFormula::and(a, b)
    }
    fn mk_holds(_: JustTerm, _: Self) -> Option<Self> {
        None
    }
    fn mk_box(body: Self) -> Option<Self> {
        Some(MFormula::boxed(body))
    }
    fn view(&self) -> View<'_, Self> {
        match self {
            MFormula::Bottom => View::Bottom,
            MFormula::Atom(i) => View::Atom(*i),
            MFormula::Implies(a, b) => View::Implies(a, b),
            MFormula::And(a, b) => View::And(a, b),
            MFormula::Box(a) => View::Box(a),
        }
    }
}
