//! Axiom schemes as formula templates, with one-sided matching and
//! instantiation over either formula language.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::syntax::{Formula, JustTerm, View};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AxiomScheme {
    A1,
    A2,
    A3,
    A5a,
    A5b,
    A6,
    A7,
    G4,
    J,
    Plus1,
    Plus2,
    F,
    Bang,
    Query,
    K,
    Z,
    T,
    Four,
    NegIntro,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeLanguage {
    Both,
    Justification,
    Modal,
}

impl AxiomScheme {
    pub const ALL: [AxiomScheme; 19] = [
        AxiomScheme::A1,
        AxiomScheme::A2,
        AxiomScheme::A3,
        AxiomScheme::A5a,
        AxiomScheme::A5b,
        AxiomScheme::A6,
        AxiomScheme::A7,
        AxiomScheme::G4,
        AxiomScheme::J,
        AxiomScheme::Plus1,
        AxiomScheme::Plus2,
        AxiomScheme::F,
        AxiomScheme::Bang,
        AxiomScheme::Query,
        AxiomScheme::K,
        AxiomScheme::Z,
        AxiomScheme::T,
        AxiomScheme::Four,
        AxiomScheme::NegIntro,
    ];

    /// The propositional Gödel fragment shared by every calculus.
    pub const PROPOSITIONAL: [AxiomScheme; 8] = [
        AxiomScheme::A1,
        AxiomScheme::A2,
        AxiomScheme::A3,
        AxiomScheme::A5a,
        AxiomScheme::A5b,
        AxiomScheme::A6,
        AxiomScheme::A7,
        AxiomScheme::G4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomScheme::A1 => "A1",
            AxiomScheme::A2 => "A2",
            AxiomScheme::A3 => "A3",
            AxiomScheme::A5a => "A5a",
            AxiomScheme::A5b => "A5b",
            AxiomScheme::A6 => "A6",
            AxiomScheme::A7 => "A7",
            AxiomScheme::G4 => "G4",
            AxiomScheme::J => "J",
            AxiomScheme::Plus1 => "Plus1",
            AxiomScheme::Plus2 => "Plus2",
            AxiomScheme::F => "F",
            AxiomScheme::Bang => "Bang",
            AxiomScheme::Query => "Query",
            AxiomScheme::K => "K",
            AxiomScheme::Z => "Z",
            AxiomScheme::T => "T",
            AxiomScheme::Four => "Four",
            AxiomScheme::NegIntro => "NegIntro",
        }
    }

    pub fn language(self) -> SchemeLanguage {
        use AxiomScheme::*;
        match self {
            A1 | A2 | A3 | A5a | A5b | A6 | A7 | G4 => SchemeLanguage::Both,
            J | Plus1 | Plus2 | F | Bang | Query => SchemeLanguage::Justification,
            K | Z | T | Four | NegIntro => SchemeLanguage::Modal,
        }
    }

    fn template(self) -> &'static Pat {
        static TEMPLATES: OnceLock<Vec<Pat>> = OnceLock::new();
        let all = TEMPLATES.get_or_init(|| {
            AxiomScheme::ALL
                .iter()
                .map(|s| build_template(*s))
                .collect()
        });
        &all[self as usize]
    }

    /// Human-readable template, e.g. `t:(phi -> psi) -> s:phi -> (t*s):psi`.
    pub fn template_text(self) -> String {
        self.template().to_string()
    }
}

impl fmt::Display for AxiomScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomScheme {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let found = AxiomScheme::ALL
            .iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .copied();
        found
            .or(match s {
                "+1" | "+" => Some(AxiomScheme::Plus1),
                "+2" => Some(AxiomScheme::Plus2),
                "!" => Some(AxiomScheme::Bang),
                "?" => Some(AxiomScheme::Query),
                "4" => Some(AxiomScheme::Four),
                "N" | "5" => Some(AxiomScheme::NegIntro),
                _ => None,
            })
            .ok_or_else(|| format!("unknown axiom scheme `{s}`"))
    }
}

/// Formula metavariables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FMeta {
    Phi,
    Psi,
    Chi,
}

/// Term metavariables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TMeta {
    T,
    S,
}

impl FMeta {
    pub fn name(self) -> &'static str {
        match self {
            FMeta::Phi => "phi",
            FMeta::Psi => "psi",
            FMeta::Chi => "chi",
        }
    }
}

impl TMeta {
    pub fn name(self) -> &'static str {
        match self {
            TMeta::T => "t",
            TMeta::S => "s",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TPat {
    Meta(TMeta),
    Sum(Box<TPat>, Box<TPat>),
    App(Box<TPat>, Box<TPat>),
    Bang(Box<TPat>),
    Query(Box<TPat>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Pat {
    Meta(FMeta),
    Bot,
    Imp(Box<Pat>, Box<Pat>),
    And(Box<Pat>, Box<Pat>),
    Holds(TPat, Box<Pat>),
    Box(Box<Pat>),
}

fn imp(a: Pat, b: Pat) -> Pat {
    Pat::Imp(Box::new(a), Box::new(b))
}
fn and(a: Pat, b: Pat) -> Pat {
    Pat::And(Box::new(a), Box::new(b))
}
fn neg(a: Pat) -> Pat {
    imp(a, Pat::Bot)
}
fn holds(t: TPat, a: Pat) -> Pat {
    Pat::Holds(t, Box::new(a))
}
fn bx(a: Pat) -> Pat {
    Pat::Box(Box::new(a))
}

fn build_template(s: AxiomScheme) -> Pat {
    use AxiomScheme::*;
    let phi = || Pat::Meta(FMeta::Phi);
    let psi = || Pat::Meta(FMeta::Psi);
    let chi = || Pat::Meta(FMeta::Chi);
    let t = || TPat::Meta(TMeta::T);
    let s_ = || TPat::Meta(TMeta::S);
    match s {
        A1 => imp(imp(phi(), psi()), imp(imp(psi(), chi()), imp(phi(), chi()))),
        A2 => imp(and(phi(), psi()), phi()),
        A3 => imp(and(phi(), psi()), and(psi(), phi())),
        A5a => imp(imp(phi(), imp(psi(), chi())), imp(and(phi(), psi()), chi())),
        A5b => imp(imp(and(phi(), psi()), chi()), imp(phi(), imp(psi(), chi()))),
        A6 => imp(
            imp(imp(phi(), psi()), chi()),
            imp(imp(imp(psi(), phi()), chi()), chi()),
        ),
        A7 => imp(Pat::Bot, phi()),
        G4 => imp(phi(), and(phi(), phi())),
        J => imp(
            holds(t(), imp(phi(), psi())),
            imp(
                holds(s_(), phi()),
                holds(TPat::App(Box::new(t()), Box::new(s_())), psi()),
            ),
        ),
        Plus1 => imp(
            holds(t(), phi()),
            holds(TPat::Sum(Box::new(t()), Box::new(s_())), phi()),
        ),
        Plus2 => imp(
            holds(s_(), phi()),
            holds(TPat::Sum(Box::new(t()), Box::new(s_())), phi()),
        ),
        F => imp(holds(t(), phi()), phi()),
        Bang => imp(
            holds(t(), phi()),
            holds(TPat::Bang(Box::new(t())), holds(t(), phi())),
        ),
        Query => imp(
            neg(holds(t(), phi())),
            holds(TPat::Query(Box::new(t())), neg(holds(t(), phi()))),
        ),
        K => imp(bx(imp(phi(), psi())), imp(bx(phi()), bx(psi()))),
        Z => imp(neg(neg(bx(phi()))), bx(neg(neg(phi())))),
        T => imp(bx(phi()), phi()),
        Four => imp(bx(phi()), bx(bx(phi()))),
        NegIntro => imp(neg(bx(phi())), bx(neg(bx(phi())))),
    }
}

impl fmt::Display for TPat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TPat::Meta(m) => f.write_str(m.name()),
            TPat::Sum(a, b) => write!(f, "({a}+{b})"),
            TPat::App(a, b) => write!(f, "({a}*{b})"),
            TPat::Bang(a) => write!(f, "!{a}"),
            TPat::Query(a) => write!(f, "?{a}"),
        }
    }
}

impl fmt::Display for Pat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pat::Meta(m) => f.write_str(m.name()),
            Pat::Bot => f.write_str("bot"),
            Pat::Imp(a, b) if **b == Pat::Bot => write!(f, "~{a}"),
            Pat::Imp(a, b) => write!(f, "({a} -> {b})"),
            Pat::And(a, b) => write!(f, "({a} & {b})"),
            Pat::Holds(t, a) => write!(f, "{t}:{a}"),
            Pat::Box(a) => write!(f, "[]{a}"),
        }
    }
}

/// Values for the metavariables of a scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bindings<F> {
    pub formulas: BTreeMap<FMeta, F>,
    pub terms: BTreeMap<TMeta, JustTerm>,
}

impl<F> Default for Bindings<F> {
    fn default() -> Self {
        Bindings {
            formulas: BTreeMap::new(),
            terms: BTreeMap::new(),
        }
    }
}

impl<F: Formula> Bindings<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn phi(mut self, f: F) -> Self {
        self.formulas.insert(FMeta::Phi, f);
        self
    }

    pub fn psi(mut self, f: F) -> Self {
        self.formulas.insert(FMeta::Psi, f);
        self
    }

    pub fn chi(mut self, f: F) -> Self {
        self.formulas.insert(FMeta::Chi, f);
        self
    }

    pub fn t(mut self, t: JustTerm) -> Self {
        self.terms.insert(TMeta::T, t);
        self
    }

    pub fn s(mut self, t: JustTerm) -> Self {
        self.terms.insert(TMeta::S, t);
        self
    }

    pub fn formula(&self, m: FMeta) -> Option<&F> {
        self.formulas.get(&m)
    }

    pub fn term(&self, m: TMeta) -> Option<&JustTerm> {
        self.terms.get(&m)
    }
}

impl<F: Formula> fmt::Display for Bindings<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, v)| format!("{} = {v}", k.name()))
            .collect();
        parts.extend(
            self.formulas
                .iter()
                .map(|(k, v)| format!("{} = {v}", k.name())),
        );
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn match_term(p: &TPat, t: &JustTerm, b: &mut BTreeMap<TMeta, JustTerm>) -> bool {
    match (p, t) {
        (TPat::Meta(m), _) => match b.get(m) {
            Some(bound) => bound == t,
            None => {
                b.insert(*m, t.clone());
                true
            }
        },
        (TPat::Sum(pa, pb), JustTerm::Sum(a, c)) | (TPat::App(pa, pb), JustTerm::App(a, c)) => {
            match_term(pa, a, b) && match_term(pb, c, b)
        }
        (TPat::Bang(pa), JustTerm::Bang(a)) | (TPat::Query(pa), JustTerm::Query(a)) => {
            match_term(pa, a, b)
        }
        _ => false,
    }
}

fn match_pat<F: Formula>(p: &Pat, f: &F, b: &mut Bindings<F>) -> bool {
    match (p, f.view()) {
        (Pat::Meta(m), _) => match b.formulas.get(m) {
            Some(bound) => bound == f,
            None => {
                b.formulas.insert(*m, f.clone());
                true
            }
        },
        (Pat::Bot, View::Bottom) => true,
        (Pat::Imp(pa, pb), View::Implies(a, c)) | (Pat::And(pa, pb), View::And(a, c)) => {
            match_pat(pa, a, b) && match_pat(pb, c, b)
        }
        (Pat::Holds(pt, pa), View::Holds(t, a)) => {
            match_term(pt, t, &mut b.terms) && match_pat(pa, a, b)
        }
        (Pat::Box(pa), View::Box(a)) => match_pat(pa, a, b),
        _ => false,
    }
}

/// Bindings making the scheme's template syntactically equal to `phi`.
pub fn match_scheme<F: Formula>(scheme: AxiomScheme, phi: &F) -> Option<Bindings<F>> {
    let mut b = Bindings::new();
    match_pat(scheme.template(), phi, &mut b).then_some(b)
}

fn inst_term(p: &TPat, b: &BTreeMap<TMeta, JustTerm>) -> Option<JustTerm> {
    Some(match p {
        TPat::Meta(m) => b.get(m)?.clone(),
        TPat::Sum(x, y) => JustTerm::sum(inst_term(x, b)?, inst_term(y, b)?),
        TPat::App(x, y) => JustTerm::app(inst_term(x, b)?, inst_term(y, b)?),
        TPat::Bang(x) => JustTerm::bang(inst_term(x, b)?),
        TPat::Query(x) => JustTerm::query(inst_term(x, b)?),
    })
}

fn inst_pat<F: Formula>(p: &Pat, b: &Bindings<F>) -> Option<F> {
    Some(match p {
        Pat::Meta(m) => b.formulas.get(m)?.clone(),
        Pat::Bot => F::bottom(),
        Pat::Imp(x, y) => F::mk_implies(inst_pat(x, b)?, inst_pat(y, b)?),
        Pat::And(x, y) => F::mk_and(inst_pat(x, b)?, inst_pat(y, b)?),
        Pat::Holds(t, x) => F::mk_holds(inst_term(t, &b.terms)?, inst_pat(x, b)?)?,
        Pat::Box(x) => F::mk_box(inst_pat(x, b)?)?,
    })
}

/// Instantiates a scheme. `None` when a metavariable is unbound or the
/// scheme does not belong to the formula language.
pub fn instantiate<F: Formula>(scheme: AxiomScheme, bindings: &Bindings<F>) -> Option<F> {
    inst_pat(scheme.template(), bindings)
}

/// For a scheme of the shape `A -> B`, the antecedent `A` of the instance
/// whose consequent is `consequent`, when matching `B` binds every
/// metavariable of `A`.
pub fn antecedent_for<F: Formula>(scheme: AxiomScheme, consequent: &F) -> Option<F> {
    let Pat::Imp(a, b) = scheme.template() else {
        return None;
    };
    let mut bindings = Bindings::new();
    if !match_pat(b, consequent, &mut bindings) {
        return None;
    }
    inst_pat(a, &bindings)
}

/// Bindings making the antecedent of an `A -> B` scheme equal to
/// `antecedent`. Metavariables occurring only in `B` stay unbound.
pub fn bind_antecedent<F: Formula>(scheme: AxiomScheme, antecedent: &F) -> Option<Bindings<F>> {
    let Pat::Imp(a, _) = scheme.template() else {
        return None;
    };
    let mut bindings = Bindings::new();
    match_pat(a, antecedent, &mut bindings).then_some(bindings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_jformula, parse_mformula, JFormula, MFormula};

    fn j(s: &str) -> JFormula {
        parse_jformula(s).unwrap()
    }

    #[test]
    fn match_examples() {
        let b = match_scheme(AxiomScheme::G4, &j("p1 -> (p1 & p1)")).unwrap();
        assert_eq!(b.formula(FMeta::Phi), Some(&j("p1")));
        let b = match_scheme(AxiomScheme::J, &j("x1:(p1->p2) -> (x2:p1 -> (x1*x2):p2)")).unwrap();
        assert_eq!(b.term(TMeta::T), Some(&JustTerm::var(1)));
        assert_eq!(b.term(TMeta::S), Some(&JustTerm::var(2)));
        assert_eq!(b.formula(FMeta::Phi), Some(&j("p1")));
        assert_eq!(b.formula(FMeta::Psi), Some(&j("p2")));
        assert!(match_scheme(AxiomScheme::G4, &j("p1 -> (p2 & p2)")).is_none());
        assert!(match_scheme(AxiomScheme::J, &j("x1:(p1->p2) -> (x2:p1 -> (x2*x1):p2)")).is_none());
    }

    #[test]
    fn modal_schemes() {
        let z: MFormula = parse_mformula("~~[]p1 -> []~~p1").unwrap();
        assert!(match_scheme(AxiomScheme::Z, &z).is_some());
        assert!(match_scheme(AxiomScheme::K, &z).is_none());
        let neg_intro: MFormula = parse_mformula("~[]p1 -> []~[]p1").unwrap();
        assert!(match_scheme(AxiomScheme::NegIntro, &neg_intro).is_some());
        // Justification schemes never match modal formulas and vice versa.
        assert!(match_scheme(AxiomScheme::F, &parse_mformula("[]p1 -> p1").unwrap()).is_none());
        assert!(match_scheme(AxiomScheme::T, &j("x1:p1 -> p1")).is_none());
    }

    #[test]
    fn instantiate_round_trips() {
        for scheme in AxiomScheme::ALL {
            let b: Bindings<JFormula> = Bindings::new()
                .phi(j("p1"))
                .psi(j("p2 & p3"))
                .chi(j("bot"))
                .t(JustTerm::var(1))
                .s(JustTerm::constant(2));
            match scheme.language() {
                SchemeLanguage::Modal => assert!(instantiate(scheme, &b).is_none()),
                _ => {
                    let f = instantiate(scheme, &b).unwrap();
                    assert!(match_scheme(scheme, &f).is_some(), "{scheme}: {f}");
                }
            }
        }
    }

    #[test]
    fn antecedents_from_consequents() {
        assert_eq!(
            antecedent_for(AxiomScheme::G4, &j("p1 & p1")),
            Some(j("p1"))
        );
        assert_eq!(antecedent_for(AxiomScheme::G4, &j("p1 & p2")), None);
        assert_eq!(antecedent_for(AxiomScheme::A2, &j("p1")), None);
        assert_eq!(
            antecedent_for(AxiomScheme::Plus1, &j("(x1+x2):p1")),
            Some(j("x1:p1"))
        );
    }

    #[test]
    fn template_texts() {
        assert_eq!(
            AxiomScheme::J.template_text(),
            "(t:(phi -> psi) -> (s:phi -> (t*s):psi))"
        );
        assert_eq!(AxiomScheme::Query.template_text(), "(~t:phi -> ?t:~t:phi)");
        assert_eq!(AxiomScheme::Z.template_text(), "(~~[]phi -> []~~phi)");
        assert_eq!("4".parse::<AxiomScheme>().unwrap(), AxiomScheme::Four);
        assert_eq!("plus2".parse::<AxiomScheme>().unwrap(), AxiomScheme::Plus2);
    }
}
