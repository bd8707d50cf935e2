//! The calculi and their constant specifications.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::schemes::{match_scheme, AxiomScheme};
use crate::syntax::{Formula, JFormula, JustTerm, MFormula};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum JLogic {
    GJ,
    GJT,
    GJ4,
    GLP,
    GJ45,
    GJT45,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MLogic {
    GK,
    GT,
    GK4,
    GS4,
    GK45,
}

impl JLogic {
    pub const ALL: [JLogic; 6] = [
        JLogic::GJ,
        JLogic::GJT,
        JLogic::GJ4,
        JLogic::GLP,
        JLogic::GJ45,
        JLogic::GJT45,
    ];

    pub fn name(self) -> &'static str {
        match self {
            JLogic::GJ => "GJ",
            JLogic::GJT => "GJT",
            JLogic::GJ4 => "GJ4",
            JLogic::GLP => "GLP",
            JLogic::GJ45 => "GJ45",
            JLogic::GJT45 => "GJT45",
        }
    }

    pub fn is_factive(self) -> bool {
        matches!(self, JLogic::GJT | JLogic::GLP | JLogic::GJT45)
    }

    pub fn has_positive_introspection(self) -> bool {
        matches!(
            self,
            JLogic::GJ4 | JLogic::GLP | JLogic::GJ45 | JLogic::GJT45
        )
    }

    pub fn has_negative_introspection(self) -> bool {
        matches!(self, JLogic::GJ45 | JLogic::GJT45)
    }

    pub fn has_scheme(self, s: AxiomScheme) -> bool {
        use AxiomScheme::*;
        match s {
            A1 | A2 | A3 | A5a | A5b | A6 | A7 | G4 | J | Plus1 | Plus2 => true,
            F => self.is_factive(),
            Bang => self.has_positive_introspection(),
            Query => self.has_negative_introspection(),
            K | Z | T | Four | NegIntro => false,
        }
    }

    pub fn schemes(self) -> impl Iterator<Item = AxiomScheme> {
        AxiomScheme::ALL
            .into_iter()
            .filter(move |s| self.has_scheme(*s))
    }

    /// The modal logic whose theorems are the projections of this logic's
    /// theorems. `GJT45` has none.
    pub fn modal_counterpart(self) -> Option<MLogic> {
        match self {
            JLogic::GJ => Some(MLogic::GK),
            JLogic::GJT => Some(MLogic::GT),
            JLogic::GJ4 => Some(MLogic::GK4),
            JLogic::GLP => Some(MLogic::GS4),
            JLogic::GJ45 => Some(MLogic::GK45),
            JLogic::GJT45 => None,
        }
    }
}

impl MLogic {
    pub const ALL: [MLogic; 5] = [
        MLogic::GK,
        MLogic::GT,
        MLogic::GK4,
        MLogic::GS4,
        MLogic::GK45,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MLogic::GK => "GK",
            MLogic::GT => "GT",
            MLogic::GK4 => "GK4",
            MLogic::GS4 => "GS4",
            MLogic::GK45 => "GK45",
        }
    }

    pub fn has_scheme(self, s: AxiomScheme) -> bool {
        use AxiomScheme::*;
        match s {
            A1 | A2 | A3 | A5a | A5b | A6 | A7 | G4 | K | Z => true,
            T => matches!(self, MLogic::GT | MLogic::GS4),
            Four => matches!(self, MLogic::GK4 | MLogic::GS4 | MLogic::GK45),
            NegIntro => self == MLogic::GK45,
            J | Plus1 | Plus2 | F | Bang | Query => false,
        }
    }

    pub fn schemes(self) -> impl Iterator<Item = AxiomScheme> {
        AxiomScheme::ALL
            .into_iter()
            .filter(move |s| self.has_scheme(*s))
    }
}

impl fmt::Display for JLogic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for MLogic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for JLogic {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        JLogic::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown justification logic `{s}`"))
    }
}

impl FromStr for MLogic {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MLogic::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown modal logic `{s}`"))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CsError {
    #[error("`{0}` is not of the form c:A with c a constant")]
    NotConstantFormula(JFormula),
    #[error("`{0}` does not end in an axiom instance of {1}")]
    NotAxiomChain(JFormula, JLogic),
    #[error("`{member}` is in the constant specification but `{missing}` is not")]
    NotDownwardClosed { member: JFormula, missing: JFormula },
    #[error("no constant c with c:`{0}` in the constant specification")]
    MissingConstant(JFormula),
}

/// An explicit, finite constant specification.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteCs {
    members: Arc<BTreeSet<JFormula>>,
}

impl fmt::Debug for FiniteCs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

impl FiniteCs {
    pub fn new(members: impl IntoIterator<Item = JFormula>) -> Self {
        FiniteCs {
            members: Arc::new(members.into_iter().collect()),
        }
    }

    pub fn members(&self) -> &BTreeSet<JFormula> {
        &self.members
    }

    pub fn contains(&self, f: &JFormula) -> bool {
        self.members.contains(f)
    }

    /// Every member must be `c:A` with `A` an axiom instance of `logic` or
    /// itself a member.
    pub fn validate(&self, logic: JLogic) -> Result<(), CsError> {
        for m in self.members.iter() {
            let JFormula::Holds(JustTerm::Constant(_), body) = m else {
                return Err(CsError::NotConstantFormula(m.clone()));
            };
            if !is_axiom_instance(logic, &**body) {
                if !matches!(**body, JFormula::Holds(JustTerm::Constant(_), _)) {
                    return Err(CsError::NotAxiomChain(m.clone(), logic));
                }
                if !self.members.contains(body) {
                    return Err(CsError::NotDownwardClosed {
                        member: m.clone(),
                        missing: (**body).clone(),
                    });
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstantSpec {
    /// Every `c_n:...:c_1:A` with `A` an axiom instance.
    Total,
    Finite(FiniteCs),
}

impl ConstantSpec {
    pub fn is_total(&self) -> bool {
        matches!(self, ConstantSpec::Total)
    }

    pub fn contains(&self, logic: JLogic, f: &JFormula) -> bool {
        match self {
            ConstantSpec::Total => is_total_member(logic, f),
            ConstantSpec::Finite(cs) => cs.contains(f),
        }
    }

    /// A constant `c` with `c:f` in the specification. For the total
    /// specification this is `c1` on axioms and `c(k+1)` on chains of
    /// length `k`; for finite ones, the least such constant.
    pub fn constant_for(&self, logic: JLogic, f: &JFormula) -> Result<u32, CsError> {
        match self {
            ConstantSpec::Total => {
                let k = chain_length(f);
                if is_total_member_or_axiom(logic, f) {
                    Ok(k as u32 + 1)
                } else {
                    Err(CsError::MissingConstant(f.clone()))
                }
            }
            ConstantSpec::Finite(cs) => cs
                .members()
                .iter()
                .find_map(|m| match m {
                    JFormula::Holds(JustTerm::Constant(c), body) if **body == *f => Some(*c),
                    _ => None,
                })
                .ok_or_else(|| CsError::MissingConstant(f.clone())),
        }
    }
}

impl fmt::Display for ConstantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstantSpec::Total => f.write_str("total"),
            ConstantSpec::Finite(cs) => {
                let parts: Vec<String> = cs.members().iter().map(|m| m.to_string()).collect();
                write!(f, "{{{}}}", parts.join("; "))
            }
        }
    }
}

/// Number of leading `c:` prefixes with `c` a constant.
pub fn chain_length(f: &JFormula) -> usize {
    let mut k = 0;
    let mut cur = f;
    while let JFormula::Holds(JustTerm::Constant(_), body) = cur {
        k += 1;
        cur = body;
    }
    k
}

fn strip_chain(f: &JFormula) -> &JFormula {
    let mut cur = f;
    while let JFormula::Holds(JustTerm::Constant(_), body) = cur {
        cur = body;
    }
    cur
}

pub fn is_axiom_instance<F: Formula>(logic: impl SchemeSet, f: &F) -> bool {
    logic
        .scheme_list()
        .iter()
        .any(|s| match_scheme(*s, f).is_some())
}

/// The first scheme (in declaration order) the formula instantiates.
pub fn axiom_scheme_of<F: Formula>(logic: impl SchemeSet, f: &F) -> Option<AxiomScheme> {
    logic
        .scheme_list()
        .into_iter()
        .find(|s| match_scheme(*s, f).is_some())
}

fn is_total_member(logic: JLogic, f: &JFormula) -> bool {
    chain_length(f) >= 1 && is_axiom_instance(logic, strip_chain(f))
}

fn is_total_member_or_axiom(logic: JLogic, f: &JFormula) -> bool {
    is_axiom_instance(logic, strip_chain(f))
}

/// Anything that fixes a set of axiom schemes.
pub trait SchemeSet: Copy {
    fn scheme_list(self) -> Vec<AxiomScheme>;
}

impl SchemeSet for JLogic {
    fn scheme_list(self) -> Vec<AxiomScheme> {
        self.schemes().collect()
    }
}

impl SchemeSet for MLogic {
    fn scheme_list(self) -> Vec<AxiomScheme> {
        self.schemes().collect()
    }
}

/// A justification logic together with its constant specification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JCalculus {
    pub logic: JLogic,
    pub cs: ConstantSpec,
}

impl JCalculus {
    pub fn new(logic: JLogic, cs: ConstantSpec) -> Self {
        JCalculus { logic, cs }
    }

    pub fn total(logic: JLogic) -> Self {
        JCalculus {
            logic,
            cs: ConstantSpec::Total,
        }
    }
}

impl fmt::Display for JCalculus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.cs {
            ConstantSpec::Total => write!(f, "{}_TCS", self.logic),
            ConstantSpec::Finite(_) => write!(f, "{}_CS", self.logic),
        }
    }
}

/// What a proof checker needs to know about a calculus.
pub trait ProofSystem:
    Clone + fmt::Debug + fmt::Display + PartialEq + Send + Sync + 'static
{
    type Formula: Formula;

    fn has_scheme(&self, s: AxiomScheme) -> bool;
    fn schemes(&self) -> Vec<AxiomScheme>;
    /// Whether `f` may be introduced by the constant specification rule.
    fn cs_member(&self, f: &Self::Formula) -> bool;
    /// Whether the necessitation rule is available.
    fn has_necessitation(&self) -> bool;
    /// First line of the textual proof format.
    fn header(&self) -> String;
}

impl ProofSystem for JCalculus {
    type Formula = JFormula;

    fn has_scheme(&self, s: AxiomScheme) -> bool {
        self.logic.has_scheme(s)
    }

    fn schemes(&self) -> Vec<AxiomScheme> {
        self.logic.schemes().collect()
    }

    fn cs_member(&self, f: &JFormula) -> bool {
        self.cs.contains(self.logic, f)
    }

    fn has_necessitation(&self) -> bool {
        false
    }

    fn header(&self) -> String {
        format!("calculus {} cs {}", self.logic, self.cs)
    }
}

impl ProofSystem for MLogic {
    type Formula = MFormula;

    fn has_scheme(&self, s: AxiomScheme) -> bool {
        MLogic::has_scheme(*self, s)
    }

    fn schemes(&self) -> Vec<AxiomScheme> {
        MLogic::schemes(*self).collect()
    }

    fn cs_member(&self, _: &MFormula) -> bool {
        false
    }

    fn has_necessitation(&self) -> bool {
        true
    }

    fn header(&self) -> String {
        format!("calculus {self}")
    }
}
