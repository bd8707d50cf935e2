//! Valuations, evidence functions and models.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use super::oracle::TheoremhoodOracle;
use crate::algebra::TruthValue;
use crate::calculus::{JCalculus, JLogic};
use crate::syntax::{JFormula, JustTerm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("undecided evidence: the oracle has no certificate deciding `{formula}` together with `{term}:{formula}`")]
    Undecided { term: JustTerm, formula: JFormula },
    #[error("x must lie strictly between 0 and 1, got {0}")]
    RootOutOfRange(TruthValue),
    #[error("{0} evidence needs a sampling universe")]
    UniverseRequired(&'static str),
    #[error("oracle works in {found}, but {expected} was requested")]
    OracleMismatch { expected: String, found: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// Atom valuation: a default value plus finitely many overrides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valuation {
    pub default: TruthValue,
    pub overrides: BTreeMap<u32, TruthValue>,
}

impl Valuation {
    pub fn constant(v: TruthValue) -> Self {
        Valuation {
            default: v,
            overrides: BTreeMap::new(),
        }
    }

    pub fn with(mut self, atom: u32, v: TruthValue) -> Self {
        self.overrides.insert(atom, v);
        self
    }

    pub fn get(&self, atom: u32) -> &TruthValue {
        self.overrides.get(&atom).unwrap_or(&self.default)
    }

    pub fn is_crisp(&self) -> bool {
        self.default.is_crisp() && self.overrides.values().all(TruthValue::is_crisp)
    }
}

impl Default for Valuation {
    fn default() -> Self {
        Valuation::constant(TruthValue::zero())
    }
}

/// Evidence given by a default value and finitely many overrides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteEvidence {
    pub default: TruthValue,
    overrides: BTreeMap<JustTerm, BTreeMap<JFormula, TruthValue>>,
}

impl FiniteEvidence {
    pub fn new(default: TruthValue) -> Self {
        FiniteEvidence {
            default,
            overrides: BTreeMap::new(),
        }
    }

    pub fn with(mut self, t: JustTerm, phi: JFormula, v: TruthValue) -> Self {
        self.set(t, phi, v);
        self
    }

    pub fn set(&mut self, t: JustTerm, phi: JFormula, v: TruthValue) {
        self.overrides.entry(t).or_default().insert(phi, v);
    }

    pub fn get(&self, t: &JustTerm, phi: &JFormula) -> &TruthValue {
        self.overrides
            .get(t)
            .and_then(|m| m.get(phi))
            .unwrap_or(&self.default)
    }

    pub fn override_of(&self, t: &JustTerm, phi: &JFormula) -> Option<&TruthValue> {
        self.overrides.get(t).and_then(|m| m.get(phi))
    }

    /// Overridden entries in term-then-formula order.
    pub fn entries(&self) -> impl Iterator<Item = (&JustTerm, &JFormula, &TruthValue)> {
        self.overrides
            .iter()
            .flat_map(|(t, m)| m.iter().map(move |(f, v)| (t, f, v)))
    }

    pub fn len(&self) -> usize {
        self.overrides.values().map(BTreeMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_crisp(&self) -> bool {
        self.default.is_crisp() && self.entries().all(|(_, _, v)| v.is_crisp())
    }
}

/// The two calculi an x-rooted model can be built over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootLogic {
    Gj45Tcs,
    GlpTcs,
}

impl RootLogic {
    pub fn calculus(self) -> JCalculus {
        match self {
            RootLogic::Gj45Tcs => JCalculus::total(JLogic::GJ45),
            RootLogic::GlpTcs => JCalculus::total(JLogic::GLP),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RootLogic::Gj45Tcs => "GJ45_TCS",
            RootLogic::GlpTcs => "GLP_TCS",
        }
    }
}

impl fmt::Display for RootLogic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RootLogic {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "GJ45_TCS" | "GJ45" => Ok(RootLogic::Gj45Tcs),
            "GLP_TCS" | "GLP" => Ok(RootLogic::GlpTcs),
            _ => Err(format!(
                "unknown root calculus `{s}` (expected GJ45_TCS or GLP_TCS)"
            )),
        }
    }
}

/// Evidence that is 1 on pairs with `|- phi` and `|- t:phi`, and `x`
/// elsewhere. Decisions come from the oracle's certificates.
#[derive(Debug, Clone)]
pub struct XRootedEvidence {
    pub x: TruthValue,
    pub logic: RootLogic,
    pub oracle: Arc<TheoremhoodOracle>,
}

impl PartialEq for XRootedEvidence {
    fn eq(&self, other: &Self) -> bool {
        self.x == other.x && self.logic == other.logic && Arc::ptr_eq(&self.oracle, &other.oracle)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum EvidenceSpec {
    Finite(FiniteEvidence),
    AllOnes,
    XRooted(XRootedEvidence),
    /// `E(t, phi) = |phi|` under the model's own valuation.
    Transparent,
}

impl EvidenceSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            EvidenceSpec::Finite(_) => "finite",
            EvidenceSpec::AllOnes => "all_ones",
            EvidenceSpec::XRooted(_) => "x_rooted",
            EvidenceSpec::Transparent => "transparent",
        }
    }

    /// Whether class membership is decided exactly rather than sampled.
    pub fn is_exactly_checkable(&self) -> bool {
        matches!(self, EvidenceSpec::Finite(_) | EvidenceSpec::AllOnes)
    }

    /// A lower bound on every evidence value.
    pub(crate) fn floor(&self) -> TruthValue {
        match self {
            EvidenceSpec::Finite(f) => f
                .entries()
                .map(|(_, _, v)| v)
                .chain([&f.default])
                .min()
                .cloned()
                .unwrap(),
            EvidenceSpec::AllOnes => TruthValue::one(),
            EvidenceSpec::XRooted(x) => x.x.clone(),
            EvidenceSpec::Transparent => TruthValue::zero(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Model {
    pub evidence: EvidenceSpec,
    pub valuation: Valuation,
}

impl Model {
    pub fn new(evidence: EvidenceSpec, valuation: Valuation) -> Self {
        Model {
            evidence,
            valuation,
        }
    }

    /// Evidence and valuation only take values 0 and 1. Oracle-backed
    /// evidence counts as crisp when its root value is.
    pub fn is_crisp(&self) -> bool {
        let ev = match &self.evidence {
            EvidenceSpec::Finite(f) => f.is_crisp(),
            EvidenceSpec::AllOnes => true,
            EvidenceSpec::XRooted(x) => x.x.is_crisp(),
            EvidenceSpec::Transparent => self.valuation.is_crisp(),
        };
        ev && self.valuation.is_crisp()
    }

    pub fn oracle(&self) -> Option<&Arc<TheoremhoodOracle>> {
        match &self.evidence {
            EvidenceSpec::XRooted(x) => Some(&x.oracle),
            _ => None,
        }
    }
}
