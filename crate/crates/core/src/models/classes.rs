//! Closure conditions, model classes and constant-specification respect.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::eval::eval;
use super::evidence::{EvidenceSpec, FiniteEvidence, Model, ModelError};
use crate::algebra::{tconorm, tnorm, wneg, TruthValue};
use crate::calculus::{JCalculus, JLogic, ProofSystem};
use crate::syntax::{JFormula, JustTerm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Condition {
    /// `E(t, phi -> psi) min E(s, phi) <= E(t*s, psi)`
    Application,
    /// `E(t, phi) max E(s, phi) <= E(t+s, phi)`
    Sum,
    /// `E(t, phi) <= |phi|`
    Factivity,
    /// `E(t, phi) <= E(!t, t:phi)`
    PositiveIntrospection,
    /// `~E(t, phi) <= E(?t, ~t:phi)`
    NegativeIntrospection,
}

impl Condition {
    pub const ALL: [Condition; 5] = [
        Condition::Application,
        Condition::Sum,
        Condition::Factivity,
        Condition::PositiveIntrospection,
        Condition::NegativeIntrospection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Condition::Application => "application",
            Condition::Sum => "sum",
            Condition::Factivity => "factivity",
            Condition::PositiveIntrospection => "positive introspection",
            Condition::NegativeIntrospection => "negative introspection",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ModelClass {
    GM,
    GMT,
    GM4,
    GMLP,
    GM45,
    GMT45,
}

impl ModelClass {
    pub const ALL: [ModelClass; 6] = [
        ModelClass::GM,
        ModelClass::GMT,
        ModelClass::GM4,
        ModelClass::GMLP,
        ModelClass::GM45,
        ModelClass::GMT45,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelClass::GM => "GM",
            ModelClass::GMT => "GMT",
            ModelClass::GM4 => "GM4",
            ModelClass::GMLP => "GMLP",
            ModelClass::GM45 => "GM45",
            ModelClass::GMT45 => "GMT45",
        }
    }

    pub fn conditions(self) -> Vec<Condition> {
        use Condition::*;
        let mut v = vec![Application, Sum];
        if matches!(self, ModelClass::GMT | ModelClass::GMLP | ModelClass::GMT45) {
            v.push(Factivity);
        }
        if matches!(
            self,
            ModelClass::GM4 | ModelClass::GMLP | ModelClass::GM45 | ModelClass::GMT45
        ) {
            v.push(PositiveIntrospection);
        }
        if matches!(self, ModelClass::GM45 | ModelClass::GMT45) {
            v.push(NegativeIntrospection);
        }
        v
    }

    /// The models matching a justification logic.
    pub fn for_logic(logic: JLogic) -> Self {
        match logic {
            JLogic::GJ => ModelClass::GM,
            JLogic::GJT => ModelClass::GMT,
            JLogic::GJ4 => ModelClass::GM4,
            JLogic::GLP => ModelClass::GMLP,
            JLogic::GJ45 => ModelClass::GM45,
            JLogic::GJT45 => ModelClass::GMT45,
        }
    }
}

impl fmt::Display for ModelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelClass {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ModelClass::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown model class `{s}`"))
    }
}

/// A finite window of `(t, phi)` pairs for sampled checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Universe {
    pairs: BTreeSet<(JustTerm, JFormula)>,
}

impl Universe {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, t: JustTerm, phi: JFormula) {
        self.pairs.insert((t, phi));
    }

    /// Adds every `(t, psi)` with `t:psi` a subformula of `phi`.
    pub fn add_formula(&mut self, phi: &JFormula) {
        phi.holds_subformulas(&mut self.pairs);
    }

    pub fn remove(&mut self, t: &JustTerm, phi: &JFormula) -> bool {
        self.pairs.remove(&(t.clone(), phi.clone()))
    }

    pub fn retain(&mut self, f: impl FnMut(&(JustTerm, JFormula)) -> bool) {
        self.pairs.retain(f)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(JustTerm, JFormula)> {
        self.pairs.iter()
    }
}

impl FromIterator<(JustTerm, JFormula)> for Universe {
    fn from_iter<I: IntoIterator<Item = (JustTerm, JFormula)>>(iter: I) -> Self {
        Universe {
            pairs: iter.into_iter().collect(),
        }
    }
}

/// A concrete failing instance of a closure condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub condition: Condition,
    pub t: JustTerm,
    pub s: Option<JustTerm>,
    pub phi: JFormula,
    pub psi: Option<JFormula>,
    pub lhs: TruthValue,
    pub rhs: TruthValue,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at t = {}", self.condition, self.t)?;
        if let Some(s) = &self.s {
            write!(f, ", s = {s}")?;
        }
        write!(f, ", phi = {}", self.phi)?;
        if let Some(psi) = &self.psi {
            write!(f, ", psi = {psi}")?;
        }
        write!(f, ": {} > {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckMode {
    Exact,
    Sampled { pairs: usize },
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckMode::Exact => f.write_str("exact"),
            CheckMode::Sampled { pairs } => write!(f, "sampled over {pairs} pairs"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassVerdict {
    pub conditions: Vec<Condition>,
    pub mode: CheckMode,
    /// Condition instances evaluated.
    pub instances: usize,
    pub violation: Option<Violation>,
}

impl ClassVerdict {
    pub fn is_accept(&self) -> bool {
        self.violation.is_none()
    }
}

impl fmt::Display for ClassVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(f, "accept ({}, {} instances)", self.mode, self.instances),
            Some(v) => write!(f, "reject ({}): {v}", self.mode),
        }
    }
}

struct Checker<'a> {
    model: &'a Model,
    floor: TruthValue,
    instances: usize,
}

type Found = Result<Option<Violation>, ModelError>;

impl Checker<'_> {
    fn e(&self, t: &JustTerm, phi: &JFormula) -> Result<TruthValue, ModelError> {
        self.model.evidence_value(t, phi)
    }

    fn verdict(
        &self,
        lhs: TruthValue,
        rhs: TruthValue,
        mk: impl FnOnce() -> Violation,
    ) -> Option<Violation> {
        (lhs > rhs).then(|| Violation { lhs, rhs, ..mk() })
    }

    fn application(&mut self, t: &JustTerm, s: &JustTerm, phi: &JFormula, psi: &JFormula) -> Found {
        self.instances += 1;
        let a = self.e(t, &JFormula::implies(phi.clone(), psi.clone()))?;
        if a <= self.floor {
            return Ok(None);
        }
        let lhs = tnorm(&a, &self.e(s, phi)?);
        if lhs <= self.floor {
            return Ok(None);
        }
        let rhs = self.e(&JustTerm::app(t.clone(), s.clone()), psi)?;
        Ok(self.verdict(lhs, rhs, || Violation {
            condition: Condition::Application,
            t: t.clone(),
            s: Some(s.clone()),
            phi: phi.clone(),
            psi: Some(psi.clone()),
            lhs: TruthValue::zero(),
            rhs: TruthValue::zero(),
        }))
    }

    fn sum(&mut self, t: &JustTerm, s: &JustTerm, phi: &JFormula) -> Found {
        self.instances += 1;
        let lhs = tconorm(&self.e(t, phi)?, &self.e(s, phi)?);
        if lhs <= self.floor {
            return Ok(None);
        }
        let rhs = self.e(&JustTerm::sum(t.clone(), s.clone()), phi)?;
        Ok(self.verdict(lhs, rhs, || Violation {
            condition: Condition::Sum,
            t: t.clone(),
            s: Some(s.clone()),
            phi: phi.clone(),
            psi: None,
            lhs: TruthValue::zero(),
            rhs: TruthValue::zero(),
        }))
    }

    fn unary(&mut self, cond: Condition, t: &JustTerm, phi: &JFormula) -> Found {
        self.instances += 1;
        let e = self.e(t, phi)?;
        let (lhs, rhs) = match cond {
            Condition::Factivity => {
                if e.is_zero() {
                    return Ok(None);
                }
                let rhs = eval(self.model, phi)?;
                (e, rhs)
            }
            Condition::PositiveIntrospection => {
                if e <= self.floor {
                    return Ok(None);
                }
                let rhs = self.e(
                    &JustTerm::bang(t.clone()),
                    &JFormula::holds(t.clone(), phi.clone()),
                )?;
                (e, rhs)
            }
            Condition::NegativeIntrospection => {
                let lhs = wneg(&e);
                if lhs <= self.floor {
                    return Ok(None);
                }
                let rhs = self.e(
                    &JustTerm::query(t.clone()),
                    &JFormula::neg(JFormula::holds(t.clone(), phi.clone())),
                )?;
                (lhs, rhs)
            }
            Condition::Application | Condition::Sum => unreachable!("binary conditions"),
        };
        Ok(self.verdict(lhs, rhs, || Violation {
            condition: cond,
            t: t.clone(),
            s: None,
            phi: phi.clone(),
            psi: None,
            lhs: TruthValue::zero(),
            rhs: TruthValue::zero(),
        }))
    }
}

/// Checks membership in `class`. Finite and all-ones evidence are decided
/// exactly; oracle-backed and transparent evidence are checked on the
/// instances drawn from `universe`, which is then required.
pub fn check_model_class(
    model: &Model,
    class: ModelClass,
    universe: Option<&Universe>,
) -> Result<ClassVerdict, ModelError> {
    check_conditions(model, &class.conditions(), universe)
}

/// [`check_model_class`] for an arbitrary set of conditions.
pub fn check_conditions(
    model: &Model,
    conditions: &[Condition],
    universe: Option<&Universe>,
) -> Result<ClassVerdict, ModelError> {
    match &model.evidence {
        EvidenceSpec::Finite(f) => exact(model, f, conditions),
        EvidenceSpec::AllOnes => {
            let as_finite = Model::new(
                EvidenceSpec::Finite(FiniteEvidence::new(TruthValue::one())),
                model.valuation.clone(),
            );
            let EvidenceSpec::Finite(f) = &as_finite.evidence else {
                unreachable!()
            };
            exact(&as_finite, f, conditions)
        }
        other => {
            let u = universe.ok_or(ModelError::UniverseRequired(other.kind()))?;
            sampled(model, conditions, u)
        }
    }
}

/// Checks the conditions on the instances generated by `universe`,
/// whatever the evidence.
pub fn check_conditions_sampled(
    model: &Model,
    conditions: &[Condition],
    universe: &Universe,
) -> Result<ClassVerdict, ModelError> {
    sampled(model, conditions, universe)
}

fn sampled(
    model: &Model,
    conditions: &[Condition],
    universe: &Universe,
) -> Result<ClassVerdict, ModelError> {
    let mut ck = Checker {
        model,
        floor: model.evidence.floor(),
        instances: 0,
    };
    let mut by_formula: BTreeMap<&JFormula, Vec<&JustTerm>> = BTreeMap::new();
    for (t, phi) in universe.iter() {
        by_formula.entry(phi).or_default().push(t);
    }
    let done = |ck: &Checker, v: Violation| ClassVerdict {
        conditions: conditions.to_vec(),
        mode: CheckMode::Sampled {
            pairs: universe.len(),
        },
        instances: ck.instances,
        violation: Some(v),
    };
    for cond in conditions {
        match cond {
            Condition::Application => {
                for (t, chi) in universe.iter() {
                    let JFormula::Implies(phi, psi) = chi else {
                        continue;
                    };
                    for s in by_formula.get(&**phi).into_iter().flatten() {
                        if let Some(v) = ck.application(t, s, phi, psi)? {
                            return Ok(done(&ck, v));
                        }
                    }
                }
            }
            Condition::Sum => {
                for (phi, ts) in &by_formula {
                    for t in ts {
                        for s in ts {
                            if let Some(v) = ck.sum(t, s, phi)? {
                                return Ok(done(&ck, v));
                            }
                        }
                    }
                }
            }
            unary => {
                for (t, phi) in universe.iter() {
                    if let Some(v) = ck.unary(*unary, t, phi)? {
                        return Ok(done(&ck, v));
                    }
                }
            }
        }
    }
    Ok(ClassVerdict {
        conditions: conditions.to_vec(),
        mode: CheckMode::Sampled {
            pairs: universe.len(),
        },
        instances: ck.instances,
        violation: None,
    })
}

/// Exact decision for finitely described evidence. A violation needs an
/// overridden key on at least one side, so the candidates below come from
/// the override keys, their head decompositions and fresh witnesses.
fn exact(
    model: &Model,
    ev: &FiniteEvidence,
    conditions: &[Condition],
) -> Result<ClassVerdict, ModelError> {
    let mut ck = Checker {
        model,
        floor: ev
            .entries()
            .map(|(_, _, v)| v)
            .chain([&ev.default])
            .min()
            .cloned()
            .unwrap(),
        instances: 0,
    };
    let d = &ev.default;
    let (mut max_atom, mut max_var) = (0u32, 0u32);
    for (t, phi, _) in ev.entries() {
        let (a, _, v) = phi.max_indices();
        let (_, tv) = t.max_indices();
        max_atom = max_atom.max(a);
        max_var = max_var.max(v).max(tv);
    }
    let fresh_atom = JFormula::atom(max_atom + 1);
    let fresh_var = JustTerm::var(max_var + 1);
    let entries: Vec<(&JustTerm, &JFormula, &TruthValue)> = ev.entries().collect();
    let mut by_formula: BTreeMap<&JFormula, Vec<&JustTerm>> = BTreeMap::new();
    for (t, phi, _) in &entries {
        by_formula.entry(*phi).or_default().push(*t);
    }
    let done = |ck: &Checker, v: Option<Violation>| ClassVerdict {
        conditions: conditions.to_vec(),
        mode: CheckMode::Exact,
        instances: ck.instances,
        violation: v,
    };
    macro_rules! try_inst {
        ($e:expr) => {
            if let Some(v) = $e? {
                return Ok(done(&ck, Some(v)));
            }
        };
    }
    for cond in conditions {
        match cond {
            Condition::Application => {
                // Both premises overridden.
                for (t, chi, _) in &entries {
                    let JFormula::Implies(phi, psi) = chi else {
                        continue;
                    };
                    for s in by_formula.get(&**phi).into_iter().flatten() {
                        try_inst!(ck.application(t, s, phi, psi));
                    }
                }
                // Conclusion overridden.
                for (u, psi, _) in &entries {
                    let JustTerm::App(t, s) = u else { continue };
                    try_inst!(ck.application(t, s, &fresh_atom, psi));
                    for (t2, chi, _) in &entries {
                        if let JFormula::Implies(phi, psi2) = chi {
                            if *t2 == &**t && &**psi2 == *psi {
                                try_inst!(ck.application(t, s, phi, psi));
                            }
                        }
                    }
                    for (s2, phi, _) in &entries {
                        if *s2 == &**s {
                            try_inst!(ck.application(t, s, phi, psi));
                        }
                    }
                }
            }
            Condition::Sum => {
                for (t, phi, v) in &entries {
                    if *v > d {
                        try_inst!(ck.sum(t, &fresh_var, phi));
                    }
                }
                for (u, phi, _) in &entries {
                    if let JustTerm::Sum(t, s) = u {
                        try_inst!(ck.sum(t, s, phi));
                    }
                }
            }
            Condition::Factivity => {
                for (t, phi, _) in &entries {
                    try_inst!(ck.unary(Condition::Factivity, t, phi));
                }
                if !d.is_zero() {
                    try_inst!(ck.unary(Condition::Factivity, &fresh_var, &JFormula::Bottom));
                }
            }
            Condition::PositiveIntrospection => {
                for (t, phi, _) in &entries {
                    try_inst!(ck.unary(Condition::PositiveIntrospection, t, phi));
                }
                for (u, theta, _) in &entries {
                    if let (JustTerm::Bang(t), JFormula::Holds(t2, phi)) = (u, theta) {
                        if **t == *t2 {
                            try_inst!(ck.unary(Condition::PositiveIntrospection, t, phi));
                        }
                    }
                }
            }
            Condition::NegativeIntrospection => {
                for (t, phi, _) in &entries {
                    try_inst!(ck.unary(Condition::NegativeIntrospection, t, phi));
                }
                for (u, theta, _) in &entries {
                    if let (JustTerm::Query(t), JFormula::Implies(h, bot)) = (u, theta) {
                        if let (JFormula::Holds(t2, phi), JFormula::Bottom) = (&**h, &**bot) {
                            if **t == *t2 {
                                try_inst!(ck.unary(Condition::NegativeIntrospection, t, phi));
                            }
                        }
                    }
                }
                if d.is_zero() {
                    try_inst!(ck.unary(
                        Condition::NegativeIntrospection,
                        &fresh_var,
                        &JFormula::Bottom
                    ));
                }
            }
        }
    }
    Ok(done(&ck, None))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsVerdict {
    pub mode: CheckMode,
    /// Members looked up.
    pub checked: usize,
    /// A member `c:phi` with `E(c, phi) < 1`, and that value.
    pub violation: Option<(JFormula, TruthValue)>,
}

impl CsVerdict {
    pub fn is_accept(&self) -> bool {
        self.violation.is_none()
    }
}

impl fmt::Display for CsVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(f, "accept ({}, {} members)", self.mode, self.checked),
            Some((m, v)) => write!(f, "reject ({}): E at `{m}` is {v}", self.mode),
        }
    }
}

/// Does `E(c, phi) = 1` hold for the members `c:phi` of the constant
/// specification? Exact for finite and all-ones evidence; otherwise the
/// members in `sample` are checked.
pub fn check_cs_respect(
    model: &Model,
    calc: &JCalculus,
    sample: &[JFormula],
) -> Result<CsVerdict, ModelError> {
    let member_value = |m: &JFormula| -> Result<TruthValue, ModelError> {
        match m {
            JFormula::Holds(c, body) => model.evidence_value(c, body),
            _ => unreachable!("members have the shape c:phi"),
        }
    };
    let exact_over =
        |members: &mut dyn Iterator<Item = &JFormula>| -> Result<CsVerdict, ModelError> {
            let mut checked = 0;
            for m in members {
                checked += 1;
                let v = member_value(m)?;
                if !v.is_one() {
                    return Ok(CsVerdict {
                        mode: CheckMode::Exact,
                        checked,
                        violation: Some((m.clone(), v)),
                    });
                }
            }
            Ok(CsVerdict {
                mode: CheckMode::Exact,
                checked,
                violation: None,
            })
        };
    match (&model.evidence, &calc.cs) {
        (EvidenceSpec::AllOnes, _) => Ok(CsVerdict {
            mode: CheckMode::Exact,
            checked: 0,
            violation: None,
        }),
        (EvidenceSpec::Finite(_), crate::calculus::ConstantSpec::Finite(cs)) => {
            exact_over(&mut cs.members().iter())
        }
        (EvidenceSpec::Finite(ev), crate::calculus::ConstantSpec::Total) => {
            if !ev.default.is_one() {
                // A member no override touches.
                let max_atom = ev
                    .entries()
                    .map(|(_, f, _)| f.max_indices().0)
                    .max()
                    .unwrap_or(0);
                let witness = JFormula::holds(
                    JustTerm::constant(1),
                    JFormula::implies(JFormula::Bottom, JFormula::atom(max_atom + 1)),
                );
                return Ok(CsVerdict {
                    mode: CheckMode::Exact,
                    checked: 1,
                    violation: Some((witness, ev.default.clone())),
                });
            }
            let mut checked = 0;
            for (t, phi, v) in ev.entries() {
                let m = JFormula::holds(t.clone(), phi.clone());
                if calc.cs_member(&m) {
                    checked += 1;
                    if !v.is_one() {
                        return Ok(CsVerdict {
                            mode: CheckMode::Exact,
                            checked,
                            violation: Some((m, v.clone())),
                        });
                    }
                }
            }
            Ok(CsVerdict {
                mode: CheckMode::Exact,
                checked,
                violation: None,
            })
        }
        _ => {
            for m in sample {
                if !calc.cs_member(m) {
                    return Err(ModelError::Precondition(format!(
                        "`{m}` is not in the constant specification"
                    )));
                }
            }
            let mut v = exact_over(&mut sample.iter())?;
            v.mode = CheckMode::Sampled {
                pairs: sample.len(),
            };
            Ok(v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{ConstantSpec, FiniteCs};
    use crate::models::Valuation;
    use crate::syntax::parse_jformula;

    fn j(s: &str) -> JFormula {
        parse_jformula(s).unwrap()
    }
    fn half() -> TruthValue {
        TruthValue::ratio(1, 2)
    }

    #[test]
    fn all_ones_is_gm45_not_gmt() {
        let m = Model::new(EvidenceSpec::AllOnes, Valuation::constant(half()));
        assert!(check_model_class(&m, ModelClass::GM45, None)
            .unwrap()
            .is_accept());
        let v = check_model_class(&m, ModelClass::GMT, None)
            .unwrap()
            .violation
            .unwrap();
        assert_eq!(v.condition, Condition::Factivity);
        assert_eq!(v.phi, JFormula::Bottom);
    }

    #[test]
    fn application_witness() {
        let ev = FiniteEvidence::new(half()).with(
            JustTerm::app(JustTerm::var(1), JustTerm::var(2)),
            j("p2"),
            TruthValue::ratio(1, 4),
        );
        let m = Model::new(EvidenceSpec::Finite(ev), Valuation::default());
        let v = check_model_class(&m, ModelClass::GM, None)
            .unwrap()
            .violation
            .unwrap();
        assert_eq!(v.condition, Condition::Application);
        assert_eq!(v.t, JustTerm::var(1));
        assert_eq!(v.s, Some(JustTerm::var(2)));
        assert_eq!(v.psi, Some(j("p2")));
        assert!(matches!(v.phi, JFormula::Atom(_)));
        assert_eq!((v.lhs, v.rhs), (half(), TruthValue::ratio(1, 4)));
    }

    #[test]
    fn factivity_forces_default_zero() {
        let m = Model::new(
            EvidenceSpec::Finite(FiniteEvidence::new(TruthValue::ratio(1, 3))),
            Valuation::default(),
        );
        let v = check_model_class(&m, ModelClass::GMT, None)
            .unwrap()
            .violation
            .unwrap();
        assert_eq!(
            (v.condition, v.phi),
            (Condition::Factivity, JFormula::Bottom)
        );
        let zero = Model::new(
            EvidenceSpec::Finite(FiniteEvidence::new(TruthValue::zero())),
            Valuation::default(),
        );
        assert!(check_model_class(&zero, ModelClass::GMLP, None)
            .unwrap()
            .is_accept());
        let v = check_model_class(&zero, ModelClass::GMT45, None)
            .unwrap()
            .violation
            .unwrap();
        assert_eq!(v.condition, Condition::NegativeIntrospection);
    }

    #[test]
    fn transparent_needs_universe() {
        let m = Model::new(EvidenceSpec::Transparent, Valuation::default());
        assert_eq!(
            check_model_class(&m, ModelClass::GMT45, None),
            Err(ModelError::UniverseRequired("transparent"))
        );
        let mut u = Universe::new();
        u.add_formula(&j("x1:(p1 -> p2) -> x2:p1 -> (x1*x2):p2"));
        u.add_formula(&j("~x1:p1 -> ?x1:~x1:p1"));
        assert!(check_model_class(&m, ModelClass::GMT45, Some(&u))
            .unwrap()
            .is_accept());
    }

    #[test]
    fn cs_respect_examples() {
        let m = Model::new(EvidenceSpec::AllOnes, Valuation::default());
        assert!(check_cs_respect(&m, &JCalculus::total(JLogic::GJ), &[])
            .unwrap()
            .is_accept());
        let half_model = Model::new(
            EvidenceSpec::Finite(FiniteEvidence::new(half())),
            Valuation::default(),
        );
        let cs = JCalculus::new(
            JLogic::GJ,
            ConstantSpec::Finite(FiniteCs::new([j("c1:(p1 -> p1 & p1)")])),
        );
        let v = check_cs_respect(&half_model, &cs, &[]).unwrap();
        assert_eq!(v.violation, Some((j("c1:(p1 -> p1 & p1)"), half())));
        let ev = FiniteEvidence::new(TruthValue::one()).with(
            JustTerm::constant(1),
            j("bot -> p1"),
            half(),
        );
        let lowered = Model::new(EvidenceSpec::Finite(ev), Valuation::default());
        assert!(
            !check_cs_respect(&lowered, &JCalculus::total(JLogic::GJ), &[])
                .unwrap()
                .is_accept()
        );
    }
}
