//! Certified theoremhood decisions.
//!
//! Theoremhood is never guessed. A formula is a theorem when a checked
//! proof is at hand, and a non-theorem when a model of the matching class,
//! respecting the constant specification, gives it a value below 1.
//! Certificates can be supplied explicitly; with search enabled the oracle
//! also looks for short proofs and small countermodels on its own.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use thiserror::Error;

use super::classes::{check_cs_respect, check_model_class, ModelClass};
use super::eval::{eval_with, Semantics};
use super::evidence::{EvidenceSpec, FiniteEvidence, Model, Valuation};
use crate::algebra::TruthValue;
use crate::calculus::{
    antecedent_for, axiom_scheme_of, check_proof, AxiomScheme, Bindings, JCalculus, JLogic, JProof,
    ProofBuilder, ProofDefect, ProofSystem,
};
use crate::syntax::{Formula, JFormula, JustTerm};

/// A model refuting `formula`, together with the class it is checked
/// against and the evaluation used.
#[derive(Debug, Clone, PartialEq)]
pub struct Refutation {
    pub formula: JFormula,
    pub model: Model,
    pub class: ModelClass,
    pub semantics: Semantics,
}

#[derive(Debug, Clone)]
pub enum Decision {
    Theorem(Arc<JProof>),
    NonTheorem(Arc<Refutation>),
    Unknown,
}

/// Answer to "is `|- phi` and `|- t:phi`?".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("proof does not check: {0}")]
    BadProof(#[from] ProofDefect),
    #[error("proof is in {found}, the oracle works in {expected}")]
    CalculusMismatch { expected: String, found: String },
    #[error("proof depends on hypotheses")]
    HasHypotheses,
    #[error("refutation rejected: {0}")]
    BadRefutation(String),
}

#[derive(Default)]
struct Store {
    given_proofs: BTreeMap<JFormula, Arc<JProof>>,
    given_refutations: BTreeMap<JFormula, Arc<Refutation>>,
    found_proofs: BTreeMap<JFormula, Arc<JProof>>,
    found_refutations: BTreeMap<JFormula, Arc<Refutation>>,
    // Deepest search budget that failed to prove the formula.
    failed: BTreeMap<JFormula, usize>,
}

pub struct TheoremhoodOracle {
    calculus: JCalculus,
    search: bool,
    store: RwLock<Store>,
}

impl fmt::Debug for TheoremhoodOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.store.read().unwrap();
        f.debug_struct("TheoremhoodOracle")
            .field("calculus", &self.calculus.to_string())
            .field("search", &self.search)
            .field("theorems", &(s.given_proofs.len() + s.found_proofs.len()))
            .field(
                "refutations",
                &(s.given_refutations.len() + s.found_refutations.len()),
            )
            .finish()
    }
}

const SEARCH_DEPTH: usize = 6;

impl TheoremhoodOracle {
    /// An oracle that searches for certificates on demand.
    pub fn searching(calculus: JCalculus) -> Self {
        TheoremhoodOracle {
            calculus,
            search: true,
            store: RwLock::default(),
        }
    }

    /// An oracle restricted to supplied certificates, axiom instances and
    /// constant-specification members.
    pub fn strict(calculus: JCalculus) -> Self {
        TheoremhoodOracle {
            calculus,
            search: false,
            store: RwLock::default(),
        }
    }

    pub fn calculus(&self) -> &JCalculus {
        &self.calculus
    }

    pub fn searches(&self) -> bool {
        self.search
    }

    pub fn add_theorem(&self, proof: JProof) -> Result<(), OracleError> {
        if proof.system != self.calculus {
            return Err(OracleError::CalculusMismatch {
                expected: self.calculus.to_string(),
                found: proof.system.to_string(),
            });
        }
        let checked = check_proof(&proof)?;
        if !checked.is_theorem() || !proof.hypotheses.is_empty() {
            return Err(OracleError::HasHypotheses);
        }
        self.store
            .write()
            .unwrap()
            .given_proofs
            .insert(checked.conclusion, Arc::new(proof));
        Ok(())
    }

    /// Validates and stores a refutation.
    pub fn add_refutation(&self, r: Refutation) -> Result<(), OracleError> {
        validate_refutation(&self.calculus, &r).map_err(OracleError::BadRefutation)?;
        self.store
            .write()
            .unwrap()
            .given_refutations
            .insert(r.formula.clone(), Arc::new(r));
        Ok(())
    }

    pub fn theorem_certificates(&self) -> Vec<Arc<JProof>> {
        self.store
            .read()
            .unwrap()
            .given_proofs
            .values()
            .cloned()
            .collect()
    }

    pub fn refutation_certificates(&self) -> Vec<Arc<Refutation>> {
        self.store
            .read()
            .unwrap()
            .given_refutations
            .values()
            .cloned()
            .collect()
    }

    /// Every certificate held, supplied or found, keyed by formula.
    pub fn all_certificates(&self) -> (Vec<Arc<JProof>>, Vec<Arc<Refutation>>) {
        let s = self.store.read().unwrap();
        let mut proofs: BTreeMap<&JFormula, &Arc<JProof>> = s.found_proofs.iter().collect();
        proofs.extend(s.given_proofs.iter());
        let mut refs: BTreeMap<&JFormula, &Arc<Refutation>> = s.found_refutations.iter().collect();
        refs.extend(s.given_refutations.iter());
        (
            proofs.into_values().cloned().collect(),
            refs.into_values().cloned().collect(),
        )
    }

    fn stored(&self, phi: &JFormula) -> Decision {
        let s = self.store.read().unwrap();
        if let Some(p) = s.given_proofs.get(phi).or_else(|| s.found_proofs.get(phi)) {
            return Decision::Theorem(p.clone());
        }
        if let Some(r) = s
            .given_refutations
            .get(phi)
            .or_else(|| s.found_refutations.get(phi))
        {
            return Decision::NonTheorem(r.clone());
        }
        Decision::Unknown
    }

    /// Looks up or searches for a certificate deciding `|- phi`.
    pub fn decide(&self, phi: &JFormula) -> Decision {
        match self.stored(phi) {
            Decision::Unknown => {}
            known => return known,
        }
        let depth = if self.search { SEARCH_DEPTH } else { 0 };
        if let Some(p) = self.prove(phi, depth) {
            return Decision::Theorem(p);
        }
        if self.search {
            if let Some(r) = refute(&self.calculus, phi) {
                let r = Arc::new(r);
                self.store
                    .write()
                    .unwrap()
                    .found_refutations
                    .insert(phi.clone(), r.clone());
                return Decision::NonTheorem(r);
            }
        }
        Decision::Unknown
    }

    /// Decides the conjunction `|- phi` and `|- t:phi`; a refutation of
    /// either conjunct settles it negatively.
    pub fn decide_pair(&self, t: &JustTerm, phi: &JFormula) -> Verdict {
        let first = self.decide(phi);
        if matches!(first, Decision::NonTheorem(_)) {
            return Verdict::No;
        }
        match (first, self.decide(&JFormula::holds(t.clone(), phi.clone()))) {
            (_, Decision::NonTheorem(_)) => Verdict::No,
            (Decision::Theorem(_), Decision::Theorem(_)) => Verdict::Yes,
            _ => Verdict::Unknown,
        }
    }

    /// A certified proof of `phi`, built from axioms, constant-specification
    /// members, supplied theorems and the justification rules.
    fn prove(&self, phi: &JFormula, depth: usize) -> Option<Arc<JProof>> {
        if let Decision::Theorem(p) = self.stored(phi) {
            return Some(p);
        }
        let calc = &self.calculus;
        let mut b = ProofBuilder::new(calc.clone());
        if let Some(scheme) = axiom_scheme_of(calc.logic, phi) {
            b.axiom_formula(scheme, phi.clone());
        } else if calc.cs_member(phi) {
            b.cs(phi.clone());
        } else if depth == 0
            || self
                .store
                .read()
                .unwrap()
                .failed
                .get(phi)
                .is_some_and(|d| *d >= depth)
        {
            return None;
        } else if self.derive(&mut b, phi, depth).is_none() {
            self.store
                .write()
                .unwrap()
                .failed
                .insert(phi.clone(), depth);
            return None;
        }
        let proof = b.finish();
        debug_assert!(
            check_proof(&proof).is_ok(),
            "oracle built a bad proof for {phi}"
        );
        let proof = Arc::new(proof);
        self.store
            .write()
            .unwrap()
            .found_proofs
            .insert(phi.clone(), proof.clone());
        Some(proof)
    }

    /// Formulas `chi` with `chi -> theta` an axiom instance, fixed by `theta`.
    fn backward(&self, theta: &JFormula) -> Vec<JFormula> {
        let mut out: Vec<JFormula> = Vec::new();
        for scheme in self.calculus.logic.schemes() {
            if let Some(chi) = antecedent_for(scheme, theta) {
                if chi != *theta && !out.contains(&chi) {
                    out.push(chi);
                }
            }
        }
        out
    }

    /// Appends a derivation of `phi` to `b`.
    fn derive(
        &self,
        b: &mut ProofBuilder<JCalculus>,
        phi: &JFormula,
        depth: usize,
    ) -> Option<usize> {
        let logic = self.calculus.logic;
        let sub = |f: &JFormula| self.prove(f, depth - 1);
        let splice = |b: &mut ProofBuilder<JCalculus>, p: &JProof| b.splice(p, |k| k);
        if let JFormula::Holds(t, theta) = phi {
            match t {
                JustTerm::Sum(a, c) => {
                    for (scheme, part) in [(AxiomScheme::Plus1, a), (AxiomScheme::Plus2, c)] {
                        if let Some(p) = sub(&JFormula::holds((**part).clone(), (**theta).clone()))
                        {
                            let l = splice(b, &p);
                            let ax = b.axiom(
                                scheme,
                                Bindings::new()
                                    .t((**a).clone())
                                    .s((**c).clone())
                                    .phi((**theta).clone()),
                            );
                            return Some(b.mp(ax, l));
                        }
                    }
                }
                JustTerm::Bang(a) if logic.has_scheme(AxiomScheme::Bang) => {
                    if let JFormula::Holds(a2, psi) = &**theta {
                        if *a2 == **a {
                            let p = sub(theta)?;
                            let l = splice(b, &p);
                            let ax = b.axiom(
                                AxiomScheme::Bang,
                                Bindings::new().t((**a).clone()).phi((**psi).clone()),
                            );
                            return Some(b.mp(ax, l));
                        }
                    }
                }
                JustTerm::Query(a) if logic.has_scheme(AxiomScheme::Query) => {
                    if let JFormula::Implies(h, bot) = &**theta {
                        if let (JFormula::Holds(a2, psi), JFormula::Bottom) = (&**h, &**bot) {
                            if *a2 == **a {
                                let p = sub(theta)?;
                                let l = splice(b, &p);
                                let ax = b.axiom(
                                    AxiomScheme::Query,
                                    Bindings::new().t((**a).clone()).phi((**psi).clone()),
                                );
                                return Some(b.mp(ax, l));
                            }
                        }
                    }
                }
                JustTerm::App(a, c) => {
                    // a:(chi -> theta) among the supplied theorems, then c:chi.
                    let mut candidates: Vec<JFormula> = {
                        let s = self.store.read().unwrap();
                        s.given_proofs
                            .keys()
                            .filter_map(|k| match k {
                                JFormula::Holds(a2, body) if *a2 == **a => match &**body {
                                    JFormula::Implies(chi, th) if **th == **theta => {
                                        Some((**chi).clone())
                                    }
                                    _ => None,
                                },
                                _ => None,
                            })
                            .collect()
                    };
                    candidates.extend(self.backward(theta));
                    for chi in candidates {
                        let major = JFormula::holds(
                            (**a).clone(),
                            JFormula::implies(chi.clone(), (**theta).clone()),
                        );
                        let (Some(pm), Some(pn)) = (
                            sub(&major),
                            sub(&JFormula::holds((**c).clone(), chi.clone())),
                        ) else {
                            continue;
                        };
                        let lm = splice(b, &pm);
                        let ln = splice(b, &pn);
                        let ax = b.axiom(
                            AxiomScheme::J,
                            Bindings::new()
                                .t((**a).clone())
                                .s((**c).clone())
                                .phi(chi)
                                .psi((**theta).clone()),
                        );
                        let l = b.mp(ax, lm);
                        return Some(b.mp(l, ln));
                    }
                }
                _ => {}
            }
        }
        // Modus ponens from a supplied implication.
        let mut antecedents: Vec<JFormula> = {
            let s = self.store.read().unwrap();
            s.given_proofs
                .keys()
                .filter_map(|k| {
                    k.as_implies()
                        .filter(|(_, c)| *c == phi)
                        .map(|(a, _)| a.clone())
                })
                .collect()
        };
        antecedents.extend(self.backward(phi));
        for chi in antecedents {
            let Some(pa) = sub(&chi) else { continue };
            let Some(pi) = sub(&JFormula::implies(chi, phi.clone())) else {
                continue;
            };
            let li = splice(b, &pi);
            let la = splice(b, &pa);
            return Some(b.mp(li, la));
        }
        None
    }
}

fn refutation_class(logic: JLogic) -> Option<(ModelClass, Semantics)> {
    match logic {
        JLogic::GJT => Some((ModelClass::GM, Semantics::Star)),
        JLogic::GLP => Some((ModelClass::GM4, Semantics::Star)),
        JLogic::GJT45 => None,
        other => Some((ModelClass::for_logic(other), Semantics::Standard)),
    }
}

/// Checks that `r` certifies `r.formula` is not a theorem of `calc`.
pub fn validate_refutation(calc: &JCalculus, r: &Refutation) -> Result<(), String> {
    if !r.model.evidence.is_exactly_checkable() {
        return Err(format!(
            "{} evidence cannot be checked exactly",
            r.model.evidence.kind()
        ));
    }
    let allowed = match r.semantics {
        Semantics::Standard => r.class == ModelClass::for_logic(calc.logic),
        Semantics::Star => refutation_class(calc.logic) == Some((r.class, Semantics::Star)),
    };
    if !allowed {
        return Err(format!(
            "class {} under {:?} evaluation does not certify non-theorems of {}",
            r.class, r.semantics, calc
        ));
    }
    let cv = check_model_class(&r.model, r.class, None).map_err(|e| e.to_string())?;
    if let Some(v) = cv.violation {
        return Err(format!("model is not in {}: {v}", r.class));
    }
    let csv = check_cs_respect(&r.model, calc, &[]).map_err(|e| e.to_string())?;
    if let Some((m, v)) = csv.violation {
        return Err(format!(
            "model gives {v} to constant-specification member `{m}`"
        ));
    }
    let value = eval_with(&r.model, &r.formula, r.semantics).map_err(|e| e.to_string())?;
    if value.is_one() {
        return Err(format!("`{}` evaluates to 1", r.formula));
    }
    Ok(())
}

/// Keys that must be lowered together so that lowering `E(t, theta)` keeps
/// the closure conditions, starting from evidence that is 1 everywhere.
fn lowering_support(
    calc: &JCalculus,
    t: &JustTerm,
    theta: &JFormula,
    out: &mut Vec<(JustTerm, JFormula)>,
) -> bool {
    out.push((t.clone(), theta.clone()));
    match t {
        JustTerm::Variable(_) | JustTerm::Query(_) => true,
        JustTerm::Constant(_) => !calc.cs_member(&JFormula::holds(t.clone(), theta.clone())),
        JustTerm::Sum(a, c) => {
            lowering_support(calc, a, theta, out) && lowering_support(calc, c, theta, out)
        }
        JustTerm::Bang(a) => match theta {
            JFormula::Holds(a2, psi) if *a2 == **a => lowering_support(calc, a, psi, out),
            _ => true,
        },
        JustTerm::App(..) => false,
    }
}

fn valuations(phi: &JFormula) -> Vec<Valuation> {
    let mut atoms = std::collections::BTreeSet::new();
    phi.atoms(&mut atoms);
    let grid = [
        TruthValue::zero(),
        TruthValue::ratio(1, 2),
        TruthValue::one(),
    ];
    if atoms.len() > 4 {
        return grid.into_iter().map(Valuation::constant).collect();
    }
    let atoms: Vec<u32> = atoms.into_iter().collect();
    let mut out = vec![Valuation::constant(TruthValue::zero())];
    for a in atoms {
        out = out
            .into_iter()
            .flat_map(|v| grid.iter().map(move |g| v.clone().with(a, g.clone())))
            .collect();
    }
    out
}

/// Searches small models for a certified refutation of `phi`.
fn refute(calc: &JCalculus, phi: &JFormula) -> Option<Refutation> {
    let (class, semantics) = refutation_class(calc.logic)?;
    let vals = valuations(phi);
    let mut holds = std::collections::BTreeSet::new();
    phi.holds_subformulas(&mut holds);
    let holds: Vec<(JustTerm, JFormula)> = holds.into_iter().collect();

    let mut evidences = vec![EvidenceSpec::AllOnes];
    let lowered = [TruthValue::zero(), TruthValue::ratio(1, 2)];
    let mut supports: Vec<Vec<(JustTerm, JFormula)>> = Vec::new();
    for (t, theta) in &holds {
        let mut s = Vec::new();
        if lowering_support(calc, t, theta, &mut s) {
            supports.push(s);
        }
    }
    let mut groups: Vec<Vec<&(JustTerm, JFormula)>> =
        supports.iter().map(|s| s.iter().collect()).collect();
    for i in 0..supports.len() {
        for j in i + 1..supports.len() {
            groups.push(supports[i].iter().chain(&supports[j]).collect());
        }
    }
    for g in &groups {
        for v in &lowered {
            let mut ev = FiniteEvidence::new(TruthValue::one());
            for (t, theta) in g {
                ev.set(t.clone(), theta.clone(), v.clone());
            }
            evidences.push(EvidenceSpec::Finite(ev));
        }
    }

    for evidence in evidences {
        let mut admissible: Option<bool> = None;
        for val in &vals {
            let model = Model::new(evidence.clone(), val.clone());
            let Ok(value) = eval_with(&model, phi, semantics) else {
                continue;
            };
            if value.is_one() {
                continue;
            }
            // Closure and constant-specification checks do not depend on
            // the valuation for these classes, so one check per evidence.
            let ok = *admissible.get_or_insert_with(|| {
                let cv = check_model_class(&model, class, None)
                    .map(|v| v.is_accept())
                    .unwrap_or(false);
                cv && check_cs_respect(&model, calc, &[])
                    .map(|v| v.is_accept())
                    .unwrap_or(false)
            });
            if !ok {
                break;
            }
            return Some(Refutation {
                formula: phi.clone(),
                model,
                class,
                semantics,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_jformula;

    fn j(s: &str) -> JFormula {
        parse_jformula(s).unwrap()
    }

    #[test]
    fn atoms_and_double_negations_are_refuted() {
        for calc in [
            JCalculus::total(JLogic::GJ45),
            JCalculus::total(JLogic::GLP),
        ] {
            let o = TheoremhoodOracle::searching(calc);
            for f in ["p1", "~~p1", "x1:p1", "c1:p1"] {
                assert!(matches!(o.decide(&j(f)), Decision::NonTheorem(_)), "{f}");
            }
        }
    }

    #[test]
    fn theorems_are_proved() {
        let o = TheoremhoodOracle::searching(JCalculus::total(JLogic::GJ45));
        for f in [
            "bot -> p1",
            "c1:(bot -> p1)",
            "(c1+x1):(bot -> p1)",
            "!c1:c1:(bot -> p1)",
            "(x2+!c1):c1:(bot -> p1)",
        ] {
            match o.decide(&j(f)) {
                Decision::Theorem(p) => assert_eq!(check_proof(&p).unwrap().conclusion, j(f)),
                other => panic!("{f}: {other:?}"),
            }
        }
        assert_eq!(
            o.decide_pair(&JustTerm::constant(1), &j("bot -> p1")),
            Verdict::Yes
        );
        assert_eq!(o.decide_pair(&JustTerm::var(1), &j("p1")), Verdict::No);
    }

    #[test]
    fn strict_oracle_only_knows_certificates() {
        let o = TheoremhoodOracle::strict(JCalculus::total(JLogic::GJ45));
        assert!(matches!(o.decide(&j("p1")), Decision::Unknown));
        assert!(matches!(o.decide(&j("bot -> p1")), Decision::Theorem(_)));
        let r = Refutation {
            formula: j("p1"),
            model: Model::new(
                EvidenceSpec::AllOnes,
                Valuation::constant(TruthValue::zero()),
            ),
            class: ModelClass::GM45,
            semantics: Semantics::Standard,
        };
        o.add_refutation(r.clone()).unwrap();
        assert!(matches!(o.decide(&j("p1")), Decision::NonTheorem(_)));
        let bad = Refutation {
            formula: j("bot -> p1"),
            ..r
        };
        assert!(o.add_refutation(bad).is_err());
    }

    #[test]
    fn backward_chaining_through_axioms() {
        let o = TheoremhoodOracle::searching(JCalculus::total(JLogic::GJ45));
        for f in [
            "(bot -> p1) & (bot -> p1)",
            "(c1*c2):((bot -> p1) & (bot -> p1))",
        ] {
            assert!(matches!(o.decide(&j(f)), Decision::Theorem(_)), "{f}");
        }
    }

    #[test]
    fn application_uses_supplied_theorems() {
        let calc = JCalculus::total(JLogic::GJ);
        let o = TheoremhoodOracle::searching(calc.clone());
        let mut b = ProofBuilder::new(calc);
        b.cs(j("c1:(bot -> p1)"));
        o.add_theorem(b.finish()).unwrap();
        let target = j("c1:(bot -> p1)");
        assert!(matches!(o.decide(&target), Decision::Theorem(_)));
    }
}
