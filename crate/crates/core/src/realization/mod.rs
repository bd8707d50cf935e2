//! Executable demonstrations that the (Z) scheme `~~[]p -> []~~p` has no
//! realization in the Gödel justification logics.
//!
//! Each [`Demonstration`] carries everything needed to re-check it: the
//! model in its text format, the sampling window and constant-chain sample
//! of its class and specification checks, and every theoremhood certificate
//! the oracle used. [`recheck`] rebuilds a certificate-only oracle from the
//! record and replays every check.

mod demos;
mod gap;
mod universe;

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use demos::{
    demo_crisp_recovery, demo_z_failure_no_factivity, demo_z_failure_with_factivity, DemoOptions,
};
pub use gap::{demo_theorem_gap, recheck_gap, GapReport};
pub use universe::{decidable_universe, occurring_pairs};

use crate::algebra::TruthValue;
use crate::calculus::{parse_proof, AnyProof};
use crate::models::{
    check_cs_respect, check_model_class, eval_with, parse_model, ClassVerdict, CsVerdict,
    ModelClass, ModelError, OracleError, Refutation, RootLogic, Semantics, TheoremhoodOracle,
    Universe,
};
use crate::syntax::{JFormula, JustTerm};

#[derive(Debug, Error)]
pub enum DemoError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("the pre-model demonstration needs an atom as target, got `{0}`")]
    NonAtomTarget(JFormula),
    #[error("no refutation of `{0}` is available")]
    TargetNotRefuted(JFormula),
    #[error("{0} has no modal counterpart")]
    NoCounterpart(String),
    #[error("building the witness failed: {0}")]
    Witness(String),
    #[error("{0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DemoKind {
    /// `M_x` over GJ45 with a total specification, standard evaluation.
    ZFailure,
    /// `M'_x` over GLP with a total specification, pre-model evaluation.
    ZFailureFactive,
    CrispToOne,
    CrispToZero,
}

impl DemoKind {
    pub fn is_counterexample(self) -> bool {
        matches!(self, DemoKind::ZFailure | DemoKind::ZFailureFactive)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inputs {
    pub x: TruthValue,
    pub t: JustTerm,
    pub s: JustTerm,
    pub target: JFormula,
}

/// A formula and its value in the demonstration's model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Valued {
    pub formula: JFormula,
    pub value: TruthValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefutationRecord {
    pub formula: JFormula,
    /// Model text.
    pub model: String,
    pub class: ModelClass,
    pub semantics: Semantics,
}

/// Proofs in their text format and refutations, as held by the oracle
/// after the demonstration ran.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificates {
    pub theorems: Vec<String>,
    pub refutations: Vec<RefutationRecord>,
}

impl Certificates {
    pub fn from_oracle(oracle: &TheoremhoodOracle) -> Self {
        let (proofs, refs) = oracle.all_certificates();
        Certificates {
            theorems: proofs.iter().map(|p| p.to_string()).collect(),
            refutations: refs
                .iter()
                .map(|r| RefutationRecord {
                    formula: r.formula.clone(),
                    model: r.model.to_string(),
                    class: r.class,
                    semantics: r.semantics,
                })
                .collect(),
        }
    }

    /// An oracle that knows exactly these certificates, each re-validated.
    pub fn strict_oracle(&self, root: RootLogic) -> Result<TheoremhoodOracle, String> {
        let oracle = TheoremhoodOracle::strict(root.calculus());
        for (i, text) in self.theorems.iter().enumerate() {
            let proof = parse_proof(text, None)
                .map_err(|e| format!("theorem certificate {}: {e}", i + 1))?;
            let AnyProof::Justification(p) = proof else {
                return Err(format!("theorem certificate {} is a modal proof", i + 1));
            };
            oracle
                .add_theorem(p)
                .map_err(|e| format!("theorem certificate {}: {e}", i + 1))?;
        }
        for r in &self.refutations {
            let model = parse_model(&r.model, None)
                .map_err(|e| format!("refutation of `{}`: {e}", r.formula))?;
            let refutation = Refutation {
                formula: r.formula.clone(),
                model,
                class: r.class,
                semantics: r.semantics,
            };
            oracle
                .add_refutation(refutation)
                .map_err(|e| format!("refutation of `{}`: {e}", r.formula))?;
        }
        Ok(oracle)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Demonstration {
    pub name: String,
    pub kind: DemoKind,
    pub root: String,
    pub inputs: Inputs,
    pub semantics: Semantics,
    /// Model text.
    pub model: String,
    pub class: ModelClass,
    pub class_verdict: ClassVerdict,
    pub cs_verdict: CsVerdict,
    /// The realized instances; the first one is the headline.
    pub instances: Vec<Valued>,
    pub intermediates: Vec<Valued>,
    pub evaluation: TruthValue,
    pub conclusion: String,
    pub seed: u64,
    pub universe: Vec<(JustTerm, JFormula)>,
    pub cs_sample: Vec<JFormula>,
    pub certificates: Certificates,
}

impl Demonstration {
    pub fn root_logic(&self) -> Result<RootLogic, String> {
        self.root.parse()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("demonstration {} ({})", self.name, self.root));
        line(format!(
            "  inputs: x = {}, t = {}, s = {}, target = {}",
            self.inputs.x, self.inputs.t, self.inputs.s, self.inputs.target
        ));
        line(format!("  evaluation: {:?}", self.semantics));
        line(format!("  class {}: {}", self.class, self.class_verdict));
        line(format!("  constant specification: {}", self.cs_verdict));
        for v in &self.instances {
            line(format!("  |{}| = {}", v.formula, v.value));
        }
        for v in &self.intermediates {
            line(format!("    |{}| = {}", v.formula, v.value));
        }
        line(format!(
            "  certificates: {} proofs, {} refutations; window of {} pairs (seed {})",
            self.certificates.theorems.len(),
            self.certificates.refutations.len(),
            self.universe.len(),
            self.seed
        ));
        line(format!("  {}", self.conclusion));
        out
    }
}

/// Replays a demonstration from its record alone. Returns the number of
/// checks performed.
pub fn recheck(demo: &Demonstration) -> Result<usize, String> {
    let root = demo.root_logic()?;
    let calc = root.calculus();
    let oracle = Arc::new(demo.certificates.strict_oracle(root)?);
    let model = parse_model(&demo.model, Some(oracle)).map_err(|e| format!("model: {e}"))?;
    let mut checks = 0;

    let universe: Universe = demo.universe.iter().cloned().collect();
    let cv = check_model_class(&model, demo.class, Some(&universe))
        .map_err(|e| format!("class check: {e}"))?;
    if cv != demo.class_verdict {
        return Err(format!(
            "class verdict differs: recorded `{}`, recomputed `{cv}`",
            demo.class_verdict
        ));
    }
    checks += 1;
    let csv = check_cs_respect(&model, &calc, &demo.cs_sample)
        .map_err(|e| format!("specification check: {e}"))?;
    if csv != demo.cs_verdict {
        return Err(format!(
            "specification verdict differs: recorded `{}`, recomputed `{csv}`",
            demo.cs_verdict
        ));
    }
    checks += 1;
    for v in demo.instances.iter().chain(&demo.intermediates) {
        let got = eval_with(&model, &v.formula, demo.semantics)
            .map_err(|e| format!("`{}`: {e}", v.formula))?;
        if got != v.value {
            return Err(format!(
                "`{}` evaluates to {got}, recorded {}",
                v.formula, v.value
            ));
        }
        checks += 1;
    }
    let head = demo.instances.first().ok_or("no instances recorded")?;
    if head.value != demo.evaluation {
        return Err(format!(
            "headline value {} differs from evaluation {}",
            head.value, demo.evaluation
        ));
    }
    if demo.kind.is_counterexample() {
        if !cv.is_accept() || !csv.is_accept() {
            return Err("counterexample model fails its own checks".into());
        }
        if demo.evaluation != demo.inputs.x || demo.evaluation.is_one() {
            return Err(format!(
                "evaluation {} is not x = {}",
                demo.evaluation, demo.inputs.x
            ));
        }
    } else if demo.instances.iter().any(|v| !v.value.is_one()) {
        return Err("a recovered instance is not valid".into());
    }
    Ok(checks)
}
