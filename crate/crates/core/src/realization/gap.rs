use serde::{Deserialize, Serialize};

use super::demos::{demo_z_failure_no_factivity, demo_z_failure_with_factivity, DemoOptions};
use super::{recheck, DemoError, DemoKind, Demonstration};
use crate::algebra::TruthValue;
use crate::calculus::{
    check_proof, parse_proof, AnyProof, AxiomScheme, Bindings, JLogic, MLogic, ProofBuilder,
};
use crate::syntax::{JFormula, JustTerm, MFormula};

/// A modal theorem without realization, with the evidence for both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapReport {
    pub justification: JLogic,
    pub modal: MLogic,
    pub theorem: MFormula,
    /// Text of a modal proof of `theorem`.
    pub modal_proof: String,
    pub demonstrations: Vec<Demonstration>,
    pub inclusion: String,
    pub caveat: String,
}

/// `(t, s)` choices tried in every report.
pub fn gap_pairs() -> Vec<(JustTerm, JustTerm)> {
    vec![
        (JustTerm::var(1), JustTerm::var(2)),
        (JustTerm::var(1), JustTerm::var(1)),
        (JustTerm::constant(1), JustTerm::var(3)),
    ]
}

fn z_theorem() -> MFormula {
    let p = MFormula::atom(1);
    MFormula::implies(
        MFormula::neg(MFormula::neg(MFormula::boxed(p.clone()))),
        MFormula::boxed(MFormula::neg(MFormula::neg(p))),
    )
}

/// The report for `logic` and its modal counterpart: a one-line modal
/// proof of `~~[]p1 -> []~~p1`, and x-rooted countermodels at `x = 1/2` to
/// its realizations `~~t:p1 -> s:~~p1` for the pairs of [`gap_pairs`].
/// Non-factive logics use the GJ45 construction and factive ones the GLP
/// construction under pre-model evaluation; each is contained in the logic
/// the countermodel is built for.
pub fn demo_theorem_gap(logic: JLogic, opts: &DemoOptions) -> Result<GapReport, DemoError> {
    let modal = logic
        .modal_counterpart()
        .ok_or_else(|| DemoError::NoCounterpart(logic.to_string()))?;
    let mut b = ProofBuilder::new(modal);
    b.axiom(AxiomScheme::Z, Bindings::new().phi(MFormula::atom(1)));
    let proof = b.finish();
    check_proof(&proof).map_err(|e| DemoError::Witness(e.to_string()))?;

    let x = TruthValue::ratio(1, 2);
    let p1 = JFormula::atom(1);
    let mut demonstrations = Vec::new();
    for (t, s) in gap_pairs() {
        let d = if logic.is_factive() {
            demo_z_failure_with_factivity(x.clone(), &t, &s, &p1, opts)?
        } else {
            demo_z_failure_no_factivity(x.clone(), &t, &s, &p1, opts)?
        };
        demonstrations.push(d);
    }
    let (host, class) = if logic.is_factive() {
        ("GLP_TCS", "GM4 (pre-model evaluation)")
    } else {
        ("GJ45_TCS", "GM45")
    };
    Ok(GapReport {
        justification: logic,
        modal,
        theorem: z_theorem(),
        modal_proof: proof.to_string(),
        demonstrations,
        inclusion: format!(
            "Every theorem of {logic} with any constant specification projects to a theorem of {modal} by proof projection; \
             the countermodels are {class}-models of {host}, whose theorems include those of {logic}."
        ),
        caveat: "The non-realizability claim ranges over all terms t, s and all constant specifications; \
                 this report certifies it only for the listed (t, s)."
            .into(),
    })
}

impl GapReport {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} vs {}: `{}` is a theorem of {}\n",
            self.justification, self.modal, self.theorem, self.modal
        );
        for l in self.modal_proof.lines() {
            out.push_str("  ");
            out.push_str(l);
            out.push('\n');
        }
        for d in &self.demonstrations {
            out.push_str(&d.to_text());
        }
        out.push_str(&self.inclusion);
        out.push('\n');
        out.push_str(&self.caveat);
        out.push('\n');
        out
    }
}

/// Replays a report: the modal proof, the shape of every demonstration and
/// each demonstration's own checks.
pub fn recheck_gap(report: &GapReport) -> Result<usize, String> {
    if report.justification.modal_counterpart() != Some(report.modal) {
        return Err(format!(
            "{} is not the counterpart of {}",
            report.modal, report.justification
        ));
    }
    let AnyProof::Modal(proof) =
        parse_proof(&report.modal_proof, None).map_err(|e| format!("modal proof: {e}"))?
    else {
        return Err("modal proof is a justification proof".into());
    };
    if proof.system != report.modal {
        return Err(format!(
            "modal proof is in {}, expected {}",
            proof.system, report.modal
        ));
    }
    let checked = check_proof(&proof).map_err(|e| format!("modal proof: {e}"))?;
    if !checked.is_theorem()
        || checked.conclusion != report.theorem
        || report.theorem != z_theorem()
    {
        return Err(format!("modal proof concludes `{}`", checked.conclusion));
    }
    let expected = if report.justification.is_factive() {
        DemoKind::ZFailureFactive
    } else {
        DemoKind::ZFailure
    };
    let mut checks = 1;
    let pairs = gap_pairs();
    if report.demonstrations.len() != pairs.len() {
        return Err(format!("expected {} demonstrations", pairs.len()));
    }
    for (d, (t, s)) in report.demonstrations.iter().zip(&pairs) {
        if d.kind != expected
            || d.inputs.t != *t
            || d.inputs.s != *s
            || d.inputs.target != JFormula::atom(1)
        {
            return Err(format!(
                "demonstration `{}` does not match the report",
                d.name
            ));
        }
        checks += recheck(d).map_err(|e| format!("{}: {e}", d.name))?;
    }
    Ok(checks)
}
