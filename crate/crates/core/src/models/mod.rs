//! Gödel-Mkrtychev models: evidence, evaluation, class membership and the
//! x-rooted provability models.

mod classes;
mod construct;
mod eval;
mod evidence;
mod format;
mod oracle;

pub use classes::{
    check_conditions, check_conditions_sampled, check_cs_respect, check_model_class, CheckMode,
    ClassVerdict, Condition, CsVerdict, ModelClass, Universe, Violation,
};
pub use construct::{crisp_shift, make_x_rooted, normal_to_pre, pre_to_normal, CrispDirection};
pub use eval::{eval, eval_set, eval_star, eval_with, Semantics};
pub use evidence::{
    EvidenceSpec, FiniteEvidence, Model, ModelError, RootLogic, Valuation, XRootedEvidence,
};
pub use format::{parse_model, parse_oracle, ModelFormatError};
pub use oracle::{
    validate_refutation, Decision, OracleError, Refutation, TheoremhoodOracle, Verdict,
};
