//! Hilbert calculi for the justification and modal logics.

pub mod derived;
mod format;
mod lift;
mod project;
mod proof;
mod schemes;
mod system;

pub use format::{parse_constant_spec, parse_proof, AnyProof, ProofFormatError};
pub use lift::{internalize, lift, LiftError, Lifted};
pub use project::{project_proof, ProjectError};
pub use proof::{
    check_proof, CheckedProof, DefectKind, JProof, MProof, Proof, ProofBuilder, ProofDefect,
    ProofLine, Rule,
};
pub use schemes::{
    antecedent_for, bind_antecedent, instantiate, match_scheme, AxiomScheme, Bindings, FMeta,
    SchemeLanguage, TMeta,
};
pub use system::{
    axiom_scheme_of, chain_length, is_axiom_instance, ConstantSpec, CsError, FiniteCs, JCalculus,
    JLogic, MLogic, ProofSystem, SchemeSet,
};
