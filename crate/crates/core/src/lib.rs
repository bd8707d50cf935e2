//! Gödel justification logics and standard Gödel modal logics.
//!
//! * [`algebra`]: exact truth values and the Gödel operations.
//! * [`syntax`]: terms, formulas, parser/printer, forgetful projection.
//! * [`calculus`]: Hilbert calculi, constant specifications, proof checking,
//!   lifting, internalization and proof-level projection.
//! * [`models`]: Gödel-Mkrtychev models, both evaluations, class checking
//!   and the x-rooted provability models.
//! * [`realization`]: executable non-realizability demonstrations.
//! * [`gen`]: seeded generators for tests, benchmarks and sampling.

pub mod algebra;
pub mod calculus;
pub mod gen;
pub mod models;
pub mod realization;
pub mod syntax;
