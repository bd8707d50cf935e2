//! Terms and formulas of the justification and modal languages.

mod ast;
mod parser;
mod printer;
mod projection;

pub use ast::{Formula, JFormula, JustTerm, MFormula, View};
pub use parser::{parse_jformula, parse_mformula, parse_term, ParseError};
pub use projection::{
    check_realization, forgetful_projection, modal_polarities, project_set, realize, Path,
    Polarity, RealizationVerdict, Step,
};
