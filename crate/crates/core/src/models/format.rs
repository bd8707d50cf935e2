//! Text formats for models (`.gm`) and oracle certificate lists (`.orc`).
//!
//! A model file holds lines such as
//!
//! ```text
//! default_e = 1/2
//! e(p1) = 0
//! evidence = finite
//! default_E = 1
//! E(x1, "p1 -> p2") = 1/3
//! ```
//!
//! `evidence` is one of `finite` (the default), `all_ones`, `transparent`
//! or `x_rooted <x> <GJ45_TCS|GLP_TCS>`. An oracle file starts with a
//! `calculus` line and then lists `theorem <proof file>` and
//! `refutation "<formula>" <model file> <class> [star]` entries.

use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use thiserror::Error;

use super::classes::ModelClass;
use super::eval::Semantics;
use super::evidence::{EvidenceSpec, FiniteEvidence, Model, RootLogic, Valuation, XRootedEvidence};
use super::oracle::{OracleError, Refutation, TheoremhoodOracle};
use crate::algebra::TruthValue;
use crate::calculus::{parse_proof, AnyProof, ConstantSpec, JCalculus, JLogic, ProofFormatError};
use crate::syntax::{parse_term, JFormula, ParseError};

#[derive(Debug, Error)]
pub enum ModelFormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Formula {
        line: usize,
        #[source]
        source: ParseError,
    },
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Proof {
        path: PathBuf,
        #[source]
        source: ProofFormatError,
    },
    #[error("line {line}: {source}")]
    Certificate {
        line: usize,
        #[source]
        source: OracleError,
    },
}

fn syntax(line: usize, message: impl Into<String>) -> ModelFormatError {
    ModelFormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn value(line: usize, s: &str) -> Result<TruthValue, ModelFormatError> {
    s.trim().parse().map_err(|e| syntax(line, format!("{e}")))
}

enum EvidenceKind {
    Finite,
    AllOnes,
    Transparent,
    XRooted(TruthValue, RootLogic),
}

/// Parses a model. `x_rooted` evidence uses `oracle` when given (it must
/// work in the named calculus), else a fresh searching oracle.
pub fn parse_model(
    text: &str,
    oracle: Option<Arc<TheoremhoodOracle>>,
) -> Result<Model, ModelFormatError> {
    let mut valuation = Valuation::default();
    let mut kind = EvidenceKind::Finite;
    let mut finite = FiniteEvidence::new(TruthValue::zero());
    let mut saw_finite_entry = false;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (lhs, rhs) = line
            .rsplit_once('=')
            .ok_or_else(|| syntax(ln, "expected `<key> = <value>`"))?;
        let (lhs, rhs) = (lhs.trim(), rhs.trim());
        if lhs == "default_e" {
            valuation.default = value(ln, rhs)?;
        } else if lhs == "default_E" {
            finite.default = value(ln, rhs)?;
            saw_finite_entry = true;
        } else if lhs == "evidence" {
            let words: Vec<&str> = rhs.split_whitespace().collect();
            kind = match words.as_slice() {
                ["finite"] => EvidenceKind::Finite,
                ["all_ones"] => EvidenceKind::AllOnes,
                ["transparent"] => EvidenceKind::Transparent,
                ["x_rooted", x, logic] => EvidenceKind::XRooted(
                    value(ln, x)?,
                    logic.parse().map_err(|e: String| syntax(ln, e))?,
                ),
                _ => return Err(syntax(ln, format!("unknown evidence `{rhs}`"))),
            };
        } else if let Some(atom) = lhs.strip_prefix("e(p").and_then(|s| s.strip_suffix(')')) {
            let k: u32 = atom
                .parse()
                .ok()
                .filter(|k| *k > 0)
                .ok_or_else(|| syntax(ln, format!("bad atom `p{atom}`")))?;
            valuation.overrides.insert(k, value(ln, rhs)?);
        } else if let Some(inner) = lhs.strip_prefix("E(").and_then(|s| s.strip_suffix(')')) {
            let (term, formula) = inner
                .split_once(',')
                .ok_or_else(|| syntax(ln, "expected `E(<term>, \"<formula>\")`"))?;
            let formula = formula
                .trim()
                .strip_prefix('"')
                .and_then(|s| s.strip_suffix('"'))
                .ok_or_else(|| syntax(ln, "formula must be quoted"))?;
            let t = parse_term(term.trim())
                .map_err(|source| ModelFormatError::Formula { line: ln, source })?;
            let f: JFormula = formula
                .parse()
                .map_err(|source| ModelFormatError::Formula { line: ln, source })?;
            finite.set(t, f, value(ln, rhs)?);
            saw_finite_entry = true;
        } else {
            return Err(syntax(ln, format!("unknown key `{lhs}`")));
        }
    }
    let evidence = match kind {
        EvidenceKind::Finite => EvidenceSpec::Finite(finite),
        _ if saw_finite_entry => {
            return Err(syntax(0, "`E(...)` and `default_E` need finite evidence"))
        }
        EvidenceKind::AllOnes => EvidenceSpec::AllOnes,
        EvidenceKind::Transparent => EvidenceSpec::Transparent,
        EvidenceKind::XRooted(x, logic) => {
            let oracle = match oracle {
                Some(o) if *o.calculus() == logic.calculus() => o,
                Some(o) => {
                    return Err(syntax(
                        0,
                        format!("oracle works in {}, model needs {logic}", o.calculus()),
                    ));
                }
                None => Arc::new(TheoremhoodOracle::searching(logic.calculus())),
            };
            EvidenceSpec::XRooted(XRootedEvidence { x, logic, oracle })
        }
    };
    Ok(Model::new(evidence, valuation))
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "default_e = {}", self.valuation.default)?;
        for (k, v) in &self.valuation.overrides {
            writeln!(f, "e(p{k}) = {v}")?;
        }
        match &self.evidence {
            EvidenceSpec::Finite(ev) => {
                writeln!(f, "evidence = finite")?;
                writeln!(f, "default_E = {}", ev.default)?;
                for (t, phi, v) in ev.entries() {
                    writeln!(f, "E({t}, \"{phi}\") = {v}")?;
                }
                Ok(())
            }
            EvidenceSpec::AllOnes => writeln!(f, "evidence = all_ones"),
            EvidenceSpec::Transparent => writeln!(f, "evidence = transparent"),
            EvidenceSpec::XRooted(x) => writeln!(f, "evidence = x_rooted {} {}", x.x, x.logic),
        }
    }
}

fn read(path: &Path) -> Result<String, ModelFormatError> {
    std::fs::read_to_string(path).map_err(|source| ModelFormatError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Loads an oracle certificate list. Relative paths are resolved against
/// `base_dir`.
pub fn parse_oracle(
    text: &str,
    base_dir: Option<&Path>,
) -> Result<TheoremhoodOracle, ModelFormatError> {
    let resolve = |p: &str| -> PathBuf {
        let p = Path::new(p);
        match base_dir {
            Some(b) if p.is_relative() => b.join(p),
            _ => p.to_path_buf(),
        }
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "missing `calculus` line"))?;
    let words: Vec<&str> = header.split_whitespace().collect();
    let (logic, search) = match words.as_slice() {
        ["calculus", l] => (l, false),
        ["calculus", l, "search"] => (l, true),
        _ => return Err(syntax(hl, "expected `calculus <GJ45|GLP|...> [search]`")),
    };
    let logic: JLogic = logic
        .trim_end_matches("_TCS")
        .parse()
        .map_err(|e: String| syntax(hl, e))?;
    let calc = JCalculus::new(logic, ConstantSpec::Total);
    let oracle = if search {
        TheoremhoodOracle::searching(calc)
    } else {
        TheoremhoodOracle::strict(calc)
    };
    for (ln, line) in lines {
        if let Some(path) = line.strip_prefix("theorem ") {
            let path = resolve(path.trim());
            let text = read(&path)?;
            let proof =
                parse_proof(&text, path.parent()).map_err(|source| ModelFormatError::Proof {
                    path: path.clone(),
                    source,
                })?;
            let AnyProof::Justification(p) = proof else {
                return Err(syntax(
                    ln,
                    "theorem certificates must be justification proofs",
                ));
            };
            oracle
                .add_theorem(p)
                .map_err(|source| ModelFormatError::Certificate { line: ln, source })?;
        } else if let Some(rest) = line.strip_prefix("refutation ") {
            let rest = rest.trim();
            let body = rest
                .strip_prefix('"')
                .ok_or_else(|| syntax(ln, "formula must be quoted"))?;
            let (formula, tail) = body
                .split_once('"')
                .ok_or_else(|| syntax(ln, "unterminated formula"))?;
            let formula: JFormula = formula
                .parse()
                .map_err(|source| ModelFormatError::Formula { line: ln, source })?;
            let words: Vec<&str> = tail.split_whitespace().collect();
            let (path, class, semantics) = match words.as_slice() {
                [p, c] => (p, c, Semantics::Standard),
                [p, c, "star"] => (p, c, Semantics::Star),
                _ => {
                    return Err(syntax(
                        ln,
                        "expected `refutation \"<formula>\" <model> <class> [star]`",
                    ))
                }
            };
            let class: ModelClass = class.parse().map_err(|e: String| syntax(ln, e))?;
            let model = parse_model(&read(&resolve(path))?, None)?;
            oracle
                .add_refutation(Refutation {
                    formula,
                    model,
                    class,
                    semantics,
                })
                .map_err(|source| ModelFormatError::Certificate { line: ln, source })?;
        } else {
            return Err(syntax(ln, format!("unknown entry `{line}`")));
        }
    }
    Ok(oracle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::JustTerm;

    #[test]
    fn model_round_trip() {
        let text =
            "# sample\ndefault_e = 1/2\ne(p1) = 1/3\ndefault_E = 1\nE(x1*x2, \"p1 -> p2\") = 1/4\n";
        let m = parse_model(text, None).unwrap();
        let EvidenceSpec::Finite(ev) = &m.evidence else {
            panic!()
        };
        assert_eq!(
            ev.get(
                &JustTerm::app(JustTerm::var(1), JustTerm::var(2)),
                &"p1 -> p2".parse().unwrap()
            ),
            &TruthValue::ratio(1, 4)
        );
        assert_eq!(m.valuation.get(1), &TruthValue::ratio(1, 3));
        assert_eq!(parse_model(&m.to_string(), None).unwrap(), m);
    }

    #[test]
    fn x_rooted_and_errors() {
        let m = parse_model("evidence = x_rooted 1/2 GJ45_TCS\ndefault_e = 1/2\n", None).unwrap();
        assert!(matches!(m.evidence, EvidenceSpec::XRooted(_)));
        assert!(parse_model("evidence = all_ones\nE(x1, \"p1\") = 0\n", None).is_err());
        assert!(parse_model("e(p0) = 1\n", None).is_err());
        assert!(parse_model("default_e = 3/2\n", None).is_err());
        let err = parse_model("E(x1, \"p1 ->\") = 1\n", None).unwrap_err();
        assert!(matches!(err, ModelFormatError::Formula { line: 1, .. }));
    }
}
