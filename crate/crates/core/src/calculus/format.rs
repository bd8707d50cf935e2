//! Text format for proofs and constant specifications.
//!
//! ```text
//! # comment
//! calculus GJ45 cs total
//! hyp 1: x1:p1
//! 1. x1:p1 ; assume 1
//! 2. bot -> p1 ; axiom A7
//! 3. c1:(bot -> p1) ; cs
//! ```
//!
//! The `cs` clause is `total`, `{f1; f2; ...}` or `file <path>`; modal
//! calculi take no `cs` clause. Rules are `assume k`, `axiom NAME`
//! optionally followed by `{t = ..., phi = ...}`, `mp i j`, `cs` and
//! `nbox i`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use thiserror::Error;

use super::proof::{Proof, ProofLine, Rule};
use super::schemes::{AxiomScheme, Bindings, FMeta, TMeta};
use super::system::{ConstantSpec, CsError, FiniteCs, JCalculus, JLogic, MLogic, ProofSystem};
use crate::syntax::{parse_term, Formula, JFormula, ParseError};

#[derive(Debug, Error)]
pub enum ProofFormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Formula {
        line: usize,
        #[source]
        source: ParseError,
    },
    #[error("cannot read constant specification {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid constant specification: {0}")]
    Cs(#[from] CsError),
}

fn syntax(line: usize, message: impl Into<String>) -> ProofFormatError {
    ProofFormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// A parsed proof in either language.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyProof {
    Justification(Proof<JCalculus>),
    Modal(Proof<MLogic>),
}

impl fmt::Display for AnyProof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyProof::Justification(p) => p.fmt(f),
            AnyProof::Modal(p) => p.fmt(f),
        }
    }
}

/// Parses a list of formulas separated by newlines or `;`, ignoring `#`
/// comments.
pub fn parse_constant_spec(text: &str) -> Result<FiniteCs, ProofFormatError> {
    let mut members = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = strip_comment(raw);
        for piece in content.split(';') {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            members.push(piece.parse::<JFormula>().map_err(|source| {
                ProofFormatError::Formula {
                    line: i + 1,
                    source,
                }
            })?);
        }
    }
    Ok(FiniteCs::new(members))
}

fn strip_comment(s: &str) -> &str {
    s.split('#').next().unwrap_or("")
}

fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l).trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// Parses a proof. A `cs file <path>` clause is resolved relative to
/// `base_dir` when the path is relative.
pub fn parse_proof(text: &str, base_dir: Option<&Path>) -> Result<AnyProof, ProofFormatError> {
    let mut lines = meaningful_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "missing `calculus` header"))?;
    let rest = header
        .strip_prefix("calculus")
        .ok_or_else(|| syntax(hline, "expected `calculus <name>`"))?
        .trim();
    let (name, tail) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
    let tail = tail.trim();
    if let Ok(logic) = name.parse::<MLogic>() {
        if !tail.is_empty() {
            return Err(syntax(
                hline,
                "modal calculi take no constant specification",
            ));
        }
        return parse_body(logic, lines).map(AnyProof::Modal);
    }
    let logic: JLogic = name.parse().map_err(|e: String| syntax(hline, e))?;
    let cs = parse_cs_clause(tail, hline, base_dir)?;
    if let ConstantSpec::Finite(f) = &cs {
        f.validate(logic)?;
    }
    parse_body(JCalculus::new(logic, cs), lines).map(AnyProof::Justification)
}

fn parse_cs_clause(
    tail: &str,
    line: usize,
    base_dir: Option<&Path>,
) -> Result<ConstantSpec, ProofFormatError> {
    if tail.is_empty() {
        return Ok(ConstantSpec::Total);
    }
    let spec = tail
        .strip_prefix("cs")
        .ok_or_else(|| syntax(line, "expected `cs total|{...}|file <path>`"))?
        .trim();
    if spec == "total" {
        return Ok(ConstantSpec::Total);
    }
    if let Some(inner) = spec.strip_prefix('{').and_then(|s| s.strip_suffix('}')) {
        let cs = parse_constant_spec(inner).map_err(|e| match e {
            ProofFormatError::Formula { source, .. } => ProofFormatError::Formula { line, source },
            other => other,
        })?;
        return Ok(ConstantSpec::Finite(cs));
    }
    if let Some(path) = spec.strip_prefix("file") {
        let path = Path::new(path.trim());
        let full = match base_dir {
            Some(base) if path.is_relative() => base.join(path),
            _ => path.to_path_buf(),
        };
        let text = std::fs::read_to_string(&full).map_err(|source| ProofFormatError::Io {
            path: full.clone(),
            source,
        })?;
        return Ok(ConstantSpec::Finite(parse_constant_spec(&text)?));
    }
    Err(syntax(
        line,
        format!("unrecognised constant specification `{spec}`"),
    ))
}

fn parse_body<'a, S: ProofSystem>(
    system: S,
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<Proof<S>, ProofFormatError> {
    let formula = |line: usize, s: &str| -> Result<S::Formula, ProofFormatError> {
        s.trim()
            .parse::<S::Formula>()
            .map_err(|source| ProofFormatError::Formula { line, source })
    };
    let mut declared: BTreeMap<usize, S::Formula> = BTreeMap::new();
    let mut proof_lines = Vec::new();
    for (ln, text) in lines {
        if let Some(rest) = text.strip_prefix("hyp ") {
            let (k, f) = rest
                .split_once(':')
                .ok_or_else(|| syntax(ln, "expected `hyp <k>: <formula>`"))?;
            let k = parse_index(ln, k)?;
            if declared.insert(k, formula(ln, f)?).is_some() {
                return Err(syntax(ln, format!("hypothesis {k} declared twice")));
            }
            continue;
        }
        let (num, rest) = text
            .split_once('.')
            .ok_or_else(|| syntax(ln, "expected `<n>. <formula> ; <rule>`"))?;
        let n = parse_index(ln, num)?;
        if n != proof_lines.len() + 1 {
            return Err(syntax(
                ln,
                format!("expected line number {}, found {n}", proof_lines.len() + 1),
            ));
        }
        let (f, rule) = rest
            .rsplit_once(';')
            .ok_or_else(|| syntax(ln, "missing `; <rule>`"))?;
        let f = formula(ln, f)?;
        let rule = parse_rule::<S::Formula>(ln, rule.trim())?;
        proof_lines.push((ln, ProofLine { formula: f, rule }));
    }
    // Hypotheses not declared explicitly are read off their first use.
    for (_, l) in &proof_lines {
        if let Rule::Assume(k) = l.rule {
            declared.entry(k).or_insert_with(|| l.formula.clone());
        }
    }
    let mut hypotheses = Vec::with_capacity(declared.len());
    for (expected, (k, f)) in (1..).zip(declared) {
        if k != expected {
            return Err(syntax(0, format!("hypothesis {expected} is never stated")));
        }
        hypotheses.push(f);
    }
    Ok(Proof {
        system,
        hypotheses,
        lines: proof_lines.into_iter().map(|(_, l)| l).collect(),
    })
}

fn parse_index(line: usize, s: &str) -> Result<usize, ProofFormatError> {
    s.trim()
        .parse::<usize>()
        .ok()
        .filter(|k| *k > 0)
        .ok_or_else(|| {
            syntax(
                line,
                format!("expected a positive index, found `{}`", s.trim()),
            )
        })
}

fn parse_rule<F: Formula>(line: usize, s: &str) -> Result<Rule<F>, ProofFormatError> {
    let (word, rest) = s.split_once(char::is_whitespace).unwrap_or((s, ""));
    let rest = rest.trim();
    let nums = |want: usize| -> Result<Vec<usize>, ProofFormatError> {
        let v: Vec<usize> = rest
            .split_whitespace()
            .map(|x| parse_index(line, x))
            .collect::<Result<_, _>>()?;
        if v.len() != want {
            return Err(syntax(
                line,
                format!("`{word}` takes {want} line number(s)"),
            ));
        }
        Ok(v)
    };
    match word {
        "assume" => Ok(Rule::Assume(nums(1)?[0])),
        "mp" => {
            let v = nums(2)?;
            Ok(Rule::Mp {
                major: v[0],
                minor: v[1],
            })
        }
        "nbox" => Ok(Rule::NBox(nums(1)?[0])),
        "cs" if rest.is_empty() => Ok(Rule::Cs),
        "axiom" => {
            let (name, binds) = match rest.find('{') {
                Some(i) => (rest[..i].trim(), Some(rest[i..].trim())),
                None => (rest, None),
            };
            let scheme: AxiomScheme = name.parse().map_err(|e: String| syntax(line, e))?;
            let bindings = binds.map(|b| parse_bindings::<F>(line, b)).transpose()?;
            Ok(Rule::Axiom { scheme, bindings })
        }
        _ => Err(syntax(line, format!("unknown rule `{s}`"))),
    }
}

fn parse_bindings<F: Formula>(line: usize, s: &str) -> Result<Bindings<F>, ProofFormatError> {
    let inner = s
        .strip_prefix('{')
        .and_then(|x| x.strip_suffix('}'))
        .ok_or_else(|| syntax(line, "bindings must be enclosed in braces"))?;
    let mut b = Bindings::new();
    for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| syntax(line, format!("expected `name = value`, found `{part}`")))?;
        let v = v.trim();
        let formula = || {
            v.parse::<F>()
                .map_err(|source| ProofFormatError::Formula { line, source })
        };
        let term = || parse_term(v).map_err(|source| ProofFormatError::Formula { line, source });
        match k.trim() {
            "phi" => b.formulas.insert(FMeta::Phi, formula()?).map(drop),
            "psi" => b.formulas.insert(FMeta::Psi, formula()?).map(drop),
            "chi" => b.formulas.insert(FMeta::Chi, formula()?).map(drop),
            "t" => b.terms.insert(TMeta::T, term()?).map(drop),
            "s" => b.terms.insert(TMeta::S, term()?).map(drop),
            other => return Err(syntax(line, format!("unknown metavariable `{other}`"))),
        };
    }
    Ok(b)
}

impl<S: ProofSystem> fmt::Display for Proof<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.system.header())?;
        for (k, h) in self.hypotheses.iter().enumerate() {
            writeln!(f, "hyp {}: {h}", k + 1)?;
        }
        for (i, l) in self.lines.iter().enumerate() {
            writeln!(f, "{}. {} ; {}", i + 1, l.formula, l.rule)?;
        }
        Ok(())
    }
}
