//! Recursive-descent parser for terms and both formula languages.
//!
//! Precedence, tightest first: unary (`~`, `!`, `?`, `t:`, `[]`), `&`
//! (left-associative), `->` (right-associative). Terms use `*` for
//! application and `+` for sum, both left-associative, `*` tighter.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::ast::{Formula, JFormula, JustTerm, MFormula};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Character offset into the input.
    pub position: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at position {}: found {}, expected one of: {}",
            self.position,
            self.found,
            self.expected.join(", ")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Atom(u32),
    Const(u32),
    Var(u32),
    Bot,
    Top,
    Arrow,
    And,
    Not,
    BoxOp,
    LBrack,
    RBrack,
    LParen,
    RParen,
    Colon,
    Plus,
    Star,
    Bang,
    Query,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Atom(i) => format!("`p{i}`"),
            Tok::Const(i) => format!("`c{i}`"),
            Tok::Var(i) => format!("`x{i}`"),
            Tok::Bot => "`bot`".into(),
            Tok::Top => "`top`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::And => "`&`".into(),
            Tok::Not => "`~`".into(),
            Tok::BoxOp => "`[]`".into(),
            Tok::LBrack => "`[`".into(),
            Tok::RBrack => "`]`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Star => "`*`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Query => "`?`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 2;
                Tok::Arrow
            }
            '→' => {
                i += 1;
                Tok::Arrow
            }
            '&' | '∧' => {
                i += 1;
                Tok::And
            }
            '~' | '¬' => {
                i += 1;
                Tok::Not
            }
            '□' => {
                i += 1;
                Tok::BoxOp
            }
            '⊥' => {
                i += 1;
                Tok::Bot
            }
            '⊤' => {
                i += 1;
                Tok::Top
            }
            '[' if chars.get(i + 1) == Some(&']') => {
                i += 2;
                Tok::BoxOp
            }
            '[' => {
                i += 1;
                Tok::LBrack
            }
            ']' => {
                i += 1;
                Tok::RBrack
            }
            '(' => {
                i += 1;
                Tok::LParen
            }
            ')' => {
                i += 1;
                Tok::RParen
            }
            ':' => {
                i += 1;
                Tok::Colon
            }
            '+' => {
                i += 1;
                Tok::Plus
            }
            '*' | '·' => {
                i += 1;
                Tok::Star
            }
            '!' => {
                i += 1;
                Tok::Bang
            }
            '?' => {
                i += 1;
                Tok::Query
            }
            c if c.is_ascii_alphabetic() => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_alphanumeric() {
                    j += 1;
                }
                let word: String = chars[i..j].iter().collect();
                i = j;
                match word.as_str() {
                    "bot" => Tok::Bot,
                    "top" => Tok::Top,
                    _ => indexed_symbol(&word).ok_or_else(|| ParseError {
                        position: start,
                        expected: vec!["`pN`, `cN`, `xN` (N ≥ 1), `bot` or `top`".into()],
                        found: format!("`{word}`"),
                    })?,
                }
            }
            other => {
                return Err(ParseError {
                    position: start,
                    expected: vec!["a formula or term symbol".into()],
                    found: format!("`{other}`"),
                })
            }
        };
        out.push((start, tok));
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

fn indexed_symbol(word: &str) -> Option<Tok> {
    let (head, digits) = word.split_at(1);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    let n: u32 = digits.parse().ok()?;
    match head {
        "p" => Some(Tok::Atom(n)),
        "c" => Some(Tok::Const(n)),
        "x" => Some(Tok::Var(n)),
        _ => None,
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    modal: bool,
}

impl Parser {
    fn new(text: &str, modal: bool) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
            modal,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let (position, tok) = &self.toks[self.pos];
        ParseError {
            position: *position,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.describe(),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[&tok.describe()]))
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.error(&["`->`", "`&`", "end of input"]))
        }
    }

    fn formula<F: Formula>(&mut self) -> Result<F, ParseError> {
        let lhs = self.conj::<F>()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.formula::<F>()?;
            Ok(F::mk_implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn conj<F: Formula>(&mut self) -> Result<F, ParseError> {
        let mut acc = self.unary::<F>()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.unary::<F>()?;
            acc = F::mk_and(acc, rhs);
        }
        Ok(acc)
    }

    fn formula_start_expected(&self) -> Vec<&'static str> {
        if self.modal {
            vec!["`pN`", "`bot`", "`top`", "`~`", "`[]`", "`(`"]
        } else {
            vec![
                "`pN`",
                "`bot`",
                "`top`",
                "`~`",
                "`(`",
                "a justification term",
            ]
        }
    }

    fn unary<F: Formula>(&mut self) -> Result<F, ParseError> {
        match self.peek().clone() {
            Tok::Not => {
                self.bump();
                Ok(F::mk_neg(self.unary::<F>()?))
            }
            Tok::Atom(i) => {
                self.bump();
                Ok(F::mk_atom(i))
            }
            Tok::Bot => {
                self.bump();
                Ok(F::bottom())
            }
            Tok::Top => {
                self.bump();
                Ok(F::mk_implies(F::bottom(), F::bottom()))
            }
            Tok::BoxOp if self.modal => {
                self.bump();
                let body = self.unary::<F>()?;
                Ok(F::mk_box(body).expect("modal language has boxes"))
            }
            Tok::LParen if self.modal => self.parenthesised::<F>(),
            Tok::LParen => {
                // Either a parenthesised term followed by `:` or a
                // parenthesised formula.
                let save = self.pos;
                if let Ok(t) = self.term() {
                    if *self.peek() == Tok::Colon {
                        self.bump();
                        return self.holds_body::<F>(t);
                    }
                }
                self.pos = save;
                self.parenthesised::<F>()
            }
            Tok::Const(_) | Tok::Var(_) | Tok::Bang | Tok::Query | Tok::LBrack if !self.modal => {
                let t = self.term()?;
                self.expect(Tok::Colon)?;
                self.holds_body::<F>(t)
            }
            _ => Err(self.error(&self.formula_start_expected())),
        }
    }

    fn holds_body<F: Formula>(&mut self, t: JustTerm) -> Result<F, ParseError> {
        let body = self.unary::<F>()?;
        Ok(F::mk_holds(t, body).expect("justification language has t:"))
    }

    fn parenthesised<F: Formula>(&mut self) -> Result<F, ParseError> {
        self.expect(Tok::LParen)?;
        let f = self.formula::<F>()?;
        self.expect(Tok::RParen)?;
        Ok(f)
    }

    fn term(&mut self) -> Result<JustTerm, ParseError> {
        let mut acc = self.product()?;
        while *self.peek() == Tok::Plus {
            self.bump();
            let rhs = self.product()?;
            acc = JustTerm::sum(acc, rhs);
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<JustTerm, ParseError> {
        let mut acc = self.term_unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.term_unary()?;
            acc = JustTerm::app(acc, rhs);
        }
        Ok(acc)
    }

    fn term_unary(&mut self) -> Result<JustTerm, ParseError> {
        let tok = self.peek().clone();
        let close = match tok {
            Tok::Const(_) | Tok::Var(_) | Tok::Bang | Tok::Query => None,
            Tok::LParen => Some(Tok::RParen),
            Tok::LBrack => Some(Tok::RBrack),
            _ => return Err(self.error(&["`cN`", "`xN`", "`!`", "`?`", "`(`", "`[`"])),
        };
        self.bump();
        if let Some(close) = close {
            let t = self.term()?;
            self.expect(close)?;
            return Ok(t);
        }
        Ok(match tok {
            Tok::Const(i) => JustTerm::Constant(i),
            Tok::Var(i) => JustTerm::Variable(i),
            Tok::Bang => JustTerm::bang(self.term_unary()?),
            _ => JustTerm::query(self.term_unary()?),
        })
    }
}

pub fn parse_jformula(text: &str) -> Result<JFormula, ParseError> {
    let mut p = Parser::new(text, false)?;
    let f = p.formula::<JFormula>()?;
    p.finish()?;
    Ok(f)
}

pub fn parse_mformula(text: &str) -> Result<MFormula, ParseError> {
    let mut p = Parser::new(text, true)?;
    let f = p.formula::<MFormula>()?;
    p.finish()?;
    Ok(f)
}

pub fn parse_term(text: &str) -> Result<JustTerm, ParseError> {
    let mut p = Parser::new(text, false)?;
    let t = p.term()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["`+`", "`*`", "end of input"]));
    }
    Ok(t)
}

impl FromStr for JFormula {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_jformula(s)
    }
}

impl FromStr for MFormula {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_mformula(s)
    }
}

impl FromStr for JustTerm {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_term(s)
    }
}
