//! Minimal-parenthesis printing, inverse to the parser.

use std::fmt::{self, Display, Write};

use super::ast::{Formula, JFormula, JustTerm, MFormula, View};

const TERM_SUM: u8 = 1;
const TERM_APP: u8 = 2;
const TERM_ATOM: u8 = 3;

fn write_term(out: &mut impl Write, t: &JustTerm, min: u8) -> fmt::Result {
    match t {
        JustTerm::Constant(i) => write!(out, "c{i}"),
        JustTerm::Variable(i) => write!(out, "x{i}"),
        JustTerm::Sum(a, b) => {
            let wrap = min > TERM_SUM;
            if wrap {
                out.write_char('(')?;
            }
            write_term(out, a, TERM_SUM)?;
            out.write_char('+')?;
            write_term(out, b, TERM_APP)?;
            if wrap {
                out.write_char(')')?;
            }
            Ok(())
        }
        JustTerm::App(a, b) => {
            let wrap = min > TERM_APP;
            if wrap {
                out.write_char('(')?;
            }
            write_term(out, a, TERM_APP)?;
            out.write_char('*')?;
            write_term(out, b, TERM_ATOM)?;
            if wrap {
                out.write_char(')')?;
            }
            Ok(())
        }
        JustTerm::Bang(a) => {
            out.write_char('!')?;
            write_term(out, a, TERM_ATOM)
        }
        JustTerm::Query(a) => {
            out.write_char('?')?;
            write_term(out, a, TERM_ATOM)
        }
    }
}

const F_IMP: u8 = 1;
const F_AND: u8 = 2;
const F_UNARY: u8 = 3;

fn write_formula<F: Formula>(out: &mut impl Write, f: &F, min: u8) -> fmt::Result {
    match f.view() {
        View::Bottom => out.write_str("bot"),
        View::Atom(i) => write!(out, "p{i}"),
        View::Implies(a, b) if matches!(b.view(), View::Bottom) => {
            out.write_char('~')?;
            write_formula(out, a, F_UNARY)
        }
        View::Implies(a, b) => {
            let wrap = min > F_IMP;
            if wrap {
                out.write_char('(')?;
            }
            write_formula(out, a, F_AND)?;
            out.write_str(" -> ")?;
            write_formula(out, b, F_IMP)?;
            if wrap {
                out.write_char(')')?;
            }
            Ok(())
        }
        View::And(a, b) => {
            let wrap = min > F_AND;
            if wrap {
                out.write_char('(')?;
            }
            write_formula(out, a, F_AND)?;
            out.write_str(" & ")?;
            write_formula(out, b, F_UNARY)?;
            if wrap {
                out.write_char(')')?;
            }
            Ok(())
        }
        View::Holds(t, a) => {
            write_term(out, t, TERM_ATOM)?;
            out.write_char(':')?;
            write_formula(out, a, F_UNARY)
        }
        View::Box(a) => {
            out.write_str("[]")?;
            write_formula(out, a, F_UNARY)
        }
    }
}

impl Display for JustTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(f, self, TERM_SUM)
    }
}

impl Display for JFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self, F_IMP)
    }
}

impl Display for MFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self, F_IMP)
    }
}

impl fmt::Debug for JustTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

impl fmt::Debug for JFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

impl fmt::Debug for MFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

macro_rules! string_serde {
    ($ty:ty, $what:literal) => {
        impl serde::Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> serde::Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let text = String::deserialize(d)?;
                text.parse().map_err(|e| {
                    serde::de::Error::custom(format!(concat!("invalid ", $what, ": {}"), e))
                })
            }
        }
    };
}

string_serde!(JustTerm, "term");
string_serde!(JFormula, "formula");
string_serde!(MFormula, "formula");

#[cfg(test)]
mod tests {
    use crate::syntax::{parse_jformula, parse_mformula, parse_term};

    #[test]
    fn canonical_forms() {
        for (input, printed) in [
            ("x1:p1 -> p1", "x1:p1 -> p1"),
            ("((p1 -> p2) -> p3)", "(p1 -> p2) -> p3"),
            ("p1 -> (p2 -> p3)", "p1 -> p2 -> p3"),
            ("(p1 & p2) & p3", "p1 & p2 & p3"),
            ("p1 & (p2 & p3)", "p1 & (p2 & p3)"),
            ("~~x1:p1 -> x2:~~p1", "~~x1:p1 -> x2:~~p1"),
            ("[x1*x2]:p2", "(x1*x2):p2"),
            ("(x1+x2):(p1 -> bot)", "(x1+x2):~p1"),
            ("x1:(p1 & p2)", "x1:(p1 & p2)"),
            ("!x1:x1:p1", "!x1:x1:p1"),
            ("?x1:~x1:p1", "?x1:~x1:p1"),
            ("!(x1*c2):p1", "!(x1*c2):p1"),
            ("top", "~bot"),
        ] {
            assert_eq!(
                parse_jformula(input).unwrap().to_string(),
                printed,
                "input {input}"
            );
        }
        assert_eq!(
            parse_mformula("[](p1->p2) -> ([]p1 -> []p2)")
                .unwrap()
                .to_string(),
            "[](p1 -> p2) -> []p1 -> []p2"
        );
        assert_eq!(parse_mformula("~[]p1").unwrap().to_string(), "~[]p1");
        assert_eq!(parse_term("x1+(x2+x3)").unwrap().to_string(), "x1+(x2+x3)");
        assert_eq!(parse_term("(x1+x2)+x3").unwrap().to_string(), "x1+x2+x3");
        assert_eq!(parse_term("x1*(x2*x3)").unwrap().to_string(), "x1*(x2*x3)");
        assert_eq!(parse_term("(x1+x2)*x3").unwrap().to_string(), "(x1+x2)*x3");
    }
}
