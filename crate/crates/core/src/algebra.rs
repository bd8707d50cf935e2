//! Exact Gödel truth-value algebra on the rationals in `[0, 1]`.
//!
//! Conjunction is the minimum t-norm, disjunction its dual maximum, and
//! implication the residuum of the minimum. Everything is exact: the
//! countermodel arguments compare values strictly, so no floats are used.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A truth value: an exact rational in `[0, 1]`, always in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthValue(BigRational);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TruthValueError {
    #[error("truth value {0} lies outside [0,1]")]
    OutOfRange(String),
    #[error("malformed rational `{0}`; expected `p/q` with q > 0 or an integer")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

impl TruthValue {
    pub fn zero() -> Self {
        TruthValue(BigRational::zero())
    }

    pub fn one() -> Self {
        TruthValue(BigRational::one())
    }

    /// Builds `num/den`, rejecting values outside `[0, 1]`.
    pub fn new(num: i64, den: i64) -> Result<Self, TruthValueError> {
        if den == 0 {
            return Err(TruthValueError::ZeroDenominator(format!("{num}/{den}")));
        }
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Like [`TruthValue::new`] but panics on out-of-range input. Meant for
    /// literals in code and tests.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::new(num, den).expect("truth value literal out of range")
    }

    pub fn from_rational(r: BigRational) -> Result<Self, TruthValueError> {
        if r.is_negative() || r > BigRational::one() {
            return Err(TruthValueError::OutOfRange(r.to_string()));
        }
        // BigRational::new already reduces and normalises the sign.
        Ok(TruthValue(r))
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Strictly between 0 and 1.
    pub fn is_interior(&self) -> bool {
        !self.is_zero() && !self.is_one()
    }

    /// `true` for the classical values 0 and 1.
    pub fn is_crisp(&self) -> bool {
        self.is_zero() || self.is_one()
    }
}

/// Minimum t-norm `a ⊙ b`.
pub fn tnorm(a: &TruthValue, b: &TruthValue) -> TruthValue {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

/// Maximum t-conorm `a ⊕ b`.
pub fn tconorm(a: &TruthValue, b: &TruthValue) -> TruthValue {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

/// Gödel residuum: `b` if `a > b`, otherwise 1.
pub fn residuum(a: &TruthValue, b: &TruthValue) -> TruthValue {
    if a > b {
        b.clone()
    } else {
        TruthValue::one()
    }
}

/// Truth function of `¬`: 0 on positive input, 1 on 0.
pub fn wneg(a: &TruthValue) -> TruthValue {
    if a.is_zero() {
        TruthValue::one()
    } else {
        TruthValue::zero()
    }
}

/// `~~a`, the two-valued double negation.
pub fn wneg2(a: &TruthValue) -> TruthValue {
    wneg(&wneg(a))
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for TruthValue {
    type Err = TruthValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        let malformed = || TruthValueError::Malformed(text.to_string());
        let parse_int = |part: &str| -> Result<BigInt, TruthValueError> {
            let part = part.trim();
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            part.parse::<BigInt>().map_err(|_| malformed())
        };
        let r = match text.split_once('/') {
            Some((n, d)) => {
                let n = parse_int(n)?;
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(TruthValueError::ZeroDenominator(text.to_string()));
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(parse_int(text)?),
        };
        TruthValue::from_rational(r)
    }
}

impl Serialize for TruthValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TruthValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
