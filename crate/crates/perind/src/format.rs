//! Matrix text format and ring selection.
//!
//! A matrix is one row per line with entries separated by whitespace. Blank
//! lines and lines starting with `#` are ignored. Integer entries are plain
//! decimals, rational entries may be written `a/b`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use perind_core::{Integers, IntegersMod, Rationals, Ring, RingMatrix};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("unknown ring {0:?}; expected int, mod:<q> or rat")]
    UnknownRing(String),
    #[error("line {line}: cannot parse entry {token:?}")]
    BadEntry { line: usize, token: String },
    #[error("line {line}: expected {expected} entries, found {found}")]
    Ragged {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("matrix is empty")]
    Empty,
    #[error("rational entry {0:?} has zero denominator")]
    ZeroDenominator(String),
}

/// The coefficient ring chosen on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingKind {
    Int,
    Mod(u64),
    Rat,
}

impl FromStr for RingKind {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, FormatError> {
        match s {
            "int" | "z" | "Z" => Ok(RingKind::Int),
            "rat" | "q" | "Q" => Ok(RingKind::Rat),
            _ => {
                let q = s
                    .strip_prefix("mod:")
                    .and_then(|q| q.parse::<u64>().ok())
                    .filter(|&q| q >= 2)
                    .ok_or_else(|| FormatError::UnknownRing(s.to_string()))?;
                Ok(RingKind::Mod(q))
            }
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::Int => f.write_str("int"),
            RingKind::Mod(q) => write!(f, "mod:{q}"),
            RingKind::Rat => f.write_str("rat"),
        }
    }
}

/// Rings whose elements can be read from matrix text.
pub trait ParseElem: Ring {
    fn parse_elem(&self, token: &str) -> Option<Self::Elem>;
}

impl ParseElem for Integers {
    fn parse_elem(&self, token: &str) -> Option<BigInt> {
        token.parse().ok()
    }
}

impl ParseElem for IntegersMod {
    fn parse_elem(&self, token: &str) -> Option<u64> {
        token.parse::<BigInt>().ok().map(|n| self.from_integer(&n))
    }
}

impl ParseElem for Rationals {
    fn parse_elem(&self, token: &str) -> Option<BigRational> {
        match token.split_once('/') {
            None => token.parse::<BigInt>().ok().map(BigRational::from_integer),
            Some((num, den)) => {
                let num: BigInt = num.parse().ok()?;
                let den: BigInt = den.parse().ok()?;
                (den != BigInt::from(0)).then(|| BigRational::new(num, den))
            }
        }
    }
}

pub fn parse_matrix<R: ParseElem>(
    text: &str,
    ring: &R,
) -> Result<RingMatrix<R::Elem>, FormatError> {
    let mut rows: Vec<Vec<R::Elem>> = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|token| {
                if token.ends_with("/0") {
                    return Err(FormatError::ZeroDenominator(token.to_string()));
                }
                ring.parse_elem(token).ok_or_else(|| FormatError::BadEntry {
                    line: k + 1,
                    token: token.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(FormatError::Ragged {
                    line: k + 1,
                    expected: first.len(),
                    found: row.len(),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(FormatError::Empty);
    }
    RingMatrix::from_rows(rows).map_err(|_| FormatError::Empty)
}

/// Renders with the matrix's own `Display`: one row per line.
pub fn format_matrix<E: fmt::Display + Clone>(m: &RingMatrix<E>) -> String {
    m.to_string()
}
