use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong in the core routines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// `p` failed the primality test.
    NotPrime(u64),
    /// p-adic valuation of zero was requested.
    ZeroValuation,
    /// Binomial coefficient `C(n, m)` with `m > n`.
    BinomialRange { n: u64, m: u64 },
    /// CRT moduli share a factor.
    NonCoprimeModuli { m1: u64, m2: u64 },
    /// A modulus of zero was supplied.
    ZeroModulus,
    /// Young diagram parts are empty, zero or increasing.
    InvalidDiagram(String),
    /// Filling does not match its shape or has entries outside `[1, n]`.
    InvalidFilling(String),
    /// The alphabet bound `n` was zero.
    EmptyAlphabet,
    /// Enumeration would exceed the configured limit.
    BasisTooLarge { count: String, limit: usize },
    /// The Schur module has rank zero (a column longer than the alphabet).
    EmptyModule,
    /// Matrix shapes are incompatible.
    DimensionMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// The chosen prime does not divide the degree.
    PrimeDoesNotDivide { p: u64, m: u64 },
    /// `ell` shares a factor with `p`.
    EllNotCoprime { p: u64, ell: u64 },
    /// Malformed period factorization.
    InvalidPeriod(String),
    /// A search exhausted its bound.
    NotFound { p: u64, bound: u64 },
    /// Intermediate value left the 64-bit range.
    Overflow,
    /// Degree `d = 0` passed to the bound calculator.
    ZeroDegree,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ZeroValuation => write!(f, "valuation of 0 is undefined"),
            Error::BinomialRange { n, m } => write!(f, "binomial C({n}, {m}) requires m <= n"),
            Error::NonCoprimeModuli { m1, m2 } => write!(f, "moduli {m1} and {m2} are not coprime"),
            Error::ZeroModulus => write!(f, "modulus must be at least 1"),
            Error::InvalidDiagram(msg) => write!(f, "invalid Young diagram: {msg}"),
            Error::InvalidFilling(msg) => write!(f, "invalid filling: {msg}"),
            Error::EmptyAlphabet => write!(f, "alphabet bound n must be at least 1"),
            Error::BasisTooLarge { count, limit } => {
                write!(f, "basis too large: {count} tableaux exceeds limit {limit}")
            }
            Error::EmptyModule => write!(f, "Schur module is zero: a column is longer than n"),
            Error::DimensionMismatch { expected, found } => write!(
                f,
                "dimension mismatch: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::PrimeDoesNotDivide { p, m } => write!(f, "prime {p} does not divide m = {m}"),
            Error::EllNotCoprime { p, ell } => write!(f, "ell = {ell} is not coprime to p = {p}"),
            Error::InvalidPeriod(msg) => write!(f, "invalid period factorization: {msg}"),
            Error::NotFound { p, bound } => {
                write!(
                    f,
                    "no qualifying exponent for p = {p} within search bound {bound}"
                )
            }
            Error::Overflow => write!(f, "intermediate value exceeds 64 bits"),
            Error::ZeroDegree => write!(f, "degree d must be at least 1"),
        }
    }
}

impl core::error::Error for Error {}
