//! Commutative coefficient rings with exact equality, and dense matrices
//! over them.
//!
//! A [`Ring`] is a value that knows how to combine its elements, so a ring
//! with a runtime parameter (the modulus of [`IntegersMod`]) is as easy to
//! pass around as one without.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

#[allow(clippy::wrong_self_convention)]
pub trait Ring {
    /// Elements are kept in canonical form, so `==` is ring equality.
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Image of an integer under the unique ring map from `Z`.
    fn from_integer(&self, n: &BigInt) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_integer(&BigInt::from(n))
    }

    fn pow(&self, base: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = base.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
}

/// The integers `Z`, arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_integer(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
}

/// `Z / qZ` for any `q >= 2`, not necessarily prime. Elements live in `[0, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntegersMod {
    q: u64,
}

impl IntegersMod {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::ZeroModulus);
        }
        Ok(IntegersMod { q })
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }
}

impl Ring for IntegersMod {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.q as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.q - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.q as u128) as u64
    }
    fn from_integer(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.q))
            .to_u64()
            .expect("residue below a u64 modulus")
    }
}

/// The rationals `Q`, arbitrary precision, always in lowest terms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_integer(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
}

/// Reduces an integer into `Z / qZ`; used for the functoriality checks.
pub fn reduce_mod(n: &BigInt, q: &IntegersMod) -> u64 {
    q.from_integer(n)
}

/// `|n|` as an unsigned big integer.
pub fn magnitude(n: &BigInt) -> BigUint {
    n.abs().to_biguint().expect("absolute value is nonnegative")
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMatrix<E> {
    rows: usize,
    cols: usize,
    entries: Vec<E>,
}

impl<E: Clone> RingMatrix<E> {
    pub fn new(rows: usize, cols: usize, entries: Vec<E>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: (rows, cols),
                found: (entries.len(), 1),
            });
        }
        Ok(RingMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// From a list of equally long rows.
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: (r, c),
                found: (r, bad.len()),
            });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        RingMatrix {
            rows,
            cols,
            entries: alloc::vec![value; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &E {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: E) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[E] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn map<F, T: Clone>(&self, f: F) -> RingMatrix<T>
    where
        F: FnMut(&E) -> T,
    {
        RingMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl<E: Clone> RingMatrix<E> {
    pub fn zeros<R: Ring<Elem = E>>(ring: &R, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, ring.zero())
    }

    /// `x * I_n`.
    pub fn scalar<R: Ring<Elem = E>>(ring: &R, n: usize, x: &E) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn identity<R: Ring<Elem = E>>(ring: &R, n: usize) -> Self {
        Self::scalar(ring, n, &ring.one())
    }

    pub fn diagonal<R: Ring<Elem = E>>(ring: &R, diag: &[E]) -> Self {
        let mut m = Self::zeros(ring, diag.len(), diag.len());
        for (i, x) in diag.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn mul<R: Ring<Elem = E>>(&self, other: &Self, ring: &R) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: (self.cols, other.cols),
                found: (other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let term = ring.mul(a, other.get(k, j));
                    let idx = i * other.cols + j;
                    out.entries[idx] = ring.add(&out.entries[idx], &term);
                }
            }
        }
        Ok(out)
    }

    pub fn trace<R: Ring<Elem = E>>(&self, ring: &R) -> E {
        (0..self.rows.min(self.cols)).fold(ring.zero(), |acc, i| ring.add(&acc, self.get(i, i)))
    }
}

impl<E: fmt::Display> fmt::Display for RingMatrix<E> {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.entries[i * self.cols + j])?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}
