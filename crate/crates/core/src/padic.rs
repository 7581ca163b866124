//! p-adic valuations of integers, factorials and binomial coefficients.
//!
//! Binomial valuations have two independent routes: [`vp_binomial_kummer`]
//! counts carries in base `p`, [`vp_binomial_legendre`] subtracts factorial
//! valuations. They must always agree.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// A verified prime number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// `p^e`, or [`Error::Overflow`] if it does not fit in 64 bits.
    pub fn pow(self, e: u32) -> Result<u64> {
        self.0.checked_pow(e).ok_or(Error::Overflow)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut twos = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        twos += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..twos {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Base-`p` digits, least significant first. Zero has no digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitString {
    digits: Vec<u64>,
    base: Prime,
}

impl DigitString {
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn base(&self) -> Prime {
        self.base
    }

    /// Number of digits; the least `g` with `p^g > n`.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digit at position `i`, zero past the end.
    pub fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    /// Reconstructs `sum digits[i] * p^i`.
    pub fn value(&self) -> BigUint {
        let p = BigUint::from(self.base.get());
        self.digits
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, &d| acc * &p + BigUint::from(d))
    }
}

pub fn digits_base_p(mut n: u64, p: Prime) -> DigitString {
    let mut digits = Vec::new();
    while n > 0 {
        digits.push(n % p.get());
        n /= p.get();
    }
    DigitString { digits, base: p }
}

/// The least `g` with `p^g > n`, i.e. the base-`p` digit length of `n`.
pub fn digit_length(n: u64, p: Prime) -> u32 {
    digits_base_p(n, p).len() as u32
}

/// Largest `v` with `p^v | n`. Zero is rejected.
pub fn vp_integer(n: &BigUint, p: Prime) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let p_big = BigUint::from(p.get());
    let mut v = 0;
    let mut n = n.clone();
    loop {
        let (q, r) = n.div_rem(&p_big);
        if !r.is_zero() {
            return Ok(v);
        }
        n = q;
        v += 1;
    }
}

pub fn vp_u64(n: u64, p: Prime) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroValuation);
    }
    let mut n = n;
    let mut v = 0;
    while n.is_multiple_of(p.get()) {
        n /= p.get();
        v += 1;
    }
    Ok(v)
}

/// `v_p(C(n, m))` as the number of carries when `n - m` is added to `m` in
/// base `p` (Kummer).
pub fn vp_binomial_kummer(n: u64, m: u64, p: Prime) -> Result<u64> {
    if m > n {
        return Err(Error::BinomialRange { n, m });
    }
    let a = digits_base_p(n - m, p);
    let b = digits_base_p(m, p);
    let width = a.len().max(b.len());
    let mut carry = 0;
    let mut carries = 0;
    for i in 0..width {
        let sum = a.digit(i) + b.digit(i) + carry;
        carry = u64::from(sum >= p.get());
        carries += carry;
    }
    Ok(carries)
}

/// `v_p(n!) = sum_{i >= 1} floor(n / p^i)`.
pub fn vp_factorial(n: u64, p: Prime) -> u64 {
    let mut total = 0;
    let mut q = n;
    while q > 0 {
        q /= p.get();
        total += q;
    }
    total
}

/// `v_p(C(n, m))` via factorial valuations (Legendre).
pub fn vp_binomial_legendre(n: u64, m: u64, p: Prime) -> Result<u64> {
    if m > n {
        return Err(Error::BinomialRange { n, m });
    }
    Ok(vp_factorial(n, p) - vp_factorial(m, p) - vp_factorial(n - m, p))
}

/// Exact `C(n, m)` by the multiplicative formula, dividing exactly at each step.
pub fn binomial(n: u64, m: u64) -> Result<BigUint> {
    if m > n {
        return Err(Error::BinomialRange { n, m });
    }
    let k = m.min(n - m);
    let mut acc = BigUint::one();
    for i in 1..=k {
        // acc = C(n - k + i - 1, i - 1) here, so the division is exact.
        acc *= n - k + i;
        acc /= i;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(18_446_744_073_709_551_557));
        // strong pseudoprime to bases 2, 3, 5 and 7
        assert!(!is_prime(3_215_031_751));
        assert!(!is_prime(u64::MAX));
        assert_eq!(Prime::new(9), Err(Error::NotPrime(9)));
        assert_eq!(Prime::new(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn digit_expansions() {
        assert_eq!(digits_base_p(36, p(2)).digits(), &[0, 0, 1, 0, 0, 1]);
        assert!(digits_base_p(0, p(5)).is_empty());
        assert_eq!(
            digits_base_p(513, p(2)).digits(),
            &[1, 0, 0, 0, 0, 0, 0, 0, 0, 1]
        );
        assert_eq!(digit_length(36, p(2)), 6);
        assert_eq!(digit_length(64, p(2)), 7);
        assert_eq!(digit_length(36, p(3)), 4);
    }

    #[test]
    fn integer_valuations() {
        assert_eq!(vp_integer(&BigUint::from(36u32), p(2)), Ok(2));
        assert_eq!(vp_integer(&BigUint::from(7u32), p(7)), Ok(1));
        assert_eq!(vp_integer(&BigUint::from(708_930_508u64), p(2)), Ok(2));
        assert_eq!(
            vp_integer(&BigUint::zero(), p(2)),
            Err(Error::ZeroValuation)
        );
        assert_eq!(vp_u64(0, p(3)), Err(Error::ZeroValuation));
        assert_eq!(vp_u64(162, p(3)), Ok(4));
    }

    #[test]
    fn binomial_valuations() {
        assert_eq!(vp_binomial_kummer(36, 9, p(2)), Ok(4));
        assert_eq!(vp_binomial_kummer(36, 27, p(2)), Ok(4));
        assert_eq!(vp_binomial_kummer(44, 9, p(2)), Ok(2));
        assert_eq!(vp_binomial_kummer(17, 0, p(3)), Ok(0));
        assert_eq!(vp_binomial_legendre(36, 9, p(2)), Ok(4));
        assert_eq!(vp_binomial_legendre(548, 513, p(2)), Ok(2));
        assert_eq!(vp_binomial_legendre(5, 5, p(3)), Ok(0));
        assert_eq!(
            vp_binomial_kummer(3, 4, p(2)),
            Err(Error::BinomialRange { n: 3, m: 4 })
        );
        assert!(vp_binomial_legendre(3, 4, p(2)).is_err());
    }

    #[test]
    fn exact_binomials() {
        assert_eq!(binomial(44, 9).unwrap(), BigUint::from(708_930_508u64));
        assert_eq!(binomial(10, 0).unwrap(), BigUint::one());
        assert_eq!(binomial(0, 0).unwrap(), BigUint::one());
        assert!(binomial(2, 3).is_err());
        let big = binomial(548, 513).unwrap();
        assert_eq!(
            alloc::format!("{big}"),
            "22978693003606259306209307135688790182432582401119705316"
        );
    }
}
