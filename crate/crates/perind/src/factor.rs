//! Display helpers: small-prime factorization and approximate magnitudes.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use perind_core::padic::is_prime;

/// Default trial-division bound for `--factor`.
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub primes: Vec<(u64, u32)>,
    /// Leftover with no prime factor up to the bound.
    pub cofactor: Option<Cofactor>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cofactor {
    /// Known prime (below `bound^2`, or a `u64` passing Miller-Rabin).
    Prime(BigUint),
    /// Not factored further.
    Unknown(BigUint),
}

/// Trial division by every integer candidate up to `bound`.
pub fn factor_small(n: &BigUint, bound: u64) -> Factorization {
    let mut primes = Vec::new();
    let mut rest = n.clone();
    if rest.is_zero() {
        return Factorization {
            primes,
            cofactor: Some(Cofactor::Unknown(rest)),
        };
    }
    let mut d = 2u64;
    while d <= bound && !rest.is_one() {
        if BigUint::from(d) * BigUint::from(d) > rest {
            break;
        }
        let divisor = BigUint::from(d);
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&divisor);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            primes.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let cofactor = if rest.is_one() {
        None
    } else if BigUint::from(d) * BigUint::from(d) > rest {
        // no divisor up to sqrt(rest)
        match rest.to_u64() {
            Some(p) if p <= bound => {
                primes.push((p, 1));
                None
            }
            _ => Some(Cofactor::Prime(rest)),
        }
    } else if rest.to_u64().is_some_and(is_prime) {
        Some(Cofactor::Prime(rest))
    } else {
        Some(Cofactor::Unknown(rest))
    };
    Factorization { primes, cofactor }
}

/// `"708930508 = 2^2 · 11 · 13 · 19 · 37 · 41 · 43"`. Unfactored cofactors
/// are written `C?(<digits>)`.
pub fn render_factorization(n: &BigUint, f: &Factorization) -> String {
    let mut parts: Vec<String> = f
        .primes
        .iter()
        .map(|&(p, e)| {
            if e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect();
    match &f.cofactor {
        Some(Cofactor::Prime(c)) => parts.push(c.to_string()),
        Some(Cofactor::Unknown(c)) => parts.push(format!("C?({c})")),
        None => {}
    }
    if parts.is_empty() {
        parts.push("1".into());
    }
    format!("{n} = {}", parts.join(" · "))
}

/// Three significant digits in scientific notation, trailing zeros dropped:
/// `2.3e55`, `1.15e47`, `708930508 -> 7.09e8`.
pub fn approx(n: &BigUint) -> String {
    let digits = n.to_string();
    if digits.len() <= 3 {
        return digits;
    }
    let lead: u64 = digits[..4].parse().expect("decimal digits");
    let mut exponent = digits.len() - 1;
    let mut sig = (lead + 5) / 10;
    if sig >= 1000 {
        sig /= 10;
        exponent += 1;
    }
    let mut mantissa = String::new();
    let text = sig.to_string();
    write!(mantissa, "{}", &text[..1]).unwrap();
    let tail = text[1..].trim_end_matches('0');
    if !tail.is_empty() {
        write!(mantissa, ".{tail}").unwrap();
    }
    format!("{mantissa}e{exponent}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_factorization() {
        let n = BigUint::from(708_930_508u64);
        let f = factor_small(&n, DEFAULT_FACTOR_BOUND);
        assert_eq!(
            f.primes,
            [(2, 2), (11, 1), (13, 1), (19, 1), (37, 1), (41, 1), (43, 1)]
        );
        assert_eq!(f.cofactor, None);
        assert_eq!(
            render_factorization(&n, &f),
            "708930508 = 2^2 · 11 · 13 · 19 · 37 · 41 · 43"
        );
    }

    #[test]
    fn cofactors() {
        // 1000003 is prime and above the bound
        let n = BigUint::from(4u64 * 1_000_003);
        let f = factor_small(&n, 100);
        assert_eq!(f.primes, [(2, 2)]);
        assert_eq!(
            f.cofactor,
            Some(Cofactor::Prime(BigUint::from(1_000_003u64)))
        );
        // 1000003^2 with bound 100 is unknown
        let n = BigUint::from(1_000_003u64 * 1_000_003);
        let f = factor_small(&n, 100);
        assert!(matches!(f.cofactor, Some(Cofactor::Unknown(_))));
        assert!(render_factorization(&n, &f).contains("C?("));
        let f = factor_small(&BigUint::one(), 100);
        assert_eq!(render_factorization(&BigUint::one(), &f), "1 = 1");
        let f = factor_small(&BigUint::from(97u32), 100);
        assert_eq!(f.primes, [(97, 1)]);
    }

    #[test]
    fn magnitudes() {
        let c = BigUint::parse_bytes(
            b"22978693003606259306209307135688790182432582401119705316",
            10,
        )
        .unwrap();
        assert_eq!(approx(&c), "2.3e55");
        let h =
            BigUint::parse_bytes(b"114734342260319204060660791279783645963396270100", 10).unwrap();
        assert_eq!(approx(&h), "1.15e47");
        assert_eq!(approx(&BigUint::from(708_930_508u64)), "7.09e8");
        assert_eq!(approx(&BigUint::from(9996u64)), "1e4");
        assert_eq!(approx(&BigUint::from(42u64)), "42");
    }
}
