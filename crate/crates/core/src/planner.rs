//! Prime isolation by symmetric powers.
//!
//! Given a degree `m`, a prime `p` with `v_p(m) = s > 0`, and the
//! complementary modulus `ell` (the rest of the period), find a multiplier
//! `r` with
//!
//! 1. `r = 0 (mod ell)`,
//! 2. `r = 1 (mod p^e)`,
//! 3. `v_p(N) = s` for the representation degree `N`.
//!
//! For the `r`-fold symmetric power `N = C(r + m - 1, r)`. The lemma recipe
//! takes `e = g`, the base-`p` digit length of `m`, and solves the two
//! congruences by CRT; the minimal search walks the CRT progression for a
//! caller-chosen `e`. The hook variant uses shapes `(t, 1)`, whose
//! multiplier is `|lambda| = t + 1`.
//!
//! Every plan carries its intermediate values and recomputes all three
//! conditions rather than trusting the construction.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::padic::{
    binomial, digit_length, is_prime, vp_binomial_kummer, vp_integer, vp_u64, Prime,
};
use crate::tableaux::{ssyt_count, YoungDiagram};
use crate::{Error, Result};

/// Default upper bound for the minimal and hook searches.
pub const DEFAULT_SEARCH_BOUND: u64 = 1_000_000;

/// Smallest `x >= 1` with `x = r1 (mod m1)` and `x = r2 (mod m2)`.
pub fn crt_pair(r1: u64, m1: u64, r2: u64, m2: u64) -> Result<u64> {
    if m1 == 0 || m2 == 0 {
        return Err(Error::ZeroModulus);
    }
    if m1.gcd(&m2) != 1 {
        return Err(Error::NonCoprimeModuli { m1, m2 });
    }
    let modulus = (m1 as u128) * (m2 as u128);
    if modulus > u64::MAX as u128 {
        return Err(Error::Overflow);
    }
    let (r1, r2) = ((r1 % m1) as i128, (r2 % m2) as i128);
    // x = r1 + m1 * k with k = (r2 - r1) * m1^{-1} mod m2
    let (m1, m2) = (m1 as i128, m2 as i128);
    let inv = mod_inverse(m1 % m2, m2);
    let k = (r2 - r1).rem_euclid(m2) * inv % m2;
    let x = (r1 + m1 * k) as u128 % modulus;
    Ok(if x == 0 { modulus as u64 } else { x as u64 })
}

fn mod_inverse(a: i128, m: i128) -> i128 {
    if m == 1 {
        return 0;
    }
    let (mut old_r, mut r) = (a.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(m)
}

/// `per(alpha) = prod p_i^{a_i}`: distinct primes in ascending order, each
/// with a positive exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodFactorization {
    components: Vec<(Prime, u32)>,
}

impl PeriodFactorization {
    pub fn new(mut components: Vec<(u64, u32)>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidPeriod("no components".into()));
        }
        components.sort_unstable();
        if let Some(w) = components.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidPeriod(format!("prime {} repeated", w[0].0)));
        }
        let components = components
            .into_iter()
            .map(|(p, a)| {
                if a == 0 {
                    return Err(Error::InvalidPeriod(format!(
                        "exponent of {p} must be positive"
                    )));
                }
                Ok((Prime::new(p)?, a))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PeriodFactorization { components })
    }

    pub fn components(&self) -> &[(Prime, u32)] {
        &self.components
    }

    pub fn exponent_of(&self, p: Prime) -> Option<u32> {
        self.components
            .iter()
            .find(|(q, _)| *q == p)
            .map(|&(_, a)| a)
    }

    /// `prod p_i^{a_i}`.
    pub fn value(&self) -> Result<u64> {
        self.components.iter().try_fold(1u64, |acc, &(p, a)| {
            acc.checked_mul(p.pow(a)?).ok_or(Error::Overflow)
        })
    }

    /// The non-`p`-primary part: product of the other prime powers.
    pub fn complement(&self, p: Prime) -> Result<u64> {
        self.components
            .iter()
            .filter(|(q, _)| *q != p)
            .try_fold(1u64, |acc, &(q, a)| {
                acc.checked_mul(q.pow(a)?).ok_or(Error::Overflow)
            })
    }
}

impl fmt::Display for PeriodFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (p, a)) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}^{a}")?;
        }
        Ok(())
    }
}

impl FromStr for PeriodFactorization {
    type Err = Error;

    /// Parses `"2^2,3^2"`; a bare prime means exponent 1.
    fn from_str(s: &str) -> Result<Self> {
        let components = s
            .split(',')
            .map(|token| {
                let token = token.trim();
                let (p, a) = token.split_once('^').unwrap_or((token, "1"));
                let p = p.trim().parse().map_err(|_| {
                    Error::InvalidPeriod(format!("cannot parse prime in {token:?}"))
                })?;
                let a = a.trim().parse().map_err(|_| {
                    Error::InvalidPeriod(format!("cannot parse exponent in {token:?}"))
                })?;
                Ok((p, a))
            })
            .collect::<Result<Vec<_>>>()?;
        PeriodFactorization::new(components)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// CRT with modulus `p^g`, `g` the digit length of `m`.
    Lemma,
    /// Least `r` on the CRT progression with the right valuation.
    Minimal,
    /// Least hook `(t, 1)` with multiplier `t + 1` on the progression.
    Hook,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Lemma => "lemma",
            Strategy::Minimal => "minimal",
            Strategy::Hook => "hook",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lemma" => Ok(Strategy::Lemma),
            "minimal" => Ok(Strategy::Minimal),
            "hook" => Ok(Strategy::Hook),
            other => Err(Error::InvalidPeriod(format!("unknown strategy {other:?}"))),
        }
    }
}

/// The three isolation conditions, each recomputed from the plan's numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conditions {
    /// `r = 0 (mod ell)`.
    pub crt_ell: bool,
    /// `r = 1 (mod p^a)`, or `mod p^s` when no period exponent is known.
    pub crt_p: bool,
    /// `v_p(N) = s`.
    pub valuation: bool,
}

impl Conditions {
    pub fn all(&self) -> bool {
        self.crt_ell && self.crt_p && self.valuation
    }
}

/// A certified witness: diagram, representation degree and valuations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolationPlan {
    /// Degree `m` of the starting representative.
    pub degree: u64,
    pub prime: Prime,
    /// `v_p(m)`.
    pub s: u64,
    /// Exponent of `p` in the period, when known.
    pub a: Option<u32>,
    pub ell: u64,
    /// Digit-length parameter (lemma strategy only).
    pub g: Option<u32>,
    /// Exponent `e` of the modulus `p^e` whose progression was searched.
    pub modulus_exponent: u32,
    /// Class multiplier `|lambda|`; the `r` of `r alpha`.
    pub r: u64,
    pub diagram: YoungDiagram,
    pub n: BigUint,
    pub vp_n: u64,
    pub conditions: Conditions,
    pub strategy: Strategy,
}

impl IsolationPlan {
    pub fn valid(&self) -> bool {
        self.conditions.all()
    }
}

fn degree_valuation(m: u64, p: Prime) -> Result<u64> {
    match vp_u64(m, p)? {
        0 => Err(Error::PrimeDoesNotDivide { p: p.get(), m }),
        s => Ok(s),
    }
}

fn check_ell(p: Prime, ell: u64) -> Result<()> {
    if ell == 0 {
        return Err(Error::ZeroModulus);
    }
    if ell.is_multiple_of(p.get()) {
        return Err(Error::EllNotCoprime { p: p.get(), ell });
    }
    Ok(())
}

/// Builds a plan for `diagram` acting on degree `m` and recomputes the
/// representation degree and all three conditions.
///
/// Row shapes `(r)` get `N = C(r + m - 1, r)` with the valuation from
/// Kummer's carry count; other shapes use the hook-content count.
#[allow(clippy::too_many_arguments)]
pub fn certify(
    m: u64,
    p: Prime,
    a: Option<u32>,
    ell: u64,
    g: Option<u32>,
    modulus_exponent: u32,
    diagram: YoungDiagram,
    strategy: Strategy,
) -> Result<IsolationPlan> {
    let s = degree_valuation(m, p)?;
    check_ell(p, ell)?;
    let r = diagram.size() as u64;
    let (n, vp_n) = if diagram.num_rows() == 1 {
        let top = r.checked_add(m - 1).ok_or(Error::Overflow)?;
        (binomial(top, r)?, vp_binomial_kummer(top, r, p)?)
    } else {
        let n = ssyt_count(&diagram, m);
        let vp = vp_integer(&n, p)?;
        (n, vp)
    };
    let check_exp = a.unwrap_or(s as u32);
    let conditions = Conditions {
        crt_ell: r.is_multiple_of(ell),
        crt_p: r % p.pow(check_exp)? == 1 % p.pow(check_exp)?,
        valuation: vp_n == s,
    };
    Ok(IsolationPlan {
        degree: m,
        prime: p,
        s,
        a,
        ell,
        g,
        modulus_exponent,
        r,
        diagram,
        n,
        vp_n,
        conditions,
        strategy,
    })
}

fn lemma_plan(m: u64, p: Prime, ell: u64, a: Option<u32>) -> Result<IsolationPlan> {
    degree_valuation(m, p)?;
    check_ell(p, ell)?;
    let g = digit_length(m, p);
    // r = 1 mod p^g must also give r = 1 mod p^a
    let e = g.max(a.unwrap_or(0));
    let r = crt_pair(0, ell, 1, p.pow(e)?)?;
    let r = usize::try_from(r).map_err(|_| Error::Overflow)?;
    certify(
        m,
        p,
        a,
        ell,
        Some(g),
        e,
        YoungDiagram::row(r)?,
        Strategy::Lemma,
    )
}

/// The lemma recipe: `g` = digit length of `m` in base `p` (so `p^g > m`),
/// `r` = least positive solution of `r = 0 (mod ell)`, `r = 1 (mod p^g)`.
pub fn find_r_lemma(m: u64, p: Prime, ell: u64) -> Result<IsolationPlan> {
    lemma_plan(m, p, ell, None)
}

/// Walks `r = r0, r0 + ell p^e, ...` up to `bound` and returns the first `r`
/// with `v_p(C(r + m - 1, r)) = v_p(m)`.
pub fn find_minimal_r(m: u64, p: Prime, e: u32, ell: u64, bound: u64) -> Result<IsolationPlan> {
    let s = degree_valuation(m, p)?;
    check_ell(p, ell)?;
    if e == 0 {
        return Err(Error::InvalidPeriod(
            "modulus exponent must be positive".into(),
        ));
    }
    let modulus = p.pow(e)?;
    let start = crt_pair(0, ell, 1, modulus)?;
    let step = ell.checked_mul(modulus).ok_or(Error::Overflow)?;
    let mut r = start;
    while r <= bound {
        let top = r.checked_add(m - 1).ok_or(Error::Overflow)?;
        if vp_binomial_kummer(top, r, p)? == s {
            let r = usize::try_from(r).map_err(|_| Error::Overflow)?;
            return certify(
                m,
                p,
                Some(e),
                ell,
                None,
                e,
                YoungDiagram::row(r)?,
                Strategy::Minimal,
            );
        }
        r = match r.checked_add(step) {
            Some(next) => next,
            None => break,
        };
    }
    Err(Error::NotFound { p: p.get(), bound })
}

/// Smallest hook `(t, 1)`, `t <= bound`, whose multiplier `t + 1` satisfies
/// both congruences and whose Schur module rank `N` has `v_p(N) = v_p(m)`.
pub fn plan_hook_shape(m: u64, p: Prime, e: u32, ell: u64, bound: u64) -> Result<IsolationPlan> {
    let s = degree_valuation(m, p)?;
    check_ell(p, ell)?;
    if e == 0 {
        return Err(Error::InvalidPeriod(
            "modulus exponent must be positive".into(),
        ));
    }
    let modulus = p.pow(e)?;
    let step = ell.checked_mul(modulus).ok_or(Error::Overflow)?;
    let mut multiplier = crt_pair(0, ell, 1, modulus)?;
    // t = multiplier - 1 must be at least 1
    if multiplier < 2 {
        multiplier = multiplier.checked_add(step).ok_or(Error::Overflow)?;
    }
    while multiplier - 1 <= bound {
        let t = usize::try_from(multiplier - 1).map_err(|_| Error::Overflow)?;
        let diagram = YoungDiagram::hook(t)?;
        let n = ssyt_count(&diagram, m);
        if vp_integer(&n, p)? == s {
            return certify(m, p, Some(e), ell, None, e, diagram, Strategy::Hook);
        }
        multiplier = match multiplier.checked_add(step) {
            Some(next) => next,
            None => break,
        };
    }
    Err(Error::NotFound { p: p.get(), bound })
}

/// Plan for a single prime of the period, with `ell` the complementary part
/// and congruences taken modulo `p^a`.
pub fn plan_for_prime(
    period: &PeriodFactorization,
    m: u64,
    p: Prime,
    strategy: Strategy,
    bound: u64,
) -> Result<IsolationPlan> {
    let a = period
        .exponent_of(p)
        .ok_or_else(|| Error::InvalidPeriod(format!("prime {p} is not in the period {period}")))?;
    let ell = period.complement(p)?;
    match strategy {
        Strategy::Lemma => lemma_plan(m, p, ell, Some(a)),
        Strategy::Minimal => find_minimal_r(m, p, a, ell, bound),
        Strategy::Hook => plan_hook_shape(m, p, a, ell, bound),
    }
}

/// One plan (or search failure) per prime of the period, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub plans: Vec<(Prime, Result<IsolationPlan>)>,
}

impl Decomposition {
    /// `prod p_i^{v_{p_i}(N_i)} == prod p_i^{v_{p_i}(m)}`, or `None` if any
    /// prime has no plan.
    pub fn product_check(&self) -> Option<bool> {
        let mut certified = BigUint::one();
        let mut expected = BigUint::one();
        for (p, plan) in &self.plans {
            let plan = plan.as_ref().ok()?;
            let p = BigUint::from(p.get());
            certified *= p.pow(plan.vp_n as u32);
            expected *= p.pow(plan.s as u32);
        }
        Some(certified == expected)
    }

    pub fn all_valid(&self) -> bool {
        self.plans
            .iter()
            .all(|(_, plan)| plan.as_ref().is_ok_and(IsolationPlan::valid))
    }
}

/// Isolates every prime component of the period in turn. Each prime of the
/// period must divide `m`.
pub fn plan_full_decomposition(
    period: &PeriodFactorization,
    m: u64,
    strategy: Strategy,
    bound: u64,
) -> Result<Decomposition> {
    if m == 0 {
        return Err(Error::ZeroValuation);
    }
    if let Some(&(p, _)) = period
        .components()
        .iter()
        .find(|(p, _)| !m.is_multiple_of(p.get()))
    {
        return Err(Error::PrimeDoesNotDivide { p: p.get(), m });
    }
    let plans = period
        .components()
        .iter()
        .map(|&(p, _)| (p, plan_for_prime(period, m, p, strategy, bound)))
        .collect();
    Ok(Decomposition { plans })
}

/// Divisibility bounds on `ind(m alpha)` for a class of index `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SaltBounds {
    pub d: u64,
    pub m: i64,
    /// `gcd(C(d, m), d)` when `0 <= m <= d`, else `d`.
    pub binomial_bound: u64,
    /// Whether the binomial was used (false when `m` is outside `[0, d]`).
    pub binomial_applies: bool,
    /// `gcd(m, d) = 1`, in which case the index is preserved.
    pub index_preserved: bool,
    /// `d / gcd(m, d)`.
    pub gcd_bound: u64,
}

/// Trial-division factorization of a `u64`.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
        if n > 1 && is_prime(n) {
            break;
        }
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn salt_bounds(d: u64, m: i64) -> Result<SaltBounds> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    let m_abs = m.unsigned_abs();
    let g = m_abs.gcd(&d);
    let binomial_applies = m >= 0 && m_abs <= d;
    let binomial_bound = if binomial_applies {
        // gcd(C(d, m), d) = prod over p | d of p^min(v_p(C(d, m)), v_p(d))
        factor_u64(d).into_iter().try_fold(1u64, |acc, (p, e)| {
            let prime = Prime::new(p)?;
            let v = vp_binomial_kummer(d, m_abs, prime)?.min(u64::from(e)) as u32;
            Ok::<_, Error>(acc * prime.pow(v)?)
        })?
    } else {
        d
    };
    Ok(SaltBounds {
        d,
        m,
        binomial_bound,
        binomial_applies,
        index_preserved: g == 1,
        gcd_bound: d / g,
    })
}
