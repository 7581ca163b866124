//! The invariant suite behind `perind selftest` and the acceptance tests.
//!
//! Each `criterion_*` function recomputes its claim from scratch and compares
//! against fixed values or an independent oracle.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Pow;
use perind_core::padic::{binomial, vp_binomial_kummer, vp_binomial_legendre, vp_integer};
use perind_core::planner::{find_minimal_r, find_r_lemma, salt_bounds};
use perind_core::schur::{schur_matrix, SchurModule};
use perind_core::tableaux::{ssyt_count, ssyt_enumerate};
use perind_core::{
    Error, Integers, IntegersMod, Prime, Rationals, RingMatrix, YoungDiagram,
    DEFAULT_ENUMERATION_LIMIT,
};
use rand::Rng;

use crate::checks::{
    check_hom, check_scalar, random_int_matrix, random_matrix, seeded, RandomElem,
};
use crate::factor::{factor_small, DEFAULT_FACTOR_BOUND};
use crate::oracle::{
    brute_force_ssyt, compound_matrix, jacobi_trudi_count, schur_polynomial, QuotientModule,
};

pub use crate::checks::DEFAULT_SEED;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{status}] {:>2} {}: {}",
            self.id, self.name, self.detail
        )
    }
}

fn outcome(id: u8, name: &'static str, failures: &[String], ok_detail: String) -> Outcome {
    let passed = failures.is_empty();
    let detail = if passed {
        ok_detail
    } else {
        let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
        format!("{} failure(s): {}", failures.len(), shown.join("; "))
    };
    Outcome {
        id,
        name,
        passed,
        detail,
    }
}

fn prime(p: u64) -> Prime {
    Prime::new(p).expect("fixed prime")
}

/// All partitions of size `1..=max`, largest parts first.
pub fn partitions_up_to(max: usize) -> Vec<YoungDiagram> {
    fn extend(rest: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(cap)).rev() {
            prefix.push(part);
            extend(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut parts = Vec::new();
    for size in 1..=max {
        extend(size, size, &mut Vec::new(), &mut parts);
    }
    parts
        .into_iter()
        .map(|p| YoungDiagram::new(p).expect("valid partition"))
        .collect()
}

/// `(lambda, n)` with `|lambda| <= 4` and `1 <= n <= 3`.
pub fn small_grid() -> Vec<(YoungDiagram, u32)> {
    partitions_up_to(4)
        .into_iter()
        .flat_map(|shape| (1..=3).map(move |n| (shape.clone(), n)))
        .collect()
}

fn feasible(shape: &YoungDiagram, n: u32) -> bool {
    shape.num_rows() <= n as usize
}

fn in_range(n: &BigUint, lo_mantissa: u32, hi_mantissa: u32, exponent: u32) -> bool {
    // [lo / 10 * 10^exponent, hi / 10 * 10^exponent]
    let scale = BigUint::from(10u32).pow(exponent - 1);
    let lo = &scale * lo_mantissa;
    let hi = &scale * hi_mantissa;
    *n >= lo && *n <= hi
}

pub fn criterion_1() -> Outcome {
    let p = prime(2);
    let mut failures = Vec::new();
    for m in [9, 27] {
        let v = vp_binomial_kummer(36, m, p).ok();
        if v != Some(4) {
            failures.push(format!("v2(C(36,{m})) = {v:?}"));
        }
    }
    outcome(
        1,
        "kummer examples",
        &failures,
        "v2(C(36,9)) = v2(C(36,27)) = 4".into(),
    )
}

pub fn criterion_2() -> Outcome {
    let mut failures = Vec::new();
    match find_r_lemma(36, prime(2), 9) {
        Ok(plan) => {
            if plan.r != 513 {
                failures.push(format!("r = {}", plan.r));
            }
            let n = binomial(548, 513).expect("in range");
            if plan.n != n {
                failures.push("N differs from C(548,513)".into());
            }
            let v = vp_integer(&n, prime(2)).ok();
            if v != Some(2) || plan.vp_n != 2 {
                failures.push(format!("v2(N) = {v:?}, plan says {}", plan.vp_n));
            }
            if !in_range(&n, 22, 24, 55) {
                failures.push(format!("N = {n} outside [2.2e55, 2.4e55]"));
            }
            if !plan.valid() {
                failures.push(format!("conditions {:?}", plan.conditions));
            }
        }
        Err(e) => failures.push(e.to_string()),
    }
    outcome(
        2,
        "lemma witness",
        &failures,
        "r = 513, N = C(548,513) ~ 2.3e55, v2(N) = 2".into(),
    )
}

pub fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    match find_minimal_r(36, prime(2), 2, 9, 1000) {
        Ok(plan) => {
            if plan.r != 9 {
                failures.push(format!("r = {}", plan.r));
            }
            if plan.n != BigUint::from(708_930_508u64) {
                failures.push(format!("N = {}", plan.n));
            }
            let f = factor_small(&plan.n, DEFAULT_FACTOR_BOUND);
            let expected = [(2, 2), (11, 1), (13, 1), (19, 1), (37, 1), (41, 1), (43, 1)];
            if f.primes != expected || f.cofactor.is_some() {
                failures.push(format!("factorization {:?}", f.primes));
            }
            if !plan.valid() {
                failures.push(format!("conditions {:?}", plan.conditions));
            }
        }
        Err(e) => failures.push(e.to_string()),
    }
    outcome(
        3,
        "minimal witness",
        &failures,
        "r = 9, N = 708930508 = 2^2 · 11 · 13 · 19 · 37 · 41 · 43".into(),
    )
}

pub fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    let shape = YoungDiagram::new(vec![260, 1]).expect("valid");
    let n = ssyt_count(&shape, 36);
    let v = vp_integer(&n, prime(2)).ok();
    if v != Some(2) {
        failures.push(format!("v2(N) = {v:?}"));
    }
    if !in_range(&n, 11, 12, 47) {
        failures.push(format!("N = {n} outside [1.1e47, 1.2e47]"));
    }
    if BigInt::from(n.clone()) != jacobi_trudi_count(&[260, 1], 36) {
        failures.push("hook-content and Jacobi-Trudi disagree".into());
    }
    outcome(
        4,
        "hook instance",
        &failures,
        "N((260,1), 36) ~ 1.15e47, v2(N) = 2".into(),
    )
}

pub fn criterion_5() -> Outcome {
    let primes: Vec<Prime> = [2, 3, 5, 7, 11].into_iter().map(prime).collect();
    let mut failures = Vec::new();
    let mut cases = 0u64;
    for n in 0..=500u64 {
        for m in 0..=n {
            let c = binomial(n, m).expect("m <= n");
            for &p in &primes {
                cases += 1;
                let k = vp_binomial_kummer(n, m, p).ok();
                let l = vp_binomial_legendre(n, m, p).ok();
                let d = vp_integer(&c, p).ok();
                if k.is_none() || k != l || k != d {
                    failures.push(format!("C({n},{m}) p={p}: {k:?} {l:?} {d:?}"));
                }
            }
        }
    }
    outcome(
        5,
        "valuation oracles",
        &failures,
        format!("{cases} cases, kummer = legendre = direct"),
    )
}

pub fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let mut cases = 0u64;
    let mut equalities = 0u64;
    for p in [2u64, 3, 5] {
        let pr = prime(p);
        let coprime: Vec<u64> = (1..=12).filter(|x| x % p != 0).collect();
        for s in 0..=6u32 {
            for r in 0..=s {
                for &ell in &coprime {
                    for j in (1..=40u64).filter(|x| x % p != 0) {
                        let top = p.pow(s) * ell;
                        let bottom = p.pow(r) * j;
                        if bottom > top {
                            continue;
                        }
                        cases += 1;
                        let v = vp_binomial_kummer(top, bottom, pr).expect("bottom <= top");
                        let bound = u64::from(s - r);
                        if v < bound {
                            failures.push(format!("p={p} C({top},{bottom}) v={v} < {bound}"));
                        }
                        if bottom < p.pow(s) {
                            equalities += 1;
                            if v != bound {
                                failures.push(format!("p={p} C({top},{bottom}) v={v} != {bound}"));
                            }
                        }
                    }
                }
            }
        }
    }
    outcome(
        6,
        "binomial valuation bound",
        &failures,
        format!("{cases} cases, {equalities} with equality"),
    )
}

fn hom_and_scalar<R: RandomElem, G: Rng>(
    label: &str,
    module: &SchurModule,
    ring: &R,
    rng: &mut G,
    failures: &mut Vec<String>,
) {
    match check_hom(module, ring, 50, None, rng) {
        Ok(r) if r.passed() => {}
        Ok(r) => failures.push(format!("{label}: {r}")),
        Err(e) => failures.push(format!("{label}: {e}")),
    }
    match check_scalar(module, ring, 50, rng) {
        Ok(r) if r.passed() => {}
        Ok(r) => failures.push(format!("{label}: {r}")),
        Err(e) => failures.push(format!("{label}: {e}")),
    }
}

pub fn criterion_7(seed: u64) -> Outcome {
    let mut rng = seeded(seed);
    let z7 = IntegersMod::new(7).expect("q >= 2");
    let mut failures = Vec::new();
    let mut instances = 0;
    for (shape, n) in small_grid().into_iter().filter(|(s, n)| feasible(s, *n)) {
        let module = match SchurModule::new(&shape, n, DEFAULT_ENUMERATION_LIMIT) {
            Ok(m) => m,
            Err(e) => {
                failures.push(format!("{shape} n={n}: {e}"));
                continue;
            }
        };
        instances += 3;
        hom_and_scalar(
            &format!("{shape} n={n} Z"),
            &module,
            &Integers,
            &mut rng,
            &mut failures,
        );
        hom_and_scalar(
            &format!("{shape} n={n} Z/7"),
            &module,
            &z7,
            &mut rng,
            &mut failures,
        );
        hom_and_scalar(
            &format!("{shape} n={n} Q"),
            &module,
            &Rationals,
            &mut rng,
            &mut failures,
        );
    }
    outcome(
        7,
        "homomorphism and scalar laws",
        &failures,
        format!("{instances} (lambda, n, ring) instances x 50 pairs, seed {seed}"),
    )
}

pub fn criterion_8(seed: u64) -> Outcome {
    let mut rng = seeded(seed);
    let mut failures = Vec::new();
    let mut instances = 0;
    for (shape, n) in small_grid() {
        let label = format!("{shape} n={n}");
        let count = ssyt_count(&shape, u64::from(n));
        let brute = brute_force_ssyt(shape.parts(), n);
        let enumerated = match ssyt_enumerate(&shape, n, DEFAULT_ENUMERATION_LIMIT) {
            Ok(e) => e,
            Err(e) => {
                failures.push(format!("{label}: {e}"));
                continue;
            }
        };
        if count != BigUint::from(enumerated.len()) || enumerated.len() != brute.len() {
            failures.push(format!(
                "{label}: count {count}, enumerated {}, brute force {}",
                enumerated.len(),
                brute.len()
            ));
            continue;
        }
        if enumerated
            .iter()
            .map(|t| t.filling().rows())
            .ne(brute.iter().cloned())
        {
            failures.push(format!("{label}: basis order differs from brute force"));
        }
        if !feasible(&shape, n) {
            continue;
        }
        instances += 1;
        let xs: Vec<BigInt> = (0..n).map(|_| Integers.random_elem(&mut rng)).collect();
        match schur_matrix(&RingMatrix::diagonal(&Integers, &xs), &shape, &Integers) {
            Ok(phi) => {
                if phi.rows() != enumerated.len() || phi.cols() != enumerated.len() {
                    failures.push(format!("{label}: matrix is {}x{}", phi.rows(), phi.cols()));
                }
                let trace = phi.trace(&Integers);
                let character = schur_polynomial(shape.parts(), &xs, &Integers);
                if trace != character {
                    failures.push(format!("{label}: trace {trace} != s_lambda {character}"));
                }
            }
            Err(e) => failures.push(format!("{label}: {e}")),
        }
    }
    outcome(
        8,
        "dimension and character",
        &failures,
        format!("{instances} feasible instances, counts and traces exact"),
    )
}

pub fn criterion_9(seed: u64) -> Outcome {
    let mut rng = seeded(seed);
    let mut failures = Vec::new();
    let mut compared = 0;
    for (shape, n) in small_grid() {
        let label = format!("{shape} n={n}");
        let Some(quotient) = QuotientModule::new(shape.parts(), n) else {
            failures.push(format!("{label}: labels do not span the quotient"));
            continue;
        };
        if quotient.dimension() == 0 {
            let g = RingMatrix::identity(&Rationals, n as usize);
            if !matches!(
                schur_matrix(&g, &shape, &Rationals),
                Err(Error::EmptyModule)
            ) {
                failures.push(format!("{label}: quotient is zero but module is not"));
            }
            continue;
        }
        let module = SchurModule::new(&shape, n, DEFAULT_ENUMERATION_LIMIT).expect("feasible");
        if module
            .basis()
            .iter()
            .map(|t| t.filling().rows())
            .ne(quotient.labels().iter().cloned())
        {
            failures.push(format!("{label}: label order differs"));
            continue;
        }
        let mut inputs = vec![RingMatrix::identity(&Rationals, n as usize)];
        inputs.extend((0..4).map(|_| random_matrix(&Rationals, n as usize, &mut rng)));
        for g in &inputs {
            compared += 1;
            match module.matrix(g, &Rationals) {
                Ok(phi) if phi == quotient.action(g) => {}
                Ok(_) => {
                    failures.push(format!("{label}: action differs for g = {:?}", g.entries()))
                }
                Err(e) => failures.push(format!("{label}: {e}")),
            }
            if shape.num_columns() == 1 {
                let expected = compound_matrix(g, shape.size(), &Rationals);
                if module.matrix(g, &Rationals).ok().as_ref() != Some(&expected) {
                    failures.push(format!("{label}: not the compound matrix"));
                }
            }
        }
    }
    outcome(
        9,
        "quotient-module oracle",
        &failures,
        format!("{compared} matrices agree over Q, columns match compound matrices"),
    )
}

pub fn criterion_10(seed: u64) -> Outcome {
    let mut rng = seeded(seed);
    let mut failures = Vec::new();
    let mut checked = 0;
    for q in [2u64, 6, 7] {
        let ring = IntegersMod::new(q).expect("q >= 2");
        for (shape, n) in small_grid().into_iter().filter(|(s, n)| feasible(s, *n)) {
            for _ in 0..25 {
                checked += 1;
                let g = random_int_matrix(n as usize, 20, &mut rng);
                match perind_core::schur::reduction_compatibility_check(&g, &shape, &ring) {
                    Ok(true) => {}
                    Ok(false) => failures.push(format!("{shape} n={n} q={q}: {:?}", g.entries())),
                    Err(e) => failures.push(format!("{shape} n={n} q={q}: {e}")),
                }
            }
        }
    }
    outcome(
        10,
        "reduction compatibility",
        &failures,
        format!("{checked} integer matrices, q in {{2, 6, 7}}"),
    )
}

pub fn criterion_11() -> Outcome {
    let mut failures = Vec::new();
    let mut cases = 0;
    for p in [2u64, 3] {
        let pr = prime(p);
        for sigma in 0..=6u32 {
            for delta in 0..=sigma {
                cases += 1;
                let (d, m) = (p.pow(sigma), p.pow(delta));
                let expected = u64::from(sigma - delta);
                let k = vp_binomial_kummer(d, m, pr).ok();
                let l = vp_binomial_legendre(d, m, pr).ok();
                if k != Some(expected) || l != Some(expected) {
                    failures.push(format!("p={p} C({d},{m}): {k:?} {l:?}, want {expected}"));
                }
                match salt_bounds(d, m as i64) {
                    Ok(b) if b.binomial_bound == b.gcd_bound => {}
                    Ok(b) => failures.push(format!(
                        "bounds({d},{m}): clause1 {} != clause3 {}",
                        b.binomial_bound, b.gcd_bound
                    )),
                    Err(e) => failures.push(format!("bounds({d},{m}): {e}")),
                }
            }
        }
    }
    outcome(
        11,
        "prime-power identity",
        &failures,
        format!("{cases} cases, v_p(C(p^s, p^d)) = s - d and clause1 = clause3"),
    )
}

/// Runs every criterion in order.
pub fn run(seed: u64) -> Vec<Outcome> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(seed),
        criterion_8(seed),
        criterion_9(seed),
        criterion_10(seed),
        criterion_11(),
    ]
}
