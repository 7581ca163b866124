use num_bigint::BigUint;
use perind_core::padic::{vp_binomial_kummer, vp_binomial_legendre, vp_u64};
use perind_core::planner::{
    crt_pair, find_minimal_r, find_r_lemma, plan_full_decomposition, plan_hook_shape, salt_bounds,
};
use perind_core::tableaux::{ssyt_count, ssyt_enumerate};
use perind_core::{PeriodFactorization, Prime, Strategy};
use proptest::prelude::*;

fn recheck(plan: &perind_core::IsolationPlan) {
    let p = plan.prime.get();
    let modulus = p.pow(plan.modulus_exponent);
    assert_eq!(plan.r % plan.ell, 0);
    assert_eq!(plan.r % modulus, 1 % modulus);
    if plan.diagram.num_rows() == 1 {
        let top = plan.r + plan.degree - 1;
        let k = vp_binomial_kummer(top, plan.r, plan.prime).unwrap();
        let l = vp_binomial_legendre(top, plan.r, plan.prime).unwrap();
        assert_eq!(k, l);
        assert_eq!(k, plan.s);
    }
    assert_eq!(plan.vp_n, plan.s);
    assert!(plan.valid());
}

#[test]
fn lemma_plans_certify() {
    for p in [2u64, 3, 5] {
        let prime = Prime::new(p).unwrap();
        let others: Vec<u64> = [2u64, 3, 5, 7]
            .into_iter()
            .filter(|&q| q != p)
            .take(2)
            .collect();
        let mut ells = vec![1];
        for q in others {
            ells.extend([q, q * q]);
        }
        for m in (1..=200u64).filter(|m| m % p == 0) {
            for &ell in &ells {
                let plan = find_r_lemma(m, prime, ell).unwrap();
                assert_eq!(plan.s, vp_u64(m, prime).unwrap());
                recheck(&plan);
            }
        }
    }
}

#[test]
fn minimal_never_exceeds_lemma() {
    for p in [2u64, 3] {
        let prime = Prime::new(p).unwrap();
        for m in (1..=120u64).filter(|m| m % p == 0) {
            for ell in [1u64, 5, 25] {
                let lemma = find_r_lemma(m, prime, ell).unwrap();
                let minimal =
                    find_minimal_r(m, prime, lemma.modulus_exponent, ell, lemma.r).unwrap();
                assert!(minimal.r <= lemma.r, "m={m} p={p} l={ell}");
                assert_eq!(minimal.vp_n, lemma.vp_n);
                recheck(&minimal);
            }
        }
    }
}

#[test]
fn hook_counts_match_enumeration() {
    // count((t,1), 2) = t
    let plan = plan_hook_shape(2, Prime::new(2).unwrap(), 1, 1, 50).unwrap();
    assert_eq!(plan.diagram.to_string(), "2,1");
    assert_eq!(plan.r, 3);
    for t in 1..=6 {
        let shape = perind_core::YoungDiagram::hook(t).unwrap();
        let listed = ssyt_enumerate(&shape, 2, 1000).unwrap().len();
        assert_eq!(ssyt_count(&shape, 2), BigUint::from(listed));
        assert_eq!(listed, t);
    }
    recheck(&plan);
}

#[test]
fn decompositions_multiply() {
    for (period, m) in [
        ("2^2,3^2", 36u64),
        ("2^2,3^2", 6),
        ("2,3,5", 30),
        ("2^3,5", 40),
    ] {
        let period: PeriodFactorization = period.parse().unwrap();
        for strategy in [Strategy::Lemma, Strategy::Minimal] {
            let d = plan_full_decomposition(&period, m, strategy, 1_000_000).unwrap();
            assert_eq!(d.product_check(), Some(true), "{period} m={m}");
            assert!(d.all_valid());
            for (p, plan) in &d.plans {
                let plan = plan.as_ref().unwrap();
                assert_eq!(plan.ell, period.complement(*p).unwrap());
                assert_eq!(plan.a, period.exponent_of(*p));
                recheck(plan);
            }
        }
    }
}

proptest! {
    #[test]
    fn crt_solves_both_congruences(m1 in 1u64..500, m2 in 1u64..500, r1 in 0u64..500, r2 in 0u64..500) {
        match crt_pair(r1 % m1, m1, r2 % m2, m2) {
            Ok(x) => {
                prop_assert!(x >= 1);
                prop_assert!(x <= m1 * m2);
                prop_assert_eq!(x % m1, r1 % m1);
                prop_assert_eq!(x % m2, r2 % m2);
            }
            Err(_) => prop_assert!(num_integer::gcd(m1, m2) > 1),
        }
    }

    #[test]
    fn bounds_are_divisors(d in 1u64..5000, m in -50i64..5000) {
        let b = salt_bounds(d, m).unwrap();
        prop_assert_eq!(d % b.binomial_bound, 0);
        prop_assert_eq!(d % b.gcd_bound, 0);
        prop_assert_eq!(b.index_preserved, num_integer::gcd(m.unsigned_abs(), d) == 1);
    }
}
