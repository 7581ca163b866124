use num_bigint::BigUint;
use perind_core::padic::{
    binomial, digit_length, digits_base_p, vp_binomial_kummer, vp_binomial_legendre, vp_integer,
};
use perind_core::Prime;
use proptest::prelude::*;

fn prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 97]).prop_map(|p| Prime::new(p).unwrap())
}

proptest! {
    #[test]
    fn digits_round_trip(n in any::<u64>(), p in prime()) {
        let d = digits_base_p(n, p);
        prop_assert_eq!(d.value(), BigUint::from(n));
        prop_assert!(d.digits().iter().all(|&x| x < p.get()));
        prop_assert_eq!(d.len() as u32, digit_length(n, p));
    }

    #[test]
    fn digit_length_is_least_exceeding_power(n in 1u64..1_000_000, p in prime()) {
        let g = digit_length(n, p);
        prop_assert!(u128::from(p.get()).pow(g) > u128::from(n));
        prop_assert!(u128::from(p.get()).pow(g - 1) <= u128::from(n));
    }

    #[test]
    fn three_valuations_agree(n in 0u64..2000, frac in 0.0f64..=1.0, p in prime()) {
        let m = ((n as f64) * frac) as u64;
        let k = vp_binomial_kummer(n, m, p).unwrap();
        prop_assert_eq!(k, vp_binomial_legendre(n, m, p).unwrap());
        prop_assert_eq!(k, vp_integer(&binomial(n, m).unwrap(), p).unwrap());
    }

    #[test]
    fn binomial_symmetry(n in 0u64..300, m in 0u64..300) {
        prop_assume!(m <= n);
        prop_assert_eq!(binomial(n, m).unwrap(), binomial(n, n - m).unwrap());
    }

    #[test]
    fn valuation_bound_with_coprime_parts(
        p in prop::sample::select(vec![2u64, 3, 5]),
        s in 0u32..=6,
        r in 0u32..=6,
        ell in 1u64..30,
        j in 1u64..200,
    ) {
        let r = r % (s + 1);
        let ell = if ell % p == 0 { ell + 1 } else { ell };
        let j = if j % p == 0 { j + 1 } else { j };
        let (top, bottom) = (p.pow(s) * ell, p.pow(r) * j);
        prop_assume!(bottom <= top);
        let v = vp_binomial_kummer(top, bottom, Prime::new(p).unwrap()).unwrap();
        prop_assert!(v >= u64::from(s - r));
        if bottom < p.pow(s) {
            prop_assert_eq!(v, u64::from(s - r));
        }
    }
}

#[test]
fn multiple_of_prime_power_keeps_valuation() {
    // v_p(C(p^s l, m)) = v_p(C(p^s, m)) for 1 <= m < p^s, l coprime to p
    for p in [2u64, 3, 5] {
        let prime = Prime::new(p).unwrap();
        for s in 1..=5u32 {
            let q = p.pow(s);
            for ell in [1u64, 3, 5].into_iter().filter(|l| l % p != 0) {
                for m in 1..q {
                    assert_eq!(
                        vp_binomial_kummer(q * ell, m, prime).unwrap(),
                        vp_binomial_kummer(q, m, prime).unwrap(),
                        "p={p} s={s} l={ell} m={m}"
                    );
                }
            }
        }
    }
}

#[test]
fn prime_power_carry_count() {
    for p in [2u64, 3] {
        let prime = Prime::new(p).unwrap();
        for sigma in 0..=6u32 {
            for delta in 0..=sigma {
                let v = vp_binomial_kummer(p.pow(sigma), p.pow(delta), prime).unwrap();
                assert_eq!(v, u64::from(sigma - delta));
            }
        }
    }
}
