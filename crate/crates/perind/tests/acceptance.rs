//! Acceptance suite: prints one pass/fail line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;
use perind::selftest::{self, Outcome, DEFAULT_SEED};
use perind_core::padic::{binomial, vp_binomial_kummer, vp_integer};
use perind_core::planner::{find_minimal_r, find_r_lemma, plan_hook_shape, salt_bounds};
use perind_core::tableaux::ssyt_count;
use perind_core::{Prime, YoungDiagram};

fn main() -> ExitCode {
    let start = Instant::now();
    let criteria: [fn() -> Outcome; 11] = [
        selftest::criterion_1,
        selftest::criterion_2,
        selftest::criterion_3,
        selftest::criterion_4,
        selftest::criterion_5,
        selftest::criterion_6,
        || selftest::criterion_7(DEFAULT_SEED),
        || selftest::criterion_8(DEFAULT_SEED),
        || selftest::criterion_9(DEFAULT_SEED),
        || selftest::criterion_10(DEFAULT_SEED),
        selftest::criterion_11,
    ];
    let mut passed = 0;
    for criterion in criteria {
        let outcome = criterion();
        println!("{outcome}");
        if outcome.passed {
            passed += 1;
        }
    }
    let mut extras_failed = 0;
    for (name, check) in [
        ("worked example numbers", worked_example_numbers as fn()),
        ("bound examples", bound_examples),
    ] {
        match std::panic::catch_unwind(check) {
            Ok(()) => println!("[PASS]    {name}"),
            Err(_) => {
                println!("[FAIL]    {name}");
                extras_failed += 1;
            }
        }
    }
    println!(
        "acceptance: {passed} of 11 criteria passed in {:.1}s",
        start.elapsed().as_secs_f64()
    );
    if passed == 11 && extras_failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn two() -> Prime {
    Prime::new(2).unwrap()
}

fn worked_example_numbers() {
    assert_eq!(vp_binomial_kummer(36, 9, two()).unwrap(), 4);
    assert_eq!(vp_binomial_kummer(36, 27, two()).unwrap(), 4);

    let lemma = find_r_lemma(36, two(), 9).unwrap();
    assert_eq!((lemma.r, lemma.g, lemma.vp_n), (513, Some(6), 2));
    assert_eq!(
        lemma.n.to_string(),
        "22978693003606259306209307135688790182432582401119705316"
    );

    let minimal = find_minimal_r(36, two(), 2, 9, 1000).unwrap();
    assert_eq!(minimal.r, 9);
    assert_eq!(minimal.n, BigUint::from(708_930_508u64));
    assert_eq!(minimal.n, BigUint::from(4u32 * 11 * 13 * 19 * 37 * 41 * 43));
    assert_eq!(binomial(36, 9).unwrap(), BigUint::from(94_143_280u64));

    let hook = ssyt_count(&YoungDiagram::new(vec![260, 1]).unwrap(), 36);
    assert_eq!(
        hook.to_string(),
        "114734342260319204060660791279783645963396270100"
    );
    assert_eq!(vp_integer(&hook, two()).unwrap(), 2);
    let plan = plan_hook_shape(36, two(), 2, 9, 300).unwrap();
    assert_eq!(plan.diagram.parts(), &[260, 1]);
    assert_eq!(plan.r, 261);
    assert!(plan.valid());

    assert!(find_minimal_r(36, two(), 2, 9, 5).is_err());
}

fn bound_examples() {
    let b = salt_bounds(6, 2).unwrap();
    assert_eq!(
        (b.binomial_bound, b.gcd_bound, b.index_preserved),
        (3, 3, false)
    );
    let b = salt_bounds(8, 2).unwrap();
    assert_eq!((b.binomial_bound, b.gcd_bound), (4, 4));
    assert!(salt_bounds(6, 5).unwrap().index_preserved);
    assert!(salt_bounds(0, 1).is_err());
}
