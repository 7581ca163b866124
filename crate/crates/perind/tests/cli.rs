use std::io::Write;
use std::process::{Command, Output, Stdio};

use perind::json::PlanRecord;

fn perind(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_perind"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn perind");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = perind(args, "");
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn status(args: &[&str], stdin: &str) -> i32 {
    perind(args, stdin).status.code().unwrap()
}

#[test]
fn worked_examples() {
    assert_eq!(stdout(&["vp", "--binom", "36", "9", "-p", "2"]), "4\n");
    assert_eq!(stdout(&["vp", "--binom", "36", "27", "-p", "2"]), "4\n");
    assert_eq!(stdout(&["vp", "1", "-p", "3"]), "0\n");
    assert_eq!(
        stdout(&["vp", "--binom", "548", "513", "-p", "2", "--verify"]),
        "2 (kummer=legendre: ok)\n"
    );
    assert_eq!(
        stdout(&["count", "9", "-n", "36", "--factor"]),
        "708930508 = 2^2 · 11 · 13 · 19 · 37 · 41 · 43\n"
    );
    assert_eq!(stdout(&["count", "1^9", "-n", "36"]), "94143280\n");
    assert_eq!(
        stdout(&["count", "260,1", "-n", "36", "--approx"]),
        "114734342260319204060660791279783645963396270100\napprox: 1.15e47\n"
    );
    assert_eq!(stdout(&["bounds", "6", "2"]), "clause1: 3, clause3: 3\n");
    assert_eq!(stdout(&["bounds", "8", "2"]), "clause1: 4, clause3: 4\n");
    assert!(stdout(&["bounds", "6", "5"]).contains("clause2: index preserved (gcd(m,d)=1)"));
}

#[test]
fn schur_matrices_and_checks() {
    let out = perind(&["schur", "2", "-n", "2", "--ring", "mod:7"], "2 0\n0 3\n");
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "4 0 0\n0 6 0\n0 0 2\n"
    );
    let out = perind(
        &["schur", "1,1", "-n", "2", "--ring", "int", "--matrix", "-"],
        "3 5\n7 11\n",
    );
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "-2\n");
    assert_eq!(
        stdout(&["schur", "2,1", "-n", "3", "--check", "hom", "--seed", "42"]),
        "hom: ok (50 samples)\n"
    );
    assert_eq!(
        stdout(&[
            "schur",
            "2,1",
            "-n",
            "3",
            "--ring",
            "rat",
            "--check",
            "scalar",
            "--samples",
            "10"
        ]),
        "scalar: ok (10 samples)\n"
    );
    assert_eq!(
        stdout(&[
            "schur",
            "3,1",
            "-n",
            "3",
            "--ring",
            "mod:6",
            "--check",
            "reduce",
            "--samples",
            "5"
        ]),
        "reduce: ok (5 samples)\n"
    );
}

#[test]
fn plans_round_trip_through_json() {
    let text = stdout(&[
        "plan",
        "2^2,3^2",
        "-m",
        "36",
        "-p",
        "2",
        "--strategy",
        "minimal",
    ]);
    let record: PlanRecord = serde_json::from_str(&text).unwrap();
    assert_eq!(
        (record.r, record.n.as_str(), record.vp_n),
        (9, "708930508", 2)
    );
    let again = serde_json::to_string_pretty(&record).unwrap();
    assert_eq!(again.trim_end(), text.trim_end());

    let text = stdout(&[
        "plan",
        "2^2,3^2",
        "-m",
        "36",
        "-p",
        "2",
        "--strategy",
        "lemma",
    ]);
    let record: PlanRecord = serde_json::from_str(&text).unwrap();
    assert_eq!(record.r, 513);

    let text = stdout(&["plan", "2^1", "-m", "2", "-p", "2"]);
    let record: PlanRecord = serde_json::from_str(&text).unwrap();
    assert_eq!((record.r, record.n.as_str(), record.ell), (1, "2", 1));

    let text = stdout(&["plan", "2^2,3^2", "-m", "36"]);
    let records: Vec<PlanRecord> = serde_json::from_str(&text).unwrap();
    assert_eq!(records.len(), 2);
    assert_eq!(records[0].r, 513);
    assert_eq!(
        serde_json::to_string_pretty(&records).unwrap(),
        text.trim_end()
    );

    let text = stdout(&[
        "plan", "2^2,3^2", "-m", "36", "-p", "2", "--shape", "hook", "--bound", "300",
    ]);
    let record: PlanRecord = serde_json::from_str(&text).unwrap();
    assert_eq!((record.diagram.as_str(), record.r), ("260,1", 261));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &[
            "schur",
            "3,1",
            "-n",
            "3",
            "--ring",
            "rat",
            "--check",
            "hom",
            "--seed",
            "7",
            "--samples",
            "5",
        ][..],
        &["plan", "2^2,3^2,5", "-m", "180", "--strategy", "minimal"][..],
    ] {
        let a = perind(args, "");
        let b = perind(args, "");
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.stderr, b.stderr);
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn exit_codes() {
    assert_eq!(status(&["--help"], ""), 0);
    assert_eq!(status(&["--version"], ""), 0);
    assert_eq!(status(&["vp", "12", "-p", "2", "--nope"], ""), 1);
    assert_eq!(status(&["count", "2,3", "-n", "2"], ""), 1);
    assert_eq!(status(&["schur", "2", "-n", "2"], "1 2\n3\n"), 1);
    assert_eq!(status(&["vp", "12", "-p", "9"], ""), 2);
    assert_eq!(status(&["vp", "--binom", "3", "4", "-p", "2"], ""), 2);
    assert_eq!(status(&["plan", "2^2,3", "-m", "4"], ""), 2);
    assert_eq!(status(&["bounds", "0", "1"], ""), 2);
    assert_eq!(
        status(
            &[
                "plan",
                "2^2,3^2",
                "-m",
                "36",
                "-p",
                "2",
                "--strategy",
                "minimal",
                "--bound",
                "5"
            ],
            ""
        ),
        3
    );
    let out = perind(&["plan", "2^2,3", "-m", "4"], "");
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("prime 3"), "{err}");
}
