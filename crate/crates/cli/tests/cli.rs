use std::process::{Command, Output};

use fusionlab::commands::Failure;
use fusionlab::format::{charpoly_from_json, charpoly_json, qpoly_from_json, qpoly_json};
use fusionlab_core::affinechar::{demazure_char, AffineWeight, WeylWord};
use fusionlab_core::supernomial::{fusion_char, AdmissionVector};
use fusionlab_core::{CharPoly, Error, QPoly};
use proptest::prelude::*;
use serde_json::Value;

fn fusionlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fusionlab"))
        .args(args)
        .env_remove(fusionlab::CAP_VAR)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_out(args: &[&str]) -> Value {
    let o = fusionlab(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn central_string_json_matches_the_worked_example() {
    let v = json_out(&["ttilde", "--L", "0,4", "--a", "4", "--format", "json"]);
    let p = qpoly_from_json(&v).unwrap();
    assert_eq!(p, QPoly::from_dense(8, &[1, 1, 3, 3, 4, 3, 2, 1, 1]));
}

#[test]
fn parity_excluded_index_is_zero() {
    let o = fusionlab(&["supernomial", "--L", "0,4", "--a2", "7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[]\n");
    let o = fusionlab(&["supernomial", "--L", "0,4", "--a2", "7"]);
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn char_json_round_trips() {
    let v = json_out(&["fusion-char", "--L", "0,4", "--format", "json"]);
    let c = charpoly_from_json(&v).unwrap();
    assert_eq!(
        c,
        fusion_char(&AdmissionVector::new(vec![0, 4]).unwrap()).unwrap()
    );
    assert_eq!(charpoly_json(&c), v);

    let w = WeylWord::from_indices(&[1, 0, 1, 0]).unwrap();
    let want = demazure_char(&w, AffineWeight::new(2, 0).unwrap())
        .unwrap()
        .poly;
    for spelling in [["--word", "s1s0^2"], ["--word-letters", "1,0,1,0"]] {
        let mut args = vec!["demazure", "--weight", "2,0", "--format", "json"];
        args.extend(spelling);
        assert_eq!(charpoly_from_json(&json_out(&args)).unwrap(), want);
    }
}

#[test]
fn output_is_deterministic() {
    let cases: &[&[&str]] = &[
        &["fusion-char", "--L", "1,2"],
        &["stats", "closed-forms", "--L", "0,4"],
        &[
            "clt-scan", "--family", "basic", "--shape", "0:N", "--N", "4,8",
        ],
        &["typeA-char", "--mu", "2,1", "--rank", "2"],
        &["central-string", "--L", "1,1"],
    ];
    for args in cases {
        for format in ["text", "json", "csv"] {
            let mut full = args.to_vec();
            full.extend(["--format", format]);
            let a = fusionlab(&full);
            let b = fusionlab(&full);
            assert_eq!(a.status.code(), Some(0), "{full:?}");
            assert_eq!(a.stdout, b.stdout, "{full:?}");
            assert!(!a.stdout.is_empty());
        }
    }
}

#[test]
fn csv_has_one_row_per_monomial() {
    let o = fusionlab(&["basic-spec", "--L", "1", "--format", "csv"]);
    assert_eq!(stdout(&o), "exponent,coefficient\n0,1\n1,1\n");
    let o = fusionlab(&["fusion-char", "--L", "0,4", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 49);
}

#[test]
fn usage_errors_exit_with_two() {
    let o = fusionlab(&["kostka", "--eta", "2,1", "--nu", "1,1,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
    for args in [
        &["kostka", "--eta", "1,2", "--mu", "2,1"][..],
        &["ttilde", "--L", "0,-1", "--a", "0"],
        &["demazure", "--weight", "2", "--word", "s1"],
        &["demazure", "--weight", "2,0", "--word", "s1s1"],
        &[
            "demazure",
            "--weight",
            "2,0",
            "--word",
            "s1",
            "--word-letters",
            "1",
        ],
        &["clt-scan", "--family", "demazure", "--N", "2"],
        &["stats", "asymptotic", "--slope", "x"],
        &["no-such-command"],
    ] {
        assert_eq!(fusionlab(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn resource_caps_exit_with_three() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_fusionlab"))
            .args(["fusion-char", "--L", "0,0,6"])
            .env(fusionlab::CAP_VAR, cap)
            .output()
            .unwrap()
    };
    assert_eq!(run("2").status.code(), Some(3));
    assert_eq!(run("100000").status.code(), Some(0));
    assert_eq!(run("lots").status.code(), Some(2));
}

#[test]
fn exit_code_mapping() {
    assert_eq!(
        Failure::Core(Error::Verification("x".into())).exit_code(),
        1
    );
    assert_eq!(
        Failure::Core(Error::ResourceCap {
            what: "terms",
            cap: 1
        })
        .exit_code(),
        3
    );
    assert_eq!(
        Failure::Core(Error::InvalidArgument("x".into())).exit_code(),
        2
    );
    assert_eq!(Failure::Usage("x".into()).exit_code(), 2);
}

#[test]
fn verification_commands_pass() {
    let v = json_out(&[
        "verify",
        "prop",
        "--max-level",
        "3",
        "--max-N",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(v["failures"], 0);
    assert!(v["checked"].as_u64().unwrap() > 100);
    let v = json_out(&["verify", "mixture", "--L", "1,1", "--format", "json"]);
    assert!(v["cases"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"] == true));
    let v = json_out(&[
        "mixture-ansatz",
        "--mu",
        "2,1",
        "--xi",
        "1,1,1",
        "--format",
        "json",
    ]);
    assert_eq!(v["reconstruction_matches"], true);
}

#[test]
fn stats_outputs() {
    let v = json_out(&[
        "stats", "galois", "--m", "1", "--N", "2", "--format", "json",
    ]);
    assert_eq!(
        (v["mean"].as_str(), v["variance"].as_str()),
        (Some("1/4"), Some("3/16"))
    );
    let v = json_out(&["stats", "closed-forms", "--L", "0,4", "--format", "json"]);
    assert_eq!(v["mean_T"], "38/3");
    assert_eq!(v["exact_mean_T"], "38/3");
    let v = json_out(&[
        "stats", "demazure", "--weight", "2,0", "--word", "s1s0^2", "--format", "json",
    ]);
    assert_eq!(v["exact"], "14/3");
    let v = json_out(&[
        "kostka", "--eta", "2,1", "--mu", "1,1,1", "--format", "json",
    ]);
    assert_eq!(qpoly_from_json(&v).unwrap(), QPoly::from_dense(1, &[1, 1]));
}

#[test]
fn scans_report_every_row() {
    let v = json_out(&[
        "lclt-scan",
        "--family",
        "basic",
        "--shape",
        "0:N",
        "--N",
        "10,20,40",
        "--format",
        "json",
    ]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for r in rows {
        assert!(r["distance"].as_f64().unwrap().is_finite());
        assert_eq!(r["mean_check"], true);
    }
    let v = json_out(&[
        "clt-scan", "--family", "galois", "--shape", "0:N", "--N", "0,3", "--format", "json",
    ]);
    assert!(v["rows"][0]["distance"].is_null());
}

proptest! {
    #[test]
    fn qpoly_json_round_trip(terms in prop::collection::vec((-50i64..50, -1000i64..1000), 0..12)) {
        let p = QPoly::from_terms(terms);
        prop_assert_eq!(qpoly_from_json(&qpoly_json(&p)).unwrap(), p);
    }

    #[test]
    fn charpoly_json_round_trip(terms in prop::collection::vec(((-9i64..9, 0i64..20), -99i64..99), 0..12)) {
        let p = CharPoly::from_terms(terms);
        let text = serde_json::to_string(&charpoly_json(&p)).unwrap();
        let back: Value = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(charpoly_from_json(&back).unwrap(), p);
    }
}
