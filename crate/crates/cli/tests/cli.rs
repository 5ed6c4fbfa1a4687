use std::process::Command;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use solids_cli::expr::{parse, Atom, Expr, Literal, Op, Suffix, Term};
use solids_cli::run;
use solids_core::closed::{self, FormalCombination};
use solids_core::ring::{Sign, SimplexLiteral};

fn run_args(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("solids").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn literal() -> impl Strategy<Value = Literal> {
    (
        any::<bool>(),
        -1000i64..1000,
        prop_oneof![
            Just(Suffix::None),
            Just(Suffix::Zero),
            Just(Suffix::OneZero)
        ],
    )
        .prop_map(|(negated, scale, suffix)| Literal {
            negated,
            scale,
            suffix,
        })
}

fn expr() -> impl Strategy<Value = Expr> {
    let coeff = prop::option::of((-10_000i64..10_000).prop_map(BigInt::from));
    let leaf = prop_oneof![
        literal().prop_map(Atom::Literal),
        (-50i64..50, -50i64..50).prop_map(|(n, m)| Atom::Star(n, m)),
    ];
    let atom = leaf.prop_recursive(3, 24, 4, move |inner| {
        let term = (prop::option::of((-99i64..99).prop_map(BigInt::from)), inner)
            .prop_map(|(coeff, atom)| Term { coeff, atom });
        let op = prop_oneof![Just(Op::Add), Just(Op::Sub)];
        (term.clone(), prop::collection::vec((op, term), 0..3))
            .prop_map(|(first, rest)| Atom::Paren(Box::new(Expr { first, rest })))
    });
    let term = (coeff, atom).prop_map(|(coeff, atom)| Term { coeff, atom });
    let op = prop_oneof![Just(Op::Add), Just(Op::Sub)];
    (term.clone(), prop::collection::vec((op, term), 0..5))
        .prop_map(|(first, rest)| Expr { first, rest })
}

proptest! {
    #[test]
    fn printed_expressions_parse_back(e in expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse(&text).unwrap(), e, "{}", text);
    }

    #[test]
    fn garbage_never_panics(s in "[-+*<>()_0-9 star,]{0,30}") {
        let _ = parse(&s);
    }
}

/// Random sums of plain literals, as text and as a combination built directly.
fn generated(rng: &mut ChaCha8Rng, dim: usize) -> (String, FormalCombination) {
    let mut text = String::new();
    let mut combo = FormalCombination::new(dim, false);
    for i in 0..rng.gen_range(1..7) {
        let coeff: i64 = rng.gen_range(-20..=20);
        let scale: i64 = rng.gen_range(-30..=30);
        let negated = rng.gen_bool(0.3);
        let subtract = i > 0 && rng.gen_bool(0.5);
        if i > 0 {
            text.push_str(if subtract { " - " } else { " + " });
        }
        text.push_str(&format!(
            "{coeff}*{}<{scale}>",
            if negated { "-" } else { "" }
        ));
        let sign = if negated { Sign::Minus } else { Sign::Plus };
        combo
            .push_term(closed::Term {
                coeff: BigInt::from(if subtract { -coeff } else { coeff }),
                literal: SimplexLiteral {
                    sign,
                    ..SimplexLiteral::new(dim, scale)
                },
            })
            .unwrap();
    }
    (text, combo)
}

#[test]
fn eval_agrees_with_the_library_on_generated_expressions() {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    for i in 0..50 {
        let dim = if i % 2 == 0 { 2 } else { 3 };
        let (text, combo) = generated(&mut rng, dim);
        let (code, out, err) = run_args(&["eval", "--dim", &dim.to_string(), &text]);
        assert_eq!(code, 0, "{text}: {err}");
        assert_eq!(out.trim(), combo.eval().unwrap().to_json_string(), "{text}");
    }
}

#[test]
fn documented_examples() {
    let (code, out, _) = run_args(&["eval", "--dim", "2", "3*<2> - 3*<1>"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.trim(),
        r#"{"basis":"geom2","dim":2,"a0":false,"coeffs":["6","3"]}"#
    );
    let (code, out, _) = run_args(&["eval", "--dim", "3", "2*<6> - <4> - <3> + 2*<1>"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.trim(),
        r#"{"basis":"geom3","dim":3,"a0":false,"coeffs":["84","56","35"]}"#
    );
    let (code, out, _) = run_args(&["factor", "91"]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["factors"], serde_json::json!([7, 13]));
    assert_eq!(report["prime"], false);
    let (code, out, _) = run_args(&["verify", "--identity", "eq6", "--range", "-50..50"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS eq6"));
}

#[test]
fn extended_and_segment_literals() {
    let (code, out, _) = run_args(&["eval", "<2>_0 - 3*<1>_0 + 3*<0>_0"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.trim(),
        r#"{"basis":"orth","dim":2,"a0":true,"coeffs":["1","-1","1"]}"#
    );
    let (code, out, _) = run_args(&["eval", "--extended", "<2> - 3*<1> + 3*<0>"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""coeffs":["1","-1","1"]"#));
    let (code, out, _) = run_args(&["eval", "<-2>_10"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""coeffs":["-2","1"]"#));
    let (code, out, _) = run_args(&["eval", "-<2>_10"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""coeffs":["-2","-1"]"#));
}

#[test]
fn exit_codes() {
    assert_eq!(
        run_args(&["verify", "--identity", "closed2", "--range", "-3..3"]).0,
        0
    );
    let (code, _, err) = run_args(&[
        "verify",
        "--identity",
        "closed2",
        "--range",
        "-3..3",
        "--inject-fault",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("closed2 does not hold"));
    assert_eq!(
        run_args(&[
            "verify",
            "--identity",
            "theorem1",
            "--range",
            "2..50",
            "--inject-fault"
        ])
        .0,
        1
    );
    assert_eq!(
        run_args(&["verify", "--identity", "nope", "--range", "1..2"]).0,
        2
    );
    assert_eq!(
        run_args(&["verify", "--identity", "eq6", "--range", "5..1"]).0,
        2
    );
    assert_eq!(run_args(&["eval", "3*<2> +"]).0, 2);
    assert_eq!(run_args(&["eval", "star(2,5)"]).0, 2);
    assert_eq!(run_args(&["eval", "--dim", "3", "<2>_0"]).0, 2);
    assert_eq!(run_args(&["eval", "--dim", "4", "<2>"]).0, 2);
    assert_eq!(run_args(&["factor", "1"]).0, 2);
    assert_eq!(run_args(&["slabs", "--n", "0"]).0, 2);
    assert_eq!(run_args(&["frobnicate"]).0, 2);
    assert_eq!(run_args(&[]).0, 2);
    let (code, out, _) = run_args(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn tables_and_series() {
    let (code, out, _) = run_args(&["eulerian", "--m", "3"]);
    assert_eq!(code, 0);
    assert!(out
        .lines()
        .nth(2)
        .unwrap()
        .split_whitespace()
        .eq(["1", "4", "2/3"]));
    let (code, out, _) = run_args(&["eulerian", "--m", "2", "--json"]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(rows["rows"].as_array().unwrap().len(), 2);
    assert_eq!(rows["rows"][1]["volume"], "1/2");
    let (code, out, _) = run_args(&["series", "--terms", "3", "--json"]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(rows[2]["a2"], "37/64");
    assert_eq!(rows[2]["a1"], "-19/8");
    let (code, out, _) = run_args(&["slabs", "--n", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        (v["unit"].as_i64(), v["d1"].as_i64(), v["e1"].as_i64()),
        (Some(4), Some(1), Some(0))
    );
    let (code, out, _) = run_args(&["worpitzky", "--m", "4", "--n", "7"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""power":"2401""#) && out.contains(r#""holds":true"#));
}

#[test]
fn rendering_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let plans: [&[&str]; 4] = [
        &["--plan", "standard2", "--n", "3"],
        &["--plan", "difference", "--n", "4", "--k", "2"],
        &[
            "--plan", "fig4", "--n", "1", "--k", "2", "--l", "1", "--fill", "open",
        ],
        &[
            "--plan",
            "segment",
            "--n",
            "-2",
            "--unit",
            "25",
            "--negative-color",
            "crimson",
        ],
    ];
    for (i, plan) in plans.iter().enumerate() {
        let mut texts = Vec::new();
        for round in 0..2 {
            let path = dir.path().join(format!("{i}-{round}.svg"));
            let path_str = path.to_str().unwrap();
            let mut args = vec!["render", "--out", path_str];
            args.extend_from_slice(plan);
            let (code, _, err) = run_args(&args);
            assert_eq!(code, 0, "{plan:?}: {err}");
            texts.push(std::fs::read(&path).unwrap());
        }
        assert_eq!(texts[0], texts[1]);
        assert!(texts[0].starts_with(b"<svg"));
    }
    let (_, out, _) = run_args(&[
        "render",
        "--plan",
        "segment",
        "--n",
        "-2",
        "--negative-color",
        "crimson",
        "--out",
        "-",
    ]);
    assert!(out.contains("crimson"));
    assert_eq!(
        run_args(&["render", "--plan", "difference", "--n", "4", "--out", "-"]).0,
        2
    );
    assert_eq!(
        run_args(&["render", "--plan", "standard2", "--unit", "0", "--out", "-"]).0,
        2
    );
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_solids");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["eval", "<3>"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&ok.stdout).trim(),
        r#"{"basis":"geom2","dim":2,"a0":false,"coeffs":["6","3"]}"#
    );
    let fault = status(&[
        "verify",
        "--identity",
        "star",
        "--range",
        "-5..5",
        "--inject-fault",
    ]);
    assert_eq!(fault.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&fault.stdout).starts_with("FAIL star"));
    assert_eq!(status(&["eval", "<3"]).status.code(), Some(2));
    assert_eq!(status(&["verify"]).status.code(), Some(2));
}
