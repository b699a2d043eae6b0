use std::fs;
use std::path::Path;

use axetlab_cli::{emit_algebra_file, parse_algebra_file, run};
use axetlab_core::catalog::{self, NAMES};
use axetlab_core::{Field, Scalar};
use proptest::prelude::*;
use tempfile::TempDir;

fn axetlab(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("axetlab").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn emit_to(dir: &Path, name: &str, extra: &[&str]) -> String {
    let path = dir.join(format!("{name}.alg")).display().to_string();
    let mut args = vec!["catalog", "emit", name, "-o", &path];
    args.extend_from_slice(extra);
    let (code, _, err) = axetlab(&args);
    assert_eq!(code, 0, "{err}");
    path
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn round_trip_is_identity_on_catalog() {
    for name in NAMES {
        let c = catalog::by_name(name, &Field::Rational, Some(&Scalar::rational(1, 4))).unwrap();
        let text = emit_algebra_file(&c);
        let back = parse_algebra_file(&text).unwrap();
        assert_eq!(back.algebra, c.algebra, "{name}");
        assert_eq!(back.axes, c.axes, "{name}");
        assert_eq!(emit_algebra_file(&back), text, "{name}");
    }
}

#[test]
fn emitted_q2_matches_constructor() {
    let dir = TempDir::new().unwrap();
    let path = emit_to(dir.path(), "Q2", &[]);
    let parsed = parse_algebra_file(&fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(parsed.algebra, catalog::make_q2_third(&Field::Rational).unwrap().algebra);
}

#[test]
fn verify_passes_on_skew_constructions() {
    let dir = TempDir::new().unwrap();
    for (name, extra) in [("Q2-skew", &[][..]), ("3C-skew", &["--alpha", "1/4"][..]), ("3C-12", &[]), ("Q2x5-one", &[])] {
        let path = emit_to(dir.path(), name, extra);
        let (code, out, err) = axetlab(&["verify", &path]);
        assert_eq!(code, 0, "{name}: {out}{err}");
        assert!(out.lines().all(|l| l.ends_with("PASS")), "{out}");
    }
}

#[test]
fn verify_names_the_failed_axiom() {
    let dir = TempDir::new().unwrap();
    let path = write(
        dir.path(),
        "bad.alg",
        "axetlab-algebra 1\nfield: rational\nbasis: a b\nproduct a a = a\nproduct b b = b\naxis x jordan 1/2 = a + 2*b\n",
    );
    let report = dir.path().join("r.json");
    let (code, out, _) = axetlab(&["verify", &path, "--report", report.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("A1"), "{out}");
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(json["passed"], false);
    assert_eq!(json["axes"][0]["failures"][0], "A1");
}

#[test]
fn verify_with_law_override() {
    let dir = TempDir::new().unwrap();
    let path = emit_to(dir.path(), "2B", &[]);
    assert_eq!(axetlab(&["verify", &path, "--jordan", "1/3"]).0, 0);
    assert_eq!(axetlab(&["verify", &path, "--law", "1/4", "1/2"]).0, 0);
}

#[test]
fn verify_without_axes_is_an_error() {
    let dir = TempDir::new().unwrap();
    let path = write(dir.path(), "none.alg", "axetlab-algebra 1\nfield: rational\nbasis: a\nproduct a a = a\n");
    let (code, _, err) = axetlab(&["verify", &path]);
    assert_eq!(code, 2);
    assert!(err.contains("no axes declared"));
}

#[test]
fn parse_errors_exit_two_with_position() {
    let dir = TempDir::new().unwrap();
    let path = write(dir.path(), "p2.alg", "axetlab-algebra 1\nfield: prime 2\nbasis: a\n");
    let (code, _, err) = axetlab(&["verify", &path]);
    assert_eq!(code, 2);
    assert!(err.contains("bad field"), "{err}");
    let path = write(dir.path(), "typo.alg", "axetlab-algebra 1\nfield: rational\nbasis: a\nproduct a a = a +\n");
    let (code, _, err) = axetlab(&["verify", &path]);
    assert_eq!(code, 2);
    assert!(err.contains("4:"), "{err}");
}

#[test]
fn axet_shapes() {
    let dir = TempDir::new().unwrap();
    let q2x = emit_to(dir.path(), "Q2x5", &[]);
    let (code, out, _) = axetlab(&["axet", &q2x, "--axes", "x,z"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("X(4)"));
    let skew = emit_to(dir.path(), "3C-12", &[]);
    assert_eq!(axetlab(&["axet", &skew]).1.lines().next(), Some("Xskew(1)"));
    let (code, out, _) = axetlab(&["axet", &skew, "--axes", "y"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("X(1) (degenerate"), "{out}");
}

#[test]
fn catalog_usage_errors() {
    assert_eq!(axetlab(&["catalog", "nonesuch"]).0, 2);
    let (code, _, err) = axetlab(&["catalog", "3C-skew", "--alpha", "1/2"]);
    assert_eq!(code, 2);
    assert!(err.contains("alpha = 1/2"), "{err}");
    assert_eq!(axetlab(&["catalog", "3C"]).0, 2);
    assert_eq!(axetlab(&["frobnicate"]).0, 2);
    let (code, out, _) = axetlab(&["catalog", "list"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), NAMES.len());
}

#[test]
fn catalog_emit_is_deterministic_and_verifies() {
    let (_, a, _) = axetlab(&["catalog", "emit", "3C", "--alpha", "1/4"]);
    let (_, b, _) = axetlab(&["catalog", "emit", "3C", "--alpha", "1/4"]);
    assert_eq!(a, b);
    let dir = TempDir::new().unwrap();
    let path = write(dir.path(), "3c.alg", &a);
    assert_eq!(axetlab(&["verify", &path]).0, 0);
    let (_, f5, _) = axetlab(&["catalog", "Q2x5-one"]);
    assert!(f5.contains("field: prime 5"));
    assert!(f5.contains("product x z = 3*x + y + 2*z"));
}

#[test]
fn paper_suite_char_five_with_report() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("suite.json");
    let (code, out, _) = axetlab(&["paper-suite", "--char", "5", "--report", report.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("SKIP"));
    assert!(out.contains("notice:"));
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(json["criteria"].as_array().unwrap().len(), 10);
    assert_eq!(axetlab(&["paper-suite", "--char", "7"]).0, 2);
}

#[test]
fn paper_suite_is_deterministic() {
    let a = axetlab(&["paper-suite", "--summary"]);
    let b = axetlab(&["paper-suite", "--summary"]);
    assert_eq!(a.0, 0, "{}", a.1);
    assert_eq!(a, b);
    assert_eq!(a.1.lines().filter(|l| l.starts_with("PASS")).count(), 10);
}

proptest! {
    #[test]
    fn random_tables_round_trip(
        p in prop::sample::select(vec![0u64, 3, 5, 7]),
        coeffs in prop::collection::vec((-9i64..10, 1i64..7), 3 * 6),
    ) {
        let field = if p == 0 { Field::Rational } else { Field::prime(p).unwrap() };
        let names = ["e1", "e2", "e3"];
        let mut k = 0;
        let mut entries = Vec::new();
        for i in 0..3 {
            for j in i..3 {
                let v: Vec<Scalar> = (0..3).map(|_| {
                    let (n, d) = coeffs[k % coeffs.len()];
                    k += 1;
                    let d = if p != 0 && (d as u64).is_multiple_of(p) { 1 } else { d };
                    field.frac(n, d)
                }).collect();
                entries.push((i, j, axetlab_core::Element::new(v)));
            }
        }
        let alg = axetlab_core::StructureAlgebra::from_products(field, &names, entries).unwrap();
        let c = catalog::Construction { name: "random".into(), algebra: alg, axes: vec![] };
        let text = emit_algebra_file(&c);
        let back = parse_algebra_file(&text).unwrap();
        prop_assert_eq!(&back.algebra, &c.algebra);
        prop_assert_eq!(emit_algebra_file(&back), text);
    }
}
