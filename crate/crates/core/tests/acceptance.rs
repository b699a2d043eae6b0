//! Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion, then
//! the failing anchors, if any.

use axetlab_core::suite::{run_suite, CharFilter, CRITERIA};

#[test]
fn acceptance() {
    let report = run_suite(CharFilter::All);
    for c in &report.criteria {
        let tag = if c.passed() { "PASS" } else { "FAIL" };
        println!("{tag} criterion {}: {}", c.number, c.title);
    }
    let mut failed = Vec::new();
    for c in &report.criteria {
        for k in c.failures() {
            println!("  FAIL [{}] {} -- {}", c.number, k.anchor, k.detail);
        }
        if !c.passed() {
            failed.push(c.number);
        }
    }
    assert_eq!(report.criteria.len(), CRITERIA.len());
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

#[test]
fn suite_is_deterministic_across_thread_counts() {
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let serial = one.install(|| run_suite(CharFilter::Five)).to_json();
    let parallel = run_suite(CharFilter::Five).to_json();
    assert_eq!(serial, parallel);
}

#[test]
fn char_five_run_skips_char_zero_items() {
    let report = run_suite(CharFilter::Five);
    assert!(report.passed());
    let text = report.to_string();
    assert!(text.contains("SKIP"));
    assert!(report.criterion(6).unwrap().skipped());
    assert!(!report.criterion(8).unwrap().skipped());
}
