//! Acceptance suite: runs every verification check at its fixed budget
//! and prints one pass/fail line per check.
//!
//! All values asserted here are exact integers; randomized steps are
//! certified across three seeds inside the checks themselves.

use levelq::verify::{self, CriterionReport};

fn assert_criterion(report: CriterionReport) {
    println!(
        "criterion {:2} ({}): {} ({} ms, budget {} ms)",
        report.id,
        report.name,
        if report.passed { "PASS" } else { "FAIL" },
        report.millis,
        report.budget_millis
    );
    for note in &report.notes {
        println!("    note: {note}");
    }
    assert!(
        report.passed,
        "criterion {} failed: {:?}",
        report.id, report.failures
    );
}

#[test]
fn criterion_01_bipartite_pipeline() {
    assert_criterion(verify::criterion_1(0));
}

#[test]
fn criterion_02_nongeneric_theta_cap() {
    assert_criterion(verify::criterion_2(0));
}

#[test]
fn criterion_03_ear_arithmetic_ratio_chain() {
    assert_criterion(verify::criterion_3(0));
}

#[test]
fn criterion_04_construction_pipeline() {
    assert_criterion(verify::criterion_4(0));
}

#[test]
fn criterion_05_monomial_suite() {
    assert_criterion(verify::criterion_5(0));
}

#[test]
fn criterion_06_matroid_search_pipeline() {
    assert_criterion(verify::criterion_6(0));
}

#[test]
fn criterion_07_macaulay_oracle_equivalence() {
    assert_criterion(verify::criterion_7(0));
}

#[test]
fn criterion_08_invariant_suite() {
    assert_criterion(verify::criterion_8(0));
}

#[test]
fn criterion_09_char_p_injectivity() {
    assert_criterion(verify::criterion_9(0));
}

#[test]
fn criterion_10_pure_o_sequence_scan() {
    assert_criterion(verify::criterion_10(0));
}

#[test]
fn module_coverage_is_complete() {
    // The fast checks alone already exercise every library module.
    let reports = [
        verify::criterion_1(0),
        verify::criterion_3(0),
        verify::criterion_5(0),
        verify::criterion_6(0),
    ];
    for (module, touched) in verify::module_coverage(&reports) {
        assert!(touched, "module {module} untouched by the suite");
    }
}
