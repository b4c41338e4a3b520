//! Acceptance suite: the toolkit's exit gate. One test per criterion,
//! each printing a PASS/FAIL line (visible with `--nocapture`) and
//! asserting every named check exactly.

use curveforge::report::RunReport;
use curveforge::verify::{self, DEFAULT_SEED};

fn gate(name: &str, reports: Vec<RunReport>) {
    let mut all = true;
    let mut failures = Vec::new();
    for r in &reports {
        for c in &r.checks {
            if !c.pass {
                all = false;
                failures.push(format!(
                    "[{}] {}: expected {:?}, got {}",
                    r.command, c.name, c.expected, c.got
                ));
            }
        }
    }
    println!("{} {}", if all { "PASS" } else { "FAIL" }, name);
    assert!(all, "{name} failed:\n{}", failures.join("\n"));
}

#[test]
fn criterion_01_family_point_counts() {
    let reports = [5u32, 7, 8, 9, 11, 13]
        .into_iter()
        .map(verify::criterion1)
        .collect();
    gate(
        "criterion-1: family curves count (q-1)^2 and equal the triangle complement",
        reports,
    );
}

#[test]
fn criterion_02_named_curve_counts() {
    let reports = [4u32, 5, 7, 8, 9]
        .into_iter()
        .map(verify::criterion2)
        .collect();
    gate("criterion-2: named-curve point counts", reports);
}

#[test]
fn criterion_03_spectrum_suite() {
    let reports = [5u32, 7, 8, 9]
        .into_iter()
        .map(|q| verify::criterion3(q, DEFAULT_SEED, 1000))
        .collect();
    gate(
        "criterion-3: family spectra and identities on 1000 random sets per q",
        reports,
    );
}

#[test]
fn criterion_04_lemma_predicates() {
    let reports = [5u32, 7, 8, 9]
        .into_iter()
        .map(verify::criterion4)
        .collect();
    gate("criterion-4: per-point and spectrum lemma predicates", reports);
}

#[test]
fn criterion_05_equivalence_class_counts() {
    let reports = [5u32, 7, 8, 9, 11, 13]
        .into_iter()
        .map(verify::criterion5)
        .collect();
    gate(
        "criterion-5: equivalence classes by explicit orbit computation",
        reports,
    );
}

#[test]
fn criterion_06_q7_reproduction() {
    gate(
        "criterion-6: q=7 arc codes, reconstruction and point profiles",
        vec![verify::criterion6()],
    );
}

#[test]
fn criterion_07_sv_equality() {
    let reports = [5u32, 7, 8, 9]
        .into_iter()
        .map(verify::criterion7)
        .collect();
    gate(
        "criterion-7: refined bound attained with equality on family curves",
        reports,
    );
}

#[test]
fn criterion_08_spectrum_systems() {
    gate(
        "criterion-8: exact rational closed forms of the spectrum system",
        vec![verify::criterion8()],
    );
}

#[test]
fn criterion_09_oracle_equivalences() {
    let mut reports = vec![verify::criterion9_weights()];
    for q in [2u32, 3, 4, 5, 7] {
        reports.push(verify::criterion9_restriction(q, DEFAULT_SEED, 500));
    }
    for q in [2u32, 3, 4, 5, 7, 8] {
        reports.push(verify::criterion9_equiv(q, DEFAULT_SEED, 100));
    }
    gate(
        "criterion-9: dual-route oracles (weights, restriction, witnesses)",
        reports,
    );
}

#[test]
fn criterion_10_disclosure() {
    let r = verify::criterion10();
    for c in &r.checks {
        println!("note: {}", c.got);
    }
    gate(
        "criterion-10: non-enumerable classification covered by property suites",
        vec![r],
    );
}
