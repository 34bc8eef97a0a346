//! Acceptance gate: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use surjhom::verify::{run_suite, Suite, VerificationReport, VerifyConfig};

const SEED: u64 = 20_240_601;

struct Line {
    id: usize,
    name: &'static str,
    ok: bool,
    detail: String,
}

fn run(suite: Suite, trials: usize) -> VerificationReport {
    let mut config = VerifyConfig::new(suite, SEED);
    config.trials = trials;
    run_suite(&config)
}

fn timed(limit: Duration, report: &VerificationReport, extra_ok: bool, detail: String) -> (bool, String) {
    let within = report.elapsed < limit;
    let ok = report.ok() && within && extra_ok;
    let mut d = format!(
        "{} passed, {} failed, {} skipped in {:.2}s (limit {}s); {detail}",
        report.passed,
        report.failed,
        report.skipped,
        report.elapsed.as_secs_f64(),
        limit.as_secs()
    );
    if !report.ok() {
        d.push('\n');
        d.push_str(&report.to_text());
    }
    (ok, d)
}

fn main() -> ExitCode {
    let mut lines = Vec::new();
    let mut size_checks = 0;
    let mut size_mismatches = 0;

    // classifier: the labelled figure cases plus every graph on at most three vertices
    let start = Instant::now();
    let report = run(Suite::Classifier, 0);
    let elapsed = start.elapsed();
    let figures = report.counter("figure_cases");
    let small = report.counter("up_to_three_vertex_graphs");
    lines.push(Line {
        id: 1,
        name: "classifier table conformance",
        ok: report.ok() && figures == 32 && small == 74 && elapsed < Duration::from_secs(1),
        detail: format!(
            "{figures} figure cases, {small} graphs on <=3 vertices, {} four-vertex graphs, {} failed, {:.3}s (limit 1s)",
            report.counter("four_vertex_graphs"),
            report.failed,
            elapsed.as_secs_f64()
        ),
    });

    let report = run(Suite::Thm1, 300);
    let graphs = report.counter("graphs");
    let (ok, detail) = timed(
        Duration::from_secs(300),
        &report,
        graphs >= 200,
        format!("{graphs} graphs, {} built instances", report.counter("instances")),
    );
    lines.push(Line { id: 2, name: "matching cut reduction equivalence", ok, detail });

    let report = run(Suite::Thm2, 1050);
    let per: Vec<u64> = ["c4", "p3", "diamond"].iter().map(|t| report.counter(&format!("instances_{t}"))).collect();
    let yes: Vec<u64> = ["c4", "p3", "diamond"].iter().map(|t| report.counter(&format!("yes_instances_{t}"))).collect();
    size_checks += report.counter("size_formula_checked");
    size_mismatches += report.counter("size_formula_mismatch");
    let (ok, detail) = timed(
        Duration::from_secs(900),
        &report,
        per.iter().all(|&c| c >= 100),
        format!("non-skipped per target (c4, p3, diamond) {per:?}, with a colouring {yes:?}"),
    );
    lines.push(Line { id: 3, name: "factor cut to surjective colouring equivalence", ok, detail });

    let report = run(Suite::Lemma1, 200);
    let (ok, detail) = timed(
        Duration::from_secs(60),
        &report,
        report.passed >= 200,
        format!("{} cuts checked, {} trials with cuts", report.counter("cuts_checked"), report.counter("trials_with_cuts")),
    );
    lines.push(Line { id: 4, name: "large cliques stay on one side", ok, detail });

    let report = run(Suite::Lemma2, 100);
    let (ok, detail) = timed(
        Duration::from_secs(60),
        &report,
        report.passed >= 100,
        format!("{} targets checked", report.counter("targets_checked")),
    );
    lines.push(Line { id: 5, name: "two-reflexive split connected and distance preserving", ok, detail });

    let report = run(Suite::Lemma4, 24);
    size_checks += report.counter("size_formula_checked");
    size_mismatches += report.counter("size_formula_mismatch");
    let (ok, detail) = timed(
        Duration::from_secs(600),
        &report,
        report.passed >= 20,
        format!(
            "{} homomorphisms, {} surjective, {} instances with a surjective map, {} truncated enumerations, {} non-surjective maps without both clique images",
            report.counter("homomorphisms_checked"),
            report.counter("surjective_checked"),
            report.counter("instances_with_surjective"),
            report.counter("enumerations_truncated"),
            report.counter("non_surjective_missing_clique_image"),
        ),
    );
    lines.push(Line { id: 6, name: "gadget homomorphisms non-expansive, cliques reach both loops", ok, detail });

    let report = run(Suite::Lift, 24);
    size_checks += report.counter("size_formula_checked");
    size_mismatches += report.counter("size_formula_mismatch");
    let (ok, detail) = timed(
        Duration::from_secs(900),
        &report,
        report.passed >= 20 && report.counter("lifted_instances") >= 60,
        format!(
            "{} lifted instances, {} yes instances",
            report.counter("lifted_instances"),
            report.counter("yes_instances")
        ),
    );
    lines.push(Line { id: 7, name: "twin lift equivalence", ok, detail });

    let report = run(Suite::Implications, 500);
    let (ok, detail) = timed(
        Duration::from_secs(300),
        &report,
        report.counter("pairs") >= 500,
        format!(
            "{} pairs; found retr {} comp {} surj {} hom {}",
            report.counter("pairs"),
            report.counter("retr_found"),
            report.counter("comp_found"),
            report.counter("surj_found"),
            report.counter("hom_found")
        ),
    );
    lines.push(Line { id: 8, name: "variant implication chain with checked witnesses", ok, detail });

    lines.push(Line {
        id: 9,
        name: "gadget size formula",
        ok: size_mismatches == 0 && size_checks > 0,
        detail: format!("{size_checks} builds checked across the reduction, clique-image and lift suites, {size_mismatches} mismatches"),
    });

    let mut all = true;
    for l in &lines {
        all &= l.ok;
        println!("criterion {} [{}] {}: {}", l.id, if l.ok { "PASS" } else { "FAIL" }, l.name, l.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
