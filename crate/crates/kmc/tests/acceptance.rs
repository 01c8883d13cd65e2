//! Acceptance criteria. Each test prints one PASS/FAIL line; run with
//! `cargo test -p kmc --test acceptance -- --nocapture` to see them.

use std::process::Command;
use std::time::{Duration, Instant};

use kmc::suites::{self, SuiteReport};
use kmc_core::khm::{self, ConstructOptions};
use kmc_core::{catalog, Limits, OuterWord, PermGroup, Permutation};

fn report(id: &str, what: &str, ok: bool, detail: &str) {
    println!("{id} {} {what}: {detail}", if ok { "PASS" } else { "FAIL" });
}

fn suite_line(r: &SuiteReport) -> String {
    let mut s = format!("{} cases, {} checks passed, {} failed, {:.2}s", r.cases, r.passed, r.failed, r.elapsed.as_secs_f64());
    for f in r.failures.iter().take(5) {
        s.push_str(&format!("; {f}"));
    }
    s
}

fn sub(g: &PermGroup, gens: &[&str]) -> PermGroup {
    let gens: Vec<Permutation> = gens
        .iter()
        .map(|s| Permutation::parse_cycles(g.degree(), s).unwrap())
        .collect();
    g.subgroup(&gens).unwrap()
}

#[test]
fn ac1_theorem_matrix() {
    let start = Instant::now();
    let r = suites::theorem(&Limits::default());
    let elapsed = start.elapsed();
    let ok = r.ok() && r.cases >= 30 && elapsed < Duration::from_secs(60);
    report("AC1", "theorem matrix (H characteristic, law holds, bound within 1e-9)", ok, &suite_line(&r));
    assert!(r.ok(), "{r}");
    assert!(r.cases >= 30, "only {} cases", r.cases);
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
}

#[test]
fn ac2_golden_cases() {
    let l = Limits::default();
    let w = OuterWord::parse("[x1,x2]").unwrap();
    let opts = ConstructOptions::default();

    let s3 = catalog::build("S3", &l).unwrap();
    let s3_case = khm::construct(&s3, &sub(&s3, &["(1 2 3)"]), &w, &opts).unwrap();

    let v4 = catalog::build("V4", &l).unwrap();
    let v4_case = khm::construct(&v4, &sub(&v4, &["(1 2)(3 4)"]), &w, &opts).unwrap();

    let d4 = catalog::build("D4", &l).unwrap();
    let d4_case = khm::construct(&d4, &sub(&d4, &["(1 2 3 4)"]), &w, &opts).unwrap();

    let got = (
        s3_case.h.order(),
        v4_case.h.order(),
        v4_case.log2_index_h(),
        v4_case.bound,
        d4_case.h.order(),
    );
    let ok = got == (3, 1, 2.0, 2.0, 4);
    report(
        "AC2",
        "golden traces (S3,A3) (V4,C2) (D4,C4)",
        ok,
        &format!(
            "|H| = {}, {}, {}; V4 log2|G:H| = {} vs bound {}",
            got.0, got.1, got.4, got.2, got.3
        ),
    );
    assert!(ok, "{got:?}");
}

#[test]
fn ac3_lemma_instances() {
    let r = suites::lemma(&Limits::default());
    let ok = r.ok() && r.cases >= 100;
    report("AC3", "lemma on sampled families", ok, &suite_line(&r));
    assert!(ok, "{r}");
}

#[test]
fn ac4_verbal_properties() {
    let r = suites::properties(&Limits::default());
    report("AC4", "verbal subgroup properties 1-4", r.ok(), &suite_line(&r));
    assert!(r.ok(), "{r}");
}

#[test]
fn ac5_endomorphism_coincidence() {
    let r = suites::coincidence(&Limits::default());
    report("AC5", "surjective endomorphisms = Aut, modes agree", r.ok(), &suite_line(&r));
    assert!(r.ok(), "{r}");
}

#[test]
fn ac6_introduction_facts() {
    let r = suites::intro(&Limits::default());
    report("AC6", "core index divides |G:H|!, intersection index", r.ok(), &suite_line(&r));
    assert!(r.ok(), "{r}");
}

#[test]
fn ac7_json_is_deterministic() {
    let cases = [
        ("S3", "(1 2 3)"),
        ("V4", "(1 2)(3 4)"),
        ("C2xC2", "(1 2)(3 4)"),
        ("D4", "(1 2 3 4)"),
    ];
    let run = |group: &str, subgroup: &str| {
        Command::new(env!("CARGO_BIN_EXE_kmc"))
            .args(["run", "--group", group, "--subgroup", subgroup, "--word", "[x1,x2]", "--format", "json"])
            .output()
            .expect("kmc runs")
    };
    let mut mismatched = Vec::new();
    for (group, subgroup) in cases {
        let a = run(group, subgroup);
        let b = run(group, subgroup);
        if !(a.status.success() && b.status.success() && !a.stdout.is_empty() && a.stdout == b.stdout) {
            mismatched.push(group);
        }
    }
    let ok = mismatched.is_empty();
    report(
        "AC7",
        "byte-identical JSON across runs",
        ok,
        &format!("{} golden cases, mismatches {mismatched:?}", cases.len()),
    );
    assert!(ok);
}

#[test]
fn ac8_series_sanity() {
    let r = suites::series(&Limits::default());
    report("AC8", "derived series and nilpotent:1 on abelian entries", r.ok(), &suite_line(&r));
    assert!(r.ok(), "{r}");
}
