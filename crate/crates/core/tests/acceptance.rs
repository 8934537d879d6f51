//! Acceptance run: one line per criterion, exit status 1 if any fails.
//!
//! Criteria 1 to 12 run named sections of `manifests/acceptance.toml` on a
//! single worker; criterion 13 runs the seeded property suites.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use sudoku_chroma::graph::FamilySpec;
use sudoku_chroma::theorems::{run_suite, CheckReport, Manifest, SuiteConfig, Verdict};

const MANIFEST: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../manifests/acceptance.toml"));

/// (criterion, manifest section, expected instance count, time limit in seconds)
const SECTIONS: [(u32, &str, usize, u64); 12] = [
    (1, "paths", 9, 60),
    (2, "even-cycles", 3, 60),
    (3, "stars", 5, 30),
    (4, "complete-bipartite", 6, 120),
    (5, "bistars", 9, 60),
    (6, "coronas", 12, 300),
    (7, "max-degree", 51, 600),
    (8, "census", 72, 1800),
    (9, "clique-attachment", 30, 600),
    (10, "inequality", 9, 600),
    (11, "apex", 5, 300),
    (12, "embedding", 1, 600),
];

const PROPERTY_LIMIT: Duration = Duration::from_secs(600);

fn run_section(manifest: &Manifest, name: &str) -> Result<Vec<CheckReport>, String> {
    let section = manifest.section(name).ok_or(format!("section {name} missing"))?;
    let one = Manifest {
        sections: vec![section.clone()],
    };
    run_suite(&one, &SuiteConfig::default()).map_err(|e| e.to_string())
}

fn computed_of<'a>(reports: &'a [CheckReport], id: &str) -> Option<&'a str> {
    reports
        .iter()
        .find(|r| r.instance_id == id)
        .map(|r| r.computed.as_str())
}

/// Checks specific to a criterion beyond "every instance matches".
fn extra(criterion: u32, reports: &[CheckReport]) -> Result<(), String> {
    match criterion {
        9 => {
            for (id, want) in [
                ("attach/attach:path:6@2-3:K5", "7"),
                ("attach/attach:path:6@2-3:K3", "4"),
            ] {
                match computed_of(reports, id) {
                    Some(v) if v == want => {}
                    other => return Err(format!("{id}: computed {other:?}, expected {want}")),
                }
            }
            Ok(())
        }
        10 => {
            let (mut strict, mut tight) = (0, 0);
            for r in reports {
                let is_strict = r.note.ends_with("strict");
                if is_strict {
                    strict += 1;
                } else {
                    tight += 1;
                }
                let text = r.instance_id.split_once('/').map_or("", |p| p.1);
                let spec: FamilySpec = text.parse().map_err(|e| format!("{}: {e}", r.instance_id))?;
                if let FamilySpec::AttachClique { base, m, .. } = spec {
                    if matches!(*base, FamilySpec::Path(_)) && m >= 4 && !is_strict {
                        return Err(format!("{} is not strict", r.instance_id));
                    }
                }
            }
            if strict == 0 || tight == 0 {
                return Err(format!("{strict} strict and {tight} tight cases; expected both kinds"));
            }
            Ok(())
        }
        12 => {
            let r = &reports[0];
            if r.computed != "9" || !r.note.contains("chi(G2)=3 chi(G3)=4 sn(G2,4)=9") {
                return Err(format!("computed {} ({})", r.computed, r.note));
            }
            Ok(())
        }
        _ => Ok(()),
    }
}

fn criterion(manifest: &Manifest, (id, name, count, limit): (u32, &str, usize, u64)) -> (bool, String) {
    let start = Instant::now();
    let outcome = run_section(manifest, name);
    let elapsed = start.elapsed();
    let reports = match outcome {
        Ok(r) => r,
        Err(e) => return (false, format!("{name}: {e}")),
    };
    let bad: Vec<&CheckReport> = reports.iter().filter(|r| r.verdict != Verdict::Match).collect();
    let detail = format!(
        "{name}: {} instances, {} not matching, {:.3} s (limit {limit} s)",
        reports.len(),
        bad.len(),
        elapsed.as_secs_f64()
    );
    if let Some(r) = bad.first() {
        return (
            false,
            format!(
                "{detail}; first: {} predicted {} computed {} {}",
                r.instance_id, r.predicted, r.computed, r.note
            ),
        );
    }
    if reports.len() != count {
        return (false, format!("{detail}; expected {count} instances"));
    }
    if elapsed > Duration::from_secs(limit) {
        return (false, format!("{detail}; over time"));
    }
    match extra(id, &reports) {
        Ok(()) => (true, detail),
        Err(e) => (false, format!("{detail}; {e}")),
    }
}

fn properties() -> (bool, String) {
    let seed = common::seed();
    let start = Instant::now();
    let mut failures = Vec::new();
    for (name, suite) in common::SUITES {
        if let Err(e) = suite(common::CASES, seed) {
            failures.push(format!("{name}: {e}"));
        }
    }
    let elapsed = start.elapsed();
    let mut detail = format!(
        "{} suites x {} cases, seed {seed:#x}, {} failing, {:.3} s (limit {} s)",
        common::SUITES.len(),
        common::CASES,
        failures.len(),
        elapsed.as_secs_f64(),
        PROPERTY_LIMIT.as_secs()
    );
    if let Some(f) = failures.first() {
        detail = format!("{detail}; first: {f}");
    }
    (failures.is_empty() && elapsed <= PROPERTY_LIMIT, detail)
}

fn main() -> ExitCode {
    let manifest = match Manifest::parse(MANIFEST) {
        Ok(m) => m,
        Err(e) => {
            println!("acceptance manifest does not parse: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut all = true;
    for section in SECTIONS {
        let (ok, detail) = criterion(&manifest, section);
        println!(
            "criterion {:>2}: {} {detail}",
            section.0,
            if ok { "PASS" } else { "FAIL" }
        );
        all &= ok;
    }
    let (ok, detail) = properties();
    println!("criterion 13: {} {detail}", if ok { "PASS" } else { "FAIL" });
    all &= ok;
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
