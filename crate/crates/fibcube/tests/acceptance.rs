//! Acceptance suite. One test per criterion, each printing a single
//! `criterion N PASS|FAIL` line. Run with
//! `cargo test -p fibcube --test acceptance -- --nocapture --test-threads 1`.
//!
//! All criteria share one cold run of the full grid (p, r in 1..=4, n in
//! 1..=14, at most 20000 vertices, plus fixture points, plus probes), cached
//! to a temporary file that the determinism criterion then reruns warm.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use fibcube::cache::Cache;
use fibcube::claims::{Verdict, PHI_TABLE};
use fibcube::grid::{run_grid, GridSpec};
use fibcube::report::{ClaimCheck, Format, Report};
use serde_json::json;

const BUDGET: u64 = 20_000;
const N_MAX: u32 = 14;

struct Suite {
    _dir: tempfile::TempDir,
    cache_path: PathBuf,
    report: Report,
    elapsed: Duration,
}

fn spec() -> GridSpec {
    GridSpec {
        p: 1..=4,
        r: 1..=4,
        n: 1..=N_MAX,
        budget: BUDGET,
        fixtures: true,
        probes: true,
        ..GridSpec::default()
    }
}

fn suite() -> &'static Suite {
    static SUITE: OnceLock<Suite> = OnceLock::new();
    SUITE.get_or_init(|| {
        let dir = tempfile::tempdir().expect("temp dir");
        let cache_path = dir.path().join("oracle.ndjson");
        let cache = Cache::open(&cache_path).expect("cache");
        let start = Instant::now();
        let report = run_grid(&spec(), &cache).expect("full grid");
        let elapsed = start.elapsed();
        cache.flush().expect("flush");
        Suite {
            _dir: dir,
            cache_path,
            report,
            elapsed,
        }
    })
}

fn checks(ids: &[&str]) -> Vec<&'static ClaimCheck> {
    suite()
        .report
        .checks
        .iter()
        .filter(|c| ids.contains(&c.claim_id.as_str()))
        .collect()
}

fn point(c: &ClaimCheck) -> String {
    format!("{}({},{};{})", c.family, c.p, c.r, c.n)
}

/// Non-passing checks, grouped by claim, at most three points each.
fn describe_failures(cs: &[&ClaimCheck]) -> String {
    let mut by_claim: BTreeMap<&str, Vec<&ClaimCheck>> = BTreeMap::new();
    for c in cs
        .iter()
        .filter(|c| c.verdict.is_failure() || c.verdict == Verdict::Skipped)
    {
        by_claim.entry(&c.claim_id).or_default().push(c);
    }
    by_claim
        .iter()
        .map(|(id, v)| {
            let shown: Vec<String> = v
                .iter()
                .take(3)
                .map(|c| {
                    let reg = c
                        .registered
                        .as_deref()
                        .map(|r| format!(" registered {r}"))
                        .unwrap_or_default();
                    format!(
                        "{} expected {} observed {}{}",
                        point(c),
                        c.expected,
                        c.observed,
                        reg
                    )
                })
                .collect();
            format!("{id}: {} failing ({})", v.len(), shown.join("; "))
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

fn all_pass(cs: &[&ClaimCheck]) -> bool {
    !cs.is_empty()
        && cs
            .iter()
            .all(|c| matches!(c.verdict, Verdict::Match | Verdict::BoundsHold))
}

fn verdict_line(num: u32, title: &str, pass: bool, detail: &str) {
    println!(
        "criterion {num} {} {title}: {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {num} failed: {detail}");
}

#[test]
fn criterion_1_phi_table() {
    let cs = checks(&["phi-table"]);
    let mut problems = Vec::new();
    for &(p, r, _) in &PHI_TABLE {
        for i in 0..=12u32 {
            let Some(c) = cs.iter().find(|c| (c.p, c.r, c.n) == (p, r, i)) else {
                problems.push(format!("({p},{r}) i={i} not checked"));
                continue;
            };
            let ok = if (p, r, i) == (2, 2, 11) {
                c.verdict == Verdict::Mismatch
                    && c.observed == json!(74)
                    && c.expected == json!(85)
                    && c.registered.as_deref() == Some("phi-2-2-11")
            } else {
                c.verdict == Verdict::Match
            };
            if !ok {
                problems.push(format!("({p},{r}) i={i}: {c:?}"));
            }
        }
    }
    let detail = if problems.is_empty() {
        format!(
            "{} values exact; (2,2) i=11 observed 74 vs printed 85, registered",
            cs.len()
        )
    } else {
        problems.join("; ")
    };
    verdict_line(1, "numeration table", problems.is_empty(), &detail);
}

#[test]
fn criterion_2_order_and_size_recursions() {
    let ids = [
        "order-o",
        "order-recursion-o",
        "order-recursion-i",
        "size-recursion-o",
        "size-recursion-i",
    ];
    let cs = checks(&ids);
    let pass = all_pass(&cs);
    let detail = if pass {
        format!("{} checks exact", cs.len())
    } else {
        format!("{} checks, {}", cs.len(), describe_failures(&cs))
    };
    verdict_line(2, "order and size recursions", pass, &detail);
}

#[test]
fn criterion_3_radius_and_center_o() {
    let cs = checks(&["radius-o", "center-o", "center-count-o"]);
    let mut methods: BTreeMap<String, usize> = BTreeMap::new();
    for c in cs.iter().filter(|c| c.claim_id == "center-count-o") {
        if let Some(m) = c.witness.as_ref().and_then(|w| w["count_method"].as_str()) {
            *methods.entry(m.to_string()).or_default() += 1;
        }
    }
    let both_paths = methods.contains_key("vandermonde") && methods.contains_key("closedform");
    let pass = all_pass(&cs) && both_paths;
    let detail = format!(
        "{} checks, count paths {:?}{}",
        cs.len(),
        methods,
        if pass {
            String::new()
        } else {
            format!(", {}", describe_failures(&cs))
        }
    );
    verdict_line(3, "O radius and center", pass, &detail);
}

#[test]
fn criterion_4_diameter_o() {
    let cs = checks(&["diameter-o"]);
    let ones: Vec<&&ClaimCheck> = cs.iter().filter(|c| c.n == 1).collect();
    let unshifted_off = ones
        .iter()
        .filter(|c| {
            c.witness
                .as_ref()
                .is_some_and(|w| w["unshifted_reading"] != c.observed)
        })
        .count();
    let pass = all_pass(&cs);
    let detail = format!(
        "{} checks; n=1 boundary: {} points, formula {} BFS, unshifted reading differs at {} of them{}",
        cs.len(),
        ones.len(),
        if ones.iter().all(|c| c.verdict == Verdict::Match) { "equals" } else { "differs from" },
        unshifted_off,
        if pass { String::new() } else { format!("; {}", describe_failures(&cs)) }
    );
    verdict_line(4, "O diameter", pass, &detail);
}

#[test]
fn criterion_5_diameter_i() {
    let cs = checks(&["diameter-i"]);
    let hold = cs
        .iter()
        .filter(|c| c.verdict == Verdict::BoundsHold)
        .count();
    let examples = checks(&["diameter-i-examples"]);
    let example = |r: u32, n: u32| {
        examples
            .iter()
            .find(|c| (c.p, c.r, c.n) == (2, r, n))
            .map(|c| {
                (
                    c.expected.clone(),
                    c.observed.clone(),
                    c.verdict == Verdict::Match,
                )
            })
    };
    let (lo, hi) = (example(7, 16), example(9, 14));
    let examples_ok = matches!(&lo, Some((_, _, true))) && matches!(&hi, Some((_, _, true)));
    let pass = all_pass(&cs) && examples_ok;
    let show = |e: &Option<(serde_json::Value, serde_json::Value, bool)>| match e {
        Some((x, o, _)) => format!("expected {x} BFS {o}"),
        None => "not checked".to_string(),
    };
    let detail = format!(
        "{} checks ({} in the bracketed case); I(2,7;16) {}; I(2,9;14) {}{}",
        cs.len(),
        hold,
        show(&lo),
        show(&hi),
        if all_pass(&cs) {
            String::new()
        } else {
            format!("; {}", describe_failures(&cs))
        }
    );
    verdict_line(5, "I diameter", pass, &detail);
}

#[test]
fn criterion_6_degrees() {
    let ids = [
        "max-degree",
        "min-degree-i",
        "min-degree-o",
        "min-degree-witness-i",
        "min-degree-witness-o",
        "min-degree-downward",
    ];
    let cs = checks(&ids);
    let pass = all_pass(&cs);
    let detail = if pass {
        format!("{} checks exact", cs.len())
    } else {
        describe_failures(&cs)
    };
    verdict_line(6, "degrees", pass, &detail);
}

#[test]
fn criterion_7_structure() {
    let ids = [
        "r-independence",
        "hypercube",
        "fibonacci-cube",
        "postal-network",
        "reversal-closure",
        "o-equals-i",
        "small-isomorphism",
    ];
    let cs = checks(&ids);
    let per_claim: BTreeMap<&str, usize> = ids
        .iter()
        .map(|id| (*id, cs.iter().filter(|c| c.claim_id == *id).count()))
        .collect();
    let pass = all_pass(&cs) && per_claim.values().all(|&k| k > 0);
    let detail = format!(
        "{:?}{}",
        per_claim,
        if pass {
            String::new()
        } else {
            format!("; {}", describe_failures(&cs))
        }
    );
    verdict_line(7, "structural statements", pass, &detail);
}

#[test]
fn criterion_8_probes() {
    let probes = suite().report.probes.as_ref().expect("probes ran");
    let counter: Vec<String> = probes
        .connectivity
        .iter()
        .filter(|c| c.connectivity != c.min_degree)
        .map(|c| {
            format!(
                "{}({},{};{}) kappa {} delta {}",
                c.family, c.p, c.r, c.n, c.connectivity, c.min_degree
            )
        })
        .collect();
    let mut by_residue: BTreeMap<u32, (usize, usize, usize)> = BTreeMap::new();
    for row in &probes.i_radius {
        let e = by_residue.entry(row.residue).or_default();
        e.0 += 1;
        e.1 += usize::from(row.radius == row.claimed);
        e.2 += usize::from(row.zero_is_central);
    }
    let expected_rows = 3 * 3 * N_MAX as usize;
    let emitted = !probes.connectivity.is_empty() && probes.i_radius.len() == expected_rows;
    println!(
        "I-radius probe by n mod (p+r): residue -> (rows, radius equals claimed, 0^n central)"
    );
    for (res, (rows, eq, central)) in &by_residue {
        println!("  {res}: ({rows}, {eq}, {central})");
    }
    let detail = format!(
        "connectivity probed on {} cubes, kappa = delta {}; I-radius rows {}/{}",
        probes.connectivity.len(),
        if counter.is_empty() {
            "everywhere".to_string()
        } else {
            format!("fails at {}", counter.join(", "))
        },
        probes.i_radius.len(),
        expected_rows
    );
    verdict_line(8, "probes", emitted, &detail);
}

#[test]
fn criterion_9_determinism() {
    let s = suite();
    let warm_cache = Cache::open(&s.cache_path).expect("reopen cache");
    let cached = warm_cache.len();
    let start = Instant::now();
    let warm = run_grid(&spec(), &warm_cache).expect("warm grid");
    let warm_time = start.elapsed();
    let a = s.report.without_timings().render(Format::Json);
    let b = warm.without_timings().render(Format::Json);
    let pass = a == b && cached > 0;
    let detail = format!(
        "{} checks, cold {:.1}s, warm {:.1}s from {} cached values, reports {}",
        s.report.checks.len(),
        s.elapsed.as_secs_f64(),
        warm_time.as_secs_f64(),
        cached,
        if a == b { "byte-identical" } else { "differ" }
    );
    verdict_line(9, "determinism", pass, &detail);
}
