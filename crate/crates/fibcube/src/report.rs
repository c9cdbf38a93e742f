//! Verification reports and their table, CSV and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::claims::Verdict;
use crate::probes::Probes;

/// One claim evaluated at one point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimCheck {
    pub claim_id: String,
    pub family: String,
    pub p: u32,
    pub r: u32,
    pub n: u32,
    pub expected: Value,
    pub observed: Value,
    pub verdict: Verdict,
    /// Register entry excusing a failure, if one covers this point.
    pub registered: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Value>,
    pub runtime_ms: u64,
}

impl ClaimCheck {
    /// A failure with no register entry.
    pub fn is_unexcused_failure(&self) -> bool {
        self.verdict.is_failure() && self.registered.is_none()
    }

    fn sort_key(&self) -> (&str, &str, u32, u32, u32) {
        (&self.claim_id, &self.family, self.p, self.r, self.n)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<ClaimCheck>,
    /// Verdict counts per claim.
    pub summary: BTreeMap<String, BTreeMap<Verdict, u64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub probes: Option<Probes>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

impl Report {
    pub fn new(mut checks: Vec<ClaimCheck>) -> Self {
        checks.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let mut summary: BTreeMap<String, BTreeMap<Verdict, u64>> = BTreeMap::new();
        for c in &checks {
            *summary
                .entry(c.claim_id.clone())
                .or_default()
                .entry(c.verdict)
                .or_default() += 1;
        }
        Report {
            checks,
            summary,
            probes: None,
        }
    }

    pub fn unexcused_failures(&self) -> impl Iterator<Item = &ClaimCheck> {
        self.checks.iter().filter(|c| c.is_unexcused_failure())
    }

    pub fn passed(&self) -> bool {
        self.unexcused_failures().next().is_none()
    }

    pub fn count(&self, verdict: Verdict) -> u64 {
        self.summary.values().filter_map(|m| m.get(&verdict)).sum()
    }

    /// The report with timings zeroed, for comparing runs.
    pub fn without_timings(&self) -> Report {
        let mut out = self.clone();
        for c in &mut out.checks {
            c.runtime_ms = 0;
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("reports serialize") + "\n",
            Format::Csv => self.csv(),
            Format::Table => self.table(),
        }
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "claim_id",
            "family",
            "p",
            "r",
            "n",
            "expected",
            "observed",
            "verdict",
            "registered",
            "witness",
            "runtime_ms",
        ])
        .expect("in-memory write");
        for c in &self.checks {
            w.write_record([
                c.claim_id.clone(),
                c.family.clone(),
                c.p.to_string(),
                c.r.to_string(),
                c.n.to_string(),
                compact(&c.expected),
                compact(&c.observed),
                c.verdict.as_str().to_string(),
                c.registered.clone().unwrap_or_default(),
                c.witness.as_ref().map(compact).unwrap_or_default(),
                c.runtime_ms.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    fn table(&self) -> String {
        let mut out = String::new();
        let shown: Vec<&ClaimCheck> = self
            .checks
            .iter()
            .filter(|c| c.verdict.is_failure())
            .collect();
        if !shown.is_empty() {
            let _ = writeln!(out, "failures:");
            for c in shown {
                let _ = writeln!(
                    out,
                    "  {:<24} {}({},{};{})  expected {}  observed {}  {}{}",
                    c.claim_id,
                    c.family,
                    c.p,
                    c.r,
                    c.n,
                    compact(&c.expected),
                    compact(&c.observed),
                    c.verdict.as_str(),
                    c.registered
                        .as_ref()
                        .map(|id| format!("  [registered: {id}]"))
                        .unwrap_or_default(),
                );
            }
            let _ = writeln!(out);
        }
        let _ = writeln!(
            out,
            "{:<24} {:>7} {:>8} {:>11} {:>15} {:>7}",
            "claim", "match", "mismatch", "bounds_hold", "bounds_violated", "skipped"
        );
        for (id, counts) in &self.summary {
            let get = |v| counts.get(&v).copied().unwrap_or(0);
            let _ = writeln!(
                out,
                "{:<24} {:>7} {:>8} {:>11} {:>15} {:>7}",
                id,
                get(Verdict::Match),
                get(Verdict::Mismatch),
                get(Verdict::BoundsHold),
                get(Verdict::BoundsViolated),
                get(Verdict::Skipped),
            );
        }
        if let Some(p) = &self.probes {
            out.push('\n');
            out.push_str(&p.render());
        }
        let unexcused = self.unexcused_failures().count();
        let _ = writeln!(
            out,
            "\n{} checks, {} unregistered failures",
            self.checks.len(),
            unexcused
        );
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
