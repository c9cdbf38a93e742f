//! Evaluating claims over a parameter grid.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::time::Instant;

use fibcube_core::{CubeParams, Family};
use rayon::prelude::*;

use crate::cache::Cache;
use crate::claims::{self, Claim, Outcome, Verdict};
use crate::error::{Error, Result};
use crate::oracle::{Oracle, Point};
use crate::probes;
use crate::register;
use crate::report::{ClaimCheck, Report};

pub const DEFAULT_BUDGET: u64 = 20_000;

#[derive(Clone, Debug)]
pub struct GridSpec {
    pub families: Vec<Family>,
    pub p: RangeInclusive<u32>,
    pub r: RangeInclusive<u32>,
    pub n: RangeInclusive<u32>,
    pub budget: u64,
    pub claims: Vec<&'static Claim>,
    /// Also check each claim at its fixture points.
    pub fixtures: bool,
    pub probes: bool,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            families: Family::ALL.to_vec(),
            p: 1..=4,
            r: 1..=4,
            n: 1..=12,
            budget: DEFAULT_BUDGET,
            claims: claims::registry().iter().collect(),
            fixtures: true,
            probes: false,
        }
    }
}

impl GridSpec {
    pub fn with_claims(mut self, ids: &[&str]) -> Result<Self> {
        self.claims = ids
            .iter()
            .map(|id| claims::find(id).ok_or_else(|| unknown_claim(id)))
            .collect::<Result<_>>()?;
        Ok(self)
    }

    /// Grid points in `(family, p, r, n)` order.
    pub fn grid_points(&self) -> Result<Vec<CubeParams>> {
        let mut out = Vec::new();
        for &f in &self.families {
            for p in self.p.clone() {
                for r in self.r.clone() {
                    for n in self.n.clone() {
                        out.push(CubeParams::new(f, p, r, n)?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Claims to evaluate at each point: applicable grid points plus fixtures.
    pub fn tasks(&self) -> Result<BTreeMap<CubeParams, Vec<&'static Claim>>> {
        let grid = self.grid_points()?;
        let mut tasks: BTreeMap<CubeParams, Vec<&'static Claim>> = BTreeMap::new();
        for &claim in &self.claims {
            let fixtures = if self.fixtures {
                (claim.fixtures)()
            } else {
                Vec::new()
            };
            for params in grid.iter().filter(|c| (claim.applies)(c)).chain(&fixtures) {
                let list = tasks.entry(*params).or_default();
                if !list.iter().any(|c| c.id == claim.id) {
                    list.push(claim);
                }
            }
        }
        Ok(tasks)
    }
}

pub fn unknown_claim(id: &str) -> Error {
    Error::UnknownClaim {
        id: id.to_string(),
        known: claims::registry()
            .iter()
            .map(|c| c.id)
            .collect::<Vec<_>>()
            .join(", "),
    }
}

fn evaluate(claim: &Claim, pt: &Point) -> Outcome {
    let params = pt.params();
    if !(claim.applies)(params) {
        return Outcome::skipped(format!("{} does not apply at {params}", claim.id));
    }
    if claim.uses_cube {
        if let Err(e) = pt.oracle().check_budget(params) {
            return Outcome::skipped(e.to_string());
        }
    }
    match (claim.eval)(pt) {
        Ok(out) => out,
        Err(e @ Error::Core(fibcube_core::Error::Budget { .. })) => Outcome::skipped(e.to_string()),
        Err(e) => Outcome {
            expected: serde_json::Value::Null,
            observed: serde_json::Value::Null,
            verdict: Verdict::Mismatch,
            witness: Some(serde_json::json!({"error": e.to_string()})),
        },
    }
}

fn check_at(claim: &Claim, pt: &Point) -> ClaimCheck {
    let start = Instant::now();
    let out = evaluate(claim, pt);
    let params = pt.params();
    let registered = if out.verdict.is_failure() {
        register::lookup(claim.id, params).map(|d| d.id.to_string())
    } else {
        None
    };
    ClaimCheck {
        claim_id: claim.id.to_string(),
        family: params.family.to_string(),
        p: params.p,
        r: params.r,
        n: params.n,
        expected: out.expected,
        observed: out.observed,
        verdict: out.verdict,
        registered,
        witness: out.witness,
        runtime_ms: start.elapsed().as_millis() as u64,
    }
}

/// One claim at one point. Inapplicable points give a skipped check.
pub fn run_claim(oracle: &Oracle, claim: &Claim, params: CubeParams) -> ClaimCheck {
    check_at(claim, &oracle.point(params))
}

/// Every claim of `spec` at every applicable point, in parallel over points.
pub fn run_grid(spec: &GridSpec, cache: &Cache) -> Result<Report> {
    let oracle = Oracle::new(cache, spec.budget);
    let tasks: Vec<(CubeParams, Vec<&'static Claim>)> = spec.tasks()?.into_iter().collect();
    let checks: Vec<ClaimCheck> = tasks
        .par_iter()
        .flat_map_iter(|(params, claims)| {
            let pt = oracle.point(*params);
            log::debug!("{params}: {} claims", claims.len());
            claims.iter().map(|c| check_at(c, &pt)).collect::<Vec<_>>()
        })
        .collect();
    let mut report = Report::new(checks);
    if spec.probes {
        report.probes = Some(probes::run(&oracle, &spec.grid_points()?)?);
    }
    Ok(report)
}
