//! Exploratory measurements with no closed form to compare against.

use std::fmt::Write as _;

use fibcube_core::formulas::{claimed_radius_i, zero_eccentricity_i};
use fibcube_core::{CubeParams, Family};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::Oracle;

/// Largest cube whose connectivity is probed.
pub const CONNECTIVITY_MAX_ORDER: u64 = 5000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityRow {
    pub family: String,
    pub p: u32,
    pub r: u32,
    pub n: u32,
    pub order: u64,
    pub connectivity: usize,
    pub min_degree: usize,
}

/// Radius of an I-cube against the value `r ceil(n/(p+r))` and the
/// eccentricity of `0^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IRadiusRow {
    pub p: u32,
    pub r: u32,
    pub n: u32,
    pub residue: u32,
    pub claimed: u32,
    pub radius: u32,
    pub zero_eccentricity: u32,
    pub zero_eccentricity_formula: u32,
    pub zero_is_central: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Probes {
    pub connectivity: Vec<ConnectivityRow>,
    pub i_radius: Vec<IRadiusRow>,
}

impl Probes {
    pub fn render(&self) -> String {
        let mut out = String::new();
        if !self.connectivity.is_empty() {
            let _ = writeln!(out, "connectivity");
            let _ = writeln!(
                out,
                "{:<12} {:>6} {:>6} {:>6} {:>5}",
                "cube", "order", "kappa", "delta", "="
            );
            for c in &self.connectivity {
                let _ = writeln!(
                    out,
                    "{:<12} {:>6} {:>6} {:>6} {:>5}",
                    format!("{}({},{};{})", c.family, c.p, c.r, c.n),
                    c.order,
                    c.connectivity,
                    c.min_degree,
                    if c.connectivity == c.min_degree {
                        "yes"
                    } else {
                        "no"
                    }
                );
            }
            out.push('\n');
        }
        if !self.i_radius.is_empty() {
            let _ = writeln!(out, "I-cube radius");
            let _ = writeln!(
                out,
                "{:<12} {:>4} {:>8} {:>7} {:>8} {:>8}",
                "cube", "mod", "claimed", "radius", "e(0^n)", "central"
            );
            for c in &self.i_radius {
                let _ = writeln!(
                    out,
                    "{:<12} {:>4} {:>8} {:>7} {:>8} {:>8}",
                    format!("I({},{};{})", c.p, c.r, c.n),
                    c.residue,
                    c.claimed,
                    c.radius,
                    c.zero_eccentricity,
                    if c.zero_is_central { "yes" } else { "no" }
                );
            }
            out.push('\n');
        }
        out
    }
}

fn budget_ok(e: &Error) -> bool {
    matches!(e, Error::Core(fibcube_core::Error::Budget { .. }))
}

/// Vertex connectivity and minimum degree of every listed cube up to
/// [`CONNECTIVITY_MAX_ORDER`] vertices.
pub fn connectivity(oracle: &Oracle, points: &[CubeParams]) -> Result<Vec<ConnectivityRow>> {
    let rows: Vec<Result<Option<ConnectivityRow>>> = points
        .par_iter()
        .map(|&params| {
            let pt = oracle.point(params);
            let order = match pt.order() {
                Ok(o) if o <= CONNECTIVITY_MAX_ORDER => o,
                Ok(_) => return Ok(None),
                Err(e) if budget_ok(&e) => return Ok(None),
                Err(e) => return Err(e),
            };
            Ok(Some(ConnectivityRow {
                family: params.family.to_string(),
                p: params.p,
                r: params.r,
                n: params.n,
                order,
                connectivity: pt.connectivity()?,
                min_degree: pt.degrees()?.min,
            }))
        })
        .collect();
    rows.into_iter().filter_map(Result::transpose).collect()
}

/// I-cube radius rows for `2 <= p, r <= 4` and `n <= 14` among `points`.
pub fn i_radius(oracle: &Oracle, points: &[CubeParams]) -> Result<Vec<IRadiusRow>> {
    let chosen: Vec<CubeParams> = points
        .iter()
        .copied()
        .filter(|c| {
            c.family == Family::I && (2..=4).contains(&c.p) && (2..=4).contains(&c.r) && c.n <= 14
        })
        .collect();
    let rows: Vec<Result<Option<IRadiusRow>>> = chosen
        .par_iter()
        .map(|&c| {
            let pt = oracle.point(c);
            let d = match pt.distances() {
                Ok(d) => d,
                Err(e) if budget_ok(&e) => return Ok(None),
                Err(e) => return Err(e),
            };
            let zero = "0".repeat(c.n as usize);
            Ok(Some(IRadiusRow {
                p: c.p,
                r: c.r,
                n: c.n,
                residue: c.n % (c.p + c.r),
                claimed: claimed_radius_i(c.p, c.r, c.n),
                radius: d.radius,
                zero_eccentricity: pt.zero_eccentricity()?,
                zero_eccentricity_formula: zero_eccentricity_i(c.p, c.r, c.n),
                zero_is_central: d.center.contains(&zero),
            }))
        })
        .collect();
    rows.into_iter().filter_map(Result::transpose).collect()
}

pub fn run(oracle: &Oracle, points: &[CubeParams]) -> Result<Probes> {
    Ok(Probes {
        connectivity: connectivity(oracle, points)?,
        i_radius: i_radius(oracle, points)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cache::Cache;

    #[test]
    fn small_probe() {
        let cache = Cache::in_memory();
        let oracle = Oracle::new(&cache, 10_000);
        let pts: Vec<CubeParams> = (1..=8).map(|n| CubeParams::i(2, 3, n).unwrap()).collect();
        let p = run(&oracle, &pts).unwrap();
        assert_eq!(p.connectivity.len(), 8);
        assert_eq!(p.i_radius.len(), 8);
        for row in &p.i_radius {
            assert_eq!(row.zero_eccentricity, row.zero_eccentricity_formula);
        }
        assert!(p.render().contains("I(2,3;8)"));
    }
}
