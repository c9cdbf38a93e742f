//! Tabulated sequences and invariants.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use fibcube_core::{build_graph, phi, CubeParams, Family, InvariantBundle};
use serde::Serialize;

use crate::error::Result;
use crate::oracle::eccentricities;

/// `phi(i)` for `i` in `0..=i_max`.
pub fn phi_row(p: u32, r: u32, i_max: u32) -> Result<Vec<u64>> {
    (0..=i_max as i64).map(|i| Ok(phi(p, r, i)?)).collect()
}

pub fn render_phi(p: u32, r: u32, i_max: u32) -> Result<String> {
    let row = phi_row(p, r, i_max)?;
    let mut out = String::new();
    let _ = writeln!(out, "{:>4} {:>20}", "i", "phi");
    for (i, v) in row.iter().enumerate() {
        let _ = writeln!(out, "{i:>4} {v:>20}");
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantRow {
    pub n: u32,
    pub order: usize,
    pub size: usize,
    pub radius: u32,
    pub diameter: u32,
    pub center_size: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub connectivity: Option<usize>,
}

impl InvariantRow {
    fn new(n: u32, b: &InvariantBundle) -> Self {
        InvariantRow {
            n,
            order: b.order,
            size: b.size,
            radius: b.radius,
            diameter: b.diameter,
            center_size: b.center.len(),
            min_degree: b.min_degree,
            max_degree: b.max_degree,
            connectivity: b.connectivity,
        }
    }
}

pub fn invariant_rows(
    family: Family,
    p: u32,
    r: u32,
    ns: RangeInclusive<u32>,
    budget: u64,
    with_connectivity: bool,
) -> Result<Vec<InvariantRow>> {
    ns.map(|n| {
        let g = build_graph(&CubeParams::new(family, p, r, n)?, budget)?;
        let ecc = eccentricities(&g);
        let kappa = with_connectivity.then(|| fibcube_core::vertex_connectivity(&g));
        Ok(InvariantRow::new(
            n,
            &InvariantBundle::from_parts(&g, &ecc, kappa),
        ))
    })
    .collect()
}

pub fn render_invariants(rows: &[InvariantRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>3} {:>7} {:>8} {:>4} {:>4} {:>6} {:>4} {:>4} {:>6}",
        "n", "order", "size", "rad", "diam", "center", "min", "max", "kappa"
    );
    for r in rows {
        let kappa = r.connectivity.map_or("-".to_string(), |k| k.to_string());
        let _ = writeln!(
            out,
            "{:>3} {:>7} {:>8} {:>4} {:>4} {:>6} {:>4} {:>4} {:>6}",
            r.n,
            r.order,
            r.size,
            r.radius,
            r.diameter,
            r.center_size,
            r.min_degree,
            r.max_degree,
            kappa
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_row() {
        assert_eq!(phi_row(1, 1, 6).unwrap(), vec![1, 1, 2, 3, 5, 8, 13]);
        assert!(render_phi(2, 2, 3).unwrap().lines().count() == 5);
    }

    #[test]
    fn hypercube_rows() {
        let rows = invariant_rows(Family::O, 1, 9, 1..=4, 1000, true).unwrap();
        let last = &rows[3];
        assert_eq!(
            (last.order, last.size, last.radius, last.diameter),
            (16, 32, 4, 4)
        );
        assert_eq!(last.connectivity, Some(4));
        assert!(render_invariants(&rows).contains("  4      16       32"));
    }
}
