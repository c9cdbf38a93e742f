//! Brute-force invariants of one cube, memoized through the [`Cache`].

use std::cell::OnceCell;

use fibcube_core::{
    build_graph, enumerate_vertices, find_distance_barriers, numsys::ForbiddenFactors,
    order_estimate, vertex_connectivity, CubeGraph, CubeParams, Error as CoreError, Word,
};
use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::cache::{Cache, CacheKey};
use crate::error::Result;

/// Radius, diameter and center from all-source BFS.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceStats {
    pub radius: u32,
    pub diameter: u32,
    pub center: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    /// Number of vertices of maximum degree.
    pub max_count: usize,
    /// Smallest minimum-degree vertex all of whose neighbors have one 1 fewer.
    pub downward_min_vertex: Option<String>,
}

/// Vertex pairs on which some pairwise test failed, with the first one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDefects {
    pub count: u64,
    pub first: Option<(String, String, u32, u32)>,
}

/// Shared context for evaluating claims: the cache and the vertex budget.
pub struct Oracle<'a> {
    cache: &'a Cache,
    budget: u64,
}

impl<'a> Oracle<'a> {
    pub fn new(cache: &'a Cache, budget: u64) -> Self {
        Oracle { cache, budget }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn point(&self, params: CubeParams) -> Point<'_> {
        Point {
            oracle: self,
            params,
            graph: OnceCell::new(),
        }
    }

    /// Errors with [`CoreError::Budget`] when the cube is too large.
    pub fn check_budget(&self, params: &CubeParams) -> Result<u64> {
        let order = order_estimate(params)?;
        if order > self.budget {
            return Err(CoreError::Budget {
                order,
                budget: self.budget,
            }
            .into());
        }
        Ok(order)
    }

    fn cached<T, F>(&self, params: &CubeParams, name: &str, compute: F) -> Result<T>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T>,
    {
        let key = CacheKey::new(params, name);
        if let Some(v) = self.cache.get(&key) {
            match serde_json::from_value(v) {
                Ok(t) => return Ok(t),
                Err(e) => log::warn!("cached {name} for {params} unreadable, recomputing: {e}"),
            }
        }
        let value = compute()?;
        let json = serde_json::to_value(&value).expect("oracle values serialize");
        self.cache.put(key, json);
        Ok(value)
    }

    /// Number of enumerated vertices.
    pub fn order(&self, params: &CubeParams) -> Result<u64> {
        self.check_budget(params)?;
        self.cached(params, "order", || {
            Ok(enumerate_vertices(params).len() as u64)
        })
    }

    /// Number of edges.
    pub fn size(&self, params: &CubeParams) -> Result<u64> {
        self.point(*params).size()
    }
}

/// One grid point, building its graph at most once.
pub struct Point<'a> {
    oracle: &'a Oracle<'a>,
    params: CubeParams,
    graph: OnceCell<CubeGraph>,
}

impl Point<'_> {
    pub fn params(&self) -> &CubeParams {
        &self.params
    }

    pub fn oracle(&self) -> &Oracle<'_> {
        self.oracle
    }

    pub fn graph(&self) -> Result<&CubeGraph> {
        if let Some(g) = self.graph.get() {
            return Ok(g);
        }
        self.oracle.check_budget(&self.params)?;
        let g = build_graph(&self.params, self.oracle.budget)?;
        Ok(self.graph.get_or_init(|| g))
    }

    fn cached<T, F>(&self, name: &str, compute: F) -> Result<T>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T>,
    {
        self.oracle.check_budget(&self.params)?;
        self.oracle.cached(&self.params, name, compute)
    }

    pub fn order(&self) -> Result<u64> {
        self.oracle.order(&self.params)
    }

    pub fn size(&self) -> Result<u64> {
        self.cached("size", || Ok(self.graph()?.size() as u64))
    }

    pub fn distances(&self) -> Result<DistanceStats> {
        self.cached("distances", || {
            let g = self.graph()?;
            let ecc = eccentricities(g);
            let radius = ecc.iter().copied().min().unwrap_or(0);
            let diameter = ecc.iter().copied().max().unwrap_or(0);
            let center = (0..g.order())
                .filter(|&v| ecc[v] == radius)
                .map(|v| g.word(v).to_string())
                .collect();
            Ok(DistanceStats {
                radius,
                diameter,
                center,
            })
        })
    }

    /// Eccentricity of `0^n`.
    pub fn zero_eccentricity(&self) -> Result<u32> {
        self.cached("zero-eccentricity", || {
            let g = self.graph()?;
            let zero = Word::zeros(self.params.n as usize)?;
            let rank = g.rank(&zero).expect("0^n is a vertex");
            Ok(*g.bfs(rank).iter().max().unwrap_or(&0))
        })
    }

    pub fn degrees(&self) -> Result<DegreeStats> {
        self.cached("degrees", || {
            let g = self.graph()?;
            let deg = g.degrees();
            let min = deg.iter().copied().min().unwrap_or(0);
            let max = deg.iter().copied().max().unwrap_or(0);
            let max_count = deg.iter().filter(|&&d| d == max).count();
            let downward_min_vertex = (0..g.order())
                .filter(|&v| deg[v] == min)
                .find(|&v| {
                    let w = g.word(v).weight();
                    g.neighbors(v)
                        .iter()
                        .all(|&u| g.word(u as usize).weight() < w)
                })
                .map(|v| g.word(v).to_string());
            Ok(DegreeStats {
                min,
                max,
                max_count,
                downward_min_vertex,
            })
        })
    }

    /// Pairs whose graph distance differs from their Hamming distance.
    pub fn isometry_defects(&self) -> Result<PairDefects> {
        self.cached("isometry-defects", || {
            let g = self.graph()?;
            Ok(scan_pairs(g, |_, _, d, h| d != h))
        })
    }

    /// Pairs where "distance exceeds Hamming distance" and "a barrier exists"
    /// disagree.
    pub fn barrier_defects(&self) -> Result<PairDefects> {
        let (p, r) = (self.params.p, self.params.r);
        self.cached("barrier-defects", || {
            let g = self.graph()?;
            let mut err = None;
            let out = scan_pairs(g, |a, b, d, h| match find_distance_barriers(a, b, p, r) {
                Ok(bs) => (d > h) == bs.is_empty(),
                Err(e) => {
                    err.get_or_insert(e);
                    true
                }
            });
            match err {
                Some(e) => Err(e.into()),
                None => Ok(out),
            }
        })
    }

    pub fn connectivity(&self) -> Result<usize> {
        self.cached("connectivity", || Ok(vertex_connectivity(self.graph()?)))
    }
}

/// All eccentricities, batches of 64 sources in parallel.
pub fn eccentricities(g: &CubeGraph) -> Vec<u32> {
    let starts: Vec<usize> = (0..g.order()).step_by(64).collect();
    let batches: Vec<Vec<u32>> = starts
        .par_iter()
        .map(|&s| g.eccentricity_batch(s))
        .collect();
    batches.concat()
}

fn scan_pairs(g: &CubeGraph, mut bad: impl FnMut(&Word, &Word, u32, u32) -> bool) -> PairDefects {
    let mut out = PairDefects {
        count: 0,
        first: None,
    };
    for u in 0..g.order() {
        let dist = g.bfs(u);
        for (v, &d) in dist.iter().enumerate().skip(u + 1) {
            let (a, b) = (g.word(u), g.word(v));
            let h = a.hamming(&b);
            if bad(&a, &b, d, h) {
                out.count += 1;
                out.first
                    .get_or_insert((a.to_string(), b.to_string(), d, h));
            }
        }
    }
    out
}

/// Degree of `w` by the adjacency rule alone: the number of single-position
/// flips that stay inside the vertex set.
pub fn degree_of(params: &CubeParams, w: &Word) -> Option<usize> {
    let ff = ForbiddenFactors::new(params.family, params.p, params.r);
    if w.len() != params.n as usize || !ff.admits(w) {
        return None;
    }
    Some((0..w.len()).filter(|&i| ff.admits(&w.flip(i))).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_values_are_cached() {
        let cache = Cache::in_memory();
        let oracle = Oracle::new(&cache, 1000);
        let params = CubeParams::o(2, 2, 5).unwrap();
        let pt = oracle.point(params);
        assert_eq!(pt.order().unwrap(), 12);
        let d = pt.distances().unwrap();
        assert_eq!((d.radius, d.diameter), (2, 4));
        assert!(cache.len() >= 2);
        // a fresh point answers from the cache without building a graph
        let again = oracle.point(params);
        assert_eq!(again.distances().unwrap(), d);
        assert!(again.graph.get().is_none());
    }

    #[test]
    fn budget_applies_to_every_query() {
        let cache = Cache::in_memory();
        let oracle = Oracle::new(&cache, 100);
        let err = oracle
            .point(CubeParams::i(1, 8, 8).unwrap())
            .size()
            .unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn degree_by_flips() {
        let params = CubeParams::o(2, 3, 13).unwrap();
        let w: Word = "0100010100010".parse().unwrap();
        assert_eq!(degree_of(&params, &w), Some(4));
        assert_eq!(degree_of(&params, &"1100000000000".parse().unwrap()), None);
    }
}
