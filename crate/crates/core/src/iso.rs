//! Exact isomorphism test for small graphs by backtracking with invariant
//! colors.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::CubeGraph;

/// Default cap on the order of graphs passed to [`are_isomorphic`].
pub const DEFAULT_ISO_BUDGET: u64 = 5_000;

/// Returns `Some(map)` with `map[v]` the image in `g2` of vertex `v` of `g1`
/// when the graphs are isomorphic, `None` otherwise.
pub fn find_isomorphism(
    g1: &CubeGraph,
    g2: &CubeGraph,
    budget: u64,
) -> Result<Option<Vec<usize>>, Error> {
    for g in [g1, g2] {
        if g.order() as u64 > budget {
            return Err(Error::Budget {
                order: g.order() as u64,
                budget,
            });
        }
    }
    if g1.order() != g2.order() || g1.size() != g2.size() {
        return Ok(None);
    }
    let n = g1.order();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let (c1, c2) = match colors(g1, g2) {
        Some(c) => c,
        None => return Ok(None),
    };
    let order = search_order(g1, &c1);
    let mut state = Search {
        g1,
        g2,
        c1: &c1,
        c2: &c2,
        order: &order,
        map: vec![NONE; n],
        used: vec![false; n],
    };
    Ok(state.extend(0).then_some(state.map))
}

pub fn are_isomorphic(g1: &CubeGraph, g2: &CubeGraph, budget: u64) -> Result<bool, Error> {
    Ok(find_isomorphism(g1, g2, budget)?.is_some())
}

const NONE: usize = usize::MAX;

type Signature = (usize, u32, Vec<usize>);

fn signatures(g: &CubeGraph) -> Vec<Signature> {
    let ecc = g.eccentricities();
    (0..g.order())
        .map(|v| {
            let mut nd: Vec<usize> = g
                .neighbors(v)
                .iter()
                .map(|&u| g.degree(u as usize))
                .collect();
            nd.sort_unstable();
            (g.degree(v), ecc[v], nd)
        })
        .collect()
}

/// Shared color ids for both graphs, or `None` if the color histograms differ.
fn colors(g1: &CubeGraph, g2: &CubeGraph) -> Option<(Vec<usize>, Vec<usize>)> {
    let (s1, s2) = (signatures(g1), signatures(g2));
    let mut hist: BTreeMap<&Signature, (usize, usize)> = BTreeMap::new();
    for s in &s1 {
        hist.entry(s).or_default().0 += 1;
    }
    for s in &s2 {
        hist.entry(s).or_default().1 += 1;
    }
    if hist.values().any(|(a, b)| a != b) {
        return None;
    }
    let ids: BTreeMap<&Signature, usize> = hist.keys().enumerate().map(|(i, s)| (*s, i)).collect();
    Some((
        s1.iter().map(|s| ids[s]).collect(),
        s2.iter().map(|s| ids[s]).collect(),
    ))
}

/// BFS order from a vertex of the rarest color, so every vertex after the
/// first has an already-placed neighbor.
fn search_order(g: &CubeGraph, colors: &[usize]) -> Vec<usize> {
    let mut freq = BTreeMap::new();
    for &c in colors {
        *freq.entry(c).or_insert(0usize) += 1;
    }
    let root = (0..g.order())
        .min_by_key(|&v| (freq[&colors[v]], v))
        .unwrap_or(0);
    let mut seen = vec![false; g.order()];
    let mut order = Vec::with_capacity(g.order());
    for start in core::iter::once(root).chain(0..g.order()) {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in g.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    queue.push_back(v as usize);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    g1: &'a CubeGraph,
    g2: &'a CubeGraph,
    c1: &'a [usize],
    c2: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let anchor = self
            .g1
            .neighbors(v)
            .iter()
            .map(|&u| u as usize)
            .find(|&u| self.map[u] != NONE);
        let candidates: Vec<usize> = match anchor {
            Some(u) => self
                .g2
                .neighbors(self.map[u])
                .iter()
                .map(|&x| x as usize)
                .collect(),
            None => (0..self.g2.order()).collect(),
        };
        for x in candidates {
            if self.used[x] || self.c1[v] != self.c2[x] || !self.consistent(v, x) {
                continue;
            }
            self.map[v] = x;
            self.used[x] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.map[v] = NONE;
            self.used[x] = false;
        }
        false
    }

    /// Mapped neighbors of `v` go to neighbors of `x`, and `x` has no other
    /// already-used neighbors.
    fn consistent(&self, v: usize, x: usize) -> bool {
        let mut mapped = 0;
        for &u in self.g1.neighbors(v) {
            let image = self.map[u as usize];
            if image != NONE {
                if !self.g2.has_edge(x, image) {
                    return false;
                }
                mapped += 1;
            }
        }
        let used = self
            .g2
            .neighbors(x)
            .iter()
            .filter(|&&y| self.used[y as usize])
            .count();
        used == mapped
    }
}
