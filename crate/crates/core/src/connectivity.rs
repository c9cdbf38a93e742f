//! Vertex connectivity by max-flow on the vertex-split network.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::CubeGraph;

/// Unit-capacity residual network where each vertex `x` becomes an arc
/// `in(x) -> out(x)` and each edge `{x, y}` becomes `out(x) -> in(y)` and
/// `out(y) -> in(x)`.
struct SplitNetwork {
    offsets: Vec<u32>,
    arcs: Vec<Arc>,
    cap: Vec<u8>,
    // scratch
    parent: Vec<u32>,
    queue: VecDeque<u32>,
}

#[derive(Clone, Copy)]
struct Arc {
    to: u32,
    rev: u32,
    initial: u8,
}

const NONE: u32 = u32::MAX;

impl SplitNetwork {
    fn new(g: &CubeGraph) -> Self {
        let nodes = 2 * g.order();
        let vin = |x: usize| 2 * x;
        let vout = |x: usize| 2 * x + 1;
        // (tail, head, capacity) with a zero-capacity reverse for each arc
        let mut raw: Vec<(u32, u32, u8)> = Vec::new();
        for x in 0..g.order() {
            raw.push((vin(x) as u32, vout(x) as u32, 1));
            for &y in g.neighbors(x) {
                raw.push((vout(x) as u32, vin(y as usize) as u32, 1));
            }
        }
        let mut counts = vec![0u32; nodes + 1];
        for &(a, b, _) in &raw {
            counts[a as usize + 1] += 1;
            counts[b as usize + 1] += 1;
        }
        for i in 0..nodes {
            counts[i + 1] += counts[i];
        }
        let offsets = counts.clone();
        let mut fill = counts;
        let placeholder = Arc {
            to: 0,
            rev: 0,
            initial: 0,
        };
        let mut arcs = vec![placeholder; raw.len() * 2];
        for &(a, b, c) in &raw {
            let ia = fill[a as usize];
            fill[a as usize] += 1;
            let ib = fill[b as usize];
            fill[b as usize] += 1;
            arcs[ia as usize] = Arc {
                to: b,
                rev: ib,
                initial: c,
            };
            arcs[ib as usize] = Arc {
                to: a,
                rev: ia,
                initial: 0,
            };
        }
        let cap = arcs.iter().map(|a| a.initial).collect();
        SplitNetwork {
            offsets,
            arcs,
            cap,
            parent: vec![NONE; nodes],
            queue: VecDeque::new(),
        }
    }

    /// Number of internally vertex-disjoint `s`-`t` paths, counting stops
    /// as soon as `limit` paths are found. `s` and `t` must be non-adjacent.
    fn local_connectivity(&mut self, s: usize, t: usize, limit: usize) -> usize {
        for (c, a) in self.cap.iter_mut().zip(&self.arcs) {
            *c = a.initial;
        }
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut flow = 0;
        while flow < limit && self.augment(source, sink) {
            flow += 1;
        }
        flow
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        self.parent.iter_mut().for_each(|p| *p = NONE);
        self.queue.clear();
        self.queue.push_back(source as u32);
        // mark the source as visited with a self-referencing sentinel
        self.parent[source] = NONE - 1;
        while let Some(u) = self.queue.pop_front() {
            let (lo, hi) = (self.offsets[u as usize], self.offsets[u as usize + 1]);
            for i in lo..hi {
                let arc = self.arcs[i as usize];
                if self.cap[i as usize] == 0 || self.parent[arc.to as usize] != NONE {
                    continue;
                }
                self.parent[arc.to as usize] = i;
                if arc.to as usize == sink {
                    let mut v = sink;
                    while v != source {
                        let id = self.parent[v] as usize;
                        self.cap[id] -= 1;
                        let rev = self.arcs[id].rev as usize;
                        self.cap[rev] += 1;
                        v = self.arcs[rev].to as usize;
                    }
                    return true;
                }
                self.queue.push_back(arc.to);
            }
        }
        false
    }
}

/// Vertex connectivity of `g`.
///
/// Fixes a minimum-degree vertex `v` and takes the minimum local connectivity
/// over `v` and each non-neighbor, and over each non-adjacent pair of
/// neighbors of `v`. Complete graphs on `k` vertices return `k - 1`.
pub fn vertex_connectivity(g: &CubeGraph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    let degrees = g.degrees();
    let (v, &delta) = degrees
        .iter()
        .enumerate()
        .min_by_key(|&(i, d)| (*d, i))
        .expect("nonempty graph");
    if delta == n - 1 {
        return n - 1;
    }
    let mut best = delta;
    let mut net = SplitNetwork::new(g);
    let nbrs: Vec<usize> = g.neighbors(v).iter().map(|&x| x as usize).collect();
    let mut is_nbr = vec![false; n];
    for &x in &nbrs {
        is_nbr[x] = true;
    }
    for (w, &adjacent) in is_nbr.iter().enumerate() {
        if w != v && !adjacent {
            best = best.min(net.local_connectivity(v, w, best));
        }
    }
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !g.has_edge(x, y) {
                best = best.min(net.local_connectivity(x, y, best));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::word::{CubeParams, Word};

    fn graph(p: u32, r: u32, n: u32) -> CubeGraph {
        build_graph(&CubeParams::i(p, r, n).unwrap(), 100_000).unwrap()
    }

    #[test]
    fn hypercubes() {
        for n in 1..=5 {
            assert_eq!(vertex_connectivity(&graph(1, n, n)), n as usize);
        }
    }

    #[test]
    fn trivial_graphs() {
        assert_eq!(vertex_connectivity(&graph(1, 1, 0)), 0);
        assert_eq!(vertex_connectivity(&graph(1, 1, 1)), 1);
    }

    #[test]
    fn fibonacci_cubes_match_min_degree() {
        for n in 2..=9 {
            assert_eq!(
                vertex_connectivity(&graph(1, 1, n)),
                (n as usize).div_ceil(3)
            );
        }
    }

    #[test]
    fn path_has_a_cut_vertex() {
        let words: Vec<Word> = ["000", "001", "011", "111"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let g = CubeGraph::from_words(CubeParams::i(1, 3, 3).unwrap(), words).unwrap();
        assert_eq!(vertex_connectivity(&g), 1);
    }
}
