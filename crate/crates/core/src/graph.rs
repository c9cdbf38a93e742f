//! Cube graphs built from vertex sets, and exact BFS-based invariants.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::numsys::{enumerate_vertices, order_estimate};
use crate::word::{CubeParams, Word};

/// Default cap on the number of vertices [`build_graph`] will enumerate.
pub const DEFAULT_VERTEX_BUDGET: u64 = 200_000;

/// An induced subgraph of the hypercube on a sorted set of equal-length words.
///
/// Vertices are identified by their rank in the sorted word list. Adjacency is
/// stored in compressed form with each neighbor list sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeGraph {
    params: CubeParams,
    vertices: Vec<Word>,
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

impl CubeGraph {
    /// Builds the graph on `words` (sorted and deduplicated here), joining
    /// words at Hamming distance 1. All words must have length `params.n`.
    pub fn from_words(params: CubeParams, mut words: Vec<Word>) -> Result<Self, Error> {
        words.sort_unstable();
        words.dedup();
        if let Some(bad) = words.iter().find(|w| w.len() != params.n as usize) {
            return Err(Error::LengthMismatch {
                word: *bad,
                got: bad.len(),
                expected: params.n as usize,
            });
        }
        let n = params.n as usize;
        let mut offsets = Vec::with_capacity(words.len() + 1);
        let mut targets = Vec::new();
        offsets.push(0u32);
        let mut row = Vec::with_capacity(n);
        for w in &words {
            row.clear();
            for i in 0..n {
                if let Ok(j) = words.binary_search(&w.flip(i)) {
                    row.push(j as u32);
                }
            }
            row.sort_unstable();
            targets.extend_from_slice(&row);
            offsets.push(targets.len() as u32);
        }
        Ok(CubeGraph {
            params,
            vertices: words,
            offsets,
            targets,
        })
    }

    pub fn params(&self) -> &CubeParams {
        &self.params
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn word(&self, rank: usize) -> Word {
        self.vertices[rank]
    }

    pub fn rank(&self, w: &Word) -> Option<usize> {
        self.vertices.binary_search(w).ok()
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v] as usize..self.offsets[v + 1] as usize]
    }

    pub fn degree(&self, v: usize) -> usize {
        (self.offsets[v + 1] - self.offsets[v]) as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.order() == 0 {
            return true;
        }
        let mut dist = Vec::new();
        let mut queue = VecDeque::new();
        self.bfs_into(0, &mut dist, &mut queue);
        dist.iter().all(|&d| d != UNREACHED)
    }

    /// Single-source BFS distances, `u32::MAX` for unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = Vec::new();
        let mut queue = VecDeque::new();
        self.bfs_into(source, &mut dist, &mut queue);
        dist
    }

    /// BFS reusing caller buffers; returns the eccentricity of `source`
    /// within its component.
    pub fn bfs_into(&self, source: usize, dist: &mut Vec<u32>, queue: &mut VecDeque<u32>) -> u32 {
        dist.clear();
        dist.resize(self.order(), UNREACHED);
        queue.clear();
        dist[source] = 0;
        queue.push_back(source as u32);
        let mut last = 0;
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            last = du;
            for &v in self.neighbors(u as usize) {
                if dist[v as usize] == UNREACHED {
                    dist[v as usize] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        last
    }

    /// Eccentricities of the sources `start..start+64` (clamped to the order),
    /// computed by one bit-parallel BFS sweep.
    ///
    /// Assumes the graph is connected.
    pub fn eccentricity_batch(&self, start: usize) -> Vec<u32> {
        let n = self.order();
        let end = (start + 64).min(n);
        let width = end - start;
        let all = if width == 64 {
            u64::MAX
        } else {
            (1u64 << width) - 1
        };
        let mut seen = vec![0u64; n];
        let mut frontier = vec![0u64; n];
        let mut next = vec![0u64; n];
        for (k, v) in (start..end).enumerate() {
            seen[v] |= 1 << k;
            frontier[v] |= 1 << k;
        }
        let mut ecc = vec![0u32; width];
        let mut level = 0u32;
        loop {
            level += 1;
            let mut grown = 0u64;
            for v in 0..n {
                let mut acc = 0u64;
                for &u in self.neighbors(v) {
                    acc |= frontier[u as usize];
                }
                let fresh = acc & !seen[v];
                next[v] = fresh;
                seen[v] |= fresh;
                grown |= fresh;
            }
            if grown == 0 {
                break;
            }
            let mut bits = grown & all;
            while bits != 0 {
                ecc[bits.trailing_zeros() as usize] = level;
                bits &= bits - 1;
            }
            core::mem::swap(&mut frontier, &mut next);
        }
        ecc
    }

    /// Eccentricity of every vertex. Assumes the graph is connected.
    pub fn eccentricities(&self) -> Vec<u32> {
        (0..self.order())
            .step_by(64)
            .flat_map(|start| self.eccentricity_batch(start))
            .collect()
    }

    pub fn distance(&self, u: &Word, v: &Word) -> Option<u32> {
        let (a, b) = (self.rank(u)?, self.rank(v)?);
        let d = self.bfs(a)[b];
        (d != UNREACHED).then_some(d)
    }
}

const UNREACHED: u32 = u32::MAX;

/// Enumerates the cube's vertices and joins words differing in one position.
///
/// Fails with [`Error::Budget`] before enumerating if the predicted order
/// exceeds `budget`, and with [`Error::Disconnected`] if the result is not
/// connected.
pub fn build_graph(params: &CubeParams, budget: u64) -> Result<CubeGraph, Error> {
    let order = order_estimate(params)?;
    if order > budget {
        return Err(Error::Budget { order, budget });
    }
    let g = CubeGraph::from_words(*params, enumerate_vertices(params))?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g)
}

/// Exact invariants of one connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantBundle {
    pub order: usize,
    pub size: usize,
    pub radius: u32,
    pub diameter: u32,
    pub center: Vec<Word>,
    pub degree_sequence: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub max_degree_witnesses: Vec<Word>,
    pub connectivity: Option<usize>,
}

impl InvariantBundle {
    /// Assembles the bundle from precomputed eccentricities, so callers can
    /// compute those in parallel.
    pub fn from_parts(g: &CubeGraph, ecc: &[u32], connectivity: Option<usize>) -> Self {
        let radius = ecc.iter().copied().min().unwrap_or(0);
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        let center = (0..g.order())
            .filter(|&v| ecc[v] == radius)
            .map(|v| g.word(v))
            .collect();
        let degrees = g.degrees();
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let max_degree_witnesses = (0..g.order())
            .filter(|&v| degrees[v] == max_degree)
            .map(|v| g.word(v))
            .collect();
        let mut degree_sequence = degrees;
        degree_sequence.sort_unstable();
        InvariantBundle {
            order: g.order(),
            size: g.size(),
            radius,
            diameter,
            center,
            degree_sequence,
            min_degree,
            max_degree,
            max_degree_witnesses,
            connectivity,
        }
    }
}

/// All invariants, computed sequentially.
pub fn invariants(g: &CubeGraph, with_connectivity: bool) -> InvariantBundle {
    let ecc = g.eccentricities();
    let kappa = with_connectivity.then(|| crate::connectivity::vertex_connectivity(g));
    InvariantBundle::from_parts(g, &ecc, kappa)
}
