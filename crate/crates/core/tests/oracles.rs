//! Library results against deliberately naive reimplementations.

use std::collections::BTreeSet;

use fibcube_core::formulas::{self, DiameterResult};
use fibcube_core::{
    are_isomorphic, build_graph, decode, enumerate_vertices, find_distance_barriers, invariants,
    is_valid_word, phi, vertex_connectivity, CubeGraph, CubeParams, Family, Word,
};

/// Positions of 1s, left to right.
fn ones(bits: &[u8]) -> Vec<usize> {
    (0..bits.len()).filter(|&i| bits[i] == 1).collect()
}

/// Family I from the block description: 1-runs of length at most `r`,
/// 0-runs between two 1s of length at least `p`.
fn naive_valid_i(bits: &[u8], p: usize, r: usize) -> bool {
    let pos = ones(bits);
    let mut run = 1;
    for w in pos.windows(2) {
        let gap = w[1] - w[0] - 1;
        if gap == 0 {
            run += 1;
            if run > r {
                return false;
            }
        } else {
            if gap < p {
                return false;
            }
            run = 1;
        }
    }
    true
}

/// Family O from the numeration-system conditions: at least `p - 1` zeros
/// between any two 1s, and no more than `r` 1s in a row spaced exactly `p`.
fn naive_valid_o(bits: &[u8], p: usize, r: usize) -> bool {
    let pos = ones(bits);
    let mut chain = 1;
    for w in pos.windows(2) {
        let d = w[1] - w[0];
        if d < p {
            return false;
        }
        if d == p {
            chain += 1;
            if chain > r {
                return false;
            }
        } else {
            chain = 1;
        }
    }
    true
}

fn to_bits(w: &Word) -> Vec<u8> {
    w.iter().map(u8::from).collect()
}

fn all_words(n: usize) -> impl Iterator<Item = Word> {
    (0..1u64 << n).map(move |b| Word::from_bits(b, n).unwrap())
}

fn naive_phi(p: i64, r: i64, i: i64) -> u64 {
    if i < 0 {
        0
    } else if i == 0 {
        1
    } else {
        (0..=r).map(|j| naive_phi(p, r, i - p * j - 1)).sum()
    }
}

#[test]
fn validity_matches_block_descriptions() {
    for p in 1..=4 {
        for r in 1..=4 {
            for n in 0..=11 {
                let pi = CubeParams::i(p, r, n).unwrap();
                let po = CubeParams::o(p, r, n).unwrap();
                for w in all_words(n as usize) {
                    let b = to_bits(&w);
                    assert_eq!(
                        is_valid_word(&pi, &w).unwrap(),
                        naive_valid_i(&b, p as usize, r as usize),
                        "{pi} {w}"
                    );
                    assert_eq!(
                        is_valid_word(&po, &w).unwrap(),
                        naive_valid_o(&b, p as usize, r as usize),
                        "{po} {w}"
                    );
                }
            }
        }
    }
}

#[test]
fn phi_matches_naive_recursion() {
    for p in 1..=4 {
        for r in 1..=4 {
            for i in -3..=20 {
                assert_eq!(phi(p, r, i).unwrap(), naive_phi(p as i64, r as i64, i));
            }
        }
    }
}

#[test]
fn o_codes_are_the_integers_below_phi() {
    for p in 1..=4 {
        for r in 1..=4 {
            for n in 0..=12 {
                let params = CubeParams::o(p, r, n).unwrap();
                let words = enumerate_vertices(&params);
                let limit = phi(p, r, (n + p) as i64).unwrap();
                assert_eq!(words.len() as u64, limit, "{params}");
                let values: BTreeSet<u64> =
                    words.iter().map(|w| decode(&params, w).unwrap()).collect();
                assert_eq!(values, (0..limit).collect(), "{params}");
            }
        }
    }
}

/// All-pairs distances by Floyd-Warshall over the adjacency test.
fn floyd(g: &CubeGraph) -> Vec<Vec<u32>> {
    let n = g.order();
    let inf = u32::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for (v, x) in row.iter_mut().enumerate() {
            if g.word(u).hamming(&g.word(v)) == 1 {
                *x = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    d
}

fn small_params() -> impl Iterator<Item = CubeParams> {
    Family::ALL.into_iter().flat_map(|f| {
        (1..=3).flat_map(move |p| {
            (1..=3).flat_map(move |r| (1..=7).map(move |n| CubeParams::new(f, p, r, n).unwrap()))
        })
    })
}

#[test]
fn bfs_and_eccentricities_match_floyd() {
    for params in small_params() {
        let g = build_graph(&params, 1000).unwrap();
        let d = floyd(&g);
        let ecc = g.eccentricities();
        for u in 0..g.order() {
            assert_eq!(g.bfs(u), d[u], "{params}");
            assert_eq!(ecc[u], *d[u].iter().max().unwrap(), "{params}");
        }
    }
}

/// Smallest set of removed vertices that disconnects the graph or leaves one vertex.
fn naive_connectivity(g: &CubeGraph) -> usize {
    let n = g.order();
    for k in 0..n {
        for mask in 0u64..1 << n {
            if mask.count_ones() as usize != k {
                continue;
            }
            let keep: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
            if keep.len() <= 1 {
                return k;
            }
            let mut seen = vec![false; n];
            let mut stack = vec![keep[0]];
            seen[keep[0]] = true;
            while let Some(u) = stack.pop() {
                for &v in g.neighbors(u) {
                    let v = v as usize;
                    if mask >> v & 1 == 0 && !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            if keep.iter().any(|&v| !seen[v]) {
                return k;
            }
        }
    }
    n - 1
}

#[test]
fn connectivity_matches_subset_removal() {
    for params in small_params() {
        let g = build_graph(&params, 1000).unwrap();
        if g.order() > 16 {
            continue;
        }
        assert_eq!(vertex_connectivity(&g), naive_connectivity(&g), "{params}");
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for i in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(i, n - 1);
            out.push(p);
        }
    }
    out
}

fn naive_isomorphic(a: &CubeGraph, b: &CubeGraph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && permutations(a.order())
            .iter()
            .any(|m| a.edges().all(|(u, v)| b.has_edge(m[u], m[v])))
}

#[test]
fn isomorphism_matches_permutation_search() {
    let graphs: Vec<CubeGraph> = small_params()
        .map(|p| build_graph(&p, 1000).unwrap())
        .filter(|g| g.order() <= 7)
        .collect();
    for a in &graphs {
        for b in &graphs {
            assert_eq!(
                are_isomorphic(a, b, 100).unwrap(),
                naive_isomorphic(a, b),
                "{} vs {}",
                a.params(),
                b.params()
            );
        }
    }
}

#[test]
fn barriers_detect_every_distance_excess() {
    for p in 2..=3 {
        for r in 1..=8 {
            for n in 1..=8 {
                let params = CubeParams::i(p, r, n).unwrap();
                let g = build_graph(&params, 1000).unwrap();
                for u in 0..g.order() {
                    let d = g.bfs(u);
                    for (v, &dv) in d.iter().enumerate() {
                        let (a, b) = (g.word(u), g.word(v));
                        let h = a.hamming(&b);
                        assert!(dv >= h);
                        let none = find_distance_barriers(&a, &b, p, r).unwrap().is_empty();
                        assert_eq!(dv == h, none, "{params} {a} {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn closed_forms_on_a_small_grid() {
    for p in 1..=3 {
        for r in 1..=3 {
            for n in 1..=9 {
                let o = build_graph(&CubeParams::o(p, r, n).unwrap(), 5000).unwrap();
                let inv = invariants(&o, false);
                assert_eq!(inv.radius, formulas::radius_o(p, r, n));
                assert_eq!(inv.diameter, formulas::diameter_o(p, r, n));
                assert_eq!(inv.center, formulas::center_o(p, r, n).unwrap().center);
                assert_eq!(inv.min_degree as u32, formulas::min_degree_o(p, r, n));
                let i = build_graph(&CubeParams::i(p, r, n).unwrap(), 5000).unwrap();
                let inv = invariants(&i, false);
                assert_eq!(
                    formulas::diameter_i(p, r, n).unwrap(),
                    DiameterResult::Exact(inv.diameter)
                );
                assert_eq!(inv.min_degree as u32, formulas::min_degree_i(p, r, n));
            }
        }
    }
}
