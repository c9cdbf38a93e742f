//! Registered claims: each pairs a closed form or structural statement with
//! a brute-force observation at one grid point.

use std::collections::BTreeSet;

use fibcube_core::formulas::{self, DiameterCase, DiameterResult};
use fibcube_core::numsys::{encode, ForbiddenFactors};
use fibcube_core::{
    decode, enumerate_vertices, find_distance_barriers, find_isomorphism, phi,
    recursive_vertex_set, Barrier, CubeGraph, CubeParams, Error as CoreError, Family, Word,
    DEFAULT_ISO_BUDGET,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Result;
use crate::oracle::{degree_of, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch,
    BoundsHold,
    BoundsViolated,
    Skipped,
}

impl Verdict {
    pub const ALL: [Verdict; 5] = [
        Verdict::Match,
        Verdict::Mismatch,
        Verdict::BoundsHold,
        Verdict::BoundsViolated,
        Verdict::Skipped,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::BoundsHold => "bounds_hold",
            Verdict::BoundsViolated => "bounds_violated",
            Verdict::Skipped => "skipped",
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, Verdict::Mismatch | Verdict::BoundsViolated)
    }
}

/// The comparison produced by one claim at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub expected: Value,
    pub observed: Value,
    pub verdict: Verdict,
    pub witness: Option<Value>,
}

impl Outcome {
    pub fn compare(expected: impl Serialize, observed: impl Serialize) -> Self {
        let expected = json!(expected);
        let observed = json!(observed);
        let verdict = if expected == observed {
            Verdict::Match
        } else {
            Verdict::Mismatch
        };
        Outcome {
            expected,
            observed,
            verdict,
            witness: None,
        }
    }

    pub fn bounds(lower: u32, upper: u32, observed: u32, extra: Value) -> Self {
        let mut expected = json!({"lower": lower, "upper": upper});
        if let (Some(e), Value::Object(x)) = (expected.as_object_mut(), extra) {
            e.extend(x);
        }
        Outcome {
            expected,
            observed: json!(observed),
            verdict: if (lower..=upper).contains(&observed) {
                Verdict::BoundsHold
            } else {
                Verdict::BoundsViolated
            },
            witness: None,
        }
    }

    pub fn skipped(reason: impl Into<String>) -> Self {
        Outcome {
            expected: Value::Null,
            observed: Value::Null,
            verdict: Verdict::Skipped,
            witness: Some(json!({"reason": reason.into()})),
        }
    }

    /// Attaches `witness` when the verdict is a failure.
    pub fn witness_on_failure(mut self, witness: impl FnOnce() -> Value) -> Self {
        if self.verdict.is_failure() {
            self.witness = Some(witness());
        }
        self
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }
}

type Applies = fn(&CubeParams) -> bool;
type Eval = fn(&Point) -> Result<Outcome>;

pub struct Claim {
    pub id: &'static str,
    pub summary: &'static str,
    pub applies: Applies,
    pub eval: Eval,
    /// Points checked when no grid is given.
    pub fixtures: fn() -> Vec<CubeParams>,
    /// Whether the claim inspects the cube at its point, and so is subject to
    /// the vertex budget.
    pub uses_cube: bool,
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).finish()
    }
}

pub fn registry() -> &'static [Claim] {
    CLAIMS
}

pub fn find(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}

fn none() -> Vec<CubeParams> {
    Vec::new()
}

fn at(f: Family, p: u32, r: u32, n: u32) -> CubeParams {
    CubeParams::new(f, p, r, n).expect("fixture parameters are valid")
}

macro_rules! claim {
    ($id:literal, $summary:literal, $applies:expr, $eval:expr) => {
        claim!($id, $summary, $applies, $eval, none, true)
    };
    ($id:literal, $summary:literal, $applies:expr, $eval:expr, $fixtures:expr, $uses:expr) => {
        Claim {
            id: $id,
            summary: $summary,
            applies: $applies,
            eval: $eval,
            fixtures: $fixtures,
            uses_cube: $uses,
        }
    };
}

static CLAIMS: &[Claim] = &[
    claim!(
        "phi-table",
        "printed values of the (p,r)-numeration sequence",
        |c| {
            c.family == Family::O
                && PHI_TABLE.iter().any(|row| (row.0, row.1) == (c.p, c.r))
                && c.n <= 12
        },
        eval_phi_table,
        phi_table_points,
        false
    ),
    claim!(
        "order-o",
        "O-cube order equals phi(n + p)",
        |c| c.family == Family::O,
        eval_order_o
    ),
    claim!(
        "order-recursion-o",
        "O-cube order recursion for n > pr",
        |c| { c.family == Family::O && c.n > c.p * c.r },
        eval_order_recursion_o
    ),
    claim!(
        "order-recursion-i",
        "I-cube order recursion for n >= p + r",
        |c| { c.family == Family::I && c.n >= c.p + c.r },
        eval_order_recursion_i
    ),
    claim!(
        "size-recursion-o",
        "O-cube size recursion for n > pr",
        |c| { c.family == Family::O && c.n > c.p * c.r },
        eval_size_recursion_o
    ),
    claim!(
        "size-recursion-i",
        "I-cube size recursion for n > p + r",
        |c| { c.family == Family::I && c.n > c.p + c.r },
        eval_size_recursion_i
    ),
    claim!(
        "recursive-vertex-set-o",
        "prefix decomposition of the O vertex set",
        |c| { c.family == Family::O },
        eval_recursive_set
    ),
    claim!(
        "recursive-vertex-set-i",
        "prefix decomposition of the I vertex set",
        |c| { c.family == Family::I },
        eval_recursive_set
    ),
    claim!(
        "r-independence",
        "O vertex set does not depend on r while n <= pr",
        |c| { c.family == Family::O && c.n <= c.p * c.r },
        eval_r_independence
    ),
    claim!(
        "hypercube",
        "p = 1, r >= n gives the hypercube",
        |c| { c.p == 1 && c.r >= c.n && c.n <= 8 },
        eval_hypercube
    ),
    claim!(
        "fibonacci-cube",
        "p = r = 1 gives the Fibonacci cube",
        |c| { c.p == 1 && c.r == 1 && c.n <= 8 },
        eval_fibonacci_cube
    ),
    claim!(
        "postal-network",
        "r = 1 gives the postal network PN_{p+1}(n)",
        |c| { c.r == 1 && c.n <= 8 },
        eval_postal_network
    ),
    claim!(
        "order-comparison",
        "p, r >= 2: equal orders for n <= p + 1, O smaller beyond",
        |c| { c.family == Family::O && c.p >= 2 && c.r >= 2 },
        eval_order_comparison
    ),
    claim!(
        "forbidden-factors",
        "vertex sets are the words avoiding the forbidden factors",
        |c| { c.n <= 20 },
        eval_forbidden_factors
    ),
    claim!(
        "reversal-closure",
        "vertex sets are closed under reversal",
        |_| true,
        eval_reversal
    ),
    claim!(
        "o-equals-i",
        "O and I cubes are isomorphic iff p = 1 or r = 1",
        |c| { c.family == Family::O && c.n <= 10 },
        eval_o_equals_i
    ),
    claim!(
        "small-isomorphism",
        "O(2,2;4) is isomorphic to I(3,2;4)",
        |c| { *c == at(Family::O, 2, 2, 4) },
        eval_small_isomorphism,
        || vec![at(Family::O, 2, 2, 4)],
        true
    ),
    claim!(
        "code-bijection",
        "decoding is a bijection onto 0..phi(n + p)",
        |c| { c.family == Family::O },
        eval_code_bijection
    ),
    claim!("radius-o", "O-cube radius", o_like, eval_radius_o),
    claim!("center-o", "O-cube center set", o_like, eval_center_o),
    claim!(
        "center-count-o",
        "O-cube center size from the independent count",
        o_like,
        eval_center_count_o
    ),
    claim!(
        "diameter-o",
        "O-cube diameter",
        |c| c.family == Family::O,
        eval_diameter_o
    ),
    claim!(
        "diameter-i",
        "I-cube diameter: exact cases and barrier bounds",
        |c| { c.family == Family::I },
        eval_diameter_i,
        barrier_points,
        true
    ),
    claim!(
        "diameter-i-excess",
        "I-cube diameter exceeds n iff r >= 2p + 3 and n >= 2p + 3",
        |c| { c.family == Family::I },
        eval_diameter_excess,
        barrier_points,
        true
    ),
    claim!(
        "isometric-i",
        "I-cube distances are Hamming distances when p = 1 or r <= p + 1",
        |c| { c.family == Family::I && (c.p == 1 || c.r <= c.p + 1) && c.n <= 10 },
        eval_isometric
    ),
    claim!(
        "barrier-criterion",
        "distance exceeds Hamming distance iff a barrier exists",
        |c| { c.family == Family::I && c.p >= 2 && c.n <= 9 },
        eval_barrier_criterion
    ),
    claim!(
        "diameter-i-examples",
        "extremal examples for the barrier bounds",
        is_example_point,
        eval_diameter_examples,
        || vec![at(Family::I, 2, 7, 16), at(Family::I, 2, 9, 14)],
        true
    ),
    claim!(
        "barrier-pair",
        "distance of the example pair is n plus its barrier contributions",
        |c| { c.family == Family::I && c.p == 2 && c.r == 7 && c.n % 9 == 7 },
        eval_barrier_pair,
        || vec![at(Family::I, 2, 7, 16)],
        true
    ),
    claim!(
        "best-barrier",
        "strongest barrier by exhaustive profile search, contributions by BFS",
        |c| { c.family == Family::I && c.p >= 2 && c.r >= 2 * c.p + 3 && c.n == c.r },
        eval_best_barrier,
        || {
            [(2, 7), (2, 8), (2, 9), (3, 9), (2, 10)]
                .iter()
                .map(|&(p, r)| at(Family::I, p, r, r))
                .collect()
        },
        false
    ),
    claim!(
        "max-degree",
        "maximum degree n, and when 0^n is the only vertex attaining it",
        |c| { c.n >= 2 },
        eval_max_degree
    ),
    claim!(
        "min-degree-i",
        "I-cube minimum degree",
        |c| c.family == Family::I,
        eval_min_degree
    ),
    claim!(
        "min-degree-o",
        "O-cube minimum degree",
        |c| c.family == Family::O,
        eval_min_degree
    ),
    claim!(
        "min-degree-witness-i",
        "constructed I word has the minimum degree",
        |c| { c.family == Family::I },
        eval_min_degree_witness
    ),
    claim!(
        "min-degree-witness-o",
        "constructed O word has the minimum degree",
        |c| { c.family == Family::O },
        eval_min_degree_witness
    ),
    claim!(
        "min-degree-downward",
        "some minimum-degree vertex has only 1-to-0 neighbors",
        |_| true,
        eval_min_degree_downward
    ),
];

/// Points where the O-cube formulas apply: family O, or family I when the
/// two families coincide.
fn o_like(c: &CubeParams) -> bool {
    c.family == Family::O || c.p == 1 || c.r == 1
}

/// I-cubes with `r >= 2p + 3`, where barriers can lengthen distances.
fn barrier_points() -> Vec<CubeParams> {
    let mut out = Vec::new();
    for (p, r, n_max) in [(2, 7, 16), (2, 8, 14), (2, 9, 14), (3, 9, 13)] {
        out.extend((1..=n_max).map(|n| at(Family::I, p, r, n)));
    }
    out
}

/// `(p, r, phi(0..=12))` as printed.
pub const PHI_TABLE: [(u32, u32, [u64; 13]); 4] = [
    (1, 1, [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233]),
    (1, 3, [1, 1, 2, 4, 8, 15, 29, 56, 108, 208, 401, 773, 1490]),
    (2, 1, [1, 1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60]),
    (2, 2, [1, 1, 1, 2, 3, 5, 8, 12, 19, 30, 47, 85, 116]),
];

fn phi_table_points() -> Vec<CubeParams> {
    PHI_TABLE
        .iter()
        .flat_map(|&(p, r, _)| (0..=12).map(move |i| at(Family::O, p, r, i)))
        .collect()
}

fn eval_phi_table(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let row = PHI_TABLE
        .iter()
        .find(|row| (row.0, row.1) == (c.p, c.r))
        .expect("applies");
    let i = c.n as i64;
    let observed = phi(c.p, c.r, i)?;
    let out = Outcome::compare(row.2[c.n as usize], observed);
    Ok(out.witness_on_failure(|| {
        let terms: Vec<(i64, u64)> = (0..=c.r as i64)
            .map(|j| i - c.p as i64 * j - 1)
            .map(|k| (k, phi(c.p, c.r, k).unwrap_or(0)))
            .collect();
        json!({"recurrence_terms": terms})
    }))
}

fn eval_order_o(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    Ok(Outcome::compare(
        phi(c.p, c.r, (c.n + c.p) as i64)?,
        pt.order()?,
    ))
}

fn order_at(pt: &Point, n: u32) -> Result<u64> {
    pt.oracle().order(&pt.params().with_n(n)?)
}

fn size_at(pt: &Point, n: u32) -> Result<u64> {
    pt.oracle().size(&pt.params().with_n(n)?)
}

fn eval_order_recursion_o(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let mut expected = 0;
    for t in 0..=c.r {
        expected += order_at(pt, c.n - t * c.p - 1)?;
    }
    Ok(Outcome::compare(expected, pt.order()?))
}

fn eval_order_recursion_i(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let mut expected = order_at(pt, c.n - 1)?;
    for t in 1..=c.r {
        expected += order_at(pt, c.n - c.p - t)?;
    }
    Ok(Outcome::compare(expected, pt.order()?))
}

fn eval_size_recursion_o(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let mut expected = 0;
    for t in 0..=c.r {
        let m = c.n - t * c.p - 1;
        expected += size_at(pt, m)? + t as u64 * order_at(pt, m)?;
    }
    Ok(Outcome::compare(expected, pt.size()?))
}

fn eval_size_recursion_i(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let mut expected = size_at(pt, c.n - 1)? as i64;
    for t in 1..=c.r {
        let m = c.n - c.p - t;
        expected += (size_at(pt, m)? + 2 * order_at(pt, m)?) as i64;
    }
    expected -= order_at(pt, c.n - c.p - 1)? as i64;
    Ok(Outcome::compare(expected, pt.size()?))
}

/// Count and FNV-1a digest of a sorted word list.
fn digest(words: &[Word]) -> Value {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for w in words {
        for byte in w.bits().to_le_bytes().into_iter().chain([w.len() as u8]) {
            h ^= byte as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    json!({"count": words.len(), "digest": format!("{h:016x}")})
}

fn first_difference(a: &[Word], b: &[Word]) -> Value {
    let sa: BTreeSet<_> = a.iter().collect();
    let sb: BTreeSet<_> = b.iter().collect();
    let only_a = sa.difference(&sb).next().map(|w| w.to_string());
    let only_b = sb.difference(&sa).next().map(|w| w.to_string());
    json!({"only_expected": only_a, "only_observed": only_b})
}

fn eval_recursive_set(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let rec: Vec<Word> = recursive_vertex_set(c)?.into_iter().collect();
    let direct = enumerate_vertices(c);
    Ok(Outcome::compare(digest(&rec), digest(&direct))
        .witness_on_failure(|| first_difference(&rec, &direct)))
}

fn eval_r_independence(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let other = CubeParams::o(c.p, (c.r + 1).max(c.n), c.n)?;
    let a = enumerate_vertices(&other);
    let b = enumerate_vertices(c);
    Ok(Outcome::compare(digest(&a), digest(&b))
        .witness_on_failure(|| first_difference(&a, &b))
        .with_witness(json!({"compared_r": other.r})))
}

fn isomorphic_to(pt: &Point, words: Vec<Word>) -> Result<Outcome> {
    let g = pt.graph()?;
    let other = CubeGraph::from_words(*pt.params(), words)?;
    let iso = find_isomorphism(g, &other, DEFAULT_ISO_BUDGET)?.is_some();
    Ok(Outcome::compare(true, iso).witness_on_failure(
        || json!({"orders": [g.order(), other.order()], "sizes": [g.size(), other.size()]}),
    ))
}

fn all_words(n: usize) -> Vec<Word> {
    (0..1u64 << n)
        .map(|b| Word::from_bits(b, n).expect("short word"))
        .collect()
}

/// `F_n = 0 F_{n-1} U 10 F_{n-2}`, `F_0 = {λ}`, `F_1 = {0, 1}`.
pub fn fibonacci_words(n: usize) -> Vec<Word> {
    let mut prev: Vec<Word> = vec![Word::EMPTY];
    let mut cur: Vec<Word> = all_words(1);
    if n == 0 {
        return prev;
    }
    let (zero, one_zero): (Word, Word) = ("0".parse().unwrap(), "10".parse().unwrap());
    for _ in 1..n {
        let next = cur
            .iter()
            .map(|w| zero.concat(w).unwrap())
            .chain(prev.iter().map(|w| one_zero.concat(w).unwrap()))
            .collect();
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `PN_q(n) = 0 PN_q(n-1) U 1 0^{q-1} PN_q(n-q)` for `n > q`, else the words
/// of weight at most 1.
pub fn postal_words(q: usize, n: usize) -> Vec<Word> {
    if n <= q {
        let mut out = vec![Word::zeros(n).unwrap()];
        out.extend((0..n).map(|i| Word::zeros(n).unwrap().flip(i)));
        return out;
    }
    let zero = Word::zeros(1).unwrap();
    let head = Word::zeros(q).unwrap().flip(0);
    postal_words(q, n - 1)
        .iter()
        .map(|w| zero.concat(w).unwrap())
        .chain(
            postal_words(q, n - q)
                .iter()
                .map(|w| head.concat(w).unwrap()),
        )
        .collect()
}

fn eval_hypercube(pt: &Point) -> Result<Outcome> {
    isomorphic_to(pt, all_words(pt.params().n as usize))
}

fn eval_fibonacci_cube(pt: &Point) -> Result<Outcome> {
    isomorphic_to(pt, fibonacci_words(pt.params().n as usize))
}

fn eval_postal_network(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    isomorphic_to(pt, postal_words(c.p as usize + 1, c.n as usize))
}

fn eval_order_comparison(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let o = pt.order()?;
    let i = pt.oracle().order(&c.with_family(Family::I))?;
    let expected = if c.n <= c.p + 1 { "equal" } else { "less" };
    let observed = match o.cmp(&i) {
        std::cmp::Ordering::Less => "less",
        std::cmp::Ordering::Equal => "equal",
        std::cmp::Ordering::Greater => "greater",
    };
    Ok(Outcome::compare(expected, observed)
        .witness_on_failure(|| json!({"order_o": o, "order_i": i})))
}

/// Vertex sets from the block description alone: for I, 1-runs of length at
/// most `r` and 0-runs between 1s of length at least `p`; for O, 1s at
/// distance at least `p` and at most `r` successive 1s at distance exactly `p`.
pub fn block_description_words(c: &CubeParams) -> Vec<Word> {
    all_words(c.n as usize)
        .into_iter()
        .filter(|w| {
            let ones: Vec<usize> = (0..w.len()).filter(|&i| w.bit(i)).collect();
            let mut run = 1;
            for pair in ones.windows(2) {
                let d = pair[1] - pair[0];
                let (p, r) = (c.p as usize, c.r as usize);
                let (ok, chained) = match c.family {
                    Family::I => (d == 1 || d > p, d == 1),
                    Family::O => (d >= p, d == p),
                };
                if !ok {
                    return false;
                }
                run = if chained { run + 1 } else { 1 };
                if run > r {
                    return false;
                }
            }
            true
        })
        .collect()
}

fn eval_forbidden_factors(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let a = block_description_words(c);
    let b = enumerate_vertices(c);
    Ok(Outcome::compare(digest(&a), digest(&b)).witness_on_failure(|| first_difference(&a, &b)))
}

fn eval_reversal(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let ff = ForbiddenFactors::new(c.family, c.p, c.r);
    let bad: Vec<Word> = enumerate_vertices(c)
        .into_iter()
        .filter(|w| !ff.admits(&w.reverse()))
        .collect();
    Ok(Outcome::compare(0, bad.len()).witness_on_failure(|| json!({"word": bad[0].to_string()})))
}

fn eval_o_equals_i(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let other = pt.oracle().point(c.with_family(Family::I));
    let (o, i) = (pt.graph()?, other.graph()?);
    let iso = find_isomorphism(o, i, DEFAULT_ISO_BUDGET)?.is_some();
    let same_set = o.vertices() == i.vertices();
    Ok(
        Outcome::compare(c.p == 1 || c.r == 1, iso).witness_on_failure(
            || json!({"orders": [o.order(), i.order()], "same_vertex_set": same_set}),
        ),
    )
}

fn eval_small_isomorphism(pt: &Point) -> Result<Outcome> {
    let other = pt.oracle().point(at(Family::I, 3, 2, 4));
    let (a, b) = (pt.graph()?, other.graph()?);
    let map = find_isomorphism(a, b, DEFAULT_ISO_BUDGET)?;
    let out = Outcome::compare(true, map.is_some());
    Ok(match map {
        Some(m) => {
            let pairs: Vec<(String, String)> = (0..a.order())
                .map(|v| (a.word(v).to_string(), b.word(m[v]).to_string()))
                .collect();
            out.with_witness(json!({"bijection": pairs}))
        }
        None => out.with_witness(json!({"orders": [a.order(), b.order()]})),
    })
}

fn eval_code_bijection(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let limit = phi(c.p, c.r, (c.n + c.p) as i64)?;
    let words = enumerate_vertices(c);
    let mut values = Vec::with_capacity(words.len());
    let mut problem = None;
    for w in &words {
        let k = decode(c, w)?;
        if encode(c, k)? != *w {
            problem.get_or_insert(json!({"word": w.to_string(), "value": k}));
        }
        values.push(k);
    }
    values.sort_unstable();
    let onto = values.iter().copied().eq(0..limit);
    Ok(Outcome::compare(true, onto && problem.is_none())
        .witness_on_failure(|| problem.unwrap_or(json!({"values": values.len(), "limit": limit}))))
}

fn eval_radius_o(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    Ok(Outcome::compare(
        formulas::radius_o(c.p, c.r, c.n),
        pt.distances()?.radius,
    ))
}

fn eval_center_o(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let observed = pt.distances()?.center;
    match formulas::center_o(c.p, c.r, c.n) {
        Ok(res) => {
            let expected: Vec<String> = res.center.iter().map(|w| w.to_string()).collect();
            Ok(Outcome::compare(expected, observed))
        }
        Err(e @ CoreError::FormulaViolation { .. }) => {
            Ok(Outcome::compare(e.to_string(), observed)
                .with_witness(json!({"error": e.to_string()})))
        }
        Err(e) => Err(e.into()),
    }
}

fn eval_center_count_o(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let observed = pt.distances()?.center.len() as u64;
    match formulas::center_o(c.p, c.r, c.n) {
        Ok(res) => Ok(Outcome::compare(res.count, observed).with_witness(
            json!({"count_method": format!("{:?}", res.count_method).to_lowercase()}),
        )),
        Err(CoreError::FormulaViolation {
            constructed,
            formula,
            ..
        }) => Ok(Outcome::compare(formula, observed)
            .with_witness(json!({"constructed": constructed, "formula": formula}))),
        Err(e) => Err(e.into()),
    }
}

fn eval_diameter_o(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let out = Outcome::compare(
        formulas::diameter_o(c.p, c.r, c.n),
        pt.distances()?.diameter,
    );
    if c.p >= 2 {
        let alt = formulas::diameter_o_unshifted(c.p, c.r, c.n);
        return Ok(out.with_witness(json!({"unshifted_reading": alt})));
    }
    Ok(out)
}

fn eval_diameter_i(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let observed = pt.distances()?.diameter;
    let case = DiameterCase::of(c.p, c.r, c.n).label();
    Ok(match formulas::diameter_i(c.p, c.r, c.n)? {
        DiameterResult::Exact(v) => {
            Outcome::compare(v, observed).with_witness(json!({"case": case}))
        }
        DiameterResult::Bounds {
            lower,
            upper,
            barrier,
        } => Outcome::bounds(
            lower,
            upper,
            observed,
            json!({"c": barrier.c, "r_prime": barrier.r_prime}),
        )
        .with_witness(json!({"case": case})),
    })
}

fn eval_diameter_excess(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let expected = c.p >= 2 && c.r >= 2 * c.p + 3 && c.n >= 2 * c.p + 3;
    let d = pt.distances()?.diameter;
    Ok(Outcome::compare(expected, d > c.n).witness_on_failure(|| json!({"diameter": d})))
}

fn eval_isometric(pt: &Point) -> Result<Outcome> {
    let defects = pt.isometry_defects()?;
    Ok(Outcome::compare(0, defects.count)
        .witness_on_failure(|| json!({"first_pair": defects.first})))
}

fn eval_barrier_criterion(pt: &Point) -> Result<Outcome> {
    let defects = pt.barrier_defects()?;
    Ok(Outcome::compare(0, defects.count)
        .witness_on_failure(|| json!({"first_pair": defects.first})))
}

fn is_example_point(c: &CubeParams) -> bool {
    c.family == Family::I
        && c.p == 2
        && c.n >= 2 * c.p + 3
        && ((c.r == 7 && c.n % 9 == 7) || (c.r == 9 && c.n % 7 == 0))
}

/// The example diameters: the lower bound `n + c floor(n/(r'+p))` for
/// `r = 7`, `n = 9x - 2`, and the upper bound `n + c ceil(n/r')` for `r = 9`,
/// `n = 7y`, with `c = 1`, `r' = 7`.
fn eval_diameter_examples(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let b = formulas::best_barrier(c.p, c.r)?;
    let (cc, rp) = (b.c as u32, b.r_prime as u32);
    let (expected, which) = if c.r == 7 {
        (c.n + cc * (c.n / (rp + c.p)), "lower")
    } else {
        (c.n + cc * c.n.div_ceil(rp), "upper")
    };
    let observed = pt.distances()?.diameter;
    Ok(Outcome::compare(expected, observed)
        .with_witness(json!({"bound": which, "c": cc, "r_prime": rp})))
}

/// `alpha = (100100111)^{x-1} 1001001`, `beta = (111111100)^{x-1} 1111111`.
pub fn example_pair(n: u32) -> Result<(Word, Word)> {
    let x = (n as usize + 2) / 9;
    let a = "100100111".repeat(x - 1) + "1001001";
    let b = "111111100".repeat(x - 1) + "1111111";
    Ok((a.parse()?, b.parse()?))
}

fn eval_barrier_pair(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let (a, b) = example_pair(c.n)?;
    let barriers = find_distance_barriers(&a, &b, c.p, c.r)?;
    let total: i64 = barriers.iter().map(Barrier::contribution).sum();
    let g = pt.graph()?;
    let d = g.distance(&a, &b).ok_or(CoreError::Disconnected)?;
    let profiles: Vec<Value> = barriers
        .iter()
        .map(|b| json!({"start": b.start, "len": b.len, "ones": b.ones, "contribution": b.contribution()}))
        .collect();
    Ok(Outcome::compare(c.n as i64 + total, d).with_witness(json!({
        "alpha": a.to_string(),
        "beta": b.to_string(),
        "hamming": a.hamming(&b),
        "barriers": profiles,
    })))
}

fn eval_best_barrier(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let best = formulas::best_barrier(c.p, c.r)?;
    let expected = json!({"c": best.c, "r_prime": best.r_prime, "ones": best.ones, "formula_disagreements": 0});

    // every profile with 0-blocks of length p, contributions measured by BFS
    let mut profiles = Vec::new();
    let mut stack = vec![vec![1usize]];
    while let Some(ones) = stack.pop() {
        let len = ones.iter().sum::<usize>() + (ones.len() - 1) * c.p as usize;
        if len > c.r as usize {
            continue;
        }
        if ones.len() >= 2 {
            profiles.push(ones.clone());
        }
        let mut longer = ones.clone();
        *longer.last_mut().expect("nonempty") += 1;
        stack.push(longer);
        let mut more = ones;
        more.push(1);
        stack.push(more);
    }
    let mut disagreements = Vec::new();
    let mut best_seen: Option<((i64, usize, usize), Vec<usize>)> = None;
    for ones in profiles {
        let gap = "0".repeat(c.p as usize);
        let alpha: String = ones
            .iter()
            .map(|&k| "1".repeat(k))
            .collect::<Vec<_>>()
            .join(&gap);
        let len = alpha.len();
        let (a, b): (Word, Word) = (alpha.parse()?, "1".repeat(len).parse()?);
        let g = pt.oracle().point(CubeParams::i(c.p, c.r, len as u32)?);
        let d = g.graph()?.distance(&a, &b).ok_or(CoreError::Disconnected)?;
        let measured = d as i64 - len as i64;
        if measured != fibcube_core::barrier::contribution(&ones) {
            disagreements.push(json!({"profile": ones, "measured": measured}));
        }
        let key = (-measured, len, ones.len() - 1);
        if best_seen
            .as_ref()
            .map_or(true, |(k, o)| (key, &ones) < (*k, o))
        {
            best_seen = Some((key, ones));
        }
    }
    let (key, ones) = best_seen.expect("r >= 2p + 3 admits a profile");
    let observed = json!({"c": -key.0, "r_prime": key.1, "ones": ones, "formula_disagreements": disagreements.len()});
    Ok(Outcome::compare(expected, observed)
        .witness_on_failure(|| json!({"disagreements": disagreements})))
}

fn eval_max_degree(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let (delta, unique) = formulas::max_degree(c.family, c.p, c.r, c.n);
    let deg = pt.degrees()?;
    Ok(Outcome::compare(
        json!({"delta": delta, "unique": unique}),
        json!({"delta": deg.max, "unique": deg.max_count == 1}),
    )
    .witness_on_failure(|| json!({"max_degree_vertices": deg.max_count})))
}

fn eval_min_degree(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    Ok(Outcome::compare(
        formulas::min_degree(c.family, c.p, c.r, c.n),
        pt.degrees()?.min,
    ))
}

fn eval_min_degree_witness(pt: &Point) -> Result<Outcome> {
    let c = pt.params();
    let w = formulas::min_degree_witness(c.family, c.p, c.r, c.n)?;
    let expected = formulas::min_degree(c.family, c.p, c.r, c.n);
    let observed = match degree_of(c, &w) {
        Some(d) => json!(d),
        None => json!("not a vertex"),
    };
    Ok(Outcome::compare(expected, observed).with_witness(json!({"word": w.to_string()})))
}

fn eval_min_degree_downward(pt: &Point) -> Result<Outcome> {
    let deg = pt.degrees()?;
    let out = Outcome::compare(true, deg.downward_min_vertex.is_some());
    Ok(match deg.downward_min_vertex {
        Some(w) => out.with_witness(json!({"word": w})),
        None => out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let ids: BTreeSet<_> = CLAIMS.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), CLAIMS.len());
    }

    #[test]
    fn fixtures_are_applicable() {
        for c in CLAIMS {
            for p in (c.fixtures)() {
                assert!((c.applies)(&p), "{} {}", c.id, p);
            }
        }
    }

    #[test]
    fn generators() {
        assert_eq!(fibonacci_words(5).len(), 13);
        assert_eq!(
            postal_words(3, 7).len(),
            enumerate_vertices(&at(Family::O, 2, 1, 7)).len()
        );
        let (a, b) = example_pair(16).unwrap();
        assert_eq!(a.to_string(), "1001001111001001");
        assert_eq!(b.to_string(), "1111111001111111");
    }

    #[test]
    fn outcome_verdicts() {
        assert_eq!(Outcome::compare(3, 3).verdict, Verdict::Match);
        assert_eq!(Outcome::compare(3, 4u8).verdict, Verdict::Mismatch);
        assert_eq!(
            Outcome::bounds(17, 19, 18, json!({})).verdict,
            Verdict::BoundsHold
        );
        let o = Outcome::bounds(17, 19, 20, json!({"c": 1}));
        assert_eq!(o.verdict, Verdict::BoundsViolated);
        assert_eq!(o.expected, json!({"lower": 17, "upper": 19, "c": 1}));
    }
}
