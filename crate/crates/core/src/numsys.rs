//! The Fibonacci (p,r)-numeration system, codeword validity for both cube
//! families, integer encoding of O-codes and vertex-set enumeration.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::word::{low_mask, CubeParams, Family, Word, MAX_WORD_LEN};

/// Memoized values of the (p,r)-numeration sequence
/// `phi(i) = sum_{j=0..=r} phi(i - p*j - 1)`, `phi(0) = 1`, `phi(i < 0) = 0`.
///
/// Not shared between threads; each worker owns its own table.
#[derive(Clone, Debug)]
pub struct PhiTable {
    p: u32,
    r: u32,
    values: Vec<u64>,
}

impl PhiTable {
    pub fn new(p: u32, r: u32) -> Result<Self, Error> {
        if p == 0 || r == 0 {
            return Err(Error::Contract("p and r must be positive"));
        }
        Ok(PhiTable {
            p,
            r,
            values: vec![1],
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn get(&mut self, i: i64) -> Result<u64, Error> {
        if i < 0 {
            return Ok(0);
        }
        let i = i as usize;
        while self.values.len() <= i {
            let next = self.values.len() as i64;
            let mut acc: u64 = 0;
            for j in 0..=self.r as i64 {
                let idx = next - self.p as i64 * j - 1;
                if idx < 0 {
                    break;
                }
                acc = acc
                    .checked_add(self.values[idx as usize])
                    .ok_or(Error::Overflow {
                        p: self.p,
                        r: self.r,
                        i: next,
                    })?;
            }
            self.values.push(acc);
        }
        Ok(self.values[i])
    }

    /// Cached prefix `phi(0..len)`.
    pub fn values(&self) -> &[u64] {
        &self.values
    }
}

/// `phi(p, r, i)` computed with a throwaway table.
pub fn phi(p: u32, r: u32, i: i64) -> Result<u64, Error> {
    PhiTable::new(p, r)?.get(i)
}

/// The forbidden factors characterizing the vertex set of one cube family.
#[derive(Clone, Debug)]
pub struct ForbiddenFactors {
    patterns: Vec<Word>,
}

impl ForbiddenFactors {
    /// Family I: `1^{r+1}` and `1 0^s 1` for `1 <= s <= p-1`.
    /// Family O: `(1 0^{p-1})^r 1` and `1 0^s 1` for `0 <= s <= p-2`.
    ///
    /// Patterns longer than [`MAX_WORD_LEN`] can never occur and are dropped.
    pub fn new(family: Family, p: u32, r: u32) -> Self {
        let (p, r) = (p as usize, r as usize);
        let mut patterns = Vec::new();
        let mut push = |len: usize, bits: u64| {
            if len <= MAX_WORD_LEN {
                patterns.push(Word::from_bits_unchecked(bits, len));
            }
        };
        let one_gap_one = |s: usize| (1u64 << (s + 1)) | 1;
        match family {
            Family::I => {
                if r < MAX_WORD_LEN {
                    push(r + 1, low_mask(r + 1));
                }
                for s in 1..p {
                    if s + 2 <= MAX_WORD_LEN {
                        push(s + 2, one_gap_one(s));
                    }
                }
            }
            Family::O => {
                let len = r * p + 1;
                if len <= MAX_WORD_LEN {
                    let bits = (0..=r).fold(0u64, |acc, k| acc | (1u64 << (k * p)));
                    push(len, bits);
                }
                for s in 0..p.saturating_sub(1) {
                    if s + 2 <= MAX_WORD_LEN {
                        push(s + 2, one_gap_one(s));
                    }
                }
            }
        }
        ForbiddenFactors { patterns }
    }

    pub fn patterns(&self) -> &[Word] {
        &self.patterns
    }

    pub fn admits(&self, w: &Word) -> bool {
        !self.patterns.iter().any(|pat| w.contains_factor(pat))
    }

    /// Whether no forbidden factor ends at the last symbol of `w`.
    fn admits_suffix(&self, w: &Word) -> bool {
        self.patterns.iter().all(|pat| {
            let m = pat.len();
            m > w.len() || w.bits() & low_mask(m) != pat.bits()
        })
    }
}

/// Whether `w` is a vertex of the cube described by `params`.
pub fn is_valid_word(params: &CubeParams, w: &Word) -> Result<bool, Error> {
    check_len(params, w)?;
    Ok(ForbiddenFactors::new(params.family, params.p, params.r).admits(w))
}

fn check_len(params: &CubeParams, w: &Word) -> Result<(), Error> {
    if w.len() != params.n as usize {
        return Err(Error::LengthMismatch {
            word: *w,
            got: w.len(),
            expected: params.n as usize,
        });
    }
    Ok(())
}

/// All valid words of length `n`, in increasing lexicographic order.
///
/// The position of a word in this list is its rank everywhere downstream.
pub fn enumerate_vertices(params: &CubeParams) -> Vec<Word> {
    let ff = ForbiddenFactors::new(params.family, params.p, params.r);
    let mut out = Vec::new();
    extend_valid(&ff, Word::EMPTY, params.n as usize, &mut out);
    out
}

// Both vertex sets are factor-closed, so pruning on invalid prefixes is exact.
fn extend_valid(ff: &ForbiddenFactors, prefix: Word, n: usize, out: &mut Vec<Word>) {
    if prefix.len() == n {
        out.push(prefix);
        return;
    }
    for bit in [0u64, 1] {
        let next = Word::from_bits_unchecked((prefix.bits() << 1) | bit, prefix.len() + 1);
        if ff.admits_suffix(&next) {
            extend_valid(ff, next, n, out);
        }
    }
}

/// Number of vertices, without enumerating them.
///
/// Family O uses `phi(p, r, n + p)`; family I runs a small automaton over
/// (trailing 1-run, trailing 0-run) states. Used for budget checks.
pub fn order_estimate(params: &CubeParams) -> Result<u64, Error> {
    match params.family {
        Family::O => phi(params.p, params.r, params.n as i64 + params.p as i64),
        Family::I => Ok(count_i_words(
            params.p as usize,
            params.r as usize,
            params.n as usize,
        )),
    }
}

fn count_i_words(p: usize, r: usize, n: usize) -> u64 {
    // state: (ones, zeros, seen_one); zeros capped at p
    let idx = |ones: usize, zeros: usize, seen: usize| (ones * (p + 1) + zeros) * 2 + seen;
    let size = (r + 1) * (p + 1) * 2;
    let mut cur = vec![0u64; size];
    cur[idx(0, 0, 0)] = 1;
    for _ in 0..n {
        let mut next = vec![0u64; size];
        for ones in 0..=r {
            for zeros in 0..=p {
                for seen in 0..2 {
                    let c = cur[idx(ones, zeros, seen)];
                    if c == 0 {
                        continue;
                    }
                    // append 0
                    let z = if ones > 0 { 1 } else { (zeros + 1).min(p) };
                    let t = idx(0, z, seen);
                    next[t] = next[t].saturating_add(c);
                    // append 1
                    if ones > 0 {
                        if ones < r {
                            let t = idx(ones + 1, 0, 1);
                            next[t] = next[t].saturating_add(c);
                        }
                    } else if seen == 0 || zeros >= p {
                        let t = idx(1, 0, 1);
                        next[t] = next[t].saturating_add(c);
                    }
                }
            }
        }
        cur = next;
    }
    cur.iter().fold(0u64, |a, &b| a.saturating_add(b))
}

fn require_o(params: &CubeParams) -> Result<(), Error> {
    if params.family != Family::O {
        return Err(Error::Contract("integer codes exist only for family O"));
    }
    Ok(())
}

/// The O-code of `value`: greedy from the most significant position, setting
/// a 1 wherever `phi` fits into the remainder and the prefix stays valid.
pub fn encode(params: &CubeParams, value: u64) -> Result<Word, Error> {
    require_o(params)?;
    let (p, n) = (params.p as i64, params.n as usize);
    let mut table = PhiTable::new(params.p, params.r)?;
    let limit = table.get(n as i64 + p)?;
    if value >= limit {
        return Err(Error::OutOfRange {
            value,
            max: limit - 1,
        });
    }
    let ff = ForbiddenFactors::new(Family::O, params.p, params.r);
    let mut rem = value;
    let mut prefix = Word::EMPTY;
    for pos in 0..n {
        // the symbol at `pos` carries weight phi(n + p - 1 - pos)
        let weight = table.get(n as i64 + p - 1 - pos as i64)?;
        let with_one = Word::from_bits_unchecked((prefix.bits() << 1) | 1, pos + 1);
        if weight <= rem && ff.admits_suffix(&with_one) {
            rem -= weight;
            prefix = with_one;
        } else {
            prefix = Word::from_bits_unchecked(prefix.bits() << 1, pos + 1);
        }
    }
    if rem != 0 {
        return Err(Error::Contract("greedy encoding left a remainder"));
    }
    Ok(prefix)
}

/// The integer whose O-code is `w`.
pub fn decode(params: &CubeParams, w: &Word) -> Result<u64, Error> {
    require_o(params)?;
    if !is_valid_word(params, w)? {
        return Err(Error::InvalidWord { word: *w });
    }
    let mut table = PhiTable::new(params.p, params.r)?;
    decode_with(&mut table, w)
}

/// Decoding without the validity check, reusing a table.
pub fn decode_with(table: &mut PhiTable, w: &Word) -> Result<u64, Error> {
    let n = w.len() as i64;
    let p = table.p() as i64;
    let mut sum = 0u64;
    for (pos, bit) in w.iter().enumerate() {
        if bit {
            let i = n + p - 1 - pos as i64;
            sum = sum.checked_add(table.get(i)?).ok_or(Error::Overflow {
                p: table.p(),
                r: table.r(),
                i,
            })?;
        }
    }
    Ok(sum)
}

/// The vertex set rebuilt from the prefix decompositions.
///
/// Family O, `n > p*r`: `V_n = U_{t=0..=r} (1 0^{p-1})^t 0 V_{n-tp-1}`.
/// Family I, `n >= p+r`: `V_n = 0 V_{n-1} U U_{t=1..=r} 1^t 0^p V_{n-p-t}`.
/// Shorter lengths are seeded by direct enumeration, since the decompositions
/// miss short words such as `1` at `n = 1`.
pub fn recursive_vertex_set(params: &CubeParams) -> Result<BTreeSet<Word>, Error> {
    let (p, r, n) = (params.p as usize, params.r as usize, params.n as usize);
    let seeded = match params.family {
        Family::O => n <= p * r,
        Family::I => n < p + r,
    };
    if seeded {
        return Ok(enumerate_vertices(params).into_iter().collect());
    }
    let mut out = BTreeSet::new();
    match params.family {
        Family::O => {
            let unit = Word::from_bits_unchecked(1u64 << (p - 1), p);
            let mut prefix = Word::EMPTY;
            for t in 0..=r {
                if t > 0 {
                    prefix = prefix.concat(&unit)?;
                }
                let head = prefix.concat(&Word::zeros(1)?)?;
                let rest = recursive_vertex_set(&params.with_n((n - t * p - 1) as u32)?)?;
                for w in rest {
                    out.insert(head.concat(&w)?);
                }
            }
        }
        Family::I => {
            let zero = Word::zeros(1)?;
            for w in recursive_vertex_set(&params.with_n((n - 1) as u32)?)? {
                out.insert(zero.concat(&w)?);
            }
            for t in 1..=r {
                let head = Word::ones(t)?.concat(&Word::zeros(p)?)?;
                for w in recursive_vertex_set(&params.with_n((n - p - t) as u32)?)? {
                    out.insert(head.concat(&w)?);
                }
            }
        }
    }
    Ok(out)
}
