//! Distance-barriers between two I-words: aligned segments where one word
//! reads `1^{r_1} 0^{p_1} 1^{r_2} ... 0^{p_s} 1^{r_{s+1}}` and the other reads
//! all 1s.

use alloc::vec::Vec;

use crate::error::Error;
use crate::numsys::ForbiddenFactors;
use crate::word::{Family, Word};

/// Which of the two input words carries the 0-blocks of a barrier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    First,
    Second,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Barrier {
    /// First position of the segment.
    pub start: usize,
    /// Segment length `r'`.
    pub len: usize,
    pub gapped: Side,
    /// `r_1, ..., r_{s+1}`.
    pub ones: Vec<usize>,
    /// `p_1, ..., p_s`.
    pub zeros: Vec<usize>,
}

impl Barrier {
    /// Number of internal 0-blocks.
    pub fn s(&self) -> usize {
        self.zeros.len()
    }

    /// Distance in excess of `r'` needed to turn the gapped segment into
    /// all 1s when every 1-block but a longest one is cleared and refilled:
    /// the sum of the `r_i` minus twice the largest.
    pub fn contribution(&self) -> i64 {
        contribution(&self.ones)
    }

    /// Distance in excess of the Hamming distance across the segment.
    pub fn excess(&self) -> u64 {
        let sum: usize = self.ones.iter().sum();
        let max = self.ones.iter().copied().max().unwrap_or(0);
        2 * (sum - max) as u64
    }
}

/// `sum(r_i) - 2 * max(r_i)`.
pub fn contribution(ones: &[usize]) -> i64 {
    let sum: usize = ones.iter().sum();
    let max = ones.iter().copied().max().unwrap_or(0);
    sum as i64 - 2 * max as i64
}

/// All distance-barriers between `u` and `v`, ordered by side then position.
///
/// For each maximal 1-block of one word, the other word is read from its
/// first to its last 1 inside that block; the segment is a barrier when it
/// contains a 0. With `p = 1` no barriers exist, since single-0 gaps make
/// the words isometric in the hypercube.
pub fn find_distance_barriers(u: &Word, v: &Word, p: u32, r: u32) -> Result<Vec<Barrier>, Error> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            word: *v,
            got: v.len(),
            expected: u.len(),
        });
    }
    let ff = ForbiddenFactors::new(Family::I, p, r);
    for w in [u, v] {
        if !ff.admits(w) {
            return Err(Error::InvalidWord { word: *w });
        }
    }
    let mut out = Vec::new();
    if p < 2 {
        return Ok(out);
    }
    for (gapped, a, b) in [(Side::First, u, v), (Side::Second, v, u)] {
        for (sym, start, len) in b.blocks() {
            if !sym {
                continue;
            }
            let ones: Vec<usize> = (start..start + len).filter(|&i| a.bit(i)).collect();
            let (Some(&lo), Some(&hi)) = (ones.first(), ones.last()) else {
                continue;
            };
            if hi + 1 - lo == ones.len() {
                continue;
            }
            let seg = Word::from_bits(
                (a.bits() >> (a.len() - 1 - hi)) & crate::word::low_mask(hi + 1 - lo),
                hi + 1 - lo,
            )?;
            let mut b = Barrier {
                start: lo,
                len: seg.len(),
                gapped,
                ones: Vec::new(),
                zeros: Vec::new(),
            };
            for (s, _, l) in seg.blocks() {
                if s {
                    b.ones.push(l);
                } else {
                    b.zeros.push(l);
                }
            }
            out.push(b);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn single_two_barrier() {
        let bs = find_distance_barriers(&w("1001001"), &w("1111111"), 2, 7).unwrap();
        assert_eq!(bs.len(), 1);
        let b = &bs[0];
        assert_eq!((b.start, b.len, b.gapped), (0, 7, Side::First));
        assert_eq!(b.ones, [1, 1, 1]);
        assert_eq!(b.zeros, [2, 2]);
        assert_eq!(b.s(), 2);
        assert_eq!(b.contribution(), 1);
        assert_eq!(b.excess(), 4);
    }

    #[test]
    fn equal_words_have_none() {
        let x = w("1001001");
        assert!(find_distance_barriers(&x, &x, 2, 7).unwrap().is_empty());
    }

    #[test]
    fn both_orientations_are_found() {
        let a = w("1001001111001001");
        let b = w("1111111001111111");
        let bs = find_distance_barriers(&a, &b, 2, 7).unwrap();
        assert_eq!(bs.len(), 3);
        assert!(bs[..2]
            .iter()
            .all(|x| x.gapped == Side::First && x.ones == vec![1, 1, 1]));
        assert_eq!((bs[2].gapped, bs[2].start, bs[2].len), (Side::Second, 6, 4));
        assert_eq!(bs[2].ones, [1, 1]);
        let total: i64 = bs.iter().map(Barrier::contribution).sum();
        assert_eq!(total, 2);
        let swapped = find_distance_barriers(&b, &a, 2, 7).unwrap();
        assert_eq!(
            swapped.iter().filter(|x| x.gapped == Side::Second).count(),
            2
        );
    }

    #[test]
    fn invalid_input_is_rejected() {
        assert!(find_distance_barriers(&w("101"), &w("111"), 2, 3).is_err());
        assert!(find_distance_barriers(&w("10"), &w("111"), 2, 3).is_err());
    }

    #[test]
    fn contribution_of_profiles() {
        assert_eq!(contribution(&[1, 2]), -1);
        assert_eq!(contribution(&[2, 2, 2]), 2);
    }
}
