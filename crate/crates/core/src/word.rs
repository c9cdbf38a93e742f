//! Binary words, cube families and cube parameters.

use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

/// Longest word the packed representation can hold.
pub const MAX_WORD_LEN: usize = 64;

/// A fixed-length binary word, most significant (leftmost) symbol first.
///
/// Bits are packed into a `u64` with the leftmost symbol at bit `len - 1`, so
/// for words of equal length numeric order of the packed value is the
/// lexicographic order with `0 < 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    // `len` first so that the derived ordering sorts by length, then lexicographically.
    len: u8,
    bits: u64,
}

impl Word {
    /// The empty word.
    pub const EMPTY: Word = Word { len: 0, bits: 0 };

    pub fn from_bits(bits: u64, len: usize) -> Result<Self, Error> {
        if len > MAX_WORD_LEN {
            return Err(Error::WordTooLong { len });
        }
        if len < 64 && bits >> len != 0 {
            return Err(Error::Contract("bits set beyond word length"));
        }
        Ok(Word {
            len: len as u8,
            bits,
        })
    }

    pub(crate) const fn from_bits_unchecked(bits: u64, len: usize) -> Self {
        Word {
            len: len as u8,
            bits,
        }
    }

    pub fn zeros(len: usize) -> Result<Self, Error> {
        Word::from_bits(0, len)
    }

    pub fn ones(len: usize) -> Result<Self, Error> {
        Word::from_bits(low_mask(len), len)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Symbol at position `i` counted from the left, starting at 0.
    #[inline]
    pub fn bit(&self, i: usize) -> bool {
        debug_assert!(i < self.len());
        (self.bits >> (self.len() - 1 - i)) & 1 == 1
    }

    /// The word with position `i` (from the left) flipped.
    #[inline]
    pub fn flip(&self, i: usize) -> Word {
        debug_assert!(i < self.len());
        Word {
            len: self.len,
            bits: self.bits ^ (1u64 << (self.len() - 1 - i)),
        }
    }

    /// Number of 1s.
    #[inline]
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    #[inline]
    pub fn hamming(&self, other: &Word) -> u32 {
        debug_assert_eq!(self.len, other.len);
        (self.bits ^ other.bits).count_ones()
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Word) -> Result<Word, Error> {
        let len = self.len() + other.len();
        if len > MAX_WORD_LEN {
            return Err(Error::WordTooLong { len });
        }
        let hi = if other.len() == 64 {
            0
        } else {
            self.bits << other.len()
        };
        Ok(Word {
            len: len as u8,
            bits: hi | other.bits,
        })
    }

    pub fn reverse(&self) -> Word {
        if self.len == 0 {
            return *self;
        }
        Word {
            len: self.len,
            bits: self.bits.reverse_bits() >> (64 - self.len()),
        }
    }

    /// Inserts `other` so that it starts at position `at` (0 = prepend).
    pub fn insert(&self, at: usize, other: &Word) -> Result<Word, Error> {
        debug_assert!(at <= self.len());
        let head = Word::from_bits_unchecked(self.bits >> (self.len() - at), at);
        let tail_len = self.len() - at;
        let tail = Word::from_bits_unchecked(self.bits & low_mask(tail_len), tail_len);
        head.concat(other)?.concat(&tail)
    }

    /// Iterator over the symbols, leftmost first.
    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |i| self.bit(i))
    }

    /// Maximal runs as `(symbol, start, length)`, left to right.
    pub fn blocks(&self) -> impl Iterator<Item = (bool, usize, usize)> + '_ {
        let mut i = 0;
        core::iter::from_fn(move || {
            if i >= self.len() {
                return None;
            }
            let sym = self.bit(i);
            let start = i;
            while i < self.len() && self.bit(i) == sym {
                i += 1;
            }
            Some((sym, start, i - start))
        })
    }

    /// Whether `pattern` occurs as a factor.
    pub fn contains_factor(&self, pattern: &Word) -> bool {
        let m = pattern.len();
        if m == 0 {
            return true;
        }
        if m > self.len() {
            return false;
        }
        let mask = low_mask(m);
        (0..=self.len() - m).any(|shift| (self.bits >> shift) & mask == pattern.bits)
    }
}

#[inline]
pub(crate) fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("λ")
        } else {
            fmt::Display::fmt(self, f)
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let len = s.len();
        if len > MAX_WORD_LEN {
            return Err(Error::WordTooLong { len });
        }
        let mut bits = 0u64;
        for c in s.chars() {
            bits = (bits << 1)
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(Error::Parse(String::from(s))),
                };
        }
        Ok(Word {
            len: len as u8,
            bits,
        })
    }
}

/// Which of the two cube families a word or graph belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// The original cubes, built on codes of the (p,r)-numeration system.
    O,
    /// The imitative cubes: 1-blocks of length at most `r`, internal 0-blocks of length at least `p`.
    I,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::O, Family::I];

    pub fn as_str(&self) -> &'static str {
        match self {
            Family::O => "O",
            Family::I => "I",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "O" | "o" => Ok(Family::O),
            "I" | "i" => Ok(Family::I),
            _ => Err(Error::Parse(String::from(s))),
        }
    }
}

/// One cube: family, parameters `p`, `r` and codeword length `n`.
///
/// For family O, `n` is the code length; the cube is the numeration-system graph
/// on `phi(p, r, n + p)` integers. The `+p` shift only matters for `phi` lookups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeParams {
    pub family: Family,
    pub p: u32,
    pub r: u32,
    pub n: u32,
}

impl CubeParams {
    pub fn new(family: Family, p: u32, r: u32, n: u32) -> Result<Self, Error> {
        if p == 0 || r == 0 {
            return Err(Error::Contract("p and r must be positive"));
        }
        if n as usize > MAX_WORD_LEN {
            return Err(Error::WordTooLong { len: n as usize });
        }
        Ok(CubeParams { family, p, r, n })
    }

    pub fn o(p: u32, r: u32, n: u32) -> Result<Self, Error> {
        CubeParams::new(Family::O, p, r, n)
    }

    pub fn i(p: u32, r: u32, n: u32) -> Result<Self, Error> {
        CubeParams::new(Family::I, p, r, n)
    }

    pub fn with_n(&self, n: u32) -> Result<Self, Error> {
        CubeParams::new(self.family, self.p, self.r, n)
    }

    pub fn with_family(&self, family: Family) -> Self {
        CubeParams { family, ..*self }
    }
}

impl fmt::Display for CubeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{};{})", self.family, self.p, self.r, self.n)
    }
}
