use crate::error::Error;
use crate::word::{Family, Word};

/// Maximum degree `n`, and whether `0^n` is the only vertex attaining it.
pub fn max_degree(family: Family, p: u32, r: u32, n: u32) -> (u32, bool) {
    let unique = match family {
        Family::O => r == 1 || (p >= 2 && r >= 2),
        Family::I => r == 1 || (p >= 2 && ((r == 2 && n >= 4) || (r >= 3 && n >= 5))),
    };
    (n, unique)
}

/// Minimum degree of the I-cube.
pub fn min_degree_i(p: u32, r: u32, n: u32) -> u32 {
    if r == 1 {
        return n.div_ceil(2 * p + 1);
    }
    if p == 1 {
        let (q, t) = (n / (r + 2), n % (r + 2));
        return r * q + t.min(r);
    }
    let (q, t) = (n / (r + 2 * p), n % (r + 2 * p));
    2 * q + t.min(2)
}

/// Minimum degree of the O-cube. For `p = 1` or `r = 1` the O- and I-cubes
/// coincide and the I formula is used.
pub fn min_degree_o(p: u32, r: u32, n: u32) -> u32 {
    if p == 1 || r == 1 {
        return min_degree_i(p, r, n);
    }
    if r == 2 {
        return if n < 2 * p { 1 } else { n / (2 * p) + 1 };
    }
    if p == 2 && r == 3 {
        return 4 * (n / 13) + (n % 13).div_ceil(3);
    }
    n.div_ceil(2 * p - 1)
}

pub fn min_degree(family: Family, p: u32, r: u32, n: u32) -> u32 {
    match family {
        Family::O => min_degree_o(p, r, n),
        Family::I => min_degree_i(p, r, n),
    }
}

/// A vertex of minimum degree, built from the periodic constructions.
pub fn min_degree_witness(family: Family, p: u32, r: u32, n: u32) -> Result<Word, Error> {
    if p == 0 || r == 0 {
        return Err(Error::Contract("p and r must be positive"));
    }
    let (p, r, n) = (p as usize, r as usize, n as usize);
    match family {
        Family::I => witness_i(p, r, n),
        Family::O if p == 1 || r == 1 => witness_i(p, r, n),
        Family::O if r == 2 => witness_o_r2(p, n),
        Family::O if p == 2 && r == 3 => witness_o_23(n),
        Family::O => witness_o(p, n),
    }
}

fn z(k: usize) -> Result<Word, Error> {
    Word::zeros(k)
}

fn o(k: usize) -> Result<Word, Error> {
    Word::ones(k)
}

fn cat(parts: &[Word]) -> Result<Word, Error> {
    parts.iter().try_fold(Word::EMPTY, |acc, w| acc.concat(w))
}

fn witness_i(p: usize, r: usize, n: usize) -> Result<Word, Error> {
    if n == 0 {
        Ok(Word::EMPTY)
    } else if n > 2 * p + r {
        cat(&[z(p)?, o(r)?, z(p)?, witness_i(p, r, n - 2 * p - r)?])
    } else if n <= r {
        o(n)
    } else if n <= r + p {
        cat(&[o(r)?, z(n - r)?])
    } else {
        cat(&[z(n - r - p)?, o(r)?, z(p)?])
    }
}

fn witness_o_r2(p: usize, n: usize) -> Result<Word, Error> {
    let one = o(1)?;
    if n == 0 {
        Ok(Word::EMPTY)
    } else if n <= p {
        cat(&[z(n - 1)?, one])
    } else if n < 2 * p {
        cat(&[z(p - 1)?, one, z(n - p)?])
    } else if n <= 3 * p {
        cat(&[z(p - 1)?, one, z(n - p - 1)?, one])
    } else if n < 4 * p {
        cat(&[z(p - 1)?, one, z(2 * p - 1)?, one, z(n - 3 * p)?])
    } else {
        cat(&[z(p - 1)?, one, z(p)?, witness_o_r2(p, n - 2 * p)?])
    }
}

fn witness_o_23(n: usize) -> Result<Word, Error> {
    if n == 0 {
        return Ok(Word::EMPTY);
    }
    if n >= 13 {
        let period: Word = "0100010100010".parse()?;
        return period.concat(&witness_o_23(n - 13)?);
    }
    let (k, m) = ((n - 1) / 3, (n - 1) % 3);
    let unit: Word = "010".parse()?;
    let tail: Word = ["1", "10", "010"][m].parse()?;
    let mut w = Word::EMPTY;
    for _ in 0..k {
        w = w.concat(&unit)?;
    }
    w.concat(&tail)
}

fn witness_o(p: usize, n: usize) -> Result<Word, Error> {
    let one = o(1)?;
    if n == 0 {
        Ok(Word::EMPTY)
    } else if n <= p {
        cat(&[one, z(n - 1)?])
    } else if n < 2 * p {
        cat(&[z(n - p)?, one, z(p - 1)?])
    } else {
        cat(&[z(p - 1)?, one, z(p - 1)?, witness_o(p, n - 2 * p + 1)?])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn max_degree_examples() {
        assert_eq!(max_degree(Family::O, 2, 2, 6), (6, true));
        assert_eq!(max_degree(Family::I, 2, 3, 4), (4, false));
        assert_eq!(max_degree(Family::I, 1, 2, 5), (5, false));
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(min_degree_i(1, 1, 5), 2);
        assert_eq!(min_degree_i(2, 1, 5), 1);
        assert_eq!(min_degree_i(2, 2, 8), 4);
        assert_eq!(min_degree_o(2, 3, 13), 4);
        assert_eq!(min_degree_o(3, 2, 5), 1);
        assert_eq!(min_degree_o(2, 4, 9), 3);
    }

    #[test]
    fn fibonacci_cube_min_degree() {
        for n in 1..20 {
            assert_eq!(min_degree_i(1, 1, n), n.div_ceil(3));
        }
    }

    #[test]
    fn witness_examples() {
        let w = |f, p, r, n| min_degree_witness(f, p, r, n).unwrap().to_string();
        assert_eq!(w(Family::I, 2, 3, 7), "0011100");
        assert_eq!(w(Family::O, 2, 3, 13), "0100010100010");
        for n in 0..20 {
            assert_eq!(w(Family::O, 3, 2, n).len(), n as usize);
            assert_eq!(w(Family::O, 3, 4, n).len(), n as usize);
            assert_eq!(w(Family::O, 2, 3, n).len(), n as usize);
        }
    }
}
