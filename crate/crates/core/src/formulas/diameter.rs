use alloc::vec::Vec;
use core::fmt;

use crate::barrier::contribution;
use crate::error::Error;

/// Diameter of the O-cube with codeword length `n`: `n` for `p = 1`, else
/// `floor(Nr / (pr + 1)) + floor((N - 1)r / (pr + 1))` with `N = n + p`, the
/// index of the numeration-system graph.
pub fn diameter_o(p: u32, r: u32, n: u32) -> u32 {
    if p == 1 {
        return n;
    }
    diameter_o_unshifted(p, r, n + p)
}

/// The same expression evaluated directly at its argument, without the `+p`
/// shift. Kept for reporting the alternative reading.
pub fn diameter_o_unshifted(p: u32, r: u32, n: u32) -> u32 {
    if p == 1 {
        return n;
    }
    let den = p * r + 1;
    n * r / den + n.saturating_sub(1) * r / den
}

/// Parameter regimes of the family-I diameter formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum DiameterCase {
    /// `p = 1`.
    P1,
    /// `r < p`.
    RBelowP,
    /// `p <= r <= p + 1`.
    RNearP,
    /// `p + 2 <= r <= 2p + 2`.
    RMid,
    /// `r >= 2p + 3` and `n < 2p + 3`.
    ShortN,
    /// `r >= 2p + 3` and `n >= 2p + 3`.
    Barrier,
}

impl DiameterCase {
    pub fn of(p: u32, r: u32, n: u32) -> Self {
        if p == 1 {
            DiameterCase::P1
        } else if r < p {
            DiameterCase::RBelowP
        } else if r <= p + 1 {
            DiameterCase::RNearP
        } else if r <= 2 * p + 2 {
            DiameterCase::RMid
        } else if n < 2 * p + 3 {
            DiameterCase::ShortN
        } else {
            DiameterCase::Barrier
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            DiameterCase::P1 => "p=1",
            DiameterCase::RBelowP => "r<p",
            DiameterCase::RNearP => "p<=r<=p+1",
            DiameterCase::RMid => "p+2<=r<=2p+2",
            DiameterCase::ShortN => "short-n",
            DiameterCase::Barrier => "barrier",
        }
    }
}

impl fmt::Display for DiameterCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The strongest barrier for given `p`, `r`: its contribution `c`, its length
/// `r'` and its 1-block lengths (0-blocks all have length `p`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarrierProfile {
    pub c: i64,
    pub r_prime: usize,
    pub s: usize,
    pub ones: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiameterResult {
    Exact(u32),
    Bounds {
        lower: u32,
        upper: u32,
        barrier: BarrierProfile,
    },
}

impl DiameterResult {
    pub fn admits(&self, d: u32) -> bool {
        match self {
            DiameterResult::Exact(v) => *v == d,
            DiameterResult::Bounds { lower, upper, .. } => (*lower..=*upper).contains(&d),
        }
    }
}

impl fmt::Display for DiameterResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiameterResult::Exact(v) => write!(f, "{v}"),
            DiameterResult::Bounds { lower, upper, .. } => write!(f, "[{lower},{upper}]"),
        }
    }
}

/// Diameter of the I-cube.
///
/// Exact `n` in the cases without useful barriers;
/// `2r floor(n/(p+r)) + min(n mod (p+r), 2r)` for `r < p`; otherwise the
/// interval `[n + c floor(n/(r'+p)), n + c ceil(n/r')]` from [`best_barrier`],
/// with the lower end raised to `n + 1` where it falls short.
pub fn diameter_i(p: u32, r: u32, n: u32) -> Result<DiameterResult, Error> {
    if p == 0 || r == 0 {
        return Err(Error::Contract("p and r must be positive"));
    }
    Ok(match DiameterCase::of(p, r, n) {
        DiameterCase::RBelowP => {
            let period = p + r;
            DiameterResult::Exact(2 * r * (n / period) + (n % period).min(2 * r))
        }
        DiameterCase::Barrier => {
            let barrier = best_barrier(p, r)?;
            let (c, rp) = (barrier.c as u32, barrier.r_prime as u32);
            let lower = (n + c * (n / (rp + p))).max(n + 1);
            let upper = n + c * n.div_ceil(rp);
            DiameterResult::Bounds {
                lower,
                upper,
                barrier,
            }
        }
        _ => DiameterResult::Exact(n),
    })
}

/// Exhaustive search over barrier profiles `1^{r_1} 0^p ... 0^p 1^{r_{s+1}}`
/// of length at most `r`, maximizing the contribution, then minimizing the
/// length, then `s`, then the profile lexicographically.
pub fn best_barrier(p: u32, r: u32) -> Result<BarrierProfile, Error> {
    if p < 2 || r < 2 * p + 3 {
        return Err(Error::Contract("best_barrier needs p >= 2 and r >= 2p + 3"));
    }
    let mut best: Option<BarrierProfile> = None;
    let mut ones = Vec::new();
    search(p as usize, r as usize, &mut ones, 0, &mut best);
    best.ok_or(Error::Contract("no barrier fits"))
}

fn search(
    p: usize,
    r: usize,
    ones: &mut Vec<usize>,
    used: usize,
    best: &mut Option<BarrierProfile>,
) {
    if ones.len() >= 2 {
        let cand = BarrierProfile {
            c: contribution(ones),
            r_prime: used,
            s: ones.len() - 1,
            ones: ones.clone(),
        };
        let better = match best {
            None => true,
            Some(b) => {
                let key = |x: &BarrierProfile| (-x.c, x.r_prime, x.s);
                (key(&cand), &cand.ones) < (key(b), &b.ones)
            }
        };
        if better {
            *best = Some(cand);
        }
    }
    let gap = if ones.is_empty() { 0 } else { p };
    for len in 1.. {
        if used + gap + len > r {
            break;
        }
        ones.push(len);
        search(p, r, ones, used + gap + len, best);
        ones.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn diameter_o_examples() {
        assert_eq!(diameter_o(1, 3, 6), 6);
        assert_eq!(diameter_o(2, 2, 5), 4);
        assert_eq!(diameter_o_unshifted(2, 2, 5), 3);
        assert_eq!(diameter_o(2, 1, 1), 1);
    }

    #[test]
    fn diameter_i_examples() {
        assert_eq!(diameter_i(1, 2, 7).unwrap(), DiameterResult::Exact(7));
        assert_eq!(diameter_i(3, 2, 10).unwrap(), DiameterResult::Exact(8));
        let d = diameter_i(2, 7, 16).unwrap();
        assert_eq!(d.to_string(), "[17,19]");
        assert!(d.admits(18));
        assert!(!d.admits(20));
        let d = diameter_i(2, 9, 14).unwrap();
        assert_eq!(d.to_string(), "[15,16]");
    }

    #[test]
    fn cases() {
        assert_eq!(DiameterCase::of(1, 9, 3), DiameterCase::P1);
        assert_eq!(DiameterCase::of(3, 2, 3), DiameterCase::RBelowP);
        assert_eq!(DiameterCase::of(2, 3, 3), DiameterCase::RNearP);
        assert_eq!(DiameterCase::of(2, 6, 3), DiameterCase::RMid);
        assert_eq!(DiameterCase::of(2, 7, 6), DiameterCase::ShortN);
        assert_eq!(DiameterCase::of(2, 7, 7).label(), "barrier");
    }

    #[test]
    fn best_barrier_examples() {
        let b = best_barrier(2, 7).unwrap();
        assert_eq!((b.c, b.r_prime, b.s), (1, 7, 2));
        assert_eq!(b.ones, [1, 1, 1]);
        let b = best_barrier(2, 9).unwrap();
        assert_eq!((b.c, b.r_prime), (1, 7));
        let b = best_barrier(3, 9).unwrap();
        assert_eq!(
            (b.c, b.r_prime, b.ones.as_slice()),
            (1, 9, &[1usize, 1, 1][..])
        );
        let b = best_barrier(2, 10).unwrap();
        assert_eq!(
            (b.c, b.r_prime, b.ones.as_slice()),
            (2, 10, &[2usize, 2, 2][..])
        );
        assert!(best_barrier(2, 6).is_err());
        assert!(best_barrier(1, 9).is_err());
    }
}
