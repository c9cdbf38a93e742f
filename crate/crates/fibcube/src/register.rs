//! Published values known to disagree with computation.
//!
//! A failing check is excused only when an entry here covers its claim and
//! parameters. Deleting an entry turns the matching rows back into failures.

use fibcube_core::{CubeParams, Family};

/// Upper end of the `n` range of an entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NMax {
    Fixed(u32),
    /// `n <= p + k`.
    PPlus(u32),
    Unbounded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KnownDiscrepancy {
    pub id: &'static str,
    pub claim_id: &'static str,
    pub family: Option<Family>,
    pub p: (u32, u32),
    pub r: (u32, u32),
    pub n_min: u32,
    pub n_max: NMax,
    pub note: &'static str,
}

impl KnownDiscrepancy {
    pub fn covers(&self, claim_id: &str, params: &CubeParams) -> bool {
        let n_max = match self.n_max {
            NMax::Fixed(v) => v,
            NMax::PPlus(k) => params.p + k,
            NMax::Unbounded => u32::MAX,
        };
        self.claim_id == claim_id
            && self.family.map_or(true, |f| f == params.family)
            && (self.p.0..=self.p.1).contains(&params.p)
            && (self.r.0..=self.r.1).contains(&params.r)
            && (self.n_min..=n_max).contains(&params.n)
    }
}

const ANY: u32 = u32::MAX;

pub const KNOWN_DISCREPANCIES: &[KnownDiscrepancy] = &[
    KnownDiscrepancy {
        id: "phi-2-2-11",
        claim_id: "phi-table",
        family: Some(Family::O),
        p: (2, 2),
        r: (2, 2),
        n_min: 11,
        n_max: NMax::Fixed(11),
        note: "printed 85; the recurrence gives 47 + 19 + 8 = 74, and the printed next value 116 = 74 + 30 + 12 agrees with 74",
    },
    KnownDiscrepancy {
        id: "order-equality-short-words",
        claim_id: "order-comparison",
        family: Some(Family::O),
        p: (2, ANY),
        r: (2, ANY),
        n_min: 2,
        n_max: NMax::PPlus(1),
        note: "for p >= 2 the O-cube forbids the factor 11 while the I-cube admits it, so the orders already differ from n = 2",
    },
    KnownDiscrepancy {
        id: "o-i-one-position",
        claim_id: "o-equals-i",
        family: Some(Family::O),
        p: (2, ANY),
        r: (2, ANY),
        n_min: 1,
        n_max: NMax::Fixed(1),
        note: "at n = 1 both cubes are K2 for every p and r",
    },
    KnownDiscrepancy {
        id: "size-recursion-i-p1",
        claim_id: "size-recursion-i",
        family: Some(Family::I),
        p: (1, 1),
        r: (3, ANY),
        n_min: 0,
        n_max: NMax::Unbounded,
        note: "with p = 1 the blocks 1^t 0 V and 1^t' 0 V are joined by edges also when |t - t'| > 1, which the count leaves out",
    },
    KnownDiscrepancy {
        id: "diameter-2-7-16",
        claim_id: "diameter-i-examples",
        family: Some(Family::I),
        p: (2, 2),
        r: (7, 7),
        n_min: 16,
        n_max: NMax::Fixed(16),
        note: "BFS diameter is 18, not the lower bound 17; the example pair itself is at distance 18 = 16 + 1 + 1",
    },
];

/// The register entry excusing a failure of `claim_id` at `params`, if any.
pub fn lookup(claim_id: &str, params: &CubeParams) -> Option<&'static KnownDiscrepancy> {
    KNOWN_DISCREPANCIES
        .iter()
        .find(|d| d.covers(claim_id, params))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        let at = |f, p, r, n| CubeParams::new(f, p, r, n).unwrap();
        assert_eq!(
            lookup("phi-table", &at(Family::O, 2, 2, 11)).unwrap().id,
            "phi-2-2-11"
        );
        assert!(lookup("phi-table", &at(Family::O, 2, 2, 10)).is_none());
        assert!(lookup("order-comparison", &at(Family::O, 3, 2, 4)).is_some());
        assert!(lookup("order-comparison", &at(Family::O, 3, 2, 5)).is_none());
        assert!(lookup("order-comparison", &at(Family::O, 3, 2, 1)).is_none());
        assert!(lookup("size-recursion-i", &at(Family::I, 1, 4, 9)).is_some());
        assert!(lookup("size-recursion-i", &at(Family::I, 1, 2, 9)).is_none());
    }
}
