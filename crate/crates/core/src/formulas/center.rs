use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::word::{low_mask, Word};

/// Radius of the O-cube: `ceil(nr / (r + 1))` for `p = 1`, else
/// `ceil(nr / (pr + 1))`.
pub fn radius_o(p: u32, r: u32, n: u32) -> u32 {
    let den = if p == 1 { r + 1 } else { p * r + 1 };
    (n * r).div_ceil(den)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CountMethod {
    /// The center is `{0^n}`.
    Singleton,
    /// Count from the polynomial fitted through the Vandermonde system.
    Vandermonde,
    /// Count from `(floor(n / (pr + 1)) + 1)(k + 1) + 1`.
    ClosedForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterResult {
    /// Sorted center words.
    pub center: Vec<Word>,
    /// The count from `count_method`, already checked against `center.len()`.
    pub count: u64,
    pub count_method: CountMethod,
}

/// Center of the O-cube, built constructively, with its size checked against
/// an independent count.
///
/// For `p = 1` and `k = n mod (r + 1) > 0` the center grows from `V(Q_k)` by
/// repeated [`vee_step`]. For `p >= 2` and `n mod (pr + 1) = kp + 1` it grows
/// from `{0^m} U {e_0, e_p, ..., e_kp}` by wrapping each word in `0^{pr+1}` on
/// either side. Everything else has the singleton center `{0^n}`.
pub fn center_o(p: u32, r: u32, n: u32) -> Result<CenterResult, Error> {
    if p == 0 || r == 0 {
        return Err(Error::Contract("p and r must be positive"));
    }
    let singleton = || -> Result<CenterResult, Error> {
        Ok(CenterResult {
            center: vec![Word::zeros(n as usize)?],
            count: 1,
            count_method: CountMethod::Singleton,
        })
    };
    if p == 1 {
        let k = n % (r + 1);
        if k == 0 {
            return singleton();
        }
        let mut set = hypercube(k as usize);
        for _ in 0..n / (r + 1) {
            set = vee_step(&set, r as usize)?;
        }
        let coeffs = vandermonde_coefficients(r, k)?;
        let count = eval_integer(&coeffs, n.div_ceil(r + 1) as i128)?;
        return finish(set, count, CountMethod::Vandermonde);
    }
    let period = p * r + 1;
    let m = n % period;
    if m == 0 || (m - 1) % p != 0 {
        return singleton();
    }
    let k = (m - 1) / p;
    let m = m as usize;
    let mut set: BTreeSet<Word> = BTreeSet::new();
    set.insert(Word::zeros(m)?);
    for j in 0..=k as usize {
        set.insert(Word::zeros(m)?.flip(j * p as usize));
    }
    let pad = Word::zeros(period as usize)?;
    for _ in 0..n / period {
        let mut next = BTreeSet::new();
        for c in &set {
            next.insert(pad.concat(c)?);
            next.insert(c.concat(&pad)?);
        }
        set = next;
    }
    let count = (n / period + 1) as i128 * (k + 1) as i128 + 1;
    finish(set, count, CountMethod::ClosedForm)
}

fn finish(set: BTreeSet<Word>, count: i128, method: CountMethod) -> Result<CenterResult, Error> {
    if count != set.len() as i128 {
        return Err(Error::FormulaViolation {
            what: "center count",
            constructed: set.len() as u64,
            formula: count,
        });
    }
    Ok(CenterResult {
        center: set.into_iter().collect(),
        count: count as u64,
        count_method: method,
    })
}

fn hypercube(k: usize) -> BTreeSet<Word> {
    (0..=low_mask(k))
        .map(|bits| Word::from_bits_unchecked(bits, k))
        .collect()
}

/// One insertion step: each word `c` yields `0^{r+1} c` and, for every
/// position holding a 1, `c` with `0^{r+1}` inserted right after it.
pub fn vee_step(set: &BTreeSet<Word>, r: usize) -> Result<BTreeSet<Word>, Error> {
    let pad = Word::zeros(r + 1)?;
    let mut out = BTreeSet::new();
    for c in set {
        out.insert(c.insert(0, &pad)?);
        for i in 0..c.len() {
            if c.bit(i) {
                out.insert(c.insert(i + 1, &pad)?);
            }
        }
    }
    Ok(out)
}

/// Coefficients `x_0..x_k` (highest degree first) of the polynomial through
/// the center counts at `n = k + j(r + 1)`, `j = 0..=k`, evaluated at
/// `i = j + 1 = ceil(n / (r + 1))`. The right-hand side comes from explicit
/// iteration of [`vee_step`].
pub fn vandermonde_coefficients(r: u32, k: u32) -> Result<Vec<Ratio<i128>>, Error> {
    if k == 0 || k > r {
        return Err(Error::Contract("need 1 <= k <= r"));
    }
    let size = k as usize + 1;
    let mut b = Vec::with_capacity(size);
    let mut set = hypercube(k as usize);
    for j in 0..size {
        if j > 0 {
            set = vee_step(&set, r as usize)?;
        }
        b.push(Ratio::from_integer(set.len() as i128));
    }
    let a: Vec<Vec<Ratio<i128>>> = (1..=size as i128)
        .map(|i| {
            (0..size)
                .map(|col| Ratio::from_integer(i.pow((size - 1 - col) as u32)))
                .collect()
        })
        .collect();
    solve(a, b)
}

/// Gaussian elimination over the rationals. The matrix must be nonsingular.
fn solve(mut a: Vec<Vec<Ratio<i128>>>, mut b: Vec<Ratio<i128>>) -> Result<Vec<Ratio<i128>>, Error> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&row| !a[row][col].is_zero())
            .ok_or(Error::Contract("singular system"))?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in 0..n {
            if row == col || a[row][col].is_zero() {
                continue;
            }
            let f = a[row][col] / a[col][col];
            let pivot_row = a[col].clone();
            for (x, &y) in a[row][col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= f * y;
            }
            let delta = f * b[col];
            b[row] -= delta;
        }
    }
    Ok((0..n).map(|i| b[i] / a[i][i]).collect())
}

fn eval_integer(coeffs: &[Ratio<i128>], x: i128) -> Result<i128, Error> {
    let x = Ratio::from_integer(x);
    let v = coeffs
        .iter()
        .fold(Ratio::<i128>::zero(), |acc, c| acc * x + c);
    if v.denom() != &i128::one() {
        return Err(Error::Contract("center count polynomial is not integral"));
    }
    Ok(v.to_integer())
}
