//! Exact binomial coefficients and the two power-sum evaluators.
//!
//! For roots x, y with sum `S = x + y` and product `P = x * y`, the power
//! sums have integer polynomial expansions in S and P:
//!
//! ```text
//! (x^m - y^m)/(x - y) = sum_{i=0..(m-1)/2} (-1)^i C(m-1-i, i) S^(m-1-2i) P^i
//! x^m + y^m          = sum_{i=0..m/2}     (-1)^i (m/(m-i)) C(m-i, i) S^(m-2i) P^i
//! ```
//!
//! Everything here stays in integer arithmetic; the fractional-looking
//! coefficient m/(m-i)*C(m-i,i) is computed as C(m-i,i) + C(m-i-1,i-1).

use std::sync::{LazyLock, RwLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequences::{decimal, SeqIndex, SeqValue};

/// Inputs to the power-sum evaluators: sum `S`, product `P`, and power `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WaringArguments {
    #[serde(with = "decimal")]
    pub s: SeqValue,
    #[serde(with = "decimal")]
    pub p: SeqValue,
    pub m: SeqIndex,
}

impl WaringArguments {
    pub fn new(s: impl Into<SeqValue>, p: impl Into<SeqValue>, m: SeqIndex) -> Self {
        Self {
            s: s.into(),
            p: p.into(),
            m,
        }
    }
}

/// Rows above this index are never cached; coefficients there fall back to
/// the multiplicative formula. Bounds cache memory regardless of how large a
/// power a caller asks for.
const MAX_CACHED_ROW: usize = 512;

/// Pascal-triangle rows grown on demand. A completed row is never mutated,
/// so any number of concurrent readers see the same values a serial caller
/// would.
pub struct BinomialCache {
    rows: RwLock<Vec<Vec<SeqValue>>>,
}

impl BinomialCache {
    pub fn new() -> Self {
        Self {
            rows: RwLock::new(vec![vec![SeqValue::one()]]),
        }
    }

    /// Largest row index currently materialized.
    pub fn max_n(&self) -> SeqIndex {
        (self.rows.read().unwrap().len() - 1) as SeqIndex
    }

    /// `C(n, k)`, with value 0 for `k` outside `0..=n`.
    pub fn get(&self, n: SeqIndex, k: SeqIndex) -> Result<SeqValue> {
        if n < 0 {
            return Err(Error::NegativeN(n));
        }
        if k < 0 || k > n {
            return Ok(SeqValue::zero());
        }
        let (n, k) = (n as usize, k as usize);
        if n > MAX_CACHED_ROW {
            return Ok(choose_product(n as u64, k as u64));
        }
        {
            let rows = self.rows.read().unwrap();
            if let Some(row) = rows.get(n) {
                return Ok(row[k].clone());
            }
        }
        let mut rows = self.rows.write().unwrap();
        while rows.len() <= n {
            let next = {
                let prev = rows.last().expect("row 0 is always present");
                let mut next = Vec::with_capacity(prev.len() + 1);
                next.push(SeqValue::one());
                next.extend(prev.windows(2).map(|w| &w[0] + &w[1]));
                next.push(SeqValue::one());
                next
            };
            rows.push(next);
        }
        Ok(rows[n][k].clone())
    }
}

impl Default for BinomialCache {
    fn default() -> Self {
        Self::new()
    }
}

static SHARED: LazyLock<BinomialCache> = LazyLock::new(BinomialCache::new);

/// `C(n, k)` through the process-wide cache. Returns 0 when `k` is outside
/// `0..=n`; rejects negative `n`.
pub fn binomial(n: SeqIndex, k: SeqIndex) -> Result<SeqValue> {
    SHARED.get(n, k)
}

/// `C(n, k)` as a falling-factorial product. Each partial product
/// `C(n-k+j, j)` is itself a binomial coefficient, so every division is
/// exact.
fn choose_product(n: u64, k: u64) -> SeqValue {
    let k = k.min(n - k);
    let mut acc = SeqValue::one();
    for j in 1..=k {
        acc = acc * SeqValue::from(n - k + j) / SeqValue::from(j);
    }
    acc
}

/// The integer coefficient `m/(m-i) * C(m-i, i)` of the sum expansion,
/// computed as `C(m-i, i) + C(m-i-1, i-1)` to avoid rational arithmetic.
pub fn waring_coeff(m: SeqIndex, i: SeqIndex) -> Result<SeqValue> {
    if m < 1 {
        return Err(Error::InvalidPower(m));
    }
    if i < 0 || i > m / 2 {
        return Err(Error::IndexOutOfRange { m, i });
    }
    // The second binomial is 0 at i = 0 by the out-of-range convention.
    Ok(binomial(m - i, i)? + binomial(m - i - 1, i - 1)?)
}

/// `(x^m - y^m)/(x - y)` as a polynomial in `S = x+y`, `P = xy`. Requires
/// `m >= 1`.
pub fn waring_diff_poly(args: &WaringArguments) -> Result<SeqValue> {
    let m = args.m;
    if m < 1 {
        return Err(Error::InvalidPower(m));
    }
    alternating_sum(&args.s, &args.p, m - 1, |i| binomial(m - 1 - i, i))
}

/// `x^m + y^m` as a polynomial in `S = x+y`, `P = xy`. Requires `m >= 1`.
pub fn waring_sum_poly(args: &WaringArguments) -> Result<SeqValue> {
    let m = args.m;
    if m < 1 {
        return Err(Error::InvalidPower(m));
    }
    alternating_sum(&args.s, &args.p, m, |i| waring_coeff(m, i))
}

/// `sum_{i=0..top/2} (-1)^i coeff(i) S^(top-2i) P^i`.
///
/// P powers are precomputed ascending (so P = 0 needs no special case and
/// S^0 = P^0 = 1 falls out); S powers grow by S^2 per step as `i` descends.
/// Total cost is O(top) big-integer multiplications.
fn alternating_sum(
    s: &SeqValue,
    p: &SeqValue,
    top: SeqIndex,
    coeff: impl Fn(SeqIndex) -> Result<SeqValue>,
) -> Result<SeqValue> {
    let i_max = top / 2;
    let mut p_powers = Vec::with_capacity(i_max as usize + 1);
    p_powers.push(SeqValue::one());
    for _ in 0..i_max {
        let next = p_powers.last().unwrap() * p;
        p_powers.push(next);
    }
    let s_squared = s * s;
    // The lowest S exponent, top - 2*i_max, is 0 or 1.
    let mut s_pow = if top % 2 == 0 {
        SeqValue::one()
    } else {
        s.clone()
    };
    let mut total = SeqValue::zero();
    for i in (0..=i_max).rev() {
        let term = coeff(i)? * &s_pow * &p_powers[i as usize];
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        if i > 0 {
            s_pow *= &s_squared;
        }
    }
    Ok(total)
}
