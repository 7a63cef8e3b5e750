//! Multiple-index identities: F(n*m), L(n*m), and G(n*m) as binomial sums in
//! powers of L(n), plus the d'Ocagne residual.
//!
//! Every evaluator here is an independent evidence path: none may call an
//! oracle at index n*m. They reach core_sequences only for the small-index
//! inputs F(n), L(n), G(n), G(0), and they step binomial diagonals
//! incrementally instead of going through the shared Pascal cache, so a
//! sweep comparing them against the oracles exercises disjoint code.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::binomial::{binomial, waring_coeff};
use crate::error::{Error, Result};
use crate::sequences::{decimal, fib, gen_fib, lucas, GeneralizedSeed, SeqIndex, SeqValue};

/// Index pair (n, m) of a multiple-index query; the identities require
/// n >= 1 and m >= 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipleIndexQuery {
    pub n: SeqIndex,
    pub m: SeqIndex,
}

impl MultipleIndexQuery {
    pub fn new(n: SeqIndex, m: SeqIndex) -> Self {
        Self { n, m }
    }

    fn check(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::DomainError(format!(
                "inner index must be positive, got n = {}",
                self.n
            )));
        }
        if self.m < 1 {
            return Err(Error::DomainError(format!(
                "multiplier must be positive, got m = {}",
                self.m
            )));
        }
        Ok(())
    }
}

/// Index pair (a, b) for the d'Ocagne residual; any integers are valid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocagnePair {
    pub a: SeqIndex,
    pub b: SeqIndex,
}

impl DocagnePair {
    pub fn new(a: SeqIndex, b: SeqIndex) -> Self {
        Self { a, b }
    }
}

/// `(-1)^(i(n+1))` as a sequence value.
pub fn sign_factor(i: SeqIndex, n: SeqIndex) -> SeqValue {
    SeqValue::from(sign_of(i, n))
}

/// Sign of `(-1)^(i(n+1))` as a machine integer: -1 exactly when i is odd
/// and n is even. Parity-only, so no exponent is ever formed.
fn sign_of(i: SeqIndex, n: SeqIndex) -> i64 {
    if i.rem_euclid(2) == 1 && n.rem_euclid(2) == 0 {
        -1
    } else {
        1
    }
}

/// Walks the binomial diagonal D(i) = C(a-i, i) downward in i by exact
/// integer updates. Never touches the Pascal cache, and costs O(1) per step,
/// so evaluators scale to powers far beyond any sensible table size.
struct DiagonalCoeff {
    a: SeqIndex,
    i: SeqIndex,
    value: SeqValue,
}

impl DiagonalCoeff {
    /// Positioned at the top index i = a/2, where C(a-i, i) is 1 for even a
    /// and (a+1)/2 for odd a.
    fn at_top(a: SeqIndex) -> Self {
        debug_assert!(a >= 0);
        let value = if a % 2 == 0 {
            SeqValue::one()
        } else {
            SeqValue::from((a + 1) / 2)
        };
        Self { a, i: a / 2, value }
    }

    /// Moves from i to i-1 via
    /// C(a-i+1, i-1) = C(a-i, i) * i*(a-i+1) / ((a-2i+1)(a-2i+2)).
    /// Both sides are binomial coefficients, so the division is exact.
    fn step_down(&mut self) {
        let (a, i) = (self.a, self.i);
        debug_assert!(i >= 1);
        let numer = SeqValue::from(i) * SeqValue::from(a - i + 1);
        let denom = SeqValue::from(a - 2 * i + 1) * SeqValue::from(a - 2 * i + 2);
        let scaled = &self.value * numer;
        debug_assert!((&scaled % &denom).is_zero());
        self.value = scaled / denom;
        self.i -= 1;
    }
}

/// `sum_{i=0}^{a/2} C(a-i, i) * base^(a-2i) * (-1)^((i+sign_shift)(n+1))`.
///
/// All three theorem sums reduce to this shape: the shifted coefficients
/// C(m-1-i, i-1) become the a = m-2 diagonal under i -> i+1, which is where
/// `sign_shift = 1` comes from.
fn diagonal_lucas_sum(base: &SeqValue, a: SeqIndex, sign_shift: SeqIndex, n: SeqIndex) -> SeqValue {
    let mut coeff = DiagonalCoeff::at_top(a);
    // Iterating i downward makes the base exponent a-2i ascend from 0 or 1,
    // so one multiplication by base^2 per step covers all powers.
    let base_squared = base * base;
    let mut base_pow = if a % 2 == 0 {
        SeqValue::one()
    } else {
        base.clone()
    };
    let mut total = SeqValue::zero();
    loop {
        let i = coeff.i;
        let term = &coeff.value * &base_pow * sign_factor(i + sign_shift, n);
        // Odd n makes every sign positive, so terms are nonnegative and the
        // partial sums monotone.
        debug_assert!(n % 2 == 0 || !term.is_negative());
        total += term;
        if i == 0 {
            break;
        }
        base_pow *= &base_squared;
        coeff.step_down();
    }
    total
}

/// `F(n*m) = F(n) * sum_{i=0}^{(m-1)/2} C(m-1-i, i) L(n)^(m-1-2i) (-1)^(i(n+1))`.
pub fn fib_multiple(q: &MultipleIndexQuery) -> Result<SeqValue> {
    q.check()?;
    let sum = diagonal_lucas_sum(&lucas(q.n), q.m - 1, 0, q.n);
    Ok(fib(q.n) * sum)
}

/// `L(n*m) = sum_{i=0}^{m/2} (m/(m-i)) C(m-i, i) L(n)^(m-2i) (-1)^(i(n+1))`.
pub fn lucas_multiple(q: &MultipleIndexQuery) -> Result<SeqValue> {
    q.check()?;
    let base = lucas(q.n);
    // The coefficient splits as C(m-i,i) + C(m-1-i,i-1); the second piece is
    // the a = m-2 diagonal with its sign index shifted by one.
    let mut total = diagonal_lucas_sum(&base, q.m, 0, q.n);
    if q.m >= 2 {
        total += diagonal_lucas_sum(&base, q.m - 2, 1, q.n);
    }
    Ok(total)
}

/// `G(n*m) = G(n) * sum_{i=0}^{(m-1)/2} C(m-1-i, i) L(n)^(m-2i-1) (-1)^(i(n+1))
///         + G(0) * sum_{i=1}^{m/2} C(m-1-i, i-1) L(n)^(m-2i) (-1)^(i(n+1))`.
///
/// At m = 1 the second sum is empty and the value is G(n).
pub fn gen_multiple(seed: &GeneralizedSeed, q: &MultipleIndexQuery) -> Result<SeqValue> {
    q.check()?;
    let base = lucas(q.n);
    let mut total = gen_fib(seed, q.n)? * diagonal_lucas_sum(&base, q.m - 1, 0, q.n);
    if q.m >= 2 {
        total += &seed.g0 * diagonal_lucas_sum(&base, q.m - 2, 1, q.n);
    }
    Ok(total)
}

/// `F(a)F(b-1) - F(a-1)F(b) - (-1)^(a+1) F(b-a)`; zero for every integer
/// pair under the negative-index extension.
pub fn docagne_residual(pair: &DocagnePair) -> SeqValue {
    let DocagnePair { a, b } = *pair;
    let lhs = fib(a) * fib(b - 1) - fib(a - 1) * fib(b);
    let rhs = if a.rem_euclid(2) == 1 {
        fib(b - a)
    } else {
        -fib(b - a)
    };
    lhs - rhs
}

/// Built-in seed set for sweeps: the two named sequences plus repeated,
/// negative, and degenerate initial conditions.
pub fn standard_seeds() -> Vec<GeneralizedSeed> {
    [(0, 1), (2, 1), (1, 1), (3, -5), (-2, 7), (0, 0)]
        .into_iter()
        .map(GeneralizedSeed::from)
        .collect()
}

/// One summand of a theorem sum, with the front factor already folded in so
/// that term values across all parts add up to the identity's value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableTerm {
    pub i: SeqIndex,
    #[serde(with = "decimal")]
    pub coefficient: SeqValue,
    pub lucas_power: SeqIndex,
    pub sign: i64,
    #[serde(with = "decimal")]
    pub value: SeqValue,
}

/// One sum of a theorem (Theorem 3 has two), scaled by its front factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumPart {
    pub scale_label: String,
    #[serde(with = "decimal")]
    pub scale: SeqValue,
    pub terms: Vec<TableTerm>,
    #[serde(with = "decimal")]
    pub subtotal: SeqValue,
}

/// Term-by-term breakdown of one theorem evaluation; `total` equals the
/// corresponding `*_multiple` value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremTable {
    pub theorem: u8,
    pub n: SeqIndex,
    pub m: SeqIndex,
    #[serde(with = "decimal")]
    pub lucas_base: SeqValue,
    pub parts: Vec<SumPart>,
    #[serde(with = "decimal")]
    pub total: SeqValue,
}

/// Builds one scaled sum from explicit (index, coefficient, power) triples.
/// Coefficients come from the Pascal cache here, deliberately not from the
/// diagonal walker the evaluators use, so tables cross-check the evaluators.
fn sum_part(
    scale_label: &str,
    scale: SeqValue,
    base: &SeqValue,
    n: SeqIndex,
    rows: impl Iterator<Item = (SeqIndex, SeqValue, SeqIndex)>,
) -> Result<SumPart> {
    let mut terms = Vec::new();
    let mut subtotal = SeqValue::zero();
    for (i, coefficient, lucas_power) in rows {
        let exponent = u32::try_from(lucas_power)
            .map_err(|_| Error::DomainError(format!("Lucas power {lucas_power} too large")))?;
        let sign = sign_of(i, n);
        let value = &scale * &coefficient * base.pow(exponent) * SeqValue::from(sign);
        subtotal += &value;
        terms.push(TableTerm {
            i,
            coefficient,
            lucas_power,
            sign,
            value,
        });
    }
    Ok(SumPart {
        scale_label: scale_label.to_string(),
        scale,
        terms,
        subtotal,
    })
}

/// Summand breakdown of the F(n*m) identity.
pub fn fib_multiple_table(q: &MultipleIndexQuery) -> Result<TheoremTable> {
    q.check()?;
    let (n, m) = (q.n, q.m);
    let base = lucas(n);
    let rows = (0..=(m - 1) / 2)
        .map(|i| Ok((i, binomial(m - 1 - i, i)?, m - 1 - 2 * i)))
        .collect::<Result<Vec<_>>>()?;
    let part = sum_part(&format!("F({n})"), fib(n), &base, n, rows.into_iter())?;
    let total = part.subtotal.clone();
    Ok(TheoremTable {
        theorem: 1,
        n,
        m,
        lucas_base: base,
        parts: vec![part],
        total,
    })
}

/// Summand breakdown of the L(n*m) identity.
pub fn lucas_multiple_table(q: &MultipleIndexQuery) -> Result<TheoremTable> {
    q.check()?;
    let (n, m) = (q.n, q.m);
    let base = lucas(n);
    let rows = (0..=m / 2)
        .map(|i| Ok((i, waring_coeff(m, i)?, m - 2 * i)))
        .collect::<Result<Vec<_>>>()?;
    let part = sum_part("1", SeqValue::one(), &base, n, rows.into_iter())?;
    let total = part.subtotal.clone();
    Ok(TheoremTable {
        theorem: 2,
        n,
        m,
        lucas_base: base,
        parts: vec![part],
        total,
    })
}

/// Summand breakdown of the G(n*m) identity: the G(n)-scaled sum followed by
/// the G(0)-scaled sum (empty at m = 1).
pub fn gen_multiple_table(seed: &GeneralizedSeed, q: &MultipleIndexQuery) -> Result<TheoremTable> {
    q.check()?;
    let (n, m) = (q.n, q.m);
    let base = lucas(n);
    let first_rows = (0..=(m - 1) / 2)
        .map(|i| Ok((i, binomial(m - 1 - i, i)?, m - 2 * i - 1)))
        .collect::<Result<Vec<_>>>()?;
    let second_rows = (1..=m / 2)
        .map(|i| Ok((i, binomial(m - 1 - i, i - 1)?, m - 2 * i)))
        .collect::<Result<Vec<_>>>()?;
    let first = sum_part(
        &format!("G({n})"),
        gen_fib(seed, n)?,
        &base,
        n,
        first_rows.into_iter(),
    )?;
    let second = sum_part("G(0)", seed.g0.clone(), &base, n, second_rows.into_iter())?;
    let total = &first.subtotal + &second.subtotal;
    Ok(TheoremTable {
        theorem: 3,
        n,
        m,
        lucas_base: base,
        parts: vec![first, second],
        total,
    })
}
