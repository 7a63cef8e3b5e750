//! Ground-truth sequence oracles.
//!
//! Two independent evaluation paths are kept deliberately separate: the
//! iterative recurrence (`fib`, `lucas`, `gen_fib`) and logarithmic fast
//! doubling (`fib_fast_doubling`). Tests and sweeps compare one against the
//! other, so neither may be implemented in terms of the other.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sequence index. Negative Fibonacci/Lucas indices follow the unique
/// extension preserving the recurrence: `F(-k) = (-1)^(k+1) F(k)` and
/// `L(-k) = (-1)^k L(k)`.
pub type SeqIndex = i64;

/// Sequence value: exact arbitrary-precision signed integer.
pub type SeqValue = BigInt;

pub(crate) mod decimal {
    //! Serde adapter rendering big integers as plain decimal strings.
    use num_bigint::BigInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(value: &BigInt, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(de)?;
        BigInt::from_str(&text).map_err(D::Error::custom)
    }
}

/// Initial conditions `(G0, G1)` of a generalized Fibonacci sequence.
/// Any pair of integers is valid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralizedSeed {
    #[serde(with = "decimal")]
    pub g0: SeqValue,
    #[serde(with = "decimal")]
    pub g1: SeqValue,
}

impl GeneralizedSeed {
    pub fn new(g0: impl Into<SeqValue>, g1: impl Into<SeqValue>) -> Self {
        Self {
            g0: g0.into(),
            g1: g1.into(),
        }
    }

    /// Seed `(0, 1)`: reproduces the Fibonacci numbers.
    pub fn fibonacci() -> Self {
        Self::new(0, 1)
    }

    /// Seed `(2, 1)`: reproduces the Lucas numbers.
    pub fn lucas() -> Self {
        Self::new(2, 1)
    }
}

impl From<(i64, i64)> for GeneralizedSeed {
    fn from((g0, g1): (i64, i64)) -> Self {
        Self::new(g0, g1)
    }
}

/// `F(k)` by the iterative recurrence, for any integer `k`.
pub fn fib(k: SeqIndex) -> SeqValue {
    let magnitude = fib_iterative(k.unsigned_abs());
    // F(-j) = (-1)^(j+1) F(j): flip the sign when j is even.
    if k < 0 && k % 2 == 0 {
        -magnitude
    } else {
        magnitude
    }
}

/// `L(k)` by the iterative recurrence, for any integer `k`.
pub fn lucas(k: SeqIndex) -> SeqValue {
    let magnitude = iterate_recurrence(BigInt::from(2), BigInt::one(), k.unsigned_abs());
    // L(-j) = (-1)^j L(j): flip the sign when j is odd.
    if k < 0 && k % 2 != 0 {
        -magnitude
    } else {
        magnitude
    }
}

/// `G(k)` for the given seed, `k >= 0` only.
pub fn gen_fib(seed: &GeneralizedSeed, k: SeqIndex) -> Result<SeqValue> {
    if k < 0 {
        return Err(Error::NegativeIndexUnsupported { k, min: 0 });
    }
    Ok(iterate_recurrence(
        seed.g0.clone(),
        seed.g1.clone(),
        k as u64,
    ))
}

/// `G(k)` expressed through base Fibonacci numbers as `G1*F(k) + G0*F(k-1)`,
/// computed from `fib` rather than the recurrence. Requires `k >= 1`.
pub fn gen_fib_decompose(seed: &GeneralizedSeed, k: SeqIndex) -> Result<SeqValue> {
    if k < 1 {
        return Err(Error::NegativeIndexUnsupported { k, min: 1 });
    }
    Ok(&seed.g1 * fib(k) + &seed.g0 * fib(k - 1))
}

/// `F(k)` by fast doubling: `O(log |k|)` big-integer multiplications.
///
/// Agrees with [`fib`] on every integer, including the negative extension.
pub fn fib_fast_doubling(k: SeqIndex) -> SeqValue {
    let (magnitude, _) = fib_pair(k.unsigned_abs());
    if k < 0 && k % 2 == 0 {
        -magnitude
    } else {
        magnitude
    }
}

/// `(F(j), F(j+1))` by binary descent over the bits of `j`, using
/// `F(2t) = F(t) * (2*F(t+1) - F(t))` and `F(2t+1) = F(t)^2 + F(t+1)^2`.
pub(crate) fn fib_pair(j: u64) -> (BigInt, BigInt) {
    let mut f = BigInt::zero(); // F(0)
    let mut f_next = BigInt::one(); // F(1)
    if j == 0 {
        return (f, f_next);
    }
    let bits = u64::BITS - j.leading_zeros();
    for shift in (0..bits).rev() {
        let doubled = &f * ((&f_next << 1u32) - &f);
        let doubled_next = &f * &f + &f_next * &f_next;
        if (j >> shift) & 1 == 1 {
            f_next = &doubled + &doubled_next;
            f = doubled_next;
        } else {
            f = doubled;
            f_next = doubled_next;
        }
    }
    (f, f_next)
}

fn fib_iterative(j: u64) -> BigInt {
    iterate_recurrence(BigInt::zero(), BigInt::one(), j)
}

/// Runs `a, b -> b, a + b` for `steps` iterations and returns the first value.
fn iterate_recurrence(mut a: BigInt, mut b: BigInt, steps: u64) -> BigInt {
    for _ in 0..steps {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}
