//! Canonical benchmark inputs shared by the criterion harness and anything
//! else that wants the same grid.

use fibmul_core::SeqIndex;

/// Index pairs for the strategy comparison: a mid-size inner index, a large
/// inner index with a small multiplier, and the transposed shape where the
/// multiplier dominates.
pub const BENCH_CASES: [(SeqIndex, SeqIndex); 3] = [(100, 10), (1000, 5), (10, 100)];
