//! Exact multiple-index Fibonacci, Lucas, and generalized Fibonacci terms.
//!
//! F(n*m), L(n*m), and G(n*m) are evaluated as binomial sums in powers of
//! L(n), entirely in arbitrary-precision integer arithmetic, and verified
//! against independently implemented oracles (iterative recurrences and fast
//! doubling) over exhaustive index grids.
//!
//! Module layout:
//!
//! - [`sequences`]: the oracles F, L, G by recurrence and by fast doubling
//! - [`binomial`]: binomial coefficients and the power-sum evaluators in
//!   (S, P)
//! - [`identities`]: the multiple-index identities, the d'Ocagne residual,
//!   and term-by-term breakdown tables
//! - [`verify`]: grid sweeps, strategy benchmarks, and report rendering

pub mod binomial;
pub mod error;
pub mod identities;
pub mod sequences;
pub mod verify;

pub use binomial::{
    binomial, waring_coeff, waring_diff_poly, waring_sum_poly, BinomialCache, WaringArguments,
};
pub use error::{Error, Result};
pub use identities::{
    docagne_residual, fib_multiple, fib_multiple_table, gen_multiple, gen_multiple_table,
    lucas_multiple, lucas_multiple_table, sign_factor, standard_seeds, DocagnePair,
    MultipleIndexQuery, SumPart, TableTerm, TheoremTable,
};
pub use sequences::{
    fib, fib_fast_doubling, gen_fib, gen_fib_decompose, lucas, GeneralizedSeed, SeqIndex, SeqValue,
};
pub use verify::{
    bench_compare, report_render, sweep_verify, BenchRecord, Counterexample, OutputFormat,
    ReportBody, Strategy, SweepConfig, Target, TargetSummary, VerificationReport,
};
