//! Algebraic expected utility (AEU) over plausibility measures valued in a
//! semiring.
//!
//! The crate is `no_std` and only needs `alloc`. It is organised bottom-up:
//!
//! * [`semiring`]: the [`Semiring`] interface, the shipped instances
//!   (probability, quantitative and qualitative possibility, kappa rankings,
//!   lexicographic probability, products) and the law checker.
//! * [`binary`]: the binary scale of pairs `<a, b>` with `a + b = 1`, its order
//!   and the extended operators.
//! * [`lottery`] and [`measure`]: simple and compound lotteries, reduction,
//!   plausibility measures and the lotteries induced by acts.
//! * [`aeu`]: evaluation, comparison, backward-induction folding, the autodual
//!   measure, attitude shifts and elicitation.
//! * [`lab`]: exhaustive or seeded checkers for the two axiom systems, the
//!   solvability conditions and the witness constructions behind them.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod aeu;
pub mod binary;
mod comparison;
mod error;
pub mod lab;
pub mod lottery;
pub mod measure;
pub mod semiring;

pub use crate::aeu::{
    aeu_compare, aeu_eval, aeu_fold, elicit_binary_equivalent, shift_utility, sigma_measure, ShiftDirection,
    UtilityAssignment,
};
pub use crate::binary::{compare2, pair_add, scalar_mul, solve_scale, BinaryValue, PairValue};
pub use crate::comparison::Comparison;
pub use crate::error::Error;
pub use crate::lottery::{Branch, ConsequenceSpace, Lottery};
pub use crate::measure::{Act, PlausibilityMeasure};
pub use crate::semiring::{Carrier, Descriptor, Rank, SampleConfig, Semiring, Value};

/// Exact nonnegative rationals used by the probabilistic carriers.
pub type Rational = num_rational::BigRational;

pub type Result<T, E = Error> = core::result::Result<T, E>;
