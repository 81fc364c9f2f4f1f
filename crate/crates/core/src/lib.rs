//! Arithmetic of periodic-orbit counts.
//!
//! A sequence of non-negative integers `a_1, a_2, …` is *exactly realizable*
//! when some map has exactly `a_n` points fixed by its `n`-th iterate. This
//! crate provides the transforms between periodic-point and orbit counts, a
//! realizability checker with witnesses, a permutation oracle, generators for
//! classical dynamical families, a classifier for binary recurrences, closure
//! operations, and growth-rate constructions.
//!
//! Sequence operations are generic over [`Scalar`]; `BigInt` is the default
//! and the aliases below fix it.

pub mod algebra;
pub mod arith;
pub mod generators;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod rategrowth;
pub mod recurrence;
pub mod scalar;
pub mod transforms;

pub use num_bigint::BigInt;

pub use arith::Rational;
pub use io::{parse_sequence, render_sequence, Format, ParseError};
pub use matrix::IntMatrix;
pub use scalar::Scalar;
pub use transforms::{
    check_er, column, divisor_sum, iterate_per, least_period_counts, orbit_transform, per_transform, ErVerdict,
    FailReason, OrbitError, Seq, TransformError, Witness,
};

/// Arbitrary-precision sequence, the default everywhere.
pub type Sequence = Seq<BigInt>;
pub type Verdict = ErVerdict<BigInt>;
pub type ErWitness = Witness<BigInt>;
