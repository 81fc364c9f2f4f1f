//! Sequences and the transforms between periodic-point counts and orbit counts.
//!
//! For a map with `orb_d` orbits of length `d`, the number of points fixed by
//! the `n`-th iterate is `per_n = Σ_{d|n} d·orb_d`. Möbius inversion recovers
//! the number of points of least period `n`, `f*_n = Σ_{d|n} μ(n/d)·per_d`,
//! and a sequence is exactly realizable precisely when every `f*_n` is
//! non-negative and divisible by `n`.
//!
//! All verdicts concern the finite prefix supplied: a pass means the prefix is
//! consistent with exact realizability up to its length, nothing more.

use std::fmt;
use std::ops::Index;

use thiserror::Error;

use crate::arith::mobius_table;
use crate::scalar::{from_index, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("sequence must have at least one term")]
    Empty,
    #[error("term {index} is negative")]
    Negative { index: usize },
    #[error("arithmetic overflow at index {index}")]
    Overflow { index: usize },
    #[error("sequence lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("step count must be at least 1")]
    ZeroSteps,
}

/// A finite, 1-indexed prefix `a_1, …, a_N` with `N >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seq<T> {
    terms: Vec<T>,
}

impl<T> Seq<T> {
    pub fn new(terms: Vec<T>) -> Result<Self, TransformError> {
        if terms.is_empty() {
            return Err(TransformError::Empty);
        }
        Ok(Self { terms })
    }

    /// Builds `a_n = f(n)` for `n = 1..=len`.
    pub fn from_fn(len: usize, f: impl FnMut(usize) -> T) -> Result<Self, TransformError> {
        Self::new((1..=len).map(f).collect())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Always false; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The `n`-th term (1-indexed).
    pub fn get(&self, n: usize) -> Option<&T> {
        n.checked_sub(1).and_then(|i| self.terms.get(i))
    }

    pub fn terms(&self) -> &[T] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<T> {
        self.terms
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.terms.iter()
    }

    /// `(n, a_n)` pairs starting at `n = 1`.
    pub fn indexed(&self) -> impl Iterator<Item = (usize, &T)> {
        self.terms.iter().enumerate().map(|(i, t)| (i + 1, t))
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Seq<U> {
        Seq {
            terms: self.terms.iter().map(f).collect(),
        }
    }

    /// The first `len` terms, or the whole sequence if it is shorter.
    pub fn truncate(&self, len: usize) -> Result<Self, TransformError>
    where
        T: Clone,
    {
        Self::new(self.terms.iter().take(len).cloned().collect())
    }
}

impl<T> Index<usize> for Seq<T> {
    type Output = T;

    /// 1-indexed access; panics on index 0 or past the end.
    fn index(&self, n: usize) -> &T {
        assert!(n >= 1, "sequences are 1-indexed");
        &self.terms[n - 1]
    }
}

impl<T: fmt::Display> fmt::Display for Seq<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl<T: Scalar> Seq<T> {
    /// Builds a sequence from machine integers.
    pub fn from_i64s(values: &[i64]) -> Result<Self, TransformError> {
        Self::new(
            values
                .iter()
                .enumerate()
                .map(|(i, &v)| T::from_i64(v).ok_or(TransformError::Overflow { index: i + 1 }))
                .collect::<Result<_, _>>()?,
        )
    }

    /// The constant sequence `c, c, …, c` of length `len`.
    pub fn constant(c: T, len: usize) -> Result<Self, TransformError> {
        Self::new(vec![c; len])
    }

    /// `(1, 0, 0, …)`: a single fixed point and nothing else.
    pub fn delta(len: usize) -> Result<Self, TransformError> {
        Self::from_fn(len, |n| if n == 1 { T::one() } else { T::zero() })
    }
}

/// Why the realizability congruence failed at an index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailReason {
    Negative,
    NotDivisible,
}

impl FailReason {
    pub fn as_str(self) -> &'static str {
        match self {
            FailReason::Negative => "negative",
            FailReason::NotDivisible => "not-divisible",
        }
    }
}

impl fmt::Display for FailReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The smallest index at which `s_n = Σ_{d|n} μ(n/d)·a_d` is negative or not
/// divisible by `n`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("realizability fails at n={index}: s={value} is {reason}")]
pub struct Witness<T: fmt::Display + fmt::Debug> {
    pub index: usize,
    pub value: T,
    pub reason: FailReason,
}

/// Outcome of the exact-realizability check on a prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ErVerdict<T: fmt::Display + fmt::Debug> {
    /// Consistent with exact realizability up to the prefix length; carries the
    /// orbit counts `s_n / n`.
    Pass { orbit_counts: Seq<T> },
    Fail(Witness<T>),
}

impl<T: fmt::Display + fmt::Debug> ErVerdict<T> {
    pub fn is_pass(&self) -> bool {
        matches!(self, ErVerdict::Pass { .. })
    }

    pub fn orbit_counts(&self) -> Option<&Seq<T>> {
        match self {
            ErVerdict::Pass { orbit_counts } => Some(orbit_counts),
            ErVerdict::Fail(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness<T>> {
        match self {
            ErVerdict::Pass { .. } => None,
            ErVerdict::Fail(w) => Some(w),
        }
    }

    /// Frozen machine-readable form: `ER-CONSISTENT N=<n>` or
    /// `FAIL n=<n> reason=<negative|not-divisible> s=<value>`.
    pub fn machine_line(&self) -> String {
        match self {
            ErVerdict::Pass { orbit_counts } => format!("ER-CONSISTENT N={}", orbit_counts.len()),
            ErVerdict::Fail(w) => format!("FAIL n={} reason={} s={}", w.index, w.reason, w.value),
        }
    }

    /// One-line human description.
    pub fn describe(&self) -> String {
        match self {
            ErVerdict::Pass { orbit_counts } => format!(
                "consistent with ER up to N={}; orbit counts {}",
                orbit_counts.len(),
                orbit_counts
            ),
            ErVerdict::Fail(w) => format!(
                "not exactly realizable: at n={} the Möbius sum {} is {}",
                w.index,
                w.value,
                match w.reason {
                    FailReason::Negative => "negative",
                    FailReason::NotDivisible => "not divisible by n",
                }
            ),
        }
    }
}

/// Failure of [`orbit_transform`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError<T: fmt::Display + fmt::Debug> {
    #[error(transparent)]
    NotRealizable(Witness<T>),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

fn checked_acc<T: Scalar>(acc: &mut T, term: &T, sign: i8, index: usize) -> Result<(), TransformError> {
    let next = match sign {
        1 => acc.checked_add(term),
        -1 => acc.checked_sub(term),
        _ => return Ok(()),
    };
    *acc = next.ok_or(TransformError::Overflow { index })?;
    Ok(())
}

fn scalar_index<T: Scalar>(n: usize) -> Result<T, TransformError> {
    from_index(n).ok_or(TransformError::Overflow { index: n })
}

/// `f*_n = Σ_{d|n} μ(n/d)·per_d` for every `n` in the prefix.
///
/// Computed for any input, realizable or not; it is the diagnostic quantity
/// behind [`check_er`].
pub fn least_period_counts<T: Scalar>(per: &Seq<T>) -> Result<Seq<T>, TransformError> {
    let len = per.len();
    let mu = mobius_table(len);
    let mut out = vec![T::zero(); len];
    for (d, a_d) in per.indexed() {
        if a_d.is_zero() {
            continue;
        }
        for (q, m) in (d..=len).step_by(d).enumerate() {
            checked_acc(&mut out[m - 1], a_d, mu[q + 1], m)?;
        }
    }
    Seq::new(out)
}

/// `Σ_{d|n} g_d` for every `n`: recovers periodic-point counts from
/// least-period counts.
pub fn divisor_sum<T: Scalar>(g: &Seq<T>) -> Result<Seq<T>, TransformError> {
    let len = g.len();
    let mut out = vec![T::zero(); len];
    for (d, g_d) in g.indexed() {
        if g_d.is_zero() {
            continue;
        }
        for m in (d..=len).step_by(d) {
            checked_acc(&mut out[m - 1], g_d, 1, m)?;
        }
    }
    Seq::new(out)
}

/// PER: `per_n = Σ_{d|n} d·orb_d`.
pub fn per_transform<T: Scalar>(orb: &Seq<T>) -> Result<Seq<T>, TransformError> {
    let weighted = orb
        .indexed()
        .map(|(d, o)| {
            if o.is_negative() {
                return Err(TransformError::Negative { index: d });
            }
            o.checked_mul(&scalar_index(d)?)
                .ok_or(TransformError::Overflow { index: d })
        })
        .collect::<Result<Vec<T>, _>>()?;
    divisor_sum(&Seq::new(weighted)?)
}

/// Exact-realizability check: passes iff every `s_n` is non-negative and
/// divisible by `n`. Non-negativity is tested before divisibility, and the
/// smallest failing index is reported.
///
/// Only errors on fixed-width overflow; with `BigInt` it always succeeds.
pub fn check_er<T: Scalar>(a: &Seq<T>) -> Result<ErVerdict<T>, TransformError> {
    let sums = least_period_counts(a)?;
    let mut orbits = Vec::with_capacity(a.len());
    for (n, s) in sums.indexed() {
        let reason = if s.is_negative() {
            Some(FailReason::Negative)
        } else {
            let (q, r) = s.div_rem(&scalar_index::<T>(n)?);
            orbits.push(q);
            (!r.is_zero()).then_some(FailReason::NotDivisible)
        };
        if let Some(reason) = reason {
            return Ok(ErVerdict::Fail(Witness {
                index: n,
                value: s.clone(),
                reason,
            }));
        }
    }
    Ok(ErVerdict::Pass {
        orbit_counts: Seq::new(orbits)?,
    })
}

/// ORBIT: `orb_n = (1/n)·Σ_{d|n} μ(n/d)·per_d`, failing with the smallest
/// offending index when some count is negative or non-integral.
pub fn orbit_transform<T: Scalar>(per: &Seq<T>) -> Result<Seq<T>, OrbitError<T>> {
    match check_er(per)? {
        ErVerdict::Pass { orbit_counts } => Ok(orbit_counts),
        ErVerdict::Fail(w) => Err(OrbitError::NotRealizable(w)),
    }
}

/// Row 0 is `start`; row `k+1` is PER of row `k`. Returns `steps + 1` rows.
pub fn iterate_per<T: Scalar>(start: &Seq<T>, steps: usize) -> Result<Vec<Seq<T>>, TransformError> {
    if steps == 0 {
        return Err(TransformError::ZeroSteps);
    }
    let mut rows = Vec::with_capacity(steps + 1);
    rows.push(start.clone());
    for _ in 0..steps {
        let next = per_transform(rows.last().expect("at least one row"))?;
        rows.push(next);
    }
    Ok(rows)
}

/// Terms at position `n` across a list of rows (the "columns" of an iterate table).
pub fn column<T: Clone>(rows: &[Seq<T>], n: usize) -> Vec<T> {
    rows.iter().filter_map(|r| r.get(n).cloned()).collect()
}

/// Converts terms to `usize`, failing on negative or oversized values.
pub(crate) fn to_usizes<T: Scalar>(s: &Seq<T>) -> Result<Vec<usize>, TransformError> {
    s.indexed()
        .map(|(n, t)| {
            if t.is_negative() {
                Err(TransformError::Negative { index: n })
            } else {
                t.to_usize().ok_or(TransformError::Overflow { index: n })
            }
        })
        .collect()
}
