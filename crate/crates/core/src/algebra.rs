//! Ring operations on realizable sequences, convolutions and quotients that
//! leave the class, termwise factorization search, and refuters for
//! polynomial and completely multiplicative sequences.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{divisors, divisors_big, is_prime, mobius_table, ArithError};
use crate::scalar::Scalar;
use crate::transforms::{check_er, Seq, TransformError};
use crate::Sequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero: divisor term {index} is 0")]
    DivisionByZero { index: usize },
    #[error("term {index} is not divisible")]
    NonIntegral { index: usize },
    #[error("factorization search needs positive terms; term {index} is {value}")]
    NonPositive { index: usize, value: BigInt },
    #[error("factorization search needs a realizable input; it fails at n={index}")]
    NotRealizable { index: usize },
    #[error("no value supplied for prime {0}")]
    MissingPrime(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime value for {prime} must be at least 1, got {value}")]
    BadPrimeValue { prime: u64, value: BigInt },
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

fn same_len<T, U>(a: &Seq<T>, b: &Seq<U>) -> Result<(), TransformError> {
    if a.len() != b.len() {
        return Err(TransformError::LengthMismatch { left: a.len(), right: b.len() });
    }
    Ok(())
}

fn zip_checked<T: Scalar>(
    a: &Seq<T>,
    b: &Seq<T>,
    op: impl Fn(&T, &T) -> Option<T>,
) -> Result<Seq<T>, TransformError> {
    same_len(a, b)?;
    Seq::new(
        a.indexed()
            .zip(b.iter())
            .map(|((n, x), y)| op(x, y).ok_or(TransformError::Overflow { index: n }))
            .collect::<Result<_, _>>()?,
    )
}

pub fn pointwise_add<T: Scalar>(a: &Seq<T>, b: &Seq<T>) -> Result<Seq<T>, TransformError> {
    zip_checked(a, b, |x, y| x.checked_add(y))
}

pub fn pointwise_mul<T: Scalar>(a: &Seq<T>, b: &Seq<T>) -> Result<Seq<T>, TransformError> {
    zip_checked(a, b, |x, y| x.checked_mul(y))
}

/// `Σ_{i+j=n+1} a_i·b_j`.
pub fn additive_convolution<T: Scalar>(a: &Seq<T>, b: &Seq<T>) -> Result<Seq<T>, TransformError> {
    same_len(a, b)?;
    Seq::new(
        (1..=a.len())
            .map(|n| {
                (1..=n).try_fold(T::zero(), |acc, i| {
                    a[i].checked_mul(&b[n + 1 - i])
                        .and_then(|t| acc.checked_add(&t))
                        .ok_or(TransformError::Overflow { index: n })
                })
            })
            .collect::<Result<_, _>>()?,
    )
}

/// `Σ_{d|n} a_d·b_{n/d}`.
pub fn dirichlet_convolution<T: Scalar>(a: &Seq<T>, b: &Seq<T>) -> Result<Seq<T>, TransformError> {
    same_len(a, b)?;
    let len = a.len();
    let mut out = vec![T::zero(); len];
    for d in 1..=len {
        for (q, m) in (d..=len).step_by(d).enumerate() {
            let t = a[d].checked_mul(&b[q + 1]).ok_or(TransformError::Overflow { index: m })?;
            out[m - 1] = out[m - 1].checked_add(&t).ok_or(TransformError::Overflow { index: m })?;
        }
    }
    Seq::new(out)
}

/// Termwise `a_n / b_n`, failing at the first zero divisor or non-integral quotient.
pub fn quotient_check<T: Scalar>(a: &Seq<T>, b: &Seq<T>) -> Result<Seq<T>, AlgebraError> {
    same_len(a, b)?;
    let mut out = Vec::with_capacity(a.len());
    for ((n, x), y) in a.indexed().zip(b.iter()) {
        if y.is_zero() {
            return Err(AlgebraError::DivisionByZero { index: n });
        }
        let (q, r) = x.div_rem(y);
        if !r.is_zero() {
            return Err(AlgebraError::NonIntegral { index: n });
        }
        out.push(q);
    }
    Ok(Seq::new(out)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Stop after this many pairs (`None`: collect all).
    pub max_results: Option<usize>,
    /// Maximum number of search-tree nodes to expand.
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { max_results: None, max_nodes: 1_000_000 }
    }
}

/// Pairs `(b, c)` of realizable prefixes with `b_n·c_n = a_n`, each pair listed
/// once with `b <= c` lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationResult {
    pub pairs: Vec<(Sequence, Sequence)>,
    /// False when the node budget or result limit stopped the search early.
    pub complete: bool,
    pub nodes: u64,
}

impl FactorizationResult {
    fn is_ones(s: &Sequence) -> bool {
        s.iter().all(One::is_one)
    }

    /// Pairs where neither factor is the constant sequence of ones.
    pub fn nontrivial(&self) -> impl Iterator<Item = &(Sequence, Sequence)> {
        self.pairs.iter().filter(|(b, c)| !Self::is_ones(b) && !Self::is_ones(c))
    }

    /// True when the search was exhaustive and found no non-trivial pair. This
    /// is a statement about the prefix only.
    pub fn prefix_prime(&self) -> bool {
        self.complete && self.nontrivial().next().is_none()
    }
}

struct FactorSearch<'a> {
    target: &'a [BigInt],
    options: Vec<Vec<BigInt>>,
    mu: Vec<i8>,
    divisors: Vec<Vec<usize>>,
    budget: SearchBudget,
    nodes: u64,
    exhausted: bool,
    b: Vec<BigInt>,
    c: Vec<BigInt>,
    found: Vec<(Sequence, Sequence)>,
}

impl FactorSearch<'_> {
    // The realizability condition at n only involves indices d | n <= n.
    fn admissible(&self, s: &[BigInt], n: usize) -> bool {
        let mut sum = BigInt::zero();
        for &d in &self.divisors[n] {
            match self.mu[n / d] {
                1 => sum += &s[d - 1],
                -1 => sum -= &s[d - 1],
                _ => {}
            }
        }
        !sum.is_negative() && sum.is_multiple_of(&BigInt::from(n))
    }

    fn done(&self) -> bool {
        self.exhausted || self.budget.max_results.is_some_and(|m| self.found.len() >= m)
    }

    fn descend(&mut self, n: usize, tied: bool) {
        if n > self.target.len() {
            self.found.push((
                Seq::new(self.b.clone()).expect("non-empty"),
                Seq::new(self.c.clone()).expect("non-empty"),
            ));
            return;
        }
        for i in 0..self.options[n - 1].len() {
            if self.done() {
                return;
            }
            if self.nodes >= self.budget.max_nodes {
                self.exhausted = true;
                return;
            }
            self.nodes += 1;
            let bn = self.options[n - 1][i].clone();
            let cn = &self.target[n - 1] / &bn;
            if tied && bn > cn {
                // options are increasing, so every later choice is also out of order
                break;
            }
            self.b.push(bn);
            self.c.push(cn);
            if self.admissible(&self.b, n) && self.admissible(&self.c, n) {
                let still_tied = tied && self.b[n - 1] == self.c[n - 1];
                self.descend(n + 1, still_tied);
            }
            self.b.pop();
            self.c.pop();
        }
    }
}

/// Exhaustive depth-first search over termwise divisor choices, pruned by the
/// realizability congruence at each index.
pub fn search_factorizations(a: &Sequence, budget: SearchBudget) -> Result<FactorizationResult, AlgebraError> {
    if let Some((index, value)) = a.indexed().find(|(_, t)| !t.is_positive()) {
        return Err(AlgebraError::NonPositive { index, value: value.clone() });
    }
    if let Some(w) = check_er(a)?.witness() {
        return Err(AlgebraError::NotRealizable { index: w.index });
    }
    let options = a
        .iter()
        .map(|t| Ok(divisors_big(t.magnitude())?.into_iter().map(BigInt::from).collect()))
        .collect::<Result<Vec<Vec<BigInt>>, ArithError>>()?;
    let len = a.len();
    let mut search = FactorSearch {
        target: a.terms(),
        options,
        mu: mobius_table(len),
        divisors: (0..=len)
            .map(|n| if n == 0 { vec![] } else { divisors(n as u64).expect("n >= 1").into_iter().map(|d| d as usize).collect() })
            .collect(),
        budget,
        nodes: 0,
        exhausted: false,
        b: Vec::with_capacity(len),
        c: Vec::with_capacity(len),
        found: Vec::new(),
    };
    search.descend(1, true);
    let complete = !search.done();
    Ok(FactorizationResult { pairs: search.found, complete, nodes: search.nodes })
}

/// Evaluates `Σ c_i nⁱ` at `n`.
pub fn eval_polynomial(coeffs: &[BigInt], n: u64) -> BigInt {
    let x = BigInt::from(n);
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
}

/// Smallest `n <= bound` at which `(P(n))` violates the realizability
/// condition, or `None` if the prefix is consistent.
pub fn refute_polynomial(coeffs: &[BigInt], bound: usize) -> Result<Option<usize>, AlgebraError> {
    let seq = Seq::from_fn(bound, |n| eval_polynomial(coeffs, n as u64))?;
    Ok(check_er(&seq)?.witness().map(|w| w.index))
}

/// Extends prime values completely multiplicatively to `1..=bound`.
pub fn completely_multiplicative(
    prime_values: &BTreeMap<u64, BigInt>,
    bound: usize,
) -> Result<Sequence, AlgebraError> {
    for (&p, v) in prime_values {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        if v < &BigInt::one() {
            return Err(AlgebraError::BadPrimeValue { prime: p, value: v.clone() });
        }
    }
    let mut terms: Vec<BigInt> = Vec::with_capacity(bound);
    for n in 1..=bound {
        let value = if n == 1 {
            BigInt::one()
        } else {
            let p = divisors(n as u64)?[1];
            let fp = prime_values.get(&p).ok_or(AlgebraError::MissingPrime(p))?;
            fp * &terms[n / p as usize - 1]
        };
        terms.push(value);
    }
    Ok(Seq::new(terms)?)
}

/// Smallest failing index of the completely multiplicative extension, or
/// `None` when the prefix is consistent (expected only when every prime maps to 1).
pub fn refute_completely_multiplicative(
    prime_values: &BTreeMap<u64, BigInt>,
    bound: usize,
) -> Result<Option<usize>, AlgebraError> {
    let seq = completely_multiplicative(prime_values, bound)?;
    Ok(check_er(&seq)?.witness().map(|w| w.index))
}
