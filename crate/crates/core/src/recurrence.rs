//! Binary recurrences `u_{n+2} = a·u_{n+1} + b·u_n` and their exact
//! realizability.
//!
//! When the discriminant `Δ = a² + 4b` is not a square and
//! `gcd(a, a² + 2b) = 1`, a solution with `u₁, u₂ ≥ 1` is realizable iff it is
//! a positive multiple of the trace sequence `a, a² + 2b, …` of the companion
//! matrix. A mismatch in the initial ratio is certified by a prime `p` with
//! `(Δ/p) = -1` at which the prime congruence `u_p ≡ u₁ (mod p)` fails.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{is_square, jacobi, Primes};
use crate::generators::{gen_s_integer_connected, gen_sft_trace, MatrixSpec, SIntegerSpec};
use crate::matrix::IntMatrix;
use crate::transforms::{check_er, ErVerdict, Seq, TransformError};
use crate::Sequence;

/// Number of primes examined when searching for a witness prime.
pub const WITNESS_PRIME_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecurrenceError {
    #[error("initial terms must be at least 1, got u1={u1}, u2={u2}")]
    NonPositiveStart { u1: BigInt, u2: BigInt },
    #[error("family weights must be non-negative and not both zero, got t={t}, s={s}")]
    BadWeights { t: BigInt, s: BigInt },
    #[error(transparent)]
    Transform(#[from] TransformError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceSpec {
    pub a: BigInt,
    pub b: BigInt,
    pub u1: BigInt,
    pub u2: BigInt,
}

impl RecurrenceSpec {
    pub fn new(a: BigInt, b: BigInt, u1: BigInt, u2: BigInt) -> Result<Self, RecurrenceError> {
        if u1 < BigInt::one() || u2 < BigInt::one() {
            return Err(RecurrenceError::NonPositiveStart { u1, u2 });
        }
        Ok(Self { a, b, u1, u2 })
    }

    pub fn from_i64(a: i64, b: i64, u1: i64, u2: i64) -> Result<Self, RecurrenceError> {
        Self::new(a.into(), b.into(), u1.into(), u2.into())
    }

    /// `Δ = a² + 4b`.
    pub fn discriminant(&self) -> BigInt {
        &self.a * &self.a + &self.b * 4
    }

    /// `a² + 2b`, the second trace of the companion matrix.
    pub fn second_trace(&self) -> BigInt {
        &self.a * &self.a + &self.b * 2
    }

    /// `gcd(a, a² + 2b)`.
    pub fn common_factor(&self) -> BigInt {
        self.a.gcd(&self.second_trace())
    }

    /// `u₂·a = u₁·(a² + 2b)`, compared without division.
    pub fn has_trace_ratio(&self) -> bool {
        &self.u2 * &self.a == &self.u1 * self.second_trace()
    }
}

/// The first `len` terms `u₁, …, u_len`.
pub fn eval_recurrence(spec: &RecurrenceSpec, len: usize) -> Result<Sequence, RecurrenceError> {
    let mut terms = vec![spec.u1.clone(), spec.u2.clone()];
    while terms.len() < len {
        let k = terms.len();
        let next = &spec.a * &terms[k - 1] + &spec.b * &terms[k - 2];
        terms.push(next);
    }
    terms.truncate(len);
    Ok(Seq::new(terms)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Applicability {
    TheoremApplies,
    SquareDiscriminant,
    CommonFactor,
}

impl Applicability {
    pub fn as_str(self) -> &'static str {
        match self {
            Applicability::TheoremApplies => "theorem-applies",
            Applicability::SquareDiscriminant => "square-discriminant",
            Applicability::CommonFactor => "common-factor",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    InEr,
    NotInEr,
}

impl Decision {
    pub fn as_str(self) -> &'static str {
        match self {
            Decision::InEr => "in-ER",
            Decision::NotInEr => "not-in-ER",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceVerdict {
    pub applicability: Applicability,
    /// Present only when the theorem applies.
    pub decision: Option<Decision>,
    /// Present only for `NotInEr` decisions certified by a failing prime congruence.
    pub witness_prime: Option<u64>,
    /// Check of the first `N` terms; always computed.
    pub empirical: ErVerdict<BigInt>,
    pub note: Option<String>,
}

/// `u_p mod p` via the companion matrix raised to `p - 1`.
fn term_mod(spec: &RecurrenceSpec, n: u64, p: u64) -> u64 {
    let m = |x: &BigInt| x.mod_floor(&BigInt::from(p)).to_u64().expect("reduced mod p");
    let mulmod = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let matmul = |x: [u64; 4], y: [u64; 4]| {
        [
            (mulmod(x[0], y[0]) + mulmod(x[1], y[2])) % p,
            (mulmod(x[0], y[1]) + mulmod(x[1], y[3])) % p,
            (mulmod(x[2], y[0]) + mulmod(x[3], y[2])) % p,
            (mulmod(x[2], y[1]) + mulmod(x[3], y[3])) % p,
        ]
    };
    // (u_{k+1}, u_k) = M^(k-1) (u_2, u_1) with M = [[a, b], [1, 0]]
    let mut base = [m(&spec.a), m(&spec.b), 1 % p, 0];
    let mut acc = [1 % p, 0, 0, 1 % p];
    let mut e = n - 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = matmul(acc, base);
        }
        base = matmul(base, base);
        e >>= 1;
    }
    (mulmod(acc[2], m(&spec.u2)) + mulmod(acc[3], m(&spec.u1))) % p
}

/// Smallest prime `p` among the first [`WITNESS_PRIME_CAP`] primes with
/// `p ∤ 2bΔ`, `(Δ/p) = -1` and `u_p ≢ u₁ (mod p)`.
pub fn find_witness_prime(spec: &RecurrenceSpec) -> Option<u64> {
    let delta = spec.discriminant();
    let guard: BigInt = &spec.b * &delta * 2u32;
    Primes::new().take(WITNESS_PRIME_CAP).find(|&p| {
        let bp = BigInt::from(p);
        p != 2
            && !(&guard % &bp).is_zero()
            && jacobi(&delta, &bp).expect("odd prime modulus") == -1
            && term_mod(spec, p, p) != spec.u1.mod_floor(&bp).to_u64().expect("reduced mod p")
    })
}

/// Classifies a recurrence, always attaching the empirical check of the first
/// `len` terms.
pub fn classify(spec: &RecurrenceSpec, len: usize) -> Result<RecurrenceVerdict, RecurrenceError> {
    let empirical = check_er(&eval_recurrence(spec, len)?)?;
    let delta = spec.discriminant();
    let applicability = if is_square(&delta) {
        Applicability::SquareDiscriminant
    } else if !spec.common_factor().is_one() {
        Applicability::CommonFactor
    } else {
        Applicability::TheoremApplies
    };
    let mut verdict = RecurrenceVerdict {
        applicability,
        decision: None,
        witness_prime: None,
        empirical,
        note: None,
    };
    if applicability != Applicability::TheoremApplies {
        verdict.note = Some(format!(
            "no theorem decision for the {} case; the prefix check is decisive only up to N={len}",
            applicability.as_str()
        ));
        return Ok(verdict);
    }
    if spec.has_trace_ratio() {
        // A multiple of the companion trace sequence λⁿ + μⁿ. It stays
        // non-negative only for a real dominant root, i.e. a > 0 and Δ > 0;
        // otherwise the terms change sign infinitely often.
        if spec.a.is_positive() && delta.is_positive() {
            verdict.decision = Some(Decision::InEr);
        } else {
            verdict.decision = Some(Decision::NotInEr);
            verdict.note = Some(
                "initial ratio matches the trace sequence, but its dominant root is not real and \
                 positive, so terms become negative"
                    .to_string(),
            );
        }
        return Ok(verdict);
    }
    verdict.decision = Some(Decision::NotInEr);
    verdict.witness_prime = find_witness_prime(spec);
    if verdict.witness_prime.is_none() {
        verdict.note = Some(format!(
            "no witness prime among the first {WITNESS_PRIME_CAP} primes"
        ));
    }
    Ok(verdict)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioFamily {
    /// `t·trace([[1,2],[1,0]]ⁿ) + s·|(-2)ⁿ - 1|`, solutions of `u_{n+2} = u_{n+1} + 2u_n`.
    Jacobsthal,
    /// `t·2ⁿ + s`, solutions of `u_{n+2} = 3u_{n+1} - 2u_n`.
    Mersenne,
}

impl RatioFamily {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "jacobsthal" => Some(Self::Jacobsthal),
            "mersenne" => Some(Self::Mersenne),
            _ => None,
        }
    }

    /// The `(a, b)` coefficients of the recurrence every member satisfies.
    pub fn coefficients(self) -> (i64, i64) {
        match self {
            Self::Jacobsthal => (1, 2),
            Self::Mersenne => (3, -2),
        }
    }
}

/// A non-negative integer combination of two realizable solutions of the
/// same square-discriminant recurrence.
pub fn ratio_family(family: RatioFamily, t: &BigInt, s: &BigInt, len: usize) -> Result<Sequence, RecurrenceError> {
    if t.is_negative() || s.is_negative() || (t.is_zero() && s.is_zero()) {
        return Err(RecurrenceError::BadWeights { t: t.clone(), s: s.clone() });
    }
    let (first, second): (Sequence, Sequence) = match family {
        RatioFamily::Jacobsthal => {
            let m = IntMatrix::from_i64_rows(&[[1, 2], [1, 0]]).expect("square");
            let sft = MatrixSpec::nonnegative(m).expect("non-negative");
            let dual = SIntegerSpec::new(BigInt::from(-2).into(), vec![]).expect("admissible");
            (
                gen_sft_trace(&sft, len).expect("valid spec"),
                gen_s_integer_connected(&dual, len).expect("valid spec"),
            )
        }
        RatioFamily::Mersenne => (
            Seq::from_fn(len, |n| BigInt::one() << n)?,
            Seq::constant(BigInt::one(), len)?,
        ),
    };
    Ok(Seq::new(
        first
            .iter()
            .zip(second.iter())
            .map(|(x, y)| t * x + s * y)
            .collect(),
    )?)
}
