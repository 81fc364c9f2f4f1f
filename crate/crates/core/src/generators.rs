//! Periodic-point sequences of concrete realizing systems: subshifts of
//! finite type, toral automorphisms, binomial families, S-integer systems and
//! a handful of named algebraic constructions.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{self, is_prime, padic_valuation, strip_prime, Rational};
use crate::matrix::IntMatrix;
use crate::transforms::{per_transform, Seq, TransformError};
use crate::Sequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("expected a {expected:?} matrix specification, got {found:?}")]
    KindMismatch { expected: MatrixKind, found: MatrixKind },
    #[error("subshift matrix has a negative entry at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize },
    #[error("toral matrix must have determinant ±1, got {0}")]
    NotUnimodular(BigInt),
    #[error("det(A^{n} - I) = 0: the system has infinitely many points of period {n}")]
    Degenerate { n: usize },
    #[error("binomial family needs k > 1 and 1 <= j < k, got k={k}, j={j}")]
    BadBinomial { k: u64, j: u64 },
    #[error("xi must be non-zero with |xi| != 1, got {0}")]
    BadXi(Rational),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("xi is not admissible: |xi|_p > 1 for p dividing {cofactor}, which is outside S")]
    Inadmissible { cofactor: BigUint },
    #[error("S-integer count at n={n} is not an integer ({value})")]
    NonIntegral { n: usize, value: Rational },
    #[error("unknown sequence name {0:?}")]
    UnknownName(String),
    #[error("sequence {name} needs parameter {param}")]
    MissingParam { name: &'static str, param: &'static str },
    #[error("bad parameter {0:?}")]
    BadParam(String),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    /// Non-negative entries; periodic points of the associated subshift of finite type.
    NonNegative,
    /// Determinant ±1; periodic points of the associated toral automorphism.
    Invertible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSpec {
    matrix: IntMatrix,
    kind: MatrixKind,
}

impl MatrixSpec {
    pub fn nonnegative(matrix: IntMatrix) -> Result<Self, GeneratorError> {
        let n = matrix.dim();
        if let Some(i) = matrix.entries().iter().position(|e| e.is_negative()) {
            return Err(GeneratorError::NegativeEntry { row: i / n + 1, col: i % n + 1 });
        }
        Ok(Self { matrix, kind: MatrixKind::NonNegative })
    }

    pub fn invertible(matrix: IntMatrix) -> Result<Self, GeneratorError> {
        let det = matrix.det();
        if det.abs() != BigInt::one() {
            return Err(GeneratorError::NotUnimodular(det));
        }
        Ok(Self { matrix, kind: MatrixKind::Invertible })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    fn expect(&self, kind: MatrixKind) -> Result<(), GeneratorError> {
        if self.kind != kind {
            return Err(GeneratorError::KindMismatch { expected: kind, found: self.kind });
        }
        Ok(())
    }
}

/// `trace(B^n)` for `n = 1..=len`.
pub fn gen_sft_trace(spec: &MatrixSpec, len: usize) -> Result<Sequence, GeneratorError> {
    spec.expect(MatrixKind::NonNegative)?;
    let mut power = IntMatrix::identity(spec.matrix.dim());
    let mut terms = Vec::with_capacity(len);
    for _ in 0..len {
        power = &power * &spec.matrix;
        terms.push(power.trace());
    }
    Ok(Seq::new(terms)?)
}

/// Signed `det(A^n - I)` for `n = 1..=len`, for any square integer matrix.
pub fn toral_determinants(matrix: &IntMatrix, len: usize) -> Vec<BigInt> {
    let mut power = IntMatrix::identity(matrix.dim());
    (0..len)
        .map(|_| {
            power = &power * matrix;
            power.minus_identity().det()
        })
        .collect()
}

/// `|det(A^n - I)|` for `n = 1..=len`. A zero determinant at any `n` (an
/// eigenvalue that is a root of unity) is reported as degenerate.
pub fn gen_toral_det(spec: &MatrixSpec, len: usize) -> Result<Sequence, GeneratorError> {
    spec.expect(MatrixKind::Invertible)?;
    let dets = toral_determinants(&spec.matrix, len);
    if let Some(i) = dets.iter().position(Zero::is_zero) {
        return Err(GeneratorError::Degenerate { n: i + 1 });
    }
    Ok(Seq::new(dets.into_iter().map(|d| d.abs()).collect())?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinomialSpec {
    k: u64,
    j: u64,
}

impl BinomialSpec {
    pub fn new(k: u64, j: u64) -> Result<Self, GeneratorError> {
        if k < 2 || j < 1 || j >= k {
            return Err(GeneratorError::BadBinomial { k, j });
        }
        Ok(Self { k, j })
    }
}

/// `C(k·n, j·n)` for `n = 1..=len`.
pub fn gen_binomial(spec: BinomialSpec, len: usize) -> Result<Sequence, GeneratorError> {
    Ok(Seq::from_fn(len, |n| {
        let n = n as u64;
        BigInt::from(num_integer::binomial(BigUint::from(spec.k * n), BigUint::from(spec.j * n)))
    })?)
}

/// Data of a connected S-integer system: a rational `xi` and a finite prime set `S`
/// containing every prime at which `|xi|_p > 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SIntegerSpec {
    xi: Rational,
    primes: Vec<u64>,
}

impl SIntegerSpec {
    pub fn new(xi: Rational, mut primes: Vec<u64>) -> Result<Self, GeneratorError> {
        if xi.is_zero() || xi.abs().is_one() {
            return Err(GeneratorError::BadXi(xi));
        }
        primes.sort_unstable();
        primes.dedup();
        if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(GeneratorError::NotPrime(p));
        }
        // |xi|_p > 1 exactly for the primes dividing the reduced denominator
        let mut cofactor = xi.denom().magnitude().clone();
        for &p in &primes {
            cofactor = strip_prime(&cofactor, p).0;
        }
        if !cofactor.is_one() {
            return Err(GeneratorError::Inadmissible { cofactor });
        }
        Ok(Self { xi, primes })
    }

    pub fn xi(&self) -> &Rational {
        &self.xi
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }
}

/// `|xi^n - 1|_∞ · Π_{p∈S} |xi^n - 1|_p`, computed exactly.
pub fn gen_s_integer_connected(spec: &SIntegerSpec, len: usize) -> Result<Sequence, GeneratorError> {
    let mut terms = Vec::with_capacity(len);
    for n in 1..=len {
        let r = num_traits::pow(spec.xi.clone(), n) - Rational::one();
        if r.is_zero() {
            return Err(GeneratorError::Degenerate { n });
        }
        // |r|_p = p^(-v_p(r)) with v_p(r) = v_p(numer) - v_p(denom)
        let mut num = r.numer().magnitude().clone();
        let mut den = r.denom().magnitude().clone();
        for &p in &spec.primes {
            num = strip_prime(&num, p).0;
            den = strip_prime(&den, p).0;
        }
        if !den.is_one() {
            return Err(GeneratorError::NonIntegral {
                n,
                value: Rational::new(num.into(), den.into()),
            });
        }
        terms.push(BigInt::from(num));
    }
    Ok(Seq::new(terms)?)
}

/// `2^(n - 2^v₂(n))`, the zero-dimensional S-integer example over 𝔽₂(t).
pub fn gen_s_integer_zero_dim_example(len: usize) -> Result<Sequence, GeneratorError> {
    let terms = (1..=len)
        .map(|n| {
            let v = padic_valuation(&BigInt::from(n), 2).expect("n >= 1");
            let exponent = n - (1usize << v);
            BigInt::one() << exponent
        })
        .collect();
    Ok(Seq::new(terms)?)
}

/// Named constructions built from closure properties of realizable sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedSequence {
    /// `c, c, c, …`
    Constant(BigInt),
    /// `c^n`
    Power(BigInt),
    /// `a^(k)_n = Σ_{d|n} d·r^(k)_d`, where `r^(k)` is 1 at index 1 and above
    /// `k`, and 0 on `2..=k`.
    RK(u64),
    /// `Π_{k≥1} a^(k)_n`; only `k < n` contribute a factor other than 1.
    RProduct,
    /// `1, 3, 1, 3, …`
    AltPrime,
}

impl NamedSequence {
    pub fn from_name(name: &str, param: Option<&str>) -> Result<Self, GeneratorError> {
        let int_param = |name: &'static str, param_name: &'static str| -> Result<BigInt, GeneratorError> {
            let p = param.ok_or(GeneratorError::MissingParam { name, param: param_name })?;
            p.trim().parse().map_err(|_| GeneratorError::BadParam(p.to_string()))
        };
        match name {
            "constant" => Ok(Self::Constant(int_param("constant", "c")?)),
            "power" => Ok(Self::Power(int_param("power", "c")?)),
            "r_k" => {
                let k = int_param("r_k", "k")?;
                match k.to_u64() {
                    Some(k) if k >= 1 => Ok(Self::RK(k)),
                    _ => Err(GeneratorError::BadParam(k.to_string())),
                }
            }
            "r_product" => Ok(Self::RProduct),
            "alt_prime" => Ok(Self::AltPrime),
            other => Err(GeneratorError::UnknownName(other.to_string())),
        }
    }
}

/// `a^(k)_n = 1 + Σ_{d|n, d>k} d`.
fn r_k_term(k: u64, n: u64) -> BigInt {
    let tail: u64 = arith::divisors(n).expect("n >= 1").into_iter().filter(|&d| d > k).sum();
    BigInt::from(1 + tail)
}

pub fn gen_named(name: &NamedSequence, len: usize) -> Result<Sequence, GeneratorError> {
    let seq = match name {
        NamedSequence::Constant(c) => Seq::constant(c.clone(), len)?,
        NamedSequence::Power(c) => Seq::from_fn(len, |n| num_traits::pow(c.clone(), n))?,
        NamedSequence::RK(k) => {
            let r = Seq::from_fn(len, |n| {
                if n == 1 || n as u64 > *k {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            })?;
            per_transform(&r)?
        }
        NamedSequence::RProduct => Seq::from_fn(len, |n| {
            let n = n as u64;
            (1..n).map(|k| r_k_term(k, n)).product()
        })?,
        NamedSequence::AltPrime => {
            Seq::from_fn(len, |n| BigInt::from(if n.is_even() { 3 } else { 1 }))?
        }
    };
    Ok(seq)
}

/// A published value that disagrees with direct evaluation of its definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Erratum {
    pub index: usize,
    pub quoted: u64,
    pub computed: u64,
    pub note: &'static str,
}

/// Commonly quoted opening terms of [`NamedSequence::RProduct`].
pub const R_PRODUCT_QUOTED_PREFIX: [u64; 6] = [1, 3, 16, 245, 1296, 41160];

/// Known disagreements between [`R_PRODUCT_QUOTED_PREFIX`] and the computed
/// product.
pub const R_PRODUCT_ERRATA: &[Erratum] = &[Erratum {
    index: 4,
    quoted: 245,
    computed: 175,
    note: "a(1)_4 · a(2)_4 · a(3)_4 = 7 · 5 · 5 = 175; the quoted 245 = 7 · 5 · 7 \
           does not follow from the definition of r^(k)",
}];
