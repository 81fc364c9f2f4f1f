//! Realization in rate and finite-scale growth diagnostics.
//!
//! * [`rr_construct_power`] builds orbit counts `⌈J_α(n)/n⌉` from the Jordan
//!   totient `J_α(n) = n^α Π_{p|n}(1 - p^{-α})`; since `Σ_{d|n} J_α(d) = n^α`
//!   the resulting periodic-point counts satisfy
//!   `n^α <= f_n <= n^α + σ(n)`.
//! * [`rr_construct_geometric`] fills `⌊βⁿ⌋` greedily from below.
//! * [`growth_report`] tabulates `f_n`, `f*_n` and their scalings with every
//!   comparison done on exact integers; decimals are for display only.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{ceil_div, divisors, factorize, integer_root, Primes, Rational};
use crate::transforms::{divisor_sum, least_period_counts, per_transform, Seq, TransformError};
use crate::Sequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RateError {
    #[error("power construction needs alpha > 1 (floor(n^alpha) is not realizable in rate otherwise), got {0}")]
    AlphaTooSmall(Rational),
    #[error("geometric construction needs beta >= 1 (floor(beta^n) is eventually 0 otherwise), got {0}")]
    BetaTooSmall(Rational),
    #[error("exponent must be positive, got {0}")]
    NonPositiveExponent(Rational),
    #[error("growth statistics need positive terms; term {index} is {value}")]
    NonPositive { index: usize, value: BigInt },
    #[error("pathological construction needs K >= 2, got {0}")]
    IndexBoundTooSmall(usize),
    #[error("could not resolve the ceiling at n={0} to the available precision")]
    PrecisionExhausted(u64),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

fn parts(r: &Rational) -> (u32, u32) {
    (
        r.numer().to_u32().expect("exponent numerator fits in u32"),
        r.denom().to_u32().expect("exponent denominator fits in u32"),
    )
}

/// A target sequence `⌊n^α⌋` or `⌊βⁿ⌋` with rational `α, β > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RateTarget {
    Power(Rational),
    Geometric(Rational),
}

impl RateTarget {
    pub fn new_power(alpha: Rational) -> Result<Self, RateError> {
        if !alpha.is_positive() {
            return Err(RateError::NonPositiveExponent(alpha));
        }
        Ok(Self::Power(alpha))
    }

    pub fn new_geometric(beta: Rational) -> Result<Self, RateError> {
        if !beta.is_positive() {
            return Err(RateError::NonPositiveExponent(beta));
        }
        Ok(Self::Geometric(beta))
    }

    /// The exact target value at `n`.
    pub fn value(&self, n: u64) -> BigInt {
        match self {
            RateTarget::Power(alpha) => {
                let (p, q) = parts(alpha);
                let np = num_traits::pow(BigUint::from(n), p as usize);
                integer_root(&np, q).expect("q >= 1").into()
            }
            RateTarget::Geometric(beta) => {
                let n = n as usize;
                num_traits::pow(beta.numer().clone(), n).div_floor(&num_traits::pow(beta.denom().clone(), n))
            }
        }
    }
}

/// Jordan's totient `J_k(n) = n^k Π_{p|n}(1 - p^{-k})` for integer `k`.
pub fn jordan_totient(n: u64, k: u32) -> BigInt {
    factorize(n)
        .expect("n >= 1")
        .into_iter()
        .map(|(p, e)| {
            let pk = num_traits::pow(BigInt::from(p), k as usize);
            num_traits::pow(pk.clone(), (e - 1) as usize) * (pk - 1)
        })
        .product()
}

// Bounds lo <= y^(a/b) <= hi with denominators 2^bits.
fn root_bounds(y: u64, a: u32, b: u32, bits: u64) -> (Rational, Rational) {
    let scaled = num_traits::pow(BigUint::from(y), a as usize) << (bits * b as u64);
    let r = integer_root(&scaled, b).expect("b >= 1");
    let exact = num_traits::pow(r.clone(), b as usize) == scaled;
    let den = BigInt::one() << bits;
    let lo = Rational::new(r.clone().into(), den.clone());
    let hi = if exact { lo.clone() } else { Rational::new(BigInt::from(r) + 1, den) };
    (lo, hi)
}

fn ceil_rational(r: &Rational) -> BigInt {
    ceil_div(r.numer(), r.denom())
}

/// `⌈J_α(n)/n⌉` computed exactly.
///
/// With `m = n / rad(n)`, `J_α(n)/n = m^α Π_{p|n}(p^α - 1) / n`. For integer
/// `α` this is a plain ceiling division; otherwise the irrational powers are
/// enclosed by dyadic bounds that are tightened until both ends share a
/// ceiling.
pub fn orbit_count_ceiling(n: u64, alpha: &Rational) -> Result<BigInt, RateError> {
    let (a, b) = parts(alpha);
    if b == 1 {
        return Ok(ceil_div(&jordan_totient(n, a), &BigInt::from(n)));
    }
    let primes = factorize(n).expect("n >= 1");
    let rad: u64 = primes.iter().map(|&(p, _)| p).product();
    let m = n / rad;
    let mut bits = 64u64;
    while bits <= 1 << 16 {
        let (m_lo, m_hi) = root_bounds(m, a, b, bits);
        let mut lo = m_lo;
        let mut hi = m_hi;
        for &(p, _) in &primes {
            let (p_lo, p_hi) = root_bounds(p, a, b, bits);
            lo *= p_lo - Rational::one();
            hi *= p_hi - Rational::one();
        }
        let n = Rational::from_integer(n.into());
        let (c_lo, c_hi) = (ceil_rational(&(lo / &n)), ceil_rational(&(hi / &n)));
        if c_lo == c_hi {
            return Ok(c_lo);
        }
        bits *= 2;
    }
    Err(RateError::PrecisionExhausted(n))
}

/// Orbit counts together with the periodic-point counts they generate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RateRealization {
    pub orbit_counts: Sequence,
    pub periodic_points: Sequence,
}

/// Orbit counts `⌈J_α(n)/n⌉` realizing `⌊n^α⌋` in rate, for rational `α > 1`.
pub fn rr_construct_power(alpha: &Rational, len: usize) -> Result<RateRealization, RateError> {
    if alpha <= &Rational::one() {
        return Err(RateError::AlphaTooSmall(alpha.clone()));
    }
    let orbit_counts = Seq::new(
        (1..=len as u64)
            .map(|n| orbit_count_ceiling(n, alpha))
            .collect::<Result<Vec<_>, _>>()?,
    )?;
    let periodic_points = per_transform(&orbit_counts)?;
    Ok(RateRealization { orbit_counts, periodic_points })
}

/// Greedy realization of `t_n = ⌊βⁿ⌋` for rational `β >= 1`:
/// `o_n = max(0, ⌈(t_n - Σ_{d|n, d<n} d·o_d) / n⌉)`.
///
/// Whenever the proper-divisor part does not already exceed `t_n`, the result
/// satisfies `t_n <= f_n < t_n + n`.
pub fn rr_construct_geometric(beta: &Rational, len: usize) -> Result<RateRealization, RateError> {
    if beta < &Rational::one() {
        return Err(RateError::BetaTooSmall(beta.clone()));
    }
    let target = RateTarget::Geometric(beta.clone());
    let mut orbits: Vec<BigInt> = Vec::with_capacity(len);
    let mut per: Vec<BigInt> = Vec::with_capacity(len);
    for n in 1..=len as u64 {
        let partial: BigInt = divisors(n)
            .expect("n >= 1")
            .into_iter()
            .filter(|&d| d < n)
            .map(|d| &orbits[d as usize - 1] * d)
            .sum();
        let gap = target.value(n) - &partial;
        let o = if gap.is_positive() { ceil_div(&gap, &BigInt::from(n)) } else { BigInt::zero() };
        per.push(partial + &o * n);
        orbits.push(o);
    }
    Ok(RateRealization { orbit_counts: Seq::new(orbits)?, periodic_points: Seq::new(per)? })
}

/// Finite certificate against realization in rate for slowly growing `φ`.
///
/// Suppose `f` is realizable with `φ_n/2 <= f_n <= 2φ_n` for every `n` in the
/// prefix. From `tail_start` on, `2φ_n < n`, so `f*_n` (a multiple of `n`
/// bounded by `f_n`) must vanish; then `f_n <= Σ_{d<tail_start} f_d <=
/// tail_bound` on the tail. A term `φ_n > 2·tail_bound` contradicts the lower
/// window and is reported as `witness`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlowGrowthDiagnosis {
    pub tail_start: Option<usize>,
    pub tail_bound: Option<BigInt>,
    pub witness: Option<usize>,
}

impl SlowGrowthDiagnosis {
    /// True when the prefix alone rules out any realizing sequence staying
    /// within a factor 2 of `φ`. This is a diagnostic about the prefix scale,
    /// not a proof about the infinite sequence.
    pub fn obstructed(&self) -> bool {
        self.witness.is_some()
    }
}

pub fn check_slow_growth_obstruction(phi: &Sequence) -> SlowGrowthDiagnosis {
    let len = phi.len();
    let small = |n: usize| &phi[n] * 2 < BigInt::from(n);
    let mut tail_start = None;
    for n in (1..=len).rev() {
        if !small(n) {
            break;
        }
        tail_start = Some(n);
    }
    let Some(start) = tail_start else {
        return SlowGrowthDiagnosis { tail_start: None, tail_bound: None, witness: None };
    };
    let bound: BigInt = (1..start).map(|d| phi[d].clone().max(BigInt::zero()) * 2).sum();
    let witness = (start..=len).find(|&n| phi[n] > &bound * 2);
    SlowGrowthDiagnosis { tail_start, tail_bound: Some(bound), witness }
}

/// Position `j` of the `r`-th consecutive-prime product within the triangular
/// block scheme with block sizes 1, 2, 3, ….
pub fn block_position(r: usize) -> usize {
    let mut m = 1;
    while m * (m + 1) / 2 < r {
        m += 1;
    }
    r - m * (m - 1) / 2
}

/// `(r, p_r · p_{r+1})` for every consecutive-prime product up to `limit`.
pub fn consecutive_prime_products(limit: u64) -> Vec<(usize, u64)> {
    let mut primes = Primes::new();
    let mut prev = primes.next().expect("infinite");
    let mut out = Vec::new();
    for (r, p) in primes.enumerate() {
        let n = prev * p;
        if n > limit {
            break;
        }
        out.push((r + 1, n));
        prev = p;
    }
    out
}

/// `f*_k` of the super-exponential example: `k·2^{k³}` in general and
/// `n_r·2^{j·n_r}` at `n_r = p_r p_{r+1}`, `j = block_position(r)`.
pub fn pathological_least_period(k: u64) -> BigInt {
    let exponent = match consecutive_prime_products(k).into_iter().find(|&(_, n)| n == k) {
        Some((r, _)) => block_position(r) as u64 * k,
        None => k * k * k,
    };
    BigInt::from(k) << exponent
}

/// The least-period sequence `f*_1, …, f*_K` of the super-exponential example.
pub fn gen_pathological_orbit_growth(k_max: usize) -> Result<Sequence, RateError> {
    if k_max < 2 {
        return Err(RateError::IndexBoundTooSmall(k_max));
    }
    Ok(Seq::from_fn(k_max, |k| pathological_least_period(k as u64))?)
}

/// The periodic-point counts `f_n = Σ_{d|n} f*_d` of the same example.
pub fn pathological_periodic_points(k_max: usize) -> Result<Sequence, RateError> {
    Ok(divisor_sum(&gen_pathological_orbit_growth(k_max)?)?)
}

/// Arithmetic shape of an index, used to pick subsequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexKind {
    One,
    Prime(u64),
    /// `p^r` with `r >= 2`.
    PrimePower { p: u64, r: u32 },
    /// `p·q` with distinct primes `p < q`.
    Semiprime { p: u64, q: u64 },
    Other,
}

impl IndexKind {
    pub fn of(n: u64) -> Self {
        match factorize(n).expect("n >= 1").as_slice() {
            [] => IndexKind::One,
            [(p, 1)] => IndexKind::Prime(*p),
            [(p, r)] => IndexKind::PrimePower { p: *p, r: *r },
            [(p, 1), (q, 1)] => IndexKind::Semiprime { p: *p, q: *q },
            _ => IndexKind::Other,
        }
    }

    pub fn tag(self) -> String {
        match self {
            IndexKind::One => "one".into(),
            IndexKind::Prime(_) => "prime".into(),
            IndexKind::PrimePower { p, r } => format!("prime-power({p}^{r})"),
            IndexKind::Semiprime { p, q } => format!("semiprime({p}*{q})"),
            IndexKind::Other => "-".into(),
        }
    }
}

/// `value / n^α` held exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scaled {
    pub value: BigInt,
    pub n: u64,
    pub alpha: Rational,
}

impl Scaled {
    /// Exact comparison of `value / n^α` with a rational.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        let (sx, sr) = (self.value.sign(), r.numer().sign());
        if sx != sr {
            let rank = |s: Sign| match s {
                Sign::Minus => 0,
                Sign::NoSign => 1,
                Sign::Plus => 2,
            };
            return rank(sx).cmp(&rank(sr));
        }
        if sx == Sign::NoSign {
            return Ordering::Equal;
        }
        let (a, b) = parts(&self.alpha);
        // |v|/n^(a/b) vs c/d  <=>  (|v|·d)^b vs c^b · n^a
        let lhs = num_traits::pow(self.value.abs() * r.denom(), b as usize);
        let rhs = num_traits::pow(r.numer().abs(), b as usize) * num_traits::pow(BigInt::from(self.n), a as usize);
        let ord = lhs.cmp(&rhs);
        if sx == Sign::Minus {
            ord.reverse()
        } else {
            ord
        }
    }

    /// `|value / n^α - target| <= tol`.
    pub fn within(&self, target: &Rational, tol: &Rational) -> bool {
        self.cmp_rational(&(target - tol)) != Ordering::Less
            && self.cmp_rational(&(target + tol)) != Ordering::Greater
    }

    /// Decimal rendering truncated to `places` digits.
    pub fn to_decimal(&self, places: u32) -> String {
        let (a, b) = parts(&self.alpha);
        let scale = num_traits::pow(BigUint::from(10u8), (places * b) as usize);
        let num = num_traits::pow(self.value.magnitude().clone(), b as usize) * scale;
        let den = num_traits::pow(BigUint::from(self.n), a as usize);
        let digits = integer_root(&(num / den), b).expect("b >= 1").to_string();
        let digits = format!("{digits:0>width$}", width = places as usize + 1);
        let (int, frac) = digits.split_at(digits.len() - places as usize);
        let sign = if self.value.is_negative() { "-" } else { "" };
        if places == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }
}

/// Natural logarithm of a positive integer of any size.
pub fn ln_big(x: &BigInt) -> Option<f64> {
    if !x.is_positive() {
        return None;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().map(f64::ln);
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64()?;
    Some(top.ln() + shift as f64 * std::f64::consts::LN_2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthRecord {
    pub n: u64,
    pub f: BigInt,
    pub f_star: BigInt,
    pub kind: IndexKind,
}

impl GrowthRecord {
    /// `(1/n)·log f_n`.
    pub fn log_rate(&self) -> Option<f64> {
        ln_big(&self.f).map(|l| l / self.n as f64)
    }

    /// `(1/n)·log f*_n`, `None` when `f*_n <= 0`.
    pub fn log_rate_star(&self) -> Option<f64> {
        ln_big(&self.f_star).map(|l| l / self.n as f64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthReport {
    pub alpha: Rational,
    pub records: Vec<GrowthRecord>,
}

impl GrowthReport {
    pub fn record(&self, n: u64) -> Option<&GrowthRecord> {
        n.checked_sub(1).and_then(|i| self.records.get(i as usize))
    }

    /// `f_n / n^α`.
    pub fn scaled_f(&self, n: u64) -> Option<Scaled> {
        self.record(n).map(|r| Scaled { value: r.f.clone(), n, alpha: self.alpha.clone() })
    }

    /// `f*_n / n^α`.
    pub fn scaled_f_star(&self, n: u64) -> Option<Scaled> {
        self.record(n).map(|r| Scaled { value: r.f_star.clone(), n, alpha: self.alpha.clone() })
    }

    /// `f*_n / f_n` as an exact rational.
    pub fn star_ratio(&self, n: u64) -> Option<Rational> {
        self.record(n).map(|r| Rational::new(r.f_star.clone(), r.f.clone()))
    }

    /// Tab-separated table: n, f, f*, f/n^α, f*/n^α, log-rates and tag.
    pub fn render(&self, places: u32) -> String {
        let mut out = format!("# n\tf\tf*\tf/n^{0}\tf*/n^{0}\tlog(f)/n\tlog(f*)/n\ttag\n", self.alpha);
        let fmt_log = |v: Option<f64>| v.map_or_else(|| "-".to_string(), |x| format!("{x:.prec$}", prec = places as usize));
        for r in &self.records {
            let sf = self.scaled_f(r.n).expect("present").to_decimal(places);
            let sfs = self.scaled_f_star(r.n).expect("present").to_decimal(places);
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.n,
                r.f,
                r.f_star,
                sf,
                sfs,
                fmt_log(r.log_rate()),
                fmt_log(r.log_rate_star()),
                r.kind.tag()
            );
        }
        out
    }
}

/// Per-index statistics for a positive sequence `f` and exponent `α > 0`.
pub fn growth_report(f: &Sequence, alpha: &Rational) -> Result<GrowthReport, RateError> {
    if !alpha.is_positive() {
        return Err(RateError::NonPositiveExponent(alpha.clone()));
    }
    if let Some((index, value)) = f.indexed().find(|(_, t)| !t.is_positive()) {
        return Err(RateError::NonPositive { index, value: value.clone() });
    }
    let f_star = least_period_counts(f)?;
    let records = f
        .indexed()
        .zip(f_star.iter())
        .map(|((n, fv), fs)| GrowthRecord {
            n: n as u64,
            f: fv.clone(),
            f_star: fs.clone(),
            kind: IndexKind::of(n as u64),
        })
        .collect();
    Ok(GrowthReport { alpha: alpha.clone(), records })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::sigma;
    use crate::transforms::{check_er, orbit_transform};

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn seq(v: &[i64]) -> Sequence {
        Seq::from_i64s(v).unwrap()
    }

    #[test]
    fn targets() {
        assert_eq!(RateTarget::Power(rat(3, 2)).value(4), BigInt::from(8));
        assert_eq!(RateTarget::Power(rat(3, 2)).value(5), BigInt::from(11));
        assert_eq!(RateTarget::Power(rat(2, 1)).value(7), BigInt::from(49));
        assert_eq!(RateTarget::Geometric(rat(3, 2)).value(5), BigInt::from(7));
        assert!(RateTarget::new_power(rat(0, 1)).is_err());
    }

    #[test]
    fn jordan_identity() {
        for k in [2u32, 3] {
            for n in 1..=1000u64 {
                let total: BigInt = divisors(n).unwrap().into_iter().map(|d| jordan_totient(d, k)).sum();
                assert_eq!(total, num_traits::pow(BigInt::from(n), k as usize), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn power_construction_alpha_two() {
        let rr = rr_construct_power(&rat(2, 1), 10).unwrap();
        assert_eq!(rr.orbit_counts, seq(&[1, 2, 3, 3, 5, 4, 7, 6, 8, 8]));
        assert_eq!(rr.periodic_points[1], BigInt::from(1));
        assert_eq!(rr.periodic_points[2], BigInt::from(5));
        assert_eq!(rr.periodic_points[4], BigInt::from(17));
        assert!(matches!(rr_construct_power(&rat(1, 1), 5), Err(RateError::AlphaTooSmall(_))));
    }

    // Independent check of the ceiling: ⌈x⌉ = c iff c-1 < x <= c, and for
    // x = m^α Π(p^α-1)/n each side reduces to comparing integer powers once
    // the product is expanded over divisors: J_α(n) = Σ_{d|n} μ(n/d) d^α.
    // Here we bracket J_α(n) using f64 with a wide margin and confirm the
    // exact ceiling sits in the bracket and agrees whenever it is unambiguous.
    #[test]
    fn rational_exponent_ceilings() {
        let alpha = rat(3, 2);
        let mu = crate::arith::mobius_table(200);
        for n in 1..=200u64 {
            let approx: f64 = divisors(n)
                .unwrap()
                .into_iter()
                .map(|d| mu[(n / d) as usize] as f64 * (d as f64).powf(1.5))
                .sum::<f64>()
                / n as f64;
            let c = orbit_count_ceiling(n, &alpha).unwrap().to_f64().unwrap();
            if (approx - approx.round()).abs() > 1e-6 {
                assert_eq!(c, approx.ceil(), "n={n}");
            } else {
                assert!((c - approx).abs() < 1.0 + 1e-6, "n={n}");
            }
        }
    }

    #[test]
    fn power_sandwich_rational_alpha() {
        let alpha = rat(3, 2);
        let rr = rr_construct_power(&alpha, 100).unwrap();
        let target = RateTarget::Power(alpha);
        for n in 1..=100u64 {
            let gap = &rr.periodic_points[n as usize] - target.value(n);
            assert!(!gap.is_negative(), "n={n}");
            assert!(gap <= sigma(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn geometric_construction() {
        let rr = rr_construct_geometric(&rat(2, 1), 12).unwrap();
        assert_eq!(&rr.orbit_counts.terms()[..5], seq(&[2, 1, 2, 3, 6]).terms());
        let powers = Seq::from_fn(12, |n| BigInt::one() << n).unwrap();
        assert_eq!(rr.periodic_points, powers);
        assert_eq!(rr.orbit_counts, orbit_transform(&powers).unwrap());

        let flat = rr_construct_geometric(&rat(1, 1), 8).unwrap();
        assert_eq!(flat.periodic_points, Seq::constant(BigInt::one(), 8).unwrap());

        let beta = rat(3, 2);
        let rr = rr_construct_geometric(&beta, 40).unwrap();
        let target = RateTarget::Geometric(beta);
        for n in 1..=40u64 {
            let partial: BigInt = divisors(n)
                .unwrap()
                .into_iter()
                .filter(|&d| d < n)
                .map(|d| &rr.orbit_counts[d as usize] * d)
                .sum();
            let t = target.value(n);
            if t >= partial {
                let gap = &rr.periodic_points[n as usize] - &t;
                assert!(!gap.is_negative() && gap < BigInt::from(n), "n={n}");
            }
        }
        assert!(check_er(&rr.periodic_points).unwrap().is_pass());
        assert!(matches!(rr_construct_geometric(&rat(1, 2), 4), Err(RateError::BetaTooSmall(_))));
    }

    #[test]
    fn slow_growth() {
        let root = Seq::from_fn(10_000, |n| BigInt::from((n as f64).sqrt().floor() as u64)).unwrap();
        let d = check_slow_growth_obstruction(&root);
        assert!(d.obstructed());
        assert_eq!(d.tail_start, Some(5));
        assert_eq!(d.tail_bound, Some(BigInt::from(10)));
        assert_eq!(d.witness, Some(441));

        let squares = Seq::from_fn(200, |n| BigInt::from(n * n)).unwrap();
        assert!(!check_slow_growth_obstruction(&squares).obstructed());
        let five = Seq::constant(BigInt::from(5), 1000).unwrap();
        let d = check_slow_growth_obstruction(&five);
        assert!(!d.obstructed());
        assert_eq!(d.tail_start, Some(11));
    }

    #[test]
    fn block_scheme() {
        let positions: Vec<usize> = (1..=10).map(block_position).collect();
        assert_eq!(positions, vec![1, 1, 2, 1, 2, 3, 1, 2, 3, 4]);
        assert_eq!(
            consecutive_prime_products(80),
            vec![(1, 6), (2, 15), (3, 35), (4, 77)]
        );
    }

    #[test]
    fn pathological_values() {
        let fs = gen_pathological_orbit_growth(40).unwrap();
        assert_eq!(fs[6], BigInt::from(6) << 6);
        assert_eq!(fs[15], BigInt::from(15) << 15);
        assert_eq!(fs[35], BigInt::from(35) << 70);
        assert_eq!(fs[4], BigInt::from(4) << 64);
        assert_eq!(pathological_least_period(221), BigInt::from(221) << (3 * 221));
        assert!(gen_pathological_orbit_growth(1).is_err());
        let f = pathological_periodic_points(40).unwrap();
        assert!(check_er(&f).unwrap().is_pass());
    }

    #[test]
    fn scaled_comparisons() {
        let s = Scaled { value: BigInt::from(17), n: 4, alpha: rat(2, 1) };
        assert_eq!(s.cmp_rational(&rat(17, 16)), Ordering::Equal);
        assert_eq!(s.cmp_rational(&rat(1, 1)), Ordering::Greater);
        assert_eq!(s.to_decimal(6), "1.062500");
        let r = Scaled { value: BigInt::from(10), n: 4, alpha: rat(3, 2) };
        assert_eq!(r.to_decimal(3), "1.250");
        assert!(r.within(&rat(5, 4), &rat(0, 1)));
        let irr = Scaled { value: BigInt::from(1), n: 2, alpha: rat(1, 2) };
        assert_eq!(irr.to_decimal(6), "0.707106");
        assert_eq!(irr.cmp_rational(&rat(707, 1000)), Ordering::Greater);
        assert_eq!(irr.cmp_rational(&rat(708, 1000)), Ordering::Less);
        let neg = Scaled { value: BigInt::from(-3), n: 1, alpha: rat(1, 1) };
        assert_eq!(neg.cmp_rational(&rat(-2, 1)), Ordering::Less);
        assert_eq!(neg.cmp_rational(&rat(1, 1)), Ordering::Less);
        assert_eq!(neg.to_decimal(1), "-3.0");
    }

    #[test]
    fn report_basics() {
        let ones = Seq::constant(BigInt::one(), 12).unwrap();
        let rep = growth_report(&ones, &rat(1, 1)).unwrap();
        assert!(rep.records.iter().all(|r| r.log_rate() == Some(0.0)));
        assert_eq!(rep.record(1).unwrap().log_rate_star(), Some(0.0));
        assert_eq!(rep.record(2).unwrap().log_rate_star(), None);
        assert_eq!(rep.record(7).unwrap().kind, IndexKind::Prime(7));
        assert_eq!(rep.record(9).unwrap().kind, IndexKind::PrimePower { p: 3, r: 2 });
        assert_eq!(rep.record(10).unwrap().kind, IndexKind::Semiprime { p: 2, q: 5 });
        assert_eq!(rep.record(12).unwrap().kind, IndexKind::Other);
        assert!(rep.render(6).lines().count() == 13);
        assert!(matches!(
            growth_report(&seq(&[1, 0, 2]), &rat(1, 1)),
            Err(RateError::NonPositive { index: 2, .. })
        ));
    }

    #[test]
    fn prime_square_statistic() {
        let rr = rr_construct_power(&rat(2, 1), 1000).unwrap();
        let rep = growth_report(&rr.periodic_points, &rat(2, 1)).unwrap();
        let s = rep.scaled_f_star(169).unwrap();
        assert!(s.within(&(Rational::one() - rat(1, 169)), &rat(1, 50)));
        assert!((ln_big(&(BigInt::one() << 5000)).unwrap() - 5000.0 * std::f64::consts::LN_2).abs() < 1e-6);
    }
}
