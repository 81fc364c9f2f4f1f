//! Number-theoretic primitives: divisors, the Möbius function, factorization,
//! valuations, the Jacobi symbol, integer roots and prime enumeration.
//!
//! Everything here is exact. Factorization is deterministic trial division
//! (with a 2·3 wheel); Miller–Rabin is only used by [`is_prime`], which backs
//! prime enumeration and argument validation.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact rational number, always normalized with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{op}: argument must be at least 1, got {value}")]
    BelowOne { op: &'static str, value: String },
    #[error("p-adic valuation of zero is infinite")]
    ZeroValuation,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("Jacobi symbol modulus must be odd and positive, got {0}")]
    BadJacobiModulus(BigInt),
    #[error("root index must be at least 1")]
    ZeroRootIndex,
    #[error("invalid rational {input:?} at column {column}: {reason}")]
    BadRational {
        input: String,
        column: usize,
        reason: &'static str,
    },
}

fn below_one(op: &'static str, value: impl ToString) -> ArithError {
    ArithError::BelowOne {
        op,
        value: value.to_string(),
    }
}

/// All positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Result<Vec<u64>, ArithError> {
    if n == 0 {
        return Err(below_one("divisors", n));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// The Möbius function μ(n).
pub fn moebius(n: u64) -> Result<i8, ArithError> {
    if n == 0 {
        return Err(below_one("moebius", n));
    }
    let mut sign = 1i8;
    for (_, e) in factorize(n)? {
        if e > 1 {
            return Ok(0);
        }
        sign = -sign;
    }
    Ok(sign)
}

/// μ(0..=n_max) by a linear sieve; entry 0 is unused and set to 0.
pub fn mobius_table(n_max: usize) -> Vec<i8> {
    let mut mu = vec![0i8; n_max + 1];
    if n_max == 0 {
        return mu;
    }
    mu[1] = 1;
    let mut composite = vec![false; n_max + 1];
    let mut primes: Vec<usize> = Vec::new();
    for i in 2..=n_max {
        if !composite[i] {
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            let m = i * p;
            if m > n_max {
                break;
            }
            composite[m] = true;
            if i % p == 0 {
                mu[m] = 0;
                break;
            }
            mu[m] = -mu[i];
        }
    }
    mu
}

/// Prime factorization of `n` as `(prime, multiplicity)` in increasing prime order.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>, ArithError> {
    if n == 0 {
        return Err(below_one("factorize", n));
    }
    let mut rest = n;
    let mut out = Vec::new();
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut rest);
    push(3, &mut rest);
    // 6k ± 1 wheel
    let mut d = 5u64;
    while d.saturating_mul(d) <= rest {
        push(d, &mut rest);
        push(d + 2, &mut rest);
        d += 6;
    }
    if rest > 1 {
        out.push((rest, 1));
    }
    Ok(out)
}

/// Trial-division factorization of an arbitrary-precision integer.
///
/// Intended for desk-scale inputs whose prime factors (except possibly the
/// largest) are small; the cost is proportional to the square root of the
/// second-largest prime factor.
pub fn factorize_big(n: &BigUint) -> Result<Vec<(BigUint, u32)>, ArithError> {
    if n.is_zero() {
        return Err(below_one("factorize", n));
    }
    if let Some(small) = n.to_u64() {
        return Ok(factorize(small)?
            .into_iter()
            .map(|(p, e)| (BigUint::from(p), e))
            .collect());
    }
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut d = 2u64;
    loop {
        if let Some(small) = rest.to_u64() {
            out.extend(
                factorize(small)?
                    .into_iter()
                    .filter(|&(p, _)| p >= d)
                    .map(|(p, e)| (BigUint::from(p), e)),
            );
            return Ok(out);
        }
        let dd = BigUint::from(d);
        if &dd * &dd > rest {
            out.push((rest, 1));
            return Ok(out);
        }
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&dd);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push((dd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
}

/// All positive divisors of an arbitrary-precision integer, increasing.
pub fn divisors_big(n: &BigUint) -> Result<Vec<BigUint>, ArithError> {
    let mut divs = vec![BigUint::one()];
    for (p, e) in factorize_big(n)? {
        let current = divs.len();
        let mut power = BigUint::one();
        for _ in 0..e {
            power *= &p;
            for i in 0..current {
                divs.push(&divs[i] * &power);
            }
        }
    }
    divs.sort();
    Ok(divs)
}

/// Deterministic primality for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        r
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Incremental segmented sieve yielding 2, 3, 5, 7, …
#[derive(Debug, Clone)]
pub struct Primes {
    found: Vec<u64>,
    next: usize,
    sieved_to: u64,
}

impl Primes {
    const SEGMENT: u64 = 1 << 15;

    pub fn new() -> Self {
        Self {
            found: Vec::new(),
            next: 0,
            sieved_to: 2,
        }
    }

    // Sieves [sieved_to, hi). Base primes up to sqrt(hi) are already in `found`
    // because hi never exceeds sieved_to².
    fn extend(&mut self) {
        let lo = self.sieved_to;
        let hi = (lo + Self::SEGMENT).min(lo.saturating_mul(lo)).max(lo + 2);
        let mut is_composite = vec![false; (hi - lo) as usize];
        for &p in &self.found {
            if p * p >= hi {
                break;
            }
            let start = (p * p).max(lo.div_ceil(p) * p);
            let mut m = start;
            while m < hi {
                is_composite[(m - lo) as usize] = true;
                m += p;
            }
        }
        for (i, &c) in is_composite.iter().enumerate() {
            if !c {
                self.found.push(lo + i as u64);
            }
        }
        self.sieved_to = hi;
    }
}

impl Default for Primes {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for Primes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while self.next >= self.found.len() {
            self.extend();
        }
        self.next += 1;
        Some(self.found[self.next - 1])
    }
}

/// All primes `p <= n`.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    Primes::new().take_while(|&p| p <= n).collect()
}

/// Largest `e` with `p^e | n`.
pub fn padic_valuation(n: &BigInt, p: u64) -> Result<u64, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroValuation);
    }
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p));
    }
    let p = BigUint::from(p);
    let mut rest = n.magnitude().clone();
    let mut e = 0;
    loop {
        let (q, r) = rest.div_rem(&p);
        if !r.is_zero() {
            return Ok(e);
        }
        rest = q;
        e += 1;
    }
}

/// Removes every factor of `p` from `n`, returning the cofactor and the count.
pub fn strip_prime(n: &BigUint, p: u64) -> (BigUint, u64) {
    let p = BigUint::from(p);
    let mut rest = n.clone();
    let mut e = 0;
    if rest.is_zero() {
        return (rest, 0);
    }
    loop {
        let (q, r) = rest.div_rem(&p);
        if !r.is_zero() {
            return (rest, e);
        }
        rest = q;
        e += 1;
    }
}

/// The Jacobi symbol `(a / m)` for odd positive `m`.
pub fn jacobi(a: &BigInt, m: &BigInt) -> Result<i8, ArithError> {
    if !m.is_positive() || m.is_even() {
        return Err(ArithError::BadJacobiModulus(m.clone()));
    }
    let mut n = m.magnitude().clone();
    let mut a = a.mod_floor(m).magnitude().clone();
    let mut sign = 1i8;
    let three = BigUint::from(3u8);
    let five = BigUint::from(5u8);
    let four = BigUint::from(4u8);
    let eight = BigUint::from(8u8);
    while !a.is_zero() {
        let twos = a.trailing_zeros().unwrap_or(0);
        a >>= twos;
        let r8 = &n % &eight;
        if twos % 2 == 1 && (r8 == three || r8 == five) {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut n);
        if &a % &four == three && &n % &four == three {
            sign = -sign;
        }
        a %= &n;
    }
    Ok(if n.is_one() { sign } else { 0 })
}

/// `⌊n^(1/k)⌋`.
pub fn integer_root(n: &BigUint, k: u32) -> Result<BigUint, ArithError> {
    if k == 0 {
        return Err(ArithError::ZeroRootIndex);
    }
    Ok(n.nth_root(k))
}

/// Parses `p/q` or a bare integer `p` into a normalized rational.
pub fn parse_rational(input: &str) -> Result<Rational, ArithError> {
    let bad = |column: usize, reason: &'static str| ArithError::BadRational {
        input: input.to_string(),
        column,
        reason,
    };
    let trimmed = input.trim();
    let offset = input.find(trimmed).unwrap_or(0);
    let (num_str, den_str, den_col) = match trimmed.split_once('/') {
        Some((n, d)) => (n, d, offset + n.len() + 2),
        None => (trimmed, "1", 0),
    };
    if num_str.trim().is_empty() {
        return Err(bad(offset + 1, "missing numerator"));
    }
    let num: BigInt = num_str
        .trim()
        .parse()
        .map_err(|_| bad(offset + 1, "numerator is not an integer"))?;
    let den: BigInt = den_str
        .trim()
        .parse()
        .map_err(|_| bad(den_col, "denominator is not an integer"))?;
    if den.is_zero() {
        return Err(bad(den_col, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// `⌊a / b⌋` for `b > 0`.
pub fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

/// `⌈a / b⌉` for `b > 0`.
pub fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// True when `n` is the square of an integer (negative numbers never are).
pub fn is_square(n: &BigInt) -> bool {
    match n.sign() {
        Sign::Minus => false,
        Sign::NoSign => true,
        Sign::Plus => {
            let r = n.magnitude().sqrt();
            &r * &r == *n.magnitude()
        }
    }
}

/// σ(n), the sum of the divisors of `n`.
pub fn sigma(n: u64) -> Result<BigInt, ArithError> {
    Ok(divisors(n)?.into_iter().map(BigInt::from).sum())
}
