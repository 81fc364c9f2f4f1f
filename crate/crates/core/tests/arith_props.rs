use num_bigint::{BigInt, BigUint};
use num_traits::One;
use proptest::prelude::*;

use periodic_orbits::arith::{divisors, factorize, integer_root, is_prime, jacobi, moebius, parse_rational, Rational};

#[test]
fn moebius_sums_vanish() {
    for n in 1..=10_000u64 {
        let s: i64 = divisors(n).unwrap().into_iter().map(|d| i64::from(moebius(d).unwrap())).sum();
        assert_eq!(s, i64::from(n == 1), "n={n}");
    }
}

#[test]
fn jacobi_matches_residues() {
    for p in (3..100u64).filter(|&p| is_prime(p)) {
        let squares: Vec<u64> = (1..p).map(|x| x * x % p).collect();
        for a in 0..p {
            let expected = if a == 0 {
                0
            } else if squares.contains(&a) {
                1
            } else {
                -1
            };
            assert_eq!(jacobi(&BigInt::from(a), &BigInt::from(p)).unwrap(), expected, "a={a} p={p}");
        }
    }
}

proptest! {
    #[test]
    fn factorize_reconstructs(n in 1u64..=1_000_000) {
        let f = factorize(n).unwrap();
        prop_assert!(f.iter().all(|&(p, _)| is_prime(p)));
        prop_assert!(f.windows(2).all(|w| w[0].0 < w[1].0));
        prop_assert_eq!(f.iter().map(|&(p, e)| p.pow(e)).product::<u64>(), n);
    }

    #[test]
    fn integer_root_brackets(bytes in proptest::collection::vec(any::<u8>(), 32), k in 1u32..=9) {
        let n = BigUint::from_bytes_le(&bytes);
        let r = integer_root(&n, k).unwrap();
        prop_assert!(num_traits::pow(r.clone(), k as usize) <= n);
        prop_assert!(num_traits::pow(r + BigUint::one(), k as usize) > n);
    }

    #[test]
    fn rationals_normalize(num in -1000i64..1000, den in 1i64..1000) {
        let r = parse_rational(&format!("{}/{}", num * 3, den * 3)).unwrap();
        prop_assert_eq!(r, Rational::new(num.into(), den.into()));
    }
}
