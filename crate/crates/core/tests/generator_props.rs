use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use proptest::prelude::*;

use periodic_orbits::arith::Rational;
use periodic_orbits::generators::{
    gen_binomial, gen_named, gen_s_integer_connected, gen_s_integer_zero_dim_example, gen_sft_trace, gen_toral_det,
    BinomialSpec, MatrixSpec, NamedSequence, SIntegerSpec,
};
use periodic_orbits::{check_er, IntMatrix, Seq, Sequence};

const PRIMES: [usize; 9] = [2, 3, 5, 7, 11, 13, 17, 19, 23];

fn assert_er(s: &Sequence, what: &str) {
    assert!(check_er(s).unwrap().is_pass(), "{what}: {s}");
}

#[test]
fn every_generator_is_realizable() {
    let n = 30;
    for rows in [[[1, 1], [1, 0]], [[2, 1], [1, 1]], [[0, 1], [1, 1]], [[3, 0], [0, 2]]] {
        let m = IntMatrix::from_i64_rows(&rows).unwrap();
        assert_er(&gen_sft_trace(&MatrixSpec::nonnegative(m).unwrap(), n).unwrap(), "sft");
    }
    for rows in [vec![vec![2, 1], vec![1, 1]], vec![vec![1, 1], vec![1, 0]], vec![vec![0, 0, 1], vec![1, 0, -1], vec![0, 1, 0]]] {
        let m = IntMatrix::from_i64_rows(&rows).unwrap();
        assert_er(&gen_toral_det(&MatrixSpec::invertible(m).unwrap(), n).unwrap(), "toral");
    }
    for (k, j) in [(2, 1), (3, 1), (3, 2), (4, 2), (5, 2)] {
        assert_er(&gen_binomial(BinomialSpec::new(k, j).unwrap(), n).unwrap(), "binomial");
    }
    let specs = [
        (Rational::from_integer(2.into()), vec![2, 3, 5, 7]),
        (Rational::from_integer(3.into()), vec![]),
        (Rational::new(3.into(), 2.into()), vec![2]),
        (Rational::new(5.into(), 6.into()), vec![2, 3, 5]),
        (Rational::from_integer((-2).into()), vec![3]),
    ];
    for (xi, primes) in specs {
        assert_er(&gen_s_integer_connected(&SIntegerSpec::new(xi, primes).unwrap(), n).unwrap(), "s-integer");
    }
    assert_er(&gen_s_integer_zero_dim_example(n).unwrap(), "zero-dimensional");
    for name in [
        NamedSequence::Constant(7.into()),
        NamedSequence::Power(3.into()),
        NamedSequence::RK(2),
        NamedSequence::RK(5),
        NamedSequence::RProduct,
        NamedSequence::AltPrime,
    ] {
        assert_er(&gen_named(&name, n).unwrap(), "named");
    }
}

#[test]
fn r_product_is_product_of_r_k() {
    let n = 20;
    let product = gen_named(&NamedSequence::RProduct, n).unwrap();
    for m in 2..=n {
        let direct: BigInt = (1..m as u64).map(|k| gen_named(&NamedSequence::RK(k), n).unwrap()[m].clone()).product();
        assert_eq!(product[m], direct, "n={m}");
    }
}

proptest! {
    #[test]
    fn trace_congruence(dim in 1usize..=4, entries in proptest::collection::vec(0i64..=9, 16)) {
        let rows: Vec<Vec<i64>> = (0..dim).map(|i| entries[i * dim..(i + 1) * dim].to_vec()).collect();
        let m = IntMatrix::from_i64_rows(&rows).unwrap();
        let t = gen_sft_trace(&MatrixSpec::nonnegative(m).unwrap(), 23).unwrap();
        for p in PRIMES {
            prop_assert!((&t[p] - &t[1]).is_multiple_of(&BigInt::from(p)));
        }
    }

    #[test]
    fn untouched_integers_give_power_minus_one(xi in 2i64..=50, n in 1usize..=25) {
        let s = gen_s_integer_connected(&SIntegerSpec::new(BigInt::from(xi).into(), vec![]).unwrap(), n).unwrap();
        prop_assert_eq!(s, Seq::from_fn(n, |k| num_traits::pow(BigInt::from(xi), k) - BigInt::one()).unwrap());
    }
}
