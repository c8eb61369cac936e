//! Carrier properties: canonical forms survive arithmetic, quaternion norm
//! and conjugation behave, polynomial degrees add, and non-commutativity is
//! witnessed where claimed.

use ca_kernel::value::sample::sample_value;
use ca_kernel::{Polynomial, Quaternion, TypeTag, Value};
use num::integer::Integer as _;
use num::{One, Signed};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_rational() -> impl Strategy<Value = Value> {
    (-99i64..=99, 1i64..=99).prop_map(|(n, d)| Value::rational(n, d))
}

fn arb_quaternion() -> impl Strategy<Value = Quaternion> {
    let r = (-9i64..=9, 1i64..=9).prop_map(|(n, d)| num::BigRational::new(n.into(), d.into()));
    (r.clone(), r.clone(), r.clone(), r).prop_map(|(a, b, c, d)| Quaternion::new(a, b, c, d))
}

fn assert_canonical(v: &Value) {
    match v {
        Value::Rational(r) => {
            assert!(r.denom().is_positive(), "denominator must be positive");
            assert!(
                r.numer().gcd(r.denom()).is_one(),
                "fraction must be reduced: {r}"
            );
        }
        other => panic!("expected a rational, got {other:?}"),
    }
}

proptest! {
    #[test]
    fn rational_results_stay_canonical(a in arb_rational(), b in arb_rational()) {
        assert_canonical(&a.add(&b).unwrap());
        assert_canonical(&a.mul(&b).unwrap());
        assert_canonical(&a.sub(&b).unwrap());
        if !b.is_zero() {
            assert_canonical(&a.div(&b).unwrap());
        }
    }

    #[test]
    fn quaternion_norm_is_multiplicative(a in arb_quaternion(), b in arb_quaternion()) {
        prop_assert_eq!(a.mul(&b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn quaternion_conjugation_reverses_products(a in arb_quaternion(), b in arb_quaternion()) {
        prop_assert_eq!(a.mul(&b).conj(), b.conj().mul(&a.conj()));
    }

    #[test]
    fn quaternion_inverse_hits_the_unit(q in arb_quaternion()) {
        prop_assume!(!q.is_zero());
        let inv = q.inversion().unwrap();
        prop_assert!(q.mul(&inv).is_one());
    }

    #[test]
    fn polynomial_degrees_add(
        ca in proptest::collection::vec(-9i64..=9, 1..5),
        cb in proptest::collection::vec(-9i64..=9, 1..5),
    ) {
        let make = |cs: &[i64]| {
            Polynomial::new(
                TypeTag::Rational,
                cs.iter().map(|&c| Value::rational(c, 1)).collect(),
            )
            .unwrap()
        };
        let p = make(&ca);
        let q = make(&cb);
        prop_assume!(!p.is_zero() && !q.is_zero());
        let prod = p.mul(&q).unwrap();
        prop_assert_eq!(
            prod.degree().unwrap(),
            p.degree().unwrap() + q.degree().unwrap()
        );
    }
}

#[test]
fn non_commutativity_is_witnessed_in_random_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for tag in [TypeTag::Quaternion, TypeTag::matrix(TypeTag::Rational, 2)] {
        let witnessed = (0..200).any(|_| {
            let a = sample_value(&tag, &mut rng);
            let b = sample_value(&tag, &mut rng);
            a.mul(&b).unwrap() != b.mul(&a).unwrap()
        });
        assert!(witnessed, "no non-commuting pair found for {tag}");
    }
}

#[test]
fn matrix_division_is_multiplication_by_the_inverse() {
    let entries = |vals: [i64; 4]| -> Value {
        Value::Matrix(
            ca_kernel::Matrix::new(
                TypeTag::Rational,
                2,
                vals.iter().map(|&v| Value::rational(v, 1)).collect(),
            )
            .unwrap(),
        )
    };
    let a = entries([1, 2, 3, 4]);
    let b = entries([2, 0, 0, 2]);
    let quotient = a.div(&b).unwrap();
    assert_eq!(quotient.mul(&b).unwrap(), a);
    let singular = entries([1, 2, 2, 4]);
    assert!(a.div(&singular).is_err());
}
