use foliate::scalar::{GaussRat, Scalar};
use num_rational::BigRational;
use proptest::prelude::*;

fn gauss(re: (i64, i64), im: (i64, i64)) -> GaussRat {
    GaussRat::new(
        BigRational::new(re.0.into(), re.1.into()),
        BigRational::new(im.0.into(), im.1.into()),
    )
}

fn coeff() -> impl Strategy<Value = GaussRat> {
    ((-4i64..=4, 1i64..=3), (-4i64..=4, 1i64..=3)).prop_map(|(re, im)| gauss(re, im))
}

/// Rational functions in `s` with small Gaussian-rational coefficients.
fn scalar() -> impl Strategy<Value = Scalar> {
    (prop::collection::vec(coeff(), 1..4), prop::collection::vec(coeff(), 1..3)).prop_filter_map(
        "zero denominator",
        |(num, den)| Scalar::from_coeffs(num, den).ok(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn addition_is_an_abelian_group(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &Scalar::zero(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn multiplication_is_commutative_and_associative(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
    }

    #[test]
    fn distributivity(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn nonzero_elements_are_invertible(a in scalar()) {
        prop_assume!(!a.is_zero());
        let inv = a.inv().unwrap();
        prop_assert!((&a * &inv).is_one());
        prop_assert_eq!(inv.inv().unwrap(), a);
    }

    #[test]
    fn conjugation_is_a_field_automorphism(a in scalar(), b in scalar()) {
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn display_is_canonical(a in scalar(), b in scalar()) {
        // Equal values print identically whatever arithmetic produced them.
        let lhs = &(&a + &b) * &(&a - &b);
        let rhs = &(&a * &a) - &(&b * &b);
        prop_assert_eq!(lhs.to_string(), rhs.to_string());
    }
}

#[test]
fn gaussian_examples() {
    assert_eq!(&Scalar::gauss(1, 1) * &Scalar::gauss(1, -1), Scalar::from_int(2));
    let si = &Scalar::s() + &Scalar::i();
    assert_eq!(si.conj(), &Scalar::s() - &Scalar::i());
    let expected = &(&Scalar::s() - &Scalar::i()) / &(&(&Scalar::s() * &Scalar::s()) + &Scalar::one());
    assert_eq!(si.inv().unwrap(), expected);
}
