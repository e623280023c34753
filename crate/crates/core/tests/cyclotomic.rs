use gpgraph_core::{Classification, CyclotomicInteger, Error};
use num_bigint::BigInt;
use proptest::prelude::*;

fn z(p: u32, j: i64) -> CyclotomicInteger {
    CyclotomicInteger::root_power(p, j)
}

#[test]
fn canonical_examples() {
    // ζ + ζ^4 = -1 - ζ^2 - ζ^3, since 1 + ζ + … + ζ^4 = 0
    assert_eq!(
        z(5, 1) + z(5, 4),
        CyclotomicInteger::from_i64s(5, &[-1, 0, -1, -1, 0])
    );
    assert_eq!(z(3, 2), CyclotomicInteger::from_i64s(3, &[-1, -1, 0]));
    assert_eq!(z(5, 7), z(5, 2));
    let total = (0..7).fold(CyclotomicInteger::zero(7), |acc, j| acc + z(7, j));
    assert!(total.is_zero());
    assert_eq!(z(7, 1).conjugate(), z(7, 6));
    assert_eq!(
        z(5, 1).checked_add(&z(7, 1)),
        Err(Error::MixedRootOrders(5, 7))
    );
}

#[test]
fn classification_examples() {
    assert_eq!(
        CyclotomicInteger::integer(5, -1).classify(),
        Classification::Rational(BigInt::from(-1))
    );
    let golden = z(5, 1) + z(5, 4);
    assert_eq!(golden.classify(), Classification::RealIrrational);
    assert_eq!(z(7, 1).classify(), Classification::NonReal);
    let closed = 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos();
    assert!((golden.embed_numeric().re - closed).abs() < 1e-12);
    assert!(golden.embed_numeric().im.abs() < 1e-12);
    assert_eq!(golden.render_numeric(), "0.618034");
}

#[test]
fn gauss_sum_squares() {
    for p in [3u32, 5, 7, 11, 13, 17, 19] {
        let g = CyclotomicInteger::quadratic_gauss_sum(p);
        let sign = if p % 4 == 1 { 1 } else { -1 };
        assert_eq!(&g * &g, CyclotomicInteger::integer(p, sign * p as i64));
        assert_eq!(g.is_real(), p % 4 == 1);
    }
}

#[test]
fn exhaustive_small_conjugation() {
    // all vectors with entries in {-1, 0, 1} for p = 5
    for code in 0..3u32.pow(5) {
        let mut c = [0i64; 5];
        let mut rest = code;
        for slot in &mut c {
            *slot = (rest % 3) as i64 - 1;
            rest /= 3;
        }
        let a = CyclotomicInteger::from_i64s(5, &c);
        assert_eq!(a.classify() == Classification::NonReal, a != a.conjugate());
    }
}

fn arb(p: u32, bound: i64) -> impl Strategy<Value = CyclotomicInteger> {
    prop::collection::vec(-bound..=bound, p as usize)
        .prop_map(move |c| CyclotomicInteger::from_i64s(p, &c))
}

proptest! {
    #[test]
    fn ring_axioms(a in arb(7, 50), b in arb(7, 50), c in arb(7, 50)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert!((&a * &CyclotomicInteger::zero(7)).is_zero());
    }

    #[test]
    fn canonical_is_idempotent(c in prop::collection::vec(-100i64..100, 11)) {
        let a = CyclotomicInteger::from_i64s(11, &c);
        let again = CyclotomicInteger::from_coeffs(11, a.coeffs().to_vec());
        prop_assert_eq!(&again, &a);
        prop_assert_eq!(a.coeffs()[10].clone(), BigInt::from(0));
    }

    #[test]
    fn conjugation_is_an_involution(a in arb(13, 20)) {
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!(a.classify() == Classification::NonReal, a != a.conjugate());
    }

    #[test]
    fn embedding_is_multiplicative(a in arb(11, 1000), b in arb(11, 1000)) {
        let lhs = (&a * &b).embed_numeric();
        let rhs = a.embed_numeric() * b.embed_numeric();
        prop_assert!((lhs - rhs).norm_sqr().sqrt() <= 1e-9 * (1.0 + rhs.norm_sqr().sqrt()));
    }
}
