use lgw_core::rational::{int, rat, Rational};
use lgw_core::series::{TruncatedSeries, ZMonomial};
use proptest::prelude::*;

const ORDER: u32 = 4;

fn term() -> impl Strategy<Value = (ZMonomial, Rational)> {
    (
        (-2i64..=2, -2i64..=2),
        (0u32..=2, 0u32..=2),
        (-6i64..=6, 1i64..=5),
    )
        .prop_map(|((a, b), (p, q), (n, d))| (ZMonomial::new([a, b], [p, q]), rat(n, d)))
}

/// Arbitrary series with t-degree-0 part a constant.
fn any_series() -> impl Strategy<Value = TruncatedSeries> {
    (prop::collection::vec(term(), 0..5), -3i64..=3).prop_map(|(terms, c)| {
        let terms = terms.into_iter().filter(|(m, _)| m.t_degree() > 0);
        TruncatedSeries::from_terms(ORDER, terms.chain([(ZMonomial::ONE, int(c))]))
    })
}

/// `g ≡ 0 mod (t₁, t₂)`.
fn nilpotent() -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(term(), 0..5).prop_map(|terms| {
        TruncatedSeries::from_terms(ORDER, terms.into_iter().filter(|(m, _)| m.t_degree() > 0))
    })
}

fn unit() -> impl Strategy<Value = TruncatedSeries> {
    nilpotent().prop_map(|g| g.add(&TruncatedSeries::one(ORDER)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in any_series(), g in any_series(), h in any_series()) {
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.mul(&TruncatedSeries::one(ORDER)), f.clone());
        prop_assert!(f.sub(&f).is_zero());
        prop_assert_eq!(f.add(&f.neg()), TruncatedSeries::zero(ORDER));
    }

    #[test]
    fn exp_log_inverse(g in nilpotent(), u in unit()) {
        prop_assert_eq!(g.exp().unwrap().log1p().unwrap(), g.clone());
        prop_assert_eq!(u.log1p().unwrap().exp().unwrap(), u.clone());
        prop_assert!(u.mul(&u.inverse().unwrap()).is_one());
    }

    #[test]
    fn log_of_product(u in unit(), v in unit()) {
        let lhs = u.mul(&v).log1p().unwrap();
        let rhs = u.log1p().unwrap().add(&v.log1p().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn integer_powers_add(u in unit(), a in -4i64..=4, b in -4i64..=4) {
        let lhs = u.int_pow(a).unwrap().mul(&u.int_pow(b).unwrap());
        prop_assert_eq!(lhs, u.int_pow(a + b).unwrap());
    }

    #[test]
    fn coefficients_stay_canonical(f in any_series(), g in any_series(), u in unit()) {
        prop_assert!(f.mul(&g).is_canonical());
        prop_assert!(f.add(&g).is_canonical());
        prop_assert!(u.log1p().unwrap().is_canonical());
        prop_assert!(u.int_pow(-3).unwrap().is_canonical());
        prop_assert!(f.mul(&g).terms().all(|(m, _)| m.t_degree() <= ORDER));
    }

    #[test]
    fn json_round_trip(f in any_series()) {
        let s = serde_json::to_string(&f).unwrap();
        let back: TruncatedSeries = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, f);
    }
}

#[test]
fn rejects_non_units() {
    let two = TruncatedSeries::constant(int(2), ORDER);
    assert!(two.log1p().is_err());
    assert!(two.exp().is_err());
    let one_plus_x = TruncatedSeries::from_terms(
        ORDER,
        [(ZMonomial::ONE, int(1)), (ZMonomial::z(1, 0), int(1))],
    );
    assert!(one_plus_x.log1p().is_err());
}
