use lgw_core::degeneration::{degeneration_sum, partitions};
use lgw_core::rational::{self, int};
use lgw_core::tropical::{
    check_balancing, check_embedding, count_f2, count_p2_toric, curve_multiplicity, enumerate,
    p2_toric_degree, vertex_multiplicity, Conditions, SearchBounds, TropicalError,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn plane_count_is_independent_of_points(seed in any::<u64>(), d in 1i64..=5) {
        let r = count_p2_toric(d, seed).unwrap();
        prop_assert_eq!(r.total, int(d * d));
        prop_assert_eq!(r.curves.len(), 1);
    }

    #[test]
    fn f2_counts_are_independent_of_points(seed in any::<u64>()) {
        for d in 1..=3u32 {
            for m in partitions(d as i64).unwrap() {
                let r = count_f2(d, &m, seed).unwrap();
                let parts: u32 = m.exponents().iter().sum();
                prop_assert_eq!(r.total, int((2 * d as i64).pow(parts)));
            }
        }
    }

    #[test]
    fn enumerated_curves_are_valid(seed in any::<u64>()) {
        for d in 1..=3u32 {
            for m in partitions(d as i64).unwrap() {
                let r = count_f2(d, &m, seed).unwrap();
                for (c, w) in &r.curves {
                    prop_assert!(check_balancing(c));
                    prop_assert!(c.curve_type.is_tree());
                    prop_assert!(check_embedding(c, &r.conditions));
                    prop_assert_eq!(&curve_multiplicity(c).unwrap(), w);
                    for v in 0..c.curve_type.vertex_count {
                        prop_assert!(vertex_multiplicity(&c.curve_type, v).unwrap() > 0);
                    }
                }
            }
        }
    }
}

#[test]
fn cross_module_agreement() {
    for d in 1..=3u32 {
        let n = degeneration_sum(d as i64, |m| count_f2(d, m, 99).map(|r| r.total)).unwrap();
        assert_eq!(
            n,
            rational::from_bigint(rational::binomial(2 * d as u64, d as u64))
        );
    }
}

#[test]
fn degree_three_f2_breakdown() {
    let totals: Vec<_> = partitions(3)
        .unwrap()
        .iter()
        .map(|m| count_f2(3, m, 5).unwrap().total)
        .collect();
    assert_eq!(totals, vec![int(216), int(36), int(6)]);
}

#[test]
fn explicit_degenerate_points_error() {
    let deg = p2_toric_degree(2).unwrap();
    let p = |x: i64, y: i64| [int(x), int(y)];
    let cond = Conditions {
        points: vec![p(0, 0), p(3, 3)],
        anchors: vec![None; 3],
    };
    assert!(matches!(
        enumerate(&deg, &cond, &SearchBounds::default()),
        Err(TropicalError::Degenerate(_))
    ));
}
