use lgw_core::toricgeo::{fan_from_self_intersections, p2_fan, Fan};
use proptest::prelude::*;

/// Fans reachable from the plane by blow-ups at the given corners.
fn blown_up(corners: &[usize]) -> Fan {
    corners
        .iter()
        .fold(p2_fan(), |f, &c| f.blow_up(c % f.len(), None).unwrap())
}

/// Products of the generators (1 1; 0 1) and (0 -1; 1 0).
fn sl2(word: &[bool]) -> [[i64; 2]; 2] {
    let mut m = [[1, 0], [0, 1]];
    for &w in word {
        let g = if w {
            [[1, 1], [0, 1]]
        } else {
            [[0, -1], [1, 0]]
        };
        let mut out = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = m[i][0] * g[0][j] + m[i][1] * g[1][j];
            }
        }
        m = out;
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn noether_sum(corners in prop::collection::vec(0usize..20, 0..6)) {
        let f = blown_up(&corners);
        let a: i64 = f.self_intersections().iter().sum();
        prop_assert_eq!(a, 12 - 3 * f.len() as i64);
    }

    #[test]
    fn rebuild_from_self_intersections(corners in prop::collection::vec(0usize..20, 0..6)) {
        let f = blown_up(&corners);
        let g = fan_from_self_intersections(&f.self_intersections()).unwrap();
        prop_assert!(g.sl2_equivalence(&f).is_some());
        prop_assert_eq!(g.self_intersections(), f.self_intersections());
    }

    #[test]
    fn sl2_invariance(corners in prop::collection::vec(0usize..20, 0..5), word in prop::collection::vec(any::<bool>(), 0..8)) {
        let f = blown_up(&corners);
        let m = sl2(&word);
        let g = f.apply_sl2(&m).unwrap();
        let mut a = f.self_intersections();
        let mut b = g.self_intersections();
        // same cyclic sequence, possibly rotated
        let n = a.len();
        let rotated = (0..n).any(|_| {
            b.rotate_left(1);
            a == b
        });
        prop_assert!(rotated);
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
        prop_assert!(f.sl2_equivalence(&g).is_some());
    }

    #[test]
    fn blow_up_then_down(corners in prop::collection::vec(0usize..20, 0..5), c in 0usize..20) {
        let f = blown_up(&corners);
        let c = c % f.len();
        let next = (c + 1) % f.len();
        let new = [f.rays()[c][0] + f.rays()[next][0], f.rays()[c][1] + f.rays()[next][1]];
        let g = f.blow_up(c, None).unwrap();
        let i = g.index_of(new).unwrap();
        prop_assert_eq!(g.self_intersections()[i], -1);
        prop_assert_eq!(g.blow_down(i).unwrap(), f);
    }
}

#[test]
fn fan_json_round_trip() {
    let f = blown_up(&[0, 2]);
    let s = serde_json::to_string(&f).unwrap();
    let back: Fan = serde_json::from_str::<Fan>(&s)
        .unwrap()
        .validated()
        .unwrap();
    assert_eq!(back, f);
}
