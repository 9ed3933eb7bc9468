use lgw_core::scattering::{
    build_nodal_cubic_diagram, complete, det, hamiltonian_error_terms, loop_product,
    loop_product_at, ray_function, ScatteringDiagram, Wall, CENTRAL_RAY, NODAL_CUBIC_LINES,
};
use lgw_core::series::{series, ZMonomial};

fn completed(order: u32) -> ScatteringDiagram {
    complete(&build_nodal_cubic_diagram(order).unwrap(), order).unwrap()
}

#[test]
fn consistent_at_order_eight() {
    let d = completed(8);
    assert!(loop_product(&d).unwrap().is_identity());
    // every order below is consistent too
    for k in 1..=8 {
        assert!(loop_product_at(&d, k).unwrap().is_identity(), "order {k}");
    }
}

#[test]
fn rays_lie_between_the_initial_lines() {
    let d = completed(8);
    let [l1, l2] = NODAL_CUBIC_LINES;
    for w in d.rays() {
        let m = w.direction();
        assert!(m[1] > 0 && m[1] > 3 * m[0], "{m:?}");
        assert!(det(l2, m) > 0 && det(m, l1) > 0, "{m:?}");
    }
}

#[test]
fn ray_functions_have_integer_coefficients() {
    let d = completed(8);
    for w in d.rays() {
        assert!(
            w.function().has_integer_coefficients(),
            "{:?}: {}",
            w.direction(),
            w.function()
        );
        assert!(w.function().is_canonical());
    }
}

#[test]
fn ray_monomials_follow_the_grading() {
    // a term t₁^p t₂^q on any ray has z-exponent p·(−1,0) + q·(1,3)
    let d = completed(8);
    for w in d.rays() {
        for (m, _) in w.function().terms().filter(|(m, _)| !m.is_one()) {
            let [p, q] = m.t;
            assert_eq!(m.z, [q as i64 - p as i64, 3 * q as i64], "{m}");
        }
    }
    let central = ray_function(&d, CENTRAL_RAY);
    for (m, _) in central.terms() {
        assert_eq!(m.t[0], m.t[1]);
        assert_eq!(m.z, [0, 3 * m.t[0] as i64]);
    }
}

#[test]
fn first_error_is_hamiltonian() {
    let d = build_nodal_cubic_diagram(4).unwrap();
    for k in 1..=2 {
        let action = loop_product_at(&d, k).unwrap();
        assert!(hamiltonian_error_terms(&action, k).is_ok());
    }
}

#[test]
fn higher_order_completion_extends_lower() {
    let low = completed(4);
    let high = completed(8);
    for w in low.rays() {
        assert_eq!(
            ray_function(&high, w.direction()).truncate(4),
            w.function().truncate(4)
        );
    }
}

#[test]
fn central_ray_low_orders() {
    let d = completed(4);
    let f = ray_function(&d, CENTRAL_RAY);
    assert_eq!(
        f.coefficient(&ZMonomial::new([0, 3], [1, 1])).unwrap(),
        lgw_core::rational::int(9)
    );
}

#[test]
fn parallel_lines_commute() {
    let f = series(4, &[(1, 1, [0, 0], [0, 0]), (1, 1, [1, 0], [1, 0])]);
    let g = series(4, &[(1, 1, [0, 0], [0, 0]), (1, 1, [0, 1], [0, 1])]);
    let single = ScatteringDiagram::new(4, vec![Wall::line([1, 0], f).unwrap()]).unwrap();
    assert!(loop_product(&single).unwrap().is_identity());
    let single = ScatteringDiagram::new(4, vec![Wall::line([0, 1], g).unwrap()]).unwrap();
    assert!(complete(&single, 4).unwrap().rays().next().is_none());
}
