//! The end-to-end checks behind `lgw acceptance`. Each check compares a
//! pipeline result with an independently computed expected value.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::degeneration::{
    degeneration_sum, line_conic_invariant, line_conic_series_coefficient, partitions,
};
use crate::rational::{self, Rational};
use crate::scattering::{
    build_nodal_cubic_diagram, complete, loop_product, ray_function, ScatteringDiagram, Wall,
    CENTRAL_RAY,
};
use crate::series::{univariate, TruncatedSeries, ZMonomial};
use crate::toricgeo::{
    chow_verify_blowup_plane, fan_from_self_intersections, line_conic_toric_model,
    nodal_cubic_toric_model, specialization_checks,
};
use crate::tropical::{
    check_balancing, check_embedding, count_f2, count_p2_toric, curve_multiplicity, CountResult,
};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AcceptanceConfig {
    /// Truncation order for the scattering checks.
    pub order: u32,
    pub seed: u64,
}

impl Default for AcceptanceConfig {
    fn default() -> Self {
        AcceptanceConfig {
            order: 8,
            seed: crate::tropical::DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn outcome(id: u32, name: &'static str, r: Result<(bool, String), Error>) -> Criterion {
    match r {
        Ok((pass, detail)) => Criterion {
            id,
            name,
            pass,
            detail,
        },
        Err(e) => Criterion {
            id,
            name,
            pass: false,
            detail: format!("error: {e}"),
        },
    }
}

pub fn run(cfg: &AcceptanceConfig) -> Vec<Criterion> {
    vec![
        outcome(
            1,
            "plane, toric boundary: N_d = d^2, one curve, d = 1..6",
            toric_p2(cfg),
        ),
        outcome(
            2,
            "F2 counts equal the product of (2d)^m_l, d <= 3",
            f2_counts(cfg),
        ),
        outcome(
            3,
            "line and conic: degeneration sum = C(2d,d) = series coefficient, d = 1..12",
            line_conic(),
        ),
        outcome(
            4,
            "line and conic from tropical F2 counts, d <= 3",
            cross_pipeline(cfg),
        ),
        outcome(
            5,
            "scattering: completed diagram is consistent, pentagon has one ray",
            scattering(cfg),
        ),
        outcome(
            6,
            "nodal cubic: log of the central function matches 3 log of the Fuss-Catalan series",
            nodal_cubic(cfg),
        ),
        outcome(
            7,
            "toric models reach [0,-2,0,2] and [0,-3,0,3]",
            toric_models(),
        ),
        outcome(8, "Chow relations and the specialisation of [H]", chow()),
        outcome(
            9,
            "curve invariants, ring identities, deterministic output",
            properties(cfg),
        ),
    ]
}

fn toric_p2(cfg: &AcceptanceConfig) -> Result<(bool, String), Error> {
    let mut bad = Vec::new();
    for d in 1..=6i64 {
        let r = count_p2_toric(d, cfg.seed)?;
        if r.total != rational::int(d * d) || r.curves.len() != 1 {
            bad.push(format!(
                "d={d}: N={} with {} curves",
                r.total,
                r.curves.len()
            ));
        }
    }
    Ok(verdict(bad, "N_1..N_6 = 1,4,9,16,25,36"))
}

fn product_formula(d: u32, m: &crate::degeneration::Partition) -> Rational {
    let parts: u32 = m.exponents().iter().sum();
    rational::from_bigint(num_traits::pow(BigInt::from(2 * d), parts as usize))
}

fn f2_counts(cfg: &AcceptanceConfig) -> Result<(bool, String), Error> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for d in 1..=3u32 {
        for m in partitions(d as i64)? {
            let r = count_f2(d, &m, cfg.seed)?;
            checked += 1;
            if r.total != product_formula(d, &m) {
                bad.push(format!("d={d} m={:?}: {}", m.exponents(), r.total));
            }
        }
    }
    Ok(verdict(bad, &format!("{checked} partitions")))
}

fn line_conic() -> Result<(bool, String), Error> {
    let mut bad = Vec::new();
    for d in 1..=12u32 {
        let binom = rational::from_bigint(rational::binomial(2 * d as u64, d as u64));
        let sum = line_conic_invariant(d as i64)?;
        let coeff = line_conic_series_coefficient(d)?;
        if sum != binom || coeff != binom {
            bad.push(format!(
                "d={d}: sum {sum}, coefficient {coeff}, binomial {binom}"
            ));
        }
    }
    Ok(verdict(bad, "N_12 = 2704156"))
}

fn cross_pipeline(cfg: &AcceptanceConfig) -> Result<(bool, String), Error> {
    let mut bad = Vec::new();
    for d in 1..=3u32 {
        let n = degeneration_sum(d as i64, |m| {
            count_f2(d, m, cfg.seed)
                .map(|r| r.total)
                .map_err(Error::from)
        })?;
        let binom = rational::from_bigint(rational::binomial(2 * d as u64, d as u64));
        if n != binom {
            bad.push(format!("d={d}: {n}"));
        }
    }
    Ok(verdict(bad, "2, 6, 20"))
}

fn pentagon(order: u32) -> Result<ScatteringDiagram, Error> {
    let f = |z: [i64; 2], t: [u32; 2]| {
        TruncatedSeries::from_terms(
            order,
            [
                (ZMonomial::ONE, Rational::one()),
                (ZMonomial::new(z, t), Rational::one()),
            ],
        )
    };
    Ok(ScatteringDiagram::new(
        order,
        vec![
            Wall::line([1, 0], f([1, 0], [1, 0]))?,
            Wall::line([0, 1], f([0, 1], [0, 1]))?,
        ],
    )?)
}

fn scattering(cfg: &AcceptanceConfig) -> Result<(bool, String), Error> {
    let n = cfg.order;
    let completed = complete(&build_nodal_cubic_diagram(n)?, n)?;
    let consistent = loop_product(&completed)?.is_identity();
    let p = complete(&pentagon(n)?, n)?;
    let rays: Vec<_> = p.rays().collect();
    let expected = TruncatedSeries::from_terms(
        n,
        [
            (ZMonomial::ONE, Rational::one()),
            (ZMonomial::new([1, 1], [1, 1]), Rational::one()),
        ],
    );
    let pentagon_ok =
        rays.len() == 1 && rays[0].direction() == [1, 1] && rays[0].function() == &expected;
    Ok((
        consistent && pentagon_ok,
        format!(
            "order {n}: {} rays added, loop product identity: {consistent}; pentagon rays: {}",
            completed.rays().count(),
            rays.len()
        ),
    ))
}

/// `3·log A(x)` with `A = Σ C(4k,k)/(3k+1) x^k`, through `x^max`.
fn fuss_catalan_log(max: u32) -> Result<Vec<Rational>, Error> {
    let coeffs: Vec<BigInt> = (0..=max as u64)
        .map(|k| rational::binomial(4 * k, k) / BigInt::from(3 * k + 1))
        .collect();
    let a = univariate(max, &coeffs);
    let log_a = a.log1p()?.scale(&rational::int(3));
    Ok((0..=max)
        .map(|k| log_a.coeff(&ZMonomial::new([0, 0], [k, 0])))
        .collect())
}

fn nodal_cubic(cfg: &AcceptanceConfig) -> Result<(bool, String), Error> {
    const THROUGH: u32 = 4;
    let n = cfg.order;
    let reachable = (n / 2).min(THROUGH);
    let oracle = fuss_catalan_log(THROUGH)?;
    let completed = complete(&build_nodal_cubic_diagram(n)?, n)?;
    let log_f = ray_function(&completed, CENTRAL_RAY).log1p()?;
    let mut bad = Vec::new();
    let mut values = Vec::new();
    for d in 1..=reachable {
        let c = log_f.coefficient(&ZMonomial::new([0, 3 * d as i64], [d, d]))?;
        // the x^d coefficient of Σ d·N_d x^d is d·N_d, and [log f] = 3d·N_d
        let n_d = &c / rational::int(3 * d as i64);
        if &n_d * rational::int(d as i64) != oracle[d as usize] {
            bad.push(format!("d={d}: N_d={n_d}"));
        }
        values.push(format!("N_{d}={n_d}"));
    }
    let known = [rational::int(3), rational::rat(21, 4), rational::rat(55, 3)];
    for (i, v) in known.iter().enumerate() {
        let d = i as u32 + 1;
        if d <= reachable && oracle[d as usize] != v * rational::int(d as i64) {
            bad.push(format!("oracle disagrees at d={d}"));
        }
    }
    if reachable < THROUGH {
        bad.push(format!(
            "order {n} determines N_d only through d={reachable}"
        ));
    }
    let detail = values.join(", ");
    Ok(match verdict_with(bad, detail.clone()) {
        (false, why) if !detail.is_empty() => (false, format!("{detail}; {why}")),
        v => v,
    })
}

fn toric_models() -> Result<(bool, String), Error> {
    let mut bad = Vec::new();
    for (stages, expected) in [
        (line_conic_toric_model()?, vec![0, -2, 0, 2]),
        (nodal_cubic_toric_model()?, vec![0, -3, 0, 3]),
    ] {
        let fan = &stages.last().expect("stages").1;
        let a = fan.self_intersections();
        if a != expected {
            bad.push(format!("{a:?} != {expected:?}"));
        }
        let rebuilt = fan_from_self_intersections(&a)?;
        if rebuilt.sl2_equivalence(fan).is_none() || rebuilt.self_intersections() != a {
            bad.push(format!("{a:?} does not round-trip"));
        }
    }
    Ok(verdict(bad, "[0,-2,0,2], [0,-3,0,3]"))
}

fn chow() -> Result<(bool, String), Error> {
    let bad: Vec<String> = chow_verify_blowup_plane()
        .into_iter()
        .chain(specialization_checks())
        .filter(|r| !r.pass)
        .map(|r| format!("{}: got {}", r.relation, r.actual))
        .collect();
    Ok(verdict(bad, "10 relations, sigma([H]) = (D2, H2-L)"))
}

fn curve_invariants(r: &CountResult, bad: &mut Vec<String>, what: &str) -> Result<(), Error> {
    for (c, m) in &r.curves {
        if !check_balancing(c) || !c.curve_type.is_tree() || !check_embedding(c, &r.conditions) {
            bad.push(format!("{what}: curve fails balancing/tree/embedding"));
        }
        if &curve_multiplicity(c)? != m {
            bad.push(format!("{what}: multiplicity mismatch"));
        }
    }
    Ok(())
}

fn properties(cfg: &AcceptanceConfig) -> Result<(bool, String), Error> {
    let mut bad = Vec::new();
    for d in 1..=3i64 {
        curve_invariants(
            &count_p2_toric(d, cfg.seed)?,
            &mut bad,
            &format!("P2 d={d}"),
        )?;
    }
    for d in 1..=3u32 {
        for m in partitions(d as i64)? {
            curve_invariants(
                &count_f2(d, &m, cfg.seed)?,
                &mut bad,
                &format!("F2 {:?}", m.exponents()),
            )?;
        }
    }
    let series_ok = ring_spot_checks(cfg.seed)?;
    if !series_ok {
        bad.push("series identities".into());
    }
    let a = serde_json::to_string(&count_summary(cfg.seed)?).expect("json");
    let b = serde_json::to_string(&count_summary(cfg.seed)?).expect("json");
    if a != b {
        bad.push("repeated run differs".into());
    }
    Ok(verdict(
        bad,
        "all enumerated curves balanced, trees, correctly weighted",
    ))
}

fn count_summary(seed: u64) -> Result<Vec<(String, String)>, Error> {
    let m = crate::degeneration::Partition::new(vec![1, 1, 0])?;
    let r = count_f2(3, &m, seed)?;
    Ok(r.curves
        .iter()
        .map(|(c, w)| {
            (
                format!(
                    "{:?}",
                    c.positions
                        .iter()
                        .map(|p| [p[0].to_string(), p[1].to_string()])
                        .collect::<Vec<_>>()
                ),
                w.to_string(),
            )
        })
        .collect())
}

/// exp∘log, additivity of integer powers and the distributive law on a few
/// seeded series.
fn ring_spot_checks(seed: u64) -> Result<bool, Error> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let order = 4;
    let mut random_series = |unit: bool| {
        let mut terms = vec![];
        if unit {
            terms.push((ZMonomial::ONE, Rational::one()));
        }
        for _ in 0..4 {
            let t = [rng.gen_range(0..=2u32), rng.gen_range(0..=2u32)];
            if t == [0, 0] {
                continue;
            }
            let z = [rng.gen_range(-2..=2i64), rng.gen_range(-2..=2i64)];
            terms.push((
                ZMonomial::new(z, t),
                rational::rat(rng.gen_range(-5..=5), rng.gen_range(1..=4)),
            ));
        }
        TruncatedSeries::from_terms(order, terms)
    };
    for _ in 0..8 {
        let (f, g, h) = (
            random_series(true),
            random_series(true),
            random_series(false),
        );
        if f.log1p()?.exp()? != f {
            return Ok(false);
        }
        if f.int_pow(2)?.mul(&f.int_pow(-3)?) != f.int_pow(-1)? {
            return Ok(false);
        }
        if f.mul(&g.add(&h)) != f.mul(&g).add(&f.mul(&h)) {
            return Ok(false);
        }
        if !f.mul(&g).is_canonical() {
            return Ok(false);
        }
        if h.exp()?.log1p()? != h {
            return Ok(false);
        }
    }
    Ok(true)
}

fn verdict(bad: Vec<String>, ok: &str) -> (bool, String) {
    verdict_with(bad, ok.to_string())
}

fn verdict_with(bad: Vec<String>, ok: String) -> (bool, String) {
    if bad.is_empty() {
        (true, ok)
    } else {
        (false, bad.join("; "))
    }
}
