//! Two-dimensional scattering diagrams centred at the origin.
//!
//! A wall is a ray from the origin (or a full line through it) with a
//! primitive direction `m` and a function `f ≡ 1 mod (t₁, t₂)` whose
//! monomials are positive multiples of `m`. Crossing a ray counterclockwise
//! acts on monomials by `z^μ ↦ z^μ · f^{⟨n, μ⟩}` with `n = (−m₂, m₁)`; a line
//! is two rays `m` and `−m` carrying the same function, so it is crossed
//! twice with opposite exponents.
//!
//! [`complete`] inserts rays order by order until the composite of all
//! crossings along a loop around the origin is the identity modulo
//! `t^{N+1}`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::Rational;
use crate::series::{SeriesError, TruncatedSeries, ZMonomial};

pub type Vec2 = [i64; 2];

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ScatterError {
    #[error("direction {0:?} is not primitive")]
    NonPrimitive(Vec2),
    #[error("wall function invalid: {0}")]
    InvalidFunction(String),
    #[error("two walls share the direction {0:?}")]
    DuplicateDirection(Vec2),
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("error term at order {order} has z-exponent (0,0)")]
    ZeroExponent { order: u32 },
    #[error("error term {monomial} at order {order} is not of the form c·z^m ∂_n(m)")]
    NotHamiltonian { order: u32, monomial: String },
    #[error("no insertion sign cancels the error term {monomial} at order {order}")]
    NoCancellingSign { order: u32, monomial: String },
    #[error("a new ray in direction {0:?} would lie on an existing line")]
    RayOnLine(Vec2),
    #[error("loop product is not the identity below order {order}")]
    Inconsistent { order: u32 },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

pub fn is_primitive(m: Vec2) -> bool {
    m[0].gcd(&m[1]) == 1
}

fn primitive_part(m: Vec2) -> (Vec2, i64) {
    let g = m[0].gcd(&m[1]);
    ([m[0] / g, m[1] / g], g)
}

/// `n = (−m₂, m₁)`, the counterclockwise rotation of `m`.
pub fn primitive_normal(m: Vec2) -> Result<Vec2, ScatterError> {
    if !is_primitive(m) {
        return Err(ScatterError::NonPrimitive(m));
    }
    Ok([-m[1], m[0]])
}

pub fn pairing(n: Vec2, m: Vec2) -> i64 {
    n[0] * m[0] + n[1] * m[1]
}

pub fn det(a: Vec2, b: Vec2) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Counterclockwise angular order on nonzero vectors, starting at the
/// positive x-axis (inclusive).
pub fn angle_cmp(a: Vec2, b: Vec2) -> Ordering {
    let half = |v: Vec2| {
        if v[1] > 0 || (v[1] == 0 && v[0] > 0) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&det(a, b)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Wall {
    direction: Vec2,
    is_line: bool,
    function: TruncatedSeries,
}

impl Wall {
    pub fn new(
        direction: Vec2,
        is_line: bool,
        function: TruncatedSeries,
    ) -> Result<Self, ScatterError> {
        if !is_primitive(direction) {
            return Err(ScatterError::NonPrimitive(direction));
        }
        if !function.constant_term().is_one() {
            return Err(ScatterError::InvalidFunction(format!(
                "constant term is {}, expected 1",
                function.constant_term()
            )));
        }
        for (m, _) in function.terms() {
            if m.is_one() {
                continue;
            }
            if m.t_degree() == 0 {
                return Err(ScatterError::InvalidFunction(format!(
                    "term {m} has no t-factor"
                )));
            }
            if multiple_of(m.z, direction).is_none_or(|k| k < 1) {
                return Err(ScatterError::InvalidFunction(format!(
                    "term {m} is not a positive multiple of the direction {direction:?}"
                )));
            }
        }
        Ok(Wall {
            direction,
            is_line,
            function,
        })
    }

    pub fn line(direction: Vec2, function: TruncatedSeries) -> Result<Self, ScatterError> {
        Self::new(direction, true, function)
    }

    pub fn ray(direction: Vec2, function: TruncatedSeries) -> Result<Self, ScatterError> {
        Self::new(direction, false, function)
    }

    pub fn direction(&self) -> Vec2 {
        self.direction
    }

    pub fn is_line(&self) -> bool {
        self.is_line
    }

    pub fn function(&self) -> &TruncatedSeries {
        &self.function
    }

    /// Directions from the origin covered by the wall.
    fn half_directions(&self) -> Vec<Vec2> {
        let m = self.direction;
        if self.is_line {
            vec![m, [-m[0], -m[1]]]
        } else {
            vec![m]
        }
    }
}

/// `Some(k)` when `v = k·m`.
fn multiple_of(v: Vec2, m: Vec2) -> Option<i64> {
    if det(v, m) != 0 {
        return None;
    }
    if m[0] != 0 {
        (v[0] % m[0] == 0).then(|| v[0] / m[0])
    } else {
        (v[1] % m[1] == 0).then(|| v[1] / m[1])
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScatteringDiagram {
    order: u32,
    walls: Vec<Wall>,
}

impl ScatteringDiagram {
    pub fn new(order: u32, walls: Vec<Wall>) -> Result<Self, ScatterError> {
        let mut seen: Vec<Vec2> = Vec::new();
        for w in &walls {
            for h in w.half_directions() {
                if seen.contains(&h) {
                    return Err(ScatterError::DuplicateDirection(h));
                }
                seen.push(h);
            }
        }
        let walls = walls
            .into_iter()
            .map(|w| Wall {
                function: w.function.with_order(order),
                ..w
            })
            .collect();
        Ok(ScatteringDiagram { order, walls })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn walls(&self) -> &[Wall] {
        &self.walls
    }

    pub fn lines(&self) -> impl Iterator<Item = &Wall> {
        self.walls.iter().filter(|w| w.is_line)
    }

    pub fn rays(&self) -> impl Iterator<Item = &Wall> {
        self.walls.iter().filter(|w| !w.is_line)
    }

    fn occupied_by_line(&self, m: Vec2) -> bool {
        self.lines().any(|w| w.half_directions().contains(&m))
    }
}

/// A ring automorphism given by the images of `x` and `y`; each image is the
/// coordinate times a unit series.
#[derive(Debug, Clone, PartialEq)]
pub struct AutoAction {
    image_x: TruncatedSeries,
    image_y: TruncatedSeries,
}

impl AutoAction {
    pub fn identity(order: u32) -> Self {
        AutoAction {
            image_x: TruncatedSeries::monomial(Rational::one(), ZMonomial::z(1, 0), order),
            image_y: TruncatedSeries::monomial(Rational::one(), ZMonomial::z(0, 1), order),
        }
    }

    pub fn image_x(&self) -> &TruncatedSeries {
        &self.image_x
    }

    pub fn image_y(&self) -> &TruncatedSeries {
        &self.image_y
    }

    pub fn order(&self) -> u32 {
        self.image_x.order().min(self.image_y.order())
    }

    /// `image_x / x`.
    pub fn unit_x(&self) -> TruncatedSeries {
        self.image_x.shift(ZMonomial::z(-1, 0))
    }

    /// `image_y / y`.
    pub fn unit_y(&self) -> TruncatedSeries {
        self.image_y.shift(ZMonomial::z(0, -1))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.order())
    }

    /// `(image_x/x − 1, image_y/y − 1)`.
    pub fn deviation(&self) -> (TruncatedSeries, TruncatedSeries) {
        let one = TruncatedSeries::one(self.order());
        (self.unit_x().sub(&one), self.unit_y().sub(&one))
    }

    /// Image of an arbitrary series: `z^(a,b) ↦ image_x^a · image_y^b`.
    pub fn apply(&self, g: &TruncatedSeries) -> Result<TruncatedSeries, ScatterError> {
        let order = self.order().min(g.order());
        let ux = self.unit_x().truncate(order);
        let uy = self.unit_y().truncate(order);
        let mut px = PowerCache::new(ux);
        let mut py = PowerCache::new(uy);
        let mut out = TruncatedSeries::zero(order);
        for (m, c) in g.terms() {
            let term = px.pow(m.z[0])?.mul(py.pow(m.z[1])?).shift(*m).scale(c);
            out = out.add(&term);
        }
        Ok(out)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &AutoAction) -> Result<AutoAction, ScatterError> {
        Ok(AutoAction {
            image_x: self.apply(&other.image_x)?,
            image_y: self.apply(&other.image_y)?,
        })
    }
}

struct PowerCache {
    base: TruncatedSeries,
    cache: HashMap<i64, TruncatedSeries>,
}

impl PowerCache {
    fn new(base: TruncatedSeries) -> Self {
        PowerCache {
            base,
            cache: HashMap::new(),
        }
    }

    fn pow(&mut self, e: i64) -> Result<&TruncatedSeries, SeriesError> {
        if !self.cache.contains_key(&e) {
            let p = self.base.int_pow(e)?;
            self.cache.insert(e, p);
        }
        Ok(&self.cache[&e])
    }
}

/// A single wall crossing `z^μ ↦ z^μ f^{⟨n, μ⟩}` with the sign already folded
/// into `n`.
struct Crossing {
    normal: Vec2,
    powers: PowerCache,
}

impl Crossing {
    fn new(wall: &Wall, sign: i64, order: u32) -> Self {
        let n = [-wall.direction[1] * sign, wall.direction[0] * sign];
        Crossing {
            normal: n,
            powers: PowerCache::new(wall.function.truncate(order)),
        }
    }

    fn apply(&mut self, g: &TruncatedSeries) -> Result<TruncatedSeries, ScatterError> {
        let mut groups: BTreeMap<i64, TruncatedSeries> = BTreeMap::new();
        for (m, c) in g.terms() {
            let e = pairing(self.normal, m.z);
            let part = groups
                .entry(e)
                .or_insert_with(|| TruncatedSeries::zero(g.order()));
            *part = part.add(&TruncatedSeries::monomial(c.clone(), *m, g.order()));
        }
        let mut out = TruncatedSeries::zero(g.order());
        for (e, part) in groups {
            let term = if e == 0 {
                part
            } else {
                part.mul(self.powers.pow(e)?)
            };
            out = out.add(&term);
        }
        Ok(out)
    }
}

/// The automorphism of crossing `w` counterclockwise (`sign = 1`) or
/// clockwise (`sign = −1`): `x ↦ x·f^{sign·⟨n,(1,0)⟩}`, `y ↦ y·f^{sign·⟨n,(0,1)⟩}`.
pub fn cross(w: &Wall, sign: i64) -> Result<AutoAction, ScatterError> {
    let order = w.function.order();
    let id = AutoAction::identity(order);
    let mut c = Crossing::new(w, sign, order);
    Ok(AutoAction {
        image_x: c.apply(&id.image_x)?,
        image_y: c.apply(&id.image_y)?,
    })
}

/// Crossings met by a counterclockwise loop that starts just below the
/// positive x-axis, in the order they are met.
fn loop_crossings(d: &ScatteringDiagram) -> Vec<(Vec2, &Wall, i64)> {
    let mut halves: Vec<(Vec2, &Wall, i64)> = Vec::new();
    for w in &d.walls {
        halves.push((w.direction, w, 1));
        if w.is_line {
            halves.push(([-w.direction[0], -w.direction[1]], w, -1));
        }
    }
    halves.sort_by(|a, b| angle_cmp(a.0, b.0));
    halves
}

/// Path-ordered product of all crossings along one counterclockwise loop,
/// computed modulo t-degree `order + 1` (at most the diagram order).
pub fn loop_product_at(d: &ScatteringDiagram, order: u32) -> Result<AutoAction, ScatterError> {
    let order = order.min(d.order);
    let crossings = loop_crossings(d);
    for pair in crossings.windows(2) {
        if pair[0].0 == pair[1].0 {
            return Err(ScatterError::DuplicateDirection(pair[0].0));
        }
    }
    let id = AutoAction::identity(order);
    let (mut ix, mut iy) = (id.image_x, id.image_y);
    // θ_n ∘ … ∘ θ_1 with θ_1 the first wall met: each new crossing is
    // applied to the images accumulated so far.
    for (_, wall, sign) in crossings {
        let mut c = Crossing::new(wall, sign, order);
        ix = c.apply(&ix)?;
        iy = c.apply(&iy)?;
    }
    Ok(AutoAction {
        image_x: ix,
        image_y: iy,
    })
}

pub fn loop_product(d: &ScatteringDiagram) -> Result<AutoAction, ScatterError> {
    loop_product_at(d, d.order)
}

/// Order-`k` part of a deviation that vanishes below order `k`, as a list of
/// `(monomial, c)` with `(E_x, E_y) = c · (⟨n,(1,0)⟩, ⟨n,(0,1)⟩)` per monomial.
pub fn hamiltonian_error_terms(
    action: &AutoAction,
    k: u32,
) -> Result<Vec<(ZMonomial, Rational)>, ScatterError> {
    let (ex, ey) = action.deviation();
    if ex.t_valuation().is_some_and(|v| v < k) || ey.t_valuation().is_some_and(|v| v < k) {
        return Err(ScatterError::Inconsistent { order: k });
    }
    let ex = ex.homogeneous_part(k);
    let ey = ey.homogeneous_part(k);
    let mut monomials: Vec<ZMonomial> = ex.terms().chain(ey.terms()).map(|(m, _)| *m).collect();
    monomials.sort();
    monomials.dedup();
    let mut out = Vec::with_capacity(monomials.len());
    for m in monomials {
        if m.z == [0, 0] {
            return Err(ScatterError::ZeroExponent { order: k });
        }
        let (dir, _) = primitive_part(m.z);
        let n = [-dir[1], dir[0]];
        let (cx, cy) = (ex.coeff(&m), ey.coeff(&m));
        let c = if n[0] != 0 {
            &cx / Rational::from_integer(n[0].into())
        } else {
            &cy / Rational::from_integer(n[1].into())
        };
        let shape_ok = &c * Rational::from_integer(n[0].into()) == cx
            && &c * Rational::from_integer(n[1].into()) == cy;
        if !shape_ok {
            return Err(ScatterError::NotHamiltonian {
                order: k,
                monomial: m.to_string(),
            });
        }
        out.push((m, c));
    }
    Ok(out)
}

/// Adds rays order by order so that the loop product becomes the identity
/// modulo t-degree `order + 1`. The input walls are kept; new rays are
/// appended (or merged multiplicatively into an existing ray).
pub fn complete(d: &ScatteringDiagram, order: u32) -> Result<ScatteringDiagram, ScatterError> {
    let mut diagram = ScatteringDiagram::new(order, d.walls.clone())?;
    for k in 1..=order {
        let action = loop_product_at(&diagram, k)?;
        let errors = hamiltonian_error_terms(&action, k)?;
        if errors.is_empty() {
            continue;
        }
        let mut updates: BTreeMap<(i64, i64), TruncatedSeries> = BTreeMap::new();
        for (m, c) in errors {
            let (dir, _) = primitive_part(m.z);
            let sigma = insertion_sign(dir, m, &c, k)?;
            let log_term =
                TruncatedSeries::monomial(-(Rational::from_integer(sigma.into()) * &c), m, order);
            let entry = updates
                .entry((dir[0], dir[1]))
                .or_insert_with(|| TruncatedSeries::zero(order));
            *entry = entry.add(&log_term);
        }
        for ((a, b), log_f) in updates {
            let dir = [a, b];
            let factor = log_f.exp()?;
            if diagram.occupied_by_line(dir) {
                return Err(ScatterError::RayOnLine(dir));
            }
            match diagram
                .walls
                .iter_mut()
                .find(|w| !w.is_line && w.direction == dir)
            {
                Some(w) => *w = Wall::ray(dir, w.function.mul(&factor))?,
                None => diagram.walls.push(Wall::ray(dir, factor)?),
            }
        }
    }
    if order > 0 && !loop_product(&diagram)?.is_identity() {
        return Err(ScatterError::Inconsistent { order });
    }
    Ok(diagram)
}

/// Chooses `σ ∈ {+1, −1}` so that a ray in direction `dir` with function
/// `exp(−σ·c·z^m)` cancels the error term `c·z^m` at order `k`.
fn insertion_sign(dir: Vec2, m: ZMonomial, c: &Rational, k: u32) -> Result<i64, ScatterError> {
    let n = [-dir[1], dir[0]];
    let target_x = c * Rational::from_integer(n[0].into());
    let target_y = c * Rational::from_integer(n[1].into());
    for sigma in [1i64, -1] {
        let h = TruncatedSeries::monomial(-(Rational::from_integer(sigma.into()) * c), m, k);
        let candidate = Wall::ray(dir, h.exp()?)?;
        let (dx, dy) = cross(&candidate, 1)?.deviation();
        if (&target_x + dx.coeff(&m)).is_zero() && (&target_y + dy.coeff(&m)).is_zero() {
            return Ok(sigma);
        }
    }
    Err(ScatterError::NoCancellingSign {
        order: k,
        monomial: m.to_string(),
    })
}

/// Function on the wall with direction `m` (either half of a line counts),
/// or `1` when there is none.
pub fn ray_function(d: &ScatteringDiagram, m: Vec2) -> TruncatedSeries {
    d.walls
        .iter()
        .find(|w| w.half_directions().contains(&m))
        .map(|w| w.function.clone())
        .unwrap_or_else(|| TruncatedSeries::one(d.order))
}

pub const NODAL_CUBIC_LINES: [Vec2; 2] = [[-1, 0], [1, 3]];

/// Toric model of the nodal-cubic pair: lines `(−1,0)` with `1 + t₁x⁻¹` and
/// `(1,3)` with `1 + t₂xy³`.
pub fn build_nodal_cubic_diagram(order: u32) -> Result<ScatteringDiagram, ScatterError> {
    if order == 0 {
        return Err(ScatterError::ZeroOrder);
    }
    let one = || (ZMonomial::ONE, Rational::one());
    let f1 = TruncatedSeries::from_terms(
        order,
        [one(), (ZMonomial::new([-1, 0], [1, 0]), Rational::one())],
    );
    let f2 = TruncatedSeries::from_terms(
        order,
        [one(), (ZMonomial::new([1, 3], [0, 1]), Rational::one())],
    );
    ScatteringDiagram::new(
        order,
        vec![
            Wall::line(NODAL_CUBIC_LINES[0], f1)?,
            Wall::line(NODAL_CUBIC_LINES[1], f2)?,
        ],
    )
}

/// Central direction `(0,1)`: the primitive vector along `(−1,0) + (1,3)`.
pub const CENTRAL_RAY: Vec2 = [0, 1];

/// `N_d` for `d = 1..=max_degree`, read off the central ray of the completed
/// nodal-cubic diagram at order `2·max_degree`.
///
/// A degree-`d` curve meets the cubic with contact order `3d`, which is the
/// multiple of `(0,1)` carried by the monomial `t₁^d t₂^d y^{3d}`; the
/// coefficient of that monomial in `log f_central` is `3d · N_d`.
pub fn nodal_cubic_invariants(max_degree: u32) -> Result<Vec<Rational>, ScatterError> {
    if max_degree == 0 {
        return Err(ScatterError::ZeroOrder);
    }
    let order = 2 * max_degree;
    let completed = complete(&build_nodal_cubic_diagram(order)?, order)?;
    let log_f = ray_function(&completed, CENTRAL_RAY).log1p()?;
    (1..=max_degree)
        .map(|d| {
            let m = ZMonomial::new([0, 3 * d as i64], [d, d]);
            let coeff = log_f.coefficient(&m)?;
            Ok(coeff / Rational::from_integer((3 * d as i64).into()))
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct WallJson {
    dir: Vec2,
    line: bool,
    f: TruncatedSeries,
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    order: u32,
    walls: Vec<WallJson>,
}

impl Serialize for ScatteringDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DiagramJson {
            order: self.order,
            walls: self
                .walls
                .iter()
                .map(|w| WallJson {
                    dir: w.direction,
                    line: w.is_line,
                    f: w.function.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ScatteringDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(d)?;
        let walls = raw
            .walls
            .into_iter()
            .map(|w| Wall::new(w.dir, w.line, w.f))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        ScatteringDiagram::new(raw.order, walls).map_err(serde::de::Error::custom)
    }
}
