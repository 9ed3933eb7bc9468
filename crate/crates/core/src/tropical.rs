//! Genus-0 tropical curves with prescribed unbounded ends.
//!
//! Ends ("leaves") carry a primitive direction, a weight and optionally a
//! fixed supporting line. [`enumerate`] walks every trivalent tree with the
//! given leaves, derives the weighted direction of each bounded edge from
//! balancing, and solves for the vertex positions exactly. A solution counts
//! when it is unique, has positive edge lengths and every marked point sits
//! in the interior of its edge.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::degeneration::Partition;
use crate::rational::{self, Rational};
use crate::scattering::{det, is_primitive, Vec2};

pub type Point = [Rational; 2];

pub const DEFAULT_SEED: u64 = 0x5eed_1a9e;
pub const MAX_REDRAWS: usize = 5;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TropicalError {
    #[error("leaf direction {0:?} is not primitive")]
    NonPrimitive(Vec2),
    #[error("leaf weight must be at least 1")]
    ZeroWeight,
    #[error("weighted leaf directions sum to {0:?}, not zero")]
    Unbalanced(Vec2),
    #[error("need at least 3 leaves, got {0}")]
    TooFewLeaves(usize),
    #[error("{conditions} conditions for a {dimension}-dimensional family of curves")]
    DimensionMismatch { conditions: usize, dimension: usize },
    #[error("expected {expected} {what}, got {got}")]
    ConditionCount {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("search bound exceeded: {bound} = {value} > {limit}")]
    BoundExceeded {
        bound: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("non-generic conditions: {0}; draw new points")]
    Degenerate(String),
    #[error("vertex {vertex} has valence {valence}, expected 3")]
    NotTrivalent { vertex: usize, valence: usize },
    #[error("vertex multiplicity is not well defined at vertex {0}")]
    IllDefinedMultiplicity(usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

impl From<crate::degeneration::PartitionError> for TropicalError {
    fn from(e: crate::degeneration::PartitionError) -> Self {
        TropicalError::InvalidPartition(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LeafConstraint {
    Free,
    FixedLine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Leaf {
    pub direction: Vec2,
    pub weight: i64,
    pub constraint: LeafConstraint,
}

impl Leaf {
    pub fn free(direction: Vec2, weight: i64) -> Self {
        Leaf {
            direction,
            weight,
            constraint: LeafConstraint::Free,
        }
    }

    pub fn fixed(direction: Vec2, weight: i64) -> Self {
        Leaf {
            direction,
            weight,
            constraint: LeafConstraint::FixedLine,
        }
    }

    pub fn is_fixed(&self) -> bool {
        self.constraint == LeafConstraint::FixedLine
    }

    fn weighted(&self) -> Vec2 {
        [
            self.direction[0] * self.weight,
            self.direction[1] * self.weight,
        ]
    }
}

/// Unbounded ends plus the number of generic point conditions.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeData {
    leaves: Vec<Leaf>,
    point_count: usize,
}

impl DegreeData {
    pub fn new(leaves: Vec<Leaf>, point_count: usize) -> Result<Self, TropicalError> {
        if leaves.len() < 3 {
            return Err(TropicalError::TooFewLeaves(leaves.len()));
        }
        let mut sum = [0i64, 0];
        for l in &leaves {
            if !is_primitive(l.direction) {
                return Err(TropicalError::NonPrimitive(l.direction));
            }
            if l.weight < 1 {
                return Err(TropicalError::ZeroWeight);
            }
            let w = l.weighted();
            sum = [sum[0] + w[0], sum[1] + w[1]];
        }
        if sum != [0, 0] {
            return Err(TropicalError::Unbalanced(sum));
        }
        let data = DegreeData {
            leaves,
            point_count,
        };
        let conditions = data.point_count + data.fixed_count();
        let dimension = data.leaves.len() - 1;
        if conditions != dimension {
            return Err(TropicalError::DimensionMismatch {
                conditions,
                dimension,
            });
        }
        Ok(data)
    }

    pub fn leaves(&self) -> &[Leaf] {
        &self.leaves
    }

    pub fn point_count(&self) -> usize {
        self.point_count
    }

    pub fn fixed_count(&self) -> usize {
        self.leaves.iter().filter(|l| l.is_fixed()).count()
    }
}

/// Positions of the point conditions and one anchor per fixed-line leaf
/// (the prescribed line passes through the anchor).
#[derive(Debug, Clone, PartialEq)]
pub struct Conditions {
    pub points: Vec<Point>,
    pub anchors: Vec<Option<Point>>,
}

const DENOMINATORS: [i64; 6] = [1_000_003, 999_983, 1_000_033, 999_979, 1_000_037, 999_961];
const SPREAD: i64 = 10;

fn draw_rational(rng: &mut ChaCha8Rng) -> Rational {
    let den = DENOMINATORS[rng.gen_range(0..DENOMINATORS.len())];
    let num = rng.gen_range(-SPREAD * den..=SPREAD * den);
    rational::rat(num, den)
}

fn draw_point(rng: &mut ChaCha8Rng) -> Point {
    [draw_rational(rng), draw_rational(rng)]
}

impl Conditions {
    /// Pseudo-random rational conditions from a seed.
    pub fn generic(deg: &DegreeData, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let points = (0..deg.point_count).map(|_| draw_point(&mut rng)).collect();
        let anchors = deg
            .leaves
            .iter()
            .map(|l| l.is_fixed().then(|| draw_point(&mut rng)))
            .collect();
        Conditions { points, anchors }
    }

    fn validate(&self, deg: &DegreeData) -> Result<(), TropicalError> {
        if self.points.len() != deg.point_count {
            return Err(TropicalError::ConditionCount {
                what: "points",
                expected: deg.point_count,
                got: self.points.len(),
            });
        }
        if self.anchors.len() != deg.leaves.len()
            || deg
                .leaves
                .iter()
                .zip(&self.anchors)
                .any(|(l, a)| l.is_fixed() != a.is_some())
        {
            return Err(TropicalError::ConditionCount {
                what: "line anchors (one per fixed leaf, listed per leaf)",
                expected: deg.fixed_count(),
                got: self.anchors.iter().flatten().count(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum End {
    Vertex(usize),
    Leaf(usize),
}

/// An edge oriented from `from` (always a vertex) to `to`, with its weight
/// and primitive direction in that orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: End,
    pub weight: i64,
    pub direction: Vec2,
}

impl Edge {
    pub fn is_bounded(&self) -> bool {
        matches!(self.to, End::Vertex(_))
    }

    pub fn weighted(&self) -> Vec2 {
        [
            self.direction[0] * self.weight,
            self.direction[1] * self.weight,
        ]
    }
}

/// Combinatorial type: a tree on `vertex_count` internal vertices, with
/// leaves attached, directions on all edges, and point marks on edges.
#[derive(Debug, Clone, PartialEq)]
pub struct TropicalCurveType {
    pub leaves: Vec<Leaf>,
    pub vertex_count: usize,
    pub edges: Vec<Edge>,
    pub point_marks: Vec<usize>,
}

impl TropicalCurveType {
    /// Outgoing weighted vectors at vertex `v`.
    pub fn outgoing(&self, v: usize) -> Vec<Vec2> {
        let mut out = Vec::new();
        for e in &self.edges {
            let w = e.weighted();
            if e.from == v {
                out.push(w);
            }
            if e.to == End::Vertex(v) {
                out.push([-w[0], -w[1]]);
            }
        }
        out
    }

    /// Connected and acyclic on vertices plus leaves.
    pub fn is_tree(&self) -> bool {
        let n = self.vertex_count + self.leaves.len();
        if self.edges.len() + 1 != n {
            return false;
        }
        let idx = |end: End| match end {
            End::Vertex(v) => v,
            End::Leaf(l) => self.vertex_count + l,
        };
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.from), find(&mut parent, idx(e.to)));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }
}

/// Weight of a trivalent vertex: `w_i w_j |det(u_i, u_j)|`, checked to be
/// the same for all three pairs.
pub fn vertex_multiplicity(ty: &TropicalCurveType, v: usize) -> Result<i64, TropicalError> {
    let out = ty.outgoing(v);
    if out.len() != 3 {
        return Err(TropicalError::NotTrivalent {
            vertex: v,
            valence: out.len(),
        });
    }
    let m01 = det(out[0], out[1]).abs();
    let m12 = det(out[1], out[2]).abs();
    let m20 = det(out[2], out[0]).abs();
    if m01 != m12 || m12 != m20 {
        return Err(TropicalError::IllDefinedMultiplicity(v));
    }
    Ok(m01)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TropicalCurve {
    pub curve_type: TropicalCurveType,
    pub positions: Vec<Point>,
}

impl TropicalCurve {
    /// Position of the point where `edge` starts.
    fn start(&self, e: &Edge) -> &Point {
        &self.positions[e.from]
    }

    /// `end − start` divided by the weighted direction; `None` for leaves or
    /// when the displacement is not parallel.
    pub fn edge_length(&self, edge: usize) -> Option<Rational> {
        let e = &self.curve_type.edges[edge];
        let End::Vertex(b) = e.to else { return None };
        let (p, q) = (self.start(e), &self.positions[b]);
        let d = [&q[0] - &p[0], &q[1] - &p[1]];
        parameter_along(&d, e.weighted())
    }

    /// Parameter `s` with `point = start + s·w` if the point lies on the
    /// supporting line of `edge`.
    pub fn parameter_on(&self, edge: usize, point: &Point) -> Option<Rational> {
        let e = &self.curve_type.edges[edge];
        let p = self.start(e);
        parameter_along(&[&point[0] - &p[0], &point[1] - &p[1]], e.weighted())
    }
}

fn parameter_along(d: &[Rational; 2], w: Vec2) -> Option<Rational> {
    let (wx, wy) = (
        Rational::from_integer(w[0].into()),
        Rational::from_integer(w[1].into()),
    );
    if &d[0] * &wy != &d[1] * &wx {
        return None;
    }
    Some(if !wx.is_zero() {
        &d[0] / &wx
    } else {
        &d[1] / &wy
    })
}

/// Weighted directions sum to zero at every vertex.
pub fn check_balancing(c: &TropicalCurve) -> bool {
    (0..c.curve_type.vertex_count).all(|v| {
        let s = c
            .curve_type
            .outgoing(v)
            .iter()
            .fold([0, 0], |acc, w| [acc[0] + w[0], acc[1] + w[1]]);
        s == [0, 0]
    })
}

/// Product of vertex weights, divided by the weight of each fixed-line leaf.
pub fn curve_multiplicity(c: &TropicalCurve) -> Result<Rational, TropicalError> {
    type_multiplicity(&c.curve_type)
}

fn type_multiplicity(ty: &TropicalCurveType) -> Result<Rational, TropicalError> {
    let mut m = Rational::one();
    for v in 0..ty.vertex_count {
        m *= Rational::from_integer(vertex_multiplicity(ty, v)?.into());
    }
    for l in ty.leaves.iter().filter(|l| l.is_fixed()) {
        m /= Rational::from_integer(l.weight.into());
    }
    Ok(m)
}

/// Every bounded edge has positive length along its direction, each marked
/// point lies in the interior of its edge, and each fixed leaf lies on its line.
pub fn check_embedding(c: &TropicalCurve, cond: &Conditions) -> bool {
    let ty = &c.curve_type;
    for (i, e) in ty.edges.iter().enumerate() {
        if e.is_bounded() && !c.edge_length(i).is_some_and(|l| l.is_positive()) {
            return false;
        }
    }
    for (p, &edge) in cond.points.iter().zip(&ty.point_marks) {
        let Some(s) = c.parameter_on(edge, p) else {
            return false;
        };
        if !s.is_positive() {
            return false;
        }
        if let Some(len) = c.edge_length(edge) {
            if s >= len {
                return false;
            }
        }
    }
    for e in &ty.edges {
        if let End::Leaf(l) = e.to {
            if let Some(anchor) = &cond.anchors[l] {
                let p = c.start(e);
                if parameter_along(&[&p[0] - &anchor[0], &p[1] - &anchor[1]], e.weighted())
                    .is_none()
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Limits on the combinatorial search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_leaves: usize,
    pub max_types: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_leaves: 10,
            max_types: 5_000_000,
        }
    }
}

/// Unrooted trivalent trees with leaves `0..n`, as undirected edge lists on
/// `Vertex`/`Leaf` ends. Leaf `i ≥ 3` is attached by subdividing an edge of a
/// tree on the first `i` leaves, which yields each tree exactly once.
pub fn trivalent_trees(n: usize) -> Vec<Vec<(End, End)>> {
    assert!(n >= 3);
    let start = vec![
        (End::Vertex(0), End::Leaf(0)),
        (End::Vertex(0), End::Leaf(1)),
        (End::Vertex(0), End::Leaf(2)),
    ];
    let mut trees = vec![(start, 1usize)];
    for leaf in 3..n {
        let mut next = Vec::new();
        for (edges, vcount) in &trees {
            for i in 0..edges.len() {
                let (a, b) = edges[i];
                let v = End::Vertex(*vcount);
                let mut e = edges.clone();
                e[i] = (a, v);
                e.push((v, b));
                e.push((v, End::Leaf(leaf)));
                next.push((e, vcount + 1));
            }
        }
        trees = next;
    }
    trees.into_iter().map(|(e, _)| e).collect()
}

/// Orients a tree and assigns the balancing-forced weighted direction to
/// every edge. `None` if some edge would carry weight zero.
fn orient_tree(leaves: &[Leaf], tree: &[(End, End)]) -> Option<(usize, Vec<Edge>)> {
    let vertex_count = leaves.len() - 2;
    let mut edges = Vec::with_capacity(tree.len());
    for (idx, &(a, b)) in tree.iter().enumerate() {
        let (from, to) = match (a, b) {
            (End::Vertex(v), other) => (v, other),
            (other, End::Vertex(v)) => (v, other),
            _ => unreachable!("leaf-leaf edge"),
        };
        let flow = match to {
            End::Leaf(l) => leaves[l].weighted(),
            End::Vertex(_) => {
                // the leaves on the far side of the edge determine the flow
                let far = side_leaves(tree, idx, to);
                far.iter().fold([0i64, 0], |acc, &l| {
                    let w = leaves[l].weighted();
                    [acc[0] + w[0], acc[1] + w[1]]
                })
            }
        };
        let g = flow[0].gcd(&flow[1]);
        if g == 0 {
            return None;
        }
        edges.push(Edge {
            from,
            to,
            weight: g,
            direction: [flow[0] / g, flow[1] / g],
        });
    }
    Some((vertex_count, edges))
}

/// Leaves reachable from `start` without using edge `skip`.
fn side_leaves(tree: &[(End, End)], skip: usize, start: End) -> Vec<usize> {
    let mut stack = vec![start];
    let mut seen = vec![start];
    let mut leaves = Vec::new();
    while let Some(node) = stack.pop() {
        if let End::Leaf(l) = node {
            leaves.push(l);
            continue;
        }
        for (i, &(a, b)) in tree.iter().enumerate() {
            if i == skip {
                continue;
            }
            let other = if a == node {
                b
            } else if b == node {
                a
            } else {
                continue;
            };
            if !seen.contains(&other) {
                seen.push(other);
                stack.push(other);
            }
        }
    }
    leaves
}

enum LinearSolution {
    Unique(Vec<Rational>),
    Inconsistent,
    Underdetermined,
}

/// Gauss–Jordan elimination on the augmented matrix `[A | b]`.
fn solve_linear(mut rows: Vec<Vec<Rational>>, unknowns: usize) -> LinearSolution {
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][col];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                let pivot = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot).skip(col) {
                    *x -= &f * p;
                }
            }
        }
        pivot_cols.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[unknowns].is_zero()) {
        return LinearSolution::Inconsistent;
    }
    if r < unknowns {
        return LinearSolution::Underdetermined;
    }
    let mut x = vec![Rational::zero(); unknowns];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = rows[i][unknowns].clone();
    }
    LinearSolution::Unique(x)
}

fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Solves for vertex positions of a type under the conditions. `Ok(None)`
/// when no curve of this type satisfies them.
fn solve_type(
    ty: &TropicalCurveType,
    cond: &Conditions,
) -> Result<Option<TropicalCurve>, TropicalError> {
    let v = ty.vertex_count;
    let bounded: Vec<usize> = (0..ty.edges.len())
        .filter(|&i| ty.edges[i].is_bounded())
        .collect();
    let unknowns = 2 * v + bounded.len();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let row = || vec![Rational::zero(); unknowns + 1];
    // pos_to − pos_from − λ·w = 0
    for (k, &ei) in bounded.iter().enumerate() {
        let e = &ty.edges[ei];
        let End::Vertex(b) = e.to else { unreachable!() };
        let w = e.weighted();
        for c in 0..2 {
            let mut r = row();
            r[2 * b + c] += q(1);
            r[2 * e.from + c] -= q(1);
            r[2 * v + k] = q(-w[c]);
            rows.push(r);
        }
    }
    // cross(P − pos_from, w) = 0  ⇔  w_y·a_x − w_x·a_y = w_y·P_x − w_x·P_y
    let mut incidence = |from: usize, w: Vec2, p: &Point| {
        let mut r = row();
        r[2 * from] = q(w[1]);
        r[2 * from + 1] = q(-w[0]);
        r[unknowns] = &p[0] * q(w[1]) - &p[1] * q(w[0]);
        rows.push(r);
    };
    for (p, &ei) in cond.points.iter().zip(&ty.point_marks) {
        let e = &ty.edges[ei];
        incidence(e.from, e.weighted(), p);
    }
    for e in &ty.edges {
        if let End::Leaf(l) = e.to {
            if let Some(anchor) = &cond.anchors[l] {
                incidence(e.from, e.weighted(), anchor);
            }
        }
    }
    let x = match solve_linear(rows, unknowns) {
        LinearSolution::Inconsistent => return Ok(None),
        LinearSolution::Underdetermined => {
            return Err(TropicalError::Degenerate(
                "solution set is not a single curve".into(),
            ))
        }
        LinearSolution::Unique(x) => x,
    };
    let positions: Vec<Point> = (0..v)
        .map(|i| [x[2 * i].clone(), x[2 * i + 1].clone()])
        .collect();
    let curve = TropicalCurve {
        curve_type: ty.clone(),
        positions,
    };
    for k in 0..bounded.len() {
        let len = &x[2 * v + k];
        if len.is_zero() {
            return Err(TropicalError::Degenerate(
                "a bounded edge has length zero".into(),
            ));
        }
        if len.is_negative() {
            return Ok(None);
        }
    }
    for (p, &ei) in cond.points.iter().zip(&ty.point_marks) {
        let s = curve.parameter_on(ei, p).expect("incidence equation holds");
        let len = curve.edge_length(ei);
        if s.is_zero() || len.as_ref().is_some_and(|l| &s == l) {
            return Err(TropicalError::Degenerate(
                "a marked point sits on a vertex".into(),
            ));
        }
        if s.is_negative() || len.is_some_and(|l| s > l) {
            return Ok(None);
        }
    }
    Ok(Some(curve))
}

/// All curves of the degree through the given conditions, with multiplicities.
pub fn enumerate(
    deg: &DegreeData,
    cond: &Conditions,
    bounds: &SearchBounds,
) -> Result<Vec<(TropicalCurve, Rational)>, TropicalError> {
    cond.validate(deg)?;
    let n = deg.leaves.len();
    if n > bounds.max_leaves {
        return Err(TropicalError::BoundExceeded {
            bound: "leaves",
            value: n,
            limit: bounds.max_leaves,
        });
    }
    let edge_count = 2 * n - 3;
    let topologies: usize = (1..=(2 * n - 5)).step_by(2).product();
    let assignments = edge_count
        .checked_pow(deg.point_count as u32)
        .unwrap_or(usize::MAX);
    let types = topologies.saturating_mul(assignments);
    if types > bounds.max_types {
        return Err(TropicalError::BoundExceeded {
            bound: "combinatorial types",
            value: types,
            limit: bounds.max_types,
        });
    }
    let mut found = Vec::new();
    for tree in trivalent_trees(n) {
        let Some((vertex_count, edges)) = orient_tree(&deg.leaves, &tree) else {
            continue;
        };
        let base = TropicalCurveType {
            leaves: deg.leaves.clone(),
            vertex_count,
            edges,
            point_marks: Vec::new(),
        };
        let mult = type_multiplicity(&base)?;
        if mult.is_zero() {
            continue;
        }
        for code in 0..assignments {
            let mut marks = Vec::with_capacity(deg.point_count);
            let mut c = code;
            for _ in 0..deg.point_count {
                marks.push(c % edge_count);
                c /= edge_count;
            }
            let ty = TropicalCurveType {
                point_marks: marks,
                ..base.clone()
            };
            if let Some(curve) = solve_type(&ty, cond)? {
                found.push((curve, mult.clone()));
            }
        }
    }
    Ok(found)
}

/// Result of a count: the curves found and their total multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct CountResult {
    pub curves: Vec<(TropicalCurve, Rational)>,
    pub total: Rational,
    pub conditions: Conditions,
}

/// Runs [`enumerate`] on seeded generic conditions, re-drawing up to
/// [`MAX_REDRAWS`] times when the draw turns out to be degenerate.
pub fn enumerate_generic(
    deg: &DegreeData,
    seed: u64,
    bounds: &SearchBounds,
) -> Result<CountResult, TropicalError> {
    let mut last = None;
    for attempt in 0..MAX_REDRAWS as u64 {
        let cond = Conditions::generic(deg, seed.wrapping_add(attempt));
        match enumerate(deg, &cond, bounds) {
            Ok(curves) => return Ok(count_result(curves, cond)),
            Err(e @ TropicalError::Degenerate(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

pub fn count_result(curves: Vec<(TropicalCurve, Rational)>, conditions: Conditions) -> CountResult {
    let total = curves
        .iter()
        .map(|(_, m)| m.clone())
        .fold(Rational::zero(), |a, b| a + b);
    CountResult {
        curves,
        total,
        conditions,
    }
}

/// Maximal-tangency degree-`d` ends for the plane: weight `d` towards each
/// toric divisor.
pub fn p2_toric_degree(d: i64) -> Result<DegreeData, TropicalError> {
    DegreeData::new(
        vec![
            Leaf::free([-1, 0], d),
            Leaf::free([0, -1], d),
            Leaf::free([1, 1], d),
        ],
        2,
    )
}

pub fn count_p2_toric(d: i64, seed: u64) -> Result<CountResult, TropicalError> {
    if d < 1 {
        return Err(TropicalError::ZeroWeight);
    }
    enumerate_generic(&p2_toric_degree(d)?, seed, &SearchBounds::default())
}

/// Ends for `N_m(F₂)` in the fan with rays `(1,2), (0,1), (−1,0), (0,−1)`:
/// contact `2d` with `D₂`, `d` with `D₁`, and `m_ℓ` fixed contacts of order
/// `ℓ` with `F₂`; one interior point.
pub fn f2_degree(m: &Partition) -> Result<DegreeData, TropicalError> {
    let d = m.degree() as i64;
    let mut leaves = vec![Leaf::free([0, -1], 2 * d), Leaf::free([1, 2], d)];
    for (l, &count) in m.exponents().iter().enumerate() {
        for _ in 0..count {
            leaves.push(Leaf::fixed([-1, 0], l as i64 + 1));
        }
    }
    DegreeData::new(leaves, 1)
}

pub fn count_f2(d: u32, m: &Partition, seed: u64) -> Result<CountResult, TropicalError> {
    if m.degree() != d {
        return Err(TropicalError::InvalidPartition(format!(
            "{m:?} is not a partition of {d}"
        )));
    }
    enumerate_generic(&f2_degree(m)?, seed, &SearchBounds::default())
}
