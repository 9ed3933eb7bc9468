//! Smooth complete toric surfaces given by their fans, and the finite Chow
//! computations for the toric models of `(P², D₁+D₂)` and `(P², D₃)`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::scattering::{angle_cmp, det, is_primitive, Vec2};

pub type Matrix2 = [[i64; 2]; 2];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ToricError {
    #[error("ray {0:?} is not primitive")]
    NonPrimitive(Vec2),
    #[error("a fan needs at least 3 rays, got {0}")]
    TooFewRays(usize),
    #[error("duplicate ray {0:?}")]
    DuplicateRay(Vec2),
    #[error("cone spanned by {0:?} and {1:?} is not smooth or not convex (det {2})")]
    NotSmooth(Vec2, Vec2, i64),
    #[error("{0} labels/marks for {1} rays")]
    DecorationCount(usize, usize),
    #[error("self-intersection sequence does not close up into a complete smooth fan")]
    DoesNotClose,
    #[error("index {0} out of range for a fan with {1} rays")]
    BadIndex(usize, usize),
    #[error("ray {index} has self-intersection {value}, not -1")]
    NotMinusOne { index: usize, value: i64 },
    #[error("matrix has determinant {0}, expected 1")]
    NotSl2(i64),
}

/// Rays in counterclockwise order starting from the first ray at angle
/// `≥ 0` from the positive x-axis. `labels` name the boundary divisors and
/// `marks` carry the `×` of a blown-up smooth point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    rays: Vec<Vec2>,
    #[serde(default)]
    marks: Vec<bool>,
    #[serde(default)]
    labels: Vec<Option<String>>,
}

impl Fan {
    pub fn new(rays: Vec<Vec2>) -> Result<Self, ToricError> {
        let n = rays.len();
        Self::decorated(rays, vec![false; n], vec![None; n])
    }

    pub fn decorated(
        rays: Vec<Vec2>,
        marks: Vec<bool>,
        labels: Vec<Option<String>>,
    ) -> Result<Self, ToricError> {
        let n = rays.len();
        if marks.len() != n {
            return Err(ToricError::DecorationCount(marks.len(), n));
        }
        if labels.len() != n {
            return Err(ToricError::DecorationCount(labels.len(), n));
        }
        if n < 3 {
            return Err(ToricError::TooFewRays(n));
        }
        if let Some(r) = rays.iter().find(|r| !is_primitive(**r)) {
            return Err(ToricError::NonPrimitive(*r));
        }
        let mut items: Vec<(Vec2, bool, Option<String>)> = rays
            .into_iter()
            .zip(marks)
            .zip(labels)
            .map(|((r, m), l)| (r, m, l))
            .collect();
        items.sort_by(|a, b| angle_cmp(a.0, b.0));
        for w in items.windows(2) {
            if angle_cmp(w[0].0, w[1].0) == Ordering::Equal {
                return Err(ToricError::DuplicateRay(w[0].0));
            }
        }
        for i in 0..n {
            let (a, b) = (items[i].0, items[(i + 1) % n].0);
            let d = det(a, b);
            if d != 1 {
                return Err(ToricError::NotSmooth(a, b, d));
            }
        }
        let mut fan = Fan {
            rays: Vec::new(),
            marks: Vec::new(),
            labels: Vec::new(),
        };
        for (r, m, l) in items {
            fan.rays.push(r);
            fan.marks.push(m);
            fan.labels.push(l);
        }
        Ok(fan)
    }

    /// Validates a fan read from JSON, filling in missing decorations.
    pub fn validated(self) -> Result<Self, ToricError> {
        let n = self.rays.len();
        let marks = if self.marks.is_empty() {
            vec![false; n]
        } else {
            self.marks
        };
        let labels = if self.labels.is_empty() {
            vec![None; n]
        } else {
            self.labels
        };
        Self::decorated(self.rays, marks, labels)
    }

    pub fn with_labels(rays: &[(Vec2, &str)]) -> Result<Self, ToricError> {
        Self::decorated(
            rays.iter().map(|(r, _)| *r).collect(),
            vec![false; rays.len()],
            rays.iter().map(|(_, l)| Some(l.to_string())).collect(),
        )
    }

    pub fn rays(&self) -> &[Vec2] {
        &self.rays
    }

    pub fn marks(&self) -> &[bool] {
        &self.marks
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn index_of(&self, ray: Vec2) -> Option<usize> {
        self.rays.iter().position(|&r| r == ray)
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_deref() == Some(label))
    }

    pub fn set_mark(&mut self, index: usize, mark: bool) -> Result<(), ToricError> {
        let n = self.len();
        *self
            .marks
            .get_mut(index)
            .ok_or(ToricError::BadIndex(index, n))? = mark;
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<(), ToricError> {
        if i >= self.len() {
            return Err(ToricError::BadIndex(i, self.len()));
        }
        Ok(())
    }

    /// `a_i` with `ρ_{i−1} + a_i·ρ_i + ρ_{i+1} = 0`.
    pub fn self_intersections(&self) -> Vec<i64> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let (prev, cur, next) = (
                    self.rays[(i + n - 1) % n],
                    self.rays[i],
                    self.rays[(i + 1) % n],
                );
                // det(ρ_i, ρ_{i+1}) = 1, so pairing the relation with ρ_{i+1} isolates a_i
                let a = -det(prev, next);
                debug_assert!(
                    prev[0] + a * cur[0] + next[0] == 0 && prev[1] + a * cur[1] + next[1] == 0
                );
                a
            })
            .collect()
    }

    /// Inserts `ρ_i + ρ_{i+1}` into the cone between ray `corner` and the next
    /// ray (cyclically).
    pub fn blow_up(&self, corner: usize, label: Option<&str>) -> Result<Fan, ToricError> {
        self.check_index(corner)?;
        let next = (corner + 1) % self.len();
        let new = [
            self.rays[corner][0] + self.rays[next][0],
            self.rays[corner][1] + self.rays[next][1],
        ];
        let mut rays = self.rays.clone();
        let mut marks = self.marks.clone();
        let mut labels = self.labels.clone();
        rays.push(new);
        marks.push(false);
        labels.push(label.map(str::to_string));
        Fan::decorated(rays, marks, labels)
    }

    /// Removes a ray of self-intersection `−1`.
    pub fn blow_down(&self, index: usize) -> Result<Fan, ToricError> {
        self.check_index(index)?;
        let a = self.self_intersections()[index];
        if a != -1 {
            return Err(ToricError::NotMinusOne { index, value: a });
        }
        let mut f = self.clone();
        f.rays.remove(index);
        f.marks.remove(index);
        f.labels.remove(index);
        Fan::decorated(f.rays, f.marks, f.labels)
    }

    pub fn apply_sl2(&self, m: &Matrix2) -> Result<Fan, ToricError> {
        let d = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if d != 1 {
            return Err(ToricError::NotSl2(d));
        }
        let rays = self.rays.iter().map(|&r| apply(m, r)).collect();
        Fan::decorated(rays, self.marks.clone(), self.labels.clone())
    }

    /// A matrix in SL(2,Z) taking this fan's rays onto `other`'s, if any.
    pub fn sl2_equivalence(&self, other: &Fan) -> Option<Matrix2> {
        let n = self.len();
        if other.len() != n {
            return None;
        }
        // columns ρ₁, ρ₂ form a unimodular basis; its inverse is integral
        let (a, b) = (self.rays[0], self.rays[1]);
        let inv: Matrix2 = [[b[1], -b[0]], [-a[1], a[0]]];
        (0..n).find_map(|k| {
            let (c, d) = (other.rays[k], other.rays[(k + 1) % n]);
            let target: Matrix2 = [[c[0], d[0]], [c[1], d[1]]];
            let m = mul(&target, &inv);
            let all = (0..n).all(|i| apply(&m, self.rays[i]) == other.rays[(k + i) % n]);
            all.then_some(m)
        })
    }
}

fn apply(m: &Matrix2, r: Vec2) -> Vec2 {
    [
        m[0][0] * r[0] + m[0][1] * r[1],
        m[1][0] * r[0] + m[1][1] * r[1],
    ]
}

fn mul(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let mut out = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// Builds the fan from `ρ₁ = (1,0)`, `ρ₂ = (0,1)` and the recursion
/// `ρ_{i+1} = −ρ_{i−1} − a_i·ρ_i`, requiring it to close up after one turn.
pub fn fan_from_self_intersections(a: &[i64]) -> Result<Fan, ToricError> {
    let n = a.len();
    if n < 3 {
        return Err(ToricError::TooFewRays(n));
    }
    let step = |p: Vec2, c: Vec2, ai: i64| [-p[0] - ai * c[0], -p[1] - ai * c[1]];
    let mut rays = vec![[1, 0], [0, 1]];
    for i in 1..n - 1 {
        let next = step(rays[i - 1], rays[i], a[i]);
        rays.push(next);
    }
    if step(rays[n - 2], rays[n - 1], a[n - 1]) != rays[0]
        || step(rays[n - 1], rays[0], a[0]) != rays[1]
    {
        return Err(ToricError::DoesNotClose);
    }
    // one full turn: angles strictly increase along the sequence
    if rays
        .windows(2)
        .any(|w| angle_cmp(w[0], w[1]) != Ordering::Less)
    {
        return Err(ToricError::DoesNotClose);
    }
    Fan::new(rays)
}

pub fn p2_fan() -> Fan {
    Fan::new(vec![[1, 0], [0, 1], [-1, -1]]).expect("plane fan")
}

/// The stages from the plane to the toric model of `(P², D₁+D₂)`:
/// the plane, two corner blow-ups, blowing down `L`, and the shear
/// `(1 0; 1 1)`. The last fan has rays `D₁, F₁, F₂, D₂` with `×` on `F₂`.
pub fn line_conic_toric_model() -> Result<Vec<(&'static str, Fan)>, ToricError> {
    let p2 = Fan::with_labels(&[([1, 1], "D1"), ([-1, 0], "L"), ([0, -1], "D2")])?;
    let idx = |f: &Fan, l: &str| f.index_of_label(l).expect("label present");
    let s1 = p2.blow_up(idx(&p2, "D1"), Some("F1"))?;
    let s2 = s1.blow_up(idx(&s1, "F1"), Some("F2"))?;
    let mut s3 = s2.blow_down(idx(&s2, "L"))?;
    let f2 = idx(&s3, "F2");
    s3.set_mark(f2, true)?;
    let s4 = s3.apply_sl2(&[[1, 0], [1, 1]])?;
    Ok(vec![
        ("plane", p2),
        ("blow-up at D1∩L", s1),
        ("blow-up at F1∩L", s2),
        ("blow-down L", s3),
        ("shear", s4),
    ])
}

/// The stages for `(P², D₃)`: blow up the node (tangent lines `L₁, L₂`),
/// then `E ∩ L₁` and `E ∩ L₂`, blow down `L₁` and `L₂`, and move the result
/// into the standard position with rays `F₁ = (1,3)`, `E = (0,1)`,
/// `F₂ = (−1,0)`, `D₃ = (0,−1)`.
pub fn nodal_cubic_toric_model() -> Result<Vec<(&'static str, Fan)>, ToricError> {
    let p2 = Fan::with_labels(&[([1, 0], "L1"), ([0, 1], "L2"), ([-1, -1], "D3")])?;
    let idx = |f: &Fan, l: &str| f.index_of_label(l).expect("label present");
    let s1 = p2.blow_up(idx(&p2, "L1"), Some("E"))?;
    let s2 = s1.blow_up(idx(&s1, "L1"), Some("F1"))?;
    let s3 = s2.blow_up(idx(&s2, "E"), Some("F2"))?;
    let s4 = s3.blow_down(idx(&s3, "L1"))?;
    let mut s5 = s4.blow_down(idx(&s4, "L2"))?;
    for l in ["F1", "F2"] {
        let i = idx(&s5, l);
        s5.set_mark(i, true)?;
    }
    let s6 = s5.apply_sl2(&[[1, -1], [2, -1]])?;
    Ok(vec![
        ("plane", p2),
        ("blow-up at the node", s1),
        ("blow-up at E∩L1", s2),
        ("blow-up at E∩L2", s3),
        ("blow-down L1", s4),
        ("blow-down L2", s5),
        ("standard position", s6),
    ])
}

/// Symmetric integer intersection form on a named basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionForm {
    pub basis: Vec<&'static str>,
    pub gram: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    pub coords: Vec<i64>,
}

impl DivisorClass {
    pub fn new(coords: &[i64]) -> Self {
        DivisorClass {
            coords: coords.to_vec(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        DivisorClass {
            coords: vec![0; dim],
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        DivisorClass {
            coords: self
                .coords
                .iter()
                .zip(&o.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        DivisorClass {
            coords: self.coords.iter().map(|a| k * a).collect(),
        }
    }
}

impl IntersectionForm {
    pub fn pair(&self, a: &DivisorClass, b: &DivisorClass) -> i64 {
        let n = self.basis.len();
        assert!(
            a.coords.len() == n && b.coords.len() == n,
            "class outside this basis"
        );
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += a.coords[i] * self.gram[i][j] * b.coords[j];
            }
        }
        s
    }

    pub fn format(&self, c: &DivisorClass) -> String {
        let mut out = String::new();
        for (name, &k) in self.basis.iter().zip(&c.coords) {
            if k == 0 {
                continue;
            }
            let sign = if k < 0 {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = if k.abs() == 1 {
                String::new()
            } else {
                k.abs().to_string()
            };
            out.push_str(&format!("{sign}{mag}{name}"));
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

/// The two-fold blow-up of the plane in the basis `(H, e₁, e₂)`, `e₂` the
/// exceptional class of the infinitely near point.
pub struct BlownUpPlane {
    pub form: IntersectionForm,
    pub h: DivisorClass,
    pub d1: DivisorClass,
    pub d2: DivisorClass,
    pub l: DivisorClass,
    pub f1: DivisorClass,
    pub f2: DivisorClass,
}

impl Default for BlownUpPlane {
    fn default() -> Self {
        BlownUpPlane {
            form: IntersectionForm {
                basis: vec!["H", "e1", "e2"],
                gram: vec![vec![1, 0, 0], vec![0, -1, 0], vec![0, 0, -1]],
            },
            h: DivisorClass::new(&[1, 0, 0]),
            d1: DivisorClass::new(&[1, -1, 0]),
            d2: DivisorClass::new(&[2, -1, -1]),
            l: DivisorClass::new(&[1, -1, -1]),
            f1: DivisorClass::new(&[0, 1, -1]),
            f2: DivisorClass::new(&[0, 0, 1]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

fn check(relation: &str, expected: String, actual: String) -> RelationCheck {
    let pass = expected == actual;
    RelationCheck {
        relation: relation.into(),
        expected,
        actual,
        pass,
    }
}

/// Checks every stated relation in the Chow group of the two-fold blow-up.
pub fn chow_verify_blowup_plane() -> Vec<RelationCheck> {
    let s = BlownUpPlane::default();
    let f = &s.form;
    let class = |rel: &str, lhs: &DivisorClass, rhs: DivisorClass| {
        check(rel, f.format(&rhs), f.format(lhs))
    };
    let num =
        |rel: &str, value: i64, expected: i64| check(rel, expected.to_string(), value.to_string());
    vec![
        class("[D1] = [L] + [F2]", &s.d1, s.l.add(&s.f2)),
        class("[H] = [D1] + [F1] + [F2]", &s.h, s.d1.add(&s.f1).add(&s.f2)),
        class("[D2] = [H] + [L]", &s.d2, s.h.add(&s.l)),
        num("[H].[D1] = 1", f.pair(&s.h, &s.d1), 1),
        num("[H].[L] = 1", f.pair(&s.h, &s.l), 1),
        num("[L]^2 = -1", f.pair(&s.l, &s.l), -1),
        num("[H]^2 = 1", f.pair(&s.h, &s.h), 1),
        num("[D1]^2 = 0", f.pair(&s.d1, &s.d1), 0),
        num("[D2]^2 = 2", f.pair(&s.d2, &s.d2), 2),
        num("[D2].[L] = 0", f.pair(&s.d2, &s.l), 0),
    ]
}

/// Class on the special fibre `F₂ ∪ Y`: `surface` in the basis `(D₂, F)` of
/// the Hirzebruch surface (`F` the fibre, also the class of the gluing curve
/// `F₂`), `y` in the basis `(H₁, H₂, L)` of `Y = Bl_pt(P¹×P¹)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrelogClass {
    pub surface: DivisorClass,
    pub y: DivisorClass,
}

pub fn hirzebruch_form() -> IntersectionForm {
    IntersectionForm {
        basis: vec!["D2", "F"],
        gram: vec![vec![2, 1], vec![1, 0]],
    }
}

pub fn y_form() -> IntersectionForm {
    IntersectionForm {
        basis: vec!["H1", "H2", "L"],
        gram: vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, -1]],
    }
}

impl PrelogClass {
    pub fn new(surface: &[i64], y: &[i64]) -> Self {
        PrelogClass {
            surface: DivisorClass::new(surface),
            y: DivisorClass::new(y),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        PrelogClass {
            surface: self.surface.add(&o.surface),
            y: self.y.add(&o.y),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        PrelogClass {
            surface: self.surface.scale(k),
            y: self.y.scale(k),
        }
    }

    /// Degrees of the two components on the gluing curve: `α₁·F` and `α₂·H₁`.
    pub fn restriction_degrees(&self) -> (i64, i64) {
        let gluing_surface = DivisorClass::new(&[0, 1]);
        let gluing_y = DivisorClass::new(&[1, 0, 0]);
        (
            hirzebruch_form().pair(&self.surface, &gluing_surface),
            y_form().pair(&self.y, &gluing_y),
        )
    }

    pub fn is_matching(&self) -> bool {
        let (a, b) = self.restriction_degrees();
        a == b
    }

    /// Sum of the intersections on the two components.
    pub fn product(&self, o: &Self) -> i64 {
        hirzebruch_form().pair(&self.surface, &o.surface) + y_form().pair(&self.y, &o.y)
    }

    /// Equal in the quotient by the gluing identification `(F, 0) ~ (0, H₁)`.
    pub fn equivalent(&self, o: &Self) -> bool {
        let d = self.add(&o.scale(-1));
        // d must be k·((F,0) − (0,H₁))
        let k = d.surface.coords[1];
        d.surface.coords[0] == 0 && d.y.coords == [-k, 0, 0]
    }

    pub fn format(&self) -> String {
        format!(
            "({}, {})",
            hirzebruch_form().format(&self.surface),
            y_form().format(&self.y)
        )
    }
}

/// Images of the generators `D₁, F₁, F₂` of the Chow group of the
/// two-fold blow-up.
pub fn specialization_generators() -> [(&'static str, PrelogClass); 3] {
    let f = PrelogClass::new(&[0, 1], &[0, 0, 0]);
    let d2h2 = PrelogClass::new(&[1, 0], &[0, 1, 0]);
    let l = PrelogClass::new(&[0, 0], &[0, 0, 1]);
    [
        ("D1", f.clone()),
        ("F1", d2h2.add(&f.scale(-2))),
        ("F2", f.add(&l.scale(-1))),
    ]
}

/// `σ([H]) = σ([D₁]) + σ([F₁]) + σ([F₂])`.
pub fn specialize_h() -> PrelogClass {
    specialization_generators()
        .iter()
        .fold(PrelogClass::new(&[0, 0], &[0, 0, 0]), |acc, (_, c)| {
            acc.add(c)
        })
}

/// Matching for every generator and for `σ([H])`, the stated generator
/// products, and compatibility of `σ([H])·σ(X)` with `[H]·X`.
pub fn specialization_checks() -> Vec<RelationCheck> {
    let h = specialize_h();
    let mut out = vec![check(
        "sigma([H]) = (D2, H2-L)",
        PrelogClass::new(&[1, 0], &[0, 1, -1]).format(),
        h.format(),
    )];
    for (name, c) in specialization_generators()
        .iter()
        .chain([("H", h.clone())].iter())
    {
        let (a, b) = c.restriction_degrees();
        out.push(check(
            &format!("sigma([{name}]) matches on F2"),
            a.to_string(),
            b.to_string(),
        ));
    }
    let f = PrelogClass::new(&[0, 1], &[0, 0, 0]);
    let d2h2 = PrelogClass::new(&[1, 0], &[0, 1, 0]);
    let l = PrelogClass::new(&[0, 0], &[0, 0, 1]);
    let num = |rel: &str, v: i64, e: i64| check(rel, e.to_string(), v.to_string());
    out.push(num("(D2,H2).(F2,0) = 1", d2h2.product(&f), 1));
    out.push(num("(D2,H2).(0,L) = 0", d2h2.product(&l), 0));
    out.push(num("(F2,0).(0,L) = 0", f.product(&l), 0));
    let plane = BlownUpPlane::default();
    let gens = specialization_generators();
    let images = [
        ("H", &h, &plane.h),
        ("D1", &gens[0].1, &plane.d1),
        ("F1", &gens[1].1, &plane.f1),
        ("F2", &gens[2].1, &plane.f2),
    ];
    for (name, img, class) in images {
        out.push(num(
            &format!("sigma([H]).sigma([{name}]) = [H].[{name}]"),
            h.product(img),
            plane.form.pair(&plane.h, class),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig4_right() -> Fan {
        Fan::new(vec![[1, 2], [0, 1], [-1, 0], [0, -1]]).unwrap()
    }

    fn fig6_right() -> Fan {
        Fan::new(vec![[1, 3], [0, 1], [-1, 0], [0, -1]]).unwrap()
    }

    #[test]
    fn self_intersection_examples() {
        assert_eq!(p2_fan().self_intersections(), vec![1, 1, 1]);
        assert_eq!(fig4_right().self_intersections(), vec![0, -2, 0, 2]);
        assert_eq!(fig6_right().self_intersections(), vec![0, -3, 0, 3]);
    }

    #[test]
    fn fan_validation() {
        assert!(matches!(
            Fan::new(vec![[1, 0], [0, 1]]),
            Err(ToricError::TooFewRays(2))
        ));
        assert!(matches!(
            Fan::new(vec![[2, 0], [0, 1], [-1, -1]]),
            Err(ToricError::NonPrimitive(_))
        ));
        assert!(matches!(
            Fan::new(vec![[1, 0], [0, 1], [-1, 0]]),
            Err(ToricError::NotSmooth(..))
        ));
        assert!(matches!(
            Fan::new(vec![[1, 0], [1, 0], [0, 1], [-1, -1]]),
            Err(ToricError::DuplicateRay(_))
        ));
        // sorting by angle
        let f = Fan::new(vec![[-1, -1], [0, 1], [1, 0]]).unwrap();
        assert_eq!(f, p2_fan());
    }

    #[test]
    fn from_self_intersections() {
        let p2 = fan_from_self_intersections(&[1, 1, 1]).unwrap();
        assert!(p2.sl2_equivalence(&p2_fan()).is_some());
        let f2 = fan_from_self_intersections(&[0, -2, 0, 2]).unwrap();
        assert_eq!(f2.self_intersections(), vec![0, -2, 0, 2]);
        assert!(f2.sl2_equivalence(&fig4_right()).is_some());
        assert_eq!(
            fan_from_self_intersections(&[0, -1, 0]),
            Err(ToricError::DoesNotClose)
        );
        // closes but winds twice
        assert_eq!(
            fan_from_self_intersections(&[1; 6]),
            Err(ToricError::DoesNotClose)
        );
        assert_eq!(fan_from_self_intersections(&[-1; 6]).unwrap().len(), 6);
    }

    #[test]
    fn blow_up_down_round_trip() {
        let f = fig4_right();
        for c in 0..f.len() {
            let b = f.blow_up(c, None).unwrap();
            let sum = [
                f.rays()[c][0] + f.rays()[(c + 1) % 4][0],
                f.rays()[c][1] + f.rays()[(c + 1) % 4][1],
            ];
            let i = b.index_of(sum).unwrap();
            assert_eq!(b.self_intersections()[i], -1);
            assert_eq!(b.blow_down(i).unwrap(), f);
        }
        assert!(matches!(
            f.blow_down(0),
            Err(ToricError::NotMinusOne { index: 0, value: 0 })
        ));
        assert!(matches!(
            f.blow_up(9, None),
            Err(ToricError::BadIndex(9, 4))
        ));
    }

    #[test]
    fn sl2_action() {
        let f = fig4_right();
        assert_eq!(f.apply_sl2(&[[1, 0], [0, 1]]).unwrap(), f);
        assert!(matches!(
            f.apply_sl2(&[[2, 0], [0, 1]]),
            Err(ToricError::NotSl2(2))
        ));
        let m = [[2, 1], [1, 1]];
        let g = f.apply_sl2(&m).unwrap();
        let mut a = g.self_intersections();
        let k = g.index_of(apply(&m, f.rays()[0])).unwrap();
        a.rotate_left(k);
        assert_eq!(a, f.self_intersections());
        assert_eq!(f.sl2_equivalence(&g), Some(m));
    }

    #[test]
    fn line_conic_pipeline() {
        let stages = line_conic_toric_model().unwrap();
        let (_, left) = &stages[3];
        assert_eq!(left.rays(), &[[1, 1], [0, 1], [-1, 1], [0, -1]]);
        let (_, right) = stages.last().unwrap();
        assert_eq!(
            right,
            &Fan::decorated(
                vec![[1, 2], [0, 1], [-1, 0], [0, -1]],
                vec![false, false, true, false],
                ["D1", "F1", "F2", "D2"]
                    .iter()
                    .map(|s| Some(s.to_string()))
                    .collect(),
            )
            .unwrap()
        );
        assert_eq!(right.self_intersections(), vec![0, -2, 0, 2]);
    }

    #[test]
    fn nodal_cubic_pipeline() {
        let stages = nodal_cubic_toric_model().unwrap();
        let (_, model) = &stages[5];
        let a = model.self_intersections();
        let i = model.index_of_label("D3").unwrap();
        assert_eq!(a[i], 3);
        assert_eq!(a[model.index_of_label("E").unwrap()], -3);
        let (_, right) = stages.last().unwrap();
        assert_eq!(right.rays(), fig6_right().rays());
        assert_eq!(right.self_intersections(), vec![0, -3, 0, 3]);
        let labels: Vec<_> = right.labels().iter().map(|l| l.clone().unwrap()).collect();
        assert_eq!(labels, ["F1", "E", "F2", "D3"]);
        assert_eq!(right.marks(), &[true, false, true, false]);
    }

    #[test]
    fn chow_relations_hold() {
        let report = chow_verify_blowup_plane();
        assert_eq!(report.len(), 10);
        for r in &report {
            assert!(r.pass, "{r:?}");
        }
        let s = BlownUpPlane::default();
        assert_eq!(s.form.pair(&s.d2, &s.d2), 2);
        assert_eq!(s.form.pair(&s.l, &s.l), -1);
        assert_eq!(s.form.pair(&s.h, &s.d1), 1);
    }

    #[test]
    fn specialization() {
        assert_eq!(specialize_h(), PrelogClass::new(&[1, 0], &[0, 1, -1]));
        assert_eq!(specialize_h().restriction_degrees(), (1, 1));
        for r in specialization_checks() {
            assert!(r.pass, "{r:?}");
        }
        let f = PrelogClass::new(&[0, 1], &[0, 0, 0]);
        assert!(f.equivalent(&PrelogClass::new(&[0, 0], &[1, 0, 0])));
        assert!(!f.equivalent(&PrelogClass::new(&[0, 0], &[0, 1, 0])));
    }
}
