//! Plain SVG pictures of fans, scattering diagrams and tropical curves.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::rational::Rational;
use crate::scattering::ScatteringDiagram;
use crate::toricgeo::Fan;
use crate::tropical::{Conditions, End, TropicalCurve};

const SIZE: f64 = 400.0;

struct Canvas {
    body: String,
    scale: f64,
}

impl Canvas {
    fn new(scale: f64) -> Self {
        Canvas {
            body: String::new(),
            scale,
        }
    }

    // y grows upwards in the picture
    fn p(&self, x: f64, y: f64) -> (f64, f64) {
        (SIZE / 2.0 + x * self.scale, SIZE / 2.0 - y * self.scale)
    }

    fn grid(&mut self, half: i64) {
        for k in -half..=half {
            let (a, b) = (
                self.p(k as f64, -half as f64),
                self.p(k as f64, half as f64),
            );
            self.raw_line(a, b, "#ddd", 0.5, "");
            let (a, b) = (
                self.p(-half as f64, k as f64),
                self.p(half as f64, k as f64),
            );
            self.raw_line(a, b, "#ddd", 0.5, "");
        }
    }

    fn raw_line(&mut self, a: (f64, f64), b: (f64, f64), color: &str, width: f64, extra: &str) {
        let _ = writeln!(
            self.body,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{color}" stroke-width="{width}"{extra}/>"#,
            a.0, a.1, b.0, b.1
        );
    }

    fn line(&mut self, a: (f64, f64), b: (f64, f64), color: &str, width: f64) {
        let (a, b) = (self.p(a.0, a.1), self.p(b.0, b.1));
        self.raw_line(a, b, color, width, "");
    }

    fn dashed(&mut self, a: (f64, f64), b: (f64, f64), color: &str) {
        let (a, b) = (self.p(a.0, a.1), self.p(b.0, b.1));
        self.raw_line(a, b, color, 1.0, r#" stroke-dasharray="4 3""#);
    }

    fn text(&mut self, at: (f64, f64), s: &str, size: u32) {
        let (x, y) = self.p(at.0, at.1);
        let _ = writeln!(
            self.body,
            r#"<text x="{x:.2}" y="{y:.2}" font-size="{size}" font-family="sans-serif" text-anchor="middle">{}</text>"#,
            escape(s)
        );
    }

    fn dot(&mut self, at: (f64, f64), color: &str) {
        let (x, y) = self.p(at.0, at.1);
        let _ = writeln!(
            self.body,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="{color}"/>"#
        );
    }

    fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{}</svg>\n",
            self.body
        )
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn unit(v: [i64; 2]) -> (f64, f64) {
    let (x, y) = (v[0] as f64, v[1] as f64);
    let n = (x * x + y * y).sqrt();
    (x / n, y / n)
}

/// Rays to the edge of the picture, labelled `name(a)` with the
/// self-intersection `a`, and `×` on marked rays.
pub fn fan_svg(fan: &Fan) -> String {
    let mut c = Canvas::new(SIZE / 6.0);
    c.grid(3);
    let selfint = fan.self_intersections();
    for (i, &r) in fan.rays().iter().enumerate() {
        let u = unit(r);
        c.line((0.0, 0.0), (2.8 * u.0, 2.8 * u.1), "black", 2.0);
        c.dot((r[0] as f64, r[1] as f64), "black");
        let name = fan.labels()[i]
            .clone()
            .unwrap_or_else(|| format!("({},{})", r[0], r[1]));
        c.text(
            (2.3 * u.0 + 0.25 * u.1, 2.3 * u.1 - 0.25 * u.0),
            &format!("{name}({})", selfint[i]),
            13,
        );
        if fan.marks()[i] {
            c.text((2.0 * u.0, 2.0 * u.1 - 0.1), "×", 18);
        }
    }
    c.finish()
}

/// Walls as lines and rays; each labelled with its leading terms.
pub fn diagram_svg(d: &ScatteringDiagram) -> String {
    let mut c = Canvas::new(SIZE / 6.0);
    c.grid(3);
    for w in d.walls() {
        let u = unit(w.direction());
        let start = if w.is_line() {
            (-2.9 * u.0, -2.9 * u.1)
        } else {
            (0.0, 0.0)
        };
        let color = if w.is_line() { "black" } else { "#1f5fbf" };
        c.line(start, (2.9 * u.0, 2.9 * u.1), color, 1.5);
        let label = w.function().to_string();
        let short = if label.chars().count() > 28 {
            format!("{}…", label.chars().take(27).collect::<String>())
        } else {
            label
        };
        c.text((2.2 * u.0 - 0.2 * u.1, 2.2 * u.1 + 0.2 * u.0), &short, 10);
    }
    c.finish()
}

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

/// Tropical curves with their weights; marked points as red dots and the
/// prescribed lines of fixed ends dashed.
pub fn curves_svg(curves: &[TropicalCurve], cond: &Conditions) -> String {
    let mut pts: Vec<(f64, f64)> = cond.points.iter().map(|p| (f(&p[0]), f(&p[1]))).collect();
    for c in curves {
        pts.extend(c.positions.iter().map(|p| (f(&p[0]), f(&p[1]))));
    }
    let (mut lo, mut hi) = ((f64::MAX, f64::MAX), (f64::MIN, f64::MIN));
    for &(x, y) in &pts {
        lo = (lo.0.min(x), lo.1.min(y));
        hi = (hi.0.max(x), hi.1.max(y));
    }
    if pts.is_empty() {
        lo = (-1.0, -1.0);
        hi = (1.0, 1.0);
    }
    let center = ((lo.0 + hi.0) / 2.0, (lo.1 + hi.1) / 2.0);
    let span = (hi.0 - lo.0).max(hi.1 - lo.1).max(1.0);
    let mut c = Canvas::new(SIZE / (2.0 * span));
    let at = |x: f64, y: f64| (x - center.0, y - center.1);
    let leaf_len = span * 0.6;
    for (leaf, anchor) in cond.anchors.iter().enumerate() {
        let Some(a) = anchor else { continue };
        let dir = curves
            .first()
            .map(|cv| cv.curve_type.leaves[leaf].direction)
            .unwrap_or([1, 0]);
        let u = unit(dir);
        let (x, y) = (f(&a[0]), f(&a[1]));
        c.dashed(
            at(x - 2.0 * span * u.0, y - 2.0 * span * u.1),
            at(x + 2.0 * span * u.0, y + 2.0 * span * u.1),
            "#999",
        );
    }
    for cv in curves {
        for e in &cv.curve_type.edges {
            let p = &cv.positions[e.from];
            let a = (f(&p[0]), f(&p[1]));
            let b = match e.to {
                End::Vertex(v) => (f(&cv.positions[v][0]), f(&cv.positions[v][1])),
                End::Leaf(_) => {
                    let u = unit(e.direction);
                    (a.0 + leaf_len * u.0, a.1 + leaf_len * u.1)
                }
            };
            c.line(
                at(a.0, a.1),
                at(b.0, b.1),
                "black",
                1.0 + 0.6 * e.weight as f64,
            );
            if e.weight > 1 {
                let mid = ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0);
                let (mx, my) = at(mid.0, mid.1);
                c.text(
                    (mx + 0.04 * span, my + 0.04 * span),
                    &e.weight.to_string(),
                    12,
                );
            }
        }
        for p in &cv.positions {
            let (x, y) = at(f(&p[0]), f(&p[1]));
            c.dot((x, y), "black");
        }
    }
    for p in &cond.points {
        let (x, y) = at(f(&p[0]), f(&p[1]));
        c.dot((x, y), "red");
    }
    c.finish()
}
