//! Planar primitives: points, triangles, canonical labeling, closed-set
//! containment and support values.
//!
//! Everything here is plain `f64` arithmetic with explicit tolerances carried
//! in [`Tolerances`]. Containment is closed: a point on an edge is inside, and
//! the predicates lean toward inclusion by `eps_area` so that shared edges of
//! constructed containers test as contained.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerances threaded through every predicate and construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Area slack, relative to the squared bounding-box diagonal.
    pub eps_area: f64,
    /// Relative tolerance for calling two side lengths equal.
    pub eps_len: f64,
    /// Absolute angle tolerance in radians.
    pub eps_angle: f64,
    /// Generic relative numeric tolerance.
    pub eps_num: f64,
    /// Relative tolerance for declaring tied minimizers.
    pub eps_tie: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            eps_area: 1e-12,
            eps_len: 1e-9,
            eps_angle: 1e-9,
            eps_num: 1e-9,
            eps_tie: 1e-9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Unit vector at angle `theta` from the positive x-axis.
    pub fn from_angle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self::new(c, s)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 2D cross product.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    /// Counter-clockwise perpendicular.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn rotate(self, theta: f64) -> Point {
        let (s, c) = theta.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// Twice the signed area of `(a, b, c)`; positive when counter-clockwise.
pub fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

/// Distance from `p` to the closed segment `[a, b]`.
pub fn distance_to_segment(p: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == 0.0 {
        return p.distance(a);
    }
    let t = ((p - a).dot(ab) / len2).clamp(0.0, 1.0);
    p.distance(a + ab * t)
}

/// Distance from `p` to the infinite line through `a` and `b`.
pub fn distance_to_line(p: Point, a: Point, b: Point) -> f64 {
    orient(a, b, p).abs() / a.distance(b)
}

/// Interior angle at `vertex` between the rays toward `p` and `q`, in `[0, π]`.
pub fn angle_at(vertex: Point, p: Point, q: Point) -> f64 {
    let u = p - vertex;
    let v = q - vertex;
    u.cross(v).abs().atan2(u.dot(v))
}

/// A triangle with labeled vertices `a`, `b`, `c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Triangle {
    pub a: Point,
    pub b: Point,
    pub c: Point,
}

impl Triangle {
    pub const fn new(a: Point, b: Point, c: Point) -> Self {
        Self { a, b, c }
    }

    pub fn vertices(&self) -> [Point; 3] {
        [self.a, self.b, self.c]
    }

    pub fn is_finite(&self) -> bool {
        self.vertices().iter().all(|p| p.is_finite())
    }

    pub fn signed_area(&self) -> f64 {
        0.5 * orient(self.a, self.b, self.c)
    }

    /// Unsigned shoelace area; zero for collinear vertices.
    pub fn area(&self) -> f64 {
        self.signed_area().abs()
    }

    /// Side lengths `(|BC|, |CA|, |AB|)`.
    pub fn side_lengths(&self) -> [f64; 3] {
        [
            self.b.distance(self.c),
            self.c.distance(self.a),
            self.a.distance(self.b),
        ]
    }

    pub fn perimeter(&self) -> f64 {
        self.side_lengths().iter().sum()
    }

    /// Interior angles at `a`, `b`, `c`.
    pub fn angles(&self) -> [f64; 3] {
        [
            angle_at(self.a, self.b, self.c),
            angle_at(self.b, self.c, self.a),
            angle_at(self.c, self.a, self.b),
        ]
    }

    pub fn bbox_diagonal(&self) -> f64 {
        let vs = self.vertices();
        let (mut lo, mut hi) = (vs[0], vs[0]);
        for p in &vs[1..] {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        lo.distance(hi)
    }

    /// Area below which the triangle counts as degenerate.
    pub fn area_threshold(&self, tol: &Tolerances) -> f64 {
        tol.eps_area * self.bbox_diagonal().powi(2)
    }

    pub fn is_degenerate(&self, tol: &Tolerances) -> bool {
        self.area() <= self.area_threshold(tol)
    }

    /// Closed containment of `p`, with `eps_area` slack toward inclusion.
    pub fn contains_point(&self, p: Point, tol: &Tolerances) -> bool {
        let slack = 2.0 * self.area_threshold(tol);
        let sign = if self.signed_area() >= 0.0 { 1.0 } else { -1.0 };
        [(self.a, self.b), (self.b, self.c), (self.c, self.a)]
            .iter()
            .all(|&(u, v)| sign * orient(u, v, p) >= -slack)
    }

    /// Closed containment of `inner`. Vertex containment suffices by convexity.
    pub fn contains_triangle(&self, inner: &Triangle, tol: &Tolerances) -> bool {
        inner
            .vertices()
            .iter()
            .all(|&p| self.contains_point(p, tol))
    }

    /// Support value `max_v <v, (cos θ, sin θ)>` over the vertices.
    pub fn support(&self, normal_angle: f64) -> f64 {
        let n = Point::from_angle(normal_angle);
        self.support_along(n)
    }

    pub fn support_along(&self, n: Point) -> f64 {
        self.a.dot(n).max(self.b.dot(n)).max(self.c.dot(n))
    }

    /// Distance from `p` to the boundary of the triangle.
    pub fn boundary_distance(&self, p: Point) -> f64 {
        distance_to_segment(p, self.a, self.b)
            .min(distance_to_segment(p, self.b, self.c))
            .min(distance_to_segment(p, self.c, self.a))
    }

    pub fn map(&self, f: impl Fn(Point) -> Point) -> Triangle {
        Triangle::new(f(self.a), f(self.b), f(self.c))
    }
}

pub fn area(t: &Triangle) -> f64 {
    t.area()
}

pub fn contains_point(t: &Triangle, p: Point, tol: &Tolerances) -> bool {
    t.contains_point(p, tol)
}

pub fn contains_triangle(outer: &Triangle, inner: &Triangle, tol: &Tolerances) -> bool {
    outer.contains_triangle(inner, tol)
}

pub fn support_line(t: &Triangle, normal_angle: f64) -> f64 {
    t.support(normal_angle)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ShapeClass {
    Scalene,
    Isosceles,
    Equilateral,
}

/// A triangle relabeled so that `a = |BC| ≤ b = |CA| ≤ c = |AB|`.
///
/// Angles `alpha`, `beta`, `gamma` sit at `A`, `B`, `C` and are therefore
/// non-decreasing as well. The vertices of `tri` are the input points,
/// bit-for-bit, in a new order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CanonicalTriangle {
    pub tri: Triangle,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub area: f64,
    pub shape_class: ShapeClass,
}

impl CanonicalTriangle {
    pub fn is_scalene(&self) -> bool {
        self.shape_class == ShapeClass::Scalene
    }

    pub fn is_acute(&self, tol: &Tolerances) -> bool {
        self.gamma < PI / 2.0 - tol.eps_angle
    }

    pub fn ensure_scalene(&self) -> Result<()> {
        if self.is_scalene() {
            Ok(())
        } else {
            Err(Error::NotScalene(self.shape_class))
        }
    }

    /// Same triangle with every vertex mapped by `f`, relabeled from scratch.
    pub fn transformed(&self, f: impl Fn(Point) -> Point, tol: &Tolerances) -> Result<Self> {
        canonicalize(&self.tri.map(f), tol)
    }
}

fn lengths_equal(x: f64, y: f64, tol: &Tolerances) -> bool {
    (x - y).abs() <= tol.eps_len * x.max(y)
}

fn lex_cmp(p: Point, q: Point) -> std::cmp::Ordering {
    p.x.total_cmp(&q.x).then(p.y.total_cmp(&q.y))
}

/// Relabels `t` into canonical order.
///
/// Sides equal within `eps_len` are ordered by lexicographic vertex
/// coordinates, so the labeling of isosceles inputs is still deterministic.
pub fn canonicalize(t: &Triangle, tol: &Tolerances) -> Result<CanonicalTriangle> {
    if !t.is_finite() {
        return Err(Error::NonFinite);
    }
    let area = t.area();
    let threshold = t.area_threshold(tol);
    if area <= threshold {
        return Err(Error::DegenerateTriangle { area, threshold });
    }

    let verts = t.vertices();
    // Length of the side opposite each vertex.
    let opposite = t.side_lengths();
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| {
        opposite[i]
            .total_cmp(&opposite[j])
            .then(lex_cmp(verts[i], verts[j]))
    });

    let eq01 = lengths_equal(opposite[order[0]], opposite[order[1]], tol);
    let eq12 = lengths_equal(opposite[order[1]], opposite[order[2]], tol);
    let eq02 = lengths_equal(opposite[order[0]], opposite[order[2]], tol);
    let by_coords = |i: &usize, j: &usize| lex_cmp(verts[*i], verts[*j]);
    let shape_class = if eq02 || (eq01 && eq12) {
        order.sort_by(by_coords);
        ShapeClass::Equilateral
    } else if eq01 {
        order[..2].sort_by(by_coords);
        ShapeClass::Isosceles
    } else if eq12 {
        order[1..].sort_by(by_coords);
        ShapeClass::Isosceles
    } else {
        ShapeClass::Scalene
    };

    let tri = Triangle::new(verts[order[0]], verts[order[1]], verts[order[2]]);
    let [a, b, c] = tri.side_lengths();
    let [alpha, beta, gamma] = tri.angles();
    Ok(CanonicalTriangle {
        tri,
        a,
        b,
        c,
        alpha,
        beta,
        gamma,
        // Recomputed in canonical order so relabeling is exactly idempotent.
        area: tri.area(),
        shape_class,
    })
}

/// Triangle with the given side lengths `(|BC|, |CA|, |AB|)`, with `A` at the
/// origin and `B` on the positive x-axis.
pub fn triangle_from_sides(a: f64, b: f64, c: f64) -> Result<Triangle> {
    if !(a.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(Error::NonFinite);
    }
    if a <= 0.0 || b <= 0.0 || c <= 0.0 {
        return Err(Error::InvalidSides(format!(
            "side lengths must be positive, got ({a}, {b}, {c})"
        )));
    }
    if a >= b + c || b >= a + c || c >= a + b {
        return Err(Error::InvalidSides(format!(
            "({a}, {b}, {c}) violates the strict triangle inequality"
        )));
    }
    let cx = (b * b + c * c - a * a) / (2.0 * c);
    let cy = (b * b - cx * cx).max(0.0).sqrt();
    Ok(Triangle::new(
        Point::new(0.0, 0.0),
        Point::new(c, 0.0),
        Point::new(cx, cy),
    ))
}

/// Triangle with angles `alpha` at `A` and `beta` at `B` (radians), and
/// `|AB| = scale`.
pub fn triangle_from_angles(alpha: f64, beta: f64, scale: f64) -> Result<Triangle> {
    if !(alpha.is_finite() && beta.is_finite() && scale.is_finite()) {
        return Err(Error::NonFinite);
    }
    if alpha <= 0.0 || beta <= 0.0 || alpha + beta >= PI {
        return Err(Error::InvalidInput(format!(
            "angles must be positive with sum below 180 degrees, got ({}, {}) degrees",
            alpha.to_degrees(),
            beta.to_degrees()
        )));
    }
    if scale <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "scale must be positive, got {scale}"
        )));
    }
    let gamma = PI - alpha - beta;
    let b = scale * beta.sin() / gamma.sin();
    Ok(Triangle::new(
        Point::new(0.0, 0.0),
        Point::new(scale, 0.0),
        Point::from_angle(alpha) * b,
    ))
}
