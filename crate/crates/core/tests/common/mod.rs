//! Shared strategies and helpers for the integration tests.
#![allow(dead_code)]

use std::f64::consts::PI;

use isokit::geometry::{canonicalize, triangle_from_angles, CanonicalTriangle, Point, Tolerances, Triangle};
use proptest::prelude::*;

pub fn tol() -> Tolerances {
    Tolerances::default()
}

pub fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / x.abs().max(y.abs())
}

/// Rotation by `theta`, optional mirror in the x-axis, then translation.
pub fn rigid(theta: f64, mirror: bool, shift: Point) -> impl Fn(Point) -> Point {
    move |p: Point| {
        let p = if mirror { Point::new(p.x, -p.y) } else { p };
        p.rotate(theta) + shift
    }
}

/// Angles `(α, β)` at `A` and `B` from the simplex, every angle at least
/// `min_deg` and every pair at least `gap_deg` apart.
pub fn angle_pair(min_deg: f64, gap_deg: f64) -> impl Strategy<Value = (f64, f64)> {
    (0.0..1.0f64, 0.0..1.0f64)
        .prop_map(|(u, v)| {
            let (u, v) = if u < v { (u, v) } else { (v, u) };
            (PI * u, PI * (v - u))
        })
        .prop_filter("angle margins", move |&(a, b)| {
            let c = PI - a - b;
            let (m, g) = (min_deg.to_radians(), gap_deg.to_radians());
            a >= m && b >= m && c >= m && (a - b).abs() >= g && (b - c).abs() >= g && (a - c).abs() >= g
        })
}

/// A triangle with the given angles, placed by a random similarity.
pub fn placed(alpha: f64, beta: f64, scale: f64, theta: f64, shift: (f64, f64)) -> Triangle {
    triangle_from_angles(alpha, beta, scale)
        .unwrap()
        .map(rigid(theta, false, Point::new(shift.0, shift.1)))
}

pub fn scalene_with(min_deg: f64, gap_deg: f64) -> impl Strategy<Value = CanonicalTriangle> {
    (
        angle_pair(min_deg, gap_deg),
        0.2..5.0f64,
        0.0..(2.0 * PI),
        (-10.0..10.0f64, -10.0..10.0f64),
    )
        .prop_map(|((a, b), s, th, sh)| canonicalize(&placed(a, b, s, th, sh), &tol()).unwrap())
        .prop_filter("scalene", |ct| ct.is_scalene())
}

pub fn scalene() -> impl Strategy<Value = CanonicalTriangle> {
    scalene_with(3.0, 0.5)
}

pub fn acute_scalene() -> impl Strategy<Value = CanonicalTriangle> {
    scalene().prop_filter("acute", |ct| ct.gamma < PI / 2.0 - 1e-3)
}

pub fn non_acute_scalene() -> impl Strategy<Value = CanonicalTriangle> {
    scalene().prop_filter("right or obtuse", |ct| ct.gamma > PI / 2.0 + 1e-3)
}

/// Two of the three side lengths agree within `rel_tol`.
pub fn is_isosceles(t: &Triangle, rel_tol: f64) -> bool {
    let [x, y, z] = t.side_lengths();
    rel(x, y) <= rel_tol || rel(y, z) <= rel_tol || rel(x, z) <= rel_tol
}
