mod common;

use std::f64::consts::PI;

use common::*;
use isokit::geometry::{
    area, canonicalize, contains_point, contains_triangle, support_line, triangle_from_angles,
    triangle_from_sides, Point, ShapeClass, Triangle,
};
use isokit::Error;
use proptest::prelude::*;

#[test]
fn right_345_is_labeled_by_opposite_side() {
    let t = Triangle::new(Point::new(0.0, 0.0), Point::new(4.0, 0.0), Point::new(4.0, 3.0));
    let ct = canonicalize(&t, &tol()).unwrap();
    assert_eq!((ct.a, ct.b, ct.c), (3.0, 4.0, 5.0));
    assert_eq!(ct.tri.a, Point::new(0.0, 0.0));
    assert_eq!(ct.tri.b, Point::new(4.0, 3.0));
    assert_eq!(ct.tri.c, Point::new(4.0, 0.0));
    assert!((ct.gamma - PI / 2.0).abs() < 1e-15);
    assert_eq!(ct.area, 6.0);
    assert_eq!(ct.shape_class, ShapeClass::Scalene);
}

#[test]
fn shape_classes() {
    let eq = triangle_from_sides(2.0, 2.0, 2.0).unwrap();
    assert_eq!(canonicalize(&eq, &tol()).unwrap().shape_class, ShapeClass::Equilateral);
    let iso = triangle_from_sides(1.0, 1.0, 2.0f64.sqrt()).unwrap();
    assert_eq!(canonicalize(&iso, &tol()).unwrap().shape_class, ShapeClass::Isosceles);
    // Within eps_len of isosceles.
    let near = triangle_from_sides(1.0, 1.0 + 1e-12, 1.5).unwrap();
    assert_eq!(canonicalize(&near, &tol()).unwrap().shape_class, ShapeClass::Isosceles);
    let off = triangle_from_sides(1.0, 1.0 + 1e-6, 1.5).unwrap();
    assert_eq!(canonicalize(&off, &tol()).unwrap().shape_class, ShapeClass::Scalene);
}

#[test]
fn rejects_bad_input() {
    let line = Triangle::new(Point::new(0.0, 0.0), Point::new(1.0, 1.0), Point::new(2.0, 2.0));
    assert!(matches!(canonicalize(&line, &tol()), Err(Error::DegenerateTriangle { .. })));
    let nan = Triangle::new(Point::new(f64::NAN, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 1.0));
    assert!(matches!(canonicalize(&nan, &tol()), Err(Error::NonFinite)));
    assert!(matches!(triangle_from_sides(1.0, 2.0, 3.0), Err(Error::InvalidSides(_))));
    assert!(matches!(triangle_from_sides(-1.0, 2.0, 2.0), Err(Error::InvalidSides(_))));
    assert!(matches!(triangle_from_sides(f64::INFINITY, 2.0, 2.0), Err(Error::NonFinite)));
    assert!(triangle_from_angles(1.0, 2.5, 1.0).is_err());
    assert!(triangle_from_angles(0.5, 0.5, 0.0).is_err());
}

#[test]
fn from_sides_realizes_lengths() {
    let t = triangle_from_sides(3.0, 4.0, 5.0).unwrap();
    for (got, want) in t.side_lengths().into_iter().zip([3.0, 4.0, 5.0]) {
        assert!(rel(got, want) < 1e-15);
    }
    assert!(rel(area(&t), 6.0) < 1e-15);
}

#[test]
fn closed_containment() {
    let t = triangle_from_sides(3.0, 4.0, 5.0).unwrap();
    for p in t.vertices() {
        assert!(contains_point(&t, p, &tol()));
    }
    assert!(contains_point(&t, t.a.midpoint(t.b), &tol()));
    assert!(!contains_point(&t, Point::new(2.5, -1e-3), &tol()));
    assert!(contains_triangle(&t, &t, &tol()));
    let inner = t.map(|p| (p - t.c) * 0.5 + t.c);
    assert!(contains_triangle(&t, &inner, &tol()));
    assert!(!contains_triangle(&inner, &t, &tol()));
}

proptest! {
    #[test]
    fn canonicalize_is_idempotent(ct in scalene()) {
        let again = canonicalize(&ct.tri, &tol()).unwrap();
        prop_assert_eq!(again, ct);
    }

    #[test]
    fn canonical_order(ct in scalene()) {
        prop_assert!(ct.a <= ct.b && ct.b <= ct.c);
        prop_assert!(ct.alpha <= ct.beta && ct.beta <= ct.gamma);
        prop_assert!((ct.alpha + ct.beta + ct.gamma - PI).abs() < 1e-12);
    }

    #[test]
    fn rigid_motions_preserve_area(
        ct in scalene(),
        theta in 0.0..(2.0 * PI),
        mirror in any::<bool>(),
        dx in -100.0..100.0f64,
        dy in -100.0..100.0f64,
    ) {
        let moved = ct.transformed(rigid(theta, mirror, Point::new(dx, dy)), &tol()).unwrap();
        prop_assert!(rel(moved.area, ct.area) < 1e-9);
        prop_assert!(rel(moved.a, ct.a) < 1e-9 && rel(moved.b, ct.b) < 1e-9 && rel(moved.c, ct.c) < 1e-9);
        prop_assert!((moved.alpha - ct.alpha).abs() < 1e-9);
        prop_assert!((moved.gamma - ct.gamma).abs() < 1e-9);
    }

    #[test]
    fn support_line_touches_and_bounds(ct in scalene(), phi in 0.0..(2.0 * PI)) {
        let h = support_line(&ct.tri, phi);
        let n = Point::from_angle(phi);
        let scale = ct.tri.bbox_diagonal();
        let dots = ct.tri.vertices().map(|v| v.dot(n));
        prop_assert!(dots.iter().all(|&d| d <= h + 1e-12 * scale));
        prop_assert!(dots.iter().any(|&d| (d - h).abs() <= 1e-12 * scale));
    }

    #[test]
    fn centroid_inside(ct in scalene()) {
        let [a, b, c] = ct.tri.vertices();
        let g = (a + b + c) * (1.0 / 3.0);
        prop_assert!(contains_point(&ct.tri, g, &tol()));
        prop_assert!(!contains_point(&ct.tri, a + (a - g) * 0.01, &tol()));
    }
}
