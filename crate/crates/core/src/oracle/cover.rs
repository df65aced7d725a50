//! Rigid-motion covering test between two triangles.
//!
//! If `mover` can be moved to cover `target`, it can also be moved so that a
//! side of `mover` contains a side of `target`. So it suffices to lay each
//! side of `target` along each side line of `mover`, in both orientations,
//! and slide it: every containment constraint is linear in the slide offset,
//! and feasibility is an interval intersection. Both orientations are tried,
//! so mirror images count as covering positions.

use crate::geometry::{orient, Point, Tolerances, Triangle};

fn ccw_vertices(t: &Triangle) -> [Point; 3] {
    if orient(t.a, t.b, t.c) >= 0.0 {
        [t.a, t.b, t.c]
    } else {
        [t.a, t.c, t.b]
    }
}

struct HalfPlane {
    origin: Point,
    /// Inward unit normal.
    normal: Point,
}

/// True when some rotation, translation or reflection of `mover` covers
/// `target` (closed containment, `eps_num · perimeter` slack).
pub fn can_cover(mover: &Triangle, target: &Triangle, tol: &Tolerances) -> bool {
    let m = ccw_vertices(mover);
    let t = target.vertices();
    let slack = tol.eps_num * mover.perimeter();

    let planes: Vec<HalfPlane> = (0..3)
        .map(|k| {
            let e = m[(k + 1) % 3] - m[k];
            HalfPlane {
                origin: m[k],
                normal: e.perp() * (1.0 / e.norm()),
            }
        })
        .collect();

    for i in 0..3 {
        let origin = m[i];
        let edge = m[(i + 1) % 3] - origin;
        let dir = edge * (1.0 / edge.norm());
        let left = dir.perp();

        for j in 0..3 {
            let (p, q, r) = (t[j], t[(j + 1) % 3], t[(j + 2) % 3]);
            let len = p.distance(q);
            if len > edge.norm() + slack {
                continue;
            }
            for (start, end) in [(p, q), (q, p)] {
                let e = (end - start) * (1.0 / len);
                let rel = r - start;
                let local = [(0.0, 0.0), (len, 0.0), (rel.dot(e), e.cross(rel).abs())];

                let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
                let mut feasible = true;
                'constraints: for &(x, y) in &local {
                    let base = origin + dir * x + left * y;
                    for hp in &planes {
                        let a = hp.normal.dot(base - hp.origin);
                        let b = hp.normal.dot(dir);
                        if b.abs() < 1e-12 {
                            if a < -slack {
                                feasible = false;
                                break 'constraints;
                            }
                        } else if b > 0.0 {
                            lo = lo.max((-slack - a) / b);
                        } else {
                            hi = hi.min((-slack - a) / b);
                        }
                    }
                }
                if feasible && lo <= hi {
                    return true;
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(p: [(f64, f64); 3]) -> Triangle {
        Triangle::new(
            Point::new(p[0].0, p[0].1),
            Point::new(p[1].0, p[1].1),
            Point::new(p[2].0, p[2].1),
        )
    }

    #[test]
    fn reflexive() {
        let tol = Tolerances::default();
        let t = tri([(0.0, 0.0), (4.0, 0.0), (1.0, 3.0)]);
        assert!(can_cover(&t, &t, &tol));
        let cw = Triangle::new(t.a, t.c, t.b);
        assert!(can_cover(&cw, &t, &tol));
    }

    #[test]
    fn moved_copy_is_covered() {
        let tol = Tolerances::default();
        let t = tri([(0.0, 0.0), (4.0, 0.0), (1.0, 3.0)]);
        let moved = t.map(|p| p.rotate(1.1) + Point::new(10.0, -3.0));
        assert!(can_cover(&moved, &t, &tol));
        let mirrored = t.map(|p| Point::new(-p.x, p.y));
        assert!(can_cover(&mirrored, &t, &tol));
    }

    #[test]
    fn smaller_mover_fails() {
        let tol = Tolerances::default();
        let t = tri([(0.0, 0.0), (4.0, 0.0), (1.0, 3.0)]);
        let shrunk = t.map(|p| p * 0.99);
        assert!(!can_cover(&shrunk, &t, &tol));
    }

    #[test]
    fn long_thin_cannot_cover_fat() {
        let tol = Tolerances::default();
        let thin = tri([(0.0, 0.0), (10.0, 0.0), (5.0, 0.3)]);
        let fat = tri([(0.0, 0.0), (1.0, 0.0), (0.5, 0.9)]);
        assert!(!can_cover(&thin, &fat, &tol));
        assert!(can_cover(&thin, &tri([(0.0, 0.0), (3.0, 0.0), (1.0, 0.1)]), &tol));
    }
}
