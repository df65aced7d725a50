//! Brute-force minimum enclosing isosceles triangle.
//!
//! An isosceles shape is fixed by its apex angle and the direction of its
//! symmetry axis. Once those are fixed the three outward side normals are
//! known, and the smallest container with those side directions is cut out
//! by the three supporting lines of the input. That leaves a 2D search over
//! `(apex_angle, rotation)`: a coarse grid followed by shrinking-grid
//! descent around the most promising nodes.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point, Triangle};

/// Apex angle and axis direction of an isosceles shape.
///
/// `rotation` is the direction of the symmetry axis pointing from the apex
/// toward the base.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShapeParams {
    pub apex_angle: f64,
    pub rotation: f64,
}

impl ShapeParams {
    pub fn new(apex_angle: f64, rotation: f64) -> Self {
        Self {
            apex_angle,
            rotation: rotation.rem_euclid(TAU),
        }
    }

    /// Outward unit normals `[base, left leg, right leg]`.
    pub fn normals(&self) -> [Point; 3] {
        let (sin_r, cos_r) = self.rotation.sin_cos();
        let (sh, ch) = (0.5 * self.apex_angle).sin_cos();
        side_normals(cos_r, sin_r, sh, ch)
    }

    /// Shape of an isosceles triangle given as `(apex, base, base)`.
    pub fn of_triangle(apex: Point, base1: Point, base2: Point) -> Self {
        let mid = base1.midpoint(base2);
        let axis = mid - apex;
        let apex_angle = crate::geometry::angle_at(apex, base1, base2);
        Self::new(apex_angle, axis.y.atan2(axis.x))
    }
}

#[inline]
fn side_normals(cos_r: f64, sin_r: f64, sh: f64, ch: f64) -> [Point; 3] {
    let u = Point::new(cos_r, sin_r);
    let w = u.perp();
    [u, u * -sh + w * ch, u * -sh - w * ch]
}

#[inline]
fn line_intersection(n1: Point, h1: f64, n2: Point, h2: f64) -> Point {
    let det = n1.cross(n2);
    Point::new((h1 * n2.y - h2 * n1.y) / det, (n1.x * h2 - n2.x * h1) / det)
}

/// Area of the triangle `{p : <p, n_i> ≤ h_i}`.
#[inline]
fn area_from_supports(n: &[Point; 3], h: [f64; 3]) -> f64 {
    let s01 = n[0].cross(n[1]);
    let s12 = n[1].cross(n[2]);
    let s20 = n[2].cross(n[0]);
    let num = h[0] * s12 + h[1] * s20 + h[2] * s01;
    num * num / (2.0 * (s01 * s12 * s20).abs())
}

#[inline]
fn supports(verts: &[Point; 3], n: &[Point; 3]) -> [f64; 3] {
    n.map(|ni| verts[0].dot(ni).max(verts[1].dot(ni)).max(verts[2].dot(ni)))
}

fn check_shape(sp: &ShapeParams) -> Result<()> {
    if sp.apex_angle > 0.0 && sp.apex_angle < PI && sp.rotation.is_finite() {
        Ok(())
    } else {
        Err(Error::UnboundedShape)
    }
}

/// The smallest triangle of shape `sp` containing `t`, returned as
/// `(apex, base vertex, base vertex)`. Every side touches `t`.
pub fn min_triangle_for_shape(t: &Triangle, sp: &ShapeParams) -> Result<Triangle> {
    check_shape(sp)?;
    let n = sp.normals();
    let h = supports(&t.vertices(), &n);
    Ok(Triangle::new(
        line_intersection(n[1], h[1], n[2], h[2]),
        line_intersection(n[0], h[0], n[1], h[1]),
        line_intersection(n[0], h[0], n[2], h[2]),
    ))
}

/// Area of [`min_triangle_for_shape`] without building the triangle.
pub fn shape_area(t: &Triangle, sp: &ShapeParams) -> f64 {
    let n = sp.normals();
    area_from_supports(&n, supports(&t.vertices(), &n))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleResult {
    pub min_area: f64,
    pub witness: Triangle,
    pub params: ShapeParams,
    /// Grid spacing (radians) of the last refinement level.
    pub grid_resolution: f64,
    pub refined: bool,
}

pub const DEFAULT_COARSE_STEP_DEG: f64 = 0.5;
pub const DEFAULT_REFINE_ITERS: u32 = 8;

/// Number of coarse local minima that get refined.
const MAX_SEEDS: usize = 4;
/// Half-width, in nodes, of each refinement grid.
const REFINE_HALF_WIDTH: i32 = 4;
const SHRINK: f64 = 4.0;
const MAX_MOVES_PER_LEVEL: usize = 64;

struct Objective {
    verts: [Point; 3],
    min_apex: f64,
}

impl Objective {
    fn new(t: &Triangle, min_apex: f64) -> Self {
        // Centering keeps the support values small and the area formula
        // free of cancellation for far-from-origin input.
        let g = Point::new(
            (t.a.x + t.b.x + t.c.x) / 3.0,
            (t.a.y + t.b.y + t.c.y) / 3.0,
        );
        Self {
            verts: t.vertices().map(|p| p - g),
            min_apex,
        }
    }

    fn in_domain(&self, apex: f64) -> bool {
        apex >= self.min_apex && apex <= PI - self.min_apex
    }

    fn eval(&self, apex: f64, rotation: f64) -> f64 {
        let n = ShapeParams::new(apex, rotation).normals();
        area_from_supports(&n, supports(&self.verts, &n))
    }
}

/// Lexicographic `(area, apex, rotation)` order used for every argmin.
fn better(a: (f64, f64, f64), b: (f64, f64, f64)) -> bool {
    a.0.total_cmp(&b.0)
        .then(a.1.total_cmp(&b.1))
        .then(a.2.total_cmp(&b.2))
        .is_lt()
}

fn refine(obj: &Objective, start: (f64, f64, f64), step: f64, iters: u32) -> ((f64, f64, f64), f64) {
    let mut best = start;
    let mut h = step;
    for _ in 0..iters {
        h /= SHRINK;
        for _ in 0..MAX_MOVES_PER_LEVEL {
            let (_, apex0, rot0) = best;
            let mut candidate = best;
            for i in -REFINE_HALF_WIDTH..=REFINE_HALF_WIDTH {
                let apex = apex0 + i as f64 * h;
                if !obj.in_domain(apex) {
                    continue;
                }
                for j in -REFINE_HALF_WIDTH..=REFINE_HALF_WIDTH {
                    if i == 0 && j == 0 {
                        continue;
                    }
                    let rot = (rot0 + j as f64 * h).rem_euclid(TAU);
                    let node = (obj.eval(apex, rot), apex, rot);
                    if better(node, candidate) {
                        candidate = node;
                    }
                }
            }
            if candidate.0 < best.0 {
                best = candidate;
            } else {
                break;
            }
        }
    }
    (best, h)
}

/// Minimum-area isosceles container of `t` found by direct search.
///
/// `coarse_step` (radians, at most 2°) is the spacing of the initial grid over
/// apex angle and axis direction; each of the `refine_iters` levels shrinks the
/// spacing by 4. Deterministic for fixed input.
pub fn brute_force_min_isosceles(
    t: &Triangle,
    coarse_step: f64,
    refine_iters: u32,
) -> Result<OracleResult> {
    if !(coarse_step > 0.0 && coarse_step <= 2f64.to_radians() * (1.0 + 1e-12)) {
        return Err(Error::InvalidInput(format!(
            "coarse step must lie in (0°, 2°], got {}°",
            coarse_step.to_degrees()
        )));
    }
    if !t.is_finite() {
        return Err(Error::NonFinite);
    }
    let obj = Objective::new(t, 1e-9);

    let n_apex = ((PI / coarse_step).round() as usize).saturating_sub(1).max(1);
    let apex_step = PI / (n_apex + 1) as f64;
    let n_rot = ((TAU / coarse_step).round() as usize).max(3);
    let rot_step = TAU / n_rot as f64;

    let rot_trig: Vec<(f64, f64)> = (0..n_rot)
        .map(|j| {
            let (s, c) = (j as f64 * rot_step).sin_cos();
            (c, s)
        })
        .collect();

    let mut grid = vec![0.0; n_apex * n_rot];
    for i in 0..n_apex {
        let apex = (i + 1) as f64 * apex_step;
        let (sh, ch) = (0.5 * apex).sin_cos();
        let row = &mut grid[i * n_rot..(i + 1) * n_rot];
        for (cell, &(cr, sr)) in row.iter_mut().zip(&rot_trig) {
            let n = side_normals(cr, sr, sh, ch);
            *cell = area_from_supports(&n, supports(&obj.verts, &n));
        }
    }

    // Coarse local minima over the 8-neighbourhood, rotation wrapping around.
    let mut seeds: Vec<(f64, usize, usize)> = Vec::new();
    for i in 0..n_apex {
        for j in 0..n_rot {
            let v = grid[i * n_rot + j];
            let is_min = (-1i64..=1).all(|di| {
                (-1i64..=1).all(|dj| {
                    let ii = i as i64 + di;
                    if (di == 0 && dj == 0) || ii < 0 || ii >= n_apex as i64 {
                        return true;
                    }
                    let jj = (j as i64 + dj).rem_euclid(n_rot as i64) as usize;
                    v <= grid[ii as usize * n_rot + jj]
                })
            });
            if is_min {
                seeds.push((v, i, j));
            }
        }
    }
    seeds.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    seeds.truncate(MAX_SEEDS);

    let step = apex_step.max(rot_step);
    let mut best: Option<(f64, f64, f64)> = None;
    let mut resolution = step;
    for &(v, i, j) in &seeds {
        let start = (v, (i + 1) as f64 * apex_step, j as f64 * rot_step);
        let (found, h) = refine(&obj, start, step, refine_iters);
        resolution = h;
        if best.is_none_or(|b| better(found, b)) {
            best = Some(found);
        }
    }
    let (_, apex, rot) = best.expect("grid has at least one local minimum");
    let params = ShapeParams::new(apex, rot);
    let witness = min_triangle_for_shape(t, &params)?;
    Ok(OracleResult {
        min_area: witness.area(),
        witness,
        params,
        grid_resolution: resolution,
        refined: refine_iters > 0,
    })
}
