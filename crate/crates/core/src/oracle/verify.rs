//! Closed-form minimum versus brute-force oracle, plus structural checks on
//! the oracle's witness container.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::geometry::{angle_at, distance_to_line, distance_to_segment, CanonicalTriangle, Point, Tolerances, Triangle};
use crate::minimum::minimum_isosceles_container;
use crate::oracle::search::{brute_force_min_isosceles, OracleResult};

/// Geometric tolerance for witness checks, relative to the longest side.
pub const EPS_GEOM: f64 = 1e-5;

/// Relative area gap accepted between oracle and closed form.
pub const GAP_TOLERANCE: f64 = 1e-3;

/// Structural properties every minimum container must have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessChecks {
    /// All input vertices lie on the witness boundary.
    pub vertices_on_boundary: bool,
    /// Every witness side line passes through an input vertex.
    pub sides_touch: bool,
    /// Each boundary arc between consecutive side midpoints holds exactly
    /// one input vertex.
    pub one_vertex_per_arc: bool,
    /// Some input vertex is a witness vertex.
    pub shared_vertex: bool,
    /// Two input vertices are witness vertices and the angles at one of them
    /// agree.
    pub shared_side_and_angle: bool,
}

impl WitnessChecks {
    pub fn boundary_ok(&self) -> bool {
        self.vertices_on_boundary && self.sides_touch && self.one_vertex_per_arc && self.shared_vertex
    }

    pub fn all(&self) -> bool {
        self.boundary_ok() && self.shared_side_and_angle
    }
}

/// Runs the witness checks with absolute length tolerance `eps_len` and angle
/// tolerance `eps_angle` (radians).
pub fn check_witness(input: &Triangle, witness: &Triangle, eps_len: f64, eps_angle: f64) -> WitnessChecks {
    let tv = input.vertices();
    let wv = witness.vertices();

    let vertices_on_boundary = tv.iter().all(|&p| witness.boundary_distance(p) <= eps_len);

    let sides_touch = (0..3).all(|k| {
        let (u, v) = (wv[k], wv[(k + 1) % 3]);
        tv.iter().any(|&p| distance_to_line(p, u, v) <= eps_len)
    });

    let on_arc = |p: Point, k: usize| {
        let apex = wv[k];
        let m1 = apex.midpoint(wv[(k + 1) % 3]);
        let m2 = apex.midpoint(wv[(k + 2) % 3]);
        distance_to_segment(p, m1, apex).min(distance_to_segment(p, apex, m2)) <= eps_len
    };
    let one_vertex_per_arc =
        (0..3).all(|k| tv.iter().filter(|&&p| on_arc(p, k)).count() == 1);

    // Input vertex index -> matching witness vertex index.
    let matches: Vec<(usize, usize)> = (0..3)
        .filter_map(|i| {
            (0..3)
                .find(|&j| tv[i].distance(wv[j]) <= eps_len)
                .map(|j| (i, j))
        })
        .collect();
    let shared_vertex = !matches.is_empty();

    let angle_agrees = |i: usize, j: usize| {
        let t_angle = angle_at(tv[i], tv[(i + 1) % 3], tv[(i + 2) % 3]);
        let w_angle = angle_at(wv[j], wv[(j + 1) % 3], wv[(j + 2) % 3]);
        (t_angle - w_angle).abs() <= eps_angle
    };
    let shared_side_and_angle = matches.iter().enumerate().any(|(n, &(i1, j1))| {
        matches[n + 1..]
            .iter()
            .any(|&(i2, j2)| j1 != j2 && (angle_agrees(i1, j1) || angle_agrees(i2, j2)))
    });

    WitnessChecks {
        vertices_on_boundary,
        sides_touch,
        one_vertex_per_arc,
        shared_vertex,
        shared_side_and_angle,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub input: CanonicalTriangle,
    pub closed_form_area: f64,
    pub closed_form_ratio: f64,
    pub oracle_area: f64,
    /// `(oracle − closed form) / closed form`.
    pub relative_gap: f64,
    pub boundary_invariants_ok: bool,
    pub shares_side_and_angle: bool,
    pub checks: WitnessChecks,
    pub oracle: OracleResult,
}

impl VerificationReport {
    pub fn passed(&self, gap_tol: f64) -> bool {
        self.relative_gap.abs() <= gap_tol && self.boundary_invariants_ok && self.shares_side_and_angle
    }
}

/// Compares the closed-form minimum against the brute-force oracle for a
/// scalene triangle.
pub fn verify_triangle(
    ct: &CanonicalTriangle,
    coarse_step: f64,
    refine_iters: u32,
    tol: &Tolerances,
) -> Result<VerificationReport> {
    ct.ensure_scalene()?;
    let closed = minimum_isosceles_container(ct, tol);
    let oracle = brute_force_min_isosceles(&ct.tri, coarse_step, refine_iters)?;
    let checks = check_witness(&ct.tri, &oracle.witness, EPS_GEOM * ct.c, EPS_GEOM);
    Ok(VerificationReport {
        input: *ct,
        closed_form_area: closed.min_area,
        closed_form_ratio: closed.min_ratio,
        oracle_area: oracle.min_area,
        relative_gap: (oracle.min_area - closed.min_area) / closed.min_area,
        boundary_invariants_ok: checks.boundary_ok(),
        shares_side_and_angle: checks.shared_side_and_angle,
        checks,
        oracle,
    })
}
