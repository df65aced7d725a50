//! Seeded random triangles for batch verification.

use std::f64::consts::PI;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::geometry::{canonicalize, triangle_from_angles, CanonicalTriangle, Point, Tolerances};
use crate::minimum::alpha_star;

/// Rejection margins for angle-simplex sampling, in degrees.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngleMargins {
    pub min_angle_deg: f64,
    pub scalene_margin_deg: f64,
}

impl Default for AngleMargins {
    fn default() -> Self {
        Self {
            min_angle_deg: 5.0,
            scalene_margin_deg: 1.0,
        }
    }
}

impl AngleMargins {
    /// Rejects margins that leave no room on the simplex, which would make
    /// rejection sampling loop forever.
    pub fn validate(&self) -> crate::Result<()> {
        let (m, g) = (self.min_angle_deg, self.scalene_margin_deg);
        if !(m.is_finite() && g.is_finite() && m >= 0.0 && g >= 0.0) {
            return Err(crate::Error::InvalidInput(format!(
                "angle margins must be finite and non-negative, got {m}° and {g}°"
            )));
        }
        // Tightest feasible angles are m, m + g, m + 2g.
        if 3.0 * (m + g) >= 179.0 {
            return Err(crate::Error::InvalidInput(format!(
                "angle margins {m}° and {g}° leave too little of the simplex to sample"
            )));
        }
        Ok(())
    }

    fn accepts(&self, angles: [f64; 3]) -> bool {
        let min = self.min_angle_deg.to_radians();
        let gap = self.scalene_margin_deg.to_radians();
        angles.iter().all(|&a| a >= min)
            && (angles[0] - angles[1]).abs() >= gap
            && (angles[1] - angles[2]).abs() >= gap
            && (angles[0] - angles[2]).abs() >= gap
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Places the triangle with angles `alpha` (at `A`) and `beta` (at `B`) at a
/// random position, orientation and scale.
fn place<R: Rng>(rng: &mut R, alpha: f64, beta: f64, tol: &Tolerances) -> CanonicalTriangle {
    let scale = rng.gen_range(0.5..2.0);
    let theta = rng.gen_range(0.0..2.0 * PI);
    let shift = Point::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
    let tri = triangle_from_angles(alpha, beta, scale)
        .expect("sampled angles are valid")
        .map(|p| p.rotate(theta) + shift);
    canonicalize(&tri, tol).expect("sampled triangle is non-degenerate")
}

/// One triangle with angles uniform on the simplex, subject to `margins`.
pub fn random_scalene<R: Rng>(rng: &mut R, margins: &AngleMargins, tol: &Tolerances) -> CanonicalTriangle {
    loop {
        let (mut u, mut v) = (rng.gen::<f64>(), rng.gen::<f64>());
        if u > v {
            std::mem::swap(&mut u, &mut v);
        }
        let angles = [PI * u, PI * (v - u), PI * (1.0 - v)];
        if margins.accepts(angles) {
            let ct = place(rng, angles[0], angles[1], tol);
            if ct.is_scalene() {
                return ct;
            }
        }
    }
}

pub fn random_scalene_batch(seed: u64, count: usize, margins: &AngleMargins, tol: &Tolerances) -> Vec<CanonicalTriangle> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| random_scalene(&mut rng, margins, tol))
        .collect()
}

/// Acute triangles with `α* < α < 45°` and `2α < γ < 90°`.
pub fn random_obtuse_minimizer_family<R: Rng>(rng: &mut R, tol: &Tolerances) -> CanonicalTriangle {
    let alpha_star = alpha_star(1e-12).expect("bracketed").value;
    let quarter = PI / 4.0;
    let half = PI / 2.0;
    loop {
        let alpha = rng.gen_range(alpha_star..quarter);
        let gamma = rng.gen_range(2.0 * alpha..half);
        let beta = PI - alpha - gamma;
        // Keep clear of the open boundaries.
        if alpha - alpha_star < 1e-6 || half - gamma < 1e-6 || gamma - 2.0 * alpha < 1e-6 {
            continue;
        }
        let ct = place(rng, alpha, beta, tol);
        if ct.is_scalene() {
            return ct;
        }
    }
}
