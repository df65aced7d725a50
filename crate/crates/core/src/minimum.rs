//! Minimum-area isosceles containers in closed form, the three-way tie
//! triangle `T*`, and the ratio functions whose suprema are `√2` (all
//! containers) and the golden ratio (first-kind containers only).
//!
//! For a scalene triangle only `AB'C`, `ABC'` and `AB₁C` can be optimal, so the
//! minimum is read off those three candidates. Isosceles input is its own
//! unique optimum.

use std::f64::consts::{FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use crate::containers::{build_ab1c, build_first, SpecialContainer};
use crate::error::{Error, Result};
use crate::geometry::{canonicalize, CanonicalTriangle, Point, Tolerances, Triangle};
use crate::roots::{bisect, Root};

/// One minimum-area isosceles container.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", content = "container")]
pub enum Minimizer {
    /// The input is already isosceles.
    Itself,
    Special(SpecialContainer),
}

impl Minimizer {
    pub fn label(&self) -> &'static str {
        match self {
            Minimizer::Itself => "self",
            Minimizer::Special(s) => s.variant.label(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinimizerResult {
    pub min_area: f64,
    pub min_ratio: f64,
    pub minimizers: Vec<Minimizer>,
    pub count: usize,
    /// `AB'C`, `ABC'`, `AB₁C` in that order; empty for isosceles input.
    pub candidates: Vec<SpecialContainer>,
}

/// The three candidates `AB'C`, `ABC'`, `AB₁C` of a scalene triangle.
pub fn candidates(ct: &CanonicalTriangle) -> Result<[SpecialContainer; 3]> {
    ct.ensure_scalene()?;
    let [abpc, abcp, _] = build_first(ct);
    Ok([abpc, abcp, build_ab1c(ct)])
}

pub fn minimum_isosceles_container(ct: &CanonicalTriangle, tol: &Tolerances) -> MinimizerResult {
    if !ct.is_scalene() {
        return MinimizerResult {
            min_area: ct.area,
            min_ratio: 1.0,
            minimizers: vec![Minimizer::Itself],
            count: 1,
            candidates: Vec::new(),
        };
    }
    let cands = candidates(ct).expect("scalene checked above");
    let min_area = cands
        .iter()
        .map(|s| s.area)
        .fold(f64::INFINITY, f64::min);
    let minimizers: Vec<Minimizer> = cands
        .iter()
        .filter(|s| s.area - min_area <= tol.eps_tie * min_area)
        .map(|&s| Minimizer::Special(s))
        .collect();
    MinimizerResult {
        min_area,
        min_ratio: min_area / ct.area,
        count: minimizers.len(),
        minimizers,
        candidates: cands.to_vec(),
    }
}

/// `sin(α)·sin(2α) − sin²(3α)`; its root in `[36°, 45°]` is `α*`.
pub fn tie_equation(alpha: f64) -> f64 {
    alpha.sin() * (2.0 * alpha).sin() - (3.0 * alpha).sin().powi(2)
}

pub const ALPHA_STAR_BRACKET_DEG: (f64, f64) = (36.0, 45.0);

/// Smallest angle of `T*`, by bisection of [`tie_equation`] on `[36°, 45°]`
/// down to a bracket of width `tol` radians.
pub fn alpha_star(tol: f64) -> Result<Root> {
    if !(tol > 0.0 && tol < 1e-3) {
        return Err(Error::InvalidInput(format!(
            "alpha_star tolerance must lie in (0, 1e-3), got {tol}"
        )));
    }
    let (lo, hi) = ALPHA_STAR_BRACKET_DEG;
    bisect(tie_equation, lo.to_radians(), hi.to_radians(), tol)
}

pub const DEFAULT_ROOT_TOL: f64 = 1e-12;

/// `T*` with angles `α*`, `180° − 3α*`, `2α*`, scaled so each side equals
/// the sine of its opposite angle. `AB` lies on the x-axis from the origin.
pub fn t_star() -> CanonicalTriangle {
    let alpha = alpha_star(DEFAULT_ROOT_TOL)
        .expect("tie equation changes sign on its bracket")
        .value;
    let beta = PI - 3.0 * alpha;
    let gamma = 2.0 * alpha;
    let (b, c) = (beta.sin(), gamma.sin());
    let tri = Triangle::new(
        Point::new(0.0, 0.0),
        Point::new(c, 0.0),
        Point::from_angle(alpha) * b,
    );
    canonicalize(&tri, &Tolerances::default()).expect("T* is a proper scalene triangle")
}

/// `(c − b)·sin(α + β) − b·sin(β − α)`; vanishes exactly when `ABC'` and
/// `AB₁C` have equal area.
pub fn eq1_residual(ct: &CanonicalTriangle) -> f64 {
    (ct.c - ct.b) * (ct.alpha + ct.beta).sin() - ct.b * (ct.beta - ct.alpha).sin()
}

/// Area ratios of `ABC'` (`f`) and `AB₁C` (`g`) for the triangle with angles
/// `alpha`, `beta` and `γ = π − α − β`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtremalCurvePoint {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub ratio_f: f64,
    pub ratio_g: f64,
    /// Equal-area residual at unit circumdiameter (sides = sines of angles).
    pub eq1_residual: f64,
}

impl ExtremalCurvePoint {
    pub fn new(alpha: f64, beta: f64) -> Self {
        let gamma = PI - alpha - beta;
        let (b, c) = (beta.sin(), gamma.sin());
        Self {
            alpha,
            beta,
            gamma,
            ratio_f: gamma.sin() / beta.sin(),
            ratio_g: 1.0 / (0.5 + alpha.tan() / (2.0 * beta.tan())),
            eq1_residual: (c - b) * (alpha + beta).sin() - b * (beta - alpha).sin(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioCurves {
    pub beta: f64,
    pub samples: Vec<ExtremalCurvePoint>,
    /// The unique `α` in `(0, β)` where `f = g`.
    pub crossing: Root,
    pub at_crossing: ExtremalCurvePoint,
}

impl RatioCurves {
    /// `(c/b)² − 2·cos z` at the crossing.
    pub fn cosine_identity_residual(&self) -> f64 {
        self.at_crossing.ratio_f.powi(2) - 2.0 * self.crossing.value.cos()
    }

    /// The triangle realising the crossing, with `|AB| = 1`.
    pub fn triangle(&self) -> Triangle {
        crate::geometry::triangle_from_angles(self.crossing.value, self.beta, 1.0)
            .expect("crossing angles form a proper triangle")
    }
}

/// Samples `f` and `g` on `α ∈ (0, β)` and locates their crossing. Valid only
/// for `β < 45°`, where the triangle is obtuse.
pub fn ratio_curves(beta: f64, n_samples: usize) -> Result<RatioCurves> {
    if !(beta > 0.0 && beta < FRAC_PI_4) {
        return Err(Error::InvalidRegime(format!(
            "beta must lie in (0°, 45°), got {}°",
            beta.to_degrees()
        )));
    }
    if n_samples < 3 {
        return Err(Error::InvalidInput(format!(
            "need at least 3 samples, got {n_samples}"
        )));
    }
    let samples = (0..n_samples)
        .map(|i| ExtremalCurvePoint::new(beta * (i as f64 + 0.5) / n_samples as f64, beta))
        .collect();

    let eps = 1e-6 * beta;
    let gap = |alpha: f64| {
        let p = ExtremalCurvePoint::new(alpha, beta);
        p.ratio_f - p.ratio_g
    };
    let crossing = bisect(gap, eps, beta - eps, 0.0)?;
    Ok(RatioCurves {
        beta,
        samples,
        crossing,
        at_crossing: ExtremalCurvePoint::new(crossing.value, beta),
    })
}

/// Smallest first-kind ratio of the triangle with sides `1, b, c`:
/// `b` when `b² ≤ c`, otherwise `c / b`.
pub fn first_kind_ratio(b: f64, c: f64) -> Result<f64> {
    if !(b.is_finite() && c.is_finite()) {
        return Err(Error::NonFinite);
    }
    if !(1.0 < b && b < c && c < b + 1.0) {
        return Err(Error::InvalidSides(format!(
            "need 1 < b < c < b + 1, got b = {b}, c = {c}"
        )));
    }
    Ok(if b * b <= c { b } else { c / b })
}

pub const GOLDEN_RATIO: f64 = 1.618_033_988_749_895;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{triangle_from_sides, ShapeClass};

    #[test]
    fn equilateral_is_its_own_minimum() {
        let tol = Tolerances::default();
        let ct = canonicalize(&triangle_from_sides(1.0, 1.0, 1.0).unwrap(), &tol).unwrap();
        assert_eq!(ct.shape_class, ShapeClass::Equilateral);
        let r = minimum_isosceles_container(&ct, &tol);
        assert_eq!(r.minimizers, vec![Minimizer::Itself]);
        assert_eq!((r.count, r.min_ratio), (1, 1.0));
    }

    #[test]
    fn right_345_picks_abc_prime() {
        let tol = Tolerances::default();
        let ct = canonicalize(&triangle_from_sides(3.0, 4.0, 5.0).unwrap(), &tol).unwrap();
        let r = minimum_isosceles_container(&ct, &tol);
        assert_eq!(r.count, 1);
        assert_eq!(r.minimizers[0].label(), "ABC'");
        assert!((r.min_ratio - 1.25).abs() < 1e-12);
        assert!((r.min_area - 7.5).abs() < 1e-12);
        assert!(eq1_residual(&ct).abs() > 1e-3);
    }

    #[test]
    fn bracket_endpoints_have_opposite_signs() {
        let lo = tie_equation(36f64.to_radians());
        let hi = tie_equation(45f64.to_radians());
        // sin36·sin72 − sin²108 and sin45·sin90 − sin²135, by hand.
        assert!((lo - (-0.345_491_502_812_526_3)).abs() < 1e-12);
        assert!((hi - (0.5f64.sqrt() - 0.5)).abs() < 1e-12);
    }

    #[test]
    fn alpha_star_root() {
        let r = alpha_star(1e-10).unwrap();
        // 40-digit reference root of the tie equation.
        assert!((r.value.to_degrees() - 41.831_618_692_659_863).abs() < 1e-8);
        assert!(alpha_star(0.0).is_err());
        assert!(alpha_star(1e-2).is_err());
    }

    #[test]
    fn t_star_has_three_minimizers() {
        let tol = Tolerances::default();
        let ts = t_star();
        assert!((ts.a - 0.666_944).abs() < 1e-4);
        assert!((ts.b - 0.814_168).abs() < 1e-4);
        assert!((ts.c - 0.993_890).abs() < 1e-4);
        assert!((ts.b * ts.b - ts.a * ts.c).abs() < 1e-9 * ts.b * ts.b);
        assert_eq!(minimum_isosceles_container(&ts, &tol).count, 3);
        assert!(eq1_residual(&ts).abs() < 1e-9);
    }

    #[test]
    fn ratio_curves_regime_and_crossing() {
        assert!(matches!(
            ratio_curves(FRAC_PI_4, 10),
            Err(Error::InvalidRegime(_))
        ));
        let rc = ratio_curves(1f64.to_radians(), 16).unwrap();
        let p = rc.at_crossing;
        assert!((p.ratio_f - p.ratio_g).abs() < 1e-9);
        assert!((p.ratio_f - (2.0 * rc.crossing.value.cos()).sqrt()).abs() < 1e-9 * p.ratio_f);
        assert!((p.ratio_f - 2f64.sqrt()).abs() < 0.01);
        assert_eq!(rc.samples.len(), 16);
    }

    #[test]
    fn first_kind_ratio_pieces() {
        assert_eq!(first_kind_ratio(1.2, 1.44).unwrap(), 1.2);
        assert_eq!(first_kind_ratio(1.5, 2.0).unwrap(), 2.0 / 1.5);
        let near = first_kind_ratio(1.6180, 2.6179).unwrap();
        assert!(near < GOLDEN_RATIO && GOLDEN_RATIO - near < 1e-3);
        assert!(first_kind_ratio(0.9, 1.2).is_err());
        assert!(first_kind_ratio(1.5, 2.6).is_err());
    }
}
