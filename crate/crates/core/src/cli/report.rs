//! Machine-readable reports emitted by the CLI. Every report carries
//! `schema_version` and stores angles in radians.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::containers::{all_special_containers, third_kind, SpecialContainer};
use crate::geometry::{canonicalize, triangle_from_sides, CanonicalTriangle, ShapeClass, Tolerances};
use crate::minimum::{
    alpha_star, eq1_residual, first_kind_ratio, minimum_isosceles_container, ratio_curves,
    t_star, MinimizerResult, GOLDEN_RATIO,
};
use crate::oracle::{verify_triangle, WitnessChecks, GAP_TOLERANCE};
use crate::sampling::{random_scalene_batch, AngleMargins};

pub const SCHEMA_VERSION: u32 = 1;
pub const UNITS: &str = "radians";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContainersReport {
    pub schema_version: u32,
    pub units: String,
    pub triangle: CanonicalTriangle,
    /// Isosceles input is its own unique minimum container.
    pub self_container: bool,
    /// `γ` within `eps_angle` of a right angle.
    pub near_right_angle: bool,
    pub containers: Vec<SpecialContainer>,
}

pub fn containers_report(ct: &CanonicalTriangle, tol: &Tolerances) -> ContainersReport {
    let (containers, near_right_angle) = if ct.is_scalene() {
        let near = third_kind(ct, tol).map(|t| t.near_right_angle).unwrap_or(false);
        (all_special_containers(ct, tol).unwrap_or_default(), near)
    } else {
        (Vec::new(), false)
    };
    ContainersReport {
        schema_version: SCHEMA_VERSION,
        units: UNITS.into(),
        triangle: *ct,
        self_container: !ct.is_scalene(),
        near_right_angle,
        containers,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinReport {
    pub schema_version: u32,
    pub units: String,
    pub triangle: CanonicalTriangle,
    pub result: MinimizerResult,
    /// Equal-area residual between `ABC'` and `AB₁C`; absent for isosceles input.
    pub eq1_residual: Option<f64>,
}

pub fn min_report(ct: &CanonicalTriangle, tol: &Tolerances) -> MinReport {
    MinReport {
        schema_version: SCHEMA_VERSION,
        units: UNITS.into(),
        triangle: *ct,
        result: minimum_isosceles_container(ct, tol),
        eq1_residual: ct.is_scalene().then(|| eq1_residual(ct)),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyCase {
    pub index: usize,
    /// `[α, β, γ]`.
    pub angles: [f64; 3],
    pub closed_form_area: f64,
    pub closed_form_ratio: f64,
    pub oracle_area: f64,
    pub relative_gap: f64,
    pub checks: WitnessChecks,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub samples: usize,
    pub step_deg: f64,
    pub refine: u32,
    pub margins: AngleMargins,
    pub tolerances: Tolerances,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub schema_version: u32,
    pub units: String,
    pub config: VerifyConfig,
    pub gap_tolerance: f64,
    pub max_relative_gap: f64,
    pub min_relative_gap: f64,
    pub boundary_pass_rate: f64,
    pub side_angle_pass_rate: f64,
    pub max_min_ratio: f64,
    pub failures: usize,
    pub passed: bool,
    pub cases: Vec<VerifyCase>,
}

/// Runs the oracle comparison on a seeded batch. Samples are processed in
/// parallel and merged in input order.
pub fn verify_summary(config: &VerifyConfig) -> crate::Result<VerifySummary> {
    let tol = config.tolerances;
    let batch = random_scalene_batch(config.seed, config.samples, &config.margins, &tol);
    let step = config.step_deg.to_radians();
    let reports = batch
        .par_iter()
        .map(|ct| verify_triangle(ct, step, config.refine, &tol))
        .collect::<crate::Result<Vec<_>>>()?;

    let cases: Vec<VerifyCase> = reports
        .iter()
        .enumerate()
        .map(|(index, r)| VerifyCase {
            index,
            angles: [r.input.alpha, r.input.beta, r.input.gamma],
            closed_form_area: r.closed_form_area,
            closed_form_ratio: r.closed_form_ratio,
            oracle_area: r.oracle_area,
            relative_gap: r.relative_gap,
            checks: r.checks,
            passed: r.passed(GAP_TOLERANCE),
        })
        .collect();

    let n = cases.len().max(1) as f64;
    let rate = |f: &dyn Fn(&VerifyCase) -> bool| cases.iter().filter(|c| f(c)).count() as f64 / n;
    let max_min_ratio = cases.iter().map(|c| c.closed_form_ratio).fold(0.0, f64::max);
    let failures = cases.iter().filter(|c| !c.passed).count();
    Ok(VerifySummary {
        schema_version: SCHEMA_VERSION,
        units: UNITS.into(),
        config: config.clone(),
        gap_tolerance: GAP_TOLERANCE,
        max_relative_gap: cases.iter().map(|c| c.relative_gap).fold(f64::NEG_INFINITY, f64::max),
        min_relative_gap: cases.iter().map(|c| c.relative_gap).fold(f64::INFINITY, f64::min),
        boundary_pass_rate: rate(&|c| c.checks.boundary_ok()),
        side_angle_pass_rate: rate(&|c| c.checks.shared_side_and_angle),
        max_min_ratio,
        failures,
        passed: failures == 0 && max_min_ratio < std::f64::consts::SQRT_2,
        cases,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaStarReport {
    pub alpha: f64,
    pub alpha_deg: f64,
    pub residual: f64,
    pub bracket_width: f64,
    /// `[α*, 180° − 3α*, 2α*]`.
    pub t_star_angles: [f64; 3],
    /// Sides of `T*` at unit circumdiameter.
    pub t_star_sides: [f64; 3],
    pub t_star_minimizers: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sqrt2Row {
    pub beta: f64,
    /// `α` where the `ABC'` and `AB₁C` ratios cross.
    pub crossing: f64,
    pub crossing_ratio: f64,
    /// Closed-form minimum ratio of the crossing triangle.
    pub min_ratio: f64,
    /// `(c/b)² − 2·cos z`.
    pub cosine_identity_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldenRow {
    pub b: f64,
    /// `c = b²`.
    pub c: f64,
    /// Smallest first-kind ratio.
    pub first_kind_ratio: f64,
    /// Closed-form minimum over all isosceles containers.
    pub min_ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum ExtremalBody {
    AlphaStar(AlphaStarReport),
    Sqrt2 {
        supremum: f64,
        max_observed: f64,
        below_supremum: bool,
        rows: Vec<Sqrt2Row>,
    },
    Golden {
        supremum: f64,
        max_observed: f64,
        below_supremum: bool,
        rows: Vec<GoldenRow>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub schema_version: u32,
    pub units: String,
    #[serde(flatten)]
    pub body: ExtremalBody,
}

impl ExtremalReport {
    pub fn ok(&self) -> bool {
        match &self.body {
            ExtremalBody::AlphaStar(_) => true,
            ExtremalBody::Sqrt2 { below_supremum, .. } | ExtremalBody::Golden { below_supremum, .. } => {
                *below_supremum
            }
        }
    }
}

pub const SQRT2_SWEEP_DEG: [f64; 10] = [40.0, 30.0, 20.0, 10.0, 5.0, 2.0, 1.0, 0.5, 0.25, 0.1];

pub fn alpha_star_report(tol: f64) -> crate::Result<AlphaStarReport> {
    let root = alpha_star(tol)?;
    let a = root.value;
    let ts = t_star();
    Ok(AlphaStarReport {
        alpha: a,
        alpha_deg: a.to_degrees(),
        residual: root.residual,
        bracket_width: root.width,
        t_star_angles: [ts.alpha, ts.beta, ts.gamma],
        t_star_sides: [ts.a, ts.b, ts.c],
        t_star_minimizers: minimum_isosceles_container(&ts, &Tolerances::default()).count,
    })
}

pub fn sqrt2_rows(betas_deg: &[f64], tol: &Tolerances) -> crate::Result<Vec<Sqrt2Row>> {
    betas_deg
        .iter()
        .map(|&deg| {
            let rc = ratio_curves(deg.to_radians(), 16)?;
            let ct = canonicalize(&rc.triangle(), tol)?;
            Ok(Sqrt2Row {
                beta: rc.beta,
                crossing: rc.crossing.value,
                crossing_ratio: rc.at_crossing.ratio_f,
                min_ratio: minimum_isosceles_container(&ct, tol).min_ratio,
                cosine_identity_residual: rc.cosine_identity_residual(),
            })
        })
        .collect()
}

/// `b` values approaching the golden ratio from below.
pub fn golden_sweep_points() -> Vec<f64> {
    let mut bs = vec![1.1, 1.3, 1.5, 1.6, 1.617];
    bs.extend((1..=6).map(|k| GOLDEN_RATIO - 10f64.powi(-k)));
    bs.sort_by(f64::total_cmp);
    bs
}

pub fn golden_rows(bs: &[f64], tol: &Tolerances) -> crate::Result<Vec<GoldenRow>> {
    bs.iter()
        .map(|&b| {
            let c = b * b;
            let ct = canonicalize(&triangle_from_sides(1.0, b, c)?, tol)?;
            Ok(GoldenRow {
                b,
                c,
                first_kind_ratio: first_kind_ratio(b, c)?,
                min_ratio: minimum_isosceles_container(&ct, tol).min_ratio,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremalMode {
    Sqrt2,
    Golden,
    AlphaStar,
}

pub fn extremal_report(mode: ExtremalMode, root_tol: f64, tol: &Tolerances) -> crate::Result<ExtremalReport> {
    let body = match mode {
        ExtremalMode::AlphaStar => ExtremalBody::AlphaStar(alpha_star_report(root_tol)?),
        ExtremalMode::Sqrt2 => {
            let rows = sqrt2_rows(&SQRT2_SWEEP_DEG, tol)?;
            let max_observed = rows.iter().map(|r| r.min_ratio).fold(0.0, f64::max);
            ExtremalBody::Sqrt2 {
                supremum: std::f64::consts::SQRT_2,
                max_observed,
                below_supremum: max_observed < std::f64::consts::SQRT_2,
                rows,
            }
        }
        ExtremalMode::Golden => {
            let rows = golden_rows(&golden_sweep_points(), tol)?;
            let max_observed = rows.iter().map(|r| r.first_kind_ratio).fold(0.0, f64::max);
            ExtremalBody::Golden {
                supremum: GOLDEN_RATIO,
                max_observed,
                below_supremum: max_observed < GOLDEN_RATIO,
                rows,
            }
        }
    };
    Ok(ExtremalReport {
        schema_version: SCHEMA_VERSION,
        units: UNITS.into(),
        body,
    })
}

pub fn shape_label(class: ShapeClass) -> &'static str {
    match class {
        ShapeClass::Scalene => "scalene",
        ShapeClass::Isosceles => "isosceles",
        ShapeClass::Equilateral => "equilateral",
    }
}
