//! Checks that do not rely on the closed form: a brute-force minimum isosceles container
//! search and a rigid-motion covering test.

mod cover;
mod search;
mod verify;

pub use cover::can_cover;
pub use search::{
    brute_force_min_isosceles, min_triangle_for_shape, shape_area, OracleResult, ShapeParams,
    DEFAULT_COARSE_STEP_DEG, DEFAULT_REFINE_ITERS,
};
pub use verify::{check_witness, verify_triangle, VerificationReport, WitnessChecks, EPS_GEOM, GAP_TOLERANCE};
