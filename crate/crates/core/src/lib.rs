//! Minimum-area isosceles containers of planar triangles.
//!
//! The crate builds the nine special isosceles containers of a triangle,
//! picks the minimum-area ones in closed form, and cross-checks the result
//! against a brute-force search over all isosceles shapes. A small CLI
//! (`isokit`) drives the same routines.
//!
//! ```
//! use isokit::geometry::{canonicalize, triangle_from_sides, Tolerances};
//! use isokit::minimum::minimum_isosceles_container;
//!
//! let tol = Tolerances::default();
//! let ct = canonicalize(&triangle_from_sides(3.0, 4.0, 5.0).unwrap(), &tol).unwrap();
//! let min = minimum_isosceles_container(&ct, &tol);
//! assert_eq!(min.minimizers[0].label(), "ABC'");
//! assert!((min.min_ratio - 1.25).abs() < 1e-12);
//! ```

pub mod cli;
pub mod containers;
pub mod error;
pub mod geometry;
pub mod minimum;
pub mod oracle;
pub mod roots;
pub mod sampling;

pub use error::{Error, Result};
