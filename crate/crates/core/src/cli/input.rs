//! Triangle input: command-line flags or a JSON document.

use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::geometry::{triangle_from_angles, triangle_from_sides, Point, Triangle};
use crate::minimum::t_star;

use super::CliError;

/// One of three ways to describe a triangle. Angles are radians.
///
/// As JSON this is `{"sides": [a, b, c]}`, `{"vertices": [[x, y], [x, y], [x, y]]}`
/// or `{"angles_and_scale": {"alpha": .., "beta": .., "scale": ..}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangleInputSpec {
    Sides([f64; 3]),
    Vertices([[f64; 2]; 3]),
    AnglesAndScale { alpha: f64, beta: f64, scale: f64 },
}

impl TriangleInputSpec {
    pub fn resolve(&self) -> Result<Triangle, CliError> {
        let tri = match *self {
            TriangleInputSpec::Sides([a, b, c]) => triangle_from_sides(a, b, c)?,
            TriangleInputSpec::Vertices(v) => Triangle::new(
                Point::new(v[0][0], v[0][1]),
                Point::new(v[1][0], v[1][1]),
                Point::new(v[2][0], v[2][1]),
            ),
            TriangleInputSpec::AnglesAndScale { alpha, beta, scale } => {
                triangle_from_angles(alpha, beta, scale)?
            }
        };
        Ok(tri)
    }
}

/// Top-level JSON input document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputDocument {
    pub triangle: TriangleInputSpec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// The triangle with three tied minimum containers.
    TStar,
}

#[derive(Debug, Clone, Default, Args)]
pub struct TriangleArgs {
    /// Side lengths `a,b,c`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub sides: Option<Vec<f64>>,

    /// Vertex coordinates `x1,y1,x2,y2,x3,y3`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub vertices: Option<Vec<f64>>,

    /// Two angles in degrees, `alpha,beta`, at the first two vertices.
    #[arg(long, value_delimiter = ',')]
    pub angles: Option<Vec<f64>>,

    /// Length of the side between the two `--angles` vertices.
    #[arg(long, requires = "angles")]
    pub scale: Option<f64>,

    #[arg(long, value_enum)]
    pub preset: Option<Preset>,

    /// JSON input document with a `triangle` field.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

fn expect_len(name: &str, values: &[f64], n: usize) -> Result<(), CliError> {
    if values.len() == n {
        Ok(())
    } else {
        Err(CliError::Input(format!(
            "--{name} expects {n} comma-separated numbers, got {}",
            values.len()
        )))
    }
}

impl TriangleArgs {
    pub fn spec(&self) -> Result<TriangleInputSpec, CliError> {
        let given = [
            self.sides.is_some(),
            self.vertices.is_some(),
            self.angles.is_some(),
            self.preset.is_some(),
            self.input.is_some(),
        ]
        .iter()
        .filter(|&&g| g)
        .count();
        if given != 1 {
            return Err(CliError::Input(
                "give exactly one of --sides, --vertices, --angles, --preset, --input".into(),
            ));
        }

        if let Some(s) = &self.sides {
            expect_len("sides", s, 3)?;
            return Ok(TriangleInputSpec::Sides([s[0], s[1], s[2]]));
        }
        if let Some(v) = &self.vertices {
            expect_len("vertices", v, 6)?;
            return Ok(TriangleInputSpec::Vertices([[v[0], v[1]], [v[2], v[3]], [v[4], v[5]]]));
        }
        if let Some(a) = &self.angles {
            expect_len("angles", a, 2)?;
            return Ok(TriangleInputSpec::AnglesAndScale {
                alpha: a[0].to_radians(),
                beta: a[1].to_radians(),
                scale: self.scale.unwrap_or(1.0),
            });
        }
        if let Some(Preset::TStar) = self.preset {
            let ts = t_star();
            let v = ts.tri.vertices().map(|p| [p.x, p.y]);
            return Ok(TriangleInputSpec::Vertices(v));
        }
        let path = self.input.as_ref().expect("one source is present");
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
        let doc: InputDocument = serde_json::from_str(&text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        Ok(doc.triangle)
    }

    pub fn triangle(&self) -> Result<Triangle, CliError> {
        self.spec()?.resolve()
    }
}
