//! The nine special isosceles containers of a scalene triangle.
//!
//! Each container keeps two vertices of the canonical triangle `ABC` (and the
//! side between them) and swaps the third for an auxiliary point:
//!
//! | kind   | container | auxiliary point                                        |
//! |--------|-----------|--------------------------------------------------------|
//! | first  | `AB'C`    | `B'` on ray `CB` with `|B'C| = b`                       |
//! | first  | `ABC'`    | `C'` on ray `AC` with `|AC'| = c`                       |
//! | first  | `ABC''`   | `C''` on ray `BC` with `|BC''| = c`                     |
//! | second | `AB₁C`    | `B₁` on ray `AB`, `B₁ ≠ A`, `|B₁C| = b`                 |
//! | second | `ABC₁`    | `C₁` on ray `AC`, `C₁ ≠ A`, `|BC₁| = c`                 |
//! | second | `ABC₂`    | `C₂` on ray `BC`, `C₂ ≠ B`, `|AC₂| = c`                 |
//! | third  | `ĀBC`     | perpendicular bisector of `BC` meets line `AC`          |
//! | third  | `AB̄C`     | perpendicular bisector of `AC` meets line `BC`          |
//! | third  | `ABC̄`     | perpendicular bisector of `AB` meets line `BC`          |
//!
//! All points are built in the frame of the input, so the two kept vertices
//! are bit-identical to the input's.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::geometry::{CanonicalTriangle, Point, Tolerances, Triangle};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ContainerKind {
    First,
    Second,
    Third,
}

/// Which vertex of `ABC` is replaced, and by which auxiliary point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ContainerVariant {
    FirstABprimeC,
    FirstABCprime,
    FirstABCdoubleprime,
    SecondAB1C,
    SecondABC1,
    SecondABC2,
    ThirdAbarBC,
    ThirdABbarC,
    ThirdABCbar,
}

/// Vertex slot of a triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Slot {
    A,
    B,
    C,
}

impl ContainerVariant {
    pub const ALL: [ContainerVariant; 9] = [
        ContainerVariant::FirstABprimeC,
        ContainerVariant::FirstABCprime,
        ContainerVariant::FirstABCdoubleprime,
        ContainerVariant::SecondAB1C,
        ContainerVariant::SecondABC1,
        ContainerVariant::SecondABC2,
        ContainerVariant::ThirdAbarBC,
        ContainerVariant::ThirdABbarC,
        ContainerVariant::ThirdABCbar,
    ];

    pub fn kind(self) -> ContainerKind {
        use ContainerVariant::*;
        match self {
            FirstABprimeC | FirstABCprime | FirstABCdoubleprime => ContainerKind::First,
            SecondAB1C | SecondABC1 | SecondABC2 => ContainerKind::Second,
            ThirdAbarBC | ThirdABbarC | ThirdABCbar => ContainerKind::Third,
        }
    }

    pub fn replaced(self) -> Slot {
        use ContainerVariant::*;
        match self {
            ThirdAbarBC => Slot::A,
            FirstABprimeC | SecondAB1C | ThirdABbarC => Slot::B,
            FirstABCprime | FirstABCdoubleprime | SecondABC1 | SecondABC2 | ThirdABCbar => {
                Slot::C
            }
        }
    }

    /// Name of the auxiliary point, e.g. `B'` or `C₁`.
    pub fn aux_label(self) -> &'static str {
        use ContainerVariant::*;
        match self {
            FirstABprimeC => "B'",
            FirstABCprime => "C'",
            FirstABCdoubleprime => "C''",
            SecondAB1C => "B₁",
            SecondABC1 => "C₁",
            SecondABC2 => "C₂",
            ThirdAbarBC => "Ā",
            ThirdABbarC => "B̄",
            ThirdABCbar => "C̄",
        }
    }

    /// Name of the container, e.g. `AB'C`.
    pub fn label(self) -> &'static str {
        use ContainerVariant::*;
        match self {
            FirstABprimeC => "AB'C",
            FirstABCprime => "ABC'",
            FirstABCdoubleprime => "ABC''",
            SecondAB1C => "AB₁C",
            SecondABC1 => "ABC₁",
            SecondABC2 => "ABC₂",
            ThirdAbarBC => "ĀBC",
            ThirdABbarC => "AB̄C",
            ThirdABCbar => "ABC̄",
        }
    }
}

impl fmt::Display for ContainerVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpecialContainer {
    pub variant: ContainerVariant,
    pub kind: ContainerKind,
    /// Container vertices; the two kept vertices retain their `ABC` slots.
    pub tri: Triangle,
    pub area: f64,
    /// `area / area(ABC)`.
    pub ratio: f64,
}

impl SpecialContainer {
    fn new(ct: &CanonicalTriangle, variant: ContainerVariant, aux: Point) -> Self {
        let mut tri = ct.tri;
        match variant.replaced() {
            Slot::A => tri.a = aux,
            Slot::B => tri.b = aux,
            Slot::C => tri.c = aux,
        }
        let area = tri.area();
        SpecialContainer {
            variant,
            kind: variant.kind(),
            tri,
            area,
            ratio: area / ct.area,
        }
    }

    pub fn aux_point(&self) -> Point {
        match self.variant.replaced() {
            Slot::A => self.tri.a,
            Slot::B => self.tri.b,
            Slot::C => self.tri.c,
        }
    }

    /// True when the apex angle of the container exceeds a right angle.
    pub fn is_obtuse(&self, tol: &Tolerances) -> bool {
        self.tri
            .angles()
            .iter()
            .any(|&g| g > std::f64::consts::FRAC_PI_2 + tol.eps_angle)
    }

    pub fn is_acute(&self, tol: &Tolerances) -> bool {
        self.tri
            .angles()
            .iter()
            .all(|&g| g < std::f64::consts::FRAC_PI_2 - tol.eps_angle)
    }
}

/// Point at distance `len` from `origin` along the ray toward `through`.
fn along_ray(origin: Point, through: Point, len: f64) -> Point {
    let d = through - origin;
    origin + d * (len / d.norm())
}

/// Mirror image of `p` across the foot of the perpendicular from `q` onto
/// the line through `p` and `r`; lies on that line.
fn reflect_through_foot(p: Point, r: Point, q: Point) -> Point {
    let d = r - p;
    let t = (q - p).dot(d) / d.dot(d);
    p + d * (2.0 * t)
}

/// Intersection of the perpendicular bisector of `[u, v]` with the line
/// through `p` and `q`.
fn bisector_meets_line(u: Point, v: Point, p: Point, q: Point) -> Point {
    let m = u.midpoint(v);
    let n = v - u;
    let d = q - p;
    let s = (m - p).dot(n) / d.dot(n);
    p + d * s
}

pub(crate) fn build_first(ct: &CanonicalTriangle) -> [SpecialContainer; 3] {
    let Triangle { a, b, c } = ct.tri;
    [
        SpecialContainer::new(ct, ContainerVariant::FirstABprimeC, along_ray(c, b, ct.b)),
        SpecialContainer::new(ct, ContainerVariant::FirstABCprime, along_ray(a, c, ct.c)),
        SpecialContainer::new(
            ct,
            ContainerVariant::FirstABCdoubleprime,
            along_ray(b, c, ct.c),
        ),
    ]
}

pub(crate) fn build_ab1c(ct: &CanonicalTriangle) -> SpecialContainer {
    let Triangle { a, b, c } = ct.tri;
    SpecialContainer::new(
        ct,
        ContainerVariant::SecondAB1C,
        reflect_through_foot(a, b, c),
    )
}

pub(crate) fn build_second(ct: &CanonicalTriangle) -> [SpecialContainer; 3] {
    let Triangle { a, b, c } = ct.tri;
    [
        build_ab1c(ct),
        SpecialContainer::new(ct, ContainerVariant::SecondABC1, reflect_through_foot(a, c, b)),
        SpecialContainer::new(ct, ContainerVariant::SecondABC2, reflect_through_foot(b, c, a)),
    ]
}

/// Third-kind containers together with a flag raised when `γ` is within
/// `eps_angle` of a right angle, where `Ā` and `B̄` run off to infinity.
#[derive(Debug, Clone, PartialEq)]
pub struct ThirdKind {
    pub containers: Vec<SpecialContainer>,
    pub near_right_angle: bool,
}

pub(crate) fn build_third(ct: &CanonicalTriangle, tol: &Tolerances) -> ThirdKind {
    let Triangle { a, b, c } = ct.tri;
    let half_pi = std::f64::consts::FRAC_PI_2;
    let mut containers = Vec::with_capacity(3);
    if ct.gamma < half_pi - tol.eps_angle {
        containers.push(SpecialContainer::new(
            ct,
            ContainerVariant::ThirdAbarBC,
            bisector_meets_line(b, c, a, c),
        ));
        containers.push(SpecialContainer::new(
            ct,
            ContainerVariant::ThirdABbarC,
            bisector_meets_line(a, c, b, c),
        ));
    }
    containers.push(SpecialContainer::new(
        ct,
        ContainerVariant::ThirdABCbar,
        bisector_meets_line(a, b, b, c),
    ));
    ThirdKind {
        containers,
        near_right_angle: (ct.gamma - half_pi).abs() < tol.eps_angle,
    }
}

/// `AB'C`, `ABC'`, `ABC''`.
pub fn first_kind(ct: &CanonicalTriangle) -> Result<[SpecialContainer; 3]> {
    ct.ensure_scalene()?;
    Ok(build_first(ct))
}

/// `AB₁C`, `ABC₁`, `ABC₂`.
pub fn second_kind(ct: &CanonicalTriangle) -> Result<[SpecialContainer; 3]> {
    ct.ensure_scalene()?;
    Ok(build_second(ct))
}

/// `ABC̄` always; `ĀBC` and `AB̄C` only for acute input.
pub fn third_kind(ct: &CanonicalTriangle, tol: &Tolerances) -> Result<ThirdKind> {
    ct.ensure_scalene()?;
    Ok(build_third(ct, tol))
}

/// All special containers: nine for acute input, seven otherwise.
pub fn all_special_containers(
    ct: &CanonicalTriangle,
    tol: &Tolerances,
) -> Result<Vec<SpecialContainer>> {
    ct.ensure_scalene()?;
    let mut out = Vec::with_capacity(9);
    out.extend(build_first(ct));
    out.extend(build_second(ct));
    out.extend(build_third(ct, tol).containers);
    Ok(out)
}
