//! Static SVG figures: the input triangle shaded, selected containers
//! outlined, and every named point labeled.

use std::fmt::Write;

use crate::containers::{ContainerKind, Slot, SpecialContainer};
use crate::geometry::{CanonicalTriangle, Point};

const CANVAS: f64 = 640.0;
const MARGIN: f64 = 48.0;
const LABEL_OFFSET: f64 = 14.0;

const STROKES: [&str; 9] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
    "#7f7f7f",
];

struct Frame {
    min: Point,
    scale: f64,
    height: f64,
}

impl Frame {
    fn fit(points: &[Point]) -> Self {
        let (mut lo, mut hi) = (points[0], points[0]);
        for p in points {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        let span = (hi.x - lo.x).max(hi.y - lo.y).max(f64::MIN_POSITIVE);
        let scale = (CANVAS - 2.0 * MARGIN) / span;
        Frame {
            min: lo,
            scale,
            height: (hi.y - lo.y) * scale + 2.0 * MARGIN,
        }
    }

    fn width_for(&self, points: &[Point]) -> f64 {
        let max_x = points.iter().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max);
        (max_x - self.min.x) * self.scale + 2.0 * MARGIN
    }

    /// Figure coordinates with the y-axis pointing up.
    fn map(&self, p: Point) -> Point {
        Point::new(
            MARGIN + (p.x - self.min.x) * self.scale,
            self.height - MARGIN - (p.y - self.min.y) * self.scale,
        )
    }
}

fn points_attr(frame: &Frame, pts: &[Point]) -> String {
    pts.iter()
        .map(|&p| {
            let q = frame.map(p);
            format!("{:.3},{:.3}", q.x, q.y)
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn escape(name: &str) -> String {
    name.replace('\'', "&#39;")
}

/// Auxiliary point label; third-kind points are overlined with a `tspan`.
fn aux_markup(s: &SpecialContainer) -> String {
    if s.kind != ContainerKind::Third {
        return escape(s.variant.aux_label());
    }
    let base = match s.variant.replaced() {
        Slot::A => 'A',
        Slot::B => 'B',
        Slot::C => 'C',
    };
    format!(r#"<tspan text-decoration="overline">{base}</tspan>"#)
}

fn dash_for(kind: ContainerKind) -> &'static str {
    match kind {
        ContainerKind::First => "",
        ContainerKind::Second => r#" stroke-dasharray="8 4""#,
        ContainerKind::Third => r#" stroke-dasharray="2 3""#,
    }
}

/// Renders `ct` and `containers`. Output bytes depend only on the inputs.
pub fn render(ct: &CanonicalTriangle, containers: &[SpecialContainer], title: &str) -> String {
    let mut all: Vec<Point> = ct.tri.vertices().to_vec();
    for s in containers {
        all.extend(s.tri.vertices());
    }
    let frame = Frame::fit(&all);
    let width = frame.width_for(&all);
    let height = frame.height;
    let centroid = {
        let v = ct.tri.vertices();
        Point::new((v[0].x + v[1].x + v[2].x) / 3.0, (v[0].y + v[1].y + v[2].y) / 3.0)
    };

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.3} {height:.3}">"#
    );
    let _ = writeln!(out, "  <title>{title}</title>");
    let _ = writeln!(
        out,
        "  <style>text {{ font-family: serif; font-size: 15px; font-style: italic; }}</style>"
    );
    let _ = writeln!(
        out,
        r##"  <polygon id="input" points="{}" fill="#d9d9d9" stroke="#000000" stroke-width="2"/>"##,
        points_attr(&frame, &ct.tri.vertices())
    );

    let _ = writeln!(out, r#"  <g id="containers" fill="none" stroke-width="1.5">"#);
    for (i, s) in containers.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"    <polygon points="{}" stroke="{}"{}><title>{}</title></polygon>"#,
            points_attr(&frame, &s.tri.vertices()),
            STROKES[i % STROKES.len()],
            dash_for(s.kind),
            escape(s.variant.label()),
        );
    }
    let _ = writeln!(out, "  </g>");

    let mut labels: Vec<(Point, String)> = vec![
        (ct.tri.a, "A".into()),
        (ct.tri.b, "B".into()),
        (ct.tri.c, "C".into()),
    ];
    for s in containers {
        labels.push((s.aux_point(), aux_markup(s)));
    }
    let _ = writeln!(out, r#"  <g id="labels">"#);
    for (p, name) in &labels {
        let q = frame.map(*p);
        let away = *p - centroid;
        let n = away.norm();
        let dir = if n > 0.0 { away * (1.0 / n) } else { Point::new(0.0, 1.0) };
        let _ = writeln!(
            out,
            r##"    <circle cx="{:.3}" cy="{:.3}" r="2.5" fill="#000000"/>"##,
            q.x, q.y
        );
        let _ = writeln!(
            out,
            r#"    <text x="{:.3}" y="{:.3}" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
            q.x + LABEL_OFFSET * dir.x,
            q.y - LABEL_OFFSET * dir.y,
            name
        );
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, "</svg>");
    out
}
