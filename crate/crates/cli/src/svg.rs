//! Static chord diagrams of a portrait and its web.

use std::fmt::Write as _;

use critport_core::{AddressSystem, Angle, MarkedPartition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderSpec {
    /// Disk radius in pixels.
    pub radius: u32,
    pub fatou_color: String,
    pub julia_color: String,
    pub ray_color: String,
    pub special_color: String,
    pub labels: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            radius: 200,
            fatou_color: "#1f77b4".into(),
            julia_color: "#d62728".into(),
            ray_color: "#444444".into(),
            special_color: "#2ca02c".into(),
            labels: true,
        }
    }
}

impl RenderSpec {
    pub fn with_radius(mut self, radius: u32) -> Option<RenderSpec> {
        if radius == 0 {
            return None;
        }
        self.radius = radius;
        Some(self)
    }
}

struct Canvas {
    center: f64,
    radius: f64,
}

impl Canvas {
    fn at(&self, a: Angle, scale: f64) -> (f64, f64) {
        let t = a.to_f64() * std::f64::consts::TAU;
        (
            self.center + self.radius * scale * t.cos(),
            self.center - self.radius * scale * t.sin(),
        )
    }
}

fn points(canvas: &Canvas, angles: &[Angle]) -> String {
    angles
        .iter()
        .map(|a| {
            let (x, y) = canvas.at(*a, 1.0);
            format!("{x:.3},{y:.3}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// The unit circle, one polygon per critical set, one radial mark per J*
/// angle, and a hub joining the angles of every J* class with two or more
/// members.
pub fn render(sys: &AddressSystem, jstar: &MarkedPartition, gamma: &[Angle], spec: &RenderSpec) -> String {
    let r = spec.radius as f64;
    let margin = 60.0;
    let size = 2.0 * (r + margin);
    let canvas = Canvas {
        center: r + margin,
        radius: r,
    };
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size:.0}" height="{size:.0}" viewBox="0 0 {size:.0} {size:.0}">"#
    );
    let _ = writeln!(
        out,
        r##"<circle class="disk" cx="{c:.3}" cy="{c:.3}" r="{r:.3}" fill="none" stroke="#000000" stroke-width="1.5"/>"##,
        c = canvas.center
    );

    for set in sys.portrait().fatou() {
        let _ = writeln!(
            out,
            r#"<polygon class="fatou" points="{}" fill="{c}" fill-opacity="0.25" stroke="{c}" stroke-width="1.5"/>"#,
            points(&canvas, set.angles()),
            c = spec.fatou_color
        );
    }
    for set in sys.portrait().julia() {
        let _ = writeln!(
            out,
            r#"<polygon class="julia" points="{}" fill="none" stroke="{c}" stroke-width="1.5" stroke-dasharray="4 3"/>"#,
            points(&canvas, set.angles()),
            c = spec.julia_color
        );
    }

    for part in jstar.parts().iter().filter(|p| p.len() >= 2) {
        let n = part.len() as f64;
        let (sx, sy) = part
            .angles()
            .iter()
            .map(|a| canvas.at(*a, 0.85))
            .fold((0.0, 0.0), |(x, y), (px, py)| (x + px, y + py));
        let (hx, hy) = (sx / n, sy / n);
        for a in part.angles() {
            let (x, y) = canvas.at(*a, 1.0);
            let _ = writeln!(
                out,
                r#"<line class="hub-edge" x1="{x:.3}" y1="{y:.3}" x2="{hx:.3}" y2="{hy:.3}" stroke="{c}" stroke-width="1"/>"#,
                c = spec.ray_color
            );
        }
        let _ = writeln!(
            out,
            r#"<circle class="hub" cx="{hx:.3}" cy="{hy:.3}" r="3.000" fill="{c}"/>"#,
            c = spec.ray_color
        );
    }

    for a in jstar.ground_set() {
        let (x1, y1) = canvas.at(a, 1.0);
        let (x2, y2) = canvas.at(a, 1.12);
        let (class, color) = if gamma.contains(&a) {
            ("ray special", &spec.special_color)
        } else {
            ("ray", &spec.ray_color)
        };
        let _ = writeln!(
            out,
            r#"<line class="{class}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="{color}" stroke-width="2"/>"#
        );
        if spec.labels {
            let (tx, ty) = canvas.at(a, 1.22);
            let _ = writeln!(
                out,
                r#"<text x="{tx:.3}" y="{ty:.3}" font-family="sans-serif" font-size="12" text-anchor="middle" dominant-baseline="middle">{a}</text>"#
            );
        }
    }
    let _ = writeln!(out, "</svg>");
    out
}
