//! SVG drawings of arc sets on a window of the strip.
//!
//! Upper points `l_i` sit at `x = i` on the top line, lower points `r_i` at
//! `x = -i` on the bottom line. Output depends only on the inputs.

use std::fmt::Write;

use crate::arcset::{ArcSet, BoundDirection};
use crate::strip::{Arc, Boundary, MarkedPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    pub window: (i64, i64),
    pub width_px: u32,
    pub height_px: u32,
    pub show_labels: bool,
}

impl RenderSpec {
    pub fn new(lo: i64, hi: i64) -> RenderSpec {
        RenderSpec { window: (lo, hi), width_px: 800, height_px: 300, show_labels: true }
    }
}

struct Layout {
    x0: f64,
    scale: f64,
    top: f64,
    bottom: f64,
}

impl Layout {
    fn new(spec: &RenderSpec) -> Layout {
        let (lo, hi) = spec.window;
        let gmin = lo.min(-hi) as f64;
        let gmax = hi.max(-lo) as f64;
        let margin = 50.0;
        let span = (gmax - gmin).max(1.0);
        Layout {
            x0: margin - gmin * (spec.width_px as f64 - 2.0 * margin) / span,
            scale: (spec.width_px as f64 - 2.0 * margin) / span,
            top: 40.0,
            bottom: spec.height_px as f64 - 40.0,
        }
    }

    fn point(&self, p: MarkedPoint) -> (f64, f64) {
        match p.boundary {
            Boundary::Upper => (self.x0 + self.scale * p.index as f64, self.top),
            Boundary::Lower => (self.x0 - self.scale * p.index as f64, self.bottom),
        }
    }
}

fn path(l: &Layout, arc: &Arc) -> String {
    let (a, b) = arc.endpoints();
    let (x1, y1) = l.point(a);
    let (x2, y2) = l.point(b);
    let height = l.bottom - l.top;
    match arc {
        Arc::Conn(..) => {
            let bend = height * 0.4;
            format!("M {x1:.2} {y1:.2} C {x1:.2} {:.2}, {x2:.2} {:.2}, {x2:.2} {y2:.2}", y1 + bend, y2 - bend)
        }
        _ => {
            // bump depth grows with length but stays inside the half of the strip
            let depth = height * 0.45 * (1.0 - 1.0 / (1.0 + (x2 - x1).abs() / l.scale / 2.0));
            let sign = if a.boundary == Boundary::Upper { 1.0 } else { -1.0 };
            let cy = y1 + sign * depth * 4.0 / 3.0;
            format!("M {x1:.2} {y1:.2} C {x1:.2} {cy:.2}, {x2:.2} {cy:.2}, {x2:.2} {y2:.2}")
        }
    }
}

/// Ellipsis position next to `p`, pushed towards where the escaping arcs go.
fn ellipsis_at(l: &Layout, p: MarkedPoint, dir: BoundDirection) -> (f64, f64) {
    let (x, y) = l.point(p);
    let dx = match dir {
        BoundDirection::UpperRight | BoundDirection::LowerRight => 14.0,
        _ => -14.0,
    };
    let dy = match (p.boundary, dir.target() == p.boundary) {
        (Boundary::Upper, true) => 14.0,
        (Boundary::Upper, false) => 30.0,
        (Boundary::Lower, true) => -8.0,
        (Boundary::Lower, false) => -24.0,
    };
    (x + dx, y + dy)
}

pub fn render_svg(t: &ArcSet, spec: &RenderSpec) -> String {
    let l = Layout::new(spec);
    let (lo, hi) = spec.window;
    let (w, h) = (spec.width_px, spec.height_px);
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    let _ = writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
    for y in [l.top, l.bottom] {
        let _ = writeln!(s, r#"<line class="boundary" x1="10" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="black" stroke-width="1.5"/>"#, w as f64 - 10.0);
    }
    for arc in t.enumerate_window(lo, hi) {
        let _ = writeln!(s, r#"<path class="arc" d="{}" fill="none" stroke="navy" stroke-width="1.5"/>"#, path(&l, &arc));
    }
    let mut escaping = false;
    for i in lo..=hi {
        for p in [MarkedPoint::upper(i), MarkedPoint::lower(i)] {
            let (x, y) = l.point(p);
            let _ = writeln!(s, r#"<circle class="point" cx="{x:.2}" cy="{y:.2}" r="3" fill="black"/>"#);
            if spec.show_labels {
                let (name, ly) = match p.boundary {
                    Boundary::Upper => ("ℓ", y - 10.0),
                    Boundary::Lower => ("r", y + 20.0),
                };
                let _ = writeln!(
                    s,
                    r#"<text class="label" x="{x:.2}" y="{ly:.2}" font-size="12" text-anchor="middle">{name}<tspan font-size="9" dy="3">{i}</tspan></text>"#
                );
            }
            for dir in BoundDirection::ALL {
                if !t.bounded(p, dir) {
                    escaping = true;
                    let (ex, ey) = ellipsis_at(&l, p, dir);
                    let _ = writeln!(s, r#"<text class="ellipsis" x="{ex:.2}" y="{ey:.2}" font-size="14" text-anchor="middle">…</text>"#);
                }
            }
        }
    }
    if !escaping && !t.is_finite() {
        let _ = writeln!(s, r#"<text class="ellipsis" x="{:.2}" y="{:.2}" font-size="14" text-anchor="end">…</text>"#, w as f64 - 12.0, (l.top + l.bottom) / 2.0);
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t1() -> ArcSet {
        ArcSet::from_arcs(&[Arc::Upper(-2, 1), Arc::Conn(-2, 2), Arc::Conn(-2, -2), Arc::Conn(1, 2), Arc::Conn(1, -2), Arc::Lower(-2, 2)])
    }

    #[test]
    fn example_one() {
        let svg = render_svg(&t1(), &RenderSpec::new(-4, 4));
        assert_eq!(svg.matches(r#"class="arc""#).count(), 6);
        assert_eq!(svg.matches(r#"class="label""#).count(), 18);
        assert_eq!(svg.matches("ellipsis").count(), 0);
        assert_eq!(svg, render_svg(&t1(), &RenderSpec::new(-4, 4)));
    }

    #[test]
    fn empty_and_infinite() {
        let svg = render_svg(&ArcSet::empty(), &RenderSpec::new(0, 3));
        assert_eq!(svg.matches(r#"class="arc""#).count(), 0);
        assert_eq!(svg.matches(r#"class="point""#).count(), 8);
        let mut t3 = t1();
        t3.add_zone(crate::strip::Kind::Conn, crate::zone::Zone::new(crate::zone::Bounds { x_min: Some(1), x_max: Some(1), y_max: Some(-5), ..Default::default() }));
        let svg = render_svg(&t3, &RenderSpec::new(-7, 3));
        assert_eq!(svg.matches(r#"class="arc""#).count(), 6 + 3);
        assert!(svg.contains("class=\"ellipsis\""));
    }
}
