//! SVG rendering of auxiliary drawings: three concentric circles, coloured
//! edges along their taut routes, and optionally the identification polygon.
//!
//! The picture is presentational. Curves interpolate the taut routes with
//! quadratic segments and are not guaranteed to reproduce every crossing
//! pixel-exactly; counts belong to the crossing engine, and a legend can
//! carry them alongside the picture.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::drawing::{AuxiliaryDrawing, Color};
use crate::engine::{CrossingBreakdown, CrossingType};
use crate::params::{angle_of, Params, VertexClass, VertexId};

/// Appearance and filtering options.
#[derive(Debug, Clone)]
pub struct RenderConfig {
    /// Radii of circles `W > V > U`, in user units.
    pub radius_w: f64,
    pub radius_v: f64,
    pub radius_u: f64,
    pub canvas: f64,
    pub edge_width: f64,
    pub polygon_width: f64,
    /// Restrict to these colours; `None` draws everything.
    pub colors: Option<BTreeSet<Color>>,
    /// Restrict to edges incident with this vertex.
    pub incident_to: Option<VertexId>,
    /// Draw the identification polygon.
    pub polygon: bool,
    /// Engine counts to print as a legend.
    pub legend: Option<CrossingBreakdown>,
}

impl Default for RenderConfig {
    fn default() -> Self {
        RenderConfig {
            radius_w: 300.0,
            radius_v: 200.0,
            radius_u: 100.0,
            canvas: 680.0,
            edge_width: 1.0,
            polygon_width: 4.0,
            colors: None,
            incident_to: None,
            polygon: false,
            legend: None,
        }
    }
}

impl RenderConfig {
    fn keeps(&self, e: &crate::drawing::AuxEdge) -> bool {
        if let Some(colors) = &self.colors {
            if !colors.contains(&e.color) {
                return false;
            }
        }
        if let Some(v) = self.incident_to {
            if !e.endpoints.contains(&v) {
                return false;
            }
        }
        true
    }
}

fn stroke(color: Color) -> &'static str {
    match color {
        Color::Green => "#1a9641",
        Color::Red => "#d7191c",
        Color::Brown => "#8c510a",
        Color::Blue => "#2b83ba",
        Color::Black => "#000000",
    }
}

struct Canvas {
    cx: f64,
    cy: f64,
    turn: f64,
}

impl Canvas {
    /// Angle 0 points down (the lowest point of each circle), increasing
    /// clockwise, matching the integer half-step convention.
    fn point(&self, half_steps: f64, radius: f64) -> (f64, f64) {
        let theta = std::f64::consts::TAU * half_steps / self.turn + std::f64::consts::FRAC_PI_2;
        (self.cx + radius * theta.cos(), self.cy + radius * theta.sin())
    }
}

fn radius_of(class: VertexClass, cfg: &RenderConfig) -> f64 {
    match class {
        VertexClass::W => cfg.radius_w,
        VertexClass::V => cfg.radius_v,
        VertexClass::U => cfg.radius_u,
    }
}

fn fmt2(x: f64) -> String {
    format!("{x:.2}")
}

/// Renders the drawing as a standalone SVG 1.1 document.
pub fn render_auxiliary(aux: &AuxiliaryDrawing, cfg: &RenderConfig) -> String {
    let p = aux.params();
    let canvas = Canvas {
        cx: cfg.canvas / 2.0,
        cy: cfg.canvas / 2.0,
        turn: f64::from(p.turn()),
    };
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        fmt2(cfg.canvas)
    );
    let _ = writeln!(
        svg,
        r#"<rect width="{0}" height="{0}" fill="white"/>"#,
        fmt2(cfg.canvas)
    );

    for r in [cfg.radius_w, cfg.radius_v, cfg.radius_u] {
        let _ = writeln!(
            svg,
            r##"<circle class="guide" cx="{}" cy="{}" r="{}" fill="none" stroke="#cccccc" stroke-width="0.75"/>"##,
            fmt2(canvas.cx),
            fmt2(canvas.cy),
            fmt2(r)
        );
    }

    for edge in aux.edges().iter().filter(|e| cfg.keeps(e)) {
        let _ = writeln!(svg, "{}", edge_element(edge, p, cfg, &canvas));
    }

    if cfg.polygon {
        let _ = writeln!(svg, "{}", polygon_element(p, cfg, &canvas));
    }

    for class in [VertexClass::W, VertexClass::V, VertexClass::U] {
        let r = radius_of(class, cfg);
        for i in 0..p.m() {
            let v = VertexId { class, index: i };
            let (x, y) = canvas.point(f64::from(angle_of(v, p).value()), r);
            let _ = writeln!(
                svg,
                r#"<circle class="vertex" cx="{}" cy="{}" r="3" fill="black"><title>{}</title></circle>"#,
                fmt2(x),
                fmt2(y),
                v
            );
        }
    }

    if let Some(counts) = &cfg.legend {
        let _ = writeln!(svg, "{}", legend_element(counts));
    }
    svg.push_str("</svg>\n");
    svg
}

/// One `<path>` or `<line>` per edge, class-tagged by colour.
fn edge_element(
    edge: &crate::drawing::AuxEdge,
    p: &Params,
    cfg: &RenderConfig,
    canvas: &Canvas,
) -> String {
    let color = stroke(edge.color);
    let width = cfg.edge_width;
    let attr = format!(
        r#"class="edge {}" fill="none" stroke="{color}" stroke-width="{width}""#,
        edge.color.name()
    );
    match edge.color {
        Color::Black => {
            let [a, b] = edge.endpoints;
            let (x1, y1) = canvas.point(f64::from(angle_of(a, p).value()), cfg.radius_u);
            let (x2, y2) = canvas.point(f64::from(angle_of(b, p).value()), cfg.radius_u);
            format!(
                r#"<line {attr} x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                fmt2(x1),
                fmt2(y1),
                fmt2(x2),
                fmt2(y2)
            )
        }
        Color::Red => {
            // shallow arc just inside V along the short route
            let [a, b] = edge.endpoints;
            let a0 = f64::from(angle_of(a, p).value());
            let d = crate::params::signed_offset(a.index, b.index, p.m()) as f64;
            let depth = cfg.radius_v - (cfg.radius_v - cfg.radius_u) * 0.08 * d.abs();
            let mid = a0 + d; // two half-steps per index step, halved at midpoint
            let (x1, y1) = canvas.point(a0, cfg.radius_v);
            let (xc, yc) = canvas.point(mid, depth);
            let (x2, y2) = canvas.point(a0 + 2.0 * d, cfg.radius_v);
            format!(
                r#"<path {attr} d="M {} {} Q {} {} {} {}"/>"#,
                fmt2(x1),
                fmt2(y1),
                fmt2(xc),
                fmt2(yc),
                fmt2(x2),
                fmt2(y2)
            )
        }
        Color::Green | Color::Blue => {
            let (outer_class, inner_class, outer_r, inner_r) = if edge.color == Color::Green {
                (VertexClass::V, VertexClass::U, cfg.radius_v, cfg.radius_u)
            } else {
                (VertexClass::W, VertexClass::V, cfg.radius_w, cfg.radius_v)
            };
            let outer = edge
                .endpoints
                .iter()
                .find(|v| v.class == outer_class)
                .copied()
                .expect("endpoint classes match the colour");
            let inner = edge
                .endpoints
                .iter()
                .find(|v| v.class == inner_class)
                .copied()
                .expect("endpoint classes match the colour");
            let a0 = angle_of(outer, p).lifted() as f64;
            let delta = short_delta(outer, inner, p);
            let (x1, y1) = canvas.point(a0, outer_r);
            let (xc, yc) = canvas.point(a0 + delta / 2.0, (outer_r + inner_r) / 2.0);
            let (x2, y2) = canvas.point(a0 + delta, inner_r);
            format!(
                r#"<path {attr} d="M {} {} Q {} {} {} {}"/>"#,
                fmt2(x1),
                fmt2(y1),
                fmt2(xc),
                fmt2(yc),
                fmt2(x2),
                fmt2(y2)
            )
        }
        Color::Brown => {
            // radial piece W -> gap on V, then taut piece to U
            let w = edge
                .endpoints
                .iter()
                .find(|v| v.class == VertexClass::W)
                .copied()
                .expect("brown edges touch W");
            let u = edge
                .endpoints
                .iter()
                .find(|v| v.class == VertexClass::U)
                .copied()
                .expect("brown edges touch U");
            let gap = angle_of(w, p).lifted() as f64;
            let delta = short_delta(w, u, p);
            let (x1, y1) = canvas.point(gap, cfg.radius_w);
            let (xg, yg) = canvas.point(gap, cfg.radius_v);
            let (xc, yc) = canvas.point(gap + delta / 2.0, (cfg.radius_v + cfg.radius_u) / 2.0);
            let (x2, y2) = canvas.point(gap + delta, cfg.radius_u);
            format!(
                r#"<path {attr} d="M {} {} L {} {} Q {} {} {} {}"/>"#,
                fmt2(x1),
                fmt2(y1),
                fmt2(xg),
                fmt2(yg),
                fmt2(xc),
                fmt2(yc),
                fmt2(x2),
                fmt2(y2)
            )
        }
    }
}

/// Signed half-step displacement of the short route from `from` to `to`.
fn short_delta(from: VertexId, to: VertexId, p: &Params) -> f64 {
    let turn = i64::from(p.turn());
    let a = angle_of(from, p).lifted();
    let b = angle_of(to, p).lifted();
    let half = turn / 2;
    let d = (b - a + half - 1).rem_euclid(turn) - half + 1;
    d as f64
}

fn polygon_element(p: &Params, cfg: &RenderConfig, canvas: &Canvas) -> String {
    let m = p.m();
    let k = p.k();
    let mut points = Vec::with_capacity(2 * m as usize);
    for i in 0..m {
        points.push((VertexId::w(i), cfg.radius_w));
        points.push((VertexId::v((i + 2 * k + 1) % m), cfg.radius_v));
    }
    let coords: Vec<String> = points
        .into_iter()
        .map(|(v, r)| {
            let (x, y) = canvas.point(f64::from(angle_of(v, p).value()), r);
            format!("{},{}", fmt2(x), fmt2(y))
        })
        .collect();
    format!(
        r##"<polygon class="identification" points="{}" fill="none" stroke="#2b83ba" stroke-width="{}" stroke-opacity="0.85"/>"##,
        coords.join(" "),
        cfg.polygon_width
    )
}

fn legend_element(counts: &CrossingBreakdown) -> String {
    let mut rows = String::new();
    let mut y = 16.0;
    for t in CrossingType::ALL {
        let _ = writeln!(
            rows,
            r#"<text class="legend" x="8" y="{}" font-size="11" font-family="monospace">{}: {}</text>"#,
            fmt2(y),
            t.name(),
            counts.count_projective(t)
        );
        y += 13.0;
    }
    let _ = writeln!(
        rows,
        r#"<text class="legend" x="8" y="{}" font-size="11" font-family="monospace">total: {}</text>"#,
        fmt2(y),
        counts.total_projective()
    );
    format!("<g>\n{rows}</g>")
}
