//! Deterministic SVG rendering of scenes under one or more models.
//!
//! A scene is a list of objects (points, lines, segments, triangles)
//! drawn once per model, one stroke color per squeeze factor, so the
//! same object list rendered under `k = 1` and `k = 2` shows the
//! squeeze correspondence directly: elliptic strokes share their ideal
//! endpoints and differ by vertical scale.
//!
//! Curves are stroked as polylines sampled uniformly in the ruler
//! coordinate `t`, not in `x`. Uniform `t` concentrates samples toward
//! the boundary, where the drawn curvature is highest, and spends few
//! samples on the flat apex region. The output is a plain string with
//! no timestamps or generated ids: equal inputs yield equal bytes.

use crate::geodesic::{line_through, ruler, ruler_inverse};
use crate::model::{Error, HLine, Model, Point, Result};
use std::fmt::Write as _;

/// Ruler span cap for full lines: `|t| <= 20` covers every on-screen
/// pixel at any sane viewport since `y` decays like `e^{-|t|}`.
const T_CAP: f64 = 20.0;

/// How far below its top span a vertical stroke descends, in ruler
/// units; `e^{-45}` of the viewport height is far below one pixel.
const VERTICAL_DROP: f64 = 45.0;

/// Stroke palette, one entry per model index, cycling when a render
/// sweeps more models than the palette holds.
const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

/// Viewport and raster parameters. The viewport is the axis-aligned
/// window `[x_min, x_max] x [0, y_max]`; the boundary line `y = 0`
/// maps to the bottom edge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderSpec {
    x_min: f64,
    x_max: f64,
    y_max: f64,
    width_px: u32,
    height_px: u32,
    stroke_samples: u32,
}

impl RenderSpec {
    pub fn new(
        x_min: f64,
        x_max: f64,
        y_max: f64,
        width_px: u32,
        height_px: u32,
        stroke_samples: u32,
    ) -> Result<RenderSpec> {
        for (name, value) in [("x_min", x_min), ("x_max", x_max), ("y_max", y_max)] {
            if !value.is_finite() {
                return Err(Error::NonFinite { name, value });
            }
        }
        if x_min >= x_max {
            return Err(Error::InvalidInterval { t0: x_min, t1: x_max });
        }
        if y_max <= 0.0 {
            return Err(Error::NonPositiveParameter { name: "y_max", value: y_max });
        }
        if width_px == 0 {
            return Err(Error::NonPositiveParameter { name: "width_px", value: 0.0 });
        }
        if height_px == 0 {
            return Err(Error::NonPositiveParameter { name: "height_px", value: 0.0 });
        }
        if stroke_samples < 2 {
            return Err(Error::NonPositiveParameter {
                name: "stroke_samples",
                value: stroke_samples as f64,
            });
        }
        Ok(RenderSpec { x_min, x_max, y_max, width_px, height_px, stroke_samples })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn y_max(&self) -> f64 {
        self.y_max
    }

    pub fn width_px(&self) -> u32 {
        self.width_px
    }

    pub fn height_px(&self) -> u32 {
        self.height_px
    }

    pub fn stroke_samples(&self) -> u32 {
        self.stroke_samples
    }
}

impl Default for RenderSpec {
    /// A landscape window around the origin: `[-5, 5] x [0, 5]` at
    /// 800 x 480 with 257 samples per stroke (odd, so symmetric spans
    /// sample the apex exactly).
    fn default() -> Self {
        RenderSpec {
            x_min: -5.0,
            x_max: 5.0,
            y_max: 5.0,
            width_px: 800,
            height_px: 480,
            stroke_samples: 257,
        }
    }
}

/// One drawable object. Lines are drawn over their whole visible span;
/// segments and triangles are built from their defining points under
/// each model being rendered.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SceneObject {
    Point(Point),
    Line(HLine),
    Segment { a: Point, b: Point },
    Triangle { a: Point, b: Point, c: Point },
}

struct Mapper {
    x_min: f64,
    x_span: f64,
    y_max: f64,
    w: f64,
    h: f64,
}

impl Mapper {
    fn new(spec: &RenderSpec) -> Mapper {
        Mapper {
            x_min: spec.x_min,
            x_span: spec.x_max - spec.x_min,
            y_max: spec.y_max,
            w: spec.width_px as f64,
            h: spec.height_px as f64,
        }
    }

    fn px(&self, x: f64) -> f64 {
        (x - self.x_min) / self.x_span * self.w
    }

    fn py(&self, y: f64) -> f64 {
        self.h * (1.0 - y / self.y_max)
    }
}

/// Ruler span of the part of `line` visible in the viewport, `None`
/// when the line misses it entirely.
fn visible_span(m: &Model, line: &HLine, spec: &RenderSpec) -> Option<(f64, f64)> {
    match *line {
        HLine::Vertical { p } => {
            if p < spec.x_min || p > spec.x_max {
                return None;
            }
            let t_hi = (m.k() * spec.y_max).ln();
            Some((t_hi - VERTICAL_DROP, t_hi))
        }
        HLine::Elliptic { left, right } => {
            let lo = left.max(spec.x_min);
            let hi = right.min(spec.x_max);
            if lo >= hi {
                return None;
            }
            let (c, a) = (0.5 * left + 0.5 * right, 0.5 * (right - left));
            let t_of = |x: f64| {
                let r = ((x - c) / a).clamp(-(1.0 - 1e-15), 1.0 - 1e-15);
                r.atanh().clamp(-T_CAP, T_CAP)
            };
            Some((t_of(lo), t_of(hi)))
        }
    }
}

fn polyline_points(m: &Model, line: &HLine, t0: f64, t1: f64, n: u32, map: &Mapper) -> String {
    let mut out = String::new();
    for i in 0..n {
        let t = t0 + (t1 - t0) * i as f64 / (n - 1) as f64;
        let p = ruler_inverse(m, line, t).unwrap();
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{:.3},{:.3}", map.px(p.x()), map.py(p.y()));
    }
    out
}

fn push_polyline(svg: &mut String, points: &str, color: &str) {
    let _ = writeln!(
        svg,
        r#"  <polyline fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>"#
    );
}

fn push_line_stroke(
    svg: &mut String,
    m: &Model,
    line: &HLine,
    spec: &RenderSpec,
    map: &Mapper,
    color: &str,
) {
    if let Some((t0, t1)) = visible_span(m, line, spec) {
        let pts = polyline_points(m, line, t0, t1, spec.stroke_samples, map);
        push_polyline(svg, &pts, color);
    }
}

fn push_segment(
    svg: &mut String,
    m: &Model,
    a: Point,
    b: Point,
    spec: &RenderSpec,
    map: &Mapper,
    color: &str,
) -> Result<()> {
    let line = line_through(m, a, b)?;
    let ta = ruler(m, &line, a)?;
    let tb = ruler(m, &line, b)?;
    let pts = polyline_points(m, &line, ta.min(tb), ta.max(tb), spec.stroke_samples, map);
    push_polyline(svg, &pts, color);
    Ok(())
}

/// Renders the scene once per model into a standalone SVG 1.1 string.
///
/// The x-axis is drawn along the bottom edge as the model boundary.
/// Objects outside the viewport are omitted; nothing else is clipped,
/// the viewport does that. Equal inputs produce byte-equal output.
pub fn render_svg(models: &[Model], scene: &[SceneObject], spec: &RenderSpec) -> Result<String> {
    if models.is_empty() {
        return Err(Error::InvalidConfig("render needs at least one model".into()));
    }
    let map = Mapper::new(spec);
    let (w, h) = (spec.width_px, spec.height_px);
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(svg, r##"  <rect width="{w}" height="{h}" fill="#ffffff"/>"##);
    let _ = writeln!(
        svg,
        r##"  <line x1="0" y1="{h}" x2="{w}" y2="{h}" stroke="#333333" stroke-width="2"/>"##
    );
    for (i, m) in models.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let _ = writeln!(svg, r#"  <g data-k="{}">"#, m.k());
        for obj in scene {
            match *obj {
                SceneObject::Point(p) => {
                    let _ = writeln!(
                        svg,
                        r#"    <circle cx="{:.3}" cy="{:.3}" r="4" fill="{color}"/>"#,
                        map.px(p.x()),
                        map.py(p.y()),
                    );
                }
                SceneObject::Line(line) => {
                    push_line_stroke(&mut svg, m, &line, spec, &map, color);
                }
                SceneObject::Segment { a, b } => {
                    push_segment(&mut svg, m, a, b, spec, &map, color)?;
                }
                SceneObject::Triangle { a, b, c } => {
                    push_segment(&mut svg, m, a, b, spec, &map, color)?;
                    push_segment(&mut svg, m, b, c, spec, &map, color)?;
                    push_segment(&mut svg, m, c, a, spec, &map, color)?;
                }
            }
        }
        let _ = writeln!(svg, "  </g>");
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
