//! SVG rendering of layered drawings. Exact rational coordinates are
//! projected to pixels through an affine fit; the projection is purely
//! cosmetic and nothing here feeds back into verification.

use crate::drawing::LayeredDrawing;
use num_traits::ToPrimitive;

/// 26 distinguishable layer colors; drawings with more layers cycle.
pub const PALETTE: [&str; 26] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45",
    "#fabed4", "#469990", "#dcbeff", "#9a6324", "#fffac8", "#800000", "#aaffc3", "#808000",
    "#ffd8b1", "#000075", "#a9a9a9", "#ffe119", "#46f0f0", "#008080", "#aa6e28", "#fab1ce",
    "#7fbf7f", "#5b5ea6",
];

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    pub width: u32,
    pub height: u32,
    pub vertex_radius: f64,
    pub stroke_width: f64,
    /// Layer colors; indices beyond the end wrap around.
    pub palette: Vec<String>,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            width: 800,
            height: 800,
            vertex_radius: 4.0,
            stroke_width: 1.5,
            palette: PALETTE.iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl RenderStyle {
    pub fn color(&self, layer: usize) -> &str {
        &self.palette[layer % self.palette.len()]
    }
}

/// All layers in one SVG document, one `<g>` group per layer.
pub fn render_svg(drawing: &LayeredDrawing, style: &RenderStyle) -> String {
    let layers: Vec<usize> = (0..drawing.layer_count()).collect();
    render_layers(drawing, style, &layers)
}

/// One SVG document per layer, sharing a single projection so the
/// images overlay exactly.
pub fn render_split_svgs(drawing: &LayeredDrawing, style: &RenderStyle) -> Vec<String> {
    (0..drawing.layer_count())
        .map(|l| render_layers(drawing, style, &[l]))
        .collect()
}

fn render_layers(drawing: &LayeredDrawing, style: &RenderStyle, layers: &[usize]) -> String {
    let px = project(drawing, style);
    let by_layer = drawing.layers();
    let edges = drawing.edges();
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n",
        w = style.width,
        h = style.height
    ));
    out.push_str(&format!(
        "  <rect width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n",
        style.width, style.height
    ));
    for &layer in layers {
        out.push_str(&format!(
            "  <g stroke=\"{}\" stroke-width=\"{}\" fill=\"none\" data-layer=\"{}\">\n",
            style.color(layer),
            fmt3(style.stroke_width),
            layer
        ));
        for &ei in &by_layer[layer] {
            let (u, v, _) = edges[ei];
            let (x1, y1) = px[u];
            let (x2, y2) = px[v];
            out.push_str(&format!(
                "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                fmt3(x1),
                fmt3(y1),
                fmt3(x2),
                fmt3(y2)
            ));
        }
        out.push_str("  </g>\n");
    }
    out.push_str("  <g fill=\"#1a1a1a\" data-role=\"vertices\">\n");
    for &(x, y) in &px {
        out.push_str(&format!(
            "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n",
            fmt3(x),
            fmt3(y),
            fmt3(style.vertex_radius)
        ));
    }
    out.push_str("  </g>\n</svg>\n");
    out
}

/// Fit the drawing's bounding box into the pixel box with a 5% margin
/// on every side, preserving aspect ratio. The y axis flips because
/// SVG grows downward.
fn project(drawing: &LayeredDrawing, style: &RenderStyle) -> Vec<(f64, f64)> {
    let pts: Vec<(f64, f64)> = drawing
        .points()
        .iter()
        .map(|p| (p.x.to_f64().unwrap_or(0.0), p.y.to_f64().unwrap_or(0.0)))
        .collect();
    let (mut x_lo, mut x_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y_lo, mut y_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in &pts {
        x_lo = x_lo.min(x);
        x_hi = x_hi.max(x);
        y_lo = y_lo.min(y);
        y_hi = y_hi.max(y);
    }
    let span_x = (x_hi - x_lo).max(1e-9);
    let span_y = (y_hi - y_lo).max(1e-9);
    let usable_w = style.width as f64 * 0.9;
    let usable_h = style.height as f64 * 0.9;
    let scale = (usable_w / span_x).min(usable_h / span_y);
    let cx = (x_lo + x_hi) / 2.0;
    let cy = (y_lo + y_hi) / 2.0;
    pts.iter()
        .map(|&(x, y)| {
            (
                style.width as f64 / 2.0 + (x - cx) * scale,
                style.height as f64 / 2.0 - (y - cy) * scale,
            )
        })
        .collect()
}

fn fmt3(v: f64) -> String {
    // Normalize negative zero so output is stable.
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.3}")
}
