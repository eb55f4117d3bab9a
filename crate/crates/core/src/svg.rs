//! Hand-written SVG plots: weight densities and ROC curves with their hull.

use std::fmt::Write as _;
use std::path::Path;

use crate::beta_weights::BetaShape;
use crate::error::{Error, Result};
use crate::roc::{ConvexHull, RocCurve};

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 600.0;
pub const MARGIN: f64 = 40.0;
/// Interior sample count for density curves.
pub const DENSITY_SAMPLES: usize = 512;

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

/// Linear map from the unit data box `[0,1] × [0,y_max]` to pixels.
#[derive(Debug, Clone, Copy)]
pub struct Frame {
    pub y_max: f64,
}

impl Frame {
    pub fn x(&self, v: f64) -> f64 {
        MARGIN + v * (WIDTH - 2.0 * MARGIN)
    }

    pub fn y(&self, v: f64) -> f64 {
        HEIGHT - MARGIN - v / self.y_max * (HEIGHT - 2.0 * MARGIN)
    }

    pub fn inv_x(&self, px: f64) -> f64 {
        (px - MARGIN) / (WIDTH - 2.0 * MARGIN)
    }

    pub fn inv_y(&self, py: f64) -> f64 {
        (HEIGHT - MARGIN - py) / (HEIGHT - 2.0 * MARGIN) * self.y_max
    }
}

/// Cost grid `c_i = (i + 1)/(n + 1)`, symmetric about 1/2.
pub fn density_grid() -> Vec<f64> {
    let n = DENSITY_SAMPLES as f64;
    (0..DENSITY_SAMPLES).map(|i| (i as f64 + 1.0) / (n + 1.0)).collect()
}

pub fn density_samples(shape: &BetaShape) -> Vec<(f64, f64)> {
    density_grid().into_iter().map(|c| (c, shape.density(c))).collect()
}

fn header(out: &mut String, title: &str) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<text x="{}" y="24" font-family="sans-serif" font-size="14" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );
}

fn axes(out: &mut String, frame: &Frame, x_label: &str, y_label: &str) {
    let (x0, x1) = (frame.x(0.0), frame.x(1.0));
    let (y0, y1) = (frame.y(0.0), frame.y(frame.y_max));
    let _ = writeln!(
        out,
        r#"<g class="axes" stroke="black" stroke-width="1"><line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/><line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}"/></g>"#
    );
    let _ = writeln!(out, r#"<g class="ticks" font-family="sans-serif" font-size="10">"#);
    for i in 0..=5 {
        let f = i as f64 / 5.0;
        let (tx, ty) = (frame.x(f), frame.y(f * frame.y_max));
        let _ = writeln!(
            out,
            r#"<line x1="{tx}" y1="{y0}" x2="{tx}" y2="{}" stroke="black"/><text x="{tx}" y="{}" text-anchor="middle">{}</text>"#,
            y0 + 4.0,
            y0 + 15.0,
            tick(f)
        );
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{ty}" x2="{x0}" y2="{ty}" stroke="black"/><text x="{}" y="{}" text-anchor="end">{}</text>"#,
            x0 - 4.0,
            x0 - 6.0,
            ty + 3.0,
            tick(f * frame.y_max)
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        HEIGHT - 6.0,
        escape(x_label)
    );
    let _ = writeln!(
        out,
        r#"<text x="12" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle" transform="rotate(-90 12 {})">{}</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0,
        escape(y_label)
    );
}

fn tick(v: f64) -> String {
    let s = format!("{v:.2}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn polyline(out: &mut String, class: &str, color: &str, extra: &str, pts: impl Iterator<Item = (f64, f64)>) {
    let coords: Vec<String> = pts.map(|(x, y)| format!("{x:.10},{y:.10}")).collect();
    let _ = writeln!(
        out,
        r#"<polyline class="{class}" fill="none" stroke="{color}" stroke-width="2"{extra} points="{}"/>"#,
        coords.join(" ")
    );
}

/// SVG text plotting each labeled density on a shared axis.
pub fn weight_density_svg(shapes: &[(String, BetaShape)]) -> Result<String> {
    if shapes.is_empty() {
        return Err(Error::EmptyPlot);
    }
    let samples: Vec<Vec<(f64, f64)>> = shapes.iter().map(|(_, s)| density_samples(s)).collect();
    let peak = samples
        .iter()
        .flatten()
        .map(|&(_, y)| y)
        .filter(|y| y.is_finite())
        .fold(0.0, f64::max);
    let frame = Frame {
        y_max: if peak > 0.0 { peak * 1.05 } else { 1.0 },
    };
    let mut out = String::new();
    header(&mut out, "Cost weight density w(c)");
    axes(&mut out, &frame, "normalized cost c", "density");
    for (i, ((label, shape), pts)) in shapes.iter().zip(&samples).enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let extra = format!(
            r#" data-label="{}" data-alpha="{}" data-beta="{}" data-ymax="{}""#,
            escape(label),
            shape.alpha(),
            shape.beta(),
            frame.y_max
        );
        polyline(
            &mut out,
            "density",
            color,
            &extra,
            pts.iter().map(|&(c, y)| (frame.x(c), frame.y(y.min(frame.y_max)))),
        );
        let ly = MARGIN + 16.0 + 18.0 * i as f64;
        let lx = WIDTH - MARGIN - 230.0;
        let _ = writeln!(
            out,
            r#"<g class="legend"><line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke="{color}" stroke-width="2"/><text x="{}" y="{}" font-family="sans-serif" font-size="11">{} (α={}, β={})</text></g>"#,
            lx + 20.0,
            lx + 26.0,
            ly + 4.0,
            escape(label),
            crate::report::fmt_sig12(shape.alpha()),
            crate::report::fmt_sig12(shape.beta())
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

pub fn render_weight_density_svg(shapes: &[(String, BetaShape)], path: &Path) -> Result<()> {
    write(path, &weight_density_svg(shapes)?)
}

/// SVG text with the ROC polyline, its convex hull and the chance diagonal.
pub fn roc_svg(roc: &RocCurve, hull: &ConvexHull) -> String {
    let frame = Frame { y_max: 1.0 };
    let mut out = String::new();
    header(&mut out, "ROC curve and convex hull");
    axes(&mut out, &frame, "false positive rate", "true positive rate");
    let _ = writeln!(
        out,
        r#"<line class="diagonal" x1="{}" y1="{}" x2="{}" y2="{}" stroke="gray" stroke-dasharray="4 4"/>"#,
        frame.x(0.0),
        frame.y(0.0),
        frame.x(1.0),
        frame.y(1.0)
    );
    polyline(
        &mut out,
        "roc",
        PALETTE[0],
        "",
        roc.points().iter().rev().map(|p| (frame.x(p.fpr), frame.y(p.tpr))),
    );
    polyline(
        &mut out,
        "hull",
        PALETTE[1],
        r#" stroke-dasharray="6 3""#,
        hull.vertices().iter().map(|p| (frame.x(p.fpr), frame.y(p.tpr))),
    );
    out.push_str("</svg>\n");
    out
}

pub fn render_roc_svg(roc: &RocCurve, hull: &ConvexHull, path: &Path) -> Result<()> {
    write(path, &roc_svg(roc, hull))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| Error::Write {
        path: path.to_path_buf(),
        source,
    })
}

/// A proposed-default weight and the legacy `Beta(2, 1/π1)`, each next to
/// the weight obtained after swapping class labels.
pub fn label_swap_panel(pi1: f64) -> Result<Vec<(String, BetaShape)>> {
    let p = crate::score_data::PriorPair::from_pi1(pi1)?;
    let legacy = BetaShape::legacy_asymmetric(&p, 2.0)?;
    let legacy_swapped = BetaShape::legacy_asymmetric(&p.swapped(), 2.0)?;
    let proposed = BetaShape::default_from_priors(&p);
    let proposed_swapped = BetaShape::default_from_priors(&p.swapped());
    Ok(vec![
        ("legacy".into(), legacy),
        ("legacy, labels swapped".into(), legacy_swapped),
        ("default".into(), proposed),
        ("default, labels swapped".into(), proposed_swapped),
    ])
}

/// Mode fixed at `c_tilde` for each concentration in `ks`.
pub fn concentration_panel(c_tilde: f64, ks: &[f64]) -> Result<Vec<(String, BetaShape)>> {
    ks.iter()
        .map(|&k| Ok((format!("k={}", crate::report::fmt_sig12(k)), BetaShape::from_mode(c_tilde, k)?)))
        .collect()
}
