use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::lab::{Regressor, SweepResult};

const W: f64 = 640.0;
const H: f64 = 480.0;
const MARGIN: f64 = 60.0;

/// Log-log scatter of the per-`N` worst-case TC with the fitted line.
pub fn render_svg(result: &SweepResult) -> Result<String> {
    let pts: Vec<(f64, f64)> = result
        .worst_case()
        .into_iter()
        .map(|(n, tc)| {
            let x = match result.regressor {
                Regressor::N => (n as f64).ln(),
                Regressor::N2LogN => {
                    let n = n as f64;
                    (n * n * n.ln()).ln()
                }
            };
            (x, (tc as f64).ln())
        })
        .collect();
    if pts.is_empty() {
        return Err(Error::InvalidInput("nothing to plot: the sweep has no usable rows".into()));
    }
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    if x1 - x0 < 1e-9 {
        x0 -= 0.5;
        x1 += 0.5;
    }
    if y1 - y0 < 1e-9 {
        y0 -= 0.5;
        y1 += 0.5;
    }
    let sx = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (W - 2.0 * MARGIN);
    let sy = |y: f64| H - MARGIN - (y - y0) / (y1 - y0) * (H - 2.0 * MARGIN);

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#);
    let _ = writeln!(svg, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<path d="M {m} {t} L {m} {b} L {r} {b}" fill="none" stroke="black"/>"#,
        m = MARGIN,
        t = MARGIN,
        b = H - MARGIN,
        r = W - MARGIN
    );
    let xlabel = match result.regressor {
        Regressor::N => "log N",
        Regressor::N2LogN => "log(N^2 log N)",
    };
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle" font-size="14">{xlabel}</text>"#,
        W / 2.0,
        H - 20.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="20" y="{:.1}" text-anchor="middle" font-size="14" transform="rotate(-90 20 {:.1})">log TC</text>"#,
        H / 2.0,
        H / 2.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="30" text-anchor="middle" font-size="16">{}</text>"#,
        W / 2.0,
        escape(&result.label)
    );
    let line: Vec<String> = pts.iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect();
    let _ = writeln!(svg, r#"<polyline points="{}" fill="none" stroke="steelblue"/>"#, line.join(" "));
    for &(x, y) in &pts {
        let _ = writeln!(svg, r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="steelblue"/>"#, sx(x), sy(y));
    }
    if let Some(f) = result.fit {
        let (ya, yb) = (f.intercept + f.slope * x0, f.intercept + f.slope * x1);
        let _ = writeln!(
            svg,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="firebrick" stroke-dasharray="6 4"/>"#,
            sx(x0),
            sy(ya),
            sx(x1),
            sy(yb)
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}" font-size="12" fill="firebrick">slope {:.3}, R^2 {:.3}</text>"#,
            MARGIN + 10.0,
            MARGIN + 10.0,
            f.slope,
            f.r2
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Agent trajectories from a recorded run. One-dimensional and circle states
/// are drawn as coordinate against round; higher dimensions as paths in the
/// plane of the first two coordinates. Long runs are thinned to at most
/// `MAX_SAMPLES` states per agent.
pub fn render_trajectories(states: &[&[Point<f64>]]) -> Result<String> {
    const MAX_SAMPLES: usize = 1000;
    let first = states.first().ok_or_else(|| Error::InvalidInput("nothing to plot: empty trace".into()))?;
    if first.is_empty() {
        return Err(Error::InvalidInput("nothing to plot: no agents".into()));
    }
    let planar = first[0].dim() >= 2;
    let stride = states.len().div_ceil(MAX_SAMPLES);
    let mut picks: Vec<usize> = (0..states.len()).step_by(stride).collect();
    if picks.last() != Some(&(states.len() - 1)) {
        picks.push(states.len() - 1);
    }
    let coords = |l: usize, i: usize| -> (f64, f64) {
        let p = &states[l][i];
        if planar {
            (p.get(0), p.get(1))
        } else {
            (l as f64, p.get(0))
        }
    };
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for &l in &picks {
        for i in 0..first.len() {
            let (x, y) = coords(l, i);
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
    }
    if x1 - x0 < 1e-9 {
        x0 -= 0.5;
        x1 += 0.5;
    }
    if y1 - y0 < 1e-9 {
        y0 -= 0.5;
        y1 += 0.5;
    }
    let sx = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (W - 2.0 * MARGIN);
    let sy = |y: f64| H - MARGIN - (y - y0) / (y1 - y0) * (H - 2.0 * MARGIN);

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#);
    let _ = writeln!(svg, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let (xl, yl) = if planar { ("x", "y") } else { ("round", "position") };
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle" font-size="14">{xl}</text>"#,
        W / 2.0,
        H - 20.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="20" y="{:.1}" text-anchor="middle" font-size="14" transform="rotate(-90 20 {:.1})">{yl}</text>"#,
        H / 2.0,
        H / 2.0
    );
    for i in 0..first.len() {
        let line: Vec<String> = picks
            .iter()
            .map(|&l| {
                let (x, y) = coords(l, i);
                format!("{:.2},{:.2}", sx(x), sy(y))
            })
            .collect();
        let _ =
            writeln!(svg, r#"<polyline points="{}" fill="none" stroke="steelblue" stroke-width="1"/>"#, line.join(" "));
        let (x, y) = coords(states.len() - 1, i);
        let _ = writeln!(svg, r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="firebrick"/>"#, sx(x), sy(y));
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn emit_plot(result: &SweepResult, path: impl AsRef<Path>) -> Result<()> {
    let svg = render_svg(result)?;
    std::fs::write(path, svg)?;
    Ok(())
}
