//! Deterministic SVG rendering of a reliability diagram: unit square with
//! diagonal, optional band polygon, calibrated curve, and a marginal
//! histogram strip below. No timestamps, no randomness; coordinates are
//! rounded to two decimals so identical diagrams give identical bytes.

use std::fmt::Write;

use corp::{DiagramMode, ReliabilityDiagram};

const WIDTH: f64 = 600.0;
const PLOT_X0: f64 = 60.0;
const PLOT_X1: f64 = 580.0;
const PLOT_Y0: f64 = 20.0;
const PLOT_Y1: f64 = 540.0;
// 120-pixel histogram strip under the 600x600 canvas
const STRIP_Y0: f64 = 610.0;
const STRIP_Y1: f64 = 710.0;
const HEIGHT: f64 = 720.0;

fn px(x: f64) -> f64 {
    PLOT_X0 + x * (PLOT_X1 - PLOT_X0)
}

fn py(v: f64) -> f64 {
    PLOT_Y1 - v * (PLOT_Y1 - PLOT_Y0)
}

fn fmt3(x: f64) -> String {
    if x.is_infinite() {
        "inf".to_string()
    } else {
        format!("{x:.3}")
    }
}

pub fn render_svg(diagram: &ReliabilityDiagram) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    let _ = writeln!(
        s,
        "<rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"#ffffff\"/>"
    );

    // band polygon first, under everything else
    if let Some(band) = &diagram.band {
        let mut points = String::new();
        for (&x, &u) in band.positions.iter().zip(&band.upper) {
            let _ = write!(points, "{:.2},{:.2} ", px(x), py(u));
        }
        for (&x, &l) in band.positions.iter().zip(&band.lower).rev() {
            let _ = write!(points, "{:.2},{:.2} ", px(x), py(l));
        }
        let _ = writeln!(
            s,
            "<polygon points=\"{}\" fill=\"#9ecae1\" fill-opacity=\"0.6\"/>",
            points.trim_end()
        );
    }

    let _ = writeln!(
        s,
        "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#888888\" \
         stroke-dasharray=\"4 3\"/>",
        px(0.0),
        py(0.0),
        px(1.0),
        py(1.0)
    );

    if diagram.points.len() > 1 {
        let mut points = String::new();
        for p in &diagram.points {
            let _ = write!(points, "{:.2},{:.2} ", px(p.forecast), py(p.calibrated));
        }
        let _ = writeln!(
            s,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>",
            points.trim_end()
        );
    }
    if diagram.mode == DiagramMode::Discrete {
        for p in &diagram.points {
            let _ = writeln!(
                s,
                "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3.5\" fill=\"#d62728\"/>",
                px(p.forecast),
                py(p.calibrated)
            );
        }
    }

    let _ = writeln!(
        s,
        "<rect x=\"{PLOT_X0}\" y=\"{PLOT_Y0}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"none\" \
         stroke=\"#333333\"/>",
        PLOT_X1 - PLOT_X0,
        PLOT_Y1 - PLOT_Y0
    );

    let d = &diagram.annotation;
    for (i, (label, value)) in
        [("MCB", d.mcb), ("DSC", d.dsc), ("UNC", d.unc)].into_iter().enumerate()
    {
        let _ = writeln!(
            s,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"monospace\" font-size=\"14\" \
             fill=\"#333333\">{label} {}</text>",
            PLOT_X0 + 12.0,
            PLOT_Y0 + 22.0 + 18.0 * i as f64,
            fmt3(value)
        );
    }

    // marginal forecast distribution
    let max_count = diagram.histogram.iter().map(|b| b.count).max().unwrap_or(1).max(1);
    for bin in &diagram.histogram {
        if bin.count == 0 {
            continue;
        }
        let h = (STRIP_Y1 - STRIP_Y0) * bin.count as f64 / max_count as f64;
        let (x0, x1) = if bin.lower == bin.upper {
            // discrete bar centered on the value
            (px(bin.lower) - 2.0, px(bin.lower) + 2.0)
        } else {
            (px(bin.lower), px(bin.upper))
        };
        let _ = writeln!(
            s,
            "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"#999999\"/>",
            x0,
            STRIP_Y1 - h,
            x1 - x0,
            h
        );
    }
    let _ = writeln!(
        s,
        "<line x1=\"{PLOT_X0}\" y1=\"{STRIP_Y1}\" x2=\"{PLOT_X1}\" y2=\"{STRIP_Y1}\" \
         stroke=\"#333333\"/>"
    );

    s.push_str("</svg>\n");
    s
}
