//! Minimal hand-emitted SVG scatter of d_min against |D|.
//!
//! Data points carry `class="pt <kind>"`: random simplices as filled dots,
//! the isosceles sweep as open circles, the regular sweep as squares. The
//! bounding curves |D| = d_min and |D| = d_min^n are drawn as polylines.

use std::fmt::Write;

use cpsimplex::experiments::{ExperimentRecord, RecordKind};

const SIZE: f64 = 600.0;
const MARGIN: f64 = 60.0;
const CURVE_SAMPLES: usize = 128;

fn px(value: f64) -> f64 {
    MARGIN + value.clamp(0.0, 1.0) * (SIZE - 2.0 * MARGIN)
}

fn py(value: f64) -> f64 {
    SIZE - MARGIN - value.clamp(0.0, 1.0) * (SIZE - 2.0 * MARGIN)
}

pub fn render(records: &[ExperimentRecord], n: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        out,
        r#"<line x1="{0:.2}" y1="{1:.2}" x2="{2:.2}" y2="{1:.2}" stroke="black"/>"#,
        px(0.0),
        py(0.0),
        px(1.0)
    );
    let _ = writeln!(
        out,
        r#"<line x1="{0:.2}" y1="{1:.2}" x2="{0:.2}" y2="{2:.2}" stroke="black"/>"#,
        px(0.0),
        py(0.0),
        py(1.0)
    );
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" font-size="16">d_min</text>"#,
        px(0.5) - 20.0,
        py(0.0) + 40.0
    );
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" font-size="16">|D|</text>"#,
        px(0.0) - 45.0,
        py(0.5)
    );

    // Upper bound |D| = d_min and lower bound |D| = d_min^n.
    let _ = writeln!(
        out,
        r##"<polyline points="{:.2},{:.2} {:.2},{:.2}" fill="none" stroke="#1f77b4"/>"##,
        px(0.0),
        py(0.0),
        px(1.0),
        py(1.0)
    );
    let mut curve = String::new();
    for i in 0..=CURVE_SAMPLES {
        let d = i as f64 / CURVE_SAMPLES as f64;
        let _ = write!(curve, "{:.2},{:.2} ", px(d), py(d.powi(n as i32)));
    }
    let _ = writeln!(
        out,
        r##"<polyline points="{}" fill="none" stroke="#2ca02c"/>"##,
        curve.trim_end()
    );
    let _ = writeln!(
        out,
        r##"<text x="{:.2}" y="{:.2}" font-size="14" fill="#1f77b4">|D| = d_min</text>"##,
        px(0.35),
        py(0.5)
    );
    let _ = writeln!(
        out,
        r##"<text x="{:.2}" y="{:.2}" font-size="14" fill="#2ca02c">|D| = d_min^{n}</text>"##,
        px(0.72),
        py(0.33)
    );

    for r in records {
        let (x, y) = (px(r.d_min), py(r.abs_det));
        match r.kind {
            RecordKind::Random => {
                let _ = writeln!(
                    out,
                    r##"<circle class="pt random" cx="{x:.2}" cy="{y:.2}" r="1.5" fill="#444444"/>"##
                );
            }
            RecordKind::Isosceles => {
                let _ = writeln!(
                    out,
                    r##"<circle class="pt isosceles" cx="{x:.2}" cy="{y:.2}" r="3.5" fill="none" stroke="#d62728"/>"##
                );
            }
            RecordKind::Regular => {
                let _ = writeln!(
                    out,
                    r##"<rect class="pt regular" x="{:.2}" y="{:.2}" width="5" height="5" fill="none" stroke="#9467bd"/>"##,
                    x - 2.5,
                    y - 2.5
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
