//! SVG heatmap of a coefficient table. Columns are `μ`, rows are `λ`, both
//! in increasing size then decreasing lex order, with a tick at the start
//! of each degree block.

use std::fmt::Write;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::table::CoefficientTable;

const ZERO_COLOR: &str = "#ffffff";
const STOPS: [(u8, u8, u8); 4] = [(0xfe, 0xe3, 0x91), (0xfe, 0x99, 0x29), (0xcc, 0x4c, 0x02), (0x66, 0x25, 0x06)];

const MARGIN_LEFT: usize = 56;
const MARGIN_TOP: usize = 40;
const LEGEND_WIDTH: usize = 110;

fn log_value(c: &BigUint) -> f64 {
    // bit length keeps huge coefficients finite
    let bits = c.bits();
    if bits < 1000 {
        c.to_f64().unwrap_or(f64::MAX).ln()
    } else {
        bits as f64 * std::f64::consts::LN_2
    }
}

/// Fill colour for `c` given the largest coefficient. Zero is white and
/// positive values darken with `log(c) / log(max)`.
pub fn color_for(c: &BigUint, max: &BigUint) -> String {
    if c.is_zero() {
        return ZERO_COLOR.to_string();
    }
    let top = log_value(max);
    let t = if top > 0.0 { (log_value(c) / top).clamp(0.0, 1.0) } else { 0.0 };
    interpolate(t)
}

fn interpolate(t: f64) -> String {
    let segs = (STOPS.len() - 1) as f64;
    let pos = t * segs;
    let i = (pos.floor() as usize).min(STOPS.len() - 2);
    let f = pos - i as f64;
    let (a, b) = (STOPS[i], STOPS[i + 1]);
    let mix = |x: u8, y: u8| (x as f64 + (y as f64 - x as f64) * f).round() as u8;
    format!("#{:02x}{:02x}{:02x}", mix(a.0, b.0), mix(a.1, b.1), mix(a.2, b.2))
}

pub fn render_heatmap(t: &CoefficientTable) -> String {
    let mus = t.mu_axis();
    let lambdas = t.lambda_axis();
    let n = mus.len().max(lambdas.len()).max(1);
    let cell = (720 / n).clamp(1, 24);
    let grid_w = cell * mus.len();
    let grid_h = cell * lambdas.len();
    let width = MARGIN_LEFT + grid_w + 20 + LEGEND_WIDTH;
    let height = MARGIN_TOP + grid_h.max(160) + 40;
    let max = t.nonzero().map(|(_, _, c)| c.clone()).max().unwrap_or_default();

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="10">"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{width}" height="{height}" fill="{ZERO_COLOR}"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="14" text-anchor="middle">|μ|</text><text x="12" y="{}" text-anchor="middle">|λ|</text>"#,
        MARGIN_LEFT + grid_w / 2,
        MARGIN_TOP + grid_h / 2
    );

    let _ = writeln!(s, r#"<g class="cells" shape-rendering="crispEdges">"#);
    for (y, lambda) in lambdas.iter().enumerate() {
        for (x, mu) in mus.iter().enumerate() {
            let c = t.get(mu, lambda);
            let _ = writeln!(
                s,
                r#"<rect class="cell" x="{}" y="{}" width="{cell}" height="{cell}" fill="{}" data-mu="{mu}" data-lambda="{lambda}" data-c="{c}"/>"#,
                MARGIN_LEFT + x * cell,
                MARGIN_TOP + y * cell,
                color_for(&c, &max),
            );
        }
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r##"<g class="ticks" stroke="#444" stroke-width="0.5">"##);
    for (i, p) in mus.iter().enumerate() {
        if i == 0 || mus[i - 1].size() != p.size() {
            let x = MARGIN_LEFT + i * cell;
            let _ = writeln!(
                s,
                r#"<line x1="{x}" y1="{}" x2="{x}" y2="{}"/><text class="tick" x="{x}" y="{}" stroke="none">{}</text>"#,
                MARGIN_TOP - 4,
                MARGIN_TOP + grid_h,
                MARGIN_TOP - 8,
                p.size()
            );
        }
    }
    for (i, p) in lambdas.iter().enumerate() {
        if i == 0 || lambdas[i - 1].size() != p.size() {
            let y = MARGIN_TOP + i * cell;
            let _ = writeln!(
                s,
                r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}"/><text class="tick" x="{}" y="{}" text-anchor="end" stroke="none">{}</text>"#,
                MARGIN_LEFT - 4,
                MARGIN_LEFT + grid_w,
                MARGIN_LEFT - 8,
                y + 8,
                p.size()
            );
        }
    }
    let _ = writeln!(s, "</g>");

    let lx = MARGIN_LEFT + grid_w + 20;
    let _ = writeln!(s, r#"<g class="legend">"#);
    let _ = writeln!(s, r#"<text x="{lx}" y="{}">coefficient</text>"#, MARGIN_TOP - 8);
    let steps = 10;
    for k in 0..=steps {
        let y = MARGIN_TOP + 12 * k;
        let (fill, label) = if k == 0 {
            (ZERO_COLOR.to_string(), "0".to_string())
        } else {
            let f = (k - 1) as f64 / (steps - 1) as f64;
            let v = if max.is_zero() { 0.0 } else { (log_value(&max) * f).exp() };
            (interpolate(f), format!("{}", v.round()))
        };
        let _ = writeln!(
            s,
            r##"<rect class="legend-swatch" x="{lx}" y="{y}" width="16" height="12" fill="{fill}" stroke="#888" stroke-width="0.5"/><text x="{}" y="{}">{label}</text>"##,
            lx + 22,
            y + 10
        );
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::Provenance;

    #[test]
    fn colours_are_monotone() {
        let max = BigUint::from(100u32);
        assert_eq!(color_for(&BigUint::zero(), &max), ZERO_COLOR);
        let lum = |s: &str| {
            let v = u32::from_str_radix(&s[1..], 16).unwrap();
            (v >> 16) + ((v >> 8) & 0xff) + (v & 0xff)
        };
        let mut prev = u32::MAX;
        for c in [1u32, 2, 5, 10, 50, 100] {
            let l = lum(&color_for(&BigUint::from(c), &max));
            assert!(l <= prev);
            prev = l;
        }
    }

    #[test]
    fn one_cell_per_pair() {
        let mut t = CoefficientTable::zeros(3, 1..=3, Provenance::Optimized);
        for d in 1..=3 {
            t.set_identity_block(d);
        }
        let svg = render_heatmap(&t);
        assert_eq!(svg.matches(r#"class="cell""#).count(), 36);
        assert_eq!(svg, render_heatmap(&t));
    }
}
