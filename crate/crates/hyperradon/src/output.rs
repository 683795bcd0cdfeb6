//! CSV and SVG serialization of evaluated tables.
//!
//! Every float is rendered through [`fmt_e`] so the byte output of a run
//! is a pure function of the computed values: no locale, no platform
//! formatting differences, no dependence on evaluation order.

use crate::error::Error;
use std::io::Write;
use std::path::Path;

/// Render a float as `d.dddddddddddde[+-]XX` (C `%.12e`): twelve
/// fractional digits and a signed, at least two-digit exponent.
pub fn fmt_e(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    let s = format!("{x:.12e}");
    let (mantissa, exp) = s.split_once('e').expect("exponential format");
    let (sign, digits) = match exp.strip_prefix('-') {
        Some(d) => ('-', d),
        None => ('+', exp),
    };
    format!("{mantissa}e{sign}{digits:0>2}")
}

/// A labelled numeric table ready for serialization.
#[derive(Debug, Clone)]
pub struct Table {
    /// Free-form provenance line (function name and parameters); emitted
    /// as the leading `# ...` comment of the CSV.
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    /// Serialize as CSV: a `# title` comment, the column-name header,
    /// then one row per line with all values in `%.12e` form.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("# ");
        out.push_str(&self.title);
        out.push('\n');
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| fmt_e(v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Serialize columns `xcol` vs `ycol` as a minimal standalone SVG:
    /// two axis lines with range labels and a single polyline.
    pub fn to_svg(&self, xcol: usize, ycol: usize) -> Result<String, Error> {
        if xcol >= self.columns.len() || ycol >= self.columns.len() {
            return Err(Error::InvalidParameter(format!(
                "svg: column index out of range ({} columns)",
                self.columns.len()
            )));
        }
        let pts: Vec<(f64, f64)> = self
            .rows
            .iter()
            .map(|r| (r[xcol], r[ycol]))
            .filter(|(x, y)| x.is_finite() && y.is_finite())
            .collect();
        if pts.len() < 2 {
            return Err(Error::InvalidParameter(
                "svg: need at least two finite points".into(),
            ));
        }
        let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for &(x, y) in &pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        if x1 <= x0 {
            x1 = x0 + 1.0;
        }
        if y1 <= y0 {
            // flat data: pad the range so the polyline sits mid-plot
            y0 -= 1.0;
            y1 += 1.0;
        }
        let (w, h) = (640.0, 480.0);
        let (ml, mr, mt, mb) = (70.0, 20.0, 20.0, 50.0);
        let sx = |x: f64| ml + (x - x0) / (x1 - x0) * (w - ml - mr);
        let sy = |y: f64| h - mb - (y - y0) / (y1 - y0) * (h - mt - mb);
        let mut svg = String::new();
        svg.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" \
             viewBox=\"0 0 {w} {h}\">\n"
        ));
        svg.push_str(&format!(
            "<text x=\"{:.1}\" y=\"14\" font-size=\"12\">{}</text>\n",
            ml,
            xml_escape(&self.title)
        ));
        // axes
        svg.push_str(&format!(
            "<line x1=\"{ml}\" y1=\"{0}\" x2=\"{1}\" y2=\"{0}\" stroke=\"black\"/>\n",
            h - mb,
            w - mr
        ));
        svg.push_str(&format!(
            "<line x1=\"{ml}\" y1=\"{mt}\" x2=\"{ml}\" y2=\"{}\" stroke=\"black\"/>\n",
            h - mb
        ));
        // range labels and axis names
        for (x, y, anchor, text) in [
            (ml, h - mb + 16.0, "middle", fmt_e(x0)),
            (w - mr, h - mb + 16.0, "middle", fmt_e(x1)),
            (ml - 4.0, h - mb, "end", fmt_e(y0)),
            (ml - 4.0, mt + 10.0, "end", fmt_e(y1)),
            (0.5 * (ml + w - mr), h - 8.0, "middle", self.columns[xcol].clone()),
        ] {
            svg.push_str(&format!(
                "<text x=\"{x:.1}\" y=\"{y:.1}\" font-size=\"10\" \
                 text-anchor=\"{anchor}\">{}</text>\n",
                xml_escape(&text)
            ));
        }
        svg.push_str(&format!(
            "<text x=\"14\" y=\"{:.1}\" font-size=\"10\" text-anchor=\"middle\" \
             transform=\"rotate(-90 14 {0:.1})\">{1}</text>\n",
            0.5 * (mt + h - mb),
            xml_escape(&self.columns[ycol])
        ));
        let poly: Vec<String> =
            pts.iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect();
        svg.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" \
             points=\"{}\"/>\n",
            poly.join(" ")
        ));
        svg.push_str("</svg>\n");
        Ok(svg)
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Write `content` to `path`, or to stdout when no path is given.
pub fn write_output(path: Option<&Path>, content: &str) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, content)?,
        None => std::io::stdout().write_all(content.as_bytes())?,
    }
    Ok(())
}
