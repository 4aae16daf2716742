//! Deterministic SVG pictures of small column spaces.
//!
//! 3×3 strongly regular idempotents are drawn in the projective chart
//! `(x_1 − x_3, x_2 − x_3)`; 2×2 idempotents are drawn in the plane as the
//! band between the lines `x_1 − x_2 = const` through the extreme columns.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::polytope::{extremal_columns, polytrope_vertices_2d, require_idempotent, Point2};
use crate::semiring::{Scalar, TropMatrix};

const CANVAS: f64 = 400.0;
const FILL: &str = "#c6dbef";
const STROKE: &str = "#08519c";
const GRID: &str = "#e0e0e0";
const AXIS: &str = "#9e9e9e";

#[derive(Debug, Clone, Copy)]
struct Frame {
    xmin: f64,
    xmax: f64,
    ymin: f64,
    ymax: f64,
    scale: f64,
}

impl Frame {
    /// Bounding box of `points` with 10% padding on each side.
    fn fit(points: &[(f64, f64)]) -> Frame {
        let xs = points.iter().map(|p| p.0);
        let ys = points.iter().map(|p| p.1);
        let (mut xmin, mut xmax) = (
            xs.clone().fold(f64::INFINITY, f64::min),
            xs.fold(f64::NEG_INFINITY, f64::max),
        );
        let (mut ymin, mut ymax) = (
            ys.clone().fold(f64::INFINITY, f64::min),
            ys.fold(f64::NEG_INFINITY, f64::max),
        );
        let span = (xmax - xmin).max(ymax - ymin).max(1.0);
        // give degenerate directions the same extent as the other one
        if xmax - xmin < span {
            let mid = (xmin + xmax) / 2.0;
            xmin = mid - span / 2.0;
            xmax = mid + span / 2.0;
        }
        if ymax - ymin < span {
            let mid = (ymin + ymax) / 2.0;
            ymin = mid - span / 2.0;
            ymax = mid + span / 2.0;
        }
        let pad = 0.1 * span;
        Frame {
            xmin: xmin - pad,
            xmax: xmax + pad,
            ymin: ymin - pad,
            ymax: ymax + pad,
            scale: CANVAS / (span + 2.0 * pad),
        }
    }

    fn width(&self) -> f64 {
        (self.xmax - self.xmin) * self.scale
    }

    fn height(&self) -> f64 {
        (self.ymax - self.ymin) * self.scale
    }

    fn px(&self, x: f64) -> f64 {
        (x - self.xmin) * self.scale
    }

    fn py(&self, y: f64) -> f64 {
        (self.ymax - y) * self.scale
    }
}

fn num(x: f64) -> String {
    format!("{:.2}", x + 0.0)
}

fn coords(p: &Point2) -> (f64, f64) {
    (p.u.to_f64(), p.v.to_f64())
}

/// SVG for a 2×2 idempotent or a 3×3 strongly regular idempotent.
pub fn render_svg(e: &TropMatrix) -> Result<String> {
    let n = e.square_dim()?;
    match n {
        2 => render_band(e),
        3 => render_polytrope(e),
        1 => Err(Error::precondition(
            "render needs a 2x2 or 3x3 matrix, not 1x1",
        )),
        _ => Err(Error::precondition("render supports n ≤ 3")),
    }
}

fn open(out: &mut String, frame: &Frame, title: &str) {
    let (w, h) = (num(frame.width()), num(frame.height()));
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(out, "<title>{title}</title>");
    let _ = writeln!(
        out,
        "<rect x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"white\"/>"
    );
}

fn grid(out: &mut String, frame: &Frame) {
    let _ = writeln!(out, "<g stroke-width=\"1\">");
    let (x0, x1) = (frame.xmin.ceil() as i64, frame.xmax.floor() as i64);
    let (y0, y1) = (frame.ymin.ceil() as i64, frame.ymax.floor() as i64);
    for x in x0..=x1 {
        let colour = if x == 0 { AXIS } else { GRID };
        let px = num(frame.px(x as f64));
        let _ = writeln!(
            out,
            "<line x1=\"{px}\" y1=\"0.00\" x2=\"{px}\" y2=\"{}\" stroke=\"{colour}\"/>",
            num(frame.height())
        );
    }
    for y in y0..=y1 {
        let colour = if y == 0 { AXIS } else { GRID };
        let py = num(frame.py(y as f64));
        let _ = writeln!(
            out,
            "<line x1=\"0.00\" y1=\"{py}\" x2=\"{}\" y2=\"{py}\" stroke=\"{colour}\"/>",
            num(frame.width())
        );
    }
    let _ = writeln!(out, "</g>");
}

fn polygon(out: &mut String, frame: &Frame, pts: &[(f64, f64)]) {
    let list: Vec<String> = pts
        .iter()
        .map(|&(x, y)| format!("{},{}", num(frame.px(x)), num(frame.py(y))))
        .collect();
    let _ = writeln!(
        out,
        "<polygon points=\"{}\" fill=\"{FILL}\" stroke=\"{STROKE}\" stroke-width=\"2\"/>",
        list.join(" ")
    );
}

fn dot(out: &mut String, frame: &Frame, (x, y): (f64, f64), label: &str) {
    let (cx, cy) = (frame.px(x), frame.py(y));
    let _ = writeln!(
        out,
        "<circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"black\"/>",
        num(cx),
        num(cy)
    );
    let _ = writeln!(
        out,
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"14\">{label}</text>",
        num(cx + 7.0),
        num(cy - 7.0)
    );
}

fn origin_marker(out: &mut String, frame: &Frame) {
    let (cx, cy) = (frame.px(0.0), frame.py(0.0));
    let r = 6.0;
    for (dx, dy) in [(r, r), (r, -r)] {
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#cb181d\" stroke-width=\"2\"/>",
            num(cx - dx),
            num(cy - dy),
            num(cx + dx),
            num(cy + dy)
        );
    }
}

fn render_polytrope(e: &TropMatrix) -> Result<String> {
    let vertices = polytrope_vertices_2d(e)?;
    let generators: Vec<(usize, Point2)> = extremal_columns(e)?
        .into_iter()
        .map(|j| Point2::from_vector(&e.col(j)).map(|p| (j, p)))
        .collect::<Result<_>>()?;

    let mut pts: Vec<(f64, f64)> = vertices.iter().map(coords).collect();
    pts.extend(generators.iter().map(|(_, p)| coords(p)));
    pts.push((0.0, 0.0));
    let frame = Frame::fit(&pts);

    let mut out = String::new();
    open(&mut out, &frame, "projectivized column space");
    grid(&mut out, &frame);
    polygon(
        &mut out,
        &frame,
        &vertices.iter().map(coords).collect::<Vec<_>>(),
    );
    for (j, p) in &generators {
        dot(&mut out, &frame, coords(p), &(j + 1).to_string());
    }
    origin_marker(&mut out, &frame);
    out.push_str("</svg>\n");
    Ok(out)
}

/// Clip a convex polygon to the half-plane `x − y ≥ c` (`sign = 1`) or
/// `x − y ≤ c` (`sign = −1`).
fn clip(poly: &[(f64, f64)], c: f64, sign: f64) -> Vec<(f64, f64)> {
    let f = |p: (f64, f64)| sign * (p.0 - p.1 - c);
    let mut out = Vec::new();
    for k in 0..poly.len() {
        let (a, b) = (poly[k], poly[(k + 1) % poly.len()]);
        let (fa, fb) = (f(a), f(b));
        if fa >= 0.0 {
            out.push(a);
        }
        if (fa >= 0.0) != (fb >= 0.0) {
            let t = fa / (fa - fb);
            out.push((a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1)));
        }
    }
    out
}

fn render_band(e: &TropMatrix) -> Result<String> {
    require_idempotent(e)?;
    let cols: Vec<(usize, (Scalar, Scalar))> = extremal_columns(e)?
        .into_iter()
        .map(|j| (j, (e.get(0, j).clone(), e.get(1, j).clone())))
        .collect();
    let offsets: Vec<Scalar> = (0..2).map(|j| e.get(0, j) - e.get(1, j)).collect();
    let lo = offsets.iter().min().expect("two columns").to_f64();
    let hi = offsets.iter().max().expect("two columns").to_f64();

    let mut pts: Vec<(f64, f64)> = cols
        .iter()
        .map(|(_, (x, y))| (x.to_f64(), y.to_f64()))
        .collect();
    pts.push((0.0, 0.0));
    let frame = Frame::fit(&pts);

    let mut out = String::new();
    open(&mut out, &frame, "column space");
    grid(&mut out, &frame);
    if lo < hi {
        let rect = [
            (frame.xmin, frame.ymin),
            (frame.xmax, frame.ymin),
            (frame.xmax, frame.ymax),
            (frame.xmin, frame.ymax),
        ];
        let band = clip(&clip(&rect, lo, 1.0), hi, -1.0);
        polygon(&mut out, &frame, &band);
    } else {
        let x0 = frame.xmin.max(frame.ymin + lo);
        let x1 = frame.xmax.min(frame.ymax + lo);
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{STROKE}\" stroke-width=\"2\"/>",
            num(frame.px(x0)),
            num(frame.py(x0 - lo)),
            num(frame.px(x1)),
            num(frame.py(x1 - lo))
        );
    }
    for (j, (x, y)) in &cols {
        dot(
            &mut out,
            &frame,
            (x.to_f64(), y.to_f64()),
            &(j + 1).to_string(),
        );
    }
    origin_marker(&mut out, &frame);
    out.push_str("</svg>\n");
    Ok(out)
}
