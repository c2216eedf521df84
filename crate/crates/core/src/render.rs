//! SVG drawings of triangular regions and their lozenge tilings.
//!
//! The big triangle has its top corner at `(d/2, 0)` and its base on
//! `y = d * sqrt(3)/2`, in units of one triangle side. The triangle labeled
//! `x^a y^b z^c` sits in row `a` counted from the bottom, shifted right by
//! `c`. Output is deterministic: elements follow label order and
//! coordinates are printed with three decimals.

use std::fmt::Write as _;

use crate::error::Result;
use crate::monomial::{Monomial, Var};
use crate::region::TriangularRegion;
use crate::tiling::Tiling;

const H: f64 = 0.866_025_403_784_438_6;
const MARGIN: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderOptions {
    /// Pixels per triangle side, positive.
    pub unit: f64,
    pub show_labels: bool,
    pub shade_punctures: bool,
    pub mark_floating: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            unit: 40.0,
            show_labels: false,
            shade_punctures: true,
            mark_floating: true,
        }
    }
}

type Point = (f64, f64);

fn up_triangle(m: Monomial, d: u32) -> [Point; 3] {
    let (a, c, d) = (f64::from(m.x), f64::from(m.z), f64::from(d));
    [
        (a / 2.0 + c, (d - a) * H),
        (a / 2.0 + c + 1.0, (d - a) * H),
        (a / 2.0 + c + 0.5, (d - 1.0 - a) * H),
    ]
}

fn down_triangle(m: Monomial, d: u32) -> [Point; 3] {
    let (a, c, d) = (f64::from(m.x), f64::from(m.z), f64::from(d));
    let left = (a + 1.0) / 2.0 + c;
    [
        (left, (d - 1.0 - a) * H),
        (left + 1.0, (d - 1.0 - a) * H),
        (left + 0.5, (d - a) * H),
    ]
}

fn puncture_triangle(m: Monomial, side: u32, d: u32) -> [Point; 3] {
    let (a, c, s, d) = (
        f64::from(m.x),
        f64::from(m.z),
        f64::from(side),
        f64::from(d),
    );
    [
        (a / 2.0 + c, (d - a) * H),
        (a / 2.0 + c + s, (d - a) * H),
        ((a + s) / 2.0 + c, (d - a - s) * H),
    ]
}

/// Down triangle of `down` plus the vertex of the up triangle `down * v`
/// not on their shared edge.
fn rhombus(down: Monomial, v: Var, d: u32) -> [Point; 4] {
    let [p0, p1, p2] = down_triangle(down, d);
    let (a, c, df) = (f64::from(down.x), f64::from(down.z), f64::from(d));
    match v {
        Var::X => [p0, ((a + 1.0) / 2.0 + c + 0.5, (df - a - 2.0) * H), p1, p2],
        Var::Y => [(a / 2.0 + c, (df - a) * H), p0, p1, p2],
        Var::Z => [p0, p1, (a / 2.0 + c + 2.0, (df - a) * H), p2],
    }
}

struct Canvas {
    out: String,
    unit: f64,
}

impl Canvas {
    fn new(d: u32, opts: &RenderOptions) -> Self {
        let unit = opts.unit;
        let m = MARGIN * unit;
        let w = (f64::from(d) + 2.0 * MARGIN) * unit;
        let h = (f64::from(d) * H + 2.0 * MARGIN) * unit;
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.3}" height="{h:.3}" viewBox="{:.3} {:.3} {w:.3} {h:.3}">"#,
            -m, -m
        );
        out.push_str(
            "<style>.up{fill:#ffffff}.down{fill:#d9d9d9}.outline{fill:none;stroke:#000000}\
             .puncture{fill:#404040}.floating{fill:#a02020}.lozenge{stroke:#000000;stroke-width:1}\
             .lozenge-x{fill:#e8c468}.lozenge-y{fill:#6fa8dc}.lozenge-z{fill:#93c47d}\
             polygon{stroke:#808080;stroke-width:0.5}text{font-family:sans-serif;text-anchor:middle}</style>\n",
        );
        Canvas { out, unit }
    }

    fn map(&self, (x, y): Point) -> Point {
        (x * self.unit, y * self.unit)
    }

    fn polygon(&mut self, class: &str, pts: &[Point], title: Option<&str>) {
        let mut points = String::new();
        for (i, &p) in pts.iter().enumerate() {
            let (x, y) = self.map(p);
            if i > 0 {
                points.push(' ');
            }
            let _ = write!(points, "{x:.3},{y:.3}");
        }
        match title {
            Some(t) => {
                let _ = writeln!(
                    self.out,
                    r#"<polygon class="{class}" points="{points}"><title>{t}</title></polygon>"#
                );
            }
            None => {
                let _ = writeln!(self.out, r#"<polygon class="{class}" points="{points}"/>"#);
            }
        }
    }

    fn label(&mut self, pts: &[Point], text: &str) {
        let n = pts.len() as f64;
        let cx = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let cy = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let (x, y) = self.map((cx, cy));
        let size = self.unit * 0.18;
        let _ = writeln!(
            self.out,
            r#"<text x="{x:.3}" y="{y:.3}" font-size="{size:.3}" dominant-baseline="middle">{text}</text>"#
        );
    }

    fn finish(mut self, d: u32) -> String {
        let d = f64::from(d);
        let outline = [(0.0, d * H), (d, d * H), (d / 2.0, 0.0)];
        self.polygon("outline", &outline, None);
        self.out.push_str("</svg>\n");
        self.out
    }
}

fn punctures(canvas: &mut Canvas, region: &TriangularRegion, opts: &RenderOptions) {
    if !opts.shade_punctures {
        return;
    }
    let d = region.d();
    for p in region.punctures() {
        let class = if opts.mark_floating && p.floating {
            "puncture floating"
        } else {
            "puncture"
        };
        let title = format!("{} (side {})", p.generator, p.side_length);
        let tri = puncture_triangle(p.generator, p.side_length, d);
        canvas.polygon(class, &tri, Some(&title));
    }
}

/// One polygon per unit triangle of `region`, then one per puncture of
/// `J(T)`, then the outline of the big triangle.
pub fn region_svg(region: &TriangularRegion, opts: &RenderOptions) -> String {
    debug_assert!(opts.unit > 0.0);
    let d = region.d();
    let mut canvas = Canvas::new(d, opts);
    for &m in region.up_labels() {
        let tri = up_triangle(m, d);
        canvas.polygon("up", &tri, None);
        if opts.show_labels {
            canvas.label(&tri, &m.to_string());
        }
    }
    for &m in region.down_labels() {
        let tri = down_triangle(m, d);
        canvas.polygon("down", &tri, None);
        if opts.show_labels {
            canvas.label(&tri, &m.to_string());
        }
    }
    punctures(&mut canvas, region, opts);
    canvas.finish(d)
}

/// One rhombus per lozenge, classed by orientation. Fails if `tiling` is
/// not a tiling of `region`.
pub fn tiling_svg(
    region: &TriangularRegion,
    tiling: &Tiling,
    opts: &RenderOptions,
) -> Result<String> {
    tiling.validate(region)?;
    let d = region.d();
    let mut canvas = Canvas::new(d, opts);
    for l in tiling.lozenges() {
        let v = l.orientation();
        let class = format!("lozenge lozenge-{}", v.symbol());
        let title = format!("{} | {}", l.down, l.up);
        let pts = rhombus(l.down, v, d);
        canvas.polygon(&class, &pts, Some(&title));
        if opts.show_labels {
            canvas.label(&pts, &l.down.to_string());
        }
    }
    punctures(&mut canvas, region, opts);
    Ok(canvas.finish(d))
}
