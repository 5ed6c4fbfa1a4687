use std::collections::BTreeSet;
use std::fmt::Write;

use super::chain::{Chain1, Chain2};
use super::lattice::{Cell1, Cell2};
use super::plan::{realize2, PlacementPlan, Shape};
use crate::error::Result;

/// Drawing parameters. Colors are any SVG color strings.
#[derive(Clone, Debug, PartialEq)]
pub struct SvgOptions {
    /// Length of a unit lattice edge in pixels.
    pub unit: f64,
    pub margin: f64,
    pub positive: String,
    pub negative: String,
    /// Boundary cells of the support whose multiplicity is zero.
    pub open: String,
    /// Point placements in plan drawings.
    pub point: String,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self {
            unit: 40.0,
            margin: 20.0,
            positive: "#404040".into(),
            negative: "#d62728".into(),
            open: "#2ca02c".into(),
            point: "#e6b800".into(),
        }
    }
}

const HALF_SQRT3: f64 = 0.866_025_403_784_438_6;

fn sign_class(m: i64) -> &'static str {
    if m > 0 {
        "pos"
    } else {
        "neg"
    }
}

struct Canvas {
    body: String,
    points: Vec<(f64, f64)>,
}

impl Canvas {
    fn new() -> Self {
        Self {
            body: String::new(),
            points: Vec::new(),
        }
    }

    fn finish(self, opts: &SvgOptions) -> String {
        let m = opts.margin;
        let (min_x, max_x, min_y, max_y) = if self.points.is_empty() {
            (0.0, 0.0, 0.0, 0.0)
        } else {
            self.points.iter().fold(
                (
                    f64::INFINITY,
                    f64::NEG_INFINITY,
                    f64::INFINITY,
                    f64::NEG_INFINITY,
                ),
                |(a, b, c, d), &(x, y)| (a.min(x), b.max(x), c.min(y), d.max(y)),
            )
        };
        let (w, h) = (max_x - min_x + 2.0 * m, max_y - min_y + 2.0 * m);
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w:.2}\" height=\"{h:.2}\" viewBox=\"{:.2} {:.2} {w:.2} {h:.2}\">\n{}</svg>\n",
            min_x - m,
            min_y - m,
            self.body
        )
    }
}

fn px2((r, c): (i64, i64), unit: f64) -> (f64, f64) {
    (
        (c as f64 + 0.5 * r as f64) * unit,
        -(r as f64) * HALF_SQRT3 * unit,
    )
}

fn label(body: &mut String, (x, y): (f64, f64), m: i64) {
    writeln!(body, "<text class=\"mult\" x=\"{x:.2}\" y=\"{y:.2}\" font-size=\"12\" text-anchor=\"middle\">{m}</text>")
        .unwrap();
}

fn color(m: i64, opts: &SvgOptions) -> &str {
    if m > 0 {
        &opts.positive
    } else {
        &opts.negative
    }
}

/// Segments and points on a horizontal line. Positive cells are drawn in the
/// positive color, negative ones in red; zero points at the ends of supported
/// intervals get hollow green markers.
pub fn svg_chain1(chain: &Chain1, opts: &SvgOptions) -> String {
    let u = opts.unit;
    let mut canvas = Canvas::new();
    let mut ends = BTreeSet::new();
    for (cell, m) in chain.iter() {
        match *cell {
            Cell1::Interval { start } => {
                let (x0, x1) = (start as f64 * u, (start + 1) as f64 * u);
                canvas.points.extend([(x0, 0.0), (x1, 0.0)]);
                writeln!(
                    canvas.body,
                    "<line class=\"interval {}\" x1=\"{x0:.2}\" y1=\"0.00\" x2=\"{x1:.2}\" y2=\"0.00\" stroke=\"{}\" stroke-width=\"4\"/>",
                    sign_class(m),
                    color(m, opts)
                )
                .unwrap();
                if m.abs() != 1 {
                    label(&mut canvas.body, ((x0 + x1) / 2.0, -8.0), m);
                }
                ends.extend([start, start + 1]);
            }
            Cell1::Vertex { .. } => {}
        }
    }
    for (cell, m) in chain.iter() {
        if let Cell1::Vertex { at } = *cell {
            let x = at as f64 * u;
            canvas.points.push((x, 0.0));
            writeln!(
                canvas.body,
                "<circle class=\"vertex {}\" cx=\"{x:.2}\" cy=\"0.00\" r=\"4\" fill=\"{}\"/>",
                sign_class(m),
                color(m, opts)
            )
            .unwrap();
            if m.abs() != 1 {
                label(&mut canvas.body, (x, 16.0), m);
            }
        }
    }
    for at in ends {
        if chain.get(&Cell1::Vertex { at }) == 0 {
            let x = at as f64 * u;
            writeln!(
                canvas.body,
                "<circle class=\"open-end\" cx=\"{x:.2}\" cy=\"0.00\" r=\"4\" fill=\"white\" stroke=\"{}\" stroke-width=\"2\"/>",
                opts.open
            )
            .unwrap();
        }
    }
    canvas.finish(opts)
}

fn draw_chain2(canvas: &mut Canvas, chain: &Chain2, opts: &SvgOptions) {
    let u = opts.unit;
    let has_boundary_cells = chain.iter().any(|(c, _)| c.dimension() < 2);
    let mut zero_cells = BTreeSet::new();
    for (cell, m) in chain.iter().filter(|(c, _)| c.dimension() == 2) {
        let pts: Vec<(f64, f64)> = cell.vertices().into_iter().map(|v| px2(v, u)).collect();
        canvas.points.extend(&pts);
        let coords: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
        let orient = match cell {
            Cell2::Face {
                orientation: super::lattice::Orientation::Up,
                ..
            } => "up",
            _ => "down",
        };
        writeln!(
            canvas.body,
            "<polygon class=\"face {orient} {}\" points=\"{}\" fill=\"{}\" fill-opacity=\"0.6\" stroke=\"white\" stroke-width=\"1\"/>",
            sign_class(m),
            coords.join(" "),
            color(m, opts)
        )
        .unwrap();
        if m.abs() != 1 {
            let cx = pts.iter().map(|p| p.0).sum::<f64>() / 3.0;
            let cy = pts.iter().map(|p| p.1).sum::<f64>() / 3.0;
            label(&mut canvas.body, (cx, cy + 4.0), m);
        }
        if has_boundary_cells {
            for e in cell.face_edges() {
                zero_cells.insert(e);
            }
            for v in cell.vertices() {
                zero_cells.insert(Cell2::Vertex { r: v.0, c: v.1 });
            }
        }
    }
    for (cell, m) in chain.iter().filter(|(c, _)| c.dimension() == 1) {
        let vs = cell.vertices();
        let (a, b) = (px2(vs[0], u), px2(vs[1], u));
        canvas.points.extend([a, b]);
        writeln!(
            canvas.body,
            "<line class=\"edge {}\" x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"{}\" stroke-width=\"3\"/>",
            sign_class(m),
            a.0,
            a.1,
            b.0,
            b.1,
            color(m, opts)
        )
        .unwrap();
        if m.abs() != 1 {
            label(
                &mut canvas.body,
                ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0 - 4.0),
                m,
            );
        }
        for v in vs {
            zero_cells.insert(Cell2::Vertex { r: v.0, c: v.1 });
        }
    }
    for (cell, m) in chain.iter().filter(|(c, _)| c.dimension() == 0) {
        let p = px2(cell.vertices()[0], u);
        canvas.points.push(p);
        writeln!(
            canvas.body,
            "<circle class=\"vertex {}\" cx=\"{:.2}\" cy=\"{:.2}\" r=\"4\" fill=\"{}\"/>",
            sign_class(m),
            p.0,
            p.1,
            color(m, opts)
        )
        .unwrap();
        if m.abs() != 1 {
            label(&mut canvas.body, (p.0 + 10.0, p.1 - 6.0), m);
        }
    }
    for cell in zero_cells.iter().filter(|c| chain.get(c) == 0) {
        let vs = cell.vertices();
        match cell.dimension() {
            1 => {
                let (a, b) = (px2(vs[0], u), px2(vs[1], u));
                writeln!(
                    canvas.body,
                    "<line class=\"open-edge\" x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"{}\" stroke-width=\"2\" stroke-dasharray=\"4 3\"/>",
                    a.0, a.1, b.0, b.1, opts.open
                )
                .unwrap();
            }
            _ => {
                let p = px2(vs[0], u);
                writeln!(
                    canvas.body,
                    "<circle class=\"open-vertex\" cx=\"{:.2}\" cy=\"{:.2}\" r=\"4\" fill=\"white\" stroke=\"{}\" stroke-width=\"2\"/>",
                    p.0, p.1, opts.open
                )
                .unwrap();
            }
        }
    }
}

/// Faces, edges and vertices of a planar chain. When the chain carries
/// boundary cells, zero edges and vertices around its support are outlined
/// in green.
pub fn svg_chain2(chain: &Chain2, opts: &SvgOptions) -> String {
    let mut canvas = Canvas::new();
    draw_chain2(&mut canvas, chain, opts);
    canvas.finish(opts)
}

/// The realized chain of a plan with its point placements marked and
/// labelled by multiplicity.
pub fn svg_plan2(plan: &PlacementPlan, opts: &SvgOptions) -> Result<String> {
    let chain = realize2(plan)?;
    let mut canvas = Canvas::new();
    draw_chain2(&mut canvas, &chain, opts);
    for p in &plan.pieces {
        if let Shape::Point2 { r, c } = p.shape {
            let (x, y) = px2((r, c), opts.unit);
            canvas.points.push((x, y));
            let m = p.signed_multiplicity();
            writeln!(
                canvas.body,
                "<circle class=\"point\" data-mult=\"{m}\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"6\" fill=\"{}\" fill-opacity=\"0.8\"/>",
                opts.point
            )
            .unwrap();
            label(&mut canvas.body, (x + 10.0, y + 14.0), m);
        }
    }
    Ok(canvas.finish(opts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realization::plan::{realize1, segment_literal, standard_plan2};

    #[test]
    fn zero_chain_is_an_empty_canvas() {
        let svg = svg_chain2(&Chain2::new(), &SvgOptions::default());
        assert!(!svg.contains("<polygon"));
        assert!(svg.contains("width=\"40.00\""));
        assert!(!svg_chain1(&Chain1::new(), &SvgOptions::default()).contains("<line"));
    }

    #[test]
    fn negative_open_segment_is_red_with_green_ends() {
        let chain = realize1(&PlacementPlan {
            pieces: vec![segment_literal(-2, 0)],
        })
        .unwrap();
        let svg = svg_chain1(&chain, &SvgOptions::default());
        assert_eq!(svg.matches("class=\"interval neg\"").count(), 2);
        assert_eq!(svg.matches("class=\"open-end\"").count(), 2);
        assert_eq!(svg.matches("class=\"vertex neg\"").count(), 1);
    }

    #[test]
    fn standard_plan_drawing() {
        let plan = standard_plan2(3).unwrap();
        let svg = svg_plan2(&plan, &SvgOptions::default()).unwrap();
        assert_eq!(svg.matches("class=\"face up pos\"").count(), 6);
        assert_eq!(svg.matches("class=\"face down pos\"").count(), 3);
        let marks: i64 = svg
            .match_indices("data-mult=\"")
            .map(|(i, _)| {
                let rest = &svg[i + 11..];
                rest[..rest.find('"').unwrap()].parse::<i64>().unwrap()
            })
            .sum();
        assert_eq!(marks, -8);
        assert_eq!(svg, svg_plan2(&plan, &SvgOptions::default()).unwrap());
        assert!(!svg.contains("open-vertex"));
    }
}
