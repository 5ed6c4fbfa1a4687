use serde::{Deserialize, Serialize};

use super::chain::{Chain1, Chain2};
use super::lattice::{Cell1, Cell2, Fill, Orientation, Triangle};
use crate::error::{Error, Result};
use crate::ring::Sign;

/// The figure a placement puts down.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Shape {
    /// The segment `[start, start+len]` on the line.
    Segment {
        start: i64,
        len: i64,
        fill: Fill,
    },
    /// A single lattice point on the line.
    Point1 {
        at: i64,
    },
    Triangle {
        triangle: Triangle,
        fill: Fill,
    },
    /// A single vertex of the triangular lattice.
    Point2 {
        r: i64,
        c: i64,
    },
}

impl Shape {
    pub fn dimension(&self) -> usize {
        match self {
            Shape::Segment { .. } | Shape::Point1 { .. } => 1,
            Shape::Triangle { .. } | Shape::Point2 { .. } => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Placement {
    pub shape: Shape,
    pub sign: Sign,
    pub multiplicity: u32,
}

impl Placement {
    pub fn new(shape: Shape, sign: Sign, multiplicity: u32) -> Self {
        Self {
            shape,
            sign,
            multiplicity,
        }
    }

    pub fn plus(shape: Shape) -> Self {
        Self::new(shape, Sign::Plus, 1)
    }

    pub fn minus(shape: Shape) -> Self {
        Self::new(shape, Sign::Minus, 1)
    }

    pub fn signed_multiplicity(&self) -> i64 {
        self.sign.as_i64() * i64::from(self.multiplicity)
    }
}

/// A list of signed placements; its realization is the sum of their chains.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlacementPlan {
    pub pieces: Vec<Placement>,
}

impl PlacementPlan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, p: Placement) -> &mut Self {
        self.pieces.push(p);
        self
    }

    /// Placements of triangles with the given orientation and fill, and of
    /// points, summed with multiplicity and sign.
    pub fn counts(&self) -> PlanCounts {
        let mut out = PlanCounts::default();
        for p in &self.pieces {
            let m = p.signed_multiplicity();
            match p.shape {
                Shape::Triangle { triangle, .. } => match triangle.orientation {
                    Orientation::Up => out.up += m,
                    Orientation::Down => out.down += m,
                },
                Shape::Point1 { .. } | Shape::Point2 { .. } => out.points += m,
                Shape::Segment { .. } => out.segments += m,
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PlanCounts {
    pub up: i64,
    pub down: i64,
    pub segments: i64,
    pub points: i64,
}

fn shape_chain1(shape: &Shape) -> Result<Chain1> {
    match *shape {
        Shape::Point1 { at } => Ok(Chain1::from_cells([Cell1::Vertex { at }], 1)),
        Shape::Segment { start, len, fill } => {
            let min_len = if fill == Fill::Closed { 0 } else { 1 };
            if len < min_len {
                return Err(Error::Argument(format!(
                    "segment of length {len} with {fill:?} fill"
                )));
            }
            let mut out = Chain1::new();
            for i in 0..len {
                out.add_cell(Cell1::Interval { start: start + i }, 1);
            }
            let vertices = match fill {
                Fill::Closed => Some(0..=len),
                Fill::Open => Some(1..=len - 1),
                Fill::Faces => None,
            };
            for i in vertices.into_iter().flatten() {
                out.add_cell(Cell1::Vertex { at: start + i }, 1);
            }
            Ok(out)
        }
        _ => Err(Error::Argument(
            "a 2-D piece cannot be placed on the line".into(),
        )),
    }
}

fn shape_chain2(shape: &Shape) -> Result<Chain2> {
    match *shape {
        Shape::Point2 { r, c } => Ok(Chain2::from_cells([Cell2::Vertex { r, c }], 1)),
        Shape::Triangle { triangle, fill } => {
            let min_side = if fill == Fill::Closed { 0 } else { 1 };
            if triangle.side < min_side {
                return Err(Error::Argument(format!(
                    "triangle of side {} with {fill:?} fill is not a lattice figure",
                    triangle.side
                )));
            }
            Ok(Chain2::from_cells(triangle.cells(fill), 1))
        }
        _ => Err(Error::Argument(
            "a 1-D piece cannot be placed in the plane".into(),
        )),
    }
}

/// The multiplicity chain of a plan of segments and points.
pub fn realize1(plan: &PlacementPlan) -> Result<Chain1> {
    let mut out = Chain1::new();
    for p in &plan.pieces {
        out.add_scaled(&shape_chain1(&p.shape)?, p.signed_multiplicity());
    }
    Ok(out)
}

/// The multiplicity chain of a plan of triangles and points.
pub fn realize2(plan: &PlacementPlan) -> Result<Chain2> {
    let mut out = Chain2::new();
    for p in &plan.pieces {
        out.add_scaled(&shape_chain2(&p.shape)?, p.signed_multiplicity());
    }
    Ok(out)
}

/// `⟨s⟩₁₀` placed at `offset`: the closed segment for `s > 0`, a point for
/// `s = 0`, the negated open segment of length `|s|` for `s < 0`.
pub fn segment_literal(scale: i64, offset: i64) -> Placement {
    match scale {
        0 => Placement::plus(Shape::Point1 { at: offset }),
        s if s > 0 => Placement::plus(Shape::Segment {
            start: offset,
            len: s,
            fill: Fill::Closed,
        }),
        s => Placement::minus(Shape::Segment {
            start: offset,
            len: -s,
            fill: Fill::Open,
        }),
    }
}

/// `⟨s⟩₀` anchored at `(r, c)`: the closed up triangle for `s > 0`, a point
/// for `s = 0`, the open down triangle of side `|s|` for `s < 0`.
pub fn triangle_literal0(scale: i64, r: i64, c: i64) -> Placement {
    match scale {
        0 => Placement::plus(Shape::Point2 { r, c }),
        s if s > 0 => Placement::plus(Shape::Triangle {
            triangle: Triangle::new(r, c, Orientation::Up, s),
            fill: Fill::Closed,
        }),
        s => Placement::plus(Shape::Triangle {
            triangle: Triangle::new(r, c, Orientation::Down, -s),
            fill: Fill::Open,
        }),
    }
}

/// Plain `⟨s⟩` anchored at `(r, c)`: faces of the up triangle for `s > 0`,
/// of the down triangle of side `|s|` for `s < 0`. `None` for `s = 0`.
pub fn triangle_literal(scale: i64, r: i64, c: i64) -> Option<Placement> {
    let orientation = if scale > 0 {
        Orientation::Up
    } else {
        Orientation::Down
    };
    (scale != 0).then(|| {
        Placement::plus(Shape::Triangle {
            triangle: Triangle::new(r, c, orientation, scale.abs()),
            fill: Fill::Faces,
        })
    })
}

fn require_positive(name: &str, v: i64) -> Result<()> {
    if v < 1 {
        return Err(Error::Argument(format!(
            "{name} must be at least 1, got {v}"
        )));
    }
    Ok(())
}

/// `n⟨1⟩₁₀ − (n−1)⟨0⟩₁₀`: closed unit segments end to end, minus the shared points.
pub fn eq14_plan(n: i64) -> Result<PlacementPlan> {
    require_positive("n", n)?;
    let mut plan = PlacementPlan::new();
    for i in 0..n {
        plan.push(segment_literal(1, i));
    }
    for i in 1..n {
        plan.push(Placement::minus(Shape::Point1 { at: i }));
    }
    Ok(plan)
}

/// Two ways to lay out `⟨−n⟩₁₀` on `[0, n]`:
/// `−n⟨1⟩₁₀ + (n+1)⟨0⟩₁₀` and `n⟨−1⟩₁₀ − (n−1)⟨0⟩₁₀`.
pub fn negative_segment_plans(n: i64) -> Result<(PlacementPlan, PlacementPlan)> {
    require_positive("n", n)?;
    let mut by_units = PlacementPlan::new();
    for i in 0..n {
        by_units.push(Placement::minus(Shape::Segment {
            start: i,
            len: 1,
            fill: Fill::Closed,
        }));
    }
    for i in 0..=n {
        by_units.push(segment_literal(0, i));
    }
    let mut by_reflections = PlacementPlan::new();
    for i in 0..n {
        by_reflections.push(segment_literal(-1, i));
    }
    for i in 1..n {
        by_reflections.push(Placement::minus(Shape::Point1 { at: i }));
    }
    Ok((by_units, by_reflections))
}

/// `⟨n⟩₀` from closed unit triangles, open reflected unit triangles and
/// subtracted points: `n(n+1)/2 ⟨1⟩₀ + n(n−1)/2 ⟨−1⟩₀ − (n²−1) ⟨0⟩₀`.
///
/// Points go where more than one closed unit triangle meets, with
/// multiplicity one less than the number meeting there.
pub fn standard_plan2(n: i64) -> Result<PlacementPlan> {
    require_positive("n", n)?;
    let mut plan = PlacementPlan::new();
    for i in 0..n {
        for j in 0..n - i {
            plan.push(triangle_literal0(1, i, j));
        }
    }
    for i in 0..n - 1 {
        for j in 0..n - 1 - i {
            plan.push(triangle_literal0(-1, i, j));
        }
    }
    for i in 0..=n {
        for j in 0..=n - i {
            // Up unit triangles (i', j') with this vertex among (i',j'), (i',j'+1), (i'+1,j').
            let incident = [(i, j), (i, j - 1), (i - 1, j)]
                .iter()
                .filter(|&&(a, b)| a >= 0 && b >= 0 && a + b < n)
                .count() as u32;
            if incident > 1 {
                plan.push(Placement::new(
                    Shape::Point2 { r: i, c: j },
                    Sign::Minus,
                    incident - 1,
                ));
            }
        }
    }
    Ok(plan)
}

/// `⟨2⟩₀ − 3⟨1⟩₀ + 3⟨0⟩₀`: the corners removed from `⟨2⟩₀`, leaving `⟨−1⟩₀`.
pub fn corner_cut_plan() -> PlacementPlan {
    let mut plan = PlacementPlan::new();
    plan.push(triangle_literal0(2, 0, 0));
    for (r, c) in [(0, 0), (0, 1), (1, 0)] {
        let mut p = triangle_literal0(1, r, c);
        p.sign = Sign::Minus;
        plan.push(p);
    }
    for (r, c) in [(0, 1), (1, 0), (1, 1)] {
        plan.push(triangle_literal0(0, r, c));
    }
    plan
}

fn faces(orientation: Orientation, r: i64, c: i64, side: i64, sign: Sign) -> Placement {
    Placement::new(
        Shape::Triangle {
            triangle: Triangle::new(r, c, orientation, side),
            fill: Fill::Faces,
        },
        sign,
        1,
    )
}

/// `⟨n⟩ − ⟨k⟩` as a trapezoid: the top `⟨k⟩` cut off `⟨n⟩`. For negative
/// arguments the triangles are reflected.
pub fn difference_plan(n: i64, k: i64) -> Result<PlacementPlan> {
    if k == 0 || n.signum() != k.signum() || n.abs() <= k.abs() {
        return Err(Error::Argument(format!(
            "difference plan needs |n| > |k| > 0 with equal signs, got n = {n}, k = {k}"
        )));
    }
    let (a, b) = (n.abs(), k.abs());
    let mut plan = PlacementPlan::new();
    if n > 0 {
        plan.push(faces(Orientation::Up, 0, 0, a, Sign::Plus));
        plan.push(faces(Orientation::Up, a - b, 0, b, Sign::Minus));
    } else {
        plan.push(faces(Orientation::Down, 0, 0, a, Sign::Plus));
        plan.push(faces(Orientation::Down, a - b, a - b, b, Sign::Minus));
    }
    Ok(plan)
}

/// `⟨n+k⟩ − ⟨n⟩ − ⟨k⟩`: the parallelogram with sides `n` and `k`.
pub fn parallelogram_plan(n: i64, k: i64) -> Result<PlacementPlan> {
    require_positive("n", n)?;
    require_positive("k", k)?;
    let mut plan = PlacementPlan::new();
    plan.push(faces(Orientation::Up, 0, 0, n + k, Sign::Plus));
    plan.push(faces(Orientation::Up, 0, k, n, Sign::Minus));
    plan.push(faces(Orientation::Up, n, 0, k, Sign::Minus));
    Ok(plan)
}

/// `⟨s⟩ − ⟨a⟩ − ⟨b⟩ − ⟨c⟩`: three corners of sides `a, b, c` cut off `⟨s⟩`,
/// which must not overlap.
pub fn hexagon_plan(s: i64, a: i64, b: i64, c: i64) -> Result<PlacementPlan> {
    for (name, v) in [("a", a), ("b", b), ("c", c)] {
        require_positive(name, v)?;
    }
    if a + b > s || a + c > s || b + c > s {
        return Err(Error::Argument(format!(
            "corners {a}, {b}, {c} overlap inside a triangle of side {s}"
        )));
    }
    let mut plan = PlacementPlan::new();
    plan.push(faces(Orientation::Up, 0, 0, s, Sign::Plus));
    plan.push(faces(Orientation::Up, 0, 0, a, Sign::Minus));
    plan.push(faces(Orientation::Up, 0, s - b, b, Sign::Minus));
    plan.push(faces(Orientation::Up, s - c, 0, c, Sign::Minus));
    Ok(plan)
}

/// `⟨n+k+l⟩` covered by its corner triangles `⟨n+k⟩, ⟨n+l⟩, ⟨k+l⟩`, with the
/// pairwise overlaps `⟨n⟩, ⟨k⟩, ⟨l⟩` removed once each.
///
/// With `Fill::Closed` the three overlaps share one vertex, which is added
/// back as `⟨0⟩₀`.
pub fn fig4_plan(n: i64, k: i64, l: i64, fill: Fill) -> Result<PlacementPlan> {
    for (name, v) in [("n", n), ("k", k), ("l", l)] {
        require_positive(name, v)?;
    }
    let tri = |r, c, side, sign| {
        Placement::new(
            Shape::Triangle {
                triangle: Triangle::new(r, c, Orientation::Up, side),
                fill,
            },
            sign,
            1,
        )
    };
    let mut plan = PlacementPlan::new();
    plan.push(tri(0, 0, n + k, Sign::Plus));
    plan.push(tri(0, k, n + l, Sign::Plus));
    plan.push(tri(n, 0, k + l, Sign::Plus));
    plan.push(tri(0, k, n, Sign::Minus));
    plan.push(tri(n, 0, k, Sign::Minus));
    plan.push(tri(n, k, l, Sign::Minus));
    if fill == Fill::Closed {
        plan.push(Placement::plus(Shape::Point2 { r: n, c: k }));
    }
    Ok(plan)
}

/// Numbers of `⟨1⟩`, `⟨D₁⟩` and `⟨e₁⟩` slabs in the tetrahedron `⟨n⟩`.
pub fn tetra_slabs(n: i64) -> Result<(i64, i64, i64)> {
    require_positive("n", n)?;
    Ok((
        n * (n + 1) * (n + 2) / 6,
        (n - 1) * n * (n + 1) / 6,
        (n - 2) * (n - 1) * n / 6,
    ))
}
