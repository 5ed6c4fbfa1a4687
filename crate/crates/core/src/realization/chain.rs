use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::lattice::{Cell1, Cell2, Direction, Orientation};
use crate::coeff;
use crate::ring::{GeomElement2, OrthElement};

/// A finitely supported integer multiplicity on cells. Zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chain<C: Ord> {
    cells: BTreeMap<C, i64>,
}

pub type Chain1 = Chain<Cell1>;
pub type Chain2 = Chain<Cell2>;

impl<C: Ord + Copy> Default for Chain<C> {
    fn default() -> Self {
        Self {
            cells: BTreeMap::new(),
        }
    }
}

impl<C: Ord + Copy> Chain<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_cells(cells: impl IntoIterator<Item = C>, mult: i64) -> Self {
        let mut out = Self::new();
        for c in cells {
            out.add_cell(c, mult);
        }
        out
    }

    pub fn add_cell(&mut self, cell: C, mult: i64) {
        if mult == 0 {
            return;
        }
        let v = self.cells.entry(cell).or_insert(0);
        *v += mult;
        if *v == 0 {
            self.cells.remove(&cell);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: i64) {
        for (&c, &m) in &other.cells {
            self.add_cell(c, m * factor);
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, 1);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, -1);
        out
    }

    pub fn negated(&self) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, -1);
        out
    }

    pub fn get(&self, cell: &C) -> i64 {
        self.cells.get(cell).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `(cell, multiplicity)` in cell order.
    pub fn iter(&self) -> impl Iterator<Item = (&C, i64)> {
        self.cells.iter().map(|(c, &m)| (c, m))
    }

    /// Entries for JSON output.
    pub fn entries(&self) -> Vec<ChainEntry<C>> {
        self.iter()
            .map(|(&cell, mult)| ChainEntry { cell, mult })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainEntry<C> {
    pub cell: C,
    pub mult: i64,
}

impl Chain1 {
    /// `(A₁, A₀)` = (signed length, `V − E`).
    pub fn ring_value(&self) -> OrthElement {
        let (mut len, mut chi) = (0i64, 0i64);
        for (cell, m) in self.iter() {
            match cell {
                Cell1::Vertex { .. } => chi += m,
                Cell1::Interval { .. } => {
                    len += m;
                    chi -= m;
                }
            }
        }
        OrthElement::new(1, true, vec![coeff::int(len), coeff::int(chi)]).expect("two coordinates")
    }
}

impl Chain2 {
    /// Signed numbers of up and down faces.
    pub fn face_counts(&self) -> (i64, i64) {
        let (mut up, mut down) = (0, 0);
        for (cell, m) in self.iter() {
            match cell {
                Cell2::Face {
                    orientation: Orientation::Up,
                    ..
                } => up += m,
                Cell2::Face {
                    orientation: Orientation::Down,
                    ..
                } => down += m,
                _ => {}
            }
        }
        (up, down)
    }

    /// The face part as a triangle-ring element: unit triangles count towards
    /// `⟨1⟩`, reflected ones towards `⟨−1⟩`.
    pub fn ring_value(&self) -> GeomElement2 {
        let (up, down) = self.face_counts();
        GeomElement2::from_ints(up, down)
    }

    /// `(A₂, A₁, A₀)` with `A₀ = V − E + F`.
    pub fn ring_value_extended(&self) -> OrthElement {
        let (up, down) = self.face_counts();
        let chi: i64 = self
            .iter()
            .map(|(cell, m)| if cell.dimension() == 1 { -m } else { m })
            .sum();
        OrthElement::new(
            2,
            true,
            vec![
                coeff::int(up + down),
                coeff::int(up - down),
                coeff::int(chi),
            ],
        )
        .expect("three coordinates")
    }

    /// Only the faces.
    pub fn faces(&self) -> Chain2 {
        let mut out = Chain2::new();
        for (&cell, m) in self.iter() {
            if cell.dimension() == 2 {
                out.add_cell(cell, m);
            }
        }
        out
    }

    /// Boundary of the face part with up faces counted `+1` and down faces
    /// `−1` on each of their edges, restricted to one direction and summed.
    ///
    /// For a trapezoid this is the length of the lower parallel side minus the
    /// length of the upper one.
    pub fn parallel_side_difference(&self, dir: Direction) -> i64 {
        let mut boundary: Chain2 = Chain2::new();
        for (cell, m) in self.iter() {
            let sign = match cell {
                Cell2::Face {
                    orientation: Orientation::Up,
                    ..
                } => 1,
                Cell2::Face {
                    orientation: Orientation::Down,
                    ..
                } => -1,
                _ => continue,
            };
            for e in cell.face_edges() {
                boundary.add_cell(e, sign * m);
            }
        }
        boundary
            .iter()
            .filter(|(cell, _)| matches!(cell, Cell2::Edge { dir: d, .. } if *d == dir))
            .map(|(_, m)| m)
            .sum()
    }
}
