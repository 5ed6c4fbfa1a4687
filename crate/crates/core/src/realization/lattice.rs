use serde::{Deserialize, Serialize};

/// A cell of the integer line: a point or the open interval `(i, i+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Cell1 {
    Vertex { at: i64 },
    Interval { start: i64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Up,
    Down,
}

/// Edge directions. With vertex `(r, c)` in skewed coordinates:
/// `A(r,c)` joins `(r,c)`–`(r,c+1)`, `B(r,c)` joins `(r,c)`–`(r+1,c)` and
/// `C(r,c)` joins `(r+1,c)`–`(r,c+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    A,
    B,
    C,
}

/// A cell of the triangular lattice.
///
/// The up face `(r,c)` has vertices `(r,c), (r,c+1), (r+1,c)`; the down face
/// `(r,c)` has vertices `(r,c+1), (r+1,c), (r+1,c+1)`. Row `r` grows towards
/// the apex of an up triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Cell2 {
    Vertex {
        r: i64,
        c: i64,
    },
    Edge {
        dir: Direction,
        r: i64,
        c: i64,
    },
    Face {
        orientation: Orientation,
        r: i64,
        c: i64,
    },
}

impl Cell2 {
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        match *self {
            Cell2::Vertex { r, c } => vec![(r, c)],
            Cell2::Edge {
                dir: Direction::A,
                r,
                c,
            } => vec![(r, c), (r, c + 1)],
            Cell2::Edge {
                dir: Direction::B,
                r,
                c,
            } => vec![(r, c), (r + 1, c)],
            Cell2::Edge {
                dir: Direction::C,
                r,
                c,
            } => vec![(r + 1, c), (r, c + 1)],
            Cell2::Face {
                orientation: Orientation::Up,
                r,
                c,
            } => vec![(r, c), (r, c + 1), (r + 1, c)],
            Cell2::Face {
                orientation: Orientation::Down,
                r,
                c,
            } => {
                vec![(r, c + 1), (r + 1, c), (r + 1, c + 1)]
            }
        }
    }

    /// Edges of a face, `A`, `B`, `C` order; empty for other cells.
    pub fn face_edges(&self) -> Vec<Cell2> {
        let edge = |dir, r, c| Cell2::Edge { dir, r, c };
        match *self {
            Cell2::Face {
                orientation: Orientation::Up,
                r,
                c,
            } => {
                vec![
                    edge(Direction::A, r, c),
                    edge(Direction::B, r, c),
                    edge(Direction::C, r, c),
                ]
            }
            Cell2::Face {
                orientation: Orientation::Down,
                r,
                c,
            } => vec![
                edge(Direction::A, r + 1, c),
                edge(Direction::B, r, c + 1),
                edge(Direction::C, r, c),
            ],
            _ => Vec::new(),
        }
    }

    pub fn dimension(&self) -> usize {
        match self {
            Cell2::Vertex { .. } => 0,
            Cell2::Edge { .. } => 1,
            Cell2::Face { .. } => 2,
        }
    }

    pub fn translated(&self, dr: i64, dc: i64) -> Cell2 {
        match *self {
            Cell2::Vertex { r, c } => Cell2::Vertex {
                r: r + dr,
                c: c + dc,
            },
            Cell2::Edge { dir, r, c } => Cell2::Edge {
                dir,
                r: r + dr,
                c: c + dc,
            },
            Cell2::Face { orientation, r, c } => Cell2::Face {
                orientation,
                r: r + dr,
                c: c + dc,
            },
        }
    }
}

/// Which cells of a figure a piece covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Fill {
    /// Interior and boundary.
    Closed,
    /// Interior only.
    Open,
    /// Top-dimensional cells only.
    Faces,
}

/// A lattice triangle of side `side` whose anchor vertex is `(r, c)`.
///
/// An up triangle has corners `(r,c), (r,c+s), (r+s,c)`; a down triangle has
/// corners `(r,c+s), (r+s,c), (r+s,c+s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triangle {
    pub r: i64,
    pub c: i64,
    pub orientation: Orientation,
    pub side: i64,
}

impl Triangle {
    pub fn new(r: i64, c: i64, orientation: Orientation, side: i64) -> Self {
        Self {
            r,
            c,
            orientation,
            side,
        }
    }

    /// The three half-plane constraints at a point, all `≥ 0` inside.
    fn constraints(&self, (r, c): (i64, i64)) -> [i64; 3] {
        let (i, j, s) = (r - self.r, c - self.c, self.side);
        match self.orientation {
            Orientation::Up => [i, j, s - i - j],
            Orientation::Down => [s - i, s - j, i + j - s],
        }
    }

    fn contains_cell(&self, cell: &Cell2) -> bool {
        cell.vertices()
            .into_iter()
            .all(|v| self.constraints(v).iter().all(|&x| x >= 0))
    }

    /// All vertices of the cell on one side line.
    fn on_boundary(&self, cell: &Cell2) -> bool {
        let vs = cell.vertices();
        (0..3).any(|q| vs.iter().all(|&v| self.constraints(v)[q] == 0))
    }

    /// Cells covered with the given fill, in cell order.
    pub fn cells(&self, fill: Fill) -> Vec<Cell2> {
        let s = self.side.max(0);
        let mut out = Vec::new();
        for i in 0..=s {
            for j in 0..=s {
                let (r, c) = (self.r + i, self.c + j);
                let candidates = [
                    Cell2::Vertex { r, c },
                    Cell2::Edge {
                        dir: Direction::A,
                        r,
                        c,
                    },
                    Cell2::Edge {
                        dir: Direction::B,
                        r,
                        c,
                    },
                    Cell2::Edge {
                        dir: Direction::C,
                        r,
                        c,
                    },
                    Cell2::Face {
                        orientation: Orientation::Up,
                        r,
                        c,
                    },
                    Cell2::Face {
                        orientation: Orientation::Down,
                        r,
                        c,
                    },
                ];
                for cell in candidates {
                    if !self.contains_cell(&cell) {
                        continue;
                    }
                    let keep = match fill {
                        Fill::Closed => true,
                        Fill::Open => !self.on_boundary(&cell),
                        Fill::Faces => cell.dimension() == 2,
                    };
                    if keep {
                        out.push(cell);
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Corner vertices.
    pub fn corners(&self) -> [(i64, i64); 3] {
        let (r, c, s) = (self.r, self.c, self.side);
        match self.orientation {
            Orientation::Up => [(r, c), (r, c + s), (r + s, c)],
            Orientation::Down => [(r, c + s), (r + s, c), (r + s, c + s)],
        }
    }
}
