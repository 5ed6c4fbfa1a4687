use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::chain::Chain2;
use super::lattice::{Cell2, Fill, Orientation, Triangle};
use super::plan::{Placement, PlacementPlan, Shape};
use crate::error::{Error, Result};
use crate::ring::Sign;

/// A face-only triangle piece available to the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PieceSpec {
    pub orientation: Orientation,
    pub side: i64,
    pub sign: Sign,
}

impl PieceSpec {
    pub fn new(orientation: Orientation, side: i64, sign: Sign) -> Self {
        Self {
            orientation,
            side,
            sign,
        }
    }
}

/// Anchor positions `(r, c)` with `r ∈ [r_min, r_max]`, `c ∈ [c_min, c_max]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub r_min: i64,
    pub r_max: i64,
    pub c_min: i64,
    pub c_max: i64,
}

impl Window {
    /// The square `[lo, hi]²`.
    pub fn square(lo: i64, hi: i64) -> Self {
        Self {
            r_min: lo,
            r_max: hi,
            c_min: lo,
            c_max: hi,
        }
    }

    pub fn positions(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for r in self.r_min..=self.r_max {
            for c in self.c_min..=self.c_max {
                out.push((r, c));
            }
        }
        out
    }
}

/// Default bound on the number of placement combinations.
pub const DEFAULT_SEARCH_CAP: u128 = 1_000_000_000;

/// `C(n + k − 1, k)`: ways to choose `k` positions out of `n` with repetition.
fn multichoose(n: u128, k: u128) -> u128 {
    if k == 0 {
        return 1;
    }
    if n == 0 {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n + i) / (i + 1);
    }
    acc
}

struct Group {
    spec: PieceSpec,
    count: usize,
    /// Face cells of the piece anchored at the origin.
    cells: Vec<Cell2>,
}

struct Search<'a> {
    groups: Vec<Group>,
    positions: &'a [(i64, i64)],
    /// Current sum minus target.
    diff: HashMap<Cell2, i64>,
    l1: i64,
    chosen: Vec<(usize, usize)>,
}

impl Search<'_> {
    fn apply(&mut self, group: usize, pos: usize, sign: i64) {
        let (dr, dc) = self.positions[pos];
        let g = &self.groups[group];
        let m = sign * g.spec.sign.as_i64();
        for cell in &g.cells {
            let e = self.diff.entry(cell.translated(dr, dc)).or_insert(0);
            self.l1 -= e.abs();
            *e += m;
            self.l1 += e.abs();
        }
    }

    /// Faces still to be placed, from piece `(group, placed)` on.
    fn remaining_faces(&self, group: usize, placed: usize) -> i64 {
        self.groups[group..]
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let left = if i == 0 { g.count - placed } else { g.count };
                (left * g.cells.len()) as i64
            })
            .sum()
    }

    fn dfs(&mut self, group: usize, placed: usize, min_pos: usize) -> bool {
        if group == self.groups.len() {
            return self.l1 == 0;
        }
        if placed == self.groups[group].count {
            return self.dfs(group + 1, 0, 0);
        }
        if self.l1 > self.remaining_faces(group, placed) {
            return false;
        }
        for pos in min_pos..self.positions.len() {
            self.apply(group, pos, 1);
            self.chosen.push((group, pos));
            if self.dfs(group, placed + 1, pos) {
                return true;
            }
            self.chosen.pop();
            self.apply(group, pos, -1);
        }
        false
    }
}

/// Searches for placements of `pieces`, with anchors in `window`, whose face
/// chain equals `target`.
///
/// The search is exhaustive over the window: `None` means no assignment of
/// anchors in the window works. Identical pieces are placed at
/// non-decreasing positions; placements are tried in piece order (first
/// occurrence) and row-major position order, and the first hit is returned.
/// Fails with a resource error when the number of combinations exceeds `cap`.
pub fn exact_tiling_search(
    target: &Chain2,
    pieces: &[PieceSpec],
    window: &Window,
    cap: u128,
) -> Result<Option<PlacementPlan>> {
    let mut groups: Vec<Group> = Vec::new();
    for spec in pieces {
        if spec.side < 1 {
            return Err(Error::Argument(format!(
                "piece side must be positive, got {}",
                spec.side
            )));
        }
        match groups.iter_mut().find(|g| g.spec == *spec) {
            Some(g) => g.count += 1,
            None => groups.push(Group {
                spec: *spec,
                count: 1,
                cells: Triangle::new(0, 0, spec.orientation, spec.side).cells(Fill::Faces),
            }),
        }
    }
    let positions = window.positions();
    let combos = groups.iter().fold(1u128, |acc, g| {
        acc.saturating_mul(multichoose(positions.len() as u128, g.count as u128))
    });
    if combos > cap {
        return Err(Error::Resource(format!(
            "{combos} placement combinations exceed the search cap of {cap}"
        )));
    }
    let mut diff = HashMap::new();
    let mut l1 = 0;
    for (&cell, m) in target.iter() {
        diff.insert(cell, -m);
        l1 += m.abs();
    }
    let mut search = Search {
        groups,
        positions: &positions,
        diff,
        l1,
        chosen: Vec::new(),
    };
    if !search.dfs(0, 0, 0) {
        return Ok(None);
    }
    let pieces = search
        .chosen
        .iter()
        .map(|&(g, pos)| {
            let spec = search.groups[g].spec;
            let (r, c) = positions[pos];
            Placement::new(
                Shape::Triangle {
                    triangle: Triangle::new(r, c, spec.orientation, spec.side),
                    fill: Fill::Faces,
                },
                spec.sign,
                1,
            )
        })
        .collect();
    Ok(Some(PlacementPlan { pieces }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realization::plan::{realize2, triangle_literal};

    fn faces_of(side: i64) -> Chain2 {
        realize2(&PlacementPlan {
            pieces: vec![triangle_literal(side, 0, 0).unwrap()],
        })
        .unwrap()
    }

    #[test]
    fn multichoose_values() {
        assert_eq!(multichoose(5, 0), 1);
        assert_eq!(multichoose(5, 2), 15);
        assert_eq!(multichoose(0, 2), 0);
    }

    #[test]
    fn unit_triangle() {
        let pieces = [PieceSpec::new(Orientation::Up, 1, Sign::Plus)];
        let plan = exact_tiling_search(&faces_of(1), &pieces, &Window::square(-1, 1), 1000)
            .unwrap()
            .unwrap();
        assert_eq!(realize2(&plan).unwrap(), faces_of(1));
    }

    #[test]
    fn side_two_from_units() {
        let up = PieceSpec::new(Orientation::Up, 1, Sign::Plus);
        let down = PieceSpec::new(Orientation::Down, 1, Sign::Plus);
        let plan = exact_tiling_search(
            &faces_of(2),
            &[up, up, up, down],
            &Window::square(-1, 2),
            1 << 30,
        )
        .unwrap()
        .unwrap();
        assert_eq!(realize2(&plan).unwrap(), faces_of(2));
    }

    #[test]
    fn cap_is_enforced() {
        let up = PieceSpec::new(Orientation::Up, 1, Sign::Plus);
        let err = exact_tiling_search(&faces_of(2), &[up; 4], &Window::square(-10, 10), 10);
        assert!(matches!(err, Err(Error::Resource(_))));
    }
}
