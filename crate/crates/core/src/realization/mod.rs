//! Geometric models of the arithmetic.
//!
//! Figures are multiplicity chains on a lattice: the integer line for
//! segments, the triangular lattice for triangles. A closed figure covers its
//! interior and boundary with multiplicity one, an open figure its interior
//! only, so that sums and differences of pieces are pointwise sums of
//! chains. Reading off signed face counts (and, for closed figures, the Euler
//! characteristic) recovers the ring coordinates.
//!
//! Lattice coordinates are skewed: vertex `(r, c)` sits at
//! `(c + r/2, r·√3/2)` in the plane; see [`Cell2`] for faces and edges.

mod chain;
mod lattice;
mod plan;
mod search;
mod svg;

pub use chain::{Chain, Chain1, Chain2, ChainEntry};
pub use lattice::{Cell1, Cell2, Direction, Fill, Orientation, Triangle};
pub use plan::{
    corner_cut_plan, difference_plan, eq14_plan, fig4_plan, hexagon_plan, negative_segment_plans,
    parallelogram_plan, realize1, realize2, segment_literal, standard_plan2, tetra_slabs,
    triangle_literal, triangle_literal0, Placement, PlacementPlan, PlanCounts, Shape,
};
pub use search::{exact_tiling_search, PieceSpec, Window, DEFAULT_SEARCH_CAP};
pub use svg::{svg_chain1, svg_chain2, svg_plan2, SvgOptions};
