//! Exact arithmetic of scaled simplices.
//!
//! A triangle `⟨n⟩` with sides `n` times those of a fixed unit triangle splits
//! into `n(n+1)/2` unit triangles and `n(n−1)/2` reflected ones. Treating these
//! counts as coordinates gives a commutative ring in which `⟨n⟩·⟨k⟩ = ⟨nk⟩` and
//! in which the set of all `⟨n⟩` is closed under an inclusion-exclusion
//! addition. The same construction works for tetrahedra and for simplices of
//! any dimension.
//!
//! Modules:
//!
//! * [`ring`]: coordinate systems, products and basis changes;
//! * [`closed`]: formal combinations of literals and the closed addition laws;
//! * [`number_theory`]: the power-sum characterization of composite numbers;
//! * [`simplex_nd`]: Eulerian numbers, Worpitzky's identity and `m`-simplices;
//! * [`triples`]: translation-invariant triples and the hypercomplex algebra;
//! * [`realization`]: multiplicity chains on lattices, tilings and SVG output.
//!
//! All arithmetic is exact; there is no floating-point path except pixel
//! coordinates in SVG output.

#[macro_use]
mod macros;

pub mod closed;
pub mod coeff;
pub mod error;
pub mod number_theory;
pub mod realization;
pub mod ring;
pub mod simplex_nd;
pub mod triples;

pub use coeff::Coefficient;
pub use error::{Error, Result};
