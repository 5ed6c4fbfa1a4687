//! Rings of scaled triangles and tetrahedra.
//!
//! Three coordinate systems are used side by side:
//!
//! * [`GeomElement2`]: counts of unit triangles `⟨1⟩` and reflected unit
//!   triangles `⟨−1⟩`;
//! * [`GeomElement3`]: counts of the three slabs `⟨1⟩, ⟨D₁⟩, ⟨e₁⟩` of a
//!   parallelepiped;
//! * [`OrthElement`]: coordinates over orthogonal idempotents `A_m, …, A_1`
//!   (optionally `A_0`), where the product is componentwise.
//!
//! In orthogonal coordinates `⟨n⟩ = n^m A_m + … + n A_1`, which is why
//! `⟨n⟩·⟨k⟩ = ⟨nk⟩` holds in every representation.

mod element;
mod geom2;
mod geom3;
mod literal;
mod orth;

pub use element::{Element, ElementJson};
pub use geom2::GeomElement2;
pub use geom3::GeomElement3;
pub use literal::{Sign, SimplexLiteral};
pub use orth::OrthElement;

use num_bigint::BigInt;

use crate::coeff::{self, Coefficient};
use crate::error::{Error, Result};

/// `⟨n⟩ = n(n+1)/2 ⟨1⟩ + n(n−1)/2 ⟨−1⟩`; negative `n` gives the reflected triangle.
pub fn embed2(n: i64) -> GeomElement2 {
    GeomElement2::triangle(&coeff::int(n))
}

/// `⟨n⟩₀ = n²A₂ + nA₁ + A₀`.
pub fn embed20(n: i64) -> OrthElement {
    OrthElement::power_embed(&coeff::int(n), 2, true)
}

/// `⟨n⟩₁₀ = nA₁ + A₀`.
pub fn embed10(n: i64) -> OrthElement {
    OrthElement::power_embed(&coeff::int(n), 1, true)
}

/// The tetrahedron `⟨n⟩ = n(n+1)(n+2)/6 ⟨1⟩ + (n−1)n(n+1)/6 ⟨D₁⟩ + (n−2)(n−1)n/6 ⟨e₁⟩`.
///
/// The same polynomials at negative `n` realize `⟨−n⟩ = −⟨e_n⟩`.
pub fn embed3(n: i64) -> GeomElement3 {
    let n = BigInt::from(n);
    let cubic = |shift: i64| -> Coefficient {
        // (n+shift)(n+shift-1)(n+shift-2) / 6
        let a = &n + shift;
        coeff::big(&a * (&a - 1) * (&a - 2)) / coeff::int(6)
    };
    GeomElement3::new(cubic(2), cubic(1), cubic(0))
}

pub fn mul2(a: &GeomElement2, b: &GeomElement2) -> GeomElement2 {
    a * b
}

pub fn mul3(a: &GeomElement3, b: &GeomElement3) -> GeomElement3 {
    a * b
}

pub fn orth_mul(a: &OrthElement, b: &OrthElement) -> Result<OrthElement> {
    a.checked_mul(b)
}

/// Exact value of `⟨−1/2⟩ + 3⟨−1/4⟩ + … + 3^{N−1}⟨−1/2^N⟩` in `(A₂, A₁)` coordinates.
///
/// The `A₂` coordinate is `1 − (3/4)^N` and the `A₁` coordinate is
/// `1 − (3/2)^N`; only the former converges.
pub fn q2_partial_sum(terms: u32) -> Result<OrthElement> {
    if terms < 1 {
        return Err(Error::Argument("series needs at least one term".into()));
    }
    let mut acc = OrthElement::zero(2, false);
    let mut weight = coeff::one();
    let mut scale = coeff::ratio(-1, 2);
    for _ in 0..terms {
        let piece = GeomElement2::triangle(&scale).to_orth().scale(&weight);
        acc = acc.checked_add(&piece)?;
        weight *= coeff::int(3);
        scale *= coeff::ratio(1, 2);
    }
    Ok(acc)
}
