use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::{self, Coefficient};
use crate::error::Result;
use crate::ring::OrthElement;

/// `x⟨1⟩ + y⟨D₁⟩ + z⟨e₁⟩`: the three slabs of a unit parallelepiped.
///
/// The product is the bilinear extension of the multiplication table
///
/// ```text
/// ⟨1⟩ is neutral       ⟨e₁⟩⟨e₁⟩ = ⟨1⟩       ⟨e₁⟩⟨D₁⟩ = ⟨D₁⟩
/// ⟨D₁⟩⟨D₁⟩ = 4⟨1⟩ + 4⟨e₁⟩ + 2⟨D₁⟩
/// ```
///
/// The orthogonal route (`to_orth`, componentwise product, `from_orth`) is kept
/// independent of this table so that the two can be checked against each other.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeomElement3 {
    pub x: Coefficient,
    pub y: Coefficient,
    pub z: Coefficient,
}

/// `TABLE[p][q]` is the product of basis slabs `p` and `q`, indexed in
/// `(⟨1⟩, ⟨D₁⟩, ⟨e₁⟩)` order.
const TABLE: [[[i64; 3]; 3]; 3] = {
    let unit = [1, 0, 0];
    let d1 = [0, 1, 0];
    let e1 = [0, 0, 1];
    [[unit, d1, e1], [d1, [4, 2, 4], d1], [e1, d1, unit]]
};

impl GeomElement3 {
    pub fn new(x: Coefficient, y: Coefficient, z: Coefficient) -> Self {
        Self { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Self::new(coeff::int(x), coeff::int(y), coeff::int(z))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0)
    }

    pub fn d1() -> Self {
        Self::from_ints(0, 1, 0)
    }

    /// `e = ⟨e₁⟩ = A₃ − A₂ + A₁`.
    pub fn e() -> Self {
        Self::from_ints(0, 0, 1)
    }

    /// `f = −A₃ + A₂ + A₁`.
    pub fn f() -> Self {
        Self::new(coeff::ratio(2, 3), coeff::ratio(-1, 3), coeff::ratio(-1, 3))
    }

    /// `g = A₃ + A₂ − A₁`.
    pub fn g() -> Self {
        Self::new(coeff::ratio(1, 3), coeff::ratio(1, 3), coeff::ratio(-2, 3))
    }

    /// The orthogonal idempotent `A_j` (`j ∈ {1, 2, 3}`) in slab coordinates.
    pub fn idempotent(j: usize) -> Self {
        match j {
            3 => Self::new(coeff::ratio(1, 6), coeff::ratio(1, 6), coeff::ratio(1, 6)),
            2 => Self::new(coeff::ratio(1, 2), coeff::zero(), coeff::ratio(-1, 2)),
            1 => Self::new(coeff::ratio(1, 3), coeff::ratio(-1, 6), coeff::ratio(1, 3)),
            _ => panic!("tetrahedron ring has idempotents A1..A3, got A{j}"),
        }
    }

    fn as_array(&self) -> [&Coefficient; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Self::new(&self.x * c, &self.y * c, &self.z * c)
    }

    /// `⟨1⟩ ↦ (1,1,1)`, `⟨D₁⟩ ↦ (4,0,−2)`, `⟨e₁⟩ ↦ (1,−1,1)` in `(A₃, A₂, A₁)`.
    pub fn to_orth(&self) -> OrthElement {
        let four = coeff::int(4);
        let two = coeff::int(2);
        let a3 = &self.x + &self.y * &four + &self.z;
        let a2 = &self.x - &self.z;
        let a1 = &self.x - &self.y * &two + &self.z;
        OrthElement::from_parts(3, false, vec![a3, a2, a1])
    }

    pub fn from_orth(v: &OrthElement) -> Result<Self> {
        v.expect_shape(3, false)?;
        let c = v.coeffs();
        let mut out = Self::zero();
        for (j, a) in [3, 2, 1].into_iter().zip(c) {
            out = out + Self::idempotent(j).scale(a);
        }
        Ok(out)
    }

    pub fn is_integral(&self) -> bool {
        self.as_array().iter().all(|c| c.is_integer())
    }
}

impl Add for &GeomElement3 {
    type Output = GeomElement3;
    fn add(self, rhs: &GeomElement3) -> GeomElement3 {
        GeomElement3::new(&self.x + &rhs.x, &self.y + &rhs.y, &self.z + &rhs.z)
    }
}

impl Sub for &GeomElement3 {
    type Output = GeomElement3;
    fn sub(self, rhs: &GeomElement3) -> GeomElement3 {
        GeomElement3::new(&self.x - &rhs.x, &self.y - &rhs.y, &self.z - &rhs.z)
    }
}

impl Mul for &GeomElement3 {
    type Output = GeomElement3;
    fn mul(self, rhs: &GeomElement3) -> GeomElement3 {
        let lhs = self.as_array();
        let rhs = rhs.as_array();
        let mut acc = [coeff::zero(), coeff::zero(), coeff::zero()];
        for (p, a) in lhs.iter().enumerate() {
            for (q, b) in rhs.iter().enumerate() {
                let ab = *a * *b;
                for (slot, weight) in acc.iter_mut().zip(TABLE[p][q]) {
                    if weight != 0 {
                        *slot += &ab * coeff::int(weight);
                    }
                }
            }
        }
        let [x, y, z] = acc;
        GeomElement3::new(x, y, z)
    }
}

impl Neg for &GeomElement3 {
    type Output = GeomElement3;
    fn neg(self) -> GeomElement3 {
        GeomElement3::new(-&self.x, -&self.y, -&self.z)
    }
}

forward_owned_ops!(GeomElement3);
