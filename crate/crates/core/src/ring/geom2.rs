use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::coeff::{self, Coefficient};
use crate::error::Result;
use crate::ring::OrthElement;

/// `x⟨1⟩ + y⟨−1⟩`: counts of upward and downward unit triangles.
///
/// Multiplication is `(x₁x₂ + y₁y₂, x₁y₂ + x₂y₁)`, so `⟨1⟩ = (1, 0)` is the unit
/// and `⟨−1⟩² = ⟨1⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeomElement2 {
    pub x: Coefficient,
    pub y: Coefficient,
}

impl GeomElement2 {
    pub fn new(x: Coefficient, y: Coefficient) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(coeff::int(x), coeff::int(y))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    /// The reflected unit triangle `⟨−1⟩`.
    pub fn reflected_unit() -> Self {
        Self::from_ints(0, 1)
    }

    /// The triangle `⟨q⟩` for a rational scale: `(q(q+1)/2, q(q−1)/2)`.
    pub fn triangle(q: &Coefficient) -> Self {
        let half = coeff::ratio(1, 2);
        let x = q * (q + coeff::one()) * &half;
        let y = q * (q - coeff::one()) * &half;
        Self { x, y }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Self::new(&self.x * c, &self.y * c)
    }

    /// `(x, y) ↦ (x + y, x − y)` in the `A₂, A₁` basis.
    pub fn to_orth(&self) -> OrthElement {
        OrthElement::from_parts(2, false, vec![&self.x + &self.y, &self.x - &self.y])
    }

    pub fn from_orth(v: &OrthElement) -> Result<Self> {
        v.expect_shape(2, false)?;
        let half = coeff::ratio(1, 2);
        let (a2, a1) = (&v.coeffs()[0], &v.coeffs()[1]);
        Ok(Self::new((a2 + a1) * &half, (a2 - a1) * &half))
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    /// The integer pair, for contexts restricted to `P₂(ℤ)`.
    pub fn to_integers(&self) -> Result<(BigInt, BigInt)> {
        Ok((coeff::to_integer(&self.x)?, coeff::to_integer(&self.y)?))
    }
}

impl Add for &GeomElement2 {
    type Output = GeomElement2;
    fn add(self, rhs: &GeomElement2) -> GeomElement2 {
        GeomElement2::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &GeomElement2 {
    type Output = GeomElement2;
    fn sub(self, rhs: &GeomElement2) -> GeomElement2 {
        GeomElement2::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Mul for &GeomElement2 {
    type Output = GeomElement2;
    fn mul(self, rhs: &GeomElement2) -> GeomElement2 {
        GeomElement2::new(
            &self.x * &rhs.x + &self.y * &rhs.y,
            &self.x * &rhs.y + &rhs.x * &self.y,
        )
    }
}

impl Neg for &GeomElement2 {
    type Output = GeomElement2;
    fn neg(self) -> GeomElement2 {
        GeomElement2::new(-&self.x, -&self.y)
    }
}

forward_owned_ops!(GeomElement2);
