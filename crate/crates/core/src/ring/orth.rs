use num_traits::Zero;

use crate::coeff::{self, Coefficient};
use crate::error::{Error, Result};

/// Coordinates over the orthogonal idempotents `A_m, …, A_1` (then `A_0` when
/// `has_a0`). Multiplication is componentwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrthElement {
    dim: usize,
    has_a0: bool,
    coeffs: Vec<Coefficient>,
}

impl OrthElement {
    pub fn new(dim: usize, has_a0: bool, coeffs: Vec<Coefficient>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Argument("dimension must be at least 1".into()));
        }
        let want = dim + usize::from(has_a0);
        if coeffs.len() != want {
            return Err(Error::Representation(format!(
                "dimension {dim}{} needs {want} coefficients, got {}",
                if has_a0 { " with A0" } else { "" },
                coeffs.len()
            )));
        }
        Ok(Self {
            dim,
            has_a0,
            coeffs,
        })
    }

    pub(crate) fn from_parts(dim: usize, has_a0: bool, coeffs: Vec<Coefficient>) -> Self {
        debug_assert_eq!(coeffs.len(), dim + usize::from(has_a0));
        Self {
            dim,
            has_a0,
            coeffs,
        }
    }

    pub fn zero(dim: usize, has_a0: bool) -> Self {
        Self::from_parts(dim, has_a0, vec![coeff::zero(); dim + usize::from(has_a0)])
    }

    /// The multiplicative unit `⟨1⟩` (all ones).
    pub fn one(dim: usize, has_a0: bool) -> Self {
        Self::from_parts(dim, has_a0, vec![coeff::one(); dim + usize::from(has_a0)])
    }

    /// `q^m A_m + … + q A_1 (+ 1 A_0)`.
    pub fn power_embed(q: &Coefficient, dim: usize, has_a0: bool) -> Self {
        let mut coeffs: Vec<Coefficient> =
            (1..=dim as u32).rev().map(|j| coeff::pow(q, j)).collect();
        if has_a0 {
            coeffs.push(coeff::one());
        }
        Self::from_parts(dim, has_a0, coeffs)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn has_a0(&self) -> bool {
        self.has_a0
    }

    /// Indexed `A_m` first, down to `A_1`, then `A_0`.
    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    /// Coefficient of `A_j`.
    pub fn component(&self, j: usize) -> Option<&Coefficient> {
        if j == 0 {
            return self.has_a0.then(|| &self.coeffs[self.dim]);
        }
        (j <= self.dim).then(|| &self.coeffs[self.dim - j])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub(crate) fn expect_shape(&self, dim: usize, has_a0: bool) -> Result<()> {
        if self.dim != dim || self.has_a0 != has_a0 {
            return Err(Error::Representation(format!(
                "expected orthogonal element of dimension {dim} (A0: {has_a0}), got dimension {} (A0: {})",
                self.dim, self.has_a0
            )));
        }
        Ok(())
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&Coefficient, &Coefficient) -> Coefficient,
    ) -> Result<Self> {
        other.expect_shape(self.dim, self.has_a0)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(Self::from_parts(self.dim, self.has_a0, coeffs))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Componentwise product over the idempotent basis.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn neg(&self) -> Self {
        Self::from_parts(
            self.dim,
            self.has_a0,
            self.coeffs.iter().map(|c| -c).collect(),
        )
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Self::from_parts(
            self.dim,
            self.has_a0,
            self.coeffs.iter().map(|a| a * c).collect(),
        )
    }

    /// Drops the `A_0` coordinate: `⟨n⟩₀ ↦ ⟨n⟩`.
    pub fn truncate_a0(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        if self.has_a0 {
            coeffs.pop();
        }
        Self::from_parts(self.dim, false, coeffs)
    }
}
