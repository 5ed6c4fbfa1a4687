use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeff;
use crate::error::{Error, Result};
use crate::ring::{Element, GeomElement2, GeomElement3, OrthElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::Argument(format!(
                "sign must be +1 or -1, got {other}"
            ))),
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.as_i64())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = i64::deserialize(d)?;
        Sign::from_i64(v).map_err(serde::de::Error::custom)
    }
}

/// A scaled simplex `±⟨n⟩` of dimension `dim`.
///
/// `−⟨n⟩` (the negated figure, `sign = Minus`) and `⟨−n⟩` (the reflected figure,
/// `scale = −n`) are different literals. With `extended` set the literal carries
/// an `A_0` coordinate: `⟨n⟩₀` in two dimensions, `⟨n⟩₁₀` in one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SimplexLiteral {
    pub dim: usize,
    pub scale: i64,
    pub sign: Sign,
    pub extended: bool,
}

impl SimplexLiteral {
    pub fn new(dim: usize, scale: i64) -> Self {
        Self {
            dim,
            scale,
            sign: Sign::Plus,
            extended: false,
        }
    }

    pub fn extended(dim: usize, scale: i64) -> Self {
        Self {
            dim,
            scale,
            sign: Sign::Plus,
            extended: true,
        }
    }

    /// `⟨n⟩₁₀ = nA₁ + A₀`, the closed segment of length `n`.
    pub fn segment(scale: i64) -> Self {
        Self::extended(1, scale)
    }

    pub fn negated(self) -> Self {
        Self {
            sign: self.sign.flip(),
            ..self
        }
    }

    /// The ring value, in the representation native to the literal's family:
    /// plain triangles and tetrahedra in their geometric bases, everything else
    /// (extended literals, other dimensions) in orthogonal coordinates.
    pub fn value(&self) -> Result<Element> {
        if self.dim == 0 {
            return Err(Error::Argument(
                "simplex dimension must be at least 1".into(),
            ));
        }
        let v = match (self.dim, self.extended) {
            (2, false) => Element::Geom2(super::embed2(self.scale)),
            (3, false) => Element::Geom3(super::embed3(self.scale)),
            (m, a0) => Element::Orth(OrthElement::power_embed(&coeff::int(self.scale), m, a0)),
        };
        Ok(match self.sign {
            Sign::Plus => v,
            Sign::Minus => v.neg(),
        })
    }

    /// Coordinates of [`value`](Self::value) as machine integers, or `None`
    /// when they do not fit in `i128`.
    pub fn int_coords(&self) -> Option<Vec<i128>> {
        let n = i128::from(self.scale);
        let mut v = match (self.dim, self.extended) {
            (0, _) => return None,
            (2, false) => vec![n * (n + 1) / 2, n * (n - 1) / 2],
            (3, false) => {
                let cubic = |a: i128| a.checked_mul(a - 1)?.checked_mul(a - 2).map(|x| x / 6);
                vec![cubic(n + 2)?, cubic(n + 1)?, cubic(n)?]
            }
            (m, a0) => {
                let mut powers = Vec::with_capacity(m + 1);
                let mut p = 1i128;
                for _ in 0..m {
                    p = p.checked_mul(n)?;
                    powers.push(p);
                }
                powers.reverse();
                if a0 {
                    powers.push(1);
                }
                powers
            }
        };
        if self.sign == Sign::Minus {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        Some(v)
    }

    /// The zero element of the representation [`value`](Self::value) uses.
    pub fn zero_value(dim: usize, extended: bool) -> Element {
        match (dim, extended) {
            (2, false) => Element::Geom2(GeomElement2::zero()),
            (3, false) => Element::Geom3(GeomElement3::zero()),
            (m, a0) => Element::Orth(OrthElement::zero(m, a0)),
        }
    }
}

impl fmt::Display for SimplexLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Minus {
            f.write_str("-")?;
        }
        write!(f, "<{}>", self.scale)?;
        match (self.extended, self.dim) {
            (false, _) => Ok(()),
            (true, 1) => f.write_str("_10"),
            (true, _) => f.write_str("_0"),
        }
    }
}
