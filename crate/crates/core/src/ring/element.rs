use serde::{Deserialize, Serialize};

use crate::coeff::{self, Coefficient};
use crate::error::{Error, Result};
use crate::ring::{GeomElement2, GeomElement3, OrthElement};

/// A ring element tagged with the basis its coordinates refer to.
///
/// Equality compares coordinates in the declared basis; a `Geom2` value is
/// never equal to its `Orth` image.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Geom2(GeomElement2),
    Geom3(GeomElement3),
    Orth(OrthElement),
}

/// Wire form: `{"basis": "geom2"|"geom3"|"orth", "dim": m, "a0": bool, "coeffs": ["p/q", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub basis: String,
    pub dim: usize,
    pub a0: bool,
    pub coeffs: Vec<String>,
}

impl Element {
    pub fn basis(&self) -> &'static str {
        match self {
            Element::Geom2(_) => "geom2",
            Element::Geom3(_) => "geom3",
            Element::Orth(_) => "orth",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Element::Geom2(_) => 2,
            Element::Geom3(_) => 3,
            Element::Orth(o) => o.dim(),
        }
    }

    pub fn coeffs(&self) -> Vec<Coefficient> {
        match self {
            Element::Geom2(g) => vec![g.x.clone(), g.y.clone()],
            Element::Geom3(g) => vec![g.x.clone(), g.y.clone(), g.z.clone()],
            Element::Orth(o) => o.coeffs().to_vec(),
        }
    }

    /// An element of the same shape with the given coordinates.
    pub(crate) fn with_coeffs(&self, mut c: Vec<Coefficient>) -> Self {
        match self {
            Element::Geom2(_) => {
                let y = c.pop().expect("two coordinates");
                let x = c.pop().expect("two coordinates");
                Element::Geom2(GeomElement2::new(x, y))
            }
            Element::Geom3(_) => {
                let z = c.pop().expect("three coordinates");
                let y = c.pop().expect("three coordinates");
                let x = c.pop().expect("three coordinates");
                Element::Geom3(GeomElement3::new(x, y, z))
            }
            Element::Orth(o) => Element::Orth(OrthElement::from_parts(o.dim(), o.has_a0(), c)),
        }
    }

    fn mismatch(&self, other: &Self) -> Error {
        Error::Representation(format!(
            "cannot combine {} (dim {}) with {} (dim {})",
            self.basis(),
            self.dim(),
            other.basis(),
            other.dim()
        ))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (Element::Geom2(a), Element::Geom2(b)) => Ok(Element::Geom2(a + b)),
            (Element::Geom3(a), Element::Geom3(b)) => Ok(Element::Geom3(a + b)),
            (Element::Orth(a), Element::Orth(b)) => a.checked_add(b).map(Element::Orth),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (Element::Geom2(a), Element::Geom2(b)) => Ok(Element::Geom2(a * b)),
            (Element::Geom3(a), Element::Geom3(b)) => Ok(Element::Geom3(a * b)),
            (Element::Orth(a), Element::Orth(b)) => a.checked_mul(b).map(Element::Orth),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Element::Geom2(a) => Element::Geom2(-a),
            Element::Geom3(a) => Element::Geom3(-a),
            Element::Orth(a) => Element::Orth(a.neg()),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        match self {
            Element::Geom2(a) => Element::Geom2(a.scale(c)),
            Element::Geom3(a) => Element::Geom3(a.scale(c)),
            Element::Orth(a) => Element::Orth(a.scale(c)),
        }
    }

    /// Orthogonal coordinates of the same element.
    pub fn to_orth(&self) -> OrthElement {
        match self {
            Element::Geom2(a) => a.to_orth(),
            Element::Geom3(a) => a.to_orth(),
            Element::Orth(a) => a.clone(),
        }
    }

    pub fn to_json(&self) -> ElementJson {
        let a0 = matches!(self, Element::Orth(o) if o.has_a0());
        ElementJson {
            basis: self.basis().to_string(),
            dim: self.dim(),
            a0,
            coeffs: self.coeffs().iter().map(coeff::format).collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("element JSON is always serializable")
    }

    pub fn from_json(j: &ElementJson) -> Result<Self> {
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| coeff::parse(s))
            .collect::<Result<Vec<_>>>()?;
        let fixed = |dim: usize, n: usize| -> Result<()> {
            if j.dim != dim || j.a0 || coeffs.len() != n {
                return Err(Error::Representation(format!(
                    "{} elements have dim {dim}, no A0 and {n} coefficients",
                    j.basis
                )));
            }
            Ok(())
        };
        match j.basis.as_str() {
            "geom2" => {
                fixed(2, 2)?;
                let [x, y]: [Coefficient; 2] = coeffs.try_into().expect("length checked");
                Ok(Element::Geom2(GeomElement2::new(x, y)))
            }
            "geom3" => {
                fixed(3, 3)?;
                let [x, y, z]: [Coefficient; 3] = coeffs.try_into().expect("length checked");
                Ok(Element::Geom3(GeomElement3::new(x, y, z)))
            }
            "orth" => OrthElement::new(j.dim, j.a0, coeffs).map(Element::Orth),
            other => Err(Error::Representation(format!("unknown basis {other:?}"))),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: ElementJson = serde_json::from_str(s)
            .map_err(|e| Error::Argument(format!("bad element JSON: {e}")))?;
        Self::from_json(&j)
    }
}
