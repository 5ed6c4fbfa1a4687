use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::coeff;
use crate::error::{Error, Result};
use crate::ring::{Element, Sign, SimplexLiteral};

/// One `coeff · literal` summand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: BigInt,
    pub literal: SimplexLiteral,
}

/// A signed multiset of simplex literals, kept verbatim.
///
/// Terms are never merged or cancelled implicitly: `2⟨3⟩ + ⟨2⟩ − ⟨2⟩ − 2⟨1⟩`
/// and `2⟨3⟩ − 2⟨1⟩` evaluate equally but are different combinations. Use
/// [`simplify`](Self::simplify) to merge equal literals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormalCombination {
    dim: usize,
    extended: bool,
    terms: Vec<Term>,
}

impl FormalCombination {
    pub fn new(dim: usize, extended: bool) -> Self {
        Self {
            dim,
            extended,
            terms: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_extended(&self) -> bool {
        self.extended
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Appends `coeff · ⟨scale⟩` with a positive literal of the combination's family.
    pub fn push(&mut self, coeff: impl Into<BigInt>, scale: i64) -> &mut Self {
        let literal = SimplexLiteral {
            dim: self.dim,
            scale,
            sign: Sign::Plus,
            extended: self.extended,
        };
        self.terms.push(Term {
            coeff: coeff.into(),
            literal,
        });
        self
    }

    pub fn with(mut self, coeff: impl Into<BigInt>, scale: i64) -> Self {
        self.push(coeff, scale);
        self
    }

    pub fn push_term(&mut self, term: Term) -> Result<()> {
        let lit = &term.literal;
        if lit.dim != self.dim || lit.extended != self.extended {
            return Err(Error::Representation(format!(
                "literal {lit} (dim {}) does not belong to a dim-{} combination{}",
                lit.dim,
                self.dim,
                if self.extended { " with A0" } else { "" }
            )));
        }
        self.terms.push(term);
        Ok(())
    }

    /// Concatenates `other` scaled by `factor`.
    pub fn extend_scaled(&mut self, other: &FormalCombination, factor: &BigInt) -> Result<()> {
        for t in &other.terms {
            self.push_term(Term {
                coeff: &t.coeff * factor,
                literal: t.literal,
            })?;
        }
        Ok(())
    }

    pub fn negated(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: -&t.coeff,
                literal: t.literal,
            })
            .collect();
        Self {
            terms,
            ..self.clone()
        }
    }

    /// `Σ coeff · value(literal)`; the empty combination is zero.
    ///
    /// Sums in checked machine integers when everything fits and falls back
    /// to exact rationals otherwise.
    pub fn eval(&self) -> Result<Element> {
        if let Some(coords) = self.eval_integral() {
            let zero = SimplexLiteral::zero_value(self.dim, self.extended);
            let coeffs = coords
                .into_iter()
                .map(|x| coeff::big(BigInt::from(x)))
                .collect();
            return Ok(zero.with_coeffs(coeffs));
        }
        self.eval_rational()
    }

    fn eval_integral(&self) -> Option<Vec<i128>> {
        let len = self.dim + usize::from(self.extended);
        let mut acc = vec![0i128; len];
        for t in &self.terms {
            let c = i128::try_from(&t.coeff).ok()?;
            let coords = t.literal.int_coords()?;
            if coords.len() != len {
                return None;
            }
            for (a, x) in acc.iter_mut().zip(coords) {
                *a = a.checked_add(c.checked_mul(x)?)?;
            }
        }
        Some(acc)
    }

    fn eval_rational(&self) -> Result<Element> {
        let mut acc = SimplexLiteral::zero_value(self.dim, self.extended);
        for t in &self.terms {
            if t.coeff.is_zero() {
                continue;
            }
            let v = t.literal.value()?.scale(&coeff::big(t.coeff.clone()));
            acc = acc.checked_add(&v)?;
        }
        Ok(acc)
    }

    /// Merges terms with identical literals (first-occurrence order) and drops
    /// zero coefficients.
    pub fn simplify(&self) -> Self {
        let mut merged: Vec<Term> = Vec::new();
        for t in &self.terms {
            match merged.iter_mut().find(|m| m.literal == t.literal) {
                Some(m) => m.coeff += &t.coeff,
                None => merged.push(t.clone()),
            }
        }
        merged.retain(|t| !t.coeff.is_zero());
        Self {
            terms: merged,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> CombinationJson {
        CombinationJson {
            dim: self.dim,
            extended: self.extended,
            terms: self
                .terms
                .iter()
                .map(|t| TermJson {
                    coeff: JsonInt(t.coeff.clone()),
                    scale: t.literal.scale,
                    sign: t.literal.sign,
                })
                .collect(),
        }
    }

    pub fn from_json(j: &CombinationJson) -> Result<Self> {
        if j.dim == 0 {
            return Err(Error::Argument("dimension must be at least 1".into()));
        }
        let mut out = Self::new(j.dim, j.extended);
        for t in &j.terms {
            let literal = SimplexLiteral {
                dim: j.dim,
                scale: t.scale,
                sign: t.sign,
                extended: j.extended,
            };
            out.push_term(Term {
                coeff: t.coeff.0.clone(),
                literal,
            })?;
        }
        Ok(out)
    }
}

impl fmt::Display for FormalCombination {
    /// Renders as `3*<2> - 3*<1>`; the empty combination renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let mag = t.coeff.abs();
            match (i, t.coeff.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}", t.literal)?;
        }
        Ok(())
    }
}

/// Wire form: `{"dim": m, "extended": bool, "terms": [{"coeff": c, "scale": n, "sign": ±1}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinationJson {
    pub dim: usize,
    pub extended: bool,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: JsonInt,
    pub scale: i64,
    pub sign: Sign,
}

/// An integer written as a JSON number when it fits in `i64`, else as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(JsonInt(BigInt::from(v))),
            Raw::Str(s) => s.parse().map(JsonInt).map_err(serde::de::Error::custom),
        }
    }
}
