//! Exact rational coefficients.
//!
//! Every coefficient in the crate is a [`BigRational`], which num-rational keeps
//! in lowest terms with a positive denominator. Integer-only contexts check the
//! denominator at their API boundary instead of using a second scalar type.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Coefficient = BigRational;

pub fn int(n: i64) -> Coefficient {
    BigRational::from_integer(BigInt::from(n))
}

pub fn big(n: BigInt) -> Coefficient {
    BigRational::from_integer(n)
}

pub fn ratio(p: i64, q: i64) -> Coefficient {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Coefficient {
    Coefficient::zero()
}

pub fn one() -> Coefficient {
    Coefficient::one()
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format(c: &Coefficient) -> String {
    c.to_string()
}

pub fn parse(s: &str) -> Result<Coefficient> {
    let t = s.trim();
    if t.is_empty() || t.contains('.') || t.contains(['e', 'E']) {
        return Err(Error::Argument(format!("not an exact fraction: {s:?}")));
    }
    if let Some((_, den)) = t.split_once('/') {
        if den.trim_start_matches(['+', '-']).chars().all(|c| c == '0') {
            return Err(Error::Argument(format!("zero denominator in {s:?}")));
        }
    }
    t.parse::<BigRational>()
        .map_err(|_| Error::Argument(format!("not an exact fraction: {s:?}")))
}

pub fn to_integer(c: &Coefficient) -> Result<BigInt> {
    if c.is_integer() {
        Ok(c.to_integer())
    } else {
        Err(Error::Domain(format!("{c} is not an integer")))
    }
}

/// `base^exp` for a non-negative exponent.
pub fn pow(base: &Coefficient, exp: u32) -> Coefficient {
    num_traits::pow(base.clone(), exp as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions_are_reduced_and_printed_exactly() {
        assert_eq!(format(&ratio(6, 4)), "3/2");
        assert_eq!(format(&ratio(-6, 3)), "-2");
        assert_eq!(format(&ratio(3, -9)), "-1/3");
    }

    #[test]
    fn parse_accepts_fractions_and_rejects_decimals() {
        assert_eq!(parse("7/16").unwrap(), ratio(7, 16));
        assert_eq!(parse("-5").unwrap(), int(-5));
        assert_eq!(parse("10/4").unwrap(), ratio(5, 2));
        assert!(parse("0.5").is_err());
        assert!(parse("1/0").is_err());
        assert!(parse("").is_err());
        assert!(parse("abc").is_err());
    }

    #[test]
    fn integer_boundary() {
        assert_eq!(to_integer(&int(4)).unwrap(), BigInt::from(4));
        assert!(matches!(to_integer(&ratio(1, 2)), Err(Error::Domain(_))));
    }
}
