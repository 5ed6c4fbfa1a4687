//! Composite numbers as sums of triangles.
//!
//! `z > 1` is composite exactly when `⟨z⟩ = ⟨a⟩ + ⟨b⟩ − ⟨c⟩ − ⟨d⟩` for some
//! `a, b, c, d ∈ [1, z−1]`. Because `⟨n⟩` is linear in `n` and `n²`, this is the
//! pair of power-sum equations `a + b − c − d = z`, `a² + b² − c² − d² = z²`.
//! A factorization `z = (x+y)(m+n)` produces such a witness, and every witness
//! can be turned back into a factorization.

use serde::{Deserialize, Serialize};

use crate::closed::FormalCombination;
use crate::error::{Error, Result};

/// `(a, b, c, d)` with `⟨z⟩ = ⟨a⟩ + ⟨b⟩ − ⟨c⟩ − ⟨d⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub z: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl Witness {
    /// Checks both power-sum constraints and the range `[1, z−1]`.
    pub fn new(z: u64, a: u64, b: u64, c: u64, d: u64) -> Result<Self> {
        let w = Self { z, a, b, c, d };
        w.validate()?;
        Ok(w)
    }

    pub fn validate(&self) -> Result<()> {
        let Self { z, a, b, c, d } = *self;
        if z < 2 {
            return Err(Error::Integrity(format!(
                "witness for z = {z}: z must exceed 1"
            )));
        }
        if [a, b, c, d].iter().any(|&v| v == 0 || v >= z) {
            return Err(Error::Integrity(format!(
                "witness ({a},{b},{c},{d}) for z = {z}: entries must lie in [1, {}]",
                z - 1
            )));
        }
        let (z, a, b, c, d) = (z as i128, a as i128, b as i128, c as i128, d as i128);
        if a + b - c - d != z || a * a + b * b - c * c - d * d != z * z {
            return Err(Error::Integrity(format!(
                "({a},{b},{c},{d}) does not satisfy the power-sum equations for z = {z}"
            )));
        }
        Ok(())
    }

    /// `⟨a⟩ + ⟨b⟩ − ⟨c⟩ − ⟨d⟩` as a triangle combination.
    pub fn combination(&self) -> FormalCombination {
        let s = |v: u64| v as i64;
        FormalCombination::new(2, false)
            .with(1, s(self.a))
            .with(1, s(self.b))
            .with(-1, s(self.c))
            .with(-1, s(self.d))
    }

    pub fn as_array(&self) -> [u64; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

/// The lexicographically smallest witness `(a, b, c, d)` with `a ≤ b`, `c ≤ d`,
/// or `None` when `z` is prime.
///
/// For fixed `(a, b)` the pair `c ≤ d` is determined by its sum and sum of
/// squares, so the search is quadratic in `z`.
pub fn composite_witness(z: u64) -> Result<Option<Witness>> {
    if z <= 1 {
        return Err(Error::Argument(format!(
            "witness search needs z > 1, got {z}"
        )));
    }
    if z > 3_000_000_000 {
        return Err(Error::Resource(format!(
            "witness search for z = {z} is out of range"
        )));
    }
    let zi = z as i128;
    for a in 1..z {
        // s = a + b − z must be at least 2, so b ≥ z + 2 − a.
        let b_min = (z + 2).saturating_sub(a).max(a);
        for b in b_min..z {
            let (ai, bi) = (a as i128, b as i128);
            let s = ai + bi - zi;
            let q = ai * ai + bi * bi - zi * zi;
            // c + d = s and c² + d² = q give (d − c)² = 2q − s².
            let disc = 2 * q - s * s;
            if disc < 0 {
                continue;
            }
            let r = (disc as u128).isqrt() as i128;
            if r * r != disc || (s - r) % 2 != 0 {
                continue;
            }
            let c = (s - r) / 2;
            let d = (s + r) / 2;
            if c >= 1 && d < zi {
                return Ok(Some(Witness {
                    z,
                    a,
                    b,
                    c: c as u64,
                    d: d as u64,
                }));
            }
        }
    }
    Ok(None)
}

/// The witness `(xm+ym+xn, ym+xn+yn, ym, xn)` for `z = (x+y)(m+n)`.
pub fn witness_from_factors(x: u64, y: u64, m: u64, n: u64) -> Result<Witness> {
    if [x, y, m, n].contains(&0) {
        return Err(Error::Argument("factor parts must be positive".into()));
    }
    let z = (x + y) * (m + n);
    Witness::new(
        z,
        x * m + y * m + x * n,
        y * m + x * n + y * n,
        y * m,
        x * n,
    )
}

/// A factorization `z = p·q` recovered from a witness, with the intermediate
/// quantities of the construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorPair {
    pub p: u64,
    pub q: u64,
    /// `t = b − c − d`, so that `z·t = (t+c)(t+d)`.
    pub t: u64,
    pub t1: u64,
    pub t2: u64,
    pub s1: u64,
    pub s2: u64,
}

/// Recovers `z = p·q` from a witness.
///
/// With `t = b − c − d > 0` (swapping `a` and `b` if needed), `z·t = (t+c)(t+d)`.
/// Splitting `t = t₁t₂` with `c = s₁t₁`, `d = s₂t₂` gives
/// `z = t₁t₂ + s₁t₁ + s₂t₂ + s₁s₂ = (t₂+s₁)(t₁+s₂)`. Splits are tried in
/// ascending `t₁`; the factors are reported with `p ≤ q`.
pub fn factors_from_witness(w: &Witness) -> Result<FactorPair> {
    w.validate()?;
    let Witness { z, a, b, c, d } = *w;
    let t = [b, a]
        .into_iter()
        .find(|&v| v > c + d)
        .map(|v| v - c - d)
        .ok_or_else(|| {
            Error::Integrity(format!(
                "witness ({a},{b},{c},{d}): neither a nor b exceeds c + d"
            ))
        })?;
    for t1 in (1..=t).filter(|t1| t % t1 == 0 && c % t1 == 0) {
        let t2 = t / t1;
        if d % t2 != 0 {
            continue;
        }
        let (s1, s2) = (c / t1, d / t2);
        if t1 * t2 + s1 * t1 + s2 * t2 + s1 * s2 != z {
            continue;
        }
        let (f1, f2) = (t2 + s1, t1 + s2);
        let (p, q) = if f1 <= f2 { (f1, f2) } else { (f2, f1) };
        return Ok(FactorPair {
            p,
            q,
            t,
            t1,
            t2,
            s1,
            s2,
        });
    }
    Err(Error::Integrity(format!(
        "no divisor split of t = {t} reproduces z = {z}"
    )))
}

/// `Σ left^i = Σ right^i` for `i = 1, 2`.
pub fn tarry_escott2_check(left: &[i64], right: &[i64]) -> bool {
    let sums = |xs: &[i64]| {
        xs.iter().fold((0i128, 0i128), |(s1, s2), &x| {
            let x = x as i128;
            (s1 + x, s2 + x * x)
        })
    };
    sums(left) == sums(right)
}

/// Trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// `n = 2p` with `p` prime: the star product `⟨p ∗ 2⟩` exists only with the
/// prime on the left, so `n` is composite in one direction only.
pub fn is_one_sided_composite(n: u64) -> bool {
    n.is_multiple_of(2) && is_prime(n / 2)
}

/// Summary of the witness search for one `z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    pub z: u64,
    pub witness: Option<[u64; 4]>,
    pub factors: Option<[u64; 2]>,
    pub prime: bool,
}

pub fn factor_report(z: u64) -> Result<FactorReport> {
    let witness = composite_witness(z)?;
    let factors = match &witness {
        Some(w) => {
            let f = factors_from_witness(w)?;
            Some([f.p, f.q])
        }
        None => None,
    };
    Ok(FactorReport {
        z,
        witness: witness.map(|w| w.as_array()),
        factors,
        prime: witness.is_none(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{embed2, Element};

    /// Direct O(z³) search over `a ≤ b`, `c ≤ d` with `d` solved from the sum.
    fn brute_witness(z: u64) -> Option<[u64; 4]> {
        let z = z as i64;
        for a in 1..z {
            for b in a..z {
                for c in 1..z {
                    let d = a + b - c - z;
                    if d < c || d >= z {
                        continue;
                    }
                    if a * a + b * b - c * c - d * d == z * z {
                        return Some([a, b, c, d].map(|v| v as u64));
                    }
                }
            }
        }
        None
    }

    #[test]
    fn witness_examples() {
        assert_eq!(
            composite_witness(4).unwrap().unwrap().as_array(),
            [3, 3, 1, 1]
        );
        assert_eq!(composite_witness(5).unwrap(), None);
        assert_eq!(
            composite_witness(6).unwrap().unwrap().as_array(),
            [4, 5, 1, 2]
        );
        assert!(matches!(composite_witness(1), Err(Error::Argument(_))));
    }

    #[test]
    fn search_matches_brute_force() {
        for z in 2..=60 {
            let fast = composite_witness(z).unwrap().map(|w| w.as_array());
            assert_eq!(fast, brute_witness(z), "z = {z}");
        }
    }

    #[test]
    fn witnesses_from_factors() {
        assert_eq!(
            witness_from_factors(1, 1, 1, 2).unwrap().as_array(),
            [4, 5, 1, 2]
        );
        assert_eq!(
            witness_from_factors(1, 1, 1, 1).unwrap().as_array(),
            [3, 3, 1, 1]
        );
        let w = witness_from_factors(2, 1, 3, 1).unwrap();
        assert_eq!((w.z, w.as_array()), (12, [11, 6, 3, 2]));
        assert!(witness_from_factors(0, 1, 1, 1).is_err());
    }

    #[test]
    fn factor_extraction() {
        let f = factors_from_witness(&Witness::new(6, 4, 5, 1, 2).unwrap()).unwrap();
        assert_eq!(
            (f.p, f.q, f.t, f.t1, f.s1, f.t2, f.s2),
            (2, 3, 2, 1, 1, 2, 1)
        );
        let f = factors_from_witness(&Witness::new(4, 3, 3, 1, 1).unwrap()).unwrap();
        assert_eq!(
            (f.p, f.q, f.t, f.t1, f.t2, f.s1, f.s2),
            (2, 2, 1, 1, 1, 1, 1)
        );
        let w = witness_from_factors(1, 2, 1, 2).unwrap();
        let f = factors_from_witness(&w).unwrap();
        assert_eq!((f.p, f.q), (3, 3));
    }

    #[test]
    fn a_larger_than_b_is_handled() {
        // b − c − d = 1 here; swapping the roles also works for (6, 11, 3, 2).
        for w in [
            Witness::new(12, 11, 6, 3, 2).unwrap(),
            Witness::new(12, 6, 11, 3, 2).unwrap(),
        ] {
            let f = factors_from_witness(&w).unwrap();
            assert_eq!(f.p * f.q, 12);
            assert!(f.p > 1);
        }
    }

    #[test]
    fn invalid_witnesses_are_rejected() {
        assert!(matches!(
            Witness::new(6, 4, 5, 1, 1),
            Err(Error::Integrity(_))
        ));
        assert!(matches!(
            Witness::new(6, 6, 3, 1, 2),
            Err(Error::Integrity(_))
        ));
        let bogus = Witness {
            z: 6,
            a: 4,
            b: 5,
            c: 2,
            d: 1,
        };
        assert!(factors_from_witness(&bogus).is_ok());
        let bogus = Witness {
            z: 7,
            a: 4,
            b: 5,
            c: 1,
            d: 1,
        };
        assert!(factors_from_witness(&bogus).is_err());
    }

    #[test]
    fn tarry_escott() {
        assert!(tarry_escott2_check(&[6, 1, 2], &[4, 5]));
        assert!(tarry_escott2_check(&[1, 2], &[2, 1]));
        assert!(!tarry_escott2_check(&[1, 2], &[1, 3]));
    }

    #[test]
    fn one_sided() {
        assert!(is_one_sided_composite(6));
        assert!(is_one_sided_composite(4));
        assert!(!is_one_sided_composite(12));
        assert!(!is_one_sided_composite(9));
    }

    #[test]
    fn witness_combination_is_the_triangle() {
        for z in [4, 6, 9, 15, 28] {
            let w = composite_witness(z).unwrap().unwrap();
            assert_eq!(
                w.combination().eval().unwrap(),
                Element::Geom2(embed2(z as i64))
            );
        }
    }

    #[test]
    fn report_json() {
        let r = factor_report(6).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"z":6,"witness":[4,5,1,2],"factors":[2,3],"prime":false}"#
        );
        let r = factor_report(7).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"z":7,"witness":null,"factors":null,"prime":true}"#
        );
    }
}
