//! Simplices of arbitrary dimension.
//!
//! Slicing the unit `m`-cube by the hyperplanes `x₁+…+x_m = k` gives `m` slabs;
//! the `k`-th has volume `A(m,k)/m!`, where `A(m,k)` is the Eulerian number.
//! The simplex with sides `n` is assembled from `(n+m−k)^(m)/m!` copies of the
//! `k`-th slab (`x^(m)` the falling factorial), which is Worpitzky's identity
//! read geometrically. Grouping these coefficients by powers of `n` gives the
//! orthogonal basis `A_m, …, A_1` in which `⟨n⟩ = (n^m, …, n)`.

use std::fmt;
use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::coeff::{self, Coefficient};
use crate::error::{Error, Result};
use crate::ring::OrthElement;

/// How to compute an Eulerian number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// `A(m,k) = (m−k)A(m−1,k−1) + (k+1)A(m−1,k)`, `A(1,0) = 1`.
    Recurrence,
    /// `A(m,k) = Σ_{j=0}^{k} (−1)^j C(m+1,j) (k+1−j)^m`.
    Explicit,
}

fn check_dim(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::Argument("dimension must be at least 1".into()));
    }
    if m > 400 {
        return Err(Error::Resource(format!("dimension {m} is too large")));
    }
    Ok(())
}

/// `A(m,k)`, the number of permutations of `m` elements with `k` ascents;
/// zero for `k` outside `[0, m−1]`.
pub fn eulerian(m: usize, k: i64, method: Method) -> Result<BigInt> {
    check_dim(m)?;
    if k < 0 || k >= m as i64 {
        return Ok(BigInt::zero());
    }
    let k = k as usize;
    Ok(match method {
        Method::Recurrence => eulerian_row(m)?.swap_remove(k),
        Method::Explicit => {
            let mut sum = BigInt::zero();
            for j in 0..=k {
                let term = binomial_u(m + 1, j) * BigInt::from(k + 1 - j).pow(m as u32);
                if j % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            sum
        }
    })
}

/// `A(m,0), …, A(m,m−1)` by the recurrence.
pub fn eulerian_row(m: usize) -> Result<Vec<BigInt>> {
    check_dim(m)?;
    let mut row = vec![BigInt::one()];
    for r in 2..=m {
        let prev = row;
        row = (0..r)
            .map(|k| {
                let left = if k >= 1 {
                    &prev[k - 1] * (r - k)
                } else {
                    BigInt::zero()
                };
                let right = prev.get(k).map_or_else(BigInt::zero, |v| v * (k + 1));
                left + right
            })
            .collect();
    }
    Ok(row)
}

fn binomial_u(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerianTable {
    pub m: usize,
    pub row: Vec<BigInt>,
}

impl EulerianTable {
    pub fn new(m: usize) -> Result<Self> {
        Ok(Self {
            m,
            row: eulerian_row(m)?,
        })
    }

    /// `A(m,k)`, zero out of range.
    pub fn get(&self, k: i64) -> BigInt {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.row.get(k))
            .cloned()
            .unwrap_or_default()
    }

    /// Slice volumes `A(m,k)/m!`.
    pub fn volumes(&self) -> Vec<Coefficient> {
        let total = factorial(self.m);
        self.row
            .iter()
            .map(|a| Coefficient::new(a.clone(), total.clone()))
            .collect()
    }

    pub fn to_json_rows(&self) -> serde_json::Value {
        let rows: Vec<_> = self
            .row
            .iter()
            .zip(self.volumes())
            .enumerate()
            .map(|(k, (a, v))| {
                serde_json::json!({"k": k, "eulerian": a.to_string(), "volume": coeff::format(&v)})
            })
            .collect();
        serde_json::json!({"m": self.m, "rows": rows})
    }
}

impl fmt::Display for EulerianTable {
    /// Aligned columns `k`, `A(m,k)`, `V(m,k)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vols: Vec<String> = self.volumes().iter().map(coeff::format).collect();
        let nums: Vec<String> = self.row.iter().map(|a| a.to_string()).collect();
        let wk = (self.m.saturating_sub(1)).to_string().len().max(1);
        let wa = nums
            .iter()
            .map(String::len)
            .max()
            .unwrap_or(1)
            .max("A(m,k)".len());
        let wv = vols
            .iter()
            .map(String::len)
            .max()
            .unwrap_or(1)
            .max("V(m,k)".len());
        writeln!(f, "{:>wk$}  {:>wa$}  {:>wv$}", "k", "A(m,k)", "V(m,k)")?;
        for (k, (a, v)) in nums.iter().zip(&vols).enumerate() {
            writeln!(f, "{k:>wk$}  {a:>wa$}  {v:>wv$}")?;
        }
        Ok(())
    }
}

pub fn factorial(m: usize) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * i)
}

/// `x(x−1)⋯(x−m+1)`; the empty product for `m = 0` is one.
pub fn falling_factorial<T>(x: &T, m: u32) -> T
where
    T: Clone + One + Sub<Output = T> + Mul<Output = T>,
{
    let mut acc = T::one();
    let mut term = x.clone();
    for _ in 0..m {
        acc = acc * term.clone();
        term = term - T::one();
    }
    acc
}

/// `C(a, m) = a^(m)/m!`, for any integer `a`.
pub fn binomial(a: &BigInt, m: usize) -> BigInt {
    falling_factorial(a, m as u32) / factorial(m)
}

/// Both sides of Worpitzky's identity for one `(n, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorpitzkyCheck {
    pub n: BigInt,
    pub m: usize,
    /// `Σ_{k=0}^{m−1} A(m,k) C(n+k, m)`.
    pub binomial_form: BigInt,
    /// `Σ_{k=1}^{m} A(m,k−1) (n+m−k)^(m)/m!`, counting slabs from the other end.
    pub falling_form: BigInt,
    pub power: BigInt,
}

impl WorpitzkyCheck {
    pub fn holds(&self) -> bool {
        self.binomial_form == self.power && self.falling_form == self.power
    }
}

pub fn worpitzky_check(n: &BigInt, m: usize) -> Result<WorpitzkyCheck> {
    let row = eulerian_row(m)?;
    let binomial_form = row
        .iter()
        .enumerate()
        .map(|(k, a)| a * binomial(&(n + k), m))
        .sum();
    let mf = factorial(m);
    let falling_form = (1..=m)
        .map(|k| &row[k - 1] * falling_factorial(&(n + m - k), m as u32) / &mf)
        .sum();
    Ok(WorpitzkyCheck {
        n: n.clone(),
        m,
        binomial_form,
        falling_form,
        power: n.pow(m as u32),
    })
}

/// `Σ A(m,k) C(n+k, m)`, which equals `n^m`.
pub fn worpitzky(n: i64, m: usize) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::Argument(format!(
            "Worpitzky sum takes n ≥ 1, got {n}"
        )));
    }
    let check = worpitzky_check(&BigInt::from(n), m)?;
    if !check.holds() {
        return Err(Error::Integrity(format!(
            "Worpitzky forms disagree at n = {n}, m = {m}: {} vs {} vs {}",
            check.binomial_form, check.falling_form, check.power
        )));
    }
    Ok(check.binomial_form)
}

/// `V(m,k) = A(m,k)/m!` for `k = 0..m−1`.
pub fn slice_volumes(m: usize) -> Result<Vec<Coefficient>> {
    Ok(EulerianTable::new(m)?.volumes())
}

/// Coordinates over the slab pieces `⟨1_1⟩, …, ⟨1_m⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceBasisVector {
    pub m: usize,
    pub coeffs: Vec<Coefficient>,
}

impl SliceBasisVector {
    /// Volume in units of the unit simplex: `Σ coeff_k A(m, k−1)`.
    pub fn volume(&self) -> Result<Coefficient> {
        let row = eulerian_row(self.m)?;
        Ok(self
            .coeffs
            .iter()
            .zip(row)
            .map(|(c, a)| c * coeff::big(a))
            .sum())
    }
}

/// `⟨n⟩ = Σ_k (n+m−k)^(m)/m! ⟨1_k⟩`.
pub fn simplex_coeffs(n: i64, m: usize) -> Result<SliceBasisVector> {
    check_dim(m)?;
    let mf = factorial(m);
    let coeffs = (1..=m)
        .map(|k| {
            let top = falling_factorial(&(BigInt::from(n) + m - k), m as u32);
            Coefficient::new(top, mf.clone())
        })
        .collect();
    Ok(SliceBasisVector { m, coeffs })
}

/// Rational polynomial coefficients, lowest degree first.
fn poly_mul_linear(p: &[Coefficient], root_shift: &Coefficient) -> Vec<Coefficient> {
    // p(n) · (n + root_shift)
    let mut out = vec![coeff::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i] += c * root_shift;
        out[i + 1] += c;
    }
    out
}

/// Rows `A_m, …, A_1`, each written over the slab pieces `⟨1_1⟩, …, ⟨1_m⟩`.
///
/// Entry `[r][k−1]` is the coefficient of `n^(m−r)` in `(n+m−k)^(m)/m!`.
pub fn basis_matrix(m: usize) -> Result<Vec<Vec<Coefficient>>> {
    check_dim(m)?;
    let mf = coeff::big(factorial(m));
    let mut rows = vec![vec![coeff::zero(); m]; m];
    for k in 1..=m {
        let mut poly = vec![coeff::one()];
        for i in 0..m {
            poly = poly_mul_linear(&poly, &coeff::int((m - k) as i64 - i as i64));
        }
        for (r, row) in rows.iter_mut().enumerate() {
            row[k - 1] = &poly[m - r] / &mf;
        }
    }
    Ok(rows)
}

/// Slab coordinates of an orthogonal element: `s_k = Σ_r a_r M[r][k]`.
pub fn orth_to_slice(a: &OrthElement) -> Result<SliceBasisVector> {
    if a.has_a0() {
        return Err(Error::Representation(
            "slab coordinates have no A0 component".into(),
        ));
    }
    let m = a.dim();
    let mat = basis_matrix(m)?;
    let coeffs = (0..m)
        .map(|k| {
            a.coeffs()
                .iter()
                .zip(&mat)
                .map(|(ar, row)| ar * &row[k])
                .sum()
        })
        .collect();
    Ok(SliceBasisVector { m, coeffs })
}

/// Inverse of [`orth_to_slice`], by exact Gaussian elimination.
pub fn slice_to_orth(s: &SliceBasisVector) -> Result<OrthElement> {
    let m = s.m;
    if s.coeffs.len() != m {
        return Err(Error::Representation(format!(
            "slab vector of dimension {m} has {} coordinates",
            s.coeffs.len()
        )));
    }
    let mat = basis_matrix(m)?;
    // Solve Mᵀ a = s.
    let mut aug: Vec<Vec<Coefficient>> = (0..m)
        .map(|k| {
            let mut row: Vec<Coefficient> = (0..m).map(|r| mat[r][k].clone()).collect();
            row.push(s.coeffs[k].clone());
            row
        })
        .collect();
    let solution = solve(&mut aug).ok_or_else(|| {
        Error::Integrity(format!("slab basis matrix of dimension {m} is singular"))
    })?;
    OrthElement::new(m, false, solution)
}

/// Gauss-Jordan on an `m × (m+1)` augmented matrix.
fn solve(aug: &mut [Vec<Coefficient>]) -> Option<Vec<Coefficient>> {
    let m = aug.len();
    for col in 0..m {
        let pivot = (col..m).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let p = aug[col][col].clone();
        for v in aug[col].iter_mut() {
            *v /= &p;
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *v -= p * &factor;
                }
            }
        }
    }
    Some(aug.iter().map(|row| row[m].clone()).collect())
}

/// Whether the matrix has an inverse over the rationals.
pub fn is_invertible(mat: &[Vec<Coefficient>]) -> bool {
    let m = mat.len();
    let mut aug: Vec<Vec<Coefficient>> = mat
        .iter()
        .map(|row| {
            let mut r = row.clone();
            r.push(coeff::zero());
            r
        })
        .collect();
    mat.iter().all(|r| r.len() == m) && solve(&mut aug).is_some()
}

/// `⟨n⟩` in dimension `m`: `(n^m, …, n)` over `A_m, …, A_1`.
pub fn nd_embed(n: i64, m: usize) -> Result<OrthElement> {
    check_dim(m)?;
    Ok(OrthElement::power_embed(&coeff::int(n), m, false))
}

/// Integer coefficients as a vector, for comparisons with the geometric bases.
pub fn coeffs_as_integers(v: &SliceBasisVector) -> Result<Vec<BigInt>> {
    v.coeffs.iter().map(coeff::to_integer).collect()
}
