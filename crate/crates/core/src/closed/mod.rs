//! Formal combinations of simplex literals and the closed addition laws.
//!
//! Every builder returns the combination verbatim, one term per summand of the
//! law, so that evaluation checks the law itself rather than a simplified
//! consequence of it.

mod combination;

pub use combination::{CombinationJson, FormalCombination, JsonInt, Term, TermJson};

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Inclusion-exclusion combination whose value is `⟨Σ values⟩`.
///
/// `values` has `m + 1` entries. Every non-empty proper subset `S` contributes
/// `(−1)^(m−|S|) ⟨Σ_S⟩`, larger subsets first and subsets of equal size in
/// lexicographic order of their indices. In the extended families the empty
/// subset also contributes `(−1)^m ⟨0⟩`, which carries the `A_0` coordinate;
/// for `m = 1` this is `⟨n+k⟩₁₀ = ⟨n⟩₁₀ + ⟨k⟩₁₀ − ⟨0⟩₁₀`.
pub fn closed_sum(values: &[i64], m: usize, extended: bool) -> Result<FormalCombination> {
    if m == 0 {
        return Err(Error::Argument("dimension must be at least 1".into()));
    }
    if values.len() != m + 1 {
        return Err(Error::Argument(format!(
            "closed sum in dimension {m} takes {} values, got {}",
            m + 1,
            values.len()
        )));
    }
    if m > 20 {
        return Err(Error::Resource(format!(
            "closed sum in dimension {m} has too many subsets"
        )));
    }
    let mut out = FormalCombination::new(m, extended);
    let smallest = if extended { 0 } else { 1 };
    for size in (smallest..=m).rev() {
        let sign: i64 = if (m - size).is_multiple_of(2) { 1 } else { -1 };
        for subset in combinations(m + 1, size) {
            let scale: i64 = subset.iter().map(|&i| values[i]).sum();
            out.push(sign, scale);
        }
    }
    Ok(out)
}

/// Index subsets of `{0, …, n−1}` with `size` elements, in lexicographic order.
fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..size).collect();
    if size > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..size).rev().find(|&i| cur[i] < n - size + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..size {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// `⟨n+k+t⟩ + ⟨n+l+t⟩ + ⟨k+l+t⟩ − ⟨n+t⟩ − ⟨k+t⟩ − ⟨l+t⟩ + ⟨t⟩`, whose value is
/// `⟨n+k+l+t⟩` for triangles and for `⟨·⟩₀`.
pub fn closed_sum_shift(n: i64, k: i64, l: i64, t: i64, extended: bool) -> FormalCombination {
    FormalCombination::new(2, extended)
        .with(1, n + k + t)
        .with(1, n + l + t)
        .with(1, k + l + t)
        .with(-1, n + t)
        .with(-1, k + t)
        .with(-1, l + t)
        .with(1, t)
}

/// The shifted law solved for `⟨n+k+t⟩`, `⟨n+t⟩` and `⟨t⟩` in turn.
///
/// Each entry is `(lhs, rhs)`: the scale of the isolated literal and the
/// combination equal to it.
pub fn shift_rearrangements(
    n: i64,
    k: i64,
    l: i64,
    t: i64,
    extended: bool,
) -> [(i64, FormalCombination); 3] {
    let c = || FormalCombination::new(2, extended);
    [
        (
            n + k + t,
            c().with(1, n + k + l + t)
                .with(1, n + t)
                .with(1, k + t)
                .with(-1, n + l + t)
                .with(-1, k + l + t)
                .with(-1, t)
                .with(1, l + t),
        ),
        (
            n + t,
            c().with(1, n + l + t)
                .with(1, n + k + t)
                .with(1, t)
                .with(-1, n + k + l + t)
                .with(-1, l + t)
                .with(-1, k + t)
                .with(1, k + l + t),
        ),
        (
            t,
            c().with(1, l + t)
                .with(1, k + t)
                .with(1, n + t)
                .with(-1, k + l + t)
                .with(-1, n + l + t)
                .with(-1, n + k + t)
                .with(1, n + k + l + t),
        ),
    ]
}

/// Both sides of `3⟨t⟩ + ⟨−3t⟩ = 3⟨−t⟩ + ⟨3t⟩`.
pub fn reflection_identity(t: i64, extended: bool) -> (FormalCombination, FormalCombination) {
    let c = FormalCombination::new(2, extended);
    (
        c.clone().with(3, t).with(1, -3 * t),
        c.with(3, -t).with(1, 3 * t),
    )
}

/// `Σ_{i<j} ⟨m_i+m_j⟩ − (N−2) Σ_i ⟨m_i⟩` over `N ≥ 3` values; its value is `⟨Σ m_i⟩`.
pub fn pairwise_sum(values: &[i64]) -> Result<FormalCombination> {
    if values.len() < 3 {
        return Err(Error::Argument(format!(
            "pairwise sum needs at least 3 values, got {}",
            values.len()
        )));
    }
    let mut out = FormalCombination::new(2, false);
    for pair in combinations(values.len(), 2) {
        out.push(1, values[pair[0]] + values[pair[1]]);
    }
    let factor = -(values.len() as i64 - 2);
    for &v in values {
        out.push(factor, v);
    }
    Ok(out)
}

/// `⟨n ∗ m⟩ = n(n−1)/2 ⟨2m⟩ − n(n−2) ⟨m⟩`, the product built from copies of
/// `⟨2m⟩` and `⟨m⟩` only. Defined for `n > 2`: there is a `⟨n ∗ 2⟩` but no
/// `⟨2 ∗ n⟩`.
pub fn star_mul(n: i64, m: i64) -> Result<FormalCombination> {
    if n <= 2 {
        return Err(Error::Domain(format!(
            "star product <{n} * {m}> needs a left factor above 2; the operation is one-sided"
        )));
    }
    let n = BigInt::from(n);
    Ok(FormalCombination::new(2, false)
        .with(&n * (&n - 1i64) / 2, 2 * m)
        .with(-(&n * (&n - 2i64)), m))
}

/// `⟨n⟩` written over `⟨1⟩, …, ⟨m⟩` with polynomial coefficients in `n`.
///
/// * `m = 2`: `n(n−1)/2 ⟨2⟩ − n(n−2) ⟨1⟩`;
/// * `m = 3`: `n(n−1)(n−2)/6 ⟨3⟩ − n(n−1)(n−3)/2 ⟨2⟩ + n(n−2)(n−3)/2 ⟨1⟩`.
pub fn arithmetic_form(n: i64, m: usize) -> Result<FormalCombination> {
    let b = BigInt::from(n);
    match m {
        2 => Ok(FormalCombination::new(2, false)
            .with(&b * (&b - 1i64) / 2, 2)
            .with(-(&b * (&b - 2i64)), 1)),
        3 => Ok(FormalCombination::new(3, false)
            .with(&b * (&b - 1i64) * (&b - 2i64) / 6, 3)
            .with(-(&b * (&b - 1i64) * (&b - 3i64) / 2i64), 2)
            .with(&b * (&b - 2i64) * (&b - 3i64) / 2, 1)),
        _ => Err(Error::Argument(format!(
            "arithmetic form is available in dimensions 2 and 3, not {m}"
        ))),
    }
}

/// `⟨n⟩₀` over `⟨k+1⟩₀, ⟨k⟩₀, ⟨k−1⟩₀`:
/// `(n−k)(n−k+1)/2 ⟨k+1⟩₀ − (n−k−1)(n−k+1) ⟨k⟩₀ + (n−k)(n−k−1)/2 ⟨k−1⟩₀`.
///
/// `k = 1` gives the arithmetic form, `k = 0` the geometric form of `⟨n⟩₀`.
/// Zero coefficients are kept.
pub fn form20(n: i64, k: i64) -> FormalCombination {
    let d = BigInt::from(n) - k;
    FormalCombination::new(2, true)
        .with(&d * (&d + 1i64) / 2, k + 1)
        .with(-((&d - 1i64) * (&d + 1i64)), k)
        .with(&d * (&d - 1i64) / 2, k - 1)
}

/// `⟨n⟩₁₀ = (n−k)⟨k+1⟩₁₀ − (n−k−1)⟨k⟩₁₀`.
pub fn seg_form(n: i64, k: i64) -> FormalCombination {
    let d = BigInt::from(n) - k;
    FormalCombination::new(1, true)
        .with(d.clone(), k + 1)
        .with(-(d - 1i64), k)
}

/// `⟨n+2k⟩ + ⟨2n+k⟩ − ⟨n⟩ − ⟨k⟩`, the closed sum of `(n, k, n+k)` after the
/// `⟨n+k⟩` terms cancel; its value is `⟨2n+2k⟩`.
pub fn double_pair_sum(n: i64, k: i64) -> FormalCombination {
    FormalCombination::new(2, false)
        .with(1, n + 2 * k)
        .with(1, 2 * n + k)
        .with(-1, n)
        .with(-1, k)
}
