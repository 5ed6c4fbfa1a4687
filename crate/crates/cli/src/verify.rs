//! Identity checks over ranges of arguments.

use std::fmt;
use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::BigInt;
use solids_core::closed::{
    closed_sum, closed_sum_shift, reflection_identity, shift_rearrangements, star_mul,
    FormalCombination,
};
use solids_core::number_theory::{composite_witness, factors_from_witness, is_prime};
use solids_core::ring::{Element, SimplexLiteral};
use solids_core::simplex_nd::worpitzky_check;
use solids_core::{Error, Result};

/// Largest number of cases a single `verify` run will check.
pub const MAX_CASES: u128 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    /// `⟨n+k+l⟩` from pairwise sums and singletons, plain and `_0`; args (n, k, l).
    Closed2,
    /// The shifted law and its three rearrangements; args (n, k, l, t).
    #[value(name = "closed2-shift")]
    Closed2Shift,
    /// The tetrahedral law over four summands; args (n, k, l, p).
    Closed3,
    /// The inclusion-exclusion law for m = 1..5 over sorted tuples, plain and extended.
    #[value(name = "closed-nd")]
    ClosedNd,
    /// `3⟨t⟩ + ⟨−3t⟩ = 3⟨−t⟩ + ⟨3t⟩`, plain and `_0`; arg t.
    Eq6,
    /// `⟨n ∗ m⟩ = ⟨nm⟩` for n > 2; args (n, m).
    Star,
    /// Both Worpitzky sums equal n^m for m = 1..8; arg n ≥ 1.
    Worpitzky,
    /// A composite witness exists exactly for composite z and yields its factors; arg z ≥ 2.
    Theorem1,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Closed2 => "closed2",
            Identity::Closed2Shift => "closed2-shift",
            Identity::Closed3 => "closed3",
            Identity::ClosedNd => "closed-nd",
            Identity::Eq6 => "eq6",
            Identity::Star => "star",
            Identity::Worpitzky => "worpitzky",
            Identity::Theorem1 => "theorem1",
        }
    }
}

/// Largest magnitude of a range end, so that sums of arguments stay exact in `i64`.
pub const MAX_ARG: i64 = 1_000_000_000;

/// `A..B`, both ends included.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityRange {
    pub lo: i64,
    pub hi: i64,
}

impl FromStr for IdentityRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (a, b) = s
            .split_once("..")
            .ok_or_else(|| format!("expected A..B, got '{s}'"))?;
        let lo: i64 = a
            .trim()
            .parse()
            .map_err(|e| format!("bad range start '{a}': {e}"))?;
        let hi: i64 = b
            .trim()
            .parse()
            .map_err(|e| format!("bad range end '{b}': {e}"))?;
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        if lo.abs() > MAX_ARG || hi.abs() > MAX_ARG {
            return Err(format!("range ends must lie within ±{MAX_ARG}"));
        }
        Ok(Self { lo, hi })
    }
}

impl fmt::Display for IdentityRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub identity: Identity,
    pub range: IdentityRange,
    pub cases: u64,
    /// The first failing case and what went wrong.
    pub counterexample: Option<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn summary(&self) -> String {
        let name = self.identity.name();
        let cases = match self.cases {
            1 => "1 case".to_string(),
            n => format!("{n} cases"),
        };
        match &self.counterexample {
            None => format!("PASS {name} over {}: {cases}", self.range),
            Some(c) => format!(
                "FAIL {name} over {} at case {}: {c}",
                self.range, self.cases
            ),
        }
    }
}

/// Flips the sign of the last term: the mutant used by `--inject-fault`.
fn mutate(c: &FormalCombination, fault: bool) -> FormalCombination {
    if !fault || c.is_empty() {
        return c.clone();
    }
    let mut out = FormalCombination::new(c.dim(), c.is_extended());
    let last = c.terms().len() - 1;
    for (i, t) in c.terms().iter().enumerate() {
        let mut t = t.clone();
        if i == last {
            t.coeff = -t.coeff;
        }
        out.push_term(t).expect("same family");
    }
    out
}

fn literal_value(dim: usize, scale: i64, extended: bool) -> Result<Element> {
    SimplexLiteral {
        extended,
        ..SimplexLiteral::new(dim, scale)
    }
    .value()
}

/// `Ok(None)` when the combination has the expected value.
fn compare(c: &FormalCombination, expected: &Element, fault: bool) -> Result<Option<String>> {
    let c = mutate(c, fault);
    let got = c.eval()?;
    Ok((got != *expected).then(|| {
        format!(
            "{c} evaluates to {} instead of {}",
            got.to_json_string(),
            expected.to_json_string()
        )
    }))
}

struct Runner {
    cases: u64,
    counterexample: Option<String>,
}

impl Runner {
    /// Records one case; returns `false` once a counterexample is known.
    fn check(&mut self, label: impl FnOnce() -> String, outcome: Option<String>) -> bool {
        self.cases += 1;
        if let Some(msg) = outcome {
            self.counterexample = Some(format!("{}: {msg}", label()));
            return false;
        }
        true
    }
}

/// Tuples of `len` entries in `[lo, hi]` in lexicographic order; with
/// `sorted`, only non-decreasing ones.
struct Tuples {
    lo: i64,
    hi: i64,
    sorted: bool,
    next: Option<Vec<i64>>,
}

fn tuples(lo: i64, hi: i64, len: usize, sorted: bool) -> Tuples {
    Tuples {
        lo,
        hi,
        sorted,
        next: Some(vec![lo; len]),
    }
}

impl Iterator for Tuples {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let cur = self.next.take()?;
        if let Some(p) = (0..cur.len()).rev().find(|&p| cur[p] < self.hi) {
            let mut succ = cur.clone();
            succ[p] += 1;
            for q in p + 1..succ.len() {
                succ[q] = if self.sorted { succ[p] } else { self.lo };
            }
            self.next = Some(succ);
        }
        Some(cur)
    }
}

fn multichoose(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n + i) / (i + 1))
}

fn case_count(identity: Identity, width: u128) -> u128 {
    match identity {
        Identity::Closed2 => width.pow(3),
        Identity::Closed2Shift | Identity::Closed3 => width.saturating_pow(4),
        Identity::ClosedNd => (1..=5)
            .map(|m| multichoose(width, m + 1))
            .fold(0u128, u128::saturating_add),
        Identity::Eq6 | Identity::Worpitzky | Identity::Theorem1 => width,
        Identity::Star => width.pow(2),
    }
}

pub fn run(identity: Identity, range: IdentityRange, fault: bool) -> Result<Report> {
    let (lo, hi) = (range.lo, range.hi);
    let width = (i128::from(hi) - i128::from(lo) + 1) as u128;
    let total = case_count(identity, width);
    if total > MAX_CASES {
        return Err(Error::Resource(format!(
            "{total} cases for {} over {range} exceed the limit of {MAX_CASES}",
            identity.name()
        )));
    }
    let mut r = Runner {
        cases: 0,
        counterexample: None,
    };
    match identity {
        Identity::Closed2 | Identity::Closed3 => {
            let m = if identity == Identity::Closed2 { 2 } else { 3 };
            let families: &[bool] = if m == 2 { &[false, true] } else { &[false] };
            'outer: for v in tuples(lo, hi, m + 1, false) {
                for &ext in families {
                    let c = closed_sum(&v, m, ext)?;
                    let outcome = compare(&c, &literal_value(m, v.iter().sum(), ext)?, fault)?;
                    if !r.check(|| format!("args {v:?}"), outcome) {
                        break 'outer;
                    }
                }
            }
        }
        Identity::Closed2Shift => {
            'outer: for v in tuples(lo, hi, 4, false) {
                let (n, k, l, t) = (v[0], v[1], v[2], v[3]);
                for ext in [false, true] {
                    let mut checks = vec![(n + k + l + t, closed_sum_shift(n, k, l, t, ext))];
                    checks.extend(shift_rearrangements(n, k, l, t, ext));
                    for (lhs, c) in checks {
                        let outcome = compare(&c, &literal_value(2, lhs, ext)?, fault)?;
                        if !r.check(|| format!("(n, k, l, t) = ({n}, {k}, {l}, {t})"), outcome) {
                            break 'outer;
                        }
                    }
                }
            }
        }
        Identity::ClosedNd => {
            'outer: for m in 1..=5usize {
                for v in tuples(lo, hi, m + 1, true) {
                    for ext in [false, true] {
                        let c = mutate(&closed_sum(&v, m, ext)?, fault);
                        let expected = literal_value(m, v.iter().sum(), ext)?;
                        let got = c.eval()?;
                        let outcome = (got.to_orth() != expected.to_orth())
                            .then(|| format!("{c} evaluates to {}", got.to_json_string()));
                        if !r.check(|| format!("m = {m}, args {v:?}"), outcome) {
                            break 'outer;
                        }
                    }
                }
            }
        }
        Identity::Eq6 => {
            'outer: for t in lo..=hi {
                for ext in [false, true] {
                    let (lhs, rhs) = reflection_identity(t, ext);
                    let outcome = compare(&lhs, &rhs.eval()?, fault)?;
                    if !r.check(|| format!("t = {t}"), outcome) {
                        break 'outer;
                    }
                }
            }
        }
        Identity::Star => {
            'outer: for n in lo.max(3)..=hi {
                for m in lo..=hi {
                    let outcome =
                        compare(&star_mul(n, m)?, &literal_value(2, n * m, false)?, fault)?;
                    if !r.check(|| format!("(n, m) = ({n}, {m})"), outcome) {
                        break 'outer;
                    }
                }
            }
        }
        Identity::Worpitzky => {
            'outer: for n in lo.max(1)..=hi {
                for m in 1..=8usize {
                    let mut c = worpitzky_check(&BigInt::from(n), m)?;
                    if fault {
                        c.power += 1;
                    }
                    let outcome = (!c.holds()).then(|| {
                        format!(
                            "sums {} and {} against n^m = {}",
                            c.binomial_form, c.falling_form, c.power
                        )
                    });
                    if !r.check(|| format!("(n, m) = ({n}, {m})"), outcome) {
                        break 'outer;
                    }
                }
            }
        }
        Identity::Theorem1 => {
            for z in lo.max(2)..=hi {
                let z = z as u64;
                let prime = is_prime(z) != fault;
                let outcome = match composite_witness(z)? {
                    None if prime => None,
                    None => Some("composite without a witness".to_string()),
                    Some(w) if prime => Some(format!("prime with witness {:?}", w.as_array())),
                    Some(w) => {
                        let f = factors_from_witness(&w)?;
                        (f.p * f.q != z || f.p < 2)
                            .then(|| format!("witness gives factors {} * {}", f.p, f.q))
                    }
                };
                if !r.check(|| format!("z = {z}"), outcome) {
                    break;
                }
            }
        }
    }
    Ok(Report {
        identity,
        range,
        cases: r.cases,
        counterexample: r.counterexample,
    })
}
