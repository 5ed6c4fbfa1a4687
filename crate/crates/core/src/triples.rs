//! Signed triples and the hypercomplex algebra `T`.
//!
//! The triple `(n, k, l)` stands for `⟨n−k⟩ − ⟨k−l⟩`, which only depends on
//! the differences of its entries. In orthogonal coordinates it is
//! `((n−l)(n−2k+l), n−2k+l)`. Replacing the integers by `n + εk + ε*l` with
//! `ε, ε*` cube roots of unity in the algebra `T = Q(√3)⟨1, e, i, j⟩` gives
//! another way to write the same coordinates.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::closed::FormalCombination;
use crate::coeff::{self, Coefficient};
use crate::ring::{embed2, GeomElement2, OrthElement};

/// `(n, k, l)`, equal to `(n+x, k+x, l+x)` for every integer `x`.
#[derive(Clone, Copy, Debug)]
pub struct Triple {
    pub n: i64,
    pub k: i64,
    pub l: i64,
}

impl Triple {
    pub fn new(n: i64, k: i64, l: i64) -> Self {
        Self { n, k, l }
    }

    /// The representative with `l = 0`.
    pub fn normalize(&self) -> Self {
        Self::new(self.n - self.l, self.k - self.l, 0)
    }

    pub fn shifted(&self, x: i64) -> Self {
        Self::new(self.n + x, self.k + x, self.l + x)
    }

    /// `⟨n−k⟩ − ⟨k−l⟩`.
    pub fn to_ring(&self) -> GeomElement2 {
        &embed2(self.n - self.k) - &embed2(self.k - self.l)
    }

    /// `((n−l)(n−2k+l), n−2k+l)` over `(A₂, A₁)`, computed without the ring.
    pub fn to_orth(&self) -> OrthElement {
        let d = self.n - 2 * self.k + self.l;
        OrthElement::new(
            2,
            false,
            vec![coeff::int((self.n - self.l) * d), coeff::int(d)],
        )
        .expect("two coordinates for dimension 2")
    }

    /// `⟨n−k⟩ − ⟨k−l⟩` as a combination of two literals.
    pub fn combination(&self) -> FormalCombination {
        FormalCombination::new(2, false)
            .with(1, self.n - self.k)
            .with(-1, self.k - self.l)
    }
}

impl PartialEq for Triple {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.normalize(), other.normalize());
        a.n == b.n && a.k == b.k
    }
}

impl Eq for Triple {}

impl Hash for Triple {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let t = self.normalize();
        (t.n, t.k).hash(state);
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.k, self.l)
    }
}

pub fn triple_normalize(t: &Triple) -> Triple {
    t.normalize()
}

/// `(n₁n₂, n₁k₂ + n₂k₁ − 2k₁k₂, 0)` on normalized representatives.
pub fn triple_mul(s: &Triple, t: &Triple) -> Triple {
    let (s, t) = (s.normalize(), t.normalize());
    Triple::new(s.n * t.n, s.n * t.k + t.n * s.k - 2 * s.k * t.k, 0)
}

/// The closed addition of three triples: pairwise sums minus singletons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleSum {
    pub terms: Vec<(i64, Triple)>,
    pub total: Triple,
}

impl TripleSum {
    pub fn eval(&self) -> GeomElement2 {
        self.terms.iter().fold(GeomElement2::zero(), |acc, (c, t)| {
            &acc + &t.to_ring().scale(&coeff::int(*c))
        })
    }
}

/// `(n₁+n₂+n₃, k₁+k₂+k₃, 0)` written as the three pairwise sums minus the
/// three summands.
pub fn triple_add(t1: &Triple, t2: &Triple, t3: &Triple) -> TripleSum {
    let [a, b, c] = [t1.normalize(), t2.normalize(), t3.normalize()];
    let pair = |x: &Triple, y: &Triple| Triple::new(x.n + y.n, x.k + y.k, 0);
    TripleSum {
        terms: vec![
            (1, pair(&a, &b)),
            (1, pair(&a, &c)),
            (1, pair(&b, &c)),
            (-1, a),
            (-1, b),
            (-1, c),
        ],
        total: Triple::new(a.n + b.n + c.n, a.k + b.k + c.k, 0),
    }
}

/// `a + b√3` with rational `a, b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QSqrt3 {
    pub a: Coefficient,
    pub b: Coefficient,
}

impl QSqrt3 {
    pub fn new(a: Coefficient, b: Coefficient) -> Self {
        Self { a, b }
    }

    pub fn rational(a: Coefficient) -> Self {
        Self::new(a, coeff::zero())
    }

    pub fn zero() -> Self {
        Self::rational(coeff::zero())
    }

    pub fn one() -> Self {
        Self::rational(coeff::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl Add for &QSqrt3 {
    type Output = QSqrt3;
    fn add(self, o: &QSqrt3) -> QSqrt3 {
        QSqrt3::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl Sub for &QSqrt3 {
    type Output = QSqrt3;
    fn sub(self, o: &QSqrt3) -> QSqrt3 {
        QSqrt3::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl Mul for &QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, o: &QSqrt3) -> QSqrt3 {
        let three = coeff::int(3);
        QSqrt3::new(
            &self.a * &o.a + three * &self.b * &o.b,
            &self.a * &o.b + &self.b * &o.a,
        )
    }
}

impl Neg for &QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        QSqrt3::new(-&self.a, -&self.b)
    }
}

forward_owned_ops!(QSqrt3);

impl fmt::Display for QSqrt3 {
    /// `a+b√3`, omitting a zero part.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = coeff::format(&self.a);
        let b = coeff::format(&self.b.abs());
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => f.write_str(&a),
            (true, false) => {
                let sign = if self.b.is_negative() { "-" } else { "" };
                write!(f, "{sign}{b}√3")
            }
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(f, "{a}{sign}{b}√3")
            }
        }
    }
}

/// Basis index of `T`: `1, e, i, j`.
const BASIS: [&str; 4] = ["", "e", "i", "j"];

/// `PRODUCT[p][q] = (sign, index)` with `b_p b_q = sign · b_index`.
const PRODUCT: [[(i64, usize); 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (1, 0), (1, 3), (1, 2)],
    [(1, 2), (1, 3), (-1, 0), (-1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
];

/// An element `c₀ + c₁e + c₂i + c₃j` of `T` with `e² = 1`, `i² = j² = −1`,
/// `ij = −e`, `ej = i`, `ei = j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TElement {
    pub c: [QSqrt3; 4],
}

impl TElement {
    pub fn new(c: [QSqrt3; 4]) -> Self {
        Self { c }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(q: QSqrt3) -> Self {
        let mut out = Self::zero();
        out.c[0] = q;
        out
    }

    pub fn from_int(n: i64) -> Self {
        Self::scalar(QSqrt3::rational(coeff::int(n)))
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    fn unit(index: usize) -> Self {
        let mut out = Self::zero();
        out.c[index] = QSqrt3::one();
        out
    }

    pub fn e() -> Self {
        Self::unit(1)
    }

    pub fn i() -> Self {
        Self::unit(2)
    }

    pub fn j() -> Self {
        Self::unit(3)
    }

    pub fn scale(&self, q: &QSqrt3) -> Self {
        Self::new(self.c.clone().map(|x| &x * q))
    }
}

impl Add for &TElement {
    type Output = TElement;
    fn add(self, o: &TElement) -> TElement {
        TElement::new(std::array::from_fn(|p| &self.c[p] + &o.c[p]))
    }
}

impl Sub for &TElement {
    type Output = TElement;
    fn sub(self, o: &TElement) -> TElement {
        TElement::new(std::array::from_fn(|p| &self.c[p] - &o.c[p]))
    }
}

impl Mul for &TElement {
    type Output = TElement;
    fn mul(self, o: &TElement) -> TElement {
        let mut out = TElement::zero();
        for (p, x) in self.c.iter().enumerate() {
            for (q, y) in o.c.iter().enumerate() {
                let (sign, r) = PRODUCT[p][q];
                let term = x * y;
                out.c[r] = if sign > 0 {
                    &out.c[r] + &term
                } else {
                    &out.c[r] - &term
                };
            }
        }
        out
    }
}

impl Neg for &TElement {
    type Output = TElement;
    fn neg(self) -> TElement {
        TElement::new(self.c.clone().map(|x| -&x))
    }
}

forward_owned_ops!(TElement);

pub fn t_mul(u: &TElement, v: &TElement) -> TElement {
    u * v
}

impl fmt::Display for TElement {
    /// `(a+b√3) + (…)e + (…)i + (…)j`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, x) in self.c.iter().enumerate() {
            if p > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({x}){}", BASIS[p])?;
        }
        Ok(())
    }
}

/// `ε = (1 − √3 i)/2` and `ε* = (−1 − √3 i)/2`.
pub fn epsilon_pair() -> (TElement, TElement) {
    let half = coeff::ratio(1, 2);
    let minus_half_sqrt3 = QSqrt3::new(coeff::zero(), coeff::ratio(-1, 2));
    let eps = TElement::new([
        QSqrt3::rational(half.clone()),
        QSqrt3::zero(),
        minus_half_sqrt3.clone(),
        QSqrt3::zero(),
    ]);
    let eps_star = TElement::new([
        QSqrt3::rational(-half),
        QSqrt3::zero(),
        minus_half_sqrt3,
        QSqrt3::zero(),
    ]);
    (eps, eps_star)
}

/// With `z = n + εk + ε*l`, the coordinates `(z², z)` of `⟨z⟩ = z²A₂ + zA₁`.
pub fn triple_to_t(t: &Triple) -> (TElement, TElement) {
    let (eps, eps_star) = epsilon_pair();
    let z = &(&TElement::from_int(t.n) + &eps.scale(&QSqrt3::rational(coeff::int(t.k))))
        + &eps_star.scale(&QSqrt3::rational(coeff::int(t.l)));
    (&z * &z, z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{int, ratio};

    fn q(a: Coefficient, b: Coefficient) -> TElement {
        TElement::scalar(QSqrt3::new(a, b))
    }

    #[test]
    fn normalization() {
        assert_eq!(Triple::new(3, 1, 0).normalize(), Triple::new(3, 1, 0));
        let t = Triple::new(2, 0, -1).normalize();
        assert_eq!((t.n, t.k, t.l), (3, 1, 0));
        let t = Triple::new(0, -2, -3).normalize();
        assert_eq!((t.n, t.k, t.l), (3, 1, 0));
        assert_eq!(Triple::new(0, -2, -3), Triple::new(3, 1, 0));
        assert_ne!(Triple::new(3, 1, 0), Triple::new(3, 2, 0));
    }

    #[test]
    fn ring_values() {
        let t = Triple::new(3, 1, 0);
        assert_eq!(t.to_ring(), GeomElement2::from_ints(2, 1));
        assert_eq!(t.to_orth().coeffs(), &[int(3), int(1)]);
        assert_eq!(t.to_ring().to_orth(), t.to_orth());
        assert_eq!(t.shifted(5).to_ring(), t.to_ring());
        assert_eq!(
            Triple::new(1, 0, 0).to_ring(),
            GeomElement2::from_ints(1, 0)
        );
        assert_eq!(
            t.combination().eval().unwrap(),
            crate::ring::Element::Geom2(t.to_ring())
        );
    }

    #[test]
    fn products() {
        let t = Triple::new(3, 1, 0);
        let p = triple_mul(&t, &t);
        assert_eq!((p.n, p.k, p.l), (9, 4, 0));
        assert_eq!(p.to_orth().coeffs(), &[int(9), int(1)]);
        let p = triple_mul(&Triple::new(4, 0, 0), &Triple::new(-3, 0, 0));
        assert_eq!((p.n, p.k), (-12, 0));
        let p = triple_mul(&Triple::new(2, 1, 0), &Triple::new(2, 1, 0));
        assert_eq!((p.n, p.k), (4, 2));
    }

    #[test]
    fn sums() {
        let one = Triple::new(1, 0, 0);
        let s = triple_add(&one, &one, &one);
        assert_eq!(s.total, Triple::new(3, 0, 0));
        assert_eq!(s.eval(), embed2(3));
        let s = triple_add(&Triple::new(2, 1, 0), &Triple::new(3, 1, 0), &one);
        assert_eq!(s.total, Triple::new(6, 2, 0));
        assert_eq!(s.eval(), s.total.to_ring());
        let zero = Triple::new(0, 0, 0);
        let t = Triple::new(5, -2, 1);
        assert_eq!(triple_add(&t, &zero, &zero).total, t);
    }

    #[test]
    fn algebra_rules() {
        let (e, i, j) = (TElement::e(), TElement::i(), TElement::j());
        assert_eq!(&e * &i, j);
        assert_eq!(&i * &j, -&e);
        assert_eq!(&e * &e, TElement::one());
        assert_eq!(&i * &i, TElement::from_int(-1));
        assert_eq!(&j * &j, TElement::from_int(-1));
        assert_eq!(&e * &j, i);
        let basis = [TElement::one(), e, i, j];
        for x in &basis {
            for y in &basis {
                assert_eq!(x * y, y * x);
                for z in &basis {
                    assert_eq!(&(x * y) * z, x * &(y * z));
                }
            }
        }
    }

    #[test]
    fn epsilon_relations() {
        let (eps, eps_star) = epsilon_pair();
        assert_eq!(&eps * &eps, eps_star);
        // The product of the two roots is −1.
        assert_eq!(&eps * &eps_star, TElement::from_int(-1));
        let sum = &eps + &eps_star;
        assert_eq!(sum, TElement::i().scale(&QSqrt3::new(int(0), int(-1))));
        assert_eq!(&(&eps * &eps) * &eps, TElement::from_int(-1));
    }

    #[test]
    fn sqrt3_arithmetic() {
        let x = QSqrt3::new(int(1), int(2));
        let y = QSqrt3::new(ratio(1, 2), int(-1));
        assert_eq!(&x * &y, QSqrt3::new(ratio(-11, 2), int(0)));
        assert_eq!(x.to_string(), "1+2√3");
        assert_eq!(y.to_string(), "1/2-1√3");
        assert_eq!(QSqrt3::new(int(0), ratio(-1, 2)).to_string(), "-1/2√3");
    }

    #[test]
    fn display() {
        let (eps, _) = epsilon_pair();
        assert_eq!(eps.to_string(), "(1/2) + (0)e + (-1/2√3)i + (0)j");
        assert_eq!(
            q(int(2), int(1)).to_string(),
            "(2+1√3) + (0)e + (0)i + (0)j"
        );
    }

    #[test]
    fn triples_in_t() {
        // Real triples (k = l = 0) give (n², n).
        let (sq, z) = triple_to_t(&Triple::new(4, 0, 0));
        assert_eq!((sq, z), (TElement::from_int(16), TElement::from_int(4)));
        // 1 + ε + ε* = 1 − √3 i
        let (sq, z) = triple_to_t(&Triple::new(1, 1, 1));
        let minus_sqrt3 = QSqrt3::new(int(0), int(-1));
        assert_eq!(z, &TElement::one() + &TElement::i().scale(&minus_sqrt3));
        assert_eq!(
            sq,
            &TElement::from_int(-2) + &TElement::i().scale(&QSqrt3::new(int(0), int(-2)))
        );
    }

    #[test]
    fn orthogonal_forms_of_reflections() {
        for n in 1..=10 {
            let pos = embed2(n).to_orth();
            let neg = embed2(-n).to_orth();
            assert_eq!(pos.coeffs(), &[int(n * n), int(n)]);
            assert_eq!(neg.coeffs(), &[int(n * n), int(-n)]);
            let diff = (&embed2(n) - &embed2(-n)).to_orth();
            assert_eq!(diff.coeffs(), &[int(0), int(2 * n)]);
            assert_eq!(diff.neg().coeffs(), &[int(0), int(-2 * n)]);
            assert_eq!(pos.neg().coeffs(), &[int(-n * n), int(-n)]);
            assert_eq!(neg.neg().coeffs(), &[int(-n * n), int(n)]);
        }
    }
}
