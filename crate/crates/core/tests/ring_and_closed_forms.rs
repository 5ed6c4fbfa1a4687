use num_bigint::BigInt;
use proptest::prelude::*;
use solids_core::closed::{
    arithmetic_form, closed_sum, closed_sum_shift, double_pair_sum, form20, pairwise_sum,
    reflection_identity, seg_form, shift_rearrangements, star_mul, FormalCombination,
};
use solids_core::coeff;
use solids_core::ring::{
    embed2, embed3, orth_mul, Element, GeomElement2, GeomElement3, OrthElement, SimplexLiteral,
};
use solids_core::{Coefficient, Error};

/// `(n^m, …, n)` and a trailing `1` when extended, from integer powers.
fn power_oracle(n: i64, m: usize, extended: bool) -> Vec<Coefficient> {
    let n = BigInt::from(n);
    let mut out: Vec<Coefficient> = (1..=m as u32).rev().map(|e| coeff::big(n.pow(e))).collect();
    if extended {
        out.push(coeff::one());
    }
    out
}

fn orth_of(e: &Element) -> Vec<Coefficient> {
    e.to_orth().coeffs().to_vec()
}

fn g2(x: i64, y: i64) -> GeomElement2 {
    GeomElement2::from_ints(x, y)
}

fn g3(x: i64, y: i64, z: i64) -> GeomElement3 {
    GeomElement3::from_ints(x, y, z)
}

proptest! {
    #[test]
    fn triangle_ring_is_a_commutative_ring(
        a in (-50i64..50, -50i64..50), b in (-50i64..50, -50i64..50), c in (-50i64..50, -50i64..50)
    ) {
        let (a, b, c) = (g2(a.0, a.1), g2(b.0, b.1), g2(c.0, c.1));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &GeomElement2::one(), a.clone());
        prop_assert_eq!(&a - &a, GeomElement2::zero());
    }

    #[test]
    fn tetrahedron_ring_is_a_commutative_ring(
        a in (-20i64..20, -20i64..20, -20i64..20),
        b in (-20i64..20, -20i64..20, -20i64..20),
        c in (-20i64..20, -20i64..20, -20i64..20),
    ) {
        let (a, b, c) = (g3(a.0, a.1, a.2), g3(b.0, b.1, b.2), g3(c.0, c.1, c.2));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &GeomElement3::one(), a.clone());
    }

    #[test]
    fn orthogonal_coordinates_are_a_homomorphism(
        a in (-50i64..50, -50i64..50), b in (-50i64..50, -50i64..50),
        p in (-20i64..20, -20i64..20, -20i64..20), q in (-20i64..20, -20i64..20, -20i64..20),
    ) {
        let (a, b) = (g2(a.0, a.1), g2(b.0, b.1));
        prop_assert_eq!((&a * &b).to_orth(), orth_mul(&a.to_orth(), &b.to_orth()).unwrap());
        prop_assert_eq!(GeomElement2::from_orth(&a.to_orth()).unwrap(), a);
        let (p, q) = (g3(p.0, p.1, p.2), g3(q.0, q.1, q.2));
        prop_assert_eq!((&p * &q).to_orth(), orth_mul(&p.to_orth(), &q.to_orth()).unwrap());
        prop_assert_eq!(GeomElement3::from_orth(&p.to_orth()).unwrap(), p);
    }

    #[test]
    fn embeddings_are_multiplicative(n in -10_000i64..10_000, m in -10_000i64..10_000) {
        prop_assert_eq!(&embed2(n) * &embed2(m), embed2(n * m));
        prop_assert_eq!(&embed3(n) * &embed3(m), embed3(n * m));
    }

    #[test]
    fn literal_values_are_power_vectors(n in -1000i64..1000, m in 1usize..7, extended: bool) {
        let lit = SimplexLiteral { dim: m, scale: n, sign: solids_core::ring::Sign::Plus, extended };
        prop_assert_eq!(orth_of(&lit.value().unwrap()), power_oracle(n, m, extended));
        let neg: Vec<_> = power_oracle(n, m, extended).into_iter().map(|x| -x).collect();
        prop_assert_eq!(orth_of(&lit.negated().value().unwrap()), neg);
    }

    #[test]
    fn closed_sum_evaluates_to_the_total(
        m in 1usize..6,
        values in prop::collection::vec(-40i64..40, 6),
        extended: bool,
    ) {
        let values = &values[..m + 1];
        let combo = closed_sum(values, m, extended).unwrap();
        let total: i64 = values.iter().sum();
        prop_assert_eq!(orth_of(&combo.eval().unwrap()), power_oracle(total, m, extended));
    }

    #[test]
    fn shifted_law_and_its_rearrangements(
        n in -30i64..30, k in -30i64..30, l in -30i64..30, t in -30i64..30, extended: bool
    ) {
        let combo = closed_sum_shift(n, k, l, t, extended);
        prop_assert_eq!(orth_of(&combo.eval().unwrap()), power_oracle(n + k + l + t, 2, extended));
        for (lhs, rhs) in shift_rearrangements(n, k, l, t, extended) {
            prop_assert_eq!(orth_of(&rhs.eval().unwrap()), power_oracle(lhs, 2, extended));
        }
    }

    #[test]
    fn reflection_identity_holds(t in -1000i64..1000, extended: bool) {
        let (lhs, rhs) = reflection_identity(t, extended);
        prop_assert_eq!(lhs.eval().unwrap(), rhs.eval().unwrap());
    }

    #[test]
    fn pairwise_sum_of_many_values(values in prop::collection::vec(-50i64..50, 3..9)) {
        let total: i64 = values.iter().sum();
        let v = pairwise_sum(&values).unwrap().eval().unwrap();
        prop_assert_eq!(orth_of(&v), power_oracle(total, 2, false));
    }

    #[test]
    fn star_product_and_arithmetic_forms(n in 3i64..500, m in -500i64..500) {
        prop_assert_eq!(star_mul(n, m).unwrap().eval().unwrap(), Element::Geom2(embed2(n * m)));
        prop_assert_eq!(arithmetic_form(n, 2).unwrap().eval().unwrap(), Element::Geom2(embed2(n)));
        prop_assert_eq!(arithmetic_form(n, 3).unwrap().eval().unwrap(), Element::Geom3(embed3(n)));
        prop_assert_eq!(arithmetic_form(-n, 3).unwrap().eval().unwrap(), Element::Geom3(embed3(-n)));
    }

    #[test]
    fn forms_around_any_centre(n in -300i64..300, k in -300i64..300) {
        prop_assert_eq!(orth_of(&form20(n, k).eval().unwrap()), power_oracle(n, 2, true));
        prop_assert_eq!(orth_of(&seg_form(n, k).eval().unwrap()), power_oracle(n, 1, true));
        prop_assert_eq!(orth_of(&double_pair_sum(n, k).eval().unwrap()), power_oracle(2 * n + 2 * k, 2, false));
    }

    #[test]
    fn json_round_trip_and_simplify(
        terms in prop::collection::vec((-1000i64..1000, -30i64..30), 0..12),
        dim in 1usize..5,
        extended: bool,
    ) {
        let mut c = FormalCombination::new(dim, extended);
        for (coef, scale) in terms {
            c.push(coef, scale);
        }
        let back = FormalCombination::from_json(&c.to_json()).unwrap();
        prop_assert_eq!(&back, &c);
        let simple = c.simplify();
        prop_assert!(simple.terms().len() <= c.terms().len());
        prop_assert_eq!(simple.eval().unwrap(), c.eval().unwrap());
    }
}

#[test]
fn star_product_is_one_sided() {
    assert!(matches!(star_mul(2, 5), Err(Error::Domain(_))));
    assert!(matches!(star_mul(1, 5), Err(Error::Domain(_))));
    // ⟨5 ∗ 2⟩ exists even though ⟨2 ∗ 5⟩ does not, and both equal ⟨10⟩.
    assert_eq!(
        star_mul(5, 2).unwrap().eval().unwrap(),
        Element::Geom2(embed2(10))
    );
}

#[test]
fn closed_sum_argument_errors() {
    assert!(matches!(
        closed_sum(&[1, 2], 2, false),
        Err(Error::Argument(_))
    ));
    assert!(matches!(
        closed_sum(&[1], 0, false),
        Err(Error::Argument(_))
    ));
    assert!(matches!(
        closed_sum(&[0; 22], 21, false),
        Err(Error::Resource(_))
    ));
    assert!(pairwise_sum(&[1, 2]).is_err());
    assert!(arithmetic_form(3, 4).is_err());
}

#[test]
fn mixing_families_is_rejected() {
    let a = Element::Geom2(embed2(2));
    let b = Element::Orth(OrthElement::power_embed(&coeff::int(2), 2, true));
    assert!(a.checked_add(&b).is_err());
    assert!(a.checked_mul(&b).is_err());
}
