use num_bigint::BigInt;
use num_traits::Pow;
use proptest::prelude::*;
use solids_core::coeff;
use solids_core::ring::{embed2, embed3};
use solids_core::simplex_nd::{
    basis_matrix, coeffs_as_integers, eulerian, eulerian_row, factorial, is_invertible, nd_embed,
    orth_to_slice, simplex_coeffs, slice_to_orth, slice_volumes, worpitzky, EulerianTable, Method,
};

#[test]
fn eulerian_rows_by_both_methods() {
    for m in 1..=14usize {
        let row = eulerian_row(m).unwrap();
        assert_eq!(row.len(), m);
        assert_eq!(row.iter().sum::<BigInt>(), factorial(m));
        for k in 0..m {
            assert_eq!(row[k], row[m - 1 - k]);
            assert_eq!(eulerian(m, k as i64, Method::Explicit).unwrap(), row[k]);
            assert_eq!(eulerian(m, k as i64, Method::Recurrence).unwrap(), row[k]);
        }
        assert_eq!(eulerian(m, -1, Method::Explicit).unwrap(), BigInt::from(0));
        assert_eq!(
            eulerian(m, m as i64, Method::Recurrence).unwrap(),
            BigInt::from(0)
        );
    }
    assert!(eulerian_row(0).is_err());
}

#[test]
fn slice_volumes_fill_the_cube() {
    for m in 1..=12 {
        let total: solids_core::Coefficient = slice_volumes(m).unwrap().into_iter().sum();
        assert_eq!(total, coeff::one());
    }
}

#[test]
fn table_display() {
    let text = EulerianTable::new(3).unwrap().to_string();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[2].split_whitespace().eq(["1", "4", "2/3"]));
}

#[test]
fn low_dimensions_match_the_geometric_bases() {
    for n in -15..=15 {
        let two = coeffs_as_integers(&simplex_coeffs(n, 2).unwrap()).unwrap();
        let g = embed2(n).to_integers().unwrap();
        assert_eq!(two, vec![g.0, g.1]);
        let three: Vec<_> = simplex_coeffs(n, 3).unwrap().coeffs;
        let g = embed3(n);
        assert_eq!(three, vec![g.x, g.y, g.z]);
    }
}

#[test]
fn basis_matrices_are_invertible() {
    for m in 1..=10 {
        assert!(is_invertible(&basis_matrix(m).unwrap()), "m = {m}");
    }
}

proptest! {
    #[test]
    fn worpitzky_sum_is_a_power(n in 1i64..5000, m in 1usize..12) {
        prop_assert_eq!(worpitzky(n, m).unwrap(), BigInt::from(n).pow(m as u32));
    }

    #[test]
    fn slab_coordinates_round_trip(n in -200i64..200, m in 1usize..8) {
        let orth = nd_embed(n, m).unwrap();
        let slab = orth_to_slice(&orth).unwrap();
        prop_assert_eq!(&slab, &simplex_coeffs(n, m).unwrap());
        prop_assert_eq!(slice_to_orth(&slab).unwrap(), orth);
        prop_assert_eq!(slab.volume().unwrap(), coeff::big(BigInt::from(n).pow(m as u32)));
    }
}
