use spined_core::construction::{
    build_spined_product, chen_construct, chen_round_trip, decompose_and_rebuild, extract_star, left_inverse_chen,
    ConstructionError,
};
use spined_core::families::{brandt_b2, full_transformation_monoid, left_zero, rees_matrix, semilattice_chain};
use spined_core::iso::are_isomorphic;
use spined_core::samples::{point_chen_data, sandwich_star_map};
use spined_core::search::search_transversals;
use spined_core::{analyze_transversal, is_left_adequate, ElementSubset, TransversalError};

fn subset(n: usize, items: &[usize]) -> ElementSubset {
    ElementSubset::from_indices(n, items.iter().copied()).unwrap()
}

#[test]
fn chain_with_only_its_top_has_no_decomposition() {
    let s = semilattice_chain(2).unwrap();
    let err = analyze_transversal(&s, &subset(2, &[1])).unwrap_err();
    assert!(matches!(err, TransversalError::NoDecomposition { .. }), "{err:?}");
}

#[test]
fn full_transformation_monoid_has_no_small_transversal() {
    let t3 = full_transformation_monoid(3).unwrap();
    assert!(search_transversals(&t3, 2).unwrap().is_empty());
}

#[test]
fn sandwich_gives_a_rees_matrix_semigroup_with_non_multiplicative_diagonal() {
    let t = build_spined_product(&sandwich_star_map()).unwrap();
    assert!(are_isomorphic(t.semigroup(), &rees_matrix(2, 2, 2).unwrap()));
    assert!(t.analysis().quasi_ideal());
    assert!(!t.analysis().multiplicative());
}

#[test]
fn brandt_rebuilds_from_its_full_transversal() {
    let b2 = brandt_b2();
    let a = analyze_transversal(&b2, &ElementSubset::full(b2.order())).unwrap();
    let rb = decompose_and_rebuild(&a).unwrap();
    assert!(rb.product.checks().all_passed());
    let sm = extract_star(&a).unwrap();
    assert_eq!(sm.core().order(), b2.order());
}

#[test]
fn chen_round_trip_needs_left_adequacy() {
    let s = rees_matrix(2, 2, 1).unwrap();
    assert!(!is_left_adequate(&s));
    let a = analyze_transversal(&s, &subset(4, &[0])).unwrap();
    assert!(matches!(chen_round_trip(&a), Err(ConstructionError::NotLeftAdequate)));
}

#[test]
fn extra_points_over_a_trivial_core_give_a_left_zero_band() {
    let t = chen_construct(&point_chen_data(2)).unwrap();
    assert!(are_isomorphic(t.semigroup(), &left_zero(3).unwrap()));
}

#[test]
fn left_inverse_chen_rejects_a_band_that_is_not_left_normal() {
    let core = semilattice_chain(1).unwrap();
    let band = rees_matrix(2, 2, 1).unwrap();
    let err = left_inverse_chen(&core, &band, &[0]).unwrap_err();
    assert!(matches!(err, ConstructionError::NotLeftNormal { .. }), "{err:?}");
}
