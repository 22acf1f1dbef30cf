//! Property tests over random transformation semigroups on three points.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use spined_core::families::cyclic_group;
use spined_core::format::{parse, serialize, SemigroupDocument};
use spined_core::iso::find_isomorphism;
use spined_core::search::search_transversals;
use spined_core::transversal::basic_properties;
use spined_core::{green_r, l_star, r_star, ElementSubset, FiniteSemigroup, SemigroupError};

type Map = [usize; 3];

fn compose(f: &Map, g: &Map) -> Map {
    // apply f then g
    [g[f[0]], g[f[1]], g[f[2]]]
}

/// The semigroup generated by `gens` under composition.
fn transformation_semigroup(gens: &[Map]) -> FiniteSemigroup {
    let mut elems: Vec<Map> = Vec::new();
    for g in gens {
        if !elems.contains(g) {
            elems.push(*g);
        }
    }
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let p = compose(&elems[i], g);
            if !elems.contains(&p) {
                elems.push(p);
            }
        }
        i += 1;
    }
    elems.sort();
    let pos = |m: Map| elems.iter().position(|&e| e == m).unwrap();
    FiniteSemigroup::from_fn(elems.len(), |a, b| pos(compose(&elems[a], &elems[b]))).unwrap()
}

fn semigroups() -> impl Strategy<Value = FiniteSemigroup> {
    prop::collection::vec(prop::array::uniform3(0usize..3), 1..=3).prop_map(|g| transformation_semigroup(&g))
}

fn mul1(s: &FiniteSemigroup, a: usize, b: usize) -> usize {
    let n = s.order();
    if a == n {
        b
    } else if b == n {
        a
    } else {
        s.mul(a, b)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn r_star_matches_definition(s in semigroups()) {
        let n = s.order();
        let r = r_star(&s);
        for a in 0..n {
            for b in 0..n {
                let def = (0..=n).all(|x| (0..=n).all(|y| (mul1(&s, x, a) == mul1(&s, y, a)) == (mul1(&s, x, b) == mul1(&s, y, b))));
                prop_assert_eq!(r.related(a, b), def, "pair {} {}", a, b);
            }
        }
    }

    #[test]
    fn r_star_is_a_left_congruence_containing_r(s in semigroups()) {
        let (r, plain) = (r_star(&s), green_r(&s));
        prop_assert!(plain.is_finer_than(&r));
        for a in 0..s.order() {
            for b in (0..s.order()).filter(|&b| r.related(a, b)) {
                for c in 0..s.order() {
                    prop_assert!(r.related(s.mul(c, a), s.mul(c, b)));
                }
            }
        }
    }

    #[test]
    fn l_star_is_a_right_congruence(s in semigroups()) {
        let l = l_star(&s);
        for a in 0..s.order() {
            for b in (0..s.order()).filter(|&b| l.related(a, b)) {
                for c in 0..s.order() {
                    prop_assert!(l.related(s.mul(a, c), s.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn documents_round_trip(s in semigroups(), picks in prop::collection::vec(any::<bool>(), 27)) {
        let n = s.order();
        let sub = ElementSubset::from_indices(n, (0..n).filter(|&x| picks[x])).unwrap();
        let doc = SemigroupDocument::new(s).with_subset("chosen", sub);
        let text = serialize(&doc);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(serialize(&back), text);
    }

    #[test]
    fn found_transversals_satisfy_factorisation_properties(s in semigroups()) {
        for f in search_transversals(&s, 1).unwrap() {
            let report = basic_properties(&f.analysis);
            prop_assert!(report.all_passed(), "{}", report);
        }
    }

    #[test]
    fn relabelled_tables_are_isomorphic(s in semigroups(), seed in any::<u64>()) {
        let n = s.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut rng = StdRng::seed_from_u64(seed);
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let t = FiniteSemigroup::from_fn(n, |a, b| perm[s.mul(inv[a], inv[b])]).unwrap();
        let iso = find_isomorphism(&s, &t).expect("relabelling is an isomorphism");
        prop_assert!(s.homomorphism_witness(&t, &iso).is_none());
    }
}

#[test]
fn corrupted_group_tables_are_rejected_with_a_genuine_witness() {
    let g = cyclic_group(5).unwrap();
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..200 {
        let mut rows = g.rows();
        let (a, b) = (rng.gen_range(0..5), rng.gen_range(0..5));
        rows[a][b] = (rows[a][b] + rng.gen_range(1..5)) % 5;
        match FiniteSemigroup::validate(&rows, None) {
            Err(SemigroupError::NonAssociative { a, b, c, left, right }) => {
                assert_eq!(rows[rows[a][b]][c], left);
                assert_eq!(rows[a][rows[b][c]], right);
                assert_ne!(left, right);
            }
            other => panic!("expected a non-associativity witness, got {other:?}"),
        }
    }
}

#[test]
fn ragged_and_out_of_range_tables_are_rejected() {
    assert!(matches!(FiniteSemigroup::validate(&[vec![0, 0], vec![0]], None), Err(SemigroupError::Shape { .. })));
    assert!(matches!(FiniteSemigroup::validate(&[vec![2]], None), Err(SemigroupError::OutOfRange { .. })));
}
