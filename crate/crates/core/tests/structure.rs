use mmp132_core::perm::reduce;
use mmp132_core::{
    avoiders, brute_force_q, catalan, Coord, PatternSpec, Permutation,
    DEFAULT_ENUMERATION_CAP as CAP,
};
use proptest::prelude::*;

fn permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn coord() -> impl Strategy<Value = Coord> {
    prop_oneof![Just(Coord::Empty), (0u32..4).prop_map(Coord::Nat)]
}

fn pattern() -> impl Strategy<Value = PatternSpec> {
    (coord(), coord(), coord(), coord()).prop_map(|(a, b, c, d)| PatternSpec::new(a, b, c, d))
}

proptest! {
    #[test]
    fn quadrants_partition_the_other_points(sigma in permutation(12)) {
        for q in sigma.quadrant_profile() {
            prop_assert_eq!(q.total() as usize, sigma.len() - 1);
        }
    }

    #[test]
    fn inversion_swaps_quadrants_two_and_four(sigma in permutation(10), p in pattern()) {
        prop_assert_eq!(sigma.mmp_count(&p), sigma.inverse().mmp_count(&p.inverse_symmetric()));
    }

    #[test]
    fn inverse_is_involutive(sigma in permutation(12)) {
        prop_assert_eq!(sigma.inverse().inverse(), sigma);
    }

    #[test]
    fn reduction_keeps_relative_order(word in proptest::collection::hash_set(-50i64..50, 0..10)) {
        let word: Vec<i64> = word.into_iter().collect();
        let red = reduce(&word).unwrap();
        for i in 0..word.len() {
            for j in 0..word.len() {
                prop_assert_eq!(word[i] < word[j], red.values()[i] < red.values()[j]);
            }
        }
    }

    #[test]
    fn pattern_text_roundtrips(p in pattern()) {
        prop_assert_eq!(p.to_string().parse::<PatternSpec>().unwrap(), p);
    }
}

#[test]
fn avoiders_are_distinct_132_avoiders_counted_by_catalan() {
    for n in 0..=9 {
        let all: Vec<Permutation> = avoiders(n, CAP).unwrap().collect();
        assert_eq!(all.len() as u64, u64::try_from(catalan(n as u64)).unwrap());
        assert!(all.iter().all(Permutation::is_132_avoiding));
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
    }
}

#[test]
fn rows_evaluate_to_catalan_at_one() {
    for s in [
        "0,0,0,0", "2,1,2,1", "e,e,e,e", "4,2,e,e", "1,e,0,2", "0,0,1,0",
    ] {
        let p: PatternSpec = s.parse().unwrap();
        for n in 0..=8 {
            let row = brute_force_q(n, &p, CAP).unwrap();
            assert_eq!(
                row.coeffs().iter().sum::<num_bigint::BigInt>(),
                catalan(n as u64),
                "{s} n = {n}"
            );
        }
    }
}

#[test]
fn empty_quadrants() {
    let sigma = Permutation::new(vec![1, 2]).unwrap();
    assert_eq!(sigma.mmp_count(&"e,e,e,e".parse().unwrap()), 0);
    assert_eq!(
        Permutation::new(vec![1])
            .unwrap()
            .mmp_count(&"e,e,e,e".parse().unwrap()),
        1
    );
    assert_eq!(
        Permutation::new(vec![1, 2, 3])
            .unwrap()
            .mmp_count(&PatternSpec::nat(0, 0, 1, 0)),
        2
    );
}
