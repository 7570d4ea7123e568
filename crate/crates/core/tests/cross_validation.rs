use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use polyrep::identities::{is_sum_of_three_positive, legendre_exception};
use polyrep::{
    build_graph, count_oracle, count_p3, count_table, decompositions, nontrivial_values, script_a,
    IndexTriple, PolygonOrder, Representation,
};

fn order(s: u64) -> PolygonOrder {
    PolygonOrder::new(s).unwrap()
}

#[test]
fn table_agrees_with_pointwise_counts() {
    let mut rng = StdRng::seed_from_u64(17);
    for s in [3u64, 4, 5, 8, 12] {
        for max in [50u64, 5_000, 60_000] {
            let table = count_table(order(s), max).unwrap();
            for _ in 0..200 {
                let n = rng.random_range(0..=max);
                assert_eq!(
                    table.get(n),
                    Some(count_p3(order(s), n)),
                    "s={s} max={max} n={n}"
                );
            }
        }
    }
}

#[test]
fn zero_inclusive_squares_vanish_exactly_on_exceptions() {
    for m in 0..=10_000u64 {
        assert_eq!(
            count_oracle(order(4), m, true) == 0,
            legendre_exception(m),
            "m={m}"
        );
    }
}

#[test]
fn script_a_hosts_every_witness() {
    for s in [3u64, 4, 6] {
        for n in 0..=600u64 {
            let hosts = script_a(order(s), n);
            let class = Representation::standard(order(s)).class_of(n).unwrap();
            assert!(hosts.iter().all(|w| class.contains(w)));
            for d in decompositions(order(s), n, false) {
                let t = IndexTriple::from_ranks(d.ranks[0], d.ranks[1], d.ranks[2]).unwrap();
                assert!(hosts.contains(&t.vertex()), "s={s} n={n} {t}");
            }
        }
    }
}

#[test]
fn component_criterion_agrees_with_counting() {
    for s in [3u64, 4, 5] {
        let g = build_graph(order(s), 1000).unwrap();
        let values = nontrivial_values(&g);
        for m in 0..=1000u64 {
            assert_eq!(
                values.contains(&m),
                is_sum_of_three_positive(order(s), m),
                "s={s} m={m}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn path_classes_match_oracle(s in 3u64..=40, n in 0u64..=20_000) {
        prop_assert_eq!(count_p3(order(s), n), count_oracle(order(s), n, false));
    }

    #[test]
    fn zero_inclusive_dominates(s in 3u64..=12, n in 0u64..=5_000) {
        let with_zero = decompositions(order(s), n, true);
        let positive = count_oracle(order(s), n, false);
        prop_assert!(with_zero.len() as u64 >= positive);
        if with_zero.iter().all(|d| d.ranks[2] > 0) {
            prop_assert_eq!(with_zero.len() as u64, positive);
        }
    }
}
