mod common;

use std::collections::HashSet;

use num_bigint::BigUint;
use proptest::prelude::*;

use common::{factorial, hook_length_count, partition_count};
use compfactors::lie::{lie_module, lie_multiplicity, truncation};
use compfactors::partition::{partitions_fitting, partitions_of, partitions_up_to};
use compfactors::tableau::{maj, standard_tableaux, StandardTableau};
use compfactors::{part, Partition};

#[test]
fn partition_counts_match_pentagonal_recurrence() {
    for n in 0..=30 {
        assert_eq!(partitions_of(n).len() as u64, partition_count(n), "n = {n}");
    }
}

#[test]
fn enumeration_is_decreasing_lex_and_distinct() {
    for n in 1..=12 {
        let ps = partitions_of(n);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(ps.iter().all(|p| p.size() == n));
    }
}

#[test]
fn pair_counts_are_squares_of_cumulative_counts() {
    let cumulative = |d: usize| (1..=d).map(partition_count).sum::<u64>();
    assert_eq!(cumulative(5).pow(2), 324);
    assert_eq!(cumulative(14).pow(2), 257_049);
    assert_eq!(partitions_up_to(1, 14).len(), 507);
}

#[test]
fn tableau_counts_match_hook_length_formula() {
    for n in 1..=8 {
        let mut sum_sq = BigUint::from(0u32);
        for lambda in partitions_of(n) {
            let f = standard_tableaux(&lambda).count();
            assert_eq!(BigUint::from(f), hook_length_count(&lambda), "{lambda}");
            sum_sq += BigUint::from(f * f);
        }
        assert_eq!(sum_sq, factorial(n));
    }
}

#[test]
fn major_index_example() {
    let t = StandardTableau::from_rows(vec![vec![1, 2, 4], vec![3, 5]]).unwrap();
    assert_eq!(maj(&t), 2 + 4);
    let t = StandardTableau::from_rows(vec![vec![1, 3], vec![2, 5], vec![4]]).unwrap();
    assert_eq!(maj(&t), 1 + 3);
}

#[test]
fn lie_dimension_is_factorial() {
    // dim ℒ_d as an S_d-module is (d-1)!
    for d in 1..=9 {
        let total: BigUint = partitions_of(d)
            .iter()
            .map(|l| BigUint::from(lie_multiplicity(l).unwrap()) * hook_length_count(l))
            .sum();
        assert_eq!(total, factorial(d - 1), "d = {d}");
    }
}

#[test]
fn lie_growth() {
    let want = [1, 2, 3, 5, 10, 22, 55, 149, 439, 1388];
    let t = truncation(10);
    for (d, &w) in (1..=10).zip(&want) {
        assert_eq!(t.count_up_to_size(d), w, "d = {d}");
    }
}

#[test]
fn lie_low_degrees() {
    assert_eq!(lie_module(2).unwrap().sorted_terms().len(), 1);
    assert_eq!(lie_module(3).unwrap().coefficient(&part![2, 1]), 1.into());
    assert_eq!(lie_module(6).unwrap().coefficient(&part![3, 2, 1]), 3.into());
}

fn small_partition() -> impl Strategy<Value = Partition> {
    (1usize..=9).prop_flat_map(|n| {
        let ps = partitions_of(n);
        (0..ps.len()).prop_map(move |i| ps[i].clone())
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in small_partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn fitting_filters_containment(bound in small_partition(), n in 0usize..8) {
        let got: HashSet<Partition> = partitions_fitting(n, &bound).into_iter().collect();
        let want: HashSet<Partition> = partitions_of(n).into_iter().filter(|p| bound.contains(p)).collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn text_form_round_trips(p in small_partition()) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn tableaux_are_distinct(p in small_partition()) {
        let all: Vec<_> = standard_tableaux(&p).collect();
        let set: HashSet<_> = all.iter().map(|t| t.rows().to_vec()).collect();
        prop_assert_eq!(set.len(), all.len());
    }
}
