use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

use compfactors::analysis::check_structure;
use compfactors::baseline::{baseline_composition_factors, BaselineMode};
use compfactors::lie::truncation;
use compfactors::partition::{partitions_of, partitions_up_to};
use compfactors::puzzle::{
    brute_force_instructions, build_instructions, compute_table, iter_lr, mu_decompositions, phi, target_size, Engine,
    MuDecomposition,
};
use compfactors::symfunc::schur_product;
use compfactors::symfunc::SchurVector;
use compfactors::{part, Partition};

fn product_of(parts: &[Partition]) -> SchurVector {
    parts.iter().fold(SchurVector::basis(Partition::empty()), |acc, p| {
        let mut out = SchurVector::zero();
        for (l, c) in acc.iter() {
            out.add_scaled(&schur_product(l, p), c);
        }
        out
    })
}

#[test]
fn phi_pruning_matches_brute_force() {
    for d in 1..=7 {
        let lie = truncation(d);
        for theta in partitions_up_to(1, d) {
            let pruned = build_instructions(d, &theta, &lie);
            let full = brute_force_instructions(d, &theta, &lie);
            assert_eq!(pruned, full, "θ = {theta}, d = {d}");
            let bound = phi(&theta, d, &lie);
            for ins in &pruned {
                assert_eq!(target_size(&theta, ins, &lie).unwrap(), d);
                assert!(ins.indices.iter().all(|&i| lie.size_of(i).unwrap() as i64 <= bound));
                let distinct: BTreeSet<_> = ins.indices.iter().collect();
                assert_eq!(distinct.len(), ins.len());
            }
        }
    }
}

#[test]
fn decompositions_are_canonical_and_complete() {
    for n in 1..=6 {
        for mu in partitions_of(n) {
            for (theta, ds) in mu_decompositions(&mu) {
                let set: BTreeSet<_> = ds.iter().cloned().collect();
                assert_eq!(set.len(), ds.len());
                for d in &ds {
                    assert_eq!(d.shape(), &theta);
                    assert_eq!(MuDecomposition::new(d.parts().to_vec()).unwrap(), *d);
                    assert!(d.parts().iter().all(|p| mu.contains(p)));
                }
            }
        }
    }
}

#[test]
fn optimized_matches_baseline_to_degree_seven() {
    let opt = compute_table(7).unwrap();
    let base = baseline_composition_factors(7, BaselineMode::Truncated).unwrap();
    assert!(opt.diff(&base).is_empty());
    let full = baseline_composition_factors(4, BaselineMode::Full).unwrap();
    assert!(compute_table(4).unwrap().diff(&full).is_empty());
}

#[test]
fn structure_holds_to_degree_eight() {
    let t = compute_table(8).unwrap();
    assert!(check_structure(&t).is_empty());
    assert_eq!(t.pair_count(), 66 * 66);
}

#[test]
fn worked_decomposition_is_good() {
    assert_eq!(iter_lr(&part![2, 1], &[part![2], part![1]]).unwrap(), One::one());
    let t = Engine::new(5).composition_factors(5).unwrap();
    let base = baseline_composition_factors(5, BaselineMode::Full).unwrap();
    assert_eq!(t.get(&part![2, 1], &part![3, 2]), base.get(&part![2, 1], &part![3, 2]));
}

fn partition_up_to(n: usize) -> impl Strategy<Value = Partition> {
    (1..=n).prop_flat_map(|k| {
        let ps = partitions_of(k);
        (0..ps.len()).prop_map(move |i| ps[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn iter_lr_is_a_product_coefficient(a in partition_up_to(3), b in partition_up_to(3), c in partition_up_to(2)) {
        let parts = vec![a, b, c];
        let prod = product_of(&parts);
        for (mu, coeff) in prod.iter() {
            prop_assert_eq!(BigInt::from(iter_lr(mu, &parts).unwrap()), coeff.clone());
        }
        let n: usize = parts.iter().map(Partition::size).sum();
        for mu in partitions_of(n) {
            let alpha = iter_lr(&mu, &parts).unwrap();
            prop_assert_eq!(BigInt::from(alpha), prod.coefficient(&mu));
        }
    }
}
