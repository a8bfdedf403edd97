mod common;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use common::{hook_length_count, schur_dimension};
use compfactors::partition::partitions_of;
use compfactors::symfunc::{
    lr_coefficient, mn_character, plethysm, plethysm_vector, power_to_schur, schur_product, schur_to_power,
    schur_vector_to_power, skew_expansion, tensor_product, z_rho, PlethysmCache, SchurVector,
};
use compfactors::{part, Partition};

fn partition_of_size(lo: usize, hi: usize) -> impl Strategy<Value = Partition> {
    (lo..=hi).prop_flat_map(|n| {
        let ps = partitions_of(n);
        (0..ps.len()).prop_map(move |i| ps[i].clone())
    })
}

fn dimension(f: &SchurVector, n: u64) -> BigInt {
    f.iter().map(|(l, c)| c * BigInt::from(schur_dimension(l, n))).sum()
}

#[test]
fn worked_tensor_example() {
    let got = schur_product(&part![2], &part![2, 1]);
    let want = SchurVector::from_terms([(part![4, 1], 1), (part![3, 2], 1), (part![3, 1, 1], 1), (part![2, 2, 1], 1)]);
    assert_eq!(got, want);
}

#[test]
fn character_orthogonality() {
    for n in 1..=7 {
        let ps = partitions_of(n);
        for a in &ps {
            for b in &ps {
                let mut s = BigRational::zero();
                for rho in &ps {
                    let x = mn_character(a, rho).unwrap() * mn_character(b, rho).unwrap();
                    s += BigRational::new(BigInt::from(x), BigInt::from(z_rho(rho)));
                }
                let want = if a == b { BigRational::one() } else { BigRational::zero() };
                assert_eq!(s, want, "{a} {b}");
            }
        }
    }
}

#[test]
fn identity_character_is_dimension() {
    for n in 1..=8 {
        let id = Partition::new(vec![1; n]).unwrap();
        for lambda in partitions_of(n) {
            let chi = mn_character(&lambda, &id).unwrap();
            assert_eq!(BigUint::from(chi as u128), hook_length_count(&lambda));
        }
    }
}

#[test]
fn power_schur_round_trip_all_small() {
    for n in 0..=8 {
        for lambda in partitions_of(n) {
            let back = power_to_schur(&schur_to_power(&lambda)).unwrap();
            assert_eq!(back, SchurVector::basis(lambda));
        }
    }
}

#[test]
fn plethysm_identity_laws_all_small() {
    let cache = PlethysmCache::new();
    for n in 1..=6 {
        for lambda in partitions_of(n) {
            assert_eq!(*plethysm(&part![1], &lambda, &cache).unwrap(), SchurVector::basis(lambda.clone()));
            assert_eq!(*plethysm(&lambda, &part![1], &cache).unwrap(), SchurVector::basis(lambda.clone()));
        }
    }
}

#[test]
fn plethysm_dimensions_all_small() {
    // dim S_μ(S_λ(C^N)) = dim S_μ(C^{dim S_λ(C^N)})
    let cache = PlethysmCache::new();
    for a in 2..=3 {
        for b in 2..=3 {
            for mu in partitions_of(a) {
                for lambda in partitions_of(b) {
                    let f = plethysm(&mu, &lambda, &cache).unwrap();
                    assert_eq!(f.homogeneous_degree(), Some(a * b));
                    for n in 2..=3u64 {
                        let inner = schur_dimension(&lambda, n);
                        let want = schur_dimension(&mu, inner.try_into().unwrap());
                        assert_eq!(dimension(&f, n), BigInt::from(want), "{mu} ∘ {lambda}, N = {n}");
                    }
                }
            }
        }
    }
}

#[test]
fn plethysm_vector_dimension() {
    let inner = SchurVector::from_terms([(part![1], 1), (part![2, 1], 2)]);
    for mu in [part![2], part![1, 1], part![2, 1], part![3]] {
        let f = plethysm_vector(&mu, &inner).unwrap();
        assert!(f.is_nonnegative());
        for n in 2..=3u64 {
            let d = dimension(&inner, n);
            let want = schur_dimension(&mu, d.try_into().unwrap());
            assert_eq!(dimension(&f, n), BigInt::from(want));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lr_is_symmetric(a in partition_of_size(0, 4), b in partition_of_size(0, 4)) {
        let ab = schur_product(&a, &b);
        prop_assert_eq!(&ab, &schur_product(&b, &a));
        for (nu, c) in ab.iter() {
            prop_assert_eq!(BigInt::from(lr_coefficient(nu, &a, &b)), c.clone());
            prop_assert_eq!(lr_coefficient(nu, &b, &a), lr_coefficient(nu, &a, &b));
        }
    }

    #[test]
    fn lr_respects_conjugation(a in partition_of_size(0, 4), b in partition_of_size(0, 4)) {
        let ab = schur_product(&a, &b);
        let conj = schur_product(&a.conjugate(), &b.conjugate());
        prop_assert_eq!(ab.len(), conj.len());
        for (nu, c) in ab.iter() {
            prop_assert_eq!(conj.coefficient(&nu.conjugate()), c.clone());
        }
    }

    #[test]
    fn lr_matches_power_sum_product(a in partition_of_size(0, 4), b in partition_of_size(0, 4)) {
        let p = &schur_to_power(&a) * &schur_to_power(&b);
        prop_assert_eq!(power_to_schur(&p).unwrap(), schur_product(&a, &b));
    }

    #[test]
    fn product_dimensions_multiply(a in partition_of_size(0, 4), b in partition_of_size(0, 4), n in 1u64..5) {
        let f = schur_product(&a, &b);
        let want = schur_dimension(&a, n) * schur_dimension(&b, n);
        prop_assert_eq!(dimension(&f, n), BigInt::from(want));
    }

    #[test]
    fn skew_expansion_agrees_with_products(outer in partition_of_size(1, 6), inner in partition_of_size(0, 3)) {
        for (nu, c) in skew_expansion(&outer, &inner) {
            prop_assert_eq!(schur_product(&inner, &nu).coefficient(&outer), BigInt::from(c));
        }
    }

    #[test]
    fn power_round_trip_on_vectors(a in partition_of_size(0, 5), b in partition_of_size(0, 5), c in -3i64..4) {
        let f = SchurVector::from_terms([(a, 1), (b, c)]);
        prop_assert_eq!(power_to_schur(&schur_vector_to_power(&f)).unwrap(), f);
    }

    #[test]
    fn plethysm_is_positive_and_integral(mu in partition_of_size(1, 3), lambda in partition_of_size(1, 3)) {
        let cache = PlethysmCache::new();
        let f = plethysm(&mu, &lambda, &cache).unwrap();
        prop_assert!(f.iter().all(|(_, c)| c > &BigInt::zero()));
        prop_assert_eq!(f.homogeneous_degree(), Some(mu.size() * lambda.size()));
    }

    #[test]
    fn tensor_product_distributes(a in partition_of_size(0, 3), b in partition_of_size(0, 3), c in partition_of_size(0, 3)) {
        let bc = SchurVector::from_terms([(b.clone(), 1), (c.clone(), 1)]);
        let lhs = tensor_product(&SchurVector::basis(a.clone()), &bc);
        let rhs = &schur_product(&a, &b) + &schur_product(&a, &c);
        prop_assert_eq!(lhs, rhs);
    }
}
