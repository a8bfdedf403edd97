//! Border strips (ribbons) and the Murnaghan-Nakayama rule.
//!
//! Ribbons are handled on beta-sets: with `L` rows of padding, a partition
//! `λ` becomes the distinct integers `λ_j + L - 1 - j`. Adding a `k`-ribbon
//! moves one bead from `b` to an empty `b + k`; removing moves it to an
//! empty `b - k`. The sign is `(-1)` to the number of beads jumped over,
//! which equals the ribbon's height.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partition::Partition;

fn beta_set(lambda: &Partition, len: usize) -> Vec<usize> {
    (0..len).map(|j| lambda.part(j) + len - 1 - j).collect()
}

fn from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    let parts = beta.iter().enumerate().map(|(j, &b)| b + j + 1 - len).collect();
    Partition::new(parts).expect("beta-set decodes to a partition")
}

/// Every `ν ⊃ λ` with `ν/λ` a `k`-ribbon, with sign `(-1)^{height}`.
pub(crate) fn add_ribbons(lambda: &Partition, k: usize) -> Vec<(Partition, i32)> {
    let len = lambda.len() + k;
    let beta = beta_set(lambda, len);
    let mut out = Vec::new();
    for j in 0..len {
        let target = beta[j] + k;
        if beta.contains(&target) {
            continue;
        }
        // beads strictly between beta[j] and target
        let jumped = beta.iter().filter(|&&b| b > beta[j] && b < target).count();
        let mut moved = beta.clone();
        moved[j] = target;
        out.push((from_beta(moved), if jumped % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// Every `ν ⊂ λ` with `λ/ν` a `k`-ribbon, with sign `(-1)^{height}`.
pub(crate) fn remove_ribbons(lambda: &Partition, k: usize) -> Vec<(Partition, i32)> {
    let len = lambda.len();
    let beta = beta_set(lambda, len);
    let mut out = Vec::new();
    for j in 0..len {
        if beta[j] < k {
            continue;
        }
        let target = beta[j] - k;
        if beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&b| b > target && b < beta[j]).count();
        let mut moved = beta.clone();
        moved[j] = target;
        out.push((from_beta(moved), if jumped % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// `χ^λ(ρ)`: the irreducible character of `S_n` at cycle type `ρ`.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i128> {
    if lambda.size() != rho.size() {
        return Err(Error::Domain(format!(
            "character {lambda} evaluated on cycle type {rho} of a different size"
        )));
    }
    let mut memo = HashMap::new();
    Ok(character_rec(lambda, rho.parts(), &mut memo))
}

fn character_rec(lambda: &Partition, rho: &[usize], memo: &mut HashMap<(Partition, usize), i128>) -> i128 {
    let Some((&k, rest)) = rho.split_first() else {
        return 1;
    };
    if let Some(&v) = memo.get(&(lambda.clone(), rho.len())) {
        return v;
    }
    let mut total = 0i128;
    for (nu, sign) in remove_ribbons(lambda, k) {
        total += sign as i128 * character_rec(&nu, rest, memo);
    }
    memo.insert((lambda.clone(), rho.len()), total);
    total
}

/// `z_ρ = ∏ i^{m_i} m_i!`, the centralizer order of cycle type `ρ`.
pub fn z_rho(rho: &Partition) -> num_bigint::BigUint {
    let mut z = num_bigint::BigUint::from(1u32);
    for (value, count) in rho.multiplicities() {
        for c in 1..=count {
            z *= value as u64 * c as u64;
        }
    }
    z
}
