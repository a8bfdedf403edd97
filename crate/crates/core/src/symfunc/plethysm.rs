//! Plethysm through the power-sum basis:
//! `p_k ∘ p_m = p_{km}`, `p_k ∘ (f + g) = p_k∘f + p_k∘g`,
//! `p_k ∘ (fg) = (p_k∘f)(p_k∘g)`.
//!
//! `plethysm(outer, inner)` is the expansion of `S_outer(S_inner(V))`, so
//! `plethysm([2], [1,1]) = s[1,1,1,1] + s[2,2]`.

use std::sync::Arc;

use dashmap::DashMap;
use num_bigint::Sign;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::power::{power_to_schur, schur_to_power, PowerSumVector};
use crate::symfunc::schur::SchurVector;

/// Memo of plethysms and of power-sum expansions of single Schur functions.
///
/// Concurrent workers may race to fill the same key; every writer computes
/// the same value, so the last write wins harmlessly.
#[derive(Default)]
pub struct PlethysmCache {
    entries: DashMap<(Partition, Partition), Arc<SchurVector>>,
    power: DashMap<Partition, Arc<PowerSumVector>>,
}

impl PlethysmCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, outer: &Partition, inner: &Partition) -> Option<Arc<SchurVector>> {
        self.entries.get(&(outer.clone(), inner.clone())).map(|v| v.clone())
    }

    pub(crate) fn power_expansion(&self, lambda: &Partition) -> Arc<PowerSumVector> {
        if let Some(v) = self.power.get(lambda) {
            return v.clone();
        }
        let v = Arc::new(schur_to_power(lambda));
        self.power.insert(lambda.clone(), v.clone());
        v
    }
}

/// `S_outer(S_inner(V))` in the Schur basis, memoized in `cache`.
pub fn plethysm(outer: &Partition, inner: &Partition, cache: &PlethysmCache) -> Result<Arc<SchurVector>> {
    if outer.is_empty() || inner.is_empty() {
        return Err(Error::Domain(format!(
            "plethysm needs nonempty partitions, got {outer} ∘ {inner}"
        )));
    }
    if let Some(hit) = cache.get(outer, inner) {
        return Ok(hit);
    }
    let value = if inner.parts() == [1] {
        SchurVector::basis(outer.clone())
    } else if outer.parts() == [1] {
        SchurVector::basis(inner.clone())
    } else {
        let outer_p = cache.power_expansion(outer);
        let inner_p = cache.power_expansion(inner);
        compose(&outer_p, &inner_p, None)?
    };
    check_positive(&value, outer, inner)?;
    let value = Arc::new(value);
    cache.entries.insert((outer.clone(), inner.clone()), value.clone());
    Ok(value)
}

/// `S_outer` applied to the representation whose character is `inner`.
pub fn plethysm_vector(outer: &Partition, inner: &SchurVector) -> Result<SchurVector> {
    plethysm_vector_up_to(outer, inner, None, &PlethysmCache::new())
}

/// As [`plethysm_vector`], optionally discarding every term of degree above
/// `max_degree`. Degrees only grow under products, so the surviving terms
/// are exact.
pub fn plethysm_vector_up_to(
    outer: &Partition,
    inner: &SchurVector,
    max_degree: Option<usize>,
    cache: &PlethysmCache,
) -> Result<SchurVector> {
    if outer.is_empty() {
        return Err(Error::Domain("plethysm with an empty outer partition".into()));
    }
    if !inner.is_nonnegative() {
        return Err(Error::Domain(format!("plethysm into a non-representation {inner}")));
    }
    let mut inner_p = PowerSumVector::zero();
    for (lambda, c) in inner.iter() {
        inner_p.add_scaled(&cache.power_expansion(lambda), &BigRational::from_integer(c.clone()));
    }
    let outer_p = cache.power_expansion(outer);
    compose(&outer_p, &inner_p, max_degree)
}

/// `outer ∘ inner` for power-sum inputs, then back to Schur.
///
/// The outer monomials are visited in sorted order and products over
/// shared prefixes of `ρ` are reused.
fn compose(outer: &PowerSumVector, inner: &PowerSumVector, max_degree: Option<usize>) -> Result<SchurVector> {
    let max_part = outer.iter().map(|(rho, _)| rho.first()).max().unwrap_or(0);
    let substituted: Vec<PowerSumVector> = (0..=max_part)
        .map(|k| {
            let s = if k == 0 { PowerSumVector::zero() } else { inner.substitute_power(k) };
            match max_degree {
                Some(m) => s.truncated(m),
                None => s,
            }
        })
        .collect();

    let mut total = PowerSumVector::zero();
    let mut prefix: Vec<(usize, PowerSumVector)> = Vec::new();
    for (rho, c) in outer.iter() {
        let parts = rho.parts();
        let shared = prefix
            .iter()
            .zip(parts)
            .take_while(|((k, _), p)| k == *p)
            .count();
        prefix.truncate(shared);
        for &k in &parts[shared..] {
            let next = match prefix.last() {
                Some((_, acc)) => acc.mul_truncated(&substituted[k], max_degree),
                None => substituted[k].clone(),
            };
            prefix.push((k, next));
        }
        match prefix.last() {
            Some((_, product)) => total.add_scaled(product, c),
            None => total.add_scaled(&PowerSumVector::one(), c),
        }
    }
    power_to_schur(&total)
}

fn check_positive(v: &SchurVector, outer: &Partition, inner: &Partition) -> Result<()> {
    if v.iter().any(|(_, c)| c.sign() != Sign::Plus) {
        return Err(Error::Internal(format!(
            "plethysm {outer} ∘ {inner} produced a non-positive coefficient: {v}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn worked_examples() {
        let cache = PlethysmCache::new();
        let got = plethysm(&part![2], &part![2, 1], &cache).unwrap();
        let want = SchurVector::from_terms([
            (part![2, 2, 2], 1),
            (part![3, 1, 1, 1], 1),
            (part![3, 2, 1], 1),
            (part![4, 2], 1),
        ]);
        assert_eq!(*got, want);

        let got = plethysm(&part![2], &part![1, 1], &cache).unwrap();
        let want = SchurVector::from_terms([(part![1, 1, 1, 1], 1), (part![2, 2], 1)]);
        assert_eq!(*got, want);
        assert_eq!(cache.len(), 2);
    }

    #[test]
    fn identity_laws() {
        let cache = PlethysmCache::new();
        let lam = part![3, 1];
        assert_eq!(*plethysm(&lam, &part![1], &cache).unwrap(), SchurVector::basis(lam.clone()));
        assert_eq!(*plethysm(&part![1], &lam, &cache).unwrap(), SchurVector::basis(lam));
    }

    #[test]
    fn rejects_empty() {
        let cache = PlethysmCache::new();
        assert!(plethysm(&Partition::empty(), &part![1], &cache).is_err());
        assert!(plethysm_vector(&Partition::empty(), &SchurVector::basis(part![1])).is_err());
    }

    #[test]
    fn into_sums() {
        // S²(A ⊕ B) = S²A ⊕ (A ⊗ B) ⊕ S²B with A = s[1], B = s[1,1]
        let inner = SchurVector::from_terms([(part![1], 1), (part![1, 1], 1)]);
        let got = plethysm_vector(&part![2], &inner).unwrap();
        let want = SchurVector::from_terms([
            (part![2], 1),
            (part![2, 1], 1),
            (part![1, 1, 1], 1),
            (part![1, 1, 1, 1], 1),
            (part![2, 2], 1),
        ]);
        assert_eq!(got, want);
        assert_eq!(plethysm_vector(&part![1], &inner).unwrap(), inner);
        assert_eq!(
            plethysm_vector(&part![1, 1], &SchurVector::basis(part![1])).unwrap(),
            SchurVector::basis(part![1, 1])
        );
    }

    #[test]
    fn truncation_keeps_low_degrees_exact() {
        let inner = SchurVector::from_terms([(part![1], 1), (part![1, 1], 1), (part![2, 1], 1)]);
        let cache = PlethysmCache::new();
        let full = plethysm_vector_up_to(&part![2, 1], &inner, None, &cache).unwrap();
        let cut = plethysm_vector_up_to(&part![2, 1], &inner, Some(5), &cache).unwrap();
        for n in 0..=5 {
            assert_eq!(full.component(n), cut.component(n));
        }
        assert!(cut.iter().all(|(p, _)| p.size() <= 5));
    }
}
