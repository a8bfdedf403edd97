//! The optimized composition-factor computation.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lie::{truncation, LieTruncation};
use crate::partition::{partitions_up_to, Partition};
use crate::puzzle::assembly::{assemble, assemble_shapes, Solution};
use crate::puzzle::decomposition::{decompositions_of_shape, iter_lr_cached, mu_decompositions, MuDecomposition};
use crate::puzzle::instructions::InstructionTable;
use crate::symfunc::{LrCache, PlethysmCache, SchurVector};
use crate::table::{CoefficientTable, Provenance};

/// Lie truncation plus the plethysm and product memos, shared across
/// degrees and worker threads.
pub struct Engine {
    lie: LieTruncation,
    plethysms: PlethysmCache,
    products: LrCache,
}

impl Engine {
    /// An engine able to compute every degree up to `max_degree`.
    pub fn new(max_degree: usize) -> Self {
        Engine { lie: truncation(max_degree), plethysms: PlethysmCache::new(), products: LrCache::new() }
    }

    pub fn lie(&self) -> &LieTruncation {
        &self.lie
    }

    pub fn plethysm_cache(&self) -> &PlethysmCache {
        &self.plethysms
    }

    fn check_degree(&self, d: usize) -> Result<()> {
        if d == 0 {
            return Err(Error::Domain("degree must be at least 1".into()));
        }
        if d > self.lie.degree() {
            return Err(Error::Domain(format!(
                "degree {d} exceeds this engine's maximum {}",
                self.lie.degree()
            )));
        }
        Ok(())
    }

    /// `c_{λμ}` for every `λ ⊢ d` and every `μ` with `1 ≤ |μ| ≤ d`.
    ///
    /// Instructions are grouped by the tuple of Lie-piece shapes they name,
    /// since the assembly depends only on those shapes. The summed assembly
    /// of each decomposition is computed once and shared by every `μ`
    /// containing it.
    pub fn composition_factors(&self, d: usize) -> Result<CoefficientTable> {
        self.check_degree(d)?;
        let mut table = CoefficientTable::zeros(d, [d], Provenance::Optimized);
        table.set_identity_block(d);
        let instructions = InstructionTable::build(d, &self.lie);

        let mut groups: BTreeMap<Partition, Vec<(Vec<Partition>, u64)>> = BTreeMap::new();
        for (theta, list) in instructions.iter() {
            let mut counts: BTreeMap<Vec<Partition>, u64> = BTreeMap::new();
            for ins in list {
                let shapes = ins
                    .indices
                    .iter()
                    .map(|&i| self.lie.piece(i).expect("built from this truncation").shape.clone())
                    .collect();
                *counts.entry(shapes).or_default() += 1;
            }
            groups.insert(theta.clone(), counts.into_iter().collect());
        }

        let jobs: Vec<(MuDecomposition, &Vec<(Vec<Partition>, u64)>)> = groups
            .iter()
            .flat_map(|(theta, g)| decompositions_of_shape(theta, None).into_iter().map(move |dc| (dc, g)))
            .collect();
        let assembled: HashMap<MuDecomposition, SchurVector> = jobs
            .into_par_iter()
            .map(|(dc, g)| {
                let mut sum = SchurVector::zero();
                for (shapes, n) in g {
                    let a = assemble_shapes(dc.parts(), shapes, &self.plethysms, &self.products)?;
                    sum.add_scaled(&a, &BigInt::from(*n));
                }
                Ok((dc, sum))
            })
            .collect::<Result<_>>()?;

        let rows: Vec<(Partition, BTreeMap<Partition, BigRational>)> = partitions_up_to(1, d - 1)
            .into_par_iter()
            .map(|mu| {
                let mut row: BTreeMap<Partition, BigRational> = BTreeMap::new();
                for (theta, ds) in mu_decompositions(&mu) {
                    if instructions.get(&theta).is_empty() {
                        continue;
                    }
                    for dc in ds {
                        let alpha = iter_lr_cached(&mu, dc.parts(), &self.products)?;
                        if alpha.is_zero() {
                            continue;
                        }
                        let weight = dc.over_count_factor() * BigRational::from_integer(alpha.into());
                        let Some(a) = assembled.get(&dc) else { continue };
                        for (lambda, beta) in a.iter() {
                            *row.entry(lambda.clone()).or_insert_with(BigRational::zero) +=
                                &weight * BigRational::from_integer(beta.clone());
                        }
                    }
                }
                Ok((mu, row))
            })
            .collect::<Result<_>>()?;

        for (mu, row) in rows {
            for (lambda, c) in row {
                if lambda.size() != d {
                    return Err(Error::Internal(format!("assembly produced {lambda} at degree {d}")));
                }
                table.set(&mu, &lambda, to_natural(&c, &mu, &lambda)?)?;
            }
        }
        Ok(table)
    }

    /// The full table for `λ`-degrees `1..=max_degree`.
    pub fn table(&self, max_degree: usize) -> Result<CoefficientTable> {
        self.check_degree(max_degree)?;
        let mut out = CoefficientTable::zeros(max_degree, [], Provenance::Optimized);
        for d in 1..=max_degree {
            out.merge(&self.composition_factors(d)?);
        }
        Ok(out)
    }

    /// Every solution of the `(μ, λ)` puzzle with `|μ| < |λ|`, one per good
    /// decomposition and instruction. `c_{λμ}` is the sum of their
    /// contributions weighted by the over-count factors.
    pub fn solutions(&self, mu: &Partition, lambda: &Partition) -> Result<Vec<Solution>> {
        let d = lambda.size();
        self.check_degree(d)?;
        let mut out = Vec::new();
        if mu.is_empty() || mu.size() >= d {
            return Ok(out);
        }
        let instructions = InstructionTable::build(d, &self.lie);
        for (theta, ds) in mu_decompositions(mu) {
            let list = instructions.get(&theta);
            if list.is_empty() {
                continue;
            }
            for dc in ds {
                let alpha = iter_lr_cached(mu, dc.parts(), &self.products)?;
                if alpha.is_zero() {
                    continue;
                }
                for ins in list {
                    let a = assemble(&dc, ins, &self.lie, &self.plethysms, &self.products)?;
                    let beta = a.coefficient(lambda);
                    let beta = beta.to_biguint().unwrap_or_default();
                    out.extend(Solution::new(dc.clone(), ins.clone(), alpha.clone(), beta));
                }
            }
        }
        Ok(out)
    }
}

fn to_natural(c: &BigRational, mu: &Partition, lambda: &Partition) -> Result<BigUint> {
    if !c.is_integer() || c.numer().sign() == Sign::Minus {
        return Err(Error::Internal(format!(
            "c_{{{lambda},{mu}}} = {c} is not a nonnegative integer"
        )));
    }
    Ok(c.numer().magnitude().clone())
}

/// `c_{λμ}` for `λ ⊢ d`, using a fresh engine.
pub fn composition_factors(d: usize) -> Result<CoefficientTable> {
    Engine::new(d).composition_factors(d)
}

/// The full table up to `max_degree`, using a fresh engine.
pub fn compute_table(max_degree: usize) -> Result<CoefficientTable> {
    Engine::new(max_degree).table(max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::lie_multiplicity;
    use crate::part;
    use crate::partition::partitions_of;
    use num_traits::One;

    #[test]
    fn degree_one() {
        let t = composition_factors(1).unwrap();
        assert_eq!(t.pair_count(), 1);
        assert_eq!(t.get(&part![1], &part![1]), BigUint::one());
    }

    #[test]
    fn first_row_is_lie() {
        for d in 1..=6 {
            let t = composition_factors(d).unwrap();
            for lambda in partitions_of(d) {
                let want = BigUint::from(lie_multiplicity(&lambda).unwrap());
                assert_eq!(t.get(&part![1], &lambda), want, "λ = {lambda}");
            }
        }
    }

    #[test]
    fn identity_block() {
        let t = composition_factors(5).unwrap();
        for mu in partitions_of(5) {
            for lambda in partitions_of(5) {
                let want = BigUint::from((mu == lambda) as u8);
                assert_eq!(t.get(&mu, &lambda), want);
            }
        }
    }

    #[test]
    fn solutions_sum_to_coefficient() {
        let engine = Engine::new(6);
        let t = engine.composition_factors(6).unwrap();
        for mu in [part![2], part![2, 1], part![1, 1, 1], part![3, 1]] {
            for lambda in partitions_of(6) {
                let mut total = BigRational::zero();
                for s in engine.solutions(&mu, &lambda).unwrap() {
                    total += s.decomposition.over_count_factor() * BigRational::from_integer(s.contribution().into());
                }
                assert_eq!(total, BigRational::from_integer(t.get(&mu, &lambda).into()));
            }
        }
    }

    #[test]
    fn hook_mu_two_two_coefficient() {
        let t = composition_factors(5).unwrap();
        assert_eq!(t.get(&part![2, 2], &part![2, 1, 1, 1]), BigUint::one());
    }

    #[test]
    fn rejects_degree_beyond_engine() {
        assert!(Engine::new(3).composition_factors(4).is_err());
        assert!(Engine::new(3).composition_factors(0).is_err());
    }
}
