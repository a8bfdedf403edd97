//! The power-sum basis with exact rational coefficients, and conversions
//! to and from the Schur basis.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::characters::{add_ribbons, mn_character, z_rho};
use crate::symfunc::schur::SchurVector;

/// A symmetric function as `Σ c_ρ p_ρ`. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct PowerSumVector {
    terms: BTreeMap<Partition, BigRational>,
}

impl PowerSumVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant function 1 (`p_∅`).
    pub fn one() -> Self {
        let mut v = Self::zero();
        v.add_term(Partition::empty(), BigRational::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, rho: &Partition) -> BigRational {
        self.terms.get(rho).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, rho: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(rho) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &PowerSumVector, c: &BigRational) {
        for (rho, v) in &other.terms {
            self.add_term(rho.clone(), v * c);
        }
    }

    /// Product, dropping monomials of degree above `max_degree` when given.
    pub fn mul_truncated(&self, other: &PowerSumVector, max_degree: Option<usize>) -> PowerSumVector {
        let mut out = PowerSumVector::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if max_degree.is_some_and(|m| a.size() + b.size() > m) {
                    continue;
                }
                out.add_term(a.union(b), ca * cb);
            }
        }
        out
    }

    /// `p_k ∘ f`: every `p_ρ` becomes `p_{kρ}`; rational scalars are fixed.
    pub fn substitute_power(&self, k: usize) -> PowerSumVector {
        PowerSumVector {
            terms: self.terms.iter().map(|(rho, c)| (rho.scaled(k), c.clone())).collect(),
        }
    }

    /// Terms of degree at most `max_degree`.
    pub fn truncated(&self, max_degree: usize) -> PowerSumVector {
        PowerSumVector {
            terms: self
                .terms
                .iter()
                .filter(|(rho, _)| rho.size() <= max_degree)
                .map(|(rho, c)| (rho.clone(), c.clone()))
                .collect(),
        }
    }
}

impl std::ops::Mul for &PowerSumVector {
    type Output = PowerSumVector;

    fn mul(self, rhs: &PowerSumVector) -> PowerSumVector {
        self.mul_truncated(rhs, None)
    }
}

/// `s_λ = Σ_ρ χ^λ(ρ) / z_ρ · p_ρ`.
pub fn schur_to_power(lambda: &Partition) -> PowerSumVector {
    let mut out = PowerSumVector::zero();
    for rho in partitions_of(lambda.size()) {
        let chi = mn_character(lambda, &rho).expect("sizes agree by construction");
        if chi == 0 {
            continue;
        }
        let z = BigInt::from(z_rho(&rho));
        out.add_term(rho, BigRational::new(BigInt::from(chi), z));
    }
    out
}

/// Expands a Schur vector into power sums term by term.
pub fn schur_vector_to_power(f: &SchurVector) -> PowerSumVector {
    let mut out = PowerSumVector::zero();
    for (lambda, c) in f.iter() {
        out.add_scaled(&schur_to_power(lambda), &BigRational::from_integer(c.clone()));
    }
    out
}

/// Inverse expansion via `p_ρ = Σ_λ χ^λ(ρ) s_λ`, evaluated by multiplying
/// by one power sum at a time: `p_k · s_λ` adds signed `k`-ribbons to `λ`.
///
/// Fails with [`Error::Internal`] if any Schur coefficient is not an
/// integer.
pub fn power_to_schur(f: &PowerSumVector) -> Result<SchurVector> {
    if f.is_zero() {
        return Ok(SchurVector::zero());
    }
    // clear denominators so the ribbon recursion runs over integers
    let lcm = f
        .terms
        .values()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled: Vec<(&[usize], BigInt)> = f
        .terms
        .iter()
        .map(|(rho, c)| (rho.parts(), c.numer() * (&lcm / c.denom())))
        .collect();
    let raw = ribbon_expand(&scaled);
    let mut out = SchurVector::zero();
    for (lambda, c) in raw {
        let (q, r) = c.div_rem(&lcm);
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "non-integral Schur coefficient {c}/{lcm} at {lambda}"
            )));
        }
        out.add_term(lambda, q);
    }
    Ok(out)
}

/// `Σ c · p_ρ` in the Schur basis, for power-sum monomials presented as
/// part slices. Groups by the first (largest) part and recurses on the
/// remaining parts, so shared prefixes are expanded once.
fn ribbon_expand(terms: &[(&[usize], BigInt)]) -> BTreeMap<Partition, BigInt> {
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    let mut groups: BTreeMap<usize, Vec<(&[usize], BigInt)>> = BTreeMap::new();
    for (parts, c) in terms {
        match parts.split_first() {
            None => *out.entry(Partition::empty()).or_default() += c,
            Some((&k, rest)) => groups.entry(k).or_default().push((rest, c.clone())),
        }
    }
    for (k, group) in groups {
        let inner = ribbon_expand(&group);
        for (lambda, c) in inner {
            if c.is_zero() {
                continue;
            }
            for (nu, sign) in add_ribbons(&lambda, k) {
                let entry = out.entry(nu).or_default();
                if sign > 0 {
                    *entry += &c;
                } else {
                    *entry -= &c;
                }
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}
