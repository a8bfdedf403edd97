//! μ-decompositions and iterated Littlewood-Richardson coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_fitting, partitions_of, Partition};
use crate::symfunc::LrCache;

/// A multiset of partitions in canonical order: sizes weakly decreasing,
/// equal sizes in decreasing lex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MuDecomposition {
    parts: Vec<Partition>,
    shape: Partition,
}

impl MuDecomposition {
    /// Sorts `parts` into canonical order. Empty parts are rejected.
    pub fn new(mut parts: Vec<Partition>) -> Result<Self> {
        if parts.iter().any(Partition::is_empty) {
            return Err(Error::Domain("decomposition parts must be nonempty".into()));
        }
        parts.sort_by(|a, b| b.size().cmp(&a.size()).then_with(|| b.cmp(a)));
        Ok(Self::from_canonical(parts))
    }

    fn from_canonical(parts: Vec<Partition>) -> Self {
        let shape = Partition::from_sorted(parts.iter().map(Partition::size).collect());
        MuDecomposition { parts, shape }
    }

    pub fn parts(&self) -> &[Partition] {
        &self.parts
    }

    /// `θ = (|μ_1|, …, |μ_k|)`.
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// `(n_1! ⋯ n_l!)^{-1}` over the multiplicities of equal parts.
    pub fn over_count_factor(&self) -> BigRational {
        BigRational::new(1.into(), self.repeat_denominator().into())
    }

    /// `n_1! ⋯ n_l!`.
    pub(crate) fn repeat_denominator(&self) -> BigUint {
        let mut denom = BigUint::one();
        let mut run = 0u64;
        for (i, p) in self.parts.iter().enumerate() {
            run = if i > 0 && &self.parts[i - 1] == p { run + 1 } else { 1 };
            denom *= run;
        }
        denom
    }
}

impl fmt::Display for MuDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

pub fn over_count_factor(d: &MuDecomposition) -> BigRational {
    d.over_count_factor()
}

/// Every canonical decomposition of shape `θ`. With `bound`, each part must
/// fit inside it.
pub fn decompositions_of_shape(theta: &Partition, bound: Option<&Partition>) -> Vec<MuDecomposition> {
    let mut out = vec![Vec::new()];
    for (size, count) in theta.multiplicities() {
        let choices = match bound {
            Some(b) => partitions_fitting(size, b),
            None => partitions_of(size),
        };
        let runs = multisets(&choices, count);
        let mut next = Vec::with_capacity(out.len() * runs.len());
        for prefix in &out {
            for run in &runs {
                let mut v: Vec<Partition> = prefix.clone();
                v.extend(run.iter().cloned());
                next.push(v);
            }
        }
        out = next;
        if out.is_empty() {
            break;
        }
    }
    out.into_iter().map(MuDecomposition::from_canonical).collect()
}

/// Weakly increasing index selections of length `k` from `items`, so that
/// the picked items keep the order of `items`.
fn multisets(items: &[Partition], k: usize) -> Vec<Vec<Partition>> {
    fn go(items: &[Partition], start: usize, k: usize, cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i].clone());
            go(items, i, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, 0, k, &mut Vec::new(), &mut out);
    out
}

/// All μ-decompositions grouped by shape. Each part fits inside `μ`.
pub fn mu_decompositions(mu: &Partition) -> BTreeMap<Partition, Vec<MuDecomposition>> {
    partitions_of(mu.size())
        .into_iter()
        .filter(|theta| !theta.is_empty())
        .map(|theta| {
            let ds = decompositions_of_shape(&theta, Some(mu));
            (theta, ds)
        })
        .filter(|(_, ds)| !ds.is_empty())
        .collect()
}

/// `L^μ_{μ_1⋯μ_k}`, the multiplicity of `s_μ` in `s_{μ_1} ⋯ s_{μ_k}`.
pub fn iter_lr(mu: &Partition, parts: &[Partition]) -> Result<BigUint> {
    iter_lr_cached(mu, parts, &LrCache::new())
}

pub fn iter_lr_cached(mu: &Partition, parts: &[Partition], cache: &LrCache) -> Result<BigUint> {
    let total: usize = parts.iter().map(Partition::size).sum();
    if total != mu.size() {
        return Err(Error::Domain(format!(
            "decomposition sizes sum to {total}, not |{mu}| = {}",
            mu.size()
        )));
    }
    if parts.is_empty() {
        return Ok(BigUint::one());
    }
    let mut memo = HashMap::new();
    Ok(iter_lr_rec(mu, parts, cache, &mut memo))
}

fn iter_lr_rec(
    nu: &Partition,
    parts: &[Partition],
    cache: &LrCache,
    memo: &mut HashMap<(Partition, usize), BigUint>,
) -> BigUint {
    match parts {
        [] => BigUint::from(nu.is_empty() as u8),
        [only] => BigUint::from((only == nu) as u8),
        [a, b] => BigUint::from(cache.coefficient(nu, a, b)),
        [first, rest @ ..] => {
            let key = (nu.clone(), parts.len());
            if let Some(v) = memo.get(&key) {
                return v.clone();
            }
            let mut total = BigUint::zero();
            if first.size() <= nu.size() {
                for kappa in partitions_fitting(nu.size() - first.size(), nu) {
                    let c = cache.coefficient(nu, first, &kappa);
                    if c == 0 {
                        continue;
                    }
                    let below = iter_lr_rec(&kappa, rest, cache, memo);
                    if !below.is_zero() {
                        total += below * c;
                    }
                }
            }
            memo.insert(key, total.clone());
            total
        }
    }
}

/// True iff the decomposition is good: its iterated LR coefficient is
/// positive.
pub fn is_good(mu: &Partition, parts: &[Partition]) -> Result<bool> {
    Ok(!iter_lr(mu, parts)?.is_zero())
}
