//! Littlewood-Richardson coefficients by enumerating lattice-word skew
//! tableaux, and the Schur-basis product built on them.
//!
//! A filling of `ν/λ` with content `μ` is grown one label at a time: the
//! boxes labelled `i` form a horizontal strip added to the current shape,
//! which keeps columns strict. The reverse reading word (rows top to bottom,
//! right to left) is a lattice word iff for every label `i ≥ 2` and every
//! row `r`, the number of `i`s in rows `≤ r` is at most the number of
//! `i-1`s in rows `< r`.

use std::collections::BTreeMap;
use std::sync::Arc;

use dashmap::DashMap;
use num_bigint::BigInt;

use crate::partition::{contains, Partition};
use crate::symfunc::schur::SchurVector;

/// Calls `visit` with the outer shape of every LR filling of
/// `?/inner` with content `content`, optionally confined to `bound`.
fn for_each_lr_filling(
    inner: &Partition,
    content: &Partition,
    bound: Option<&Partition>,
    visit: &mut dyn FnMut(&[usize]),
) {
    let rows = inner.len() + content.len();
    let mut shape = vec![0usize; rows];
    shape[..inner.len()].copy_from_slice(inner.parts());
    let bound: Option<Vec<usize>> = bound.map(|b| (0..rows).map(|r| b.part(r)).collect());
    let mut state = Filler {
        content: content.parts(),
        bound: bound.as_deref(),
        shape,
        visit,
    };
    state.label(0, &[]);
}

struct Filler<'a> {
    content: &'a [usize],
    bound: Option<&'a [usize]>,
    shape: Vec<usize>,
    visit: &'a mut dyn FnMut(&[usize]),
}

impl Filler<'_> {
    /// Place label `i` given the per-row counts of label `i - 1`.
    fn label(&mut self, i: usize, prev: &[usize]) {
        if i == self.content.len() {
            let used = self.shape.iter().take_while(|&&p| p > 0).count();
            let shape = self.shape[..used].to_vec();
            (self.visit)(&shape);
            return;
        }
        let old = self.shape.clone();
        let mut counts = vec![0usize; old.len()];
        self.strip(i, 0, self.content[i], 0, 0, &old, prev, &mut counts);
    }

    #[allow(clippy::too_many_arguments)]
    fn strip(
        &mut self,
        i: usize,
        row: usize,
        remaining: usize,
        cum_here: usize,
        cum_prev_above: usize,
        old: &[usize],
        prev: &[usize],
        counts: &mut Vec<usize>,
    ) {
        if remaining == 0 {
            let snapshot = self.shape.clone();
            let mine = counts.clone();
            self.label(i + 1, &mine);
            self.shape = snapshot;
            return;
        }
        if row >= old.len() {
            return;
        }
        // horizontal strip: the new row may not overhang the old row above
        let mut cap = if row == 0 { remaining } else { old[row - 1] - old[row] };
        if row > 0 && old[row - 1] == 0 {
            return;
        }
        if let Some(b) = self.bound {
            cap = cap.min(b[row].saturating_sub(old[row]));
        }
        cap = cap.min(remaining);
        if i > 0 {
            // lattice: cum_here + a ≤ (count of i-1 in rows < row)
            let allowed = cum_prev_above.saturating_sub(cum_here);
            cap = cap.min(allowed);
        }
        let prev_here = prev.get(row).copied().unwrap_or(0);
        for a in (0..=cap).rev() {
            self.shape[row] = old[row] + a;
            counts[row] = a;
            self.strip(
                i,
                row + 1,
                remaining - a,
                cum_here + a,
                cum_prev_above + prev_here,
                old,
                prev,
                counts,
            );
        }
        self.shape[row] = old[row];
        counts[row] = 0;
    }
}

/// `L^ν_{λμ}`: the number of LR tableaux of shape `ν/λ` and content `μ`.
pub fn lr_coefficient(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !contains(nu, lambda) || !contains(nu, mu) {
        return 0;
    }
    let mut count = 0u64;
    for_each_lr_filling(lambda, mu, Some(nu), &mut |_| count += 1);
    count
}

/// `s_λ · s_μ` expanded in the Schur basis.
pub fn schur_product(lambda: &Partition, mu: &Partition) -> SchurVector {
    // fewer labels means a shallower search
    let (inner, content) = if lambda.len() >= mu.len() { (lambda, mu) } else { (mu, lambda) };
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    for_each_lr_filling(inner, content, None, &mut |shape| {
        *counts.entry(Partition::from_sorted(shape.to_vec())).or_default() += 1;
    });
    counts.into_iter().map(|(p, c)| (p, BigInt::from(c))).collect()
}

/// Expansion of the skew Schur function `s_{outer/inner}`: maps each `ν` to
/// `L^outer_{inner,ν}`.
pub fn skew_expansion(outer: &Partition, inner: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if !contains(outer, inner) {
        return out;
    }
    let n = outer.size() - inner.size();
    for nu in crate::partition::partitions_fitting(n, outer) {
        let c = lr_coefficient(outer, inner, &nu);
        if c > 0 {
            out.insert(nu, c);
        }
    }
    out
}

/// Thread-safe memo of partition products and LR coefficients.
#[derive(Default)]
pub struct LrCache {
    products: DashMap<(Partition, Partition), Arc<SchurVector>>,
    coefficients: DashMap<(Partition, Partition, Partition), u64>,
}

impl LrCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn product(&self, a: &Partition, b: &Partition) -> Arc<SchurVector> {
        let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        if let Some(v) = self.products.get(&key) {
            return v.clone();
        }
        let v = Arc::new(schur_product(&key.0, &key.1));
        self.products.insert(key, v.clone());
        v
    }

    pub fn coefficient(&self, nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
        let (l, m) = if lambda <= mu { (lambda, mu) } else { (mu, lambda) };
        let key = (nu.clone(), l.clone(), m.clone());
        if let Some(v) = self.coefficients.get(&key) {
            return *v;
        }
        let v = lr_coefficient(nu, l, m);
        self.coefficients.insert(key, v);
        v
    }

    pub fn len(&self) -> usize {
        self.products.len() + self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Bilinear extension of the partition product. Either side empty gives
/// the empty vector.
pub fn tensor_product(f: &SchurVector, g: &SchurVector) -> SchurVector {
    tensor_product_cached(f, g, &LrCache::new())
}

pub fn tensor_product_cached(f: &SchurVector, g: &SchurVector, cache: &LrCache) -> SchurVector {
    let mut out = SchurVector::zero();
    for (a, ca) in f.iter() {
        for (b, cb) in g.iter() {
            let coeff = ca * cb;
            if a.is_empty() {
                out.add_term(b.clone(), coeff);
                continue;
            }
            if b.is_empty() {
                out.add_term(a.clone(), coeff);
                continue;
            }
            out.add_scaled(&cache.product(a, b), &coeff);
        }
    }
    out
}
