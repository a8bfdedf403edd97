use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::partition::{size_then_revlex, Partition};

/// A symmetric function in the Schur basis, stored sparsely.
///
/// Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SchurVector {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single term `s_λ`.
    pub fn basis(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigInt::one());
        SchurVector { terms }
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigInt>,
    {
        let mut v = Self::zero();
        for (p, c) in terms {
            v.add_term(p, c.into());
        }
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

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda);
        match slot {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &SchurVector, c: &BigInt) {
        for (p, v) in &other.terms {
            self.add_term(p.clone(), v * c);
        }
    }

    /// The common size of every indexing partition, if there is one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    /// The degree-`n` component.
    pub fn component(&self, n: usize) -> SchurVector {
        SchurVector {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == n)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Terms in `(size, decreasing lex)` order.
    pub fn sorted_terms(&self) -> Vec<(&Partition, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| size_then_revlex(a.0, b.0));
        v
    }
}

impl std::ops::Add for &SchurVector {
    type Output = SchurVector;

    fn add(self, rhs: &SchurVector) -> SchurVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigInt::one());
        out
    }
}

impl FromIterator<(Partition, BigInt)> for SchurVector {
    fn from_iter<T: IntoIterator<Item = (Partition, BigInt)>>(iter: T) -> Self {
        let mut v = SchurVector::zero();
        for (p, c) in iter {
            v.add_term(p, c);
        }
        v
    }
}

/// Debug/golden text form: `1*[2,2] + 1*[1,1,1,1]`, `0` when empty.
impl fmt::Display for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
