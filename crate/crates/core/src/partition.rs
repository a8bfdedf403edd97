//! Integer partitions and the Young-diagram predicates the rest of the crate
//! is built on.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The derived ordering is the lexicographic order on the part sequence, so
/// `[3,1] > [2,1,1]`. Within a fixed size this is a total order; most
/// enumerations in this crate list partitions in *decreasing* lex order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition, rejecting sequences that are not weakly
    /// decreasing. Trailing zeros are dropped; interior zeros are an error.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::Domain(format!("partition {parts:?} has a zero part")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Domain(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Caller guarantees `parts` is weakly decreasing with no zeros.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The single-row partition `[n]` (empty for `n = 0`).
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![n])
        }
    }

    /// The single-column partition `[1^n]`.
    pub fn column(n: usize) -> Self {
        Self::from_sorted(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `i` (0-based), or 0 past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Self::from_sorted(parts)
    }

    /// True iff the diagram of `inner` sits inside this one.
    pub fn contains(&self, inner: &Partition) -> bool {
        contains(self, inner)
    }

    /// Multiplicity of each part value, as `(value, count)` pairs in
    /// decreasing value order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Every part multiplied by `k` (the index map of the power-sum
    /// plethysm `p_k ∘ p_ρ = p_{kρ}`).
    pub(crate) fn scaled(&self, k: usize) -> Partition {
        Self::from_sorted(self.parts.iter().map(|p| p * k).collect())
    }

    /// Multiset union of parts (the index map of power-sum products).
    pub(crate) fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() && j < other.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Self::from_sorted(parts)
    }

    /// True iff this partition is a hook `[a, 1^b]`; returns `(a, b)`.
    pub fn as_hook(&self) -> Option<(usize, usize)> {
        if self.is_empty() {
            return None;
        }
        if self.parts[1..].iter().all(|&p| p == 1) {
            Some((self.parts[0], self.len() - 1))
        } else {
            None
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition {s:?} must be bracketed")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?} in {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse(format!("partition {s:?} has a zero part")));
        }
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl<const N: usize> TryFrom<[usize; N]> for Partition {
    type Error = Error;

    fn try_from(parts: [usize; N]) -> Result<Self> {
        Partition::new(parts.to_vec())
    }
}

/// Shorthand used throughout tests and examples; panics on invalid input.
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_bounded(n, n, &[], &mut cur, &mut out);
    out
}

/// Partitions of `n` whose diagram fits inside `bound`, in decreasing lex
/// order.
pub fn partitions_fitting(n: usize, bound: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    if n > bound.size() {
        return out;
    }
    let mut cur = Vec::new();
    fill_bounded(n, n, bound.parts(), &mut cur, &mut out);
    out
}

// `rows` empty means unbounded.
fn fill_bounded(
    remaining: usize,
    max_part: usize,
    rows: &[usize],
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_sorted(cur.clone()));
        return;
    }
    let row = cur.len();
    let cap = if rows.is_empty() {
        max_part
    } else {
        match rows.get(row) {
            Some(&b) => max_part.min(b),
            None => return,
        }
    };
    let cap = cap.min(remaining);
    // capacity left in the rows below, for pruning
    let below: usize = if rows.is_empty() {
        usize::MAX
    } else {
        rows.iter().skip(row + 1).sum()
    };
    for p in (1..=cap).rev() {
        let rest = remaining - p;
        if !rows.is_empty() && rest > below.min(p * (rows.len() - row - 1)) {
            // parts only shrink from here
            break;
        }
        cur.push(p);
        fill_bounded(rest, p, rows, cur, out);
        cur.pop();
    }
}

/// True iff `inner_i ≤ outer_i` for every row `i` of `inner`.
pub fn contains(outer: &Partition, inner: &Partition) -> bool {
    inner.len() <= outer.len() && inner.parts.iter().zip(&outer.parts).all(|(a, b)| a <= b)
}

/// `(λ_1 + n, λ_2, …)`. Adding to the empty partition yields `[n]`.
pub fn add_top_row(lambda: &Partition, n: usize) -> Partition {
    let mut parts = lambda.parts.clone();
    match parts.first_mut() {
        Some(p) => *p += n,
        None if n > 0 => parts.push(n),
        None => {}
    }
    Partition::from_sorted(parts)
}

pub fn lex_compare(a: &Partition, b: &Partition) -> Ordering {
    a.parts.cmp(&b.parts)
}

/// Sort key for the "increasing size, then decreasing lex" order used by
/// every file format and report.
pub fn size_then_revlex(a: &Partition, b: &Partition) -> Ordering {
    a.size.cmp(&b.size).then_with(|| b.parts.cmp(&a.parts))
}

/// All partitions of sizes `lo..=hi`, increasing size, decreasing lex
/// within a size.
pub fn partitions_up_to(lo: usize, hi: usize) -> Vec<Partition> {
    (lo..=hi).flat_map(partitions_of).collect()
}
