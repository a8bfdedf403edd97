//! Instructions: tuples of distinct Lie-piece indices hitting a target size.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lie::LieTruncation;
use crate::partition::{partitions_of, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Instruction {
    pub indices: Vec<usize>,
}

impl Instruction {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        for (i, a) in indices.iter().enumerate() {
            if *a == 0 {
                return Err(Error::Domain("instruction indices are 1-based".into()));
            }
            if indices[..i].contains(a) {
                return Err(Error::Domain(format!("instruction repeats index {a}")));
            }
        }
        Ok(Instruction { indices })
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `Σ_j θ_j · r_{i_j}`.
pub fn target_size(theta: &Partition, instruction: &Instruction, lie: &LieTruncation) -> Result<usize> {
    if theta.len() != instruction.len() {
        return Err(Error::Domain(format!(
            "shape {theta} has {} parts but instruction {instruction} has {}",
            theta.len(),
            instruction.len()
        )));
    }
    let mut total = 0;
    for (&t, &i) in theta.parts().iter().zip(&instruction.indices) {
        let r = lie
            .size_of(i)
            .ok_or_else(|| Error::Domain(format!("Lie piece {i} is outside the truncation")))?;
        total += t * r;
    }
    Ok(total)
}

/// `⌊(d − Σ_{j<k} θ_j·r_j) / θ_k⌋`, where `r_j` is the size of the `j`-th
/// Lie piece. No instruction uses a piece larger than this.
pub fn phi(theta: &Partition, d: usize, lie: &LieTruncation) -> i64 {
    let k = theta.len();
    if k == 0 {
        return 0;
    }
    if lie.len() < k - 1 {
        // fewer than k distinct pieces exist at all
        return 0;
    }
    let mut num = d as i64;
    for j in 0..k - 1 {
        num -= (theta.part(j) * lie.size_of(j + 1).expect("checked length")) as i64;
    }
    num.div_euclid(theta.part(k - 1) as i64)
}

/// All instructions of shape `θ` with target size `d`, searched in the
/// prefix `𝕃_{≤φ}` and returned in lexicographic index order.
pub fn build_instructions(d: usize, theta: &Partition, lie: &LieTruncation) -> Vec<Instruction> {
    let bound = phi(theta, d, lie);
    if bound <= 0 {
        return Vec::new();
    }
    let bound = (bound as usize).min(lie.degree());
    enumerate_instructions(d, theta, lie, bound)
}

/// Every tuple of distinct indices into `𝕃_{≤max_piece}` with target size
/// `d`, without the shape-specific bound.
pub fn brute_force_instructions(d: usize, theta: &Partition, lie: &LieTruncation) -> Vec<Instruction> {
    enumerate_instructions(d, theta, lie, lie.degree())
}

fn enumerate_instructions(d: usize, theta: &Partition, lie: &LieTruncation, max_piece: usize) -> Vec<Instruction> {
    let mut out = Vec::new();
    if theta.is_empty() || theta.size() > d {
        return out;
    }
    let weights = theta.parts();
    // suffix[j] = Σ_{i ≥ j} θ_i, the least weight slots j.. can still add
    let mut suffix = vec![0; weights.len() + 1];
    for j in (0..weights.len()).rev() {
        suffix[j] = suffix[j + 1] + weights[j];
    }
    let search = Search { lie, weights, suffix: &suffix, last: lie.count_up_to_size(max_piece), max_piece };
    search.fill(0, d, &mut Vec::new(), &mut out);
    out
}

struct Search<'a> {
    lie: &'a LieTruncation,
    weights: &'a [usize],
    suffix: &'a [usize],
    last: usize,
    max_piece: usize,
}

impl Search<'_> {
    fn fill(&self, slot: usize, remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<Instruction>) {
        let w = self.weights[slot];
        if slot + 1 == self.weights.len() {
            if remaining % w != 0 || remaining / w > self.max_piece {
                return;
            }
            for i in self.lie.indices_of_size(remaining / w) {
                if !cur.contains(&i) {
                    cur.push(i);
                    out.push(Instruction { indices: cur.clone() });
                    cur.pop();
                }
            }
            return;
        }
        let after = self.suffix[slot + 1];
        for i in 1..=self.last {
            if cur.contains(&i) {
                continue;
            }
            let used = w * self.lie.size_of(i).expect("index within truncation");
            // sizes grow with the index
            if used + after > remaining {
                break;
            }
            if remaining - used > (self.suffix[slot + 1]) * self.max_piece {
                continue;
            }
            cur.push(i);
            self.fill(slot + 1, remaining - used, cur, out);
            cur.pop();
        }
    }
}

/// `ℐ(d)`: instructions of target size `d` for every shape `θ ⊢ m`,
/// `m < d`. Shapes without instructions are not stored.
#[derive(Clone, Debug, Default)]
pub struct InstructionTable {
    target_size: usize,
    entries: BTreeMap<Partition, Vec<Instruction>>,
}

impl InstructionTable {
    pub fn build(d: usize, lie: &LieTruncation) -> Self {
        let mut entries = BTreeMap::new();
        for m in 1..d {
            for theta in partitions_of(m) {
                let list = build_instructions(d, &theta, lie);
                if !list.is_empty() {
                    entries.insert(theta, list);
                }
            }
        }
        InstructionTable { target_size: d, entries }
    }

    pub fn target_size(&self) -> usize {
        self.target_size
    }

    pub fn get(&self, theta: &Partition) -> &[Instruction] {
        self.entries.get(theta).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn shapes(&self) -> impl Iterator<Item = &Partition> {
        self.entries.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &[Instruction])> {
        self.entries.iter().map(|(k, v)| (k, v.as_slice()))
    }

    pub fn len(&self) -> usize {
        self.entries.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Number of instructions of target size `d` for each shape with exactly
/// `k` parts and `|θ| < d`.
pub fn pairing_counts(d: usize, k: usize, lie: &LieTruncation) -> BTreeMap<Partition, usize> {
    let mut out = BTreeMap::new();
    for m in k..d {
        for theta in partitions_of(m).into_iter().filter(|t| t.len() == k) {
            let n = build_instructions(d, &theta, lie).len();
            out.insert(theta, n);
        }
    }
    out
}
