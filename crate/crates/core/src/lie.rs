//! Irreducible pieces of the free Lie algebra.
//!
//! The multiplicity of `S_λ(V)` in `ℒ_d(V)` is the number of standard
//! tableaux of shape `λ ⊢ d` whose major index is `≡ 1 (mod d)`. Collecting
//! every such shape with multiplicity, ordered by increasing size and then
//! by decreasing lex order, gives the globally indexed collection of Lie
//! pieces.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::SchurVector;
use crate::tableau::{maj_of_row_word, standard_tableaux};

/// One irreducible summand of `ℒ(V)`, carrying its 1-based global index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LiePiece {
    pub index: usize,
    pub shape: Partition,
}

impl LiePiece {
    pub fn size(&self) -> usize {
        self.shape.size()
    }
}

/// Multiplicity of `S_λ(V)` in `ℒ_{|λ|}(V)`.
pub fn lie_multiplicity(lambda: &Partition) -> Result<usize> {
    let d = lambda.size();
    if d == 0 {
        return Err(Error::Domain("the free Lie algebra has no degree-0 piece".into()));
    }
    let mut count = 0;
    let mut tableaux = standard_tableaux(lambda);
    while let Some(word) = tableaux.next_row_word() {
        if maj_of_row_word(word) % d == 1 % d {
            count += 1;
        }
    }
    Ok(count)
}

/// `ℒ_d(V)` as a Schur vector.
pub fn lie_module(d: usize) -> Result<SchurVector> {
    if d == 0 {
        return Err(Error::Domain("the free Lie algebra has no degree-0 piece".into()));
    }
    let mut out = SchurVector::zero();
    for lambda in partitions_of(d) {
        let m = lie_multiplicity(&lambda)?;
        out.add_term(lambda, BigInt::from(m));
    }
    Ok(out)
}

/// `ℒ_{≤d}(V) = ℒ_1(V) ⊕ … ⊕ ℒ_d(V)` as a Schur vector.
pub fn lie_module_up_to(d: usize) -> Result<SchurVector> {
    let mut out = SchurVector::zero();
    for i in 1..=d {
        out.add_scaled(&lie_module(i)?, &BigInt::from(1));
    }
    Ok(out)
}

/// All Lie pieces of size at most `degree`, in global order.
#[derive(Clone, Debug)]
pub struct LieTruncation {
    degree: usize,
    pieces: Vec<LiePiece>,
    // size_start[s] = number of pieces of size < s
    size_start: Vec<usize>,
}

/// Builds `𝕃_{≤d}`. Duplicate shapes get consecutive indices.
pub fn truncation(d: usize) -> LieTruncation {
    let mut pieces = Vec::new();
    let mut size_start = vec![0, 0];
    for n in 1..=d {
        for lambda in partitions_of(n) {
            let m = lie_multiplicity(&lambda).expect("n ≥ 1");
            for _ in 0..m {
                pieces.push(LiePiece { index: pieces.len() + 1, shape: lambda.clone() });
            }
        }
        size_start.push(pieces.len());
    }
    LieTruncation { degree: d, pieces, size_start }
}

impl LieTruncation {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn pieces(&self) -> &[LiePiece] {
        &self.pieces
    }

    /// Piece with 1-based index `i`.
    pub fn piece(&self, i: usize) -> Option<&LiePiece> {
        i.checked_sub(1).and_then(|j| self.pieces.get(j))
    }

    /// Size `r_i` of the piece with 1-based index `i`.
    pub fn size_of(&self, i: usize) -> Option<usize> {
        self.piece(i).map(LiePiece::size)
    }

    /// Number of pieces of size at most `s`; 𝕃_{≤s} is that prefix.
    pub fn count_up_to_size(&self, s: usize) -> usize {
        let s = s.min(self.degree);
        self.size_start[s + 1]
    }

    /// 1-based index range of the pieces of size exactly `s`.
    pub fn indices_of_size(&self, s: usize) -> std::ops::Range<usize> {
        if s == 0 || s > self.degree {
            return 0..0;
        }
        self.size_start[s] + 1..self.size_start[s + 1] + 1
    }

    /// Multiplicity of each shape, for callers that only need the module.
    pub fn shape_counts(&self) -> HashMap<Partition, usize> {
        let mut out = HashMap::new();
        for p in &self.pieces {
            *out.entry(p.shape.clone()).or_insert(0) += 1;
        }
        out
    }
}
