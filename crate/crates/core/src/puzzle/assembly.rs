//! Assemblies `(μ_1 ⊙ l_{i_1}) ⊗ ⋯ ⊗ (μ_k ⊙ l_{i_k})`.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::LieTruncation;
use crate::partition::Partition;
use crate::puzzle::decomposition::MuDecomposition;
use crate::puzzle::instructions::Instruction;
use crate::symfunc::{plethysm, tensor_product_cached, LrCache, PlethysmCache, SchurVector};

/// The assembly of `D` with the Lie pieces named by `I`.
pub fn assemble(
    d: &MuDecomposition,
    instruction: &Instruction,
    lie: &LieTruncation,
    plethysms: &PlethysmCache,
    products: &LrCache,
) -> Result<SchurVector> {
    if d.len() != instruction.len() {
        return Err(Error::Domain(format!(
            "decomposition {d} has {} parts but instruction {instruction} has {}",
            d.len(),
            instruction.len()
        )));
    }
    let shapes = instruction
        .indices
        .iter()
        .map(|&i| {
            lie.piece(i)
                .map(|p| p.shape.clone())
                .ok_or_else(|| Error::Domain(format!("Lie piece {i} is outside the truncation")))
        })
        .collect::<Result<Vec<_>>>()?;
    assemble_shapes(d.parts(), &shapes, plethysms, products)
}

/// `⊗_j plethysm(parts_j, shapes_j)`.
pub(crate) fn assemble_shapes(
    parts: &[Partition],
    shapes: &[Partition],
    plethysms: &PlethysmCache,
    products: &LrCache,
) -> Result<SchurVector> {
    let mut acc = SchurVector::basis(Partition::empty());
    for (mu, l) in parts.iter().zip(shapes) {
        let factor = plethysm(mu, l, plethysms)?;
        acc = tensor_product_cached(&acc, &factor, products);
    }
    Ok(acc)
}

/// One weighted solution of a `(μ, λ)` puzzle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub decomposition: MuDecomposition,
    pub instruction: Instruction,
    pub alpha: BigUint,
    pub beta: BigUint,
}

impl Solution {
    pub fn contribution(&self) -> BigUint {
        &self.alpha * &self.beta
    }

    pub(crate) fn new(decomposition: MuDecomposition, instruction: Instruction, alpha: BigUint, beta: BigUint) -> Option<Self> {
        if alpha.is_zero() || beta.is_zero() {
            return None;
        }
        Some(Solution { decomposition, instruction, alpha, beta })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::truncation;
    use crate::part;

    #[test]
    fn worked_assembly() {
        let lie = truncation(5);
        let (pc, lc) = (PlethysmCache::new(), LrCache::new());
        let d = MuDecomposition::new(vec![part![2], part![1]]).unwrap();
        let i = Instruction::new(vec![2, 1]).unwrap();
        let got = assemble(&d, &i, &lie, &pc, &lc).unwrap();
        let want = SchurVector::from_terms([
            (part![1, 1, 1, 1, 1], 1),
            (part![2, 1, 1, 1], 1),
            (part![2, 2, 1], 1),
            (part![3, 2], 1),
        ]);
        assert_eq!(got, want);
        assert_eq!(got.homogeneous_degree(), Some(5));
    }

    #[test]
    fn single_part_with_first_piece() {
        let lie = truncation(4);
        let (pc, lc) = (PlethysmCache::new(), LrCache::new());
        let mu = part![3, 1];
        let d = MuDecomposition::new(vec![mu.clone()]).unwrap();
        let got = assemble(&d, &Instruction::new(vec![1]).unwrap(), &lie, &pc, &lc).unwrap();
        assert_eq!(got, SchurVector::basis(mu));
    }

    #[test]
    fn out_of_range_index() {
        let lie = truncation(3);
        let (pc, lc) = (PlethysmCache::new(), LrCache::new());
        let d = MuDecomposition::new(vec![part![1]]).unwrap();
        assert!(assemble(&d, &Instruction::new(vec![9]).unwrap(), &lie, &pc, &lc).is_err());
        assert!(assemble(&d, &Instruction::new(vec![1, 2]).unwrap(), &lie, &pc, &lc).is_err());
    }
}
