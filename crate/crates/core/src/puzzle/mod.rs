//! Decomposition puzzles: the optimized route to `c_{λμ}`.
//!
//! `c_{λμ}` is a weighted count of pairs (good μ-decomposition,
//! instruction), each contributing its iterated LR coefficient times the
//! multiplicity of `λ` in the assembly.

pub mod assembly;
pub mod decomposition;
pub mod engine;
pub mod instructions;

pub use assembly::{assemble, Solution};
pub use decomposition::{
    decompositions_of_shape, is_good, iter_lr, iter_lr_cached, mu_decompositions, over_count_factor, MuDecomposition,
};
pub use engine::{composition_factors, compute_table, Engine};
pub use instructions::{
    brute_force_instructions, build_instructions, pairing_counts, phi, target_size, Instruction, InstructionTable,
};
