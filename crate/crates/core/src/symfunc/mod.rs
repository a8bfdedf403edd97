//! Exact symmetric-function arithmetic in the Schur basis.

pub mod characters;
pub mod lr;
pub mod plethysm;
pub mod power;
pub mod schur;

pub use characters::{mn_character, z_rho};
pub use lr::{lr_coefficient, schur_product, skew_expansion, tensor_product, tensor_product_cached, LrCache};
pub use plethysm::{plethysm, plethysm_vector, plethysm_vector_up_to, PlethysmCache};
pub use power::{power_to_schur, schur_to_power, schur_vector_to_power, PowerSumVector};
pub use schur::SchurVector;
