//! Reference computation: expand `S_μ(ℒ_{≤d}(V))` directly and read off
//! every `s_λ` with `|λ| ≤ d`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lie::lie_module_up_to;
use crate::partition::{partitions_up_to, Partition};
use crate::symfunc::{plethysm_vector_up_to, PlethysmCache};
use crate::table::{CoefficientTable, Provenance};

/// How much of each plethysm to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BaselineMode {
    /// The whole plethysm, every degree up to `|μ|·d`.
    Full,
    /// Only terms of degree at most `d`. The kept terms are exact.
    #[default]
    Truncated,
}

impl fmt::Display for BaselineMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaselineMode::Full => "full",
            BaselineMode::Truncated => "truncated",
        })
    }
}

impl FromStr for BaselineMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(BaselineMode::Full),
            "truncated" => Ok(BaselineMode::Truncated),
            other => Err(Error::Parse(format!("unknown baseline mode {other:?}"))),
        }
    }
}

/// `c_{λμ}` for every `1 ≤ |μ| ≤ |λ| ≤ d`.
pub fn baseline_composition_factors(d: usize, mode: BaselineMode) -> Result<CoefficientTable> {
    if d == 0 {
        return Err(Error::Domain("degree must be at least 1".into()));
    }
    let lie = lie_module_up_to(d)?;
    let cache = PlethysmCache::new();
    let cut = match mode {
        BaselineMode::Full => None,
        BaselineMode::Truncated => Some(d),
    };
    let rows: Vec<(Partition, Vec<(Partition, BigUint)>)> = partitions_up_to(1, d)
        .into_par_iter()
        .map(|mu| {
            let f = plethysm_vector_up_to(&mu, &lie, cut, &cache)?;
            let row = f
                .iter()
                .filter(|(lambda, _)| lambda.size() <= d)
                .map(|(lambda, c)| {
                    let c = c
                        .to_biguint()
                        .ok_or_else(|| Error::Internal(format!("negative plethysm coefficient at {lambda}")))?;
                    Ok((lambda.clone(), c))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((mu, row))
        })
        .collect::<Result<_>>()?;
    let mut table = CoefficientTable::zeros(d, 1..=d, Provenance::Baseline);
    for (mu, row) in rows {
        for (lambda, c) in row {
            table.set(&mu, &lambda, c)?;
        }
    }
    Ok(table)
}
