//! The coefficient table `(μ, λ) ↦ c_{λμ}` and its CSV/JSON persistence.
//!
//! Entries with `|μ| > |λ|` are never stored; they are zero by
//! construction. Files list the full square of pairs, zeros included, so a
//! degree-`D` file has exactly `(Σ_{n≤D} p(n))²` data rows.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, partitions_up_to, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Optimized,
    Baseline,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Optimized => "optimized",
            Provenance::Baseline => "baseline",
        })
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "optimized" => Ok(Provenance::Optimized),
            "baseline" => Ok(Provenance::Baseline),
            other => Err(Error::Parse(format!("unknown provenance {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    max_degree: usize,
    provenance: Provenance,
    lambda_degrees: BTreeSet<usize>,
    entries: BTreeMap<(Partition, Partition), BigUint>,
}

impl CoefficientTable {
    /// All-zero table tracking the given `λ` degrees, dense over
    /// `1 ≤ |μ| ≤ |λ|`.
    pub fn zeros(max_degree: usize, lambda_degrees: impl IntoIterator<Item = usize>, provenance: Provenance) -> Self {
        let lambda_degrees: BTreeSet<usize> = lambda_degrees.into_iter().collect();
        let mut entries = BTreeMap::new();
        for &d in &lambda_degrees {
            for lambda in partitions_of(d) {
                for mu in partitions_up_to(1, d) {
                    entries.insert((mu, lambda.clone()), BigUint::zero());
                }
            }
        }
        CoefficientTable { max_degree, provenance, lambda_degrees, entries }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn lambda_degrees(&self) -> &BTreeSet<usize> {
        &self.lambda_degrees
    }

    /// `c_{λμ}`; zero for pairs outside the stored region.
    pub fn get(&self, mu: &Partition, lambda: &Partition) -> BigUint {
        self.entries
            .get(&(mu.clone(), lambda.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn contains_pair(&self, mu: &Partition, lambda: &Partition) -> bool {
        self.lambda_degrees.contains(&lambda.size()) && !mu.is_empty() && mu.size() <= self.max_degree
    }

    pub fn set(&mut self, mu: &Partition, lambda: &Partition, c: BigUint) -> Result<()> {
        if !self.contains_pair(mu, lambda) {
            return Err(Error::Domain(format!("pair ({mu}, {lambda}) is outside this table")));
        }
        if mu.size() > lambda.size() {
            if c.is_zero() {
                return Ok(());
            }
            return Err(Error::Domain(format!(
                "c_{{{lambda},{mu}}} = {c} but |μ| > |λ| forces zero"
            )));
        }
        self.entries.insert((mu.clone(), lambda.clone()), c);
        Ok(())
    }

    /// Copies every `λ`-degree block of `other` into this table.
    pub fn merge(&mut self, other: &CoefficientTable) {
        self.max_degree = self.max_degree.max(other.max_degree);
        self.lambda_degrees.extend(other.lambda_degrees.iter().copied());
        for (k, v) in &other.entries {
            self.entries.insert(k.clone(), v.clone());
        }
    }

    /// Stored `(μ, λ, c)` triples with `|μ| ≤ |λ|`, in key order.
    pub fn stored(&self) -> impl Iterator<Item = (&Partition, &Partition, &BigUint)> {
        self.entries.iter().map(|((m, l), c)| (m, l, c))
    }

    /// Nonzero entries.
    pub fn nonzero(&self) -> impl Iterator<Item = (&Partition, &Partition, &BigUint)> {
        self.stored().filter(|(_, _, c)| !c.is_zero())
    }

    /// `μ` axis: every partition of size `1..=max_degree`, increasing size
    /// then decreasing lex.
    pub fn mu_axis(&self) -> Vec<Partition> {
        partitions_up_to(1, self.max_degree)
    }

    /// `λ` axis over the tracked degrees, same order.
    pub fn lambda_axis(&self) -> Vec<Partition> {
        self.lambda_degrees.iter().flat_map(|&d| partitions_of(d)).collect()
    }

    /// Size of the full square of pairs, implied zeros included.
    pub fn pair_count(&self) -> usize {
        self.mu_axis().len() * self.lambda_axis().len()
    }

    /// Every pair of the full square in export order: `μ` major, then `λ`.
    pub fn all_pairs(&self) -> Vec<(Partition, Partition, BigUint)> {
        let lambdas = self.lambda_axis();
        let mut out = Vec::with_capacity(self.pair_count());
        for mu in self.mu_axis() {
            for lambda in &lambdas {
                let c = self.get(&mu, lambda);
                out.push((mu.clone(), lambda.clone(), c));
            }
        }
        out
    }

    /// Adds the identity block `c_{λλ} = 1` at degree `d`.
    pub(crate) fn set_identity_block(&mut self, d: usize) {
        for lambda in partitions_of(d) {
            self.entries.insert((lambda.clone(), lambda), BigUint::one());
        }
    }

    /// Pairs where the two tables disagree, over the union of their axes,
    /// in export order. Provenance is ignored.
    pub fn diff(&self, other: &CoefficientTable) -> Vec<Mismatch> {
        let max_degree = self.max_degree.max(other.max_degree);
        let degrees: BTreeSet<usize> = self.lambda_degrees.union(&other.lambda_degrees).copied().collect();
        let mut out = Vec::new();
        for mu in partitions_up_to(1, max_degree) {
            for &d in &degrees {
                for lambda in partitions_of(d) {
                    let (a, b) = (self.get(&mu, &lambda), other.get(&mu, &lambda));
                    let missing = !self.contains_pair(&mu, &lambda) || !other.contains_pair(&mu, &lambda);
                    if a != b || missing {
                        out.push(Mismatch { mu: mu.clone(), lambda, left: a, right: b });
                    }
                }
            }
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut s = format!("#max_degree={};provenance={}\n", self.max_degree, self.provenance);
        for (mu, lambda, c) in self.all_pairs() {
            s.push_str(&format!("{mu};{lambda};{c}\n"));
        }
        s
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty CSV table".into()))?;
        let meta = header
            .strip_prefix('#')
            .ok_or_else(|| Error::Parse("CSV table must start with a #max_degree=… line".into()))?;
        let mut max_degree = None;
        let mut provenance = None;
        for field in meta.split(';') {
            match field.split_once('=') {
                Some(("max_degree", v)) => {
                    max_degree = Some(v.parse::<usize>().map_err(|e| Error::Parse(format!("max_degree: {e}")))?)
                }
                Some(("provenance", v)) => provenance = Some(v.parse::<Provenance>()?),
                _ => return Err(Error::Parse(format!("unknown CSV header field {field:?}"))),
            }
        }
        let max_degree = max_degree.ok_or_else(|| Error::Parse("missing max_degree".into()))?;
        let provenance = provenance.ok_or_else(|| Error::Parse("missing provenance".into()))?;
        let mut rows = Vec::new();
        for (n, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(';').collect();
            if fields.len() != 3 {
                return Err(Error::Parse(format!("line {}: expected mu;lambda;c", n + 2)));
            }
            let mu: Partition = fields[0].parse()?;
            let lambda: Partition = fields[1].parse()?;
            let c: BigUint = fields[2]
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("line {}: coefficient: {e}", n + 2)))?;
            rows.push((mu, lambda, c));
        }
        Self::from_rows(max_degree, provenance, rows)
    }

    fn from_rows(max_degree: usize, provenance: Provenance, rows: Vec<(Partition, Partition, BigUint)>) -> Result<Self> {
        let degrees: BTreeSet<usize> = rows.iter().map(|(_, l, _)| l.size()).collect();
        if let Some(&d) = degrees.iter().find(|&&d| d == 0 || d > max_degree) {
            return Err(Error::Parse(format!("λ of degree {d} outside 1..={max_degree}")));
        }
        let mut t = CoefficientTable::zeros(max_degree, degrees, provenance);
        for (mu, lambda, c) in rows {
            t.set(&mu, &lambda, c)?;
        }
        Ok(t)
    }

    pub fn to_json(&self) -> Result<String> {
        let entries = self
            .all_pairs()
            .into_iter()
            .map(|(mu, lambda, c)| {
                Ok(JsonEntry {
                    mu: mu.parts().to_vec(),
                    lambda: lambda.parts().to_vec(),
                    c: serde_json::Number::from_str(&c.to_string())?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let doc = JsonTable { max_degree: self.max_degree, provenance: self.provenance, entries };
        let mut s = serde_json::to_string_pretty(&doc)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: JsonTable = serde_json::from_str(text)?;
        let rows = doc
            .entries
            .into_iter()
            .map(|e| {
                let c: BigUint = e
                    .c
                    .to_string()
                    .parse()
                    .map_err(|err| Error::Parse(format!("coefficient {}: {err}", e.c)))?;
                Ok((Partition::new(e.mu)?, Partition::new(e.lambda)?, c))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(doc.max_degree, doc.provenance, rows)
    }

    /// Writes CSV, or JSON when the path ends in `.json`. The file appears
    /// atomically.
    pub fn save(&self, path: &Path) -> Result<()> {
        let text = match path.extension().and_then(|e| e.to_str()) {
            Some("json") => self.to_json()?,
            _ => self.to_csv(),
        };
        write_atomic(path, text.as_bytes())
    }

    /// Reads either format, sniffing the first non-blank character.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_csv(text)
        }
    }
}

/// One disagreeing pair found by [`CoefficientTable::diff`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub mu: Partition,
    pub lambda: Partition,
    pub left: BigUint,
    pub right: BigUint,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mu={} lambda={}: {} vs {}", self.mu, self.lambda, self.left, self.right)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTable {
    max_degree: usize,
    provenance: Provenance,
    entries: Vec<JsonEntry>,
}

#[derive(Serialize, Deserialize)]
struct JsonEntry {
    mu: Vec<usize>,
    lambda: Vec<usize>,
    c: serde_json::Number,
}

/// Serializes a big natural as a plain JSON number.
pub(crate) fn serialize_natural<S: serde::Serializer>(c: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    let n = serde_json::Number::from_str(&c.to_string()).map_err(serde::ser::Error::custom)?;
    n.serialize(s)
}

pub(crate) fn serialize_naturals<S: serde::Serializer>(cs: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(cs.len()))?;
    for c in cs {
        let n = serde_json::Number::from_str(&c.to_string()).map_err(serde::ser::Error::custom)?;
        seq.serialize_element(&n)?;
    }
    seq.end()
}

/// Write to a temporary file in the target directory, then rename over
/// the target.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}
