//! Scans over a coefficient table: the conjectured vanishing patterns,
//! diagonal-push sequences and their plateaus, and `(m, d)` clusters.
//!
//! A counterexample is a finding, never an error.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{add_top_row, partitions_of, Partition};
use crate::table::{serialize_natural, serialize_naturals, CoefficientTable};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub mu: Partition,
    pub lambda: Partition,
    #[serde(serialize_with = "serialize_natural")]
    pub c: BigUint,
}

/// Row patterns for `λ = [d]` and `λ = [1^d]`.
///
/// The column condition asks for `μ = [a, 1^b]` with `2a + b ∈ {d, d+1}`.
/// Whether `a = 1` counts is ambiguous, so both readings are reported.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConjectureRowsReport {
    pub row: Vec<Counterexample>,
    pub column_with_a_one: Vec<Counterexample>,
    pub column_without_a_one: Vec<Counterexample>,
}

impl ConjectureRowsReport {
    pub fn holds(&self) -> bool {
        self.row.is_empty() && self.column_with_a_one.is_empty()
    }
}

fn nonzero_with_lambda<'a>(
    t: &'a CoefficientTable,
    pred: impl Fn(&Partition) -> bool + 'a,
) -> impl Iterator<Item = Counterexample> + 'a {
    t.nonzero().filter(move |(_, l, _)| pred(l)).map(|(m, l, c)| Counterexample {
        mu: m.clone(),
        lambda: l.clone(),
        c: c.clone(),
    })
}

pub fn check_conjecture_rows(t: &CoefficientTable) -> ConjectureRowsReport {
    let mut report = ConjectureRowsReport::default();
    for ce in nonzero_with_lambda(t, |l| l.len() == 1) {
        if ce.mu != ce.lambda {
            report.row.push(ce);
        }
    }
    for ce in nonzero_with_lambda(t, |l| l.first() == 1) {
        let d = ce.lambda.size();
        let allowed = |with_a_one: bool| match ce.mu.as_hook() {
            Some((a, b)) if a > 1 || with_a_one => 2 * a + b == d || 2 * a + b == d + 1,
            _ => false,
        };
        if !allowed(true) {
            report.column_with_a_one.push(ce.clone());
        }
        if !allowed(false) {
            report.column_without_a_one.push(ce);
        }
    }
    report
}

/// Pairs with `c_{λμ} > 0` where `μ` has more boxes below its first row
/// than `λ` does.
pub fn check_boxes_below(t: &CoefficientTable) -> Vec<Counterexample> {
    let below = |p: &Partition| p.size() - p.first();
    nonzero_with_lambda(t, |_| true).filter(|ce| below(&ce.mu) > below(&ce.lambda)).collect()
}

/// Pairs with `c_{λμ} > 0` where `μ` has more boxes outside its first row
/// and column than `λ` has outside its first column.
pub fn check_outside_hook(t: &CoefficientTable) -> Vec<Counterexample> {
    let m = |p: &Partition| p.size() - p.first() - (p.len() - 1);
    let n = |p: &Partition| p.size() - p.len();
    nonzero_with_lambda(t, |_| true).filter(|ce| m(&ce.mu) > n(&ce.lambda)).collect()
}

/// Violations of the structural facts every table must satisfy: identity
/// blocks on `|μ| = |λ|` and zero whenever `|μ| > |λ|`.
pub fn check_structure(t: &CoefficientTable) -> Vec<String> {
    let mut out = Vec::new();
    for (mu, lambda, c) in t.all_pairs() {
        if mu.size() > lambda.size() && !c.is_zero() {
            out.push(format!("c_{{{lambda},{mu}}} = {c} with |μ| > |λ|"));
        }
        if mu.size() == lambda.size() {
            let want = if mu == lambda { BigUint::one() } else { BigUint::zero() };
            if c != want {
                out.push(format!("c_{{{lambda},{mu}}} = {c}, expected {want}"));
            }
        }
    }
    out
}

/// `c` along `(λ, μ), Δ(λ, μ), Δ²(λ, μ), …`, where `Δ` adds a box to the
/// first row of both partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PushSequence {
    pub origin: (Partition, Partition),
    #[serde(serialize_with = "serialize_naturals")]
    pub values: Vec<BigUint>,
}

pub fn push_sequence(t: &CoefficientTable, lambda: &Partition, mu: &Partition, r: usize) -> Result<PushSequence> {
    let need = lambda.size() + r;
    if need > t.max_degree() || !(lambda.size()..=need).all(|d| t.lambda_degrees().contains(&d)) {
        return Err(Error::Domain(format!(
            "push sequence of length {} from {lambda} needs a table of degree at least {need}, have {}",
            r + 1,
            t.max_degree()
        )));
    }
    let (mut l, mut m) = (lambda.clone(), mu.clone());
    let mut values = Vec::with_capacity(r + 1);
    for _ in 0..=r {
        values.push(t.get(&m, &l));
        l = add_top_row(&l, 1);
        m = add_top_row(&m, 1);
    }
    Ok(PushSequence { origin: (lambda.clone(), mu.clone()), values })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Plateau {
    pub n: usize,
    #[serde(serialize_with = "serialize_natural")]
    pub x: BigUint,
}

/// Fewest trailing equal values needed to call a plateau.
pub const PLATEAU_WINDOW: usize = 3;

/// The start `N` and value `x` of the trailing run of equal values, if that
/// run has at least [`PLATEAU_WINDOW`] entries.
pub fn detect_plateau(s: &PushSequence) -> Option<Plateau> {
    let last = s.values.last()?;
    let run = s.values.iter().rev().take_while(|v| *v == last).count();
    if run < PLATEAU_WINDOW {
        return None;
    }
    Some(Plateau { n: s.values.len() - run, x: last.clone() })
}

/// The block of entries with `|μ| = m` and `|λ| = d`, in decreasing lex
/// order along both axes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cluster {
    pub mus: Vec<Partition>,
    pub lambdas: Vec<Partition>,
    pub values: Vec<Vec<BigUint>>,
}

impl Cluster {
    pub fn dimensions(&self) -> (usize, usize) {
        (self.mus.len(), self.lambdas.len())
    }
}

pub fn cluster(t: &CoefficientTable, m: usize, d: usize) -> Result<Cluster> {
    if m == 0 || m > d || d > t.max_degree() || !t.lambda_degrees().contains(&d) {
        return Err(Error::Domain(format!(
            "cluster ({m}, {d}) is outside a table of degree {}",
            t.max_degree()
        )));
    }
    let mus = partitions_of(m);
    let lambdas = partitions_of(d);
    let values = mus
        .iter()
        .map(|mu| lambdas.iter().map(|l| t.get(mu, l)).collect())
        .collect();
    Ok(Cluster { mus, lambdas, values })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PushReport {
    pub origin: (Partition, Partition),
    #[serde(serialize_with = "serialize_naturals")]
    pub values: Vec<BigUint>,
    pub plateau: Option<Plateau>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub max_degree: usize,
    pub conjecture_rows: ConjectureRowsReport,
    pub boxes_below: Vec<Counterexample>,
    pub outside_hook: Vec<Counterexample>,
    pub pushes: Vec<PushReport>,
}

/// Runs every scan. Push sequences start at each nonzero `(λ, μ)` with
/// `|λ| ≤ max_degree − 3` and run to the table's top degree.
pub fn analyze(t: &CoefficientTable) -> AnalysisReport {
    let top = t.max_degree();
    let mut pushes = Vec::new();
    if top > PLATEAU_WINDOW {
        let mut seeds: Vec<(Partition, Partition)> = t
            .nonzero()
            .filter(|(_, l, _)| l.size() + PLATEAU_WINDOW <= top)
            .map(|(m, l, _)| (l.clone(), m.clone()))
            .collect();
        seeds.sort_by(|a, b| {
            crate::partition::size_then_revlex(&a.0, &b.0).then_with(|| crate::partition::size_then_revlex(&a.1, &b.1))
        });
        for (lambda, mu) in seeds {
            if let Ok(s) = push_sequence(t, &lambda, &mu, top - lambda.size()) {
                let plateau = detect_plateau(&s);
                pushes.push(PushReport { origin: s.origin, values: s.values, plateau });
            }
        }
    }
    AnalysisReport {
        max_degree: top,
        conjecture_rows: check_conjecture_rows(t),
        boxes_below: check_boxes_below(t),
        outside_hook: check_outside_hook(t),
        pushes,
    }
}
