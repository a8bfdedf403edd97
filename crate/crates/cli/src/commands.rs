use std::fmt::Write as _;
use std::path::Path;
use std::time::{Duration, Instant};

use compfactors::analysis::{analyze as run_analysis, AnalysisReport, Counterexample};
use compfactors::baseline::{baseline_composition_factors, BaselineMode};
use compfactors::heatmap::render_heatmap;
use compfactors::partition::partitions_of;
use compfactors::puzzle::Engine;
use compfactors::table::write_atomic;
use compfactors::{CoefficientTable, Error, Provenance};

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_IO: u8 = 3;

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) | Error::Json(_) | Error::Parse(_) => EXIT_IO,
        Error::Domain(_) | Error::Internal(_) => EXIT_USAGE,
    }
}

type Outcome = compfactors::Result<u8>;

fn set_threads(threads: Option<u32>) -> compfactors::Result<()> {
    if let Some(n) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
            .map_err(|e| Error::Domain(format!("cannot start {n} worker threads: {e}")))?;
    }
    Ok(())
}

fn optimized_table(degree: usize, verbose: bool) -> compfactors::Result<CoefficientTable> {
    let engine = Engine::new(degree);
    let mut table = CoefficientTable::zeros(degree, [], Provenance::Optimized);
    let total_mu: usize = (1..=degree).map(|n| partitions_of(n).len()).sum();
    for d in 1..=degree {
        let start = Instant::now();
        let block = engine.composition_factors(d)?;
        let elapsed = start.elapsed();
        table.merge(&block);
        if verbose {
            let pairs = total_mu * partitions_of(d).len();
            println!("degree {d:>2}: {pairs:>7} coefficients in {:.3} s", elapsed.as_secs_f64());
        }
    }
    Ok(table)
}

pub fn compute(degree: usize, out: &Path, threads: Option<u32>) -> Outcome {
    set_threads(threads)?;
    let start = Instant::now();
    let table = optimized_table(degree, true)?;
    table.save(out)?;
    println!(
        "wrote {} coefficient pairs to {} ({:.3} s total)",
        table.pair_count(),
        out.display(),
        start.elapsed().as_secs_f64()
    );
    Ok(0)
}

pub fn verify(degree: Option<usize>, input: Option<&Path>, mode: BaselineMode, threads: Option<u32>) -> Outcome {
    set_threads(threads)?;
    let optimized = match input {
        Some(p) => CoefficientTable::load(p)?,
        None => {
            let d = degree.ok_or_else(|| Error::Domain("verify needs --degree or --in".into()))?;
            optimized_table(d, false)?
        }
    };
    let degree = degree.unwrap_or(optimized.max_degree());
    let start = Instant::now();
    let baseline = baseline_composition_factors(degree, mode)?;
    println!("baseline ({mode}) to degree {degree} in {:.3} s", start.elapsed().as_secs_f64());
    let mismatches = optimized.diff(&baseline);
    let compared = baseline.pair_count().max(optimized.pair_count());
    match mismatches.first() {
        None => {
            println!("PASS: {compared} coefficient pairs agree");
            Ok(0)
        }
        Some(first) => {
            println!("FAIL: {} of {compared} pairs differ; first {first}", mismatches.len());
            Ok(EXIT_MISMATCH)
        }
    }
}

fn mean_time(runs: usize, mut f: impl FnMut() -> compfactors::Result<()>) -> compfactors::Result<Duration> {
    let mut total = Duration::ZERO;
    for _ in 0..runs {
        let start = Instant::now();
        f()?;
        total += start.elapsed();
    }
    Ok(total / runs as u32)
}

pub fn bench(
    max_degree: usize,
    cutoff: usize,
    runs: usize,
    mode: BaselineMode,
    csv: Option<&Path>,
    threads: Option<u32>,
) -> Outcome {
    set_threads(threads)?;
    println!("{:>6}  {:>14}  {:>14}  {:>9}", "degree", "optimized_s", "baseline_s", "speedup");
    let mut rows = String::from("degree,optimized_seconds,baseline_seconds\n");
    for d in 1..=max_degree {
        let opt = mean_time(runs, || optimized_table(d, false).map(drop))?;
        let base = if d <= cutoff {
            Some(mean_time(runs, || baseline_composition_factors(d, mode).map(drop))?)
        } else {
            None
        };
        let (base_txt, speed_txt, base_csv) = match base {
            Some(b) => (
                format!("{:.6}", b.as_secs_f64()),
                format!("{:.1}x", b.as_secs_f64() / opt.as_secs_f64().max(1e-9)),
                format!("{:.6}", b.as_secs_f64()),
            ),
            None => ("inf".to_string(), "-".to_string(), String::new()),
        };
        println!("{d:>6}  {:>14.6}  {base_txt:>14}  {speed_txt:>9}", opt.as_secs_f64());
        let _ = writeln!(rows, "{d},{:.6},{base_csv}", opt.as_secs_f64());
    }
    if let Some(p) = csv {
        write_atomic(p, rows.as_bytes())?;
    }
    Ok(0)
}

pub fn export(input: &Path, json: bool, out: &Path) -> Outcome {
    let table = CoefficientTable::load(input)?;
    let text = if json { table.to_json()? } else { table.to_csv() };
    write_atomic(out, text.as_bytes())?;
    println!("wrote {} coefficient pairs to {}", table.pair_count(), out.display());
    Ok(0)
}

pub fn heatmap(input: &Path, out: &Path) -> Outcome {
    let table = CoefficientTable::load(input)?;
    write_atomic(out, render_heatmap(&table).as_bytes())?;
    println!("wrote {}x{} heatmap to {}", table.mu_axis().len(), table.lambda_axis().len(), out.display());
    Ok(0)
}

pub fn analyze(input: &Path, out: &Path) -> Outcome {
    let table = CoefficientTable::load(input)?;
    let report = run_analysis(&table);
    std::fs::create_dir_all(out)?;
    let mut json = serde_json::to_string_pretty(&report)?;
    json.push('\n');
    write_atomic(&out.join("report.json"), json.as_bytes())?;
    let text = render_report(&report);
    write_atomic(&out.join("report.txt"), text.as_bytes())?;
    print!("{text}");
    Ok(0)
}

fn list(s: &mut String, title: &str, items: &[Counterexample]) {
    let _ = writeln!(s, "{title}: {} counterexample(s)", items.len());
    for ce in items {
        let _ = writeln!(s, "  lambda={} mu={} c={}", ce.lambda, ce.mu, ce.c);
    }
}

fn render_report(r: &AnalysisReport) -> String {
    let mut s = format!("analysis of a degree-{} table\n", r.max_degree);
    list(&mut s, "row [d]", &r.conjecture_rows.row);
    list(&mut s, "column [1^d], hooks [a,1^b] with a >= 1", &r.conjecture_rows.column_with_a_one);
    list(&mut s, "column [1^d], hooks [a,1^b] with a >= 2", &r.conjecture_rows.column_without_a_one);
    list(&mut s, "boxes below the first row", &r.boxes_below);
    list(&mut s, "boxes outside the first row and column", &r.outside_hook);
    let observed = r.pushes.iter().filter(|p| p.plateau.is_some()).count();
    let _ = writeln!(
        s,
        "push sequences: {} seeds, {observed} plateau(s) observed, {} inconclusive",
        r.pushes.len(),
        r.pushes.len() - observed
    );
    for p in &r.pushes {
        let values: Vec<String> = p.values.iter().map(|v| v.to_string()).collect();
        let verdict = match &p.plateau {
            Some(pl) => format!("N={} x={}", pl.n, pl.x),
            None => "inconclusive".to_string(),
        };
        let _ = writeln!(s, "  lambda={} mu={} [{}] {verdict}", p.origin.0, p.origin.1, values.join(","));
    }
    s
}
