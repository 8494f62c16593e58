//! Command-line front end for the `ensembles` crate.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ensembles::ewens::{sample_ewens, sample_virtual_prefix, EwensParams};
use ensembles::kernels::{discrete_bessel_kernel, discrete_sine_kernel};
use ensembles::measures::{
    mixed_zmeasure_weight, normalize_over, schur_weight, zmeasure_weight, SchurSpec, ZParams,
};
use ensembles::pdirichlet::{sample_pd, PdMethod, SimplexPoint};
use ensembles::plancherel::{edge_statistic, sample_plancherel, sup_distance_to_omega, PlancherelSampler};
use ensembles::rng::chunked;
use ensembles::stats::Histogram;
use ensembles::verify::{run_suite, DeterminantalConfig, Report, RunOptions, Suite};
use ensembles::{HalfInt, Partition, Permutation};
use serde::Serialize;
use serde_json::json;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] ensembles::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] io::Error),
    #[error("cannot write output: {0}")]
    Csv(#[from] csv::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Jsonl,
}

#[derive(Debug, Parser)]
#[command(name = "ensembles", version, about = "Sample and verify random permutations and random partitions")]
pub struct Cli {
    /// Seed of every random stream.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; output does not depend on this.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ewens-distributed permutations (default jsonl).
    SampleEwens(EwensArgs),
    /// Poisson-Dirichlet points (default csv).
    SamplePd(PdArgs),
    /// Plancherel-distributed diagrams and their statistics (default csv).
    SamplePlancherel(PlancherelArgs),
    /// Correlation kernels.
    Kernel {
        #[command(subcommand)]
        action: KernelAction,
    },
    /// z-measure weights or a normalization report (default json).
    Zmeasure(ZmeasureArgs),
    /// Schur measure weights for a pair of specializations (default json).
    Schur(SchurArgs),
    /// Run a verification suite and emit a JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct EwensArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub theta: f64,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    /// Emit the consistent chain of permutations of sizes 1..=n instead of one permutation.
    #[arg(long = "virtual")]
    pub virtual_prefix: bool,
}

#[derive(Debug, Args)]
pub struct HistogramArgs {
    /// Emit a histogram of the scalar statistic with this many bins instead of the samples.
    #[arg(long)]
    pub histogram: Option<usize>,
    /// Histogram range; the sample range when absent.
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    pub range: Option<Vec<f64>>,
}

#[derive(Debug, Args)]
pub struct PdArgs {
    #[arg(long)]
    pub theta: f64,
    #[arg(long, value_enum, default_value_t = PdMethodArg::Stick)]
    pub method: PdMethodArg,
    /// Number of leading coordinates.
    #[arg(long, default_value_t = 5)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[command(flatten)]
    pub hist: HistogramArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PdMethodArg {
    Stick,
    Dirichlet,
    Poisson,
}

impl From<PdMethodArg> for PdMethod {
    fn from(m: PdMethodArg) -> Self {
        match m {
            PdMethodArg::Stick => PdMethod::Stick,
            PdMethodArg::Dirichlet => PdMethod::Dirichlet,
            PdMethodArg::Poisson => PdMethod::Poisson,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SamplerArg {
    Rsk,
    Hookwalk,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Stat {
    Shape,
    Lis,
    Edge,
    Supdist,
}

#[derive(Debug, Args)]
pub struct PlancherelArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, value_enum, default_value_t = SamplerArg::Rsk)]
    pub sampler: SamplerArg,
    /// Statistics to emit, comma separated.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "shape")]
    pub stats: Vec<Stat>,
    /// Number of rows in the edge statistic.
    #[arg(long, default_value_t = 2)]
    pub edge_rows: usize,
    #[command(flatten)]
    pub hist: HistogramArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KernelKind {
    Bessel,
    Sine,
}

#[derive(Debug, Subcommand)]
pub enum KernelAction {
    /// Evaluate a kernel at one pair of sites.
    Eval(KernelArgs),
}

#[derive(Debug, Args)]
pub struct KernelArgs {
    #[arg(long, value_enum)]
    pub kind: KernelKind,
    /// Poissonization parameter of the discrete Bessel kernel.
    #[arg(long)]
    pub nu: Option<f64>,
    /// Bulk parameter of the discrete sine kernel, |a| < 2.
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    /// Half-integer site for the Bessel kernel, integer for the sine kernel.
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Weights,
    Report,
}

#[derive(Debug, Args)]
pub struct ZmeasureArgs {
    /// Diagram size, or the largest size for the mixed measure.
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub z: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub zp: f64,
    /// Mixing parameter; the fixed-size measure when absent.
    #[arg(long)]
    pub xi: Option<f64>,
    #[arg(long, value_enum, default_value_t = Emit::Weights)]
    pub emit: Emit,
}

#[derive(Debug, Args)]
pub struct SchurArgs {
    /// Specialization pair as JSON, or a path to a JSON file.
    #[arg(long)]
    pub spec: String,
    /// Largest diagram size summed over.
    #[arg(long, default_value_t = 10)]
    pub lmax: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name, or `all`.
    pub suite: String,
    /// Record per-check wall-clock time (reports are then no longer reproducible).
    #[arg(long)]
    pub timings: bool,
    #[arg(long)]
    pub nu: Option<f64>,
    #[arg(long)]
    pub window: Option<i64>,
    #[arg(long)]
    pub cutoff: Option<usize>,
    #[arg(long)]
    pub tol: Option<f64>,
}

/// Whether every check in the invocation passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    ChecksFailed,
}

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    if let Some(t) = cli.threads {
        if t == 0 {
            return usage("--threads must be positive");
        }
        // fails only if a pool already exists, which is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let mut out = open_output(&cli.out)?;
    let outcome = dispatch(cli, &mut out)?;
    out.flush()?;
    Ok(outcome)
}

fn open_output(path: &Option<PathBuf>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn format_or(cli: &Cli, default: Format, allowed: &[Format]) -> CliResult<Format> {
    let f = cli.format.unwrap_or(default);
    if !allowed.contains(&f) {
        return usage(format!("format {f:?} is not available for this command").to_lowercase());
    }
    Ok(f)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CliResult<Outcome> {
    match &cli.command {
        Command::SampleEwens(a) => sample_ewens_cmd(cli, a, out),
        Command::SamplePd(a) => sample_pd_cmd(cli, a, out),
        Command::SamplePlancherel(a) => sample_plancherel_cmd(cli, a, out),
        Command::Kernel { action: KernelAction::Eval(a) } => kernel_cmd(cli, a, out),
        Command::Zmeasure(a) => zmeasure_cmd(cli, a, out),
        Command::Schur(a) => schur_cmd(cli, a, out),
        Command::Verify(a) => return verify_cmd(cli, a, out),
    }?;
    Ok(Outcome::Ok)
}

/// Fixed-width histogram as CSV with columns `bin_lo, bin_hi, count, density`.
///
/// The range defaults to `[min, max]` of the samples; the last bin is closed.
pub fn emit_histogram(samples: &[f64], bins: usize, range: Option<(f64, f64)>, out: &mut dyn Write) -> CliResult<()> {
    if bins == 0 {
        return usage("a histogram needs at least one bin");
    }
    if samples.is_empty() {
        return usage("cannot build a histogram from an empty sample set");
    }
    let (lo, hi) = range.unwrap_or_else(|| {
        let lo = samples.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = samples.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if hi > lo { (lo, hi) } else { (lo - 0.5, lo + 0.5) }
    });
    let h = Histogram::new(samples, lo, hi, bins).ok_or_else(|| CliError::Usage(format!("invalid histogram range [{lo}, {hi}]")))?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["bin_lo", "bin_hi", "count", "density"])?;
    for (a, b, c, d) in h.rows() {
        w.write_record([a.to_string(), b.to_string(), c.to_string(), d.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

fn histogram_range(h: &HistogramArgs) -> Option<(f64, f64)> {
    h.range.as_ref().map(|r| (r[0], r[1]))
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> CliResult<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

fn json_pretty<T: Serialize>(out: &mut dyn Write, value: &T) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

#[derive(Serialize)]
struct EwensRecord {
    permutation: Permutation,
    cycle_type: Partition,
    cycles: usize,
}

fn sample_ewens_cmd(cli: &Cli, a: &EwensArgs, out: &mut dyn Write) -> CliResult<()> {
    let params = EwensParams::new(a.theta)?;
    let format = format_or(cli, Format::Jsonl, &[Format::Jsonl, Format::Json, Format::Csv])?;
    if a.virtual_prefix {
        if format == Format::Csv {
            return usage("--virtual output is jsonl or json");
        }
        let chains: Vec<Vec<Permutation>> = chunked(a.count, cli.seed, "sample-ewens-virtual", |r| {
            sample_virtual_prefix(a.n, params, r).map(|v| v.levels().to_vec())
        })
        .into_iter()
        .collect::<Result<_, _>>()?;
        match format {
            Format::Json => json_pretty(out, &chains)?,
            _ => chains.iter().try_for_each(|c| json_line(out, c))?,
        }
        return Ok(());
    }
    let records: Vec<EwensRecord> = chunked(a.count, cli.seed, "sample-ewens", |r| {
        let s = sample_ewens(a.n, params, r);
        EwensRecord { cycle_type: s.cycle_type(), cycles: s.num_cycles(), permutation: s }
    });
    match format {
        Format::Jsonl => records.iter().try_for_each(|r| json_line(out, r))?,
        Format::Json => json_pretty(out, &records)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["sample", "cycles", "cycle_type", "permutation"])?;
            for (i, r) in records.iter().enumerate() {
                w.write_record([i.to_string(), r.cycles.to_string(), to_json(&r.cycle_type), to_json(&r.permutation)])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn sample_pd_cmd(cli: &Cli, a: &PdArgs, out: &mut dyn Write) -> CliResult<()> {
    if a.k == 0 {
        return usage("--k must be positive");
    }
    if !(a.theta > 0.0) {
        return usage(format!("--theta must be positive, got {}", a.theta));
    }
    let method = PdMethod::from(a.method);
    let points: Vec<SimplexPoint> = chunked(a.count, cli.seed, "sample-pd", |r| sample_pd(method, a.theta, a.k, r))
        .into_iter()
        .collect::<Result<_, _>>()?;
    if let Some(bins) = a.hist.histogram {
        format_or(cli, Format::Csv, &[Format::Csv])?;
        let x1: Vec<f64> = points.iter().map(|p| p.x(1)).collect();
        return emit_histogram(&x1, bins, histogram_range(&a.hist).or(Some((0.0, 1.0))), out);
    }
    match format_or(cli, Format::Csv, &[Format::Csv, Format::Jsonl, Format::Json])? {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header = vec!["sample".to_string()];
            header.extend((1..=a.k).map(|i| format!("x{i}")));
            header.push("tail".into());
            w.write_record(&header)?;
            for (s, p) in points.iter().enumerate() {
                let mut row = vec![s.to_string()];
                row.extend((1..=a.k).map(|i| p.x(i).to_string()));
                row.push(p.tail().to_string());
                w.write_record(&row)?;
            }
            w.flush()?;
        }
        Format::Jsonl => points.iter().try_for_each(|p| json_line(out, p))?,
        Format::Json => json_pretty(out, &points)?,
    }
    Ok(())
}

struct PlancherelRow {
    shape: Partition,
    lis: usize,
    edge: Vec<f64>,
    supdist: f64,
}

fn sample_plancherel_cmd(cli: &Cli, a: &PlancherelArgs, out: &mut dyn Write) -> CliResult<()> {
    if a.n == 0 {
        return usage("--n must be positive");
    }
    let sampler = match a.sampler {
        SamplerArg::Rsk => PlancherelSampler::Rsk,
        SamplerArg::Hookwalk => PlancherelSampler::Hookwalk,
    };
    let wants = |s: Stat| a.stats.contains(&s);
    let rows: Vec<PlancherelRow> = chunked(a.count, cli.seed, "sample-plancherel", |r| -> ensembles::Result<PlancherelRow> {
        let shape = sample_plancherel(sampler, a.n, r);
        let edge = if wants(Stat::Edge) { edge_statistic(&shape, a.edge_rows)? } else { Vec::new() };
        let supdist = if wants(Stat::Supdist) { sup_distance_to_omega(&shape)? } else { f64::NAN };
        Ok(PlancherelRow { lis: shape.first_row(), shape, edge, supdist })
    })
    .into_iter()
    .collect::<Result<_, _>>()?;

    if let Some(bins) = a.hist.histogram {
        format_or(cli, Format::Csv, &[Format::Csv])?;
        let values: Vec<f64> = match a.stats.as_slice() {
            [Stat::Lis] => rows.iter().map(|r| r.lis as f64).collect(),
            [Stat::Supdist] => rows.iter().map(|r| r.supdist).collect(),
            [Stat::Edge] => rows.iter().map(|r| r.edge[0]).collect(),
            _ => return usage("--histogram needs exactly one of --stats lis, edge or supdist"),
        };
        return emit_histogram(&values, bins, histogram_range(&a.hist), out);
    }
    match format_or(cli, Format::Csv, &[Format::Csv, Format::Jsonl])? {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header = vec!["sample".to_string()];
            for s in &a.stats {
                match s {
                    Stat::Shape => header.push("shape".into()),
                    Stat::Lis => header.push("lis".into()),
                    Stat::Edge => header.extend((1..=a.edge_rows).map(|i| format!("edge{i}"))),
                    Stat::Supdist => header.push("supdist".into()),
                }
            }
            w.write_record(&header)?;
            for (i, r) in rows.iter().enumerate() {
                let mut row = vec![i.to_string()];
                for s in &a.stats {
                    match s {
                        Stat::Shape => row.push(to_json(&r.shape)),
                        Stat::Lis => row.push(r.lis.to_string()),
                        Stat::Edge => row.extend(r.edge.iter().map(f64::to_string)),
                        Stat::Supdist => row.push(r.supdist.to_string()),
                    }
                }
                w.write_record(&row)?;
            }
            w.flush()?;
        }
        _ => {
            for r in &rows {
                let mut obj = serde_json::Map::new();
                for s in &a.stats {
                    let (k, v) = match s {
                        Stat::Shape => ("shape", json!(r.shape)),
                        Stat::Lis => ("lis", json!(r.lis)),
                        Stat::Edge => ("edge", json!(r.edge)),
                        Stat::Supdist => ("supdist", json!(r.supdist)),
                    };
                    obj.insert(k.into(), v);
                }
                json_line(out, &obj)?;
            }
        }
    }
    Ok(())
}

fn kernel_cmd(cli: &Cli, a: &KernelArgs, out: &mut dyn Write) -> CliResult<()> {
    format_or(cli, Format::Json, &[Format::Json])?;
    let value = match a.kind {
        KernelKind::Bessel => {
            let nu = a.nu.ok_or_else(|| CliError::Usage("the Bessel kernel needs --nu".into()))?;
            let site = |t: f64| -> CliResult<HalfInt> {
                let d = 2.0 * t;
                if d.fract() != 0.0 {
                    return usage(format!("{t} is not a half-integer"));
                }
                Ok(HalfInt::from_doubled(d as i64)?)
            };
            let v = discrete_bessel_kernel(site(a.x)?, site(a.y)?, nu)?;
            json!({ "kind": "bessel", "nu": nu, "x": a.x, "y": a.y, "value": v })
        }
        KernelKind::Sine => {
            let alpha = a.a.ok_or_else(|| CliError::Usage("the sine kernel needs --a".into()))?;
            if a.x.fract() != 0.0 || a.y.fract() != 0.0 {
                return usage("the sine kernel takes integer sites");
            }
            let v = discrete_sine_kernel(a.x as i64, a.y as i64, alpha)?;
            json!({ "kind": "sine", "a": alpha, "x": a.x, "y": a.y, "value": v })
        }
    };
    json_pretty(out, &value)
}

#[derive(Serialize)]
struct Weighted {
    partition: Partition,
    weight: f64,
}

fn zmeasure_cmd(cli: &Cli, a: &ZmeasureArgs, out: &mut dyn Write) -> CliResult<()> {
    let p = ZParams::real(a.z, a.zp);
    let sizes: Vec<usize> = if a.xi.is_some() { (0..=a.n).collect() } else { vec![a.n] };
    let mut weights = Vec::new();
    for size in sizes {
        for l in ensembles::combinat::partitions_of(size) {
            let weight = match a.xi {
                Some(xi) => mixed_zmeasure_weight(&l, &p, xi)?,
                None => zmeasure_weight(&l, &p)?,
            };
            weights.push(Weighted { partition: l, weight });
        }
    }
    match a.emit {
        Emit::Weights => match format_or(cli, Format::Json, &[Format::Json, Format::Csv, Format::Jsonl])? {
            Format::Json => json_pretty(out, &weights)?,
            Format::Jsonl => weights.iter().try_for_each(|w| json_line(out, w))?,
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["partition", "weight"])?;
                for x in &weights {
                    w.write_record([to_json(&x.partition), x.weight.to_string()])?;
                }
                w.flush()?;
            }
        },
        Emit::Report => {
            format_or(cli, Format::Json, &[Format::Json])?;
            let total: f64 = weights.iter().map(|w| w.weight).sum();
            let negative = weights.iter().filter(|w| w.weight < 0.0).count();
            let mut report = json!({
                "n": a.n,
                "z": a.z,
                "zp": a.zp,
                "xi": a.xi,
                "diagrams": weights.len(),
                "total": total,
                "negative_weights": negative,
                "admissible": p.is_admissible(),
            });
            if let Some(xi) = a.xi {
                report["negative_binomial_tail"] = json!(ensembles::measures::negative_binomial_tail(a.n, a.z * a.zp, xi));
            }
            json_pretty(out, &report)?;
        }
    }
    Ok(())
}

fn read_spec(raw: &str) -> CliResult<SchurSpec> {
    let text = if raw.trim_start().starts_with('{') {
        raw.to_string()
    } else {
        std::fs::read_to_string(raw).map_err(|e| CliError::Usage(format!("cannot read spec file {raw}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("invalid specialization: {e}")))
}

fn schur_cmd(cli: &Cli, a: &SchurArgs, out: &mut dyn Write) -> CliResult<()> {
    format_or(cli, Format::Json, &[Format::Json])?;
    let spec = read_spec(&a.spec)?;
    let (phi, psi) = spec.pair()?;
    let norm = normalize_over(&phi, &psi, a.lmax, spec.closed_form())?;
    let constant = norm.closed_form.unwrap_or(norm.truncated);
    let mut weights = Vec::new();
    for l in (0..=a.lmax).flat_map(ensembles::combinat::partitions_of) {
        let w = schur_weight(&l, &phi, &psi)?;
        weights.push(json!({ "partition": l, "weight": w, "probability": w / constant }));
    }
    json_pretty(out, &json!({ "spec": spec, "normalization": norm, "weights": weights }))
}

fn verify_cmd(cli: &Cli, a: &VerifyArgs, out: &mut dyn Write) -> CliResult<Outcome> {
    format_or(cli, Format::Json, &[Format::Json])?;
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![a.suite.parse().map_err(|e: ensembles::Error| CliError::Usage(e.to_string()))?]
    };
    let d = DeterminantalConfig::default();
    let opts = RunOptions {
        seed: cli.seed,
        timings: a.timings,
        determinantal: DeterminantalConfig {
            nu: a.nu.unwrap_or(d.nu),
            window: a.window.unwrap_or(d.window),
            cutoff: a.cutoff.unwrap_or(d.cutoff),
            tol: a.tol.unwrap_or(d.tol),
        },
    };
    let reports: Vec<Report> = suites.into_iter().map(|s| run_suite(s, opts)).collect::<Result<_, _>>()?;
    if reports.len() == 1 {
        json_pretty(out, &reports[0])?;
    } else {
        json_pretty(out, &reports)?;
    }
    Ok(if reports.iter().all(|r| r.passed) { Outcome::Ok } else { Outcome::ChecksFailed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn histogram_rejects_degenerate_input() {
        let mut buf = Vec::new();
        assert!(matches!(emit_histogram(&[0.5], 0, None, &mut buf), Err(CliError::Usage(_))));
        assert!(matches!(emit_histogram(&[], 4, None, &mut buf), Err(CliError::Usage(_))));
        assert!(emit_histogram(&[1.0, 2.0], 2, Some((3.0, 3.0)), &mut buf).is_err());
        assert!(buf.is_empty());
    }

    #[test]
    fn histogram_defaults_to_sample_range() {
        let mut buf = Vec::new();
        emit_histogram(&[1.0, 2.0, 2.0, 3.0], 2, None, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "bin_lo,bin_hi,count,density\n1,2,1,0.25\n2,3,3,0.75\n");
    }

    #[test]
    fn constant_samples_get_a_unit_bin() {
        let mut buf = Vec::new();
        emit_histogram(&[4.0; 3], 1, None, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "bin_lo,bin_hi,count,density\n3.5,4.5,3,1\n");
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn global_flags_follow_subcommands() {
        let cli = Cli::try_parse_from(["ensembles", "verify", "lpp", "--seed", "9", "--format", "json"]).unwrap();
        assert_eq!(cli.seed, 9);
        assert_eq!(cli.format, Some(Format::Json));
    }
}
