//! Command-line front end.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::lattice::export::{to_dot, to_json_value};
use crate::lattice::orbit_decomposition;
use crate::path::{IncrementVector, LatticePath};
use crate::scan::{scan, DeltaChoice, NuSource, ScanConfig};
use crate::stats::{StatReport, Statistic};
use crate::tamari::{
    build_alt_tamari_with, max_elements_from_env, TamariLattice, TamariOptions, MAX_ELEMENTS_ENV,
};
use crate::verify::{self, Suite, VerifyConfig};

#[derive(Debug, Parser)]
#[command(
    name = "alt-tamari",
    version,
    about = "Alt nu-Tamari lattices and rowmotion"
)]
pub struct Cli {
    /// Refuse lattices with more elements than this.
    #[arg(long, global = true, env = MAX_ELEMENTS_ENV)]
    pub max_elements: Option<usize>,
    /// Skip the semidistributivity check when building lattices.
    #[arg(long, global = true)]
    pub no_semidistributive_check: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build Tam_delta(nu) and optionally export its cover graph.
    Build(BuildArgs),
    /// Print the rowmotion orbits of Tam_delta(nu) with statistic tables.
    Orbits(OrbitsArgs),
    /// Compare the engine with the closed forms over a parameter range.
    Verify(VerifyArgs),
    /// Compare orbit data across increment vectors for many nu.
    Scan(ScanArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Json,
}

#[derive(Debug, Args)]
pub struct LatticeArgs {
    /// The path nu, as `EN^2E^2N` or run lengths `(1,0,2,0)`.
    #[arg(long)]
    pub nu: LatticePath,
    /// Increment vector as a comma list; defaults to delta = nu (the nu-Tamari order).
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<IncrementVector>,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[command(flatten)]
    pub lattice: LatticeArgs,
    #[arg(long, value_enum)]
    pub export: Option<ExportFormat>,
    /// Export destination; defaults to `lattice.dot` or `lattice.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OrbitsArgs {
    #[command(flatten)]
    pub lattice: LatticeArgs,
    /// Statistics to tabulate.
    #[arg(long = "stat", value_delimiter = ',', default_value = "ddeg")]
    pub stats: Vec<Statistic>,
    /// Write the orbit decomposition and reports as JSON here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// hook, two-row, switching, csp, interval, congruence or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 6)]
    pub max_a: usize,
    #[arg(long, default_value_t = 6)]
    pub max_b: usize,
    /// Random cases for the interval suite.
    #[arg(long, default_value_t = 20)]
    pub cases: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Print only failing checks and the totals.
    #[arg(long)]
    pub failures_only: bool,
    /// Write the full report as JSON here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Explicit paths to scan; repeatable.
    #[arg(long)]
    pub nu: Vec<LatticePath>,
    /// Scan this many random paths instead of all small ones.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 4)]
    pub max_north: usize,
    #[arg(long, default_value_t = 6)]
    pub max_east: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Increment vectors to compare; repeatable. Without it every vector is used.
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Vec<IncrementVector>,
    /// Use every increment vector (the default when no --delta is given).
    #[arg(long, conflicts_with = "delta")]
    pub all_deltas: bool,
    /// Statistics whose orbit sums are compared.
    #[arg(long = "stat", value_delimiter = ',', default_value = "ddeg")]
    pub stats: Vec<Statistic>,
    /// Skip any nu with more paths than this; must not exceed --max-elements.
    #[arg(long, default_value_t = 5000)]
    pub scan_max_elements: usize,
    /// Print only counterexamples and skipped paths.
    #[arg(long)]
    pub quiet: bool,
    /// Write the report as JSON here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn options(cli: &Cli) -> TamariOptions {
    let mut options = TamariOptions {
        max_elements: cli.max_elements.unwrap_or_else(max_elements_from_env),
        ..TamariOptions::default()
    };
    options.lattice.check_semidistributive = !cli.no_semidistributive_check;
    options
}

fn build(args: &LatticeArgs, options: &TamariOptions) -> Result<TamariLattice> {
    let rle = args.nu.run_lengths();
    let delta = match &args.delta {
        Some(d) => d.fit_to(&rle)?,
        None => IncrementVector::full(&rle),
    };
    build_alt_tamari_with(&args.nu, &delta, options)
        .with_context(|| format!("building Tam_{delta}({})", args.nu.to_exponent_string()))
}

fn write_json<T: Serialize>(path: &PathBuf, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}

/// Runs a parsed command line, printing to `out`; returns whether every
/// check passed.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let options = options(cli);
    match &cli.command {
        Command::Build(args) => {
            let t = build(&args.lattice, &options)?;
            let l = t.lattice();
            let semi = l.is_semidistributive();
            writeln!(out, "nu: {}", t.nu().to_exponent_string())?;
            writeln!(out, "delta: {}", t.delta())?;
            writeln!(out, "elements: {}", t.len())?;
            writeln!(out, "covers: {}", l.cover_count())?;
            writeln!(out, "semidistributive: {semi}")?;
            if let Some(format) = args.export {
                let label = |x: usize| t.path(x).to_exponent_string();
                let (default, text) = match format {
                    ExportFormat::Dot => ("lattice.dot", to_dot(l, "tamari", label)),
                    ExportFormat::Json => (
                        "lattice.json",
                        serde_json::to_string_pretty(&to_json_value(l, label))? + "\n",
                    ),
                };
                let path = args.out.clone().unwrap_or_else(|| PathBuf::from(default));
                fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
                writeln!(out, "wrote {}", path.display())?;
            }
            Ok(semi)
        }
        Command::Orbits(args) => {
            let t = build(&args.lattice, &options)?;
            let orbits = orbit_decomposition(t.lattice())?;
            let summary = orbits.summary();
            writeln!(out, "elements: {}", t.len())?;
            writeln!(out, "orbits: {} (order {})", orbits.len(), summary.order)?;
            for (i, orbit) in orbits.orbits().iter().enumerate() {
                let paths: Vec<String> = orbit
                    .iter()
                    .map(|&x| t.path(x).to_exponent_string())
                    .collect();
                writeln!(out, "  {i}: size {}: {}", orbit.len(), paths.join(" -> "))?;
            }
            let reports = args
                .stats
                .iter()
                .map(|st| StatReport::from_values(st.name(), &st.values(&t), &orbits))
                .collect::<Result<Vec<_>, _>>()?;
            for r in &reports {
                writeln!(out)?;
                write!(out, "{}", r.to_table())?;
            }
            if let Some(path) = &args.out {
                #[derive(Serialize)]
                struct Dump<'a> {
                    nu: String,
                    delta: String,
                    paths: Vec<String>,
                    #[serde(flatten)]
                    orbits: crate::lattice::orbits::OrbitSummary,
                    statistics: &'a [StatReport],
                }
                let dump = Dump {
                    nu: t.nu().to_exponent_string(),
                    delta: t.delta().to_string(),
                    paths: t
                        .paths()
                        .iter()
                        .map(LatticePath::to_exponent_string)
                        .collect(),
                    orbits: summary,
                    statistics: &reports,
                };
                write_json(path, &dump)?;
            }
            Ok(true)
        }
        Command::Verify(args) => {
            let suites = Suite::parse_list(&args.suite).map_err(anyhow::Error::msg)?;
            let config = VerifyConfig {
                max_a: args.max_a,
                max_b: args.max_b,
                interval_cases: args.cases,
                seed: args.seed,
                options,
            };
            let report = verify::run(&suites, &config);
            if args.failures_only {
                for c in report.failures() {
                    writeln!(
                        out,
                        "FAIL  {}  {}  {}  {}",
                        c.suite, c.case, c.check, c.detail
                    )?;
                }
                let (passed, failed) = report.count();
                writeln!(out, "{passed} passed, {failed} failed")?;
            } else {
                write!(out, "{}", report.to_table())?;
            }
            if let Some(path) = &args.out {
                write_json(path, &report)?;
            }
            Ok(report.passed())
        }
        Command::Scan(args) => {
            let source = if !args.nu.is_empty() {
                NuSource::Explicit(args.nu.clone())
            } else if let Some(count) = args.random {
                NuSource::Random {
                    count,
                    max_north: args.max_north,
                    max_east: args.max_east,
                    seed: args.seed,
                }
            } else {
                NuSource::Exhaustive {
                    max_north: args.max_north,
                    max_east: args.max_east,
                }
            };
            let deltas = if args.delta.is_empty() || args.all_deltas {
                DeltaChoice::All
            } else {
                DeltaChoice::List(args.delta.clone())
            };
            let scan_options = TamariOptions {
                max_elements: args.scan_max_elements,
                ..options
            };
            let config = ScanConfig::new(
                source,
                deltas,
                args.stats.clone(),
                scan_options,
                options.max_elements,
            )?;
            let report = scan(&config);
            let table = report.to_table();
            if args.quiet {
                for line in table.lines().filter(|l| !l.contains("CONSISTENT")) {
                    writeln!(out, "{line}")?;
                }
            } else {
                write!(out, "{table}")?;
            }
            if let Some(path) = &args.out {
                write_json(path, &report)?;
            }
            Ok(report.passed())
        }
    }
}

/// Parses the process arguments and runs; the exit code is 0 only when
/// everything passed.
pub fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(&cli, &mut lock) {
        Ok(true) => std::process::ExitCode::SUCCESS,
        Ok(false) => std::process::ExitCode::FAILURE,
        Err(e) => {
            let _ = lock.flush();
            eprintln!("error: {e:#}");
            std::process::ExitCode::from(2)
        }
    }
}

/// Parses `args` (without the program name) for tests and embedding.
pub fn parse<I, S>(args: I) -> Result<Cli>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("alt-tamari"))
        .chain(args.into_iter().map(Into::into));
    match Cli::try_parse_from(argv) {
        Ok(cli) => Ok(cli),
        Err(e) => bail!("{e}"),
    }
}
