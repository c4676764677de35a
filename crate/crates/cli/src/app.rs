//! Command-line entry points.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use fpi_core::classify::{fpi_verdict, Checks, SearchOptions, VerdictOptions};
use fpi_core::ring::RingSpec;
use fpi_core::AlgebraError;

use crate::census::{run_census, CensusConfig, Family};
use crate::render::{error_json, report_json, report_text};
use crate::spec::parse_ring_spec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    All,
    Fpi,
    Gorenstein,
    Fpure,
    Canonical,
}

impl CheckArg {
    pub fn checks(self) -> Checks {
        match self {
            CheckArg::All => Checks::all(),
            CheckArg::Fpi => Checks::only_fpi(),
            CheckArg::Gorenstein => Checks::only_gorenstein(),
            CheckArg::Fpure => Checks::only_f_pure(),
            CheckArg::Canonical => Checks::only_canonical(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Monomial,
    BinomialSample,
}

#[derive(Debug, Parser)]
#[command(
    name = "fpi",
    version,
    about = "Classify graded quotient rings over F_p: Cohen-Macaulay, Gorenstein, F-pure and weakly FPI"
)]
#[command(args_conflicts_with_subcommands = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
    #[command(flatten)]
    pub report: ReportArgs,
}

#[derive(Debug, Clone, clap::Args)]
pub struct SearchArgs {
    /// Seed for every randomized search.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Highest degree tried for non-zero-divisors; also the width of the
    /// embedding and multiplier degree windows.
    #[arg(long = "max-degree", default_value_t = 2)]
    pub max_degree: u64,
    /// Random draws per search space too large to enumerate.
    #[arg(long, default_value_t = 256)]
    pub trials: u64,
}

impl SearchArgs {
    pub fn options(&self) -> SearchOptions {
        SearchOptions { seed: self.seed, trials: self.trials, max_degree: self.max_degree, ..SearchOptions::default() }
    }
}

#[derive(Debug, Clone, clap::Args)]
pub struct ReportArgs {
    /// Ring-spec file.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = CheckArg::All)]
    pub check: CheckArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(flatten)]
    pub search: SearchArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify an enumerated family of rings and print a CSV table.
    Census {
        #[arg(long, value_enum, default_value_t = FamilyArg::Monomial)]
        family: FamilyArg,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        /// Largest generator degree.
        #[arg(long, default_value_t = 2)]
        degree: u64,
        /// Characteristics, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "2")]
        primes: Vec<u64>,
        /// Ring count for the binomial sample.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
}

/// Flags that shape a single report.
#[derive(Clone, Copy, Debug)]
pub struct ReportFlags {
    pub checks: Checks,
    pub search: SearchOptions,
    pub format: Format,
}

impl Default for ReportFlags {
    fn default() -> Self {
        ReportFlags { checks: Checks::all(), search: SearchOptions::default(), format: Format::Json }
    }
}

/// A rendered report and the exit code it calls for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rendered {
    pub output: String,
    pub exit_code: i32,
}

/// Classifies a ring and renders the result. Errors render as an error
/// object (JSON) or message (text) with exit code 1.
pub fn run_report(ring: &RingSpec, flags: &ReportFlags) -> Rendered {
    let options = VerdictOptions { search: flags.search, checks: flags.checks };
    match fpi_verdict(ring, &options) {
        Ok(rep) => {
            let exit_code = if rep.is_conclusive() { EXIT_OK } else { EXIT_INCONCLUSIVE };
            let output = match flags.format {
                Format::Json => serde_json::to_string_pretty(&report_json(&rep)).expect("JSON values serialize") + "\n",
                Format::Text => report_text(&rep),
            };
            Rendered { output, exit_code }
        }
        Err(e) => Rendered { output: render_error(&e, flags.format), exit_code: EXIT_ERROR },
    }
}

fn render_error(e: &AlgebraError, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&error_json(e)).expect("JSON values serialize") + "\n",
        Format::Text => format!("error: {}\n", e),
    }
}

/// Runs the CLI on parsed arguments, writing to stdout/stderr, and returns
/// the process exit code.
pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Some(Command::Census { family, vars, degree, primes, samples, search }) => {
            let config = CensusConfig {
                family: match family {
                    FamilyArg::Monomial => Family::Monomial,
                    FamilyArg::BinomialSample => Family::BinomialSample { count: samples },
                },
                nvars: vars,
                degree,
                primes,
                seed: search.seed,
                search: search.options(),
            };
            match run_census(&config) {
                Ok(out) => {
                    print!("{}", out.to_csv());
                    eprintln!("{}", out.summary_text());
                    if out.summary.errors > 0 || out.summary.inconclusive > 0 {
                        EXIT_INCONCLUSIVE
                    } else {
                        EXIT_OK
                    }
                }
                Err(e) => {
                    eprintln!("error: {}", e);
                    EXIT_ERROR
                }
            }
        }
        None => {
            let args = cli.report;
            let path = match &args.input {
                Some(p) => p,
                None => {
                    eprintln!("error: --input FILE is required");
                    return EXIT_ERROR;
                }
            };
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {}: {}", path.display(), e);
                    return EXIT_ERROR;
                }
            };
            let ring = match parse_ring_spec(&text) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {}: {}", path.display(), e);
                    return EXIT_ERROR;
                }
            };
            let flags = ReportFlags { checks: args.check.checks(), search: args.search.options(), format: args.format };
            let rendered = run_report(&ring, &flags);
            print!("{}", rendered.output);
            rendered.exit_code
        }
    }
}
