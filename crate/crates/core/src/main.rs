//! Command-line front end: compute, verify, and export expansions, moment
//! series, R-transform coefficients, and noncrossing-partition data.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 resource limit exceeded.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use freegen::error::Error;
use freegen::group::GroupParameter;
use freegen::nc::{
    enumerate_by_block_type, enumerate_even_nc, enumerate_nc, mobius_to_top, BlockTypeMultiset,
    NoncrossingPartition,
};
use freegen::output::{expansion_output, nc_output, series_output, verify_output, OutputFormat};
use freegen::recurrence::{expand_power, moment_series};
use freegen::transform::{r_transform, TransformOptions, DEFAULT_LATTICE_LIMIT};
use freegen::verify::{run_verification, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "freegen",
    version,
    about = "Exact word-length expansions, moments, and free cumulants of the \
             free-group generating operator, cross-checked by independent walk oracles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Number N of free generators
    #[arg(long, default_value_t = 2)]
    n_generators: usize,

    /// Write output to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LatticeArgs {
    /// Largest order computed by full lattice enumeration
    #[arg(
        long,
        env = "FREEGEN_LATTICE_LIMIT",
        default_value_t = DEFAULT_LATTICE_LIMIT as u64,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    lattice_limit: u64,

    /// Worker threads for lattice folds (output is identical for any value)
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    threads: u64,
}

impl LatticeArgs {
    fn options(&self) -> TransformOptions {
        TransformOptions {
            lattice_limit: self.lattice_limit as usize,
            threads: self.threads as usize,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Expand a power of G over the word-length spheres
    Expand {
        #[command(flatten)]
        common: CommonArgs,

        /// The power n of G to expand
        #[arg(long)]
        order: usize,

        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },

    /// Moment series of G: coefficient n is tau(G^n)
    Moments {
        #[command(flatten)]
        common: CommonArgs,

        /// Highest series order to compute
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_order: u64,

        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,

        /// Accepted for uniformity; the moment sweep is inherently sequential
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        threads: u64,
    },

    /// R-transform coefficients of G (free cumulants)
    Cumulants {
        #[command(flatten)]
        common: CommonArgs,

        /// Highest series order to compute
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_order: u64,

        #[command(flatten)]
        lattice: LatticeArgs,

        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },

    /// List noncrossing partitions
    Nc {
        #[command(flatten)]
        common: CommonArgs,

        /// Ground-set size n
        #[arg(long)]
        size: usize,

        /// Keep only partitions with all block sizes even
        #[arg(long)]
        even: bool,

        /// Keep only partitions with this multiset of block sizes,
        /// e.g. "2,4"
        #[arg(long, value_parser = parse_block_type)]
        block_type: Option<std::vec::Vec<usize>>,

        /// Print the Möbius value mu(pi, 1_n) with each partition
        #[arg(long)]
        mobius: bool,

        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,

        /// Accepted for uniformity; enumeration order is fixed
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        threads: u64,
    },

    /// Run the full cross-check matrix and the published-errata comparison
    Verify {
        #[command(flatten)]
        common: CommonArgs,

        /// Highest power / series order exercised
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        max_order: u64,

        #[command(flatten)]
        lattice: LatticeArgs,

        /// State budget for the exhaustive walk oracle
        #[arg(
            long,
            default_value_t = freegen::oracle::DEFAULT_ORACLE_BUDGET as u64,
            value_parser = clap::value_parser!(u64).range(1..)
        )]
        oracle_budget: u64,

        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
}

fn parse_block_type(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| format!("'{part}' is not a nonnegative integer"))
        })
        .collect()
}

fn exit_code_for(error: &Error) -> u8 {
    match error {
        Error::SizeTooLarge { .. } | Error::OracleBudget { .. } => 3,
        _ => 2,
    }
}

fn emit(common: &CommonArgs, text: &str) -> Result<(), String> {
    match &common.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| format!("cannot write to standard output: {e}")),
    }
}

fn run(command: Command) -> Result<u8, (String, u8)> {
    let library = |e: Error| (e.to_string(), exit_code_for(&e));
    let usage = |msg: String| (msg, 2u8);

    match command {
        Command::Expand {
            common,
            order,
            format,
        } => {
            let params = GroupParameter::new(common.n_generators).map_err(library)?;
            let expansion = expand_power(params, order);
            emit(
                &common,
                &expansion_output(params.n_generators(), &expansion, format),
            )
            .map_err(usage)?;
            Ok(0)
        }
        Command::Moments {
            common,
            max_order,
            format,
            threads: _,
        } => {
            let params = GroupParameter::new(common.n_generators).map_err(library)?;
            let series = moment_series(params, max_order as usize);
            emit(
                &common,
                &series_output(
                    params.n_generators(),
                    "moments",
                    "recurrence",
                    &series,
                    format,
                ),
            )
            .map_err(usage)?;
            Ok(0)
        }
        Command::Cumulants {
            common,
            max_order,
            lattice,
            format,
        } => {
            let params = GroupParameter::new(common.n_generators).map_err(library)?;
            let (series, method) =
                r_transform(params, max_order as usize, &lattice.options()).map_err(library)?;
            emit(
                &common,
                &series_output(
                    params.n_generators(),
                    "cumulants",
                    method.name(),
                    &series,
                    format,
                ),
            )
            .map_err(usage)?;
            Ok(0)
        }
        Command::Nc {
            common,
            size,
            even,
            block_type,
            mobius,
            format,
            threads: _,
        } => {
            let partitions: Vec<NoncrossingPartition> = match block_type {
                Some(parts) => {
                    let t = BlockTypeMultiset::from_parts(parts).map_err(library)?;
                    enumerate_by_block_type(size, &t).map_err(library)?
                }
                None if even => enumerate_even_nc(size).map_err(library)?,
                None => enumerate_nc(size).map_err(library)?,
            };
            let items: Vec<(String, Option<num_bigint::BigInt>)> = partitions
                .iter()
                .map(|pi| (pi.to_string(), mobius.then(|| mobius_to_top(pi))))
                .collect();
            emit(
                &common,
                &nc_output(common.n_generators, size, &items, format),
            )
            .map_err(usage)?;
            Ok(0)
        }
        Command::Verify {
            common,
            max_order,
            lattice,
            oracle_budget,
            format,
        } => {
            let params = GroupParameter::new(common.n_generators).map_err(library)?;
            let config = VerifyConfig {
                params,
                max_order: max_order as usize,
                oracle_budget: oracle_budget as usize,
                lattice_limit: lattice.lattice_limit as usize,
                threads: lattice.threads as usize,
                corrupt_engine: std::env::var_os("FREEGEN_TEST_CORRUPT")
                    .is_some_and(|v| !v.is_empty() && v != "0"),
            };
            let report = run_verification(&config);
            emit(&common, &verify_output(&report, format)).map_err(usage)?;
            Ok(if report.passed { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err((message, code)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
