//! `lagsum`: summation tables, hypergeometric model sums, and Laguerre to
//! power series transformation from the command line.

mod commands;
mod render;
mod series_file;
mod tables;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lagsum_core::analyzer::DEFAULT_BUDGET;
use lagsum_core::{DoubleDouble, PrecisionContext, Real};

use commands::{Format, MethodArg, Output, SumArgs, TransformArgs};
use tables::Which;

#[derive(Parser)]
#[command(name = "lagsum", version, about = "Laguerre series, divergent hypergeometric sums and their transformations")]
struct Cli {
    /// Working precision in significant digits: 15-16 uses hardware doubles,
    /// 17-32 double-double arithmetic.
    #[arg(long, global = true, default_value_t = 16)]
    digits: u32,

    /// Output format; tables and sums default to text, files to JSON.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce a summation table for the model series at z = -1.
    Table {
        #[arg(value_enum)]
        which: Which,
    },
    /// Sum the partial sums of a shifted p+1Fp series.
    #[command(allow_negative_numbers = true)]
    Sum {
        /// Number of denominator parameters; inferred from --den if omitted.
        #[arg(long)]
        p: Option<usize>,
        /// Numerator parameters, comma separated (decimals or p/q).
        #[arg(long, value_delimiter = ',', required = true)]
        num: Vec<String>,
        /// Denominator parameters, comma separated.
        #[arg(long, value_delimiter = ',')]
        den: Vec<String>,
        #[arg(long)]
        z: String,
        /// Shift added to every parameter.
        #[arg(long, default_value_t = 0)]
        nu: usize,
        #[arg(long, value_enum, default_value = "delta")]
        method: MethodArg,
        /// Number of partial sums s_0 ... s_{terms-1} handed to the method.
        #[arg(long, default_value_t = 20)]
        terms: usize,
        #[arg(long, default_value = "1")]
        beta: String,
    },
    /// Rearrange a Laguerre series file into power-series coefficients.
    Transform {
        file: String,
        #[arg(long, default_value_t = 10)]
        max_nu: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, value_enum, default_value = "delta")]
        method: MethodArg,
    },
    /// Classify the coefficients of a Laguerre series file.
    Classify {
        file: String,
        /// Tail window; defaults depend on the source.
        #[arg(long)]
        window: Option<usize>,
    },
}

fn run<T: Real>(cli: &Cli, ctx: &PrecisionContext) -> Result<Output, String> {
    match &cli.command {
        Command::Table { which } => commands::table::<T>(*which, cli.format, ctx),
        Command::Sum { p, num, den, z, nu, method, terms, beta } => {
            let args = SumArgs {
                p: *p,
                num: num.clone(),
                den: den.clone(),
                z: z.clone(),
                nu: *nu,
                method: *method,
                terms: *terms,
                beta: beta.clone(),
            };
            commands::sum::<T>(&args, cli.format, ctx)
        }
        Command::Transform { file, max_nu, budget, method } => {
            let args = TransformArgs { max_nu: *max_nu, budget: *budget, method: *method };
            commands::transform_file::<T>(file, &args, cli.format, ctx)
        }
        Command::Classify { file, window } => commands::classify_file::<T>(file, cli.format, *window),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = match cli.digits {
        15..=16 => PrecisionContext::new(cli.digits).map_err(|e| e.to_string()).and_then(|ctx| run::<f64>(&cli, &ctx)),
        17..=32 => {
            PrecisionContext::new(cli.digits).map_err(|e| e.to_string()).and_then(|ctx| run::<DoubleDouble>(&cli, &ctx))
        }
        d => Err(format!("--digits {d} is not supported; use 15 to 32")),
    };
    match outcome {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(out.code)
        }
        Err(msg) => {
            eprintln!("lagsum: {msg}");
            ExitCode::from(1)
        }
    }
}
