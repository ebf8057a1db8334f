use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "gin3",
    version,
    about = "Generic initial ideals of complete intersections in k[x1,x2,x3]"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Correction table (overrides GIN3_FIXTURES).
    #[arg(long, global = true, value_name = "PATH")]
    pub fixtures: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the predicted generic initial ideal.
    Predict(PredictArgs),
    /// Run the structural checks on the prediction or on an ideal from a file.
    Verify(VerifyArgs),
    /// Compare the prediction with Gröbner bases of random complete intersections.
    Oracle(OracleArgs),
    /// Run checks over every sorted triple up to a bound.
    Sweep(SweepArgs),
    /// Print the Hilbert function and the monomial counts |J_k|.
    Hilbert(HilbertArgs),
}

#[derive(Args, Debug)]
pub struct PredictArgs {
    #[arg(long, value_name = "A,B,C")]
    pub degrees: String,

    /// Also expand the closed-form generator lists and diff them.
    #[arg(long)]
    pub compare_closed_form: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_name = "A,B,C", required_unless_present = "ideal_file")]
    pub degrees: Option<String>,

    /// Ideal JSON (`{"generators": [...]}`) or `predict --format json` output.
    #[arg(long, value_name = "PATH")]
    pub ideal_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long, value_name = "A,B,C")]
    pub degrees: String,

    #[arg(long, default_value_t = gin3_core::oracle::DEFAULT_PRIME as u64)]
    pub prime: u64,

    /// Seed list and inclusive ranges, e.g. `1..5` or `1,4,9..12`.
    #[arg(long, default_value = "1")]
    pub seeds: String,

    #[arg(long)]
    pub no_coordinate_change: bool,

    /// Use x1^d1, x2^d2, x3^d3 instead of random polynomials.
    #[arg(long)]
    pub monomial: bool,

    #[arg(long, default_value_t = gin3_core::oracle::compare::DEFAULT_RETRIES)]
    pub retries: u32,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Largest degree allowed for each of d1, d2, d3.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    pub max: u32,

    /// Only compare generator counts with the count formulas.
    #[arg(long)]
    pub counts_only: bool,

    /// Also run the oracle on triples with d1+d2+d3 at most this.
    #[arg(long, value_name = "N")]
    pub oracle_max_sum: Option<u32>,

    #[arg(long, default_value = "1")]
    pub seeds: String,

    #[arg(long, default_value_t = gin3_core::oracle::DEFAULT_PRIME as u64)]
    pub prime: u64,

    /// Write the formula discrepancy catalogues into this directory.
    #[arg(long, value_name = "DIR")]
    pub emit_fixtures: Option<PathBuf>,

    /// Process triples one at a time.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Args, Debug)]
pub struct HilbertArgs {
    #[arg(long, value_name = "A,B,C")]
    pub degrees: String,
}

/// Parses `1..5,8` into `[1, 2, 3, 4, 5, 8]`.
pub fn parse_seeds(s: &str) -> Result<Vec<u64>, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => {
                let a: u64 = a
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad seed range {part:?}"))?;
                let b: u64 = b
                    .trim()
                    .trim_start_matches('=')
                    .parse()
                    .map_err(|_| format!("bad seed range {part:?}"))?;
                if a > b {
                    return Err(format!("empty seed range {part:?}"));
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| format!("bad seed {part:?}"))?),
        }
    }
    if out.is_empty() {
        return Err("no seeds given".into());
    }
    Ok(out)
}
