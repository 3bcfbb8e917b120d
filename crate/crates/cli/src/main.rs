//! `k3count`: exact curve-count tables, verification suites, asymptotic
//! comparisons, and parity reports for rational curves on K3 surfaces.
//!
//! Exit codes: 0 — success, every check passed; 1 — at least one
//! verification check reported a violation; 2 — usage or domain error.

mod asym_cmd;
mod output;
mod parity_cmd;
mod table_cmd;
mod verify_cmd;

use clap::{Parser, Subcommand};

use output::{OutputFormat, ReportFormat, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION};
use verify_cmd::Suite;

#[derive(Parser)]
#[command(
    name = "k3count",
    version,
    about = "Exact counts of rational curves on primitively polarized K3 surfaces: \
             complex counts, real (Welschinger-signed) counts, congruence and \
             monotonicity verification, and growth asymptotics."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the exact invariant table: one row per genus, one column per
    /// topology plus the complex count.
    Table {
        /// Euler characteristics of the real locus: a comma-separated list
        /// of even values in [-18, 20], or 'all'.
        #[arg(long, default_value = "0,-18,20", allow_hyphen_values = true)]
        er: String,
        /// Largest genus (row) to compute.
        #[arg(long, default_value_t = 20)]
        gmax: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::HumanTable)]
        format: OutputFormat,
    },
    /// Run verification suites; exits 1 if any check reports a violation.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Euler characteristics to verify (list or 'all').
        #[arg(long, default_value = "0,-18,20", allow_hyphen_values = true)]
        er: String,
        /// Genus range for congruence/monotonicity scans and expansion
        /// order for identity checks. The asymptotics suite uses fixed
        /// sample points (500, 2000) regardless of this value.
        #[arg(long, default_value_t = 20)]
        gmax: usize,
        /// Verify congruences with exact big integers instead of modular
        /// arithmetic (cross-validation; limited to --gmax <= 200).
        #[arg(long)]
        exact: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::HumanTable)]
        format: ReportFormat,
    },
    /// Compare exact log-counts against the closed-form growth predictions.
    Asym {
        /// One family: 'complex' or a single even Euler characteristic.
        #[arg(long, allow_hyphen_values = true)]
        er: String,
        /// Comma-separated indices at which to compare.
        #[arg(long, default_value = "500,1000,2000")]
        points: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::HumanTable)]
        format: OutputFormat,
    },
    /// Print the parity bits of the counts at genus 0, 8, 16, ..., 8k.
    Parity {
        /// Largest bit index k.
        #[arg(long)]
        k: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    let exit = match dispatch(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_USAGE
        }
    };
    std::process::exit(exit);
}

fn dispatch(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Table { er, gmax, format } => {
            let topologies = output::parse_euler_list(&er)?;
            print!("{}", table_cmd::run(&topologies, gmax, format));
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            er,
            gmax,
            exact,
            format,
        } => {
            let options = verify_cmd::VerifyOptions {
                suite,
                topologies: output::parse_euler_list(&er)?,
                genus_max: gmax,
                exact,
                format,
            };
            let (rendered, exit) = verify_cmd::run(&options)?;
            print!("{rendered}");
            debug_assert!(exit == 0 || exit == EXIT_VIOLATION);
            Ok(exit)
        }
        Command::Asym { er, points, format } => {
            let family = asym_cmd::parse_family(&er)?;
            let points = output::parse_points(&points)?;
            print!("{}", asym_cmd::run(family, &points, format)?);
            Ok(EXIT_OK)
        }
        Command::Parity { k } => {
            print!("{}", parity_cmd::run(k));
            Ok(EXIT_OK)
        }
    }
}
