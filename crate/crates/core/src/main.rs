use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use skewgain::cli::{self, CliError, GenRequest, EXIT_INPUT, EXIT_MISMATCH, EXIT_OK};
use skewgain::scalar::{AntiInvolution, Domain};

#[derive(Parser)]
#[command(
    name = "skewgain",
    version,
    about = "Characteristic polynomials and spectra of skew gain graphs"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the characteristic polynomial, leading coefficient first.
    Charpoly {
        /// Graph file, or `-` for stdin.
        file: PathBuf,
        #[arg(long, default_value = "auto")]
        route: String,
    },
    /// Print `value multiplicity` lines.
    Spectrum {
        file: PathBuf,
        #[arg(long, default_value = "numeric")]
        method: String,
    },
    /// Compare every applicable computation route; exit 1 on disagreement.
    Crosscheck { file: PathBuf },
    /// Emit a graph file for a named family.
    Gen {
        /// path, cycle, star, doublestar or kmn.
        family: String,
        /// Comma-separated sizes, e.g. `5` or `2,3`.
        #[arg(long, value_delimiter = ',', required = true)]
        params: Vec<usize>,
        /// `ones`, `random`, or a comma-separated list of gain literals.
        #[arg(long, default_value = "ones", allow_hyphen_values = true)]
        gains: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "rational")]
        domain: String,
        #[arg(long, default_value = "identity")]
        antiinvolution: String,
    },
    /// Check a graph file and report its structure.
    Validate { file: PathBuf },
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    let result = if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map(|_| text)
    } else {
        std::fs::read_to_string(path)
    };
    result.map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Charpoly { file, route } => {
            print!(
                "{}",
                cli::cmd_charpoly(&read_input(&file)?, route.parse()?)?
            );
            Ok(EXIT_OK)
        }
        Command::Spectrum { file, method } => {
            print!(
                "{}",
                cli::cmd_spectrum(&read_input(&file)?, method.parse()?)?
            );
            Ok(EXIT_OK)
        }
        Command::Crosscheck { file } => {
            let report = cli::cmd_crosscheck(&read_input(&file)?)?;
            print!("{report}");
            Ok(report.exit_code())
        }
        Command::Gen {
            family,
            params,
            gains,
            seed,
            domain,
            antiinvolution,
        } => {
            let request = GenRequest {
                family: family.parse()?,
                params,
                gains: gains.parse()?,
                seed,
                domain: domain.parse::<Domain>()?,
                involution: antiinvolution.parse::<AntiInvolution>()?,
            };
            print!("{}", cli::cmd_gen(&request)?);
            Ok(EXIT_OK)
        }
        Command::Validate { file } => {
            let (text, ok) = cli::cmd_validate(&read_input(&file)?)?;
            print!("{text}");
            Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
