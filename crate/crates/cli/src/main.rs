//! `mottgate` command-line tool: spectra, bands, chain transmission,
//! material wavelengths and thermal contrast for optically switched gates.
//!
//! Exit codes: 0 success, 1 failed validation, 2 configuration error,
//! 3 numerical failure.

mod commands;
mod output;
mod scenario;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mottgate::materials::Observable;
use mottgate::{ClusterState, Error};

use output::{write_table, Format, Record};
use scenario::{Pattern, Scenario, DEMO};

#[derive(Parser, Debug)]
#[command(
    name = "mottgate",
    version,
    about = "Zero-range model of optically switched quantum gates"
)]
struct Cli {
    /// Scenario file (JSON); the bundled demo scenario when omitted.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for grid evaluation (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StateArg {
    Ground,
    Excited,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PatternArg {
    Alternating,
    Ground,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GateArg {
    Dot,
    Chain,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ObservableArg {
    Landauer,
    Transmission,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Single-dot transmission and conductance over the energy grid.
    DotSpectrum {
        #[arg(long, value_enum, default_value_t = StateArg::Both)]
        state: StateArg,
    },
    /// Bands and gaps of the infinite ground and excited chains, plus the gap at the Fermi level.
    Bands,
    /// Finite-chain scattering over the energy grid, or a length sweep with --sweep.
    Chain {
        #[arg(long, value_enum)]
        pattern: Option<PatternArg>,
        /// Override the number of cells.
        #[arg(long)]
        cells: Option<usize>,
        /// Emit ln|T| for 1..=N cells at a fixed energy instead of a scan.
        #[arg(long, value_name = "N")]
        sweep: Option<usize>,
        /// Energy of the sweep in reduced units (default: chain Fermi level).
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<f64>,
    },
    /// Material table with computed de Broglie wavelengths.
    Materials {
        /// Fail unless every computed wavelength is within 5% of the table.
        #[arg(long)]
        validate: bool,
        #[arg(long, requires = "temp")]
        material: Option<String>,
        #[arg(long, requires = "material")]
        temp: Option<f64>,
    },
    /// Thermally averaged ground and excited conductance and their ratio.
    Thermal {
        #[arg(long, value_enum, default_value_t = GateArg::Dot)]
        gate: GateArg,
        #[arg(long, value_enum)]
        observable: Option<ObservableArg>,
        /// Comma-separated temperatures in kelvin (default: scenario list).
        #[arg(long, value_delimiter = ',')]
        temps: Option<Vec<f64>>,
    },
    /// Run the acceptance suite.
    Validate,
}

#[derive(Debug)]
pub enum Failure {
    Config(String),
    Numerical(String),
    Io(io::Error),
    Rejected(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SingularSystem { .. }
            | Error::QuadratureFailure(_)
            | Error::DenominatorSmall(_) => Failure::Numerical(e.to_string()),
            _ => Failure::Config(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Rejected(_) => 1,
            Failure::Config(_) | Failure::Io(_) => 2,
            Failure::Numerical(_) => 3,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Config(m) => write!(f, "configuration error: {m}"),
            Failure::Numerical(m) => write!(f, "numerical failure: {m}"),
            Failure::Io(e) => write!(f, "i/o error: {e}"),
            Failure::Rejected(m) => write!(f, "{m}"),
        }
    }
}

fn load(path: Option<&PathBuf>) -> Result<Scenario, Failure> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Failure::Config(format!("{}: {e}", p.display())))?,
        None => DEMO.to_string(),
    };
    Scenario::parse(&text).map_err(Failure::Config)
}

fn emit<R: Record>(rows: &[R], cli: &Cli) -> Result<(), Failure> {
    match &cli.output {
        Some(p) => {
            let f =
                File::create(p).map_err(|e| Failure::Config(format!("{}: {e}", p.display())))?;
            let mut w = BufWriter::new(f);
            write_table(rows, cli.format, &mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            match write_table(rows, cli.format, &mut w) {
                // A closed pipe (`| head`) is not an error.
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => {}
                r => r?,
            }
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(Failure::Config("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Config(e.to_string()))?;
    }
    match &cli.command {
        Command::DotSpectrum { state } => {
            let sc = load(cli.config.as_ref())?;
            let only = match state {
                StateArg::Ground => Some(ClusterState::Ground),
                StateArg::Excited => Some(ClusterState::Excited),
                StateArg::Both => None,
            };
            emit(&commands::dot_spectrum(&sc, only)?, cli)
        }
        Command::Bands => {
            let sc = load(cli.config.as_ref())?;
            emit(&commands::bands(&sc)?, cli)
        }
        Command::Chain {
            pattern,
            cells,
            sweep,
            lambda,
        } => {
            let sc = load(cli.config.as_ref())?;
            let pattern = match pattern {
                Some(PatternArg::Alternating) => Pattern::Alternating,
                Some(PatternArg::Ground) => Pattern::Ground,
                None => sc.pattern,
            };
            let cells = cells.unwrap_or(sc.cells);
            if cells == 0 {
                return Err(Failure::Config("--cells must be at least 1".into()));
            }
            match sweep {
                Some(0) => Err(Failure::Config("--sweep must be at least 1".into())),
                Some(n) => emit(
                    &commands::chain_sweep(&sc, pattern, lambda.unwrap_or(sc.chain_fermi), *n)?,
                    cli,
                ),
                None => emit(&commands::chain_scan(&sc, pattern, cells)?, cli),
            }
        }
        Command::Materials {
            validate,
            material,
            temp,
        } => {
            if let (Some(m), Some(t)) = (material, temp) {
                return emit(&commands::wavelength(m, *t)?, cli);
            }
            let rows = commands::materials_table();
            emit(&rows, cli)?;
            if *validate {
                let bad = rows
                    .iter()
                    .filter(|r| {
                        r.rel_error_300k.abs() >= commands::TABLE_TOLERANCE
                            || r.rel_error_77k.abs() >= commands::TABLE_TOLERANCE
                    })
                    .count();
                if bad > 0 {
                    return Err(Failure::Rejected(format!(
                        "{bad} materials outside the 5% tolerance"
                    )));
                }
            }
            Ok(())
        }
        Command::Thermal {
            gate,
            observable,
            temps,
        } => {
            let mut sc = load(cli.config.as_ref())?;
            if let Some(t) = temps {
                if t.is_empty()
                    || t.iter().any(|x| !(*x > 0.0))
                    || t.windows(2).any(|w| !(w[0] < w[1]))
                {
                    return Err(Failure::Config(
                        "--temps must be positive and strictly increasing".into(),
                    ));
                }
                sc.temperatures_k = t.clone();
            }
            let obs = match observable {
                Some(ObservableArg::Landauer) => Observable::Landauer,
                Some(ObservableArg::Transmission) => Observable::TransmissionProbability,
                None => sc.observable,
            };
            let (g, fermi) = match gate {
                GateArg::Dot => (sc.dot_gate(), sc.dot_fermi),
                GateArg::Chain => (sc.chain_gate(), sc.chain_fermi),
            };
            emit(&commands::thermal(&sc, &g, fermi, obs)?, cli)
        }
        Command::Validate => {
            let rows = commands::validate();
            emit(&rows, cli)?;
            let failed = rows.iter().filter(|r| !r.0.passed).count();
            if failed > 0 {
                return Err(Failure::Rejected(format!(
                    "{failed} acceptance criteria failed"
                )));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mottgate: {e}");
            ExitCode::from(e.code())
        }
    }
}
