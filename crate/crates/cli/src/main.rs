use clap::{Parser, Subcommand, ValueEnum};

use orbit_kappa_cli::{
    exit_code, run_analyze, run_center, run_sun, run_sun_sweep, run_verify_s2, Table,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

/// Exact character invariants of coadjoint orbits.
#[derive(Parser)]
#[command(name = "orbit-kappa", version, about)]
struct Cli {
    /// Output format (also settable via ORBIT_KAPPA_FORMAT).
    #[arg(long, value_enum, global = true, env = "ORBIT_KAPPA_FORMAT", default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the coadjoint orbit of a weight: stabilizer, quantizability,
    /// the character table on the center, and the π₁ lower bound.
    Analyze {
        /// Cartan type, e.g. A2, D4, A2xA1.
        #[arg(long = "type")]
        cartan_type: String,
        /// Weight in the fundamental-weight basis: comma-separated
        /// rationals such as 1,0 or 1/2,-3.
        #[arg(long)]
        weight: String,
    },
    /// Print the center of the simply connected group of a Cartan type.
    Center {
        #[arg(long = "type")]
        cartan_type: String,
    },
    /// SU(n) orbits in block coordinates: the closed-form character and
    /// gcd bound.
    Sun {
        #[arg(long)]
        n: usize,
        /// Nondecreasing block sizes summing to n-1, e.g. 1,2.
        #[arg(long)]
        partition: Option<String>,
        /// Integer block coefficients, one per block.
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
        /// Enumerate all partitions and coefficient vectors in a box
        /// instead of a single spec.
        #[arg(long)]
        sweep: bool,
        /// Coefficient box half-width for --sweep.
        #[arg(long = "m-bound", default_value_t = 1)]
        m_bound: i64,
    },
    /// Verify the action integral on the SU(2) orbit by quadrature.
    #[command(name = "verify-s2")]
    VerifyS2 {
        /// Character exponent (nonzero); total symplectic area is |m|.
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        /// Number of base-point latitudes to sample.
        #[arg(long, default_value_t = 10)]
        points: usize,
        /// Quadrature resolution.
        #[arg(long, default_value_t = 2048)]
        resolution: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = run(&cli);
    std::process::exit(code);
}

fn run(cli: &Cli) -> i32 {
    match &cli.command {
        Command::Analyze {
            cartan_type,
            weight,
        } => emit(cli.format, run_analyze(cartan_type, weight)),
        Command::Center { cartan_type } => emit(cli.format, run_center(cartan_type)),
        Command::Sun {
            n,
            partition,
            m,
            sweep,
            m_bound,
        } => {
            if *sweep {
                emit(cli.format, run_sun_sweep(*n, *m_bound))
            } else {
                match (partition, m) {
                    (Some(q), Some(m)) => emit(cli.format, run_sun(*n, q, m)),
                    (None, _) => missing("--partition is required without --sweep"),
                    (_, None) => missing("--m is required without --sweep"),
                }
            }
        }
        Command::VerifyS2 {
            m,
            points,
            resolution,
        } => emit(cli.format, run_verify_s2(*m, *points, *resolution)),
    }
}

fn emit<T: serde::Serialize + Table>(format: Format, result: Result<T, orbit_kappa::Error>) -> i32 {
    match result {
        Ok(report) => {
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("reports serialize")
                ),
                Format::Table => print!("{}", report.to_table()),
            }
            0
        }
        Err(err) => {
            eprintln!("error: {err}");
            exit_code(&err)
        }
    }
}

fn missing(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    2
}
