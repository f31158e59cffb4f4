use clap::{Parser, Subcommand, ValueEnum};
use zolotarev6_cli::{
    cmd_eval, cmd_oracle, cmd_solve, cmd_table, cmd_verify, CmdError,
    EXIT_VERIFICATION,
};

#[derive(Parser)]
#[command(
    name = "zolo6",
    about = "Sextic proper Zolotarev polynomials: construction, constrained \
             minimax solving, verification and tabulation",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Construct Z_{6,t} and all companion quantities for a parameter t
    Eval {
        /// Parameter in the open interval ((5-3*sqrt(3))/2, 0)
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Solve the constrained minimax problem for a prescribed s
    Solve {
        /// Second-leading-coefficient constraint; must exceed tan^2(pi/12)
        #[arg(long, allow_hyphen_values = true)]
        s: f64,
        /// Residual tolerance on |s(t*) - s|
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check every defining identity of the constructed polynomial
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        /// Grid resolution for the residual scans (at least 101)
        #[arg(long, default_value_t = 1001)]
        grid: usize,
    },
    /// Sweep t and tabulate (t, s, L, L_inf, alpha, beta, gamma)
    Table {
        #[arg(long = "t-min", allow_hyphen_values = true)]
        t_min: f64,
        #[arg(long = "t-max", allow_hyphen_values = true)]
        t_max: f64,
        /// Number of rows (at least 2), endpoints included
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Discretized-minimax oracle next to the closed-form deviation
    Oracle {
        #[arg(long, allow_hyphen_values = true)]
        s: f64,
        /// Chebyshev-grid size (at least 257)
        #[arg(long, default_value_t = 2049)]
        grid: usize,
    },
}

fn emit(record: &zolotarev6_cli::output::OutputRecord, format: Format) {
    match format {
        Format::Json => println!("{}", record.to_json()),
        Format::Csv => match record.to_csv() {
            Some(csv) => print!("{csv}"),
            None => println!("{}", record.to_json()),
        },
    }
}

fn fail(err: CmdError) -> ! {
    eprintln!("zolo6: {}", err.message);
    std::process::exit(err.exit_code);
}

fn main() {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval { t, format } => match cmd_eval(t) {
            Ok(rec) => emit(&rec, format),
            Err(e) => fail(e),
        },
        Command::Solve { s, tol, format } => match cmd_solve(s, tol) {
            Ok(rec) => emit(&rec, format),
            Err(e) => fail(e),
        },
        Command::Verify { t, grid } => match cmd_verify(t, grid) {
            Ok((rec, passed)) => {
                emit(&rec, Format::Json);
                if !passed {
                    std::process::exit(EXIT_VERIFICATION);
                }
            }
            Err(e) => fail(e),
        },
        Command::Table {
            t_min,
            t_max,
            steps,
            format,
        } => match cmd_table(t_min, t_max, steps) {
            Ok(rec) => emit(&rec, format),
            Err(e) => fail(e),
        },
        Command::Oracle { s, grid } => match cmd_oracle(s, grid) {
            Ok(rec) => emit(&rec, Format::Json),
            Err(e) => fail(e),
        },
    }
}
