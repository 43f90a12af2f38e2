use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use zdk_cli::bench::{run_bench, SuiteFilter};
use zdk_cli::{parse_problem, run_command, Alg, CliError, Command, Flags};

#[derive(Parser)]
#[command(name = "zdk", version, about = "Minimal polynomials and primary decomposition of zero-dimensional ideals")]
struct Cli {
    /// Seed for random linear forms and prime selection.
    #[arg(long, global = true, env = "ZDK_SEED", default_value_t = 0)]
    seed: u64,
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Skip the membership check of modular minimal polynomials over Q.
    #[arg(long, global = true)]
    no_verify: bool,
    /// Random linear forms tried over Q before giving up.
    #[arg(long, global = true, default_value_t = 20)]
    max_attempts: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgArg {
    Def,
    Mat,
    Elim,
    Modular,
    Heuristic,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Default,
    Stretch,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Groebner basis in the declared ordering.
    Gb { file: PathBuf },
    /// Minimal polynomial of an element modulo the ideal.
    Minpoly {
        file: PathBuf,
        /// Element given inline.
        #[arg(long)]
        poly: Option<String>,
        /// Element declared in the file.
        #[arg(long)]
        elem: Option<String>,
        /// Default: def over F_p, modular over Q.
        #[arg(long, value_enum)]
        alg: Option<AlgArg>,
    },
    IsRadical { file: PathBuf },
    /// Radical, as a reduced Groebner basis.
    Radical { file: PathBuf },
    IsMaximal { file: PathBuf },
    IsPrimary { file: PathBuf },
    /// Dimension of the Frobenius fixed space (finite fields only).
    FrobDim { file: PathBuf },
    /// Primary components, one reduced Groebner basis per block.
    Primdec { file: PathBuf },
    /// Run the benchmark corpus against its expected values.
    Bench {
        #[arg(long, default_value = "fixtures/bench.toml")]
        manifest: PathBuf,
        #[arg(long, value_enum, default_value = "default")]
        suite: SuiteArg,
        /// Run only these case ids.
        #[arg(long = "case")]
        cases: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("zdk: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

/// Write to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let flags = Flags {
        seed: cli.seed,
        verify: !cli.no_verify,
        max_attempts: cli.max_attempts,
    };
    let (file, cmd) = match cli.cmd {
        Cmd::Bench { manifest, suite, cases } => {
            let filter = match suite {
                SuiteArg::Default => SuiteFilter::Default,
                SuiteArg::Stretch => SuiteFilter::Stretch,
                SuiteArg::All => SuiteFilter::All,
            };
            let json = cli.json;
            let results = run_bench(&manifest, filter, &cases, &flags, |r| {
                if !json {
                    emit(&format!("{}\n", r.line()));
                }
            })?;
            let failed = results.iter().filter(|r| !r.pass()).count();
            if json {
                let cases: Vec<_> = results
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "id": r.id,
                            "pass": r.pass(),
                            "seconds": r.seconds,
                            "error": r.load_error,
                            "checks": r.checks.iter().map(|c| serde_json::json!({
                                "name": c.name,
                                "expected": c.expected,
                                "got": c.got.as_ref().ok(),
                                "error": c.got.as_ref().err(),
                                "pass": c.pass(),
                            })).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                emit(&format!("{}\n", serde_json::json!({ "cases": cases, "failed": failed })));
            } else {
                emit(&format!("{} cases, {} failed\n", results.len(), failed));
            }
            return Ok(if failed == 0 { 0 } else { 1 });
        }
        Cmd::Gb { file } => (file, Command::Gb),
        Cmd::Minpoly { file, poly, elem, alg } => {
            let alg = alg.map(|a| match a {
                AlgArg::Def => Alg::Def,
                AlgArg::Mat => Alg::Mat,
                AlgArg::Elim => Alg::Elim,
                AlgArg::Modular => Alg::Modular,
                AlgArg::Heuristic => Alg::Heuristic,
            });
            (file, Command::MinPoly { poly, elem, alg })
        }
        Cmd::IsRadical { file } => (file, Command::IsRadical),
        Cmd::Radical { file } => (file, Command::Radical),
        Cmd::IsMaximal { file } => (file, Command::IsMaximal),
        Cmd::IsPrimary { file } => (file, Command::IsPrimary),
        Cmd::FrobDim { file } => (file, Command::FrobDim),
        Cmd::Primdec { file } => (file, Command::Primdec),
    };
    let text = std::fs::read_to_string(&file)
        .map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
    let problem = parse_problem(&text).map_err(|e| CliError::Usage(format!("{}:{e}", file.display())))?;
    let report = run_command(&problem, &cmd, &flags)?;
    if cli.json {
        emit(&format!("{}\n", report.json()));
    } else {
        emit(&report.text());
    }
    Ok(0)
}
