use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use regulus::json::{
    parse_ring, CocycleInput, GraphInput, GroupoidInput, Manifest, SelfSimInput, SemigroupInput,
};
use regulus::ops::{self, GlobalOpts, VerifyMode};
use regulus::report::{exit_code, render, Report};
use regulus::suite::{render_suite, run_suite, suite_exit_code};
use regulus::CliError;

/// Decides von Neumann regularity and graded regularity of inverse semigroup,
/// groupoid, Leavitt path and self-similar (Exel-Pardo) algebras, and
/// cross-checks each decision against exact brute-force oracles.
#[derive(Parser)]
#[command(name = "regulus", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for reproducible sampling (recorded in the report).
    #[arg(long, global = true, default_value_t = regulus_core::DEFAULT_SEED)]
    seed: u64,
    /// Budget in ring elements for exhaustive oracle sweeps.
    #[arg(long, global = true, default_value_t = regulus_core::DEFAULT_BUDGET)]
    budget: u64,
    /// Cap for semigroup and bisection closures.
    #[arg(long, global = true, default_value_t = regulus_core::DEFAULT_CAP)]
    cap: usize,
    /// Print wall-clock timing to stderr (never into the report).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Args)]
struct RingInput {
    /// Coefficient ring: Q, F2, F3, F5, Z6, Z12, product:[...]
    #[arg(long)]
    ring: String,
    /// Input JSON file.
    #[arg(long)]
    input: PathBuf,
    /// Cross-check with the brute-force oracle: auto, on, off.
    /// Bare `--verify` means on.
    #[arg(long, default_value = "auto", num_args = 0..=1, default_missing_value = "on")]
    verify: String,
}

#[derive(Subcommand)]
enum Command {
    /// Inverse semigroup algebras RS.
    Invsgp {
        #[command(subcommand)]
        cmd: InvsgpCmd,
    },
    /// Brute-force regularity oracles on finite-dimensional algebras.
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Finite groupoid convolution algebras RG.
    Groupoid {
        #[command(subcommand)]
        cmd: GroupoidCmd,
    },
    /// Cocycle-graded groupoid algebras.
    Graded {
        #[command(subcommand)]
        cmd: GradedCmd,
    },
    /// Leavitt path algebras of directed graphs.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Self-similar (Exel-Pardo) algebras given by Mealy automata.
    Selfsim {
        #[command(subcommand)]
        cmd: SelfsimCmd,
    },
    /// Run a manifest of decisions with expectations.
    Suite {
        #[arg(long)]
        manifest: PathBuf,
    },
}

#[derive(Subcommand)]
enum InvsgpCmd {
    /// Decide regularity of RS via the locally-finite/invertible-orders
    /// characterization.
    Decide(RingInput),
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Run the oracle on a semigroup or groupoid algebra.
    Oracle {
        #[arg(long)]
        ring: String,
        #[arg(long, conflicts_with = "from_groupoid")]
        from_semigroup: Option<PathBuf>,
        #[arg(long)]
        from_groupoid: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GroupoidCmd {
    /// Orbits, isotropy, principality, matrix-units data.
    Analyze {
        #[arg(long)]
        input: PathBuf,
    },
    Decide(RingInput),
}

#[derive(Subcommand)]
enum GradedCmd {
    Decide {
        #[command(flatten)]
        base: RingInput,
        /// Cocycle JSON file.
        #[arg(long)]
        cocycle: PathBuf,
    },
    Oracle {
        #[command(flatten)]
        base: RingInput,
        #[arg(long)]
        cocycle: PathBuf,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Regularity of L_K(E): acyclicity.
    Decide(RingInput),
    /// Graded regularity of L_K(E).
    Graded(RingInput),
    /// Growth of the bisection symbol semigroup.
    Growth {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum SelfsimCmd {
    Validate {
        #[arg(long)]
        input: PathBuf,
    },
    Closure {
        #[arg(long)]
        input: PathBuf,
    },
    Decide(RingInput),
}

fn load<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Parse(format!("{} at {}:{}", path.display(), e.line(), e.column())))
}

fn parse_verify(s: &str) -> Result<VerifyMode, CliError> {
    match s {
        "auto" => Ok(VerifyMode::Auto),
        "on" => Ok(VerifyMode::On),
        "off" => Ok(VerifyMode::Off),
        other => Err(CliError::Parse(format!("bad --verify value {other}"))),
    }
}

fn run(cli: &Cli) -> Result<(String, i32), CliError> {
    let mut opts = GlobalOpts {
        seed: cli.seed,
        budget: cli.budget,
        cap: cli.cap,
        verify: VerifyMode::Auto,
    };
    let report_result = |report: Report| -> (String, i32) {
        let code = exit_code(&report);
        (render(&report), code)
    };
    let out = match &cli.command {
        Command::Invsgp { cmd: InvsgpCmd::Decide(args) } => {
            opts.verify = parse_verify(&args.verify)?;
            let input: SemigroupInput = load(&args.input)?;
            report_result(ops::invsgp_decide(&input, &parse_ring(&args.ring)?, &opts)?)
        }
        Command::Algebra {
            cmd: AlgebraCmd::Oracle {
                ring,
                from_semigroup,
                from_groupoid,
            },
        } => {
            let ring = parse_ring(ring)?;
            let report = match (from_semigroup, from_groupoid) {
                (Some(path), None) => {
                    let input: SemigroupInput = load(path)?;
                    ops::algebra_oracle_from_semigroup(&input, &ring, &opts)?
                }
                (None, Some(path)) => {
                    let input: GroupoidInput = load(path)?;
                    ops::algebra_oracle_from_groupoid(&input, &ring, &opts)?
                }
                _ => {
                    return Err(CliError::Parse(
                        "exactly one of --from-semigroup/--from-groupoid required".into(),
                    ))
                }
            };
            report_result(report)
        }
        Command::Groupoid { cmd } => match cmd {
            GroupoidCmd::Analyze { input } => {
                let input: GroupoidInput = load(input)?;
                report_result(ops::groupoid_analyze(&input, &opts)?)
            }
            GroupoidCmd::Decide(args) => {
                opts.verify = parse_verify(&args.verify)?;
                let input: GroupoidInput = load(&args.input)?;
                report_result(ops::groupoid_decide(&input, &parse_ring(&args.ring)?, &opts)?)
            }
        },
        Command::Graded { cmd } => match cmd {
            GradedCmd::Decide { base, cocycle } => {
                opts.verify = parse_verify(&base.verify)?;
                let input: GroupoidInput = load(&base.input)?;
                let cocycle: CocycleInput = load(cocycle)?;
                report_result(ops::graded_decide(
                    &input,
                    &cocycle,
                    &parse_ring(&base.ring)?,
                    &opts,
                )?)
            }
            GradedCmd::Oracle { base, cocycle } => {
                let input: GroupoidInput = load(&base.input)?;
                let cocycle: CocycleInput = load(cocycle)?;
                report_result(ops::graded_oracle(
                    &input,
                    &cocycle,
                    &parse_ring(&base.ring)?,
                    &opts,
                )?)
            }
        },
        Command::Graph { cmd } => match cmd {
            GraphCmd::Decide(args) => {
                opts.verify = parse_verify(&args.verify)?;
                let input: GraphInput = load(&args.input)?;
                report_result(ops::graph_decide(&input, &parse_ring(&args.ring)?, &opts)?)
            }
            GraphCmd::Graded(args) => {
                opts.verify = parse_verify(&args.verify)?;
                let input: GraphInput = load(&args.input)?;
                report_result(ops::graph_graded(&input, &parse_ring(&args.ring)?, &opts)?)
            }
            GraphCmd::Growth { input } => {
                let input: GraphInput = load(input)?;
                report_result(ops::graph_growth(&input, &opts)?)
            }
        },
        Command::Selfsim { cmd } => match cmd {
            SelfsimCmd::Validate { input } => {
                let input: SelfSimInput = load(input)?;
                report_result(ops::selfsim_validate(&input, &opts)?)
            }
            SelfsimCmd::Closure { input } => {
                let input: SelfSimInput = load(input)?;
                report_result(ops::selfsim_closure(&input, &opts)?)
            }
            SelfsimCmd::Decide(args) => {
                let input: SelfSimInput = load(&args.input)?;
                report_result(ops::selfsim_decide(&input, &parse_ring(&args.ring)?, &opts)?)
            }
        },
        Command::Suite { manifest } => {
            let manifest: Manifest = load(manifest)?;
            let report = run_suite(&manifest, &opts)?;
            (render_suite(&report), suite_exit_code(&report))
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let (output, code) = match run(&cli) {
        Ok(pair) => pair,
        Err(CliError::InvalidInputReport(report)) => (render(&report), 3),
        Err(e) => {
            eprintln!("error: {e}");
            (String::new(), e.exit_code())
        }
    };
    print!("{output}");
    if cli.timing {
        eprintln!("timing: {} ms", started.elapsed().as_millis());
    }
    ExitCode::from(code as u8)
}
