//! Thin command-line front end over the library.
//!
//! Exit codes: 0 success, 1 parse/usage error, 2 infeasible instance,
//! 3 brute-force cap exceeded.

// Errors carry exact rational witnesses, so the Err variant is wide.
#![allow(clippy::result_large_err)]

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nrssp::io::{
    instance_to_json, read_instance, read_order, read_schedule, schedule_to_json, write_instance,
    write_schedule, FileError, ScheduleDoc,
};
use nrssp::{
    approx_solve, approximation_ratio, exact_solve, gen_random, gen_tight, list_schedule,
    run_sweep, verify_order_class, Error, GenConfig, Rational, Solution, SupplyMode, SweepFamily,
};

#[derive(Parser)]
#[command(
    name = "nrssp",
    about = "Single-machine scheduling with a non-renewable resource: \
             heuristic and exact solvers, verification, generators, benchmarks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Schedule an instance (greedy order by default, or a given order)
    Solve {
        /// Instance file (JSON)
        #[arg(long)]
        input: PathBuf,
        /// "auto" for the greedy order, or a path to a JSON order file
        #[arg(long, default_value = "auto")]
        order: String,
        /// Schedule file to write; stdout when omitted
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Brute-force exact optimum (small instances only)
    Exact {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exact heuristic-to-optimum objective ratio
    Ratio {
        #[arg(long)]
        input: PathBuf,
    },
    /// Check a schedule for feasibility (and optionally order-class membership)
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Schedule file (JSON)
        #[arg(long)]
        schedule: PathBuf,
        /// Also check the schedule's order for membership in O(a,p)
        #[arg(long)]
        order_class: bool,
    },
    /// Write a generated instance
    #[command(subcommand)]
    Gen(GenCommand),
    /// Sweep a family and report per-instance ratios
    Bench(BenchArgs),
}

#[derive(Subcommand)]
enum GenCommand {
    /// The 3-job adversarial instance with parameter epsilon in (0, 1/10)
    Tight {
        /// Rational literal, e.g. 1/20 or 0.05
        #[arg(long)]
        epsilon: Rational,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Seeded random instance
    Random(RandomArgs),
}

#[derive(Args)]
struct RandomArgs {
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 2)]
    n_min: usize,
    #[arg(long, default_value_t = 7)]
    n_max: usize,
    #[arg(long, default_value_t = 1)]
    q_min: usize,
    #[arg(long, default_value_t = 5)]
    q_max: usize,
    /// All values are integer multiples of 1/GRID
    #[arg(long, default_value_t = 12)]
    grid: u64,
    /// Force max a_j/p_j <= 1
    #[arg(long)]
    ratio_bound: bool,
    /// balanced: total supply equals total requirement; surplus: oversupply
    #[arg(long, value_parser = parse_supply_mode, default_value = "balanced")]
    supply: SupplyMode,
    #[arg(long)]
    output: Option<PathBuf>,
}

impl RandomArgs {
    fn config(&self) -> GenConfig {
        GenConfig {
            n_range: (self.n_min, self.n_max),
            q_range: (self.q_min, self.q_max),
            value_grid: self.grid,
            enforce_ratio_bound: self.ratio_bound,
            supply_mode: self.supply,
            seed: self.seed,
        }
    }
}

#[derive(Args)]
struct BenchArgs {
    /// "tight" or "random"
    #[arg(long)]
    family: String,
    /// Comma-separated epsilon list for the tight family
    #[arg(long, value_delimiter = ',')]
    epsilons: Vec<Rational>,
    /// Instance count for the random family
    #[arg(long, default_value_t = 0)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 2)]
    n_min: usize,
    #[arg(long, default_value_t = 7)]
    n_max: usize,
    #[arg(long, default_value_t = 1)]
    q_min: usize,
    #[arg(long, default_value_t = 5)]
    q_max: usize,
    #[arg(long, default_value_t = 12)]
    grid: u64,
    #[arg(long)]
    ratio_bound: bool,
    #[arg(long, value_parser = parse_supply_mode, default_value = "balanced")]
    supply: SupplyMode,
    /// Report file
    #[arg(long)]
    out: PathBuf,
    /// csv or json
    #[arg(long, default_value = "csv")]
    format: String,
    /// Worker threads for the sweep (default: all cores)
    #[arg(long)]
    jobs: Option<usize>,
}

fn parse_supply_mode(s: &str) -> Result<SupplyMode, String> {
    match s {
        "balanced" => Ok(SupplyMode::Balanced),
        "surplus" => Ok(SupplyMode::Surplus),
        other => Err(format!("expected 'balanced' or 'surplus', got {other:?}")),
    }
}

/// Anything a subcommand can fail with, mapped to an exit code.
enum CliError {
    Usage(String),
    File(FileError),
    Solve(Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::File(_) => 1,
            CliError::Solve(Error::Infeasible { .. }) => 2,
            CliError::Solve(Error::OracleCapExceeded { .. }) => 3,
            CliError::Solve(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(msg) => msg.clone(),
            CliError::File(err) => err.to_string(),
            CliError::Solve(err) => err.to_string(),
        }
    }
}

impl From<FileError> for CliError {
    fn from(err: FileError) -> Self {
        CliError::File(err)
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Solve(err)
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::File(FileError::Io(err))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version are not errors; everything else is usage.
            if err.use_stderr() {
                eprint!("{err}");
                return ExitCode::from(1);
            }
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve {
            input,
            order,
            output,
        } => {
            let instance = read_instance(&input)?;
            let solution = if order == "auto" {
                approx_solve(&instance)?
            } else {
                let order = read_order(&PathBuf::from(order))?;
                let schedule = list_schedule(&instance, &order)?;
                let objective = instance.objective(&schedule)?;
                Solution {
                    order,
                    schedule,
                    objective,
                }
            };
            emit_schedule(&ScheduleDoc::from_solution(&solution), output.as_deref())
        }
        Command::Exact { input, output } => {
            let instance = read_instance(&input)?;
            let solution = exact_solve(&instance)?;
            emit_schedule(&ScheduleDoc::from_solution(&solution), output.as_deref())
        }
        Command::Ratio { input } => {
            let instance = read_instance(&input)?;
            println!("{}", approximation_ratio(&instance)?);
            Ok(())
        }
        Command::Verify {
            input,
            schedule,
            order_class,
        } => {
            let instance = read_instance(&input)?;
            let doc = read_schedule(&schedule)?;
            let report = instance.check_feasibility(&doc.schedule())?;
            println!("{report}");
            if order_class {
                let verdict = verify_order_class(&instance, &doc.order)?;
                println!("{verdict}");
            }
            Ok(())
        }
        Command::Gen(command) => {
            let (instance, output) = match command {
                GenCommand::Tight { epsilon, output } => (gen_tight(&epsilon)?, output),
                GenCommand::Random(args) => (gen_random(&args.config())?, args.output),
            };
            match output {
                Some(path) => Ok(write_instance(&path, &instance)?),
                None => {
                    println!("{}", instance_to_json(&instance));
                    Ok(())
                }
            }
        }
        Command::Bench(args) => bench(args),
    }
}

fn emit_schedule(doc: &ScheduleDoc, output: Option<&std::path::Path>) -> Result<(), CliError> {
    match output {
        Some(path) => Ok(write_schedule(path, doc)?),
        None => {
            println!("{}", schedule_to_json(doc));
            Ok(())
        }
    }
}

fn bench(args: BenchArgs) -> Result<(), CliError> {
    let family = match args.family.as_str() {
        "tight" => {
            if args.epsilons.is_empty() {
                return Err(CliError::Usage(
                    "the tight family needs --epsilons".to_string(),
                ));
            }
            SweepFamily::Tight {
                epsilons: args.epsilons.clone(),
            }
        }
        "random" => SweepFamily::Random {
            config: GenConfig {
                n_range: (args.n_min, args.n_max),
                q_range: (args.q_min, args.q_max),
                value_grid: args.grid,
                enforce_ratio_bound: args.ratio_bound,
                supply_mode: args.supply,
                seed: args.seed,
            },
            count: args.count,
        },
        other => {
            return Err(CliError::Usage(format!(
                "unknown family {other:?}; expected 'tight' or 'random'"
            )))
        }
    };

    let report = match args.jobs {
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            pool.install(|| run_sweep(&family))?
        }
        None => run_sweep(&family)?,
    };

    let rendered = match args.format.as_str() {
        "csv" => report.to_csv_string(),
        "json" => report.to_json_string() + "\n",
        other => {
            return Err(CliError::Usage(format!(
                "unknown format {other:?}; expected 'csv' or 'json'"
            )))
        }
    };
    std::fs::write(&args.out, rendered)?;
    eprintln!(
        "wrote {} entries to {}",
        report.records.len(),
        args.out.display()
    );
    Ok(())
}
