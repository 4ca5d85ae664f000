use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cloudlet_core::executor::ExecutionMode;
use cloudlet_core::model::Scenario;
use cloudlet_core::oracle::DEFAULT_BUDGET;
use cloudlet_core::policies::TieBreakMode;

use cloudlet_cli::render;
use cloudlet_cli::{
    compare_command, oracle_command, parse_scenario, run_command, CliError, RunReport,
};

const GANTT_WIDTH: usize = 60;

#[derive(Parser)]
#[command(
    name = "cloudlet",
    version,
    about = "Allocate cloudlets to VMs and report makespans"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Allocate with one policy and execute the plan.
    Run {
        #[command(flatten)]
        common: Common,
        /// fcfs, minmin, maxmin or selective.
        #[arg(long, default_value = "selective")]
        policy: String,
    },
    /// Run every policy plus the exhaustive optimum.
    Compare {
        #[command(flatten)]
        common: Common,
        /// Largest number of assignments the oracle row may enumerate.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Find the optimal assignment by exhaustive search.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

#[derive(Args)]
struct Common {
    /// Scenario JSON file, or `-` for standard input.
    scenario: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Space)]
    mode: Mode,
    #[arg(long = "tie-break", value_enum, default_value_t = TieBreak::First)]
    tie_break: TieBreak,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Append an ASCII Gantt chart.
    #[arg(long)]
    gantt: bool,
    /// Reserved. No policy is randomized, so setting it is an error.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Space,
    Time,
}

#[derive(Clone, Copy, ValueEnum)]
enum TieBreak {
    First,
    MinExec,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

impl From<Mode> for ExecutionMode {
    fn from(mode: Mode) -> Self {
        match mode {
            Mode::Space => ExecutionMode::SpaceShared,
            Mode::Time => ExecutionMode::TimeShared,
        }
    }
}

impl From<TieBreak> for TieBreakMode {
    fn from(tb: TieBreak) -> Self {
        match tb {
            TieBreak::First => TieBreakMode::FirstInstantiated,
            TieBreak::MinExec => TieBreakMode::MinExecution,
        }
    }
}

fn load_scenario(path: &PathBuf) -> Result<Scenario, CliError> {
    let io_err = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(io_err)?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(io_err)?
    };
    Ok(parse_scenario(&text)?)
}

fn emit(reports: &[RunReport], common: &Common, comparison: bool) -> String {
    let mut out = match common.format {
        Format::Csv => render::reports_csv(reports),
        Format::Json if comparison => render::to_json(reports),
        Format::Json => render::to_json(&reports[0]),
        Format::Table if comparison => render::comparison_table(reports),
        Format::Table => render::run_table(&reports[0]),
    };
    if common.gantt {
        for r in reports {
            out.push('\n');
            if comparison {
                out.push_str(&format!("{}\n", r.policy));
            }
            out.push_str(&render::gantt(r, GANTT_WIDTH));
        }
    }
    out
}

fn execute(cli: Cli) -> Result<String, CliError> {
    let common = match &cli.command {
        Command::Run { common, .. }
        | Command::Compare { common, .. }
        | Command::Oracle { common, .. } => common,
    };
    if common.seed.is_some() {
        return Err(CliError::Usage(
            "--seed has no effect: every policy is deterministic".to_string(),
        ));
    }
    let scenario = load_scenario(&common.scenario)?;
    let mode = common.mode.into();
    let tie_break = common.tie_break.into();
    match &cli.command {
        Command::Run { policy, .. } => {
            let report = run_command(&scenario, policy, mode, tie_break)?;
            Ok(emit(&[report], common, false))
        }
        Command::Compare { budget, .. } => {
            let reports = compare_command(&scenario, mode, tie_break, *budget)?;
            Ok(emit(&reports, common, true))
        }
        Command::Oracle { budget, .. } => {
            let report = oracle_command(&scenario, mode, *budget)?;
            Ok(emit(&[report], common, false))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
