use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use skewgb_cli::report::{render_machine, render_text, run_command, Command};
use skewgb_cli::session::{Session, SessionConfig};
use skewgb_cli::{Failure, EXIT_INPUT};
use skewgb_core::{BasisDirection, ModuleOrder};

#[derive(Parser)]
#[command(name = "skewgb", version, about = "Division, Gröbner bases and syzygies over skew PBW extensions")]
struct Cli {
    #[command(subcommand)]
    command: Action,
}

#[derive(Subcommand)]
enum Action {
    /// Divide the first vector by the others
    Reduce(Options),
    /// Complete the vectors to a Gröbner basis, with the matrices H and Q
    Gbasis(Options),
    /// Decide whether the first vector lies in the submodule of the others
    Member(Options),
    /// Generators of the syzygy module of the vectors
    Syzygy(Options),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleOrderArg {
    Top,
    Toprev,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    #[value(name = "e1..em")]
    Natural,
    #[value(name = "em..e1")]
    Reversed,
}

#[derive(clap::Args)]
struct Options {
    /// `preset:NAME(p1,...)`, e.g. `preset:O3(2,1/2,3)`, or a presentation file
    #[arg(long)]
    algebra: String,
    /// Variables from greatest to smallest, e.g. `x,y,z`
    #[arg(long)]
    order: Option<String>,
    #[arg(long, value_enum, default_value = "toprev")]
    module_order: ModuleOrderArg,
    #[arg(long, value_enum, default_value = "e1..em")]
    basis_direction: DirectionArg,
    /// Module rank; the largest e<k> in the inputs by default
    #[arg(long)]
    rank: Option<usize>,
    /// Print JSON lines {kind, name, value}
    #[arg(long)]
    machine: bool,
    /// Files with one vector per line, or inline vectors such as `x*e1 + y*e2`
    #[arg(required = true)]
    inputs: Vec<String>,
}

fn execute(command: Command, opts: Options) -> Result<String, Failure> {
    let config = SessionConfig {
        algebra: opts.algebra,
        order: opts.order,
        module_order: match opts.module_order {
            ModuleOrderArg::Top => ModuleOrder::Top,
            ModuleOrderArg::Toprev => ModuleOrder::TopRev,
        },
        basis_direction: match opts.basis_direction {
            DirectionArg::Natural => BasisDirection::Natural,
            DirectionArg::Reversed => BasisDirection::Reversed,
        },
        rank: opts.rank,
        machine: opts.machine,
    };
    let session = Session::open(&config, &opts.inputs)?;
    let records = run_command(command, &session)?;
    Ok(if config.machine {
        render_machine(&records)
    } else {
        render_text(&records)
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    let (command, opts) = match cli.command {
        Action::Reduce(o) => (Command::Reduce, o),
        Action::Gbasis(o) => (Command::Gbasis, o),
        Action::Member(o) => (Command::Member, o),
        Action::Syzygy(o) => (Command::Syzygy, o),
    };
    match execute(command, opts) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code as u8)
        }
    }
}
