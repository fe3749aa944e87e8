use std::io::Write;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use matroid_arena_cli::{self as cli, CliResult, Demand, Output, PlayArgs, VerifyMode};
use matroid_arena_service::{serve, ServeError, SessionStore};

/// On-line list coloring of matroids.
#[derive(Parser)]
#[command(name = "matroid-arena", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct DemandArgs {
    /// Weights file {"w":[..]}; defaults to 1 everywhere.
    #[arg(long)]
    weights: Option<PathBuf>,
    /// List sizes file {"l":[..]}.
    #[arg(long, conflicts_with = "k")]
    lists: Option<PathBuf>,
    /// Every list has size k.
    #[arg(long)]
    k: Option<u32>,
}

impl From<DemandArgs> for Demand {
    fn from(a: DemandArgs) -> Demand {
        Demand {
            weights: a.weights,
            lists: a.lists,
            k: a.k,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Minimax,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic number and a cover by that many independent sets.
    Chroma {
        #[arg(long)]
        matroid: PathBuf,
    },
    /// Cover for w-coloring from lists {1..l(e)}, or a deficient set.
    Wcover {
        #[arg(long)]
        matroid: PathBuf,
        #[command(flatten)]
        demand: DemandArgs,
    },
    /// Plays the engine's Alice against a scripted Bob.
    Play {
        #[arg(long)]
        matroid: PathBuf,
        #[command(flatten)]
        demand: DemandArgs,
        /// full, random, singletons or tight.
        #[arg(long, default_value = "full")]
        bob: String,
        #[arg(long)]
        seed: Option<u64>,
        /// Also write the transcript here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Searches the whole game tree.
    Verify {
        #[arg(long)]
        matroid: PathBuf,
        #[command(flatten)]
        demand: DemandArgs,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: Mode,
        /// Stop after this many positions (exhaustive mode; the verdict is
        /// then not a proof).
        #[arg(long)]
        max_states: Option<usize>,
    },
    /// Checks subset exchange against brute force.
    ExchangeCheck {
        #[arg(long)]
        matroid: PathBuf,
        #[arg(long, conflicts_with_all = ["samples", "seed"])]
        exhaustive: bool,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Colors from explicit lists {"lists":[[..],..]}.
    ListColor {
        #[arg(long)]
        matroid: PathBuf,
        #[arg(long)]
        lists: PathBuf,
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Runs the HTTP session service until interrupted.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long)]
        state_dir: Option<PathBuf>,
        #[arg(long, default_value = "127.0.0.1")]
        host: std::net::IpAddr,
    },
}

fn run(command: Command) -> CliResult<Output> {
    match command {
        Command::Chroma { matroid } => cli::chroma(&matroid),
        Command::Wcover { matroid, demand } => cli::wcover(&matroid, &demand.into()),
        Command::Play {
            matroid,
            demand,
            bob,
            seed,
            out,
        } => cli::play_game(&PlayArgs {
            matroid: &matroid,
            demand: demand.into(),
            bob: &bob,
            seed,
            out: out.as_deref(),
        }),
        Command::Verify {
            matroid,
            demand,
            mode,
            max_states,
        } => {
            let mode = match mode {
                Mode::Exhaustive => VerifyMode::Exhaustive,
                Mode::Minimax => VerifyMode::Minimax,
            };
            cli::verify(&matroid, &demand.into(), mode, max_states)
        }
        Command::ExchangeCheck {
            matroid,
            exhaustive,
            samples,
            seed,
        } => cli::exchange_check(&matroid, exhaustive, samples, seed),
        Command::ListColor {
            matroid,
            lists,
            weights,
        } => cli::list_color(&matroid, &lists, weights.as_deref()),
        Command::Serve { .. } => unreachable!("handled in main"),
    }
}

fn run_server(host: std::net::IpAddr, port: u16, state_dir: Option<PathBuf>) -> ExitCode {
    let store = match state_dir {
        Some(dir) => match SessionStore::open(dir) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {}", e.reason);
                return ExitCode::from(2);
            }
        },
        None => SessionStore::in_memory(),
    };
    let runtime = match tokio::runtime::Runtime::new() {
        Ok(rt) => rt,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    };
    let addr = SocketAddr::new(host, port);
    eprintln!("serving on http://{addr}");
    match runtime.block_on(serve(addr, Arc::new(store))) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ ServeError::Bind { .. }) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("MATROID_ARENA_LOG", "warn")).init();
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Command::Serve {
        port,
        state_dir,
        host,
    } = args.command
    {
        return run_server(host, port, state_dir);
    }
    match run(args.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if writeln!(stdout, "{}", out.json).is_err() {
                return ExitCode::from(3);
            }
            eprintln!("{}", out.summary);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
