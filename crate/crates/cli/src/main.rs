//! `diamond`: verify, construct, attack and search single-error-correcting
//! outer codes on the generalized diamond network N_s.
//!
//! Exit codes: 0 success / correctable, 1 negative verdict, 2 undecided
//! (solver limit), 3 usage, input or parse error.

mod commands;
mod record;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use record::{strip_record_flag, RunRecord, RECORD_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "diamond", version, about = "Single-error correction on the generalized diamond network N_s")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    /// Branch-node limit for each exact cover solve.
    #[arg(long, global = true, env = "DIAMOND_NODE_LIMIT", value_name = "N")]
    cover_node_limit: Option<u64>,
    /// Write a replayable run record to this file.
    #[arg(long, global = true, value_name = "FILE")]
    record: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CodeArgs {
    /// Code file: one word per line, optional `% a=<a> n=<n>` header.
    pub file: PathBuf,
    /// Network parameter s (default: word length - 2).
    #[arg(long)]
    pub s: Option<usize>,
    /// Alphabet size (default: from the file).
    #[arg(long)]
    pub a: Option<usize>,
    /// Number of V_2 -> T edges for the N_{s,s'} variant (default: s).
    #[arg(long)]
    pub s_out: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide correctability, print the cover and check the network code exhaustively.
    Verify {
        #[command(flatten)]
        code: CodeArgs,
        /// Write the cover witness (JSON) here.
        #[arg(long, value_name = "FILE")]
        cover_out: Option<PathBuf>,
        /// Write the constructed network code (JSON) here.
        #[arg(long, value_name = "FILE")]
        netcode_out: Option<PathBuf>,
    },
    /// Print the τ-family of a code.
    Tau {
        #[command(flatten)]
        code: CodeArgs,
        /// Only ∅, singletons and inclusion-maximal sets.
        #[arg(long)]
        undominated: bool,
        /// Also list τ for every tail.
        #[arg(long)]
        table: bool,
    },
    /// Build the network code for a correctable code and write it as JSON.
    Export {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, short, value_name = "FILE")]
        out: PathBuf,
    },
    /// Send one codeword through a network code, optionally under attack.
    Simulate {
        /// Network code JSON (from `export` or `verify --netcode-out`).
        netcode: PathBuf,
        /// Codeword as a word (`0111`) or 1-based label (`c2`).
        #[arg(long)]
        codeword: String,
        /// Manipulation of one source edge, e.g. `e1=2` or `e0->0`.
        #[arg(long)]
        attack: Option<String>,
    },
    /// Exhaustive search for σ(N_s, a).
    Search {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        s_out: Option<usize>,
        /// Use the a = 2 counting criterion instead of cover solves.
        #[arg(long)]
        binary_fast: bool,
        /// Only decide whether a code of this size exists.
        #[arg(long, value_name = "N")]
        target: Option<usize>,
        #[arg(long, value_name = "N")]
        limit_nodes: Option<u64>,
        #[arg(long, value_name = "SECS")]
        limit_seconds: Option<f64>,
        /// Correctable code to start from (repeatable).
        #[arg(long, value_name = "FILE")]
        seed_file: Vec<PathBuf>,
        /// Start from the lexicographic greedy code.
        #[arg(long)]
        greedy: bool,
        /// Disable isomorph rejection.
        #[arg(long)]
        no_symmetry: bool,
        /// Write the witness code here.
        #[arg(long, short, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Upper bounds on σ(N_s, a).
    Bounds {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        a: usize,
        /// Include the LP bound.
        #[arg(long)]
        lp: bool,
    },
    /// LP upper bound on σ(N_s, a) from the tail-code distance distribution.
    LpBound {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        a: usize,
        /// Round Λ up to an even integer.
        #[arg(long)]
        integrality: bool,
        /// For s = 2, do not combine with the length-3 Λ bound.
        #[arg(long)]
        no_s2_cut: bool,
    },
    /// Delsarte LP bound on A_q(n, d).
    Delsarte {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 3)]
        d: usize,
    },
    /// Best certified lower and upper bounds for a range of (s, a).
    Table {
        #[arg(long, default_value_t = 1)]
        s_min: usize,
        #[arg(long, default_value_t = 5)]
        s_max: usize,
        #[arg(long, default_value_t = 2)]
        a_min: usize,
        #[arg(long, default_value_t = 5)]
        a_max: usize,
        /// Time budget per cell for the exhaustive search (0 disables it).
        #[arg(long, default_value_t = 2.0, value_name = "SECS")]
        search_seconds: f64,
        /// Skip the LP bound.
        #[arg(long)]
        no_lp: bool,
    },
    /// Try every head coordinate of external codes (length n, network N_{n-2}).
    Sweep {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Comma-separated head coordinates (default: all).
        #[arg(long, value_delimiter = ',')]
        heads: Vec<usize>,
    },
    /// List, verify or export the bundled codes.
    Fixtures {
        #[arg(long)]
        verify: bool,
        /// Write every bundled code into this directory.
        #[arg(long, value_name = "DIR")]
        export: Option<PathBuf>,
    },
    /// Rerun the command stored in a run record.
    Replay {
        /// Run record written by `--record`.
        #[arg(value_name = "RECORD")]
        file: PathBuf,
        /// Exit 1 unless the output matches the record.
        #[arg(long)]
        check: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::Tau { .. } => "tau",
            Command::Export { .. } => "export",
            Command::Simulate { .. } => "simulate",
            Command::Search { .. } => "search",
            Command::Bounds { .. } => "bounds",
            Command::LpBound { .. } => "lp-bound",
            Command::Delsarte { .. } => "delsarte",
            Command::Table { .. } => "table",
            Command::Sweep { .. } => "sweep",
            Command::Fixtures { .. } => "fixtures",
            Command::Replay { .. } => "replay",
        }
    }
}

/// What a command produced.
pub struct Outcome {
    pub text: String,
    pub exit: i32,
    pub parameters: serde_json::Value,
    pub result: serde_json::Value,
    pub stats: serde_json::Value,
    pub files: Vec<PathBuf>,
}

impl Outcome {
    pub fn rendered(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(&self.result).unwrap_or_default() + "\n"
        } else {
            self.text.clone()
        }
    }
}

/// Parses and runs one argument list (without the program name). Errors
/// carry exit code 3.
pub fn run_args(args: &[String]) -> Result<(Outcome, bool), (String, i32)> {
    let argv = std::iter::once("diamond".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            return Err((e.render().to_string(), code));
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(("error: --jobs must be at least 1".into(), EXIT_INPUT));
        }
        // Only the first call configures the pool; replays reuse it.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let json = cli.json;
    let ctx = commands::Context {
        cover_node_limit: cli.cover_node_limit,
    };
    match commands::run(&cli.command, &ctx) {
        Ok(o) => Ok((o, json)),
        Err(e) => Err((format!("error: {e:#}"), EXIT_INPUT)),
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    let record_path = Cli::try_parse_from(std::iter::once("diamond".to_string()).chain(args.iter().cloned()))
        .ok()
        .and_then(|c| c.record.clone().map(|p| (p, c.command.name())));

    let (code, printed, outcome) = match run_args(&args) {
        Ok((o, json)) => {
            let text = o.rendered(json);
            (o.exit, text, Some(o))
        }
        Err((msg, code)) => {
            if code == EXIT_OK {
                print!("{msg}");
            } else {
                eprintln!("{}", msg.trim_end());
            }
            (code, String::new(), None)
        }
    };
    print!("{printed}");
    let _ = std::io::stdout().flush();

    if let (Some((path, command)), Some(o)) = (record_path, outcome) {
        let rec = RunRecord {
            version: RECORD_VERSION,
            command: command.to_string(),
            argv: strip_record_flag(&args),
            parameters: o.parameters,
            result: o.result,
            exit_code: code,
            witness_files: o.files,
            output: printed,
            wall_time_ms: start.elapsed().as_millis() as u64,
            stats: o.stats,
        };
        if let Err(e) = rec.write(&path) {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_INPUT as u8);
        }
    }
    ExitCode::from(code as u8)
}
