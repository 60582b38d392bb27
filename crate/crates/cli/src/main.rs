//! `hypercount`: exact homomorphism and subhypergraph counts, pattern
//! classification, generators, oracles and the benchmark ladder.

mod bench;
mod commands;
mod difftest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypercount_core::{Error, Level};

#[derive(Parser, Debug)]
#[command(name = "hypercount", version, about = "Hypergraph homomorphism and subhypergraph counting")]
struct Cli {
    /// Worker threads for the counting engine (default: all cores).
    #[arg(long, global = true, env = "HYPERCOUNT_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count homomorphisms or subhypergraphs of a pattern in an input.
    Count(CountArgs),
    /// Obstruction search and DAG-treewidth of a pattern, cross-checked.
    Classify(ClassifyArgs),
    /// DAG-treewidth of a pattern with a witness decomposition.
    Dtw(LevelFile),
    /// Degeneracy of an input and the outdegree of its orientation.
    Degeneracy(DegeneracyArgs),
    /// Write a generated hypergraph.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Brute-force reference counts.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Time hom counting over a ladder of random inputs and emit CSV.
    Bench(BenchArgs),
    /// Random differential comparison of the engine against the oracles.
    Difftest(DifftestArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Hom,
    Sub,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Hom => "hom",
            Mode::Sub => "sub",
        }
    }
}

fn parse_level(s: &str) -> Result<Level, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long, value_enum, default_value = "hom")]
    pub mode: Mode,
    /// Trimming level: a non-negative integer or `inf`.
    #[arg(long, value_parser = parse_level, default_value = "inf")]
    pub l: Level,
    #[arg(long)]
    pub pattern: PathBuf,
    #[arg(long)]
    pub input: PathBuf,
    /// Append one CSV row (n, m, kappa_l, pattern, l, mode, count, millis).
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[arg(long, value_parser = parse_level, default_value = "inf")]
    pub l: Level,
    pub pattern: PathBuf,
    /// Also write the report as a one-row CSV.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct LevelFile {
    #[arg(long, value_parser = parse_level, default_value = "inf")]
    pub l: Level,
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct DegeneracyArgs {
    #[arg(long, value_parser = parse_level, default_value = "inf")]
    pub l: Level,
    pub file: PathBuf,
    /// Print the deletion order (vertex labels, first deleted first).
    #[arg(long)]
    pub emit_ordering: bool,
}

#[derive(Subcommand, Debug)]
pub enum GenCommand {
    /// Hardness gadget for a colored input and a pattern with an obstruction.
    Gadget {
        #[arg(long)]
        pattern: PathBuf,
        /// Only `auto` is supported: the first obstruction found.
        #[arg(long, default_value = "auto")]
        witness: String,
        /// Colored input (`c` lines for every vertex).
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = parse_level, default_value = "inf")]
        l: Level,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// The `k`-simplex: `k+1` vertices with every `k`-subset as an edge.
    Simplex {
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Tensor product of two hypergraphs.
    Tensor {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Random input with `κ_0` bounded by `--degeneracy`.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        rank: usize,
        #[arg(long)]
        degeneracy: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    Hom {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        input: PathBuf,
    },
    Sub {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        input: PathBuf,
    },
    /// Colorful homomorphisms into a colored input.
    Colhom {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        input: PathBuf,
    },
    /// Whether some `k+1` input vertices carry all their `k`-subsets.
    Simplex {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Pattern file; the 5-cycle when omitted.
    #[arg(long)]
    pub pattern: Option<PathBuf>,
    #[arg(long, value_parser = parse_level, default_value = "0")]
    pub l: Level,
    #[arg(long, value_delimiter = ',', default_value = "10000,30000,100000")]
    pub sizes: Vec<usize>,
    /// Edges per vertex of the generated inputs.
    #[arg(long, default_value_t = 3)]
    pub density: usize,
    #[arg(long, default_value_t = 2)]
    pub rank: usize,
    #[arg(long, default_value_t = 4)]
    pub degeneracy: usize,
    #[arg(long, default_value_t = 3)]
    pub reps: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct DifftestArgs {
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) | Error::Parse { .. } => 2,
        Error::Guard { .. } => 1,
        Error::Inconsistency(_) => 3,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            log::warn!("could not size the thread pool: {e}");
        }
    }
    let result = match cli.command {
        Command::Count(a) => commands::count(&a),
        Command::Classify(a) => commands::classify(&a),
        Command::Dtw(a) => commands::dtw(&a),
        Command::Degeneracy(a) => commands::degeneracy(&a),
        Command::Gen(g) => commands::gen(&g),
        Command::Oracle(o) => commands::oracle(&o),
        Command::Bench(a) => bench::run(&a),
        Command::Difftest(a) => difftest::run(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hypercount: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_classes_map_to_exit_codes() {
        assert_eq!(exit_code(&Error::input("x")), 2);
        assert_eq!(exit_code(&Error::Parse { line: 3, msg: "x".into() }), 2);
        assert_eq!(exit_code(&Error::Guard { what: "x", actual: 2, limit: 1 }), 1);
        assert_eq!(exit_code(&Error::inconsistency("x")), 3);
    }

    #[test]
    fn cli_definition_is_valid() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
