mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use anyhow::Context;
use betti_core::suites::DEFAULT_SEED;
use betti_core::FieldSelector;
use clap::{Parser, Subcommand, ValueEnum};

/// Betti sequences of monomial ideals and simplicial complexes realizing
/// them as f-vectors.
#[derive(Parser, Debug)]
#[command(name = "bettifv", version)]
pub struct Cli {
    /// Coefficient field for homology: QQ, F2, F32003, ...
    #[arg(long, global = true, default_value = "QQ")]
    pub field: FieldSelector,

    /// Worker threads for the homology oracle.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Print elapsed time to stderr.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Betti numbers of an edge ideal or a monomial ideal.
    #[command(subcommand)]
    Betti(BettiCommand),
    /// Simplicial complexes whose f-vector is a Betti sequence.
    #[command(subcommand)]
    Realize(RealizeCommand),
    /// f-vector checks.
    #[command(subcommand)]
    Fvector(FvectorCommand),
    /// Stable ideals.
    #[command(subcommand)]
    Stable(StableCommand),
    /// Even-dimensional cyclic polytopes.
    #[command(subcommand)]
    Cyclic(CyclicCommand),
    /// Gorenstein Betti shapes and witnesses.
    #[command(subcommand)]
    Gorenstein(GorensteinCommand),
    /// The nearly Scarf ideal of a complex given as a facet list.
    NearlyScarf {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a cross-check suite against the homology oracle.
    Verify {
        suite: Suite,
        /// Vertex bound for the chordal, cyclic and nearly-scarf suites.
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Hvt,
    Hochster,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum BettiCommand {
    /// Edge ideal of a graph given as an edge list.
    Graph {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
    },
    /// Monomial ideal, one generator per line; non-squarefree ideals are
    /// polarized first.
    Ideal { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum RealizeCommand {
    /// Complex whose f-vector is the Betti sequence of a chordal edge ideal.
    Graph {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Acyclic complex for the Betti sequence of a componentwise linear ideal.
    BettiCwl {
        betti: Sequence,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum FvectorCommand {
    /// Kruskal-Katona validity and Kalai decomposition.
    Check {
        f: Sequence,
    },
    /// Colex complex with the given f-vector, or an acyclic one.
    Realize {
        f: Sequence,
        #[arg(long)]
        acyclic: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum StableCommand {
    /// Eliahou-Kervaire Betti numbers, cross-checked by the oracle.
    Betti { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum CyclicCommand {
    Betti { v: usize, d: usize },
    Realize {
        v: usize,
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Formula against the oracle on the boundary complex.
    Verify { v: usize, d: usize },
}

#[derive(Subcommand, Debug)]
pub enum GorensteinCommand {
    Shape { p: usize, m: Option<u64> },
    /// Gorenstein ideal with first Betti number m+1 and projective dimension p.
    Witness { m: u64, p: u64 },
    Admissible { m: u64, p: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    SixCycle,
    WorkedExample,
    Chordal,
    Cyclic,
    Fvector,
    Stable,
    NearlyScarf,
    Gorenstein,
    Properties,
    All,
}

/// Comma-separated integers such as `6,9,6,2`.
#[derive(Clone, Debug)]
pub struct Sequence(pub Vec<u64>);

impl FromStr for Sequence {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.trim_matches(|c| c == '(' || c == ')')
            .split(',')
            .map(|x| x.trim().parse::<u64>().map_err(|e| format!("{x:?}: {e}")))
            .collect::<Result<_, _>>()
            .map(Sequence)
    }
}

/// Failures that are not the caller's fault exit with 1; unreadable or
/// malformed input exits with 2.
fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<std::io::Error>() {
            return 2;
        }
        if let Some(betti_core::Error::Parse { .. }) = cause.downcast_ref::<betti_core::Error>() {
            return 2;
        }
    }
    1
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let outcome = commands::run(&cli).and_then(|report| {
        let text = serde_json::to_string_pretty(&report).context("serializing report")?;
        println!("{text}");
        Ok(report.ok)
    });
    if cli.timing {
        eprintln!("elapsed: {:.3?}", start.elapsed());
    }
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
