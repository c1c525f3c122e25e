mod commands;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spectral_hist::{ExtremalFamily, PowerOptions, ProofTheorem};

use error::Failure;
use output::Format;

/// Spectral-radius conditions for homeomorphically irreducible spanning trees.
///
/// Graphs are given as graph6 strings or as `family:NAME:params`, e.g.
/// `family:K:5`, `family:Kpq:2:8`, `family:B:8`.
#[derive(Debug, Parser)]
#[command(name = "spectral-hist", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Residual tolerance for the power iteration.
    #[arg(long, global = true, value_parser = positive_f64)]
    tol: Option<f64>,
    /// Iteration cap for the power iteration.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_iter: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectral radius, residual and iteration count.
    Rho { graph: String },
    /// Decide whether the graph has a HIST.
    Hist {
        graph: String,
        /// Also replay the case analysis for this statement.
        #[arg(long, value_enum)]
        proof: Option<TheoremArg>,
        /// Abort the search after this many nodes.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        budget: Option<u64>,
    },
    /// Characteristic quartic of L_n or B_n and its largest root.
    Charpoly {
        #[arg(value_enum)]
        family: FamilyArg,
        n: usize,
    },
    /// graph6 of a named construction.
    Family {
        /// One of L, B, K, P, C, Kpq, star.
        name: String,
        #[arg(required = true, num_args = 1..=2)]
        params: Vec<usize>,
    },
    /// Exhaustive and sampled verification runs.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Round-trip validation of a graph6 file.
    Convert { file: PathBuf },
}

#[derive(Debug, Subcommand)]
enum VerifyTarget {
    /// Connected graphs of order n against rho(L_n).
    Thm1(TheoremArgs),
    /// 2-connected graphs of order n against rho(B_n).
    Thm2(TheoremArgs),
    /// Closed-form slack bounds for L_n and B_n over a range of orders.
    Corollaries {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Oracle check of every no-HIST certificate up to order nmax.
    Certificates {
        #[arg(long, default_value_t = 6)]
        nmax: usize,
    },
    /// Compare prescreened and unfiltered decisions on a subsample.
    Audit {
        #[arg(value_enum)]
        theorem: TheoremArg,
        #[arg(long)]
        n: usize,
        /// Sample one labelled graph in this many.
        #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u64).range(1..))]
        modulus: u64,
        #[command(flatten)]
        threads: Threads,
    },
}

#[derive(Debug, Args)]
struct TheoremArgs {
    /// Graph order.
    #[arg(long)]
    n: usize,
    /// Scan this graph6 file instead of every labelled graph.
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[command(flatten)]
    threads: Threads,
    /// Disable the edge-count and degree prescreens.
    #[arg(long)]
    no_prescreens: bool,
    /// Replace the extremal spectral radius as threshold.
    #[arg(long, value_parser = finite_f64)]
    threshold: Option<f64>,
}

#[derive(Debug, Args)]
struct Threads {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
}

impl Threads {
    fn count(&self) -> usize {
        match self.threads {
            Some(t) => t as usize,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TheoremArg {
    Thm1,
    Thm2,
}

impl From<TheoremArg> for ProofTheorem {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::Thm1 => ProofTheorem::OneConnected,
            TheoremArg::Thm2 => ProofTheorem::TwoConnected,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "B", alias = "b")]
    B,
}

impl From<FamilyArg> for ExtremalFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::L => ExtremalFamily::L,
            FamilyArg::B => ExtremalFamily::B,
        }
    }
}

fn finite_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(format!("expected a finite number, got {s}")),
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match finite_f64(s)? {
        x if x > 0.0 => Ok(x),
        _ => Err(format!("expected a positive number, got {s}")),
    }
}

impl Cli {
    fn power(&self) -> PowerOptions {
        let mut p = PowerOptions::default();
        if let Some(tol) = self.tol {
            p.tol = tol;
        }
        if let Some(m) = self.max_iter {
            p.max_iter = m as usize;
        }
        p
    }

    fn run(&self) -> Result<(), Failure> {
        let (format, power) = (self.format, self.power());
        match &self.command {
            Command::Rho { graph } => commands::rho(format, graph, &power),
            Command::Hist { graph, proof, budget } => {
                commands::hist(format, graph, proof.map(Into::into), *budget)
            }
            Command::Charpoly { family, n } => commands::charpoly(format, (*family).into(), *n),
            Command::Family { name, params } => commands::family(format, name, params),
            Command::Verify { target } => match target {
                VerifyTarget::Thm1(a) => verify(format, ProofTheorem::OneConnected, a, power),
                VerifyTarget::Thm2(a) => verify(format, ProofTheorem::TwoConnected, a, power),
                VerifyTarget::Corollaries { from, to } => commands::corollaries(format, *from, *to, &power),
                VerifyTarget::Certificates { nmax } => commands::certificates(format, *nmax),
                VerifyTarget::Audit {
                    theorem,
                    n,
                    modulus,
                    threads,
                } => commands::audit(format, (*theorem).into(), *n, *modulus, threads.count(), power),
            },
            Command::Convert { file } => commands::convert(format, file),
        }
    }
}

fn verify(format: Format, theorem: ProofTheorem, a: &TheoremArgs, power: PowerOptions) -> Result<(), Failure> {
    let opts = spectral_hist::VerifyOptions {
        threads: a.threads.count(),
        prescreens: !a.no_prescreens,
        threshold: a.threshold,
        power,
    };
    commands::verify(format, theorem, a.n, a.corpus.as_deref(), &opts)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match cli.run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
