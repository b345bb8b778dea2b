use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use grundy_core::cli::{self, CliError, GenSpec, Method, ReduceTarget};
use grundy_core::generate::ChainProfile;
use grundy_core::sweep::SweepKind;

#[derive(Parser)]
#[command(name = "grundy", version, about = "Grundy dominating sequences")]
struct Args {
    /// Print only key=value lines.
    #[arg(long, global = true)]
    machine: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Exact,
    Chain,
    Cochain,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Bipartite,
    Cobipartite,
}

#[derive(Subcommand)]
enum Command {
    /// Compute γ_gr of a graph (or ρ_gr and τ_gr of a hypergraph) with a witness.
    Solve {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        /// Node budget for the exact search.
        #[arg(long)]
        budget: Option<u64>,
        /// Read the input as a hypergraph.
        #[arg(long)]
        hypergraph: bool,
    },
    /// Check a vertex sequence against a graph and print its footprints.
    Verify { graph: PathBuf, sequence: PathBuf },
    /// Build a reduction gadget and its provenance sidecar.
    Reduce {
        input: PathBuf,
        #[arg(long, value_enum)]
        to: TargetArg,
        #[arg(long)]
        out: PathBuf,
        /// Defaults to `<out>.prov`.
        #[arg(long)]
        provenance: Option<PathBuf>,
    },
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Time chain recognition plus the chain algorithm on doubling sizes.
    Bench {
        /// Profile shape; `s` entries scale with n.
        #[arg(long, default_value = "s,1,1,1x1,1,1,s")]
        shape: String,
        #[arg(long, default_value_t = 15)]
        min_exp: u32,
        #[arg(long, default_value_t = 20)]
        max_exp: u32,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
    },
    /// Run the property and equivalence sweeps.
    Sweep {
        /// chain, complete-bipartite, alpha, bipartite-reduction,
        /// cobipartite-reduction, duality, or all.
        #[arg(default_value = "all")]
        which: String,
        /// Number of seeded random instances (per-sweep default otherwise).
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Worker threads (all cores by default).
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Chain graph from a profile such as `1,2,1x2,1,3`.
    Chain {
        #[arg(long)]
        profile: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Hypergraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(args: Args) -> Result<String, CliError> {
    let report = match args.command {
        Command::Solve {
            path,
            method,
            budget,
            hypergraph,
        } => {
            if hypergraph {
                cli::cmd_solve_hypergraph(&path)?
            } else {
                let method = match method {
                    MethodArg::Auto => Method::Auto,
                    MethodArg::Exact => Method::Exact,
                    MethodArg::Chain => Method::Chain,
                    MethodArg::Cochain => Method::Cochain,
                };
                cli::cmd_solve(&path, method, budget)?
            }
        }
        Command::Verify { graph, sequence } => cli::cmd_verify(&graph, &sequence)?,
        Command::Reduce {
            input,
            to,
            out,
            provenance,
        } => {
            let target = match to {
                TargetArg::Bipartite => ReduceTarget::Bipartite,
                TargetArg::Cobipartite => ReduceTarget::Cobipartite,
            };
            let provenance = provenance.unwrap_or_else(|| {
                let mut p = out.clone().into_os_string();
                p.push(".prov");
                p.into()
            });
            cli::cmd_reduce(&input, target, &out, &provenance)?
        }
        Command::Gen { kind } => {
            let (spec, out) = match kind {
                GenKind::Chain { profile, out } => {
                    let p: ChainProfile = profile.parse().map_err(CliError::from)?;
                    (GenSpec::Chain(p), out)
                }
                GenKind::Graph { n, p, seed, out } => (GenSpec::Graph { n, p, seed }, out),
                GenKind::Hypergraph { n, m, seed, out } => {
                    (GenSpec::Hypergraph { n, m, seed }, out)
                }
            };
            let text = cli::cmd_gen(&spec)?;
            return match out {
                Some(path) => std::fs::write(&path, text)
                    .map(|_| String::new())
                    .map_err(|e| CliError {
                        code: cli::EXIT_INPUT,
                        message: format!("cannot write {}: {e}", path.display()),
                    }),
                None => Ok(text),
            };
        }
        Command::Bench {
            shape,
            min_exp,
            max_exp,
            repeats,
        } => cli::cmd_bench(&shape, min_exp, max_exp, repeats)?,
        Command::Sweep {
            which,
            random,
            seed,
            jobs,
        } => {
            let kinds = if which == "all" {
                SweepKind::ALL.to_vec()
            } else {
                vec![which.parse().map_err(CliError::from)?]
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| CliError {
                    code: cli::EXIT_INPUT,
                    message: e.to_string(),
                })?;
            pool.install(|| cli::cmd_sweep(&kinds, random, seed))?
        }
    };
    Ok(report.render(args.machine))
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
