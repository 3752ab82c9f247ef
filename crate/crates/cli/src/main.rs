use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::{info, LevelFilter};
use serde_json::json;

use infnode::centrality::DEFAULT_CI_RADIUS;
use infnode::control::{constraint_efficiency, q_max_for_fraction};
use infnode::diffusion::{default_alpha, ic_monte_carlo, sir_monte_carlo, IcParams, SirParams};
use infnode::experiment::{
    method_ranking, method_scores, report, run_experiment, top_k, weight_sweep, ExperimentConfig,
    IcSettings, Method, RankingOptions, SirSettings,
};
use infnode::fusion::{fuse, parse_decision_matrix, FusionOptions, Weights};
use infnode::graph::{load_edge_list, stats, LoadOptions};
use infnode::{Error, Graph};

#[derive(Parser, Debug)]
#[command(
    name = "infnode",
    version,
    about = "Rank influential nodes and evaluate seed sets"
)]
struct Cli {
    /// Seed for every random stream.
    #[arg(long, global = true)]
    rng_seed: Option<u64>,

    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Suppress load reports and warnings.
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// Edge list: two whitespace-separated labels per line, `#` comments.
    graph: PathBuf,

    /// Treat integer labels as 1..=max and keep gaps as isolated nodes.
    #[arg(long)]
    one_indexed: bool,

    /// Drop nodes without edges.
    #[arg(long)]
    drop_isolated: bool,
}

#[derive(Args, Debug)]
struct RankArgs {
    #[arg(long, value_parser = parse_method, default_value = "sk_e")]
    method: Method,

    /// Weight of the global metric in SK-E fusion.
    #[arg(long, default_value_t = 0.5)]
    w_global: f64,

    #[arg(long, default_value_t = DEFAULT_CI_RADIUS)]
    ci_radius: usize,
}

impl RankArgs {
    fn options(&self) -> RankingOptions {
        RankingOptions {
            w_global: self.w_global,
            ci_radius: self.ci_radius,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Topological statistics of a network.
    Stats {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Rank the nodes of a graph, or fuse a decision matrix given as CSV.
    Rank {
        /// Edge list (omit when using --matrix).
        graph: Option<PathBuf>,

        /// Decision matrix CSV: label column, then one column per criterion.
        #[arg(long, conflicts_with = "graph")]
        matrix: Option<PathBuf>,

        /// Criterion weights for --matrix, comma separated (default: 1-w, w).
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<f64>>,

        /// Dump X*, R, C, D, U and zeta as JSON.
        #[arg(long)]
        emit_matrices: bool,

        #[arg(long)]
        one_indexed: bool,

        #[arg(long)]
        drop_isolated: bool,

        #[command(flatten)]
        rank: RankArgs,
    },
    /// SIR reach of SK-E seed sets across global-metric weights.
    Sweep {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 0.05)]
        step: f64,
        #[arg(long, default_value_t = 20)]
        days: usize,
        #[arg(long, default_value_t = 500)]
        runs: usize,
        #[arg(long, default_value_t = 50)]
        k: usize,
        /// Infection probability (default: <k>/<k^2>).
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, default_value_t = 0.2)]
        beta: f64,
    },
    /// SIR trace of a method's top-k seed set.
    Sir {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long, default_value_t = 50)]
        k: usize,
        #[arg(long, default_value_t = 50)]
        days: usize,
        #[arg(long, default_value_t = 500)]
        runs: usize,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, default_value_t = 0.2)]
        beta: f64,
    },
    /// Independent-cascade reach of a method's top-k seed set over a p range.
    Ic {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long, default_value_t = 10)]
        k: usize,
        #[arg(long, default_value_t = 0.02)]
        p_min: f64,
        #[arg(long, default_value_t = 0.03)]
        p_max: f64,
        #[arg(long, default_value_t = 0.002)]
        p_step: f64,
        #[arg(long, default_value_t = 500)]
        runs: usize,
    },
    /// Grounded-Laplacian constraint efficiency of a method's ranking.
    Constraint {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        rank: RankArgs,
        /// Control budget as a fraction of the nodes.
        #[arg(long, default_value_t = 0.05)]
        frac: f64,
        /// Explicit budget; overrides --frac.
        #[arg(long)]
        q_max: Option<usize>,
    },
    /// Run every comparison described by a JSON config into its output directory.
    Compare {
        config: PathBuf,
        /// Override a config key, e.g. `--set k=40`. Repeatable.
        #[arg(long = "set", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn open(path: &Path) -> infnode::Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn load_graph(path: &Path, one_indexed: bool, drop_isolated: bool) -> infnode::Result<Graph> {
    let file = open(path)?;
    let options = LoadOptions {
        one_indexed_hint: one_indexed,
        allow_isolated: !drop_isolated,
    };
    let (g, report) = load_edge_list(file, options)?;
    info!(
        "loaded {}: {} nodes, {} edges ({} self-loops, {} duplicates, {} isolated dropped)",
        path.display(),
        report.nodes,
        report.edges,
        report.self_loops,
        report.duplicate_edges,
        report.isolated_dropped
    );
    Ok(g)
}

impl GraphArgs {
    fn load(&self) -> infnode::Result<Graph> {
        load_graph(&self.graph, self.one_indexed, self.drop_isolated)
    }

    fn network_name(&self) -> String {
        self.graph
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "network".into())
    }
}

fn write_json<W: Write>(mut w: W, value: &impl serde::Serialize) -> infnode::Result<()> {
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    Ok(())
}

fn run(cli: Cli) -> infnode::Result<()> {
    let seed = cli.rng_seed.unwrap_or(0);
    let mut sink: Box<dyn Write> = match &cli.output {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let out = &mut sink;
    let json = cli.format == Format::Json;

    match cli.command {
        Command::Stats { graph } => {
            let g = graph.load()?;
            let s = stats(&g);
            if json {
                write_json(out, &json!({ "network": graph.network_name(), "stats": s }))?;
            } else {
                report::write_stats_csv(out, &graph.network_name(), &s)?;
            }
        }
        Command::Rank {
            graph,
            matrix,
            weights,
            emit_matrices,
            one_indexed,
            drop_isolated,
            rank,
        } => {
            if let Some(path) = matrix {
                if rank.method != Method::SkE {
                    return Err(Error::InvalidParameter(
                        "--matrix only supports --method sk_e".into(),
                    ));
                }
                let x = parse_decision_matrix(open(&path)?)?;
                let w = match weights {
                    Some(w) => Weights::new(w)?,
                    None if x.criterion_count() == 2 => Weights::local_global(rank.w_global)?,
                    None => {
                        return Err(Error::InvalidParameter(format!(
                            "matrix has {} criteria; pass --weights",
                            x.criterion_count()
                        )))
                    }
                };
                let fused = fuse(
                    &x,
                    &w,
                    FusionOptions {
                        keep_matrices: emit_matrices,
                    },
                )?;
                if emit_matrices || json {
                    write_json(out, &fused)?;
                } else {
                    report::write_ranking_csv(
                        out,
                        &fused.labels,
                        &fused.ranking,
                        &fused.net_dominance,
                        "zeta",
                    )?;
                }
            } else {
                let Some(path) = graph else {
                    return Err(Error::InvalidParameter("give a graph or --matrix".into()));
                };
                let g = load_graph(&path, one_indexed, drop_isolated)?;
                if emit_matrices {
                    if rank.method != Method::SkE {
                        return Err(Error::InvalidParameter(
                            "--emit-matrices requires --method sk_e".into(),
                        ));
                    }
                    let fused = infnode::fusion::sk_e(
                        &g,
                        rank.w_global,
                        FusionOptions {
                            keep_matrices: true,
                        },
                    )?;
                    write_json(out, &fused)?;
                } else {
                    let scores = method_scores(&g, rank.method, rank.options())?;
                    let ranking = infnode::fusion::rank(&scores.values);
                    let score_name = if rank.method == Method::SkE {
                        "zeta"
                    } else {
                        rank.method.name()
                    };
                    if json {
                        let entries: Vec<_> = ranking
                            .iter()
                            .enumerate()
                            .map(|(p, &i)| json!({ "rank": p + 1, "node_label": g.label(i), "score": scores.values[i] }))
                            .collect();
                        write_json(out, &json!({ "method": rank.method, "ranking": entries }))?;
                    } else {
                        report::write_ranking_csv(
                            out,
                            g.labels(),
                            &ranking,
                            &scores.values,
                            score_name,
                        )?;
                    }
                }
            }
        }
        Command::Sweep {
            graph,
            step,
            days,
            runs,
            k,
            alpha,
            beta,
        } => {
            let g = graph.load()?;
            let settings = SirSettings {
                k,
                alpha,
                beta,
                days,
                runs,
                rng_seed: seed,
            };
            let sweep = weight_sweep(&g, step, &settings)?;
            if json {
                write_json(out, &sweep)?;
            } else {
                report::write_sweep_csv(out, &sweep)?;
            }
        }
        Command::Sir {
            graph,
            rank,
            k,
            days,
            runs,
            alpha,
            beta,
        } => {
            let g = graph.load()?;
            let seeds = top_k(&method_ranking(&g, rank.method, rank.options())?, k)?;
            let alpha = match alpha {
                Some(a) => a,
                None => default_alpha(&g)?,
            };
            let params = SirParams {
                alpha,
                beta,
                days,
                runs,
                seeds,
                rng_seed: seed,
            };
            let trace = sir_monte_carlo(&g, &params)?;
            if json {
                write_json(
                    out,
                    &json!({ "method": rank.method, "alpha": alpha, "beta": beta, "trace": trace }),
                )?;
            } else {
                report::write_trace_csv(out, &trace)?;
            }
        }
        Command::Ic {
            graph,
            rank,
            k,
            p_min,
            p_max,
            p_step,
            runs,
        } => {
            let g = graph.load()?;
            let seeds = top_k(&method_ranking(&g, rank.method, rank.options())?, k)?;
            let settings = IcSettings {
                k,
                p_min,
                p_max,
                p_step,
                runs,
                rng_seed: seed,
            };
            let p_values = settings.p_values()?;
            let results = p_values
                .iter()
                .map(|&p| {
                    ic_monte_carlo(
                        &g,
                        &IcParams {
                            p,
                            seeds: seeds.clone(),
                            runs,
                            rng_seed: seed,
                        },
                    )
                })
                .collect::<infnode::Result<Vec<_>>>()?;
            if json {
                write_json(
                    out,
                    &json!({ "method": rank.method, "p": p_values, "results": results }),
                )?;
            } else {
                report::write_ic_sweep_csv(out, &p_values, &results)?;
            }
        }
        Command::Constraint {
            graph,
            rank,
            frac,
            q_max,
        } => {
            let g = graph.load()?;
            let ranking = method_ranking(&g, rank.method, rank.options())?;
            let q = q_max.unwrap_or_else(|| q_max_for_fraction(g.node_count(), frac));
            let report_ = constraint_efficiency(&g, &ranking, q)?;
            if json {
                write_json(out, &json!({ "method": rank.method, "report": report_ }))?;
            } else {
                report::write_control_csv(out, &report_)?;
            }
        }
        Command::Compare { config, overrides } => {
            let mut cfg = ExperimentConfig::load(&config)?;
            for kv in &overrides {
                let (key, value) = kv
                    .split_once('=')
                    .ok_or_else(|| Error::Config(format!("override {kv:?} is not KEY=VALUE")))?;
                cfg.set(key.trim(), value.trim())?;
            }
            if let Some(s) = cli.rng_seed {
                cfg.rng_seed = s;
            }
            if !Path::new(&cfg.graph).is_absolute() {
                if let Some(dir) = config.parent() {
                    let candidate = dir.join(&cfg.graph);
                    if candidate.exists() {
                        cfg.graph = candidate.to_string_lossy().into_owned();
                    }
                }
            }
            let outputs = run_experiment(&cfg)?;
            let files: Vec<String> = outputs
                .files
                .iter()
                .map(|p| p.display().to_string())
                .collect();
            if json {
                write_json(
                    out,
                    &json!({ "w_global": outputs.w_global, "files": files }),
                )?;
            } else {
                writeln!(out, "file")?;
                for f in files {
                    writeln!(out, "{f}")?;
                }
            }
        }
    }
    sink.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = if cli.quiet {
        LevelFilter::Off
    } else {
        LevelFilter::Warn
    };
    env_logger::Builder::new()
        .filter_level(level)
        .parse_default_env()
        .init();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: cannot configure {threads} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_numerical() { 3 } else { 2 })
        }
    }
}
