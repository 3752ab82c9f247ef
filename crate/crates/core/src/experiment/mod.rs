//! Ranking methods and the evaluation drivers built on them.

mod config;
pub mod report;

pub use config::{ExperimentConfig, WGlobal};

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::centrality::{
    betweenness_centrality, closeness_centrality, collective_influence, degree_centrality, k_shell,
    ks_entropy, sd_local, MetricVector, DEFAULT_CI_RADIUS,
};
use crate::control::{constraint_efficiency, q_max_for_fraction};
use crate::diffusion::{
    default_alpha, ic_monte_carlo, sir_monte_carlo, IcParams, IcResult, SirParams, SirTrace,
};
use crate::error::{Error, Result};
use crate::fusion::{rank, sk_e, FusionOptions};
use crate::graph::{load_edge_list, stats, Graph, LoadOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    SkE,
    Sd,
    KsEntropy,
    Dc,
    Bc,
    Cc,
    Kshell,
    Ci,
}

impl Method {
    pub const ALL: [Method; 8] = [
        Method::SkE,
        Method::Sd,
        Method::KsEntropy,
        Method::Dc,
        Method::Bc,
        Method::Cc,
        Method::Kshell,
        Method::Ci,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::SkE => "sk_e",
            Method::Sd => "sd",
            Method::KsEntropy => "ks_entropy",
            Method::Dc => "dc",
            Method::Bc => "bc",
            Method::Cc => "cc",
            Method::Kshell => "kshell",
            Method::Ci => "ci",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown method {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankingOptions {
    pub w_global: f64,
    pub ci_radius: usize,
}

impl Default for RankingOptions {
    fn default() -> Self {
        RankingOptions {
            w_global: 0.5,
            ci_radius: DEFAULT_CI_RADIUS,
        }
    }
}

/// Per-node scores of `method`; for SK-E these are the net-dominance values.
pub fn method_scores(g: &Graph, method: Method, opts: RankingOptions) -> Result<MetricVector> {
    Ok(match method {
        Method::SkE => {
            let fused = sk_e(g, opts.w_global, FusionOptions::default())?;
            MetricVector::new("zeta", fused.net_dominance)
        }
        Method::Sd => sd_local(g),
        Method::KsEntropy => ks_entropy(g),
        Method::Dc => degree_centrality(g),
        Method::Bc => betweenness_centrality(g),
        Method::Cc => closeness_centrality(g),
        Method::Kshell => k_shell(g),
        Method::Ci => collective_influence(g, opts.ci_radius),
    })
}

/// Nodes by descending score, ties by ascending index.
pub fn method_ranking(g: &Graph, method: Method, opts: RankingOptions) -> Result<Vec<usize>> {
    Ok(rank(&method_scores(g, method, opts)?.values))
}

pub fn top_k(ranking: &[usize], k: usize) -> Result<Vec<usize>> {
    if k == 0 || k > ranking.len() {
        return Err(Error::InvalidParameter(format!(
            "seed-set size {k} must be in 1..={}",
            ranking.len()
        )));
    }
    Ok(ranking[..k].to_vec())
}

/// Epidemic settings shared by the sweep and the SIR comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SirSettings {
    pub k: usize,
    /// `None` selects the epidemic-threshold rate of the graph.
    pub alpha: Option<f64>,
    pub beta: f64,
    pub days: usize,
    pub runs: usize,
    pub rng_seed: u64,
}

impl SirSettings {
    fn params(&self, g: &Graph, seeds: Vec<usize>) -> Result<SirParams> {
        let alpha = match self.alpha {
            Some(a) => a,
            None => default_alpha(g)?,
        };
        Ok(SirParams {
            alpha,
            beta: self.beta,
            days: self.days,
            runs: self.runs,
            seeds,
            rng_seed: self.rng_seed,
        })
    }
}

/// Grid `0, step, 2 step, ..., 1`; `step` must divide `[0, 1]` evenly.
pub fn weight_grid(step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0 && step <= 0.5) {
        return Err(Error::InvalidParameter(format!(
            "grid step {step} must lie in (0, 0.5]"
        )));
    }
    let intervals = (1.0 / step).round();
    if (intervals * step - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidParameter(format!(
            "grid step {step} does not divide [0, 1]"
        )));
    }
    let intervals = intervals as usize;
    Ok((0..=intervals)
        .map(|i| i as f64 / intervals as f64)
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub w_global: f64,
    pub f_final_mean: f64,
    pub f_final_std: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
    /// Grid weight with the largest final mean; ties go to the smaller weight.
    pub argmax_w: f64,
    pub runs: usize,
}

impl SweepResult {
    pub fn row_at(&self, w: f64) -> Option<&SweepRow> {
        self.rows.iter().find(|r| (r.w_global - w).abs() < 1e-12)
    }
}

/// Final-day SIR reach of the SK-E top-`k` set for every global weight on the grid.
pub fn weight_sweep(g: &Graph, grid_step: f64, sir: &SirSettings) -> Result<SweepResult> {
    let grid = weight_grid(grid_step)?;
    let rows: Vec<SweepRow> = grid
        .par_iter()
        .map(|&w| {
            let fused = sk_e(g, w, FusionOptions::default())?;
            let params = sir.params(g, top_k(&fused.ranking, sir.k)?)?;
            let trace = sir_monte_carlo(g, &params)?;
            Ok(SweepRow {
                w_global: w,
                f_final_mean: trace.final_mean(),
                f_final_std: trace.final_std(),
            })
        })
        .collect::<Result<_>>()?;
    let mut best = 0;
    for (i, row) in rows.iter().enumerate() {
        if row.f_final_mean > rows[best].f_final_mean {
            best = i;
        }
    }
    Ok(SweepResult {
        argmax_w: rows[best].w_global,
        rows,
        runs: sir.runs,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SirComparison {
    pub methods: Vec<Method>,
    pub traces: Vec<SirTrace>,
}

pub fn compare_methods_sir(
    g: &Graph,
    methods: &[Method],
    sir: &SirSettings,
    opts: RankingOptions,
) -> Result<SirComparison> {
    let traces = methods
        .par_iter()
        .map(|&m| {
            let seeds = top_k(&method_ranking(g, m, opts)?, sir.k)?;
            sir_monte_carlo(g, &sir.params(g, seeds)?)
        })
        .collect::<Result<_>>()?;
    Ok(SirComparison {
        methods: methods.to_vec(),
        traces,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IcSettings {
    pub k: usize,
    pub p_min: f64,
    pub p_max: f64,
    pub p_step: f64,
    pub runs: usize,
    pub rng_seed: u64,
}

impl IcSettings {
    pub fn p_values(&self) -> Result<Vec<f64>> {
        let ok = (0.0..=1.0).contains(&self.p_min)
            && (0.0..=1.0).contains(&self.p_max)
            && self.p_min <= self.p_max
            && self.p_step > 0.0;
        if !ok {
            return Err(Error::InvalidParameter(format!(
                "activation range [{}, {}] step {} invalid",
                self.p_min, self.p_max, self.p_step
            )));
        }
        let steps = ((self.p_max - self.p_min) / self.p_step + 1e-9).floor() as usize;
        Ok((0..=steps)
            .map(|i| (self.p_min + i as f64 * self.p_step).min(self.p_max))
            .collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IcComparison {
    pub p_values: Vec<f64>,
    pub methods: Vec<Method>,
    /// `results[method][p]`.
    pub results: Vec<Vec<IcResult>>,
}

pub fn compare_methods_ic(
    g: &Graph,
    methods: &[Method],
    ic: &IcSettings,
    opts: RankingOptions,
) -> Result<IcComparison> {
    let p_values = ic.p_values()?;
    let results = methods
        .par_iter()
        .map(|&m| {
            let seeds = top_k(&method_ranking(g, m, opts)?, ic.k)?;
            p_values
                .iter()
                .map(|&p| {
                    ic_monte_carlo(
                        g,
                        &IcParams {
                            p,
                            seeds: seeds.clone(),
                            runs: ic.runs,
                            rng_seed: ic.rng_seed,
                        },
                    )
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(IcComparison {
        p_values,
        methods: methods.to_vec(),
        results,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstraintComparison {
    pub network: String,
    pub fractions: Vec<f64>,
    pub q_max: Vec<usize>,
    pub methods: Vec<Method>,
    /// `p_values[method][fraction]`.
    pub p_values: Vec<Vec<f64>>,
}

pub fn compare_constraint(
    g: &Graph,
    network: &str,
    methods: &[Method],
    fractions: &[f64],
    opts: RankingOptions,
) -> Result<ConstraintComparison> {
    let n = g.node_count();
    let q_max: Vec<usize> = fractions
        .iter()
        .map(|&f| q_max_for_fraction(n, f))
        .collect();
    let p_values = methods
        .par_iter()
        .map(|&m| {
            let ranking = method_ranking(g, m, opts)?;
            q_max
                .iter()
                .map(|&q| constraint_efficiency(g, &ranking, q).map(|r| r.p_value))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(ConstraintComparison {
        network: network.to_owned(),
        fractions: fractions.to_vec(),
        q_max,
        methods: methods.to_vec(),
        p_values,
    })
}

/// Files written by [`run_experiment`].
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentOutputs {
    pub files: Vec<PathBuf>,
    pub w_global: f64,
}

/// Loads the configured graph and writes every comparison table into
/// `config.output_dir`.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentOutputs> {
    config.validate()?;
    let file = std::fs::File::open(&config.graph)?;
    let (g, _) = load_edge_list(std::io::BufReader::new(file), LoadOptions::default())?;
    let network = config.network_name();
    run_experiment_on(&g, &network, config)
}

pub fn run_experiment_on(
    g: &Graph,
    network: &str,
    config: &ExperimentConfig,
) -> Result<ExperimentOutputs> {
    config.validate()?;
    let n = g.node_count();
    if config.k >= n || config.ic_k >= n {
        return Err(Error::Config(format!(
            "k = {} and ic_k = {} must be below the node count {n}",
            config.k, config.ic_k
        )));
    }
    let out_dir = Path::new(&config.output_dir);
    std::fs::create_dir_all(out_dir)?;
    let mut files = Vec::new();
    let mut write = |name: &str, body: Vec<u8>| -> Result<()> {
        let path = out_dir.join(name);
        std::fs::write(&path, body)?;
        files.push(path);
        Ok(())
    };

    let mut buf = Vec::new();
    report::write_stats_csv(&mut buf, network, &stats(g))?;
    write("stats.csv", std::mem::take(&mut buf))?;

    let sweep_sir = SirSettings {
        k: config.k,
        alpha: config.alpha,
        beta: config.beta,
        days: config.sweep_days,
        runs: config.runs,
        rng_seed: config.rng_seed,
    };
    let w_global = match config.w_global {
        WGlobal::Fixed(w) => w,
        WGlobal::Sweep => {
            let sweep = weight_sweep(g, config.sweep_step, &sweep_sir)?;
            report::write_sweep_csv(&mut buf, &sweep)?;
            write("sweep.csv", std::mem::take(&mut buf))?;
            sweep.argmax_w
        }
    };
    let opts = RankingOptions {
        w_global,
        ci_radius: config.ci_radius,
    };

    let sir = SirSettings {
        days: config.sir_days,
        ..sweep_sir
    };
    let sir_cmp = compare_methods_sir(g, &config.methods, &sir, opts)?;
    report::write_sir_comparison_csv(&mut buf, &sir_cmp)?;
    write("sir.csv", std::mem::take(&mut buf))?;

    let ic = IcSettings {
        k: config.ic_k,
        p_min: config.ic_p_min,
        p_max: config.ic_p_max,
        p_step: config.ic_p_step,
        runs: config.ic_runs,
        rng_seed: config.rng_seed,
    };
    let ic_cmp = compare_methods_ic(g, &config.methods, &ic, opts)?;
    report::write_ic_comparison_csv(&mut buf, &ic_cmp)?;
    write("ic.csv", std::mem::take(&mut buf))?;

    let cons = compare_constraint(g, network, &config.methods, &config.q_fracs, opts)?;
    report::write_constraint_comparison_csv(&mut buf, &[cons])?;
    write("constraint.csv", buf)?;

    Ok(ExperimentOutputs { files, w_global })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
            let json = serde_json::to_string(&m).unwrap();
            assert_eq!(json, format!("\"{}\"", m.name()));
        }
        assert!("pagerank".parse::<Method>().is_err());
    }

    #[test]
    fn grid_arithmetic() {
        let g = weight_grid(0.05).unwrap();
        assert_eq!(g.len(), 21);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[20], 1.0);
        assert_eq!(g[3], 0.15);
        assert_eq!(weight_grid(0.5).unwrap(), vec![0.0, 0.5, 1.0]);
        assert!(weight_grid(0.3).is_err());
        assert!(weight_grid(0.0).is_err());
        assert!(weight_grid(0.75).is_err());
    }

    #[test]
    fn p_grid() {
        let ic = IcSettings {
            k: 1,
            p_min: 0.02,
            p_max: 0.03,
            p_step: 0.002,
            runs: 1,
            rng_seed: 0,
        };
        let ps = ic.p_values().unwrap();
        assert_eq!(ps.len(), 6);
        assert!((ps[5] - 0.03).abs() < 1e-12);
        let bad = IcSettings {
            p_min: 0.5,
            p_max: 0.1,
            ..ic
        };
        assert!(bad.p_values().is_err());
    }

    #[test]
    fn top_k_bounds() {
        assert_eq!(top_k(&[2, 0, 1], 2).unwrap(), vec![2, 0]);
        assert!(top_k(&[2, 0, 1], 0).is_err());
        assert!(top_k(&[2, 0, 1], 4).is_err());
    }
}
