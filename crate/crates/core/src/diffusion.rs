//! Monte Carlo spreading processes used to score seed sets.
//!
//! SIR runs in synchronous discrete steps. Each step, every node infected
//! at the start of the step tries each susceptible neighbor once with
//! probability `alpha`; afterwards every one of those nodes recovers with
//! probability `beta`. Nodes infected during a step only become active the
//! next step. Independent cascade gives each newly activated node one
//! attempt per inactive neighbor with probability `p`.
//!
//! Run `r` draws from its own stream (see [`crate::rng`]) and aggregation is
//! in run order, so results are independent of the thread count.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{stats, Graph};
use crate::rng::run_rng;

pub const DEFAULT_BETA: f64 = 0.2;
pub const DEFAULT_RUNS: usize = 500;

/// Epidemic-threshold infection rate `<k> / <k^2>`, capped at 1.
pub fn default_alpha(g: &Graph) -> Result<f64> {
    let s = stats(g);
    if s.mean_square_degree <= 0.0 {
        return Err(Error::DegenerateGraph(
            "graph has no edges, <k^2> = 0".into(),
        ));
    }
    Ok((s.mean_degree / s.mean_square_degree).min(1.0))
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{name} = {p} outside [0, 1]"
        )))
    }
}

/// Deduplicates seeds (keeping first occurrence) and checks their range.
fn seed_set(g: &Graph, seeds: &[usize]) -> Result<Vec<usize>> {
    if seeds.is_empty() {
        return Err(Error::InvalidParameter("seed set is empty".into()));
    }
    let n = g.node_count();
    let mut seen = vec![false; n];
    let mut out = Vec::with_capacity(seeds.len());
    for &s in seeds {
        if s >= n {
            return Err(Error::NodeOutOfRange { index: s, n });
        }
        if !seen[s] {
            seen[s] = true;
            out.push(s);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SirParams {
    pub alpha: f64,
    pub beta: f64,
    pub days: usize,
    pub runs: usize,
    pub seeds: Vec<usize>,
    pub rng_seed: u64,
}

impl SirParams {
    fn validate(&self, g: &Graph) -> Result<Vec<usize>> {
        check_probability("alpha", self.alpha)?;
        check_probability("beta", self.beta)?;
        if self.runs == 0 {
            return Err(Error::InvalidParameter("runs must be >= 1".into()));
        }
        seed_set(g, &self.seeds)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Compartments {
    pub susceptible: usize,
    pub infected: usize,
    pub recovered: usize,
}

impl Compartments {
    /// `F(t) = I(t) + R(t)`.
    pub fn affected(&self) -> usize {
        self.infected + self.recovered
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Susceptible,
    Infected,
    Recovered,
}

/// One SIR realization: compartment sizes for `t = 0..=days`.
///
/// Once no node is infected the remaining steps repeat the final state.
pub fn sir_run(g: &Graph, params: &SirParams, run_index: u64) -> Result<Vec<Compartments>> {
    let seeds = params.validate(g)?;
    Ok(sir_realization(g, params, &seeds, run_index))
}

fn sir_realization(
    g: &Graph,
    params: &SirParams,
    seeds: &[usize],
    run_index: u64,
) -> Vec<Compartments> {
    let n = g.node_count();
    let mut rng = run_rng(params.rng_seed, run_index);
    let mut state = vec![State::Susceptible; n];
    let mut infected: Vec<usize> = seeds.to_vec();
    for &s in seeds {
        state[s] = State::Infected;
    }
    let mut recovered = 0usize;
    let mut trace = Vec::with_capacity(params.days + 1);
    trace.push(Compartments {
        susceptible: n - infected.len(),
        infected: infected.len(),
        recovered,
    });

    let mut newly = Vec::new();
    let mut still = Vec::new();
    for _ in 0..params.days {
        if infected.is_empty() {
            let last = *trace.last().expect("trace starts non-empty");
            trace.push(last);
            continue;
        }
        newly.clear();
        for &u in &infected {
            for &v in g.neighbors(u) {
                if state[v] == State::Susceptible && rng.random_bool(params.alpha) {
                    state[v] = State::Infected;
                    newly.push(v);
                }
            }
        }
        still.clear();
        for &u in &infected {
            if rng.random_bool(params.beta) {
                state[u] = State::Recovered;
                recovered += 1;
            } else {
                still.push(u);
            }
        }
        std::mem::swap(&mut infected, &mut still);
        infected.extend_from_slice(&newly);
        trace.push(Compartments {
            susceptible: n - infected.len() - recovered,
            infected: infected.len(),
            recovered,
        });
    }
    trace
}

/// Mean and spread of `F(t)` over Monte Carlo runs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SirTrace {
    pub f_mean: Vec<f64>,
    /// Sample standard deviation across runs (0 for a single run).
    pub f_std: Vec<f64>,
    pub runs: usize,
}

impl SirTrace {
    pub fn final_mean(&self) -> f64 {
        *self.f_mean.last().expect("trace has t = 0")
    }

    pub fn final_std(&self) -> f64 {
        *self.f_std.last().expect("trace has t = 0")
    }
}

pub fn sir_monte_carlo(g: &Graph, params: &SirParams) -> Result<SirTrace> {
    let seeds = params.validate(g)?;
    let runs: Vec<Vec<usize>> = (0..params.runs as u64)
        .into_par_iter()
        .map(|r| {
            sir_realization(g, params, &seeds, r)
                .iter()
                .map(Compartments::affected)
                .collect()
        })
        .collect();
    let mut f_mean = Vec::with_capacity(params.days + 1);
    let mut f_std = Vec::with_capacity(params.days + 1);
    for t in 0..=params.days {
        let (mean, std) = mean_std(runs.iter().map(|run| run[t] as f64));
        f_mean.push(mean);
        f_std.push(std);
    }
    Ok(SirTrace {
        f_mean,
        f_std,
        runs: params.runs,
    })
}

/// Sequential mean and sample standard deviation.
fn mean_std(values: impl Iterator<Item = f64> + Clone) -> (f64, f64) {
    let (count, sum) = values
        .clone()
        .fold((0usize, 0.0), |(c, s), v| (c + 1, s + v));
    let mean = sum / count as f64;
    if count < 2 {
        return (mean, 0.0);
    }
    let ss: f64 = values.map(|v| (v - mean) * (v - mean)).sum();
    (mean, (ss / (count - 1) as f64).sqrt())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IcParams {
    pub p: f64,
    pub seeds: Vec<usize>,
    pub runs: usize,
    pub rng_seed: u64,
}

impl IcParams {
    fn validate(&self, g: &Graph) -> Result<Vec<usize>> {
        check_probability("p", self.p)?;
        if self.runs == 0 {
            return Err(Error::InvalidParameter("runs must be >= 1".into()));
        }
        seed_set(g, &self.seeds)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IcResult {
    pub active_mean: f64,
    pub active_std: f64,
    pub runs: usize,
}

/// Final number of active nodes in one cascade.
pub fn ic_run(g: &Graph, params: &IcParams, run_index: u64) -> Result<usize> {
    let seeds = params.validate(g)?;
    Ok(ic_realization(g, params, &seeds, run_index))
}

fn ic_realization(g: &Graph, params: &IcParams, seeds: &[usize], run_index: u64) -> usize {
    let mut rng = run_rng(params.rng_seed, run_index);
    let mut active = vec![false; g.node_count()];
    let mut frontier: Vec<usize> = seeds.to_vec();
    for &s in seeds {
        active[s] = true;
    }
    let mut count = frontier.len();
    let mut next = Vec::new();
    while !frontier.is_empty() {
        next.clear();
        for &u in &frontier {
            for &v in g.neighbors(u) {
                if !active[v] && rng.random_bool(params.p) {
                    active[v] = true;
                    next.push(v);
                }
            }
        }
        count += next.len();
        std::mem::swap(&mut frontier, &mut next);
    }
    count
}

pub fn ic_monte_carlo(g: &Graph, params: &IcParams) -> Result<IcResult> {
    let seeds = params.validate(g)?;
    let counts: Vec<usize> = (0..params.runs as u64)
        .into_par_iter()
        .map(|r| ic_realization(g, params, &seeds, r))
        .collect();
    let (active_mean, active_std) = mean_std(counts.iter().map(|&c| c as f64));
    Ok(IcResult {
        active_mean,
        active_std,
        runs: params.runs,
    })
}
