//! Node scores: the two fusion inputs (SD, Ks_Entropy) and the classical
//! baselines they are compared against.
//!
//! Every function returns a [`MetricVector`] aligned with the graph's node
//! indices.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::Graph;

pub const DEFAULT_CI_RADIUS: usize = 2;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricVector {
    pub name: String,
    pub values: Vec<f64>,
}

impl MetricVector {
    pub fn new(name: impl Into<String>, values: Vec<f64>) -> Self {
        MetricVector {
            name: name.into(),
            values,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Local metric `exp(d_i / max(d))`; all ones on an edgeless graph.
pub fn sd_local(g: &Graph) -> MetricVector {
    let max = g.max_degree();
    let values = (0..g.node_count())
        .map(|i| {
            if max == 0 {
                1.0
            } else {
                (g.degree(i) as f64 / max as f64).exp()
            }
        })
        .collect();
    MetricVector::new("sd", values)
}

/// Shell index of every node (k-core decomposition).
///
/// Bucket-queue peeling: nodes are removed in order of current residual
/// degree and a node's shell is its residual degree when removed.
pub fn k_shell_indices(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let mut degree = g.degrees();
    let max_deg = g.max_degree();

    // Nodes sorted by degree with bucket start offsets.
    let mut bin = vec![0usize; max_deg + 1];
    for &d in &degree {
        bin[d] += 1;
    }
    let mut start = 0;
    for b in bin.iter_mut() {
        let count = *b;
        *b = start;
        start += count;
    }
    let mut pos = vec![0usize; n];
    let mut order = vec![0usize; n];
    for v in 0..n {
        pos[v] = bin[degree[v]];
        order[pos[v]] = v;
        bin[degree[v]] += 1;
    }
    for d in (1..=max_deg).rev() {
        bin[d] = bin[d - 1];
    }
    bin[0] = 0;

    for i in 0..n {
        let v = order[i];
        for &u in g.neighbors(v) {
            if degree[u] > degree[v] {
                let du = degree[u];
                let pu = pos[u];
                let pw = bin[du];
                let w = order[pw];
                if u != w {
                    order[pu] = w;
                    order[pw] = u;
                    pos[u] = pw;
                    pos[w] = pu;
                }
                bin[du] += 1;
                degree[u] -= 1;
            }
        }
    }
    degree
}

pub fn k_shell(g: &Graph) -> MetricVector {
    MetricVector::new(
        "kshell",
        k_shell_indices(g).into_iter().map(|k| k as f64).collect(),
    )
}

/// Global metric `-(k_s(i)/k1_i) ln(k_s(i)/k1_i)` with `k1_i` the sum of
/// the neighbors' shell indices.
///
/// Zero when the ratio is 1, when `k_s(i) = 0`, or when `k1_i = 0`. Values
/// lie in `[0, 1/e]`.
pub fn ks_entropy(g: &Graph) -> MetricVector {
    let shells = k_shell_indices(g);
    let values = (0..g.node_count())
        .map(|i| {
            let ks = shells[i];
            let k1: usize = g.neighbors(i).iter().map(|&j| shells[j]).sum();
            if ks == 0 || k1 == 0 || ks == k1 {
                return 0.0;
            }
            let x = ks as f64 / k1 as f64;
            -x * x.ln()
        })
        .collect();
    MetricVector::new("ks_entropy", values)
}

pub fn degree_centrality(g: &Graph) -> MetricVector {
    MetricVector::new("dc", g.degrees().into_iter().map(|d| d as f64).collect())
}

/// Wasserman–Faust closeness, scaled by the reachable fraction so that
/// nodes in small components are not over-rated.
pub fn closeness_centrality(g: &Graph) -> MetricVector {
    let n = g.node_count();
    let values = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut reach = 0usize;
            let mut total = 0usize;
            for d in g.bfs_distances(i).into_iter().flatten() {
                reach += 1;
                total += d;
            }
            if reach <= 1 || n <= 1 {
                return 0.0;
            }
            let others = (reach - 1) as f64;
            (others / (n - 1) as f64) * (others / total as f64)
        })
        .collect();
    MetricVector::new("cc", values)
}

const BETWEENNESS_CHUNK: usize = 32;

/// Exact shortest-path betweenness over unordered pairs (unnormalized).
///
/// Brandes accumulation per source. Sources are processed in fixed-size
/// chunks whose partial sums are added in chunk order, so the floating-point
/// result does not depend on the thread count.
pub fn betweenness_centrality(g: &Graph) -> MetricVector {
    let n = g.node_count();
    let sources: Vec<usize> = (0..n).collect();
    let partials: Vec<Vec<f64>> = sources
        .par_chunks(BETWEENNESS_CHUNK)
        .map(|chunk| {
            let mut acc = vec![0.0; n];
            let mut state = BrandesState::new(n);
            for &s in chunk {
                state.accumulate(g, s, &mut acc);
            }
            acc
        })
        .collect();
    let mut values = vec![0.0; n];
    for part in partials {
        for (v, p) in values.iter_mut().zip(part) {
            *v += p;
        }
    }
    // Each unordered pair is reached once from each endpoint.
    for v in &mut values {
        *v /= 2.0;
    }
    MetricVector::new("bc", values)
}

struct BrandesState {
    sigma: Vec<f64>,
    dist: Vec<i64>,
    delta: Vec<f64>,
    preds: Vec<Vec<usize>>,
    stack: Vec<usize>,
    queue: VecDeque<usize>,
}

impl BrandesState {
    fn new(n: usize) -> Self {
        BrandesState {
            sigma: vec![0.0; n],
            dist: vec![-1; n],
            delta: vec![0.0; n],
            preds: vec![Vec::new(); n],
            stack: Vec::with_capacity(n),
            queue: VecDeque::with_capacity(n),
        }
    }

    fn accumulate(&mut self, g: &Graph, s: usize, acc: &mut [f64]) {
        self.sigma.fill(0.0);
        self.dist.fill(-1);
        self.delta.fill(0.0);
        for p in &mut self.preds {
            p.clear();
        }
        self.stack.clear();

        self.sigma[s] = 1.0;
        self.dist[s] = 0;
        self.queue.push_back(s);
        while let Some(v) = self.queue.pop_front() {
            self.stack.push(v);
            for &w in g.neighbors(v) {
                if self.dist[w] < 0 {
                    self.dist[w] = self.dist[v] + 1;
                    self.queue.push_back(w);
                }
                if self.dist[w] == self.dist[v] + 1 {
                    self.sigma[w] += self.sigma[v];
                    self.preds[w].push(v);
                }
            }
        }
        while let Some(w) = self.stack.pop() {
            let coeff = (1.0 + self.delta[w]) / self.sigma[w];
            for &v in &self.preds[w] {
                self.delta[v] += self.sigma[v] * coeff;
            }
            if w != s {
                acc[w] += self.delta[w];
            }
        }
    }
}

/// Collective influence `(d_i - 1) * sum_{j : dist(i,j) = radius} (d_j - 1)`.
pub fn collective_influence(g: &Graph, radius: usize) -> MetricVector {
    let n = g.node_count();
    let values = (0..n)
        .into_par_iter()
        .map(|i| {
            let boundary: f64 = ball_boundary(g, i, radius)
                .into_iter()
                .map(|j| g.degree(j) as f64 - 1.0)
                .sum();
            (g.degree(i) as f64 - 1.0) * boundary
        })
        .collect();
    MetricVector::new("ci", values)
}

/// Nodes at hop distance exactly `radius` from `source`.
fn ball_boundary(g: &Graph, source: usize, radius: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.node_count()];
    let mut frontier = vec![source];
    dist[source] = 0;
    for depth in 1..=radius {
        let mut next = Vec::new();
        for &u in &frontier {
            for &v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = depth;
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    frontier.sort_unstable();
    frontier
}
