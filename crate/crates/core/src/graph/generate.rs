use rand::Rng;

use super::Graph;
use crate::error::{Error, Result};
use crate::rng::seeded_rng;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphModel {
    /// Preferential attachment: each new node links to `m_attach` distinct
    /// existing nodes chosen with probability proportional to degree.
    BarabasiAlbert { n: usize, m_attach: usize },
    /// Every pair linked independently with probability `p`.
    ErdosRenyi { n: usize, p: f64 },
}

/// Generates a random graph; the output is a pure function of `(model, seed)`.
///
/// The preferential-attachment model grows from a clique of
/// `max(3, m_attach + 1)` nodes, so it has
/// `s(s-1)/2 + (n - s) * m_attach` edges for seed size `s`.
pub fn generate(model: GraphModel, seed: u64) -> Result<Graph> {
    let mut rng = seeded_rng(seed);
    match model {
        GraphModel::ErdosRenyi { n, p } => {
            if n == 0 {
                return Err(Error::InvalidParameter(
                    "erdos_renyi: n must be >= 1".into(),
                ));
            }
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParameter(format!(
                    "erdos_renyi: p = {p} outside [0, 1]"
                )));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges)
        }
        GraphModel::BarabasiAlbert { n, m_attach } => {
            let clique = 3.max(m_attach + 1);
            if m_attach == 0 || m_attach >= n || n < clique {
                return Err(Error::InvalidParameter(format!(
                    "barabasi_albert: need 1 <= m_attach < n and n >= {clique} (n = {n}, m_attach = {m_attach})"
                )));
            }
            let mut edges = Vec::new();
            // One entry per edge endpoint; uniform draws from it are degree-proportional.
            let mut endpoints: Vec<usize> = Vec::new();
            for u in 0..clique {
                for v in (u + 1)..clique {
                    edges.push((u, v));
                    endpoints.extend([u, v]);
                }
            }
            let mut targets: Vec<usize> = Vec::with_capacity(m_attach);
            for new in clique..n {
                targets.clear();
                while targets.len() < m_attach {
                    let t = endpoints[rng.random_range(0..endpoints.len())];
                    if !targets.contains(&t) {
                        targets.push(t);
                    }
                }
                for &t in &targets {
                    edges.push((new, t));
                    endpoints.extend([new, t]);
                }
            }
            Graph::from_edges(n, edges)
        }
    }
}
