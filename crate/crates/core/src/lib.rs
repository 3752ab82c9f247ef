//! Influential-node identification for undirected, unweighted networks.
//!
//! A local metric (SD, an exponential of relative degree) and a global one
//! (Ks_Entropy, an entropy of k-shell ratios) are fused per node by a
//! concordance/discordance procedure into a single net-dominance ranking.
//! Rankings are evaluated with SIR and independent-cascade Monte Carlo
//! spreading and with the grounded-Laplacian constraint efficiency.

pub mod centrality;
pub mod control;
pub mod diffusion;
pub mod error;
pub mod experiment;
pub mod fusion;
pub mod graph;
pub mod matrix;
pub mod rng;

pub use error::{Error, Result};
pub use graph::Graph;
