//! Constraint efficiency of a node ranking.
//!
//! Grounding (controlling) a node set removes its rows and columns from the
//! graph Laplacian. The smallest nonzero eigenvalue `mu_1` of what remains
//! sets how fast the rest of the network decays to the controlled state.
//! For a ranking and a budget `q_max`, the top `Q` nodes are grounded for
//! every `Q = 1..=q_max` and the efficiency is `P = mean(1 / mu_1)`;
//! smaller is better.

mod eigen;

pub use eigen::{asymmetry, symmetric_eigenvalues};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::DenseMatrix;

pub const DEFAULT_ZERO_TOL: f64 = 1e-9;
const SYMMETRY_TOL: f64 = 1e-12;

/// `L = D - A` as a dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct LaplacianMatrix(DenseMatrix);

impl LaplacianMatrix {
    pub fn matrix(&self) -> &DenseMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    /// Principal submatrix with the listed rows/columns removed.
    pub fn grounded(&self, removed: &[usize]) -> DenseMatrix {
        let n = self.dim();
        let mut keep = vec![true; n];
        for &r in removed {
            keep[r] = false;
        }
        let idx: Vec<usize> = (0..n).filter(|&i| keep[i]).collect();
        let mut out = DenseMatrix::zeros(idx.len(), idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                out.set(a, b, self.0.get(i, j));
            }
        }
        out
    }
}

pub fn laplacian(g: &Graph) -> LaplacianMatrix {
    let n = g.node_count();
    let mut m = DenseMatrix::zeros(n, n);
    for i in 0..n {
        m.set(i, i, g.degree(i) as f64);
        for &j in g.neighbors(i) {
            m.set(i, j, -1.0);
        }
    }
    LaplacianMatrix(m)
}

/// Smallest eigenvalue above `zero_tol * max|m_ij|`.
pub fn smallest_nonzero_eigenvalue(m: &DenseMatrix, zero_tol: f64) -> Result<f64> {
    if m.rows() == 0 || m.rows() != m.cols() {
        return Err(Error::DimensionMismatch(format!(
            "need a non-empty square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let skew = asymmetry(m);
    if skew > SYMMETRY_TOL {
        return Err(Error::NotSymmetric(skew));
    }
    let threshold = zero_tol * m.max_abs();
    symmetric_eigenvalues(m)?
        .into_iter()
        .find(|&ev| ev > threshold && ev > 0.0)
        .ok_or(Error::NoNonzeroEigenvalue(threshold))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroundedEigenvalue {
    pub q: usize,
    pub mu1: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ControlReport {
    pub q_max: usize,
    pub per_q: Vec<GroundedEigenvalue>,
    pub p_value: f64,
}

/// `ceil(frac * n)`, the control budget for a fraction of the nodes.
pub fn q_max_for_fraction(n: usize, frac: f64) -> usize {
    (frac * n as f64 - 1e-9).ceil().max(0.0) as usize
}

pub fn constraint_efficiency(g: &Graph, ranking: &[usize], q_max: usize) -> Result<ControlReport> {
    let n = g.node_count();
    if q_max == 0 || q_max >= n {
        return Err(Error::InvalidParameter(format!(
            "q_max = {q_max} must satisfy 1 <= q_max < n = {n}"
        )));
    }
    if ranking.len() < q_max {
        return Err(Error::InvalidParameter(format!(
            "ranking has {} nodes, q_max = {q_max}",
            ranking.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in &ranking[..q_max] {
        if v >= n {
            return Err(Error::NodeOutOfRange { index: v, n });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidParameter(format!(
                "node {v} repeated in ranking"
            )));
        }
    }

    let lap = laplacian(g);
    let per_q: Vec<GroundedEigenvalue> = (1..=q_max)
        .into_par_iter()
        .map(|q| {
            let sub = lap.grounded(&ranking[..q]);
            smallest_nonzero_eigenvalue(&sub, DEFAULT_ZERO_TOL)
                .map(|mu1| GroundedEigenvalue { q, mu1 })
        })
        .collect::<Result<_>>()?;
    let p_value = per_q.iter().map(|e| 1.0 / e.mu1).sum::<f64>() / q_max as f64;
    Ok(ControlReport {
        q_max,
        per_q,
        p_value,
    })
}
