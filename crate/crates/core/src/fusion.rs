//! Concordance/discordance fusion of per-node criteria.
//!
//! The pipeline is: min-max normalize each criterion column, scale it by
//! its weight, compare every ordered node pair to obtain harmony `c_ij`
//! (weight share of criteria where `i` is not worse than `j`) and
//! disharmony `d_ij` (largest deficit of `i` relative to the largest gap),
//! take `u_ij = c_ij - d_ij`, and score each node by its net dominance
//! `sum_k (u_ik - u_ki)`. Nodes are ranked by descending score with ties
//! going to the lower index.
//!
//! All criteria are benefit-type: larger is better.

use std::collections::HashSet;
use std::io::Read;

use rayon::prelude::*;
use serde::Serialize;

use crate::centrality::{ks_entropy, sd_local, MetricVector};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::DenseMatrix;

const WEIGHT_SUM_TOLERANCE: f64 = 1e-12;

/// Node-by-criterion matrix `X`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecisionMatrix {
    labels: Vec<String>,
    criteria: Vec<String>,
    values: DenseMatrix,
}

impl DecisionMatrix {
    pub fn new(labels: Vec<String>, criteria: Vec<String>, values: DenseMatrix) -> Result<Self> {
        if values.rows() != labels.len() || values.cols() != criteria.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} values for {} labels and {} criteria",
                values.rows(),
                values.cols(),
                labels.len(),
                criteria.len()
            )));
        }
        if values.rows() == 0 {
            return Err(Error::InvalidParameter(
                "decision matrix has no rows".into(),
            ));
        }
        if values.cols() < 2 {
            return Err(Error::InvalidParameter(format!(
                "decision matrix needs at least 2 criteria, got {}",
                values.cols()
            )));
        }
        if let Some(bad) = values.as_slice().iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "decision matrix entry {bad} is not finite"
            )));
        }
        Ok(DecisionMatrix {
            labels,
            criteria,
            values,
        })
    }

    /// `X` with node labels `"1".."n"` and criteria `"c1".."ck"`.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        if rows.iter().any(|r| r.as_ref().len() != cols) {
            return Err(Error::DimensionMismatch(
                "ragged decision matrix rows".into(),
            ));
        }
        let values = DenseMatrix::from_rows(rows);
        let labels = (1..=rows.len()).map(|i| i.to_string()).collect();
        let criteria = (1..=cols).map(|l| format!("c{l}")).collect();
        Self::new(labels, criteria, values)
    }

    pub fn node_count(&self) -> usize {
        self.values.rows()
    }

    pub fn criterion_count(&self) -> usize {
        self.values.cols()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn criteria(&self) -> &[String] {
        &self.criteria
    }

    pub fn values(&self) -> &DenseMatrix {
        &self.values
    }

    fn with_values(&self, values: DenseMatrix) -> Self {
        DecisionMatrix {
            labels: self.labels.clone(),
            criteria: self.criteria.clone(),
            values,
        }
    }
}

/// Criterion weights: nonnegative and summing to one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Weights(Vec<f64>);

impl Weights {
    pub fn new(w: Vec<f64>) -> Result<Self> {
        if w.iter().any(|x| !x.is_finite() || *x < 0.0) {
            return Err(Error::InvalidParameter(format!(
                "weights must be finite and nonnegative: {w:?}"
            )));
        }
        let sum: f64 = w.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(Error::InvalidParameter(format!(
                "weights must sum to 1, got {sum}"
            )));
        }
        Ok(Weights(w))
    }

    /// `(1 - w_global, w_global)` for a local/global criterion pair.
    pub fn local_global(w_global: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&w_global) {
            return Err(Error::InvalidParameter(format!(
                "w_global = {w_global} outside [0, 1]"
            )));
        }
        Self::new(vec![1.0 - w_global, w_global])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Stacks metric vectors as the columns of `X`.
pub fn build_decision_matrix(
    metrics: &[MetricVector],
    labels: &[String],
) -> Result<DecisionMatrix> {
    if metrics.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least 2 metrics, got {}",
            metrics.len()
        )));
    }
    let n = labels.len();
    if let Some(m) = metrics.iter().find(|m| m.len() != n) {
        return Err(Error::DimensionMismatch(format!(
            "metric {} has {} values, expected {n}",
            m.name,
            m.len()
        )));
    }
    let k = metrics.len();
    let mut values = DenseMatrix::zeros(n, k);
    for (l, m) in metrics.iter().enumerate() {
        for (i, &v) in m.values.iter().enumerate() {
            values.set(i, l, v);
        }
    }
    DecisionMatrix::new(
        labels.to_vec(),
        metrics.iter().map(|m| m.name.clone()).collect(),
        values,
    )
}

/// Min-max normalizes each column to `[0, 1]`; constant columns become 0.
pub fn normalize(x: &DecisionMatrix) -> DecisionMatrix {
    let src = x.values();
    let mut out = DenseMatrix::zeros(src.rows(), src.cols());
    for l in 0..src.cols() {
        let (min, max) = src
            .column(l)
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                (lo.min(v), hi.max(v))
            });
        let span = max - min;
        if span > 0.0 {
            for i in 0..src.rows() {
                out.set(i, l, (src.get(i, l) - min) / span);
            }
        }
    }
    x.with_values(out)
}

/// Scales column `l` by `w_l`, giving `R`.
pub fn apply_weights(x: &DecisionMatrix, w: &Weights) -> Result<DecisionMatrix> {
    if w.len() != x.criterion_count() {
        return Err(Error::DimensionMismatch(format!(
            "{} weights for {} criteria",
            w.len(),
            x.criterion_count()
        )));
    }
    let src = x.values();
    let mut out = src.clone();
    for i in 0..src.rows() {
        for (v, wl) in out.row_mut(i).iter_mut().zip(w.as_slice()) {
            *v *= wl;
        }
    }
    Ok(x.with_values(out))
}

fn harmony(ri: &[f64], rj: &[f64], w: &[f64], w_total: f64) -> f64 {
    let support: f64 = ri
        .iter()
        .zip(rj)
        .zip(w)
        .filter(|((a, b), _)| a >= b)
        .map(|(_, wl)| wl)
        .sum();
    support / w_total
}

fn disharmony(ri: &[f64], rj: &[f64]) -> f64 {
    let mut worst_deficit = 0.0f64;
    let mut any_deficit = false;
    let mut largest_gap = 0.0f64;
    for (a, b) in ri.iter().zip(rj) {
        let gap = (a - b).abs();
        largest_gap = largest_gap.max(gap);
        if a < b {
            any_deficit = true;
            worst_deficit = worst_deficit.max(gap);
        }
    }
    if !any_deficit || largest_gap == 0.0 {
        0.0
    } else {
        worst_deficit / largest_gap
    }
}

fn pairwise(r: &DenseMatrix, f: impl Fn(&[f64], &[f64]) -> f64 + Sync) -> DenseMatrix {
    let n = r.rows();
    let rows: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| if i == j { 0.0 } else { f(r.row(i), r.row(j)) })
                .collect()
        })
        .collect();
    DenseMatrix::from_rows(&rows)
}

/// Harmony matrix `C`; the diagonal is 0.
pub fn harmony_matrix(r: &DenseMatrix, w: &Weights) -> Result<DenseMatrix> {
    if w.len() != r.cols() {
        return Err(Error::DimensionMismatch(format!(
            "{} weights for {} criteria",
            w.len(),
            r.cols()
        )));
    }
    let total: f64 = w.as_slice().iter().sum();
    Ok(pairwise(r, |a, b| harmony(a, b, w.as_slice(), total)))
}

/// Disharmony matrix `D`; the diagonal is 0.
pub fn disharmony_matrix(r: &DenseMatrix) -> DenseMatrix {
    pairwise(r, disharmony)
}

/// Dominance matrix `U = C - D` with a zero diagonal.
pub fn dominance_matrix(c: &DenseMatrix, d: &DenseMatrix) -> Result<DenseMatrix> {
    if c.rows() != d.rows() || c.cols() != d.cols() || c.rows() != c.cols() {
        return Err(Error::DimensionMismatch(format!(
            "C is {}x{}, D is {}x{}",
            c.rows(),
            c.cols(),
            d.rows(),
            d.cols()
        )));
    }
    let n = c.rows();
    let mut u = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                u.set(i, j, c.get(i, j) - d.get(i, j));
            }
        }
    }
    Ok(u)
}

/// Net dominance `zeta_i = sum_{k != i} (u_ik - u_ki)`.
pub fn net_dominance(u: &DenseMatrix) -> Vec<f64> {
    let n = u.rows();
    (0..n)
        .map(|i| {
            (0..n)
                .filter(|&k| k != i)
                .map(|k| u.get(i, k) - u.get(k, i))
                .sum()
        })
        .collect()
}

/// Indices sorted by descending score; equal scores keep ascending index.
pub fn rank(scores: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));
    order
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FusionOptions {
    /// Materialize the n×n harmony, disharmony and dominance matrices.
    /// Without them net dominance is accumulated row by row in `O(n k)` memory.
    pub keep_matrices: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairwiseMatrices {
    pub harmony: DenseMatrix,
    pub disharmony: DenseMatrix,
    pub dominance: DenseMatrix,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FusionResult {
    pub labels: Vec<String>,
    pub criteria: Vec<String>,
    pub weights: Weights,
    pub normalized: DenseMatrix,
    pub weighted: DenseMatrix,
    #[serde(skip_serializing_if = "Option::is_none", flatten)]
    pub matrices: Option<PairwiseMatrices>,
    pub net_dominance: Vec<f64>,
    pub ranking: Vec<usize>,
}

impl FusionResult {
    /// 1-based rank position of every node.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.ranking.len()];
        for (p, &node) in self.ranking.iter().enumerate() {
            pos[node] = p + 1;
        }
        pos
    }
}

/// Runs the full fusion pipeline on a decision matrix.
pub fn fuse(x: &DecisionMatrix, w: &Weights, options: FusionOptions) -> Result<FusionResult> {
    let normalized = normalize(x);
    let weighted = apply_weights(&normalized, w)?;
    let r = weighted.values();

    let (matrices, zeta) = if options.keep_matrices {
        let c = harmony_matrix(r, w)?;
        let d = disharmony_matrix(r);
        let u = dominance_matrix(&c, &d)?;
        let zeta = net_dominance(&u);
        (
            Some(PairwiseMatrices {
                harmony: c,
                disharmony: d,
                dominance: u,
            }),
            zeta,
        )
    } else {
        let n = r.rows();
        let wl = w.as_slice();
        let total: f64 = wl.iter().sum();
        let dominance = |i: usize, j: usize| {
            harmony(r.row(i), r.row(j), wl, total) - disharmony(r.row(i), r.row(j))
        };
        let zeta = (0..n)
            .into_par_iter()
            .map(|i| {
                (0..n)
                    .filter(|&k| k != i)
                    .map(|k| dominance(i, k) - dominance(k, i))
                    .sum()
            })
            .collect();
        (None, zeta)
    };

    let ranking = rank(&zeta);
    Ok(FusionResult {
        labels: x.labels().to_vec(),
        criteria: x.criteria().to_vec(),
        weights: w.clone(),
        normalized: normalized.values().clone(),
        weighted: r.clone(),
        matrices,
        net_dominance: zeta,
        ranking,
    })
}

/// SD and Ks_Entropy of `g` as a two-column decision matrix.
pub fn sk_e_decision_matrix(g: &Graph) -> Result<DecisionMatrix> {
    build_decision_matrix(&[sd_local(g), ks_entropy(g)], g.labels())
}

/// Fuses SD (weight `1 - w_global`) with Ks_Entropy (weight `w_global`).
pub fn sk_e(g: &Graph, w_global: f64, options: FusionOptions) -> Result<FusionResult> {
    let weights = Weights::local_global(w_global)?;
    fuse(&sk_e_decision_matrix(g)?, &weights, options)
}

/// Reads a decision matrix from CSV.
///
/// The header names the label column followed by one column per criterion;
/// each record is a node label followed by its criterion values. Lines
/// starting with `#` are ignored.
pub fn parse_decision_matrix<R: Read>(source: R) -> Result<DecisionMatrix> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .flexible(true)
        .from_reader(source);
    let header = reader.headers()?.clone();
    if header.len() < 3 {
        return Err(Error::MalformedLine {
            line: 1,
            reason: "header needs a label column and at least 2 criteria".into(),
        });
    }
    let criteria: Vec<String> = header.iter().skip(1).map(str::to_owned).collect();
    let k = criteria.len();

    let mut labels = Vec::new();
    let mut seen = HashSet::new();
    let mut data = Vec::new();
    for record in reader.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.len() != k + 1 {
            return Err(Error::MalformedLine {
                line,
                reason: format!("expected {} fields, found {}", k + 1, record.len()),
            });
        }
        let label = record[0].to_owned();
        if !seen.insert(label.clone()) {
            return Err(Error::MalformedLine {
                line,
                reason: format!("duplicate node label {label:?}"),
            });
        }
        for field in record.iter().skip(1) {
            let v: f64 = field.parse().map_err(|_| Error::MalformedLine {
                line,
                reason: format!("{field:?} is not a number"),
            })?;
            if !v.is_finite() {
                return Err(Error::MalformedLine {
                    line,
                    reason: format!("{field:?} is not finite"),
                });
            }
            data.push(v);
        }
        labels.push(label);
    }
    if labels.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = labels.len();
    DecisionMatrix::new(labels, criteria, DenseMatrix::from_row_major(n, k, data))
}
