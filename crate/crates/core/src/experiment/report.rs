//! CSV renderings of results. Every table starts with a header row and
//! floats use Rust's shortest round-trip formatting, so equal results give
//! byte-identical files.

use std::io::Write;

use csv::{Writer, WriterBuilder};

use super::{ConstraintComparison, IcComparison, SirComparison, SweepResult};
use crate::centrality::MetricVector;
use crate::control::ControlReport;
use crate::diffusion::{IcResult, SirTrace};
use crate::error::Result;
use crate::graph::NetworkStats;

fn writer<W: Write>(w: W) -> Writer<W> {
    WriterBuilder::new().flexible(true).from_writer(w)
}

fn num(v: f64) -> String {
    v.to_string()
}

pub fn write_stats_csv<W: Write>(w: W, network: &str, s: &NetworkStats) -> Result<()> {
    let mut out = writer(w);
    out.write_record([
        "network",
        "n",
        "m",
        "mean_degree",
        "max_degree",
        "mean_clustering",
        "mean_path_length",
        "mean_square_degree",
        "component_count",
    ])?;
    out.write_record([
        network.to_owned(),
        s.n.to_string(),
        s.m.to_string(),
        num(s.mean_degree),
        s.max_degree.to_string(),
        num(s.mean_clustering),
        s.mean_path_length.map(num).unwrap_or_default(),
        num(s.mean_square_degree),
        s.component_count.to_string(),
    ])?;
    out.flush()?;
    Ok(())
}

/// `node_label,metric_name,value` for each metric, node by node.
pub fn write_metrics_csv<W: Write>(
    w: W,
    labels: &[String],
    metrics: &[MetricVector],
) -> Result<()> {
    let mut out = writer(w);
    out.write_record(["node_label", "metric_name", "value"])?;
    for m in metrics {
        for (label, v) in labels.iter().zip(&m.values) {
            out.write_record([label.as_str(), m.name.as_str(), &num(*v)])?;
        }
    }
    out.flush()?;
    Ok(())
}

/// `rank,node_label,<score_name>` in ranking order, rank starting at 1.
pub fn write_ranking_csv<W: Write>(
    w: W,
    labels: &[String],
    ranking: &[usize],
    scores: &[f64],
    score_name: &str,
) -> Result<()> {
    let mut out = writer(w);
    out.write_record(["rank", "node_label", score_name])?;
    for (pos, &node) in ranking.iter().enumerate() {
        out.write_record([
            (pos + 1).to_string(),
            labels[node].clone(),
            num(scores[node]),
        ])?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_trace_csv<W: Write>(w: W, trace: &SirTrace) -> Result<()> {
    let mut out = writer(w);
    out.write_record(["t", "f_mean", "f_std"])?;
    for (t, (m, s)) in trace.f_mean.iter().zip(&trace.f_std).enumerate() {
        out.write_record([t.to_string(), num(*m), num(*s)])?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_ic_sweep_csv<W: Write>(w: W, p_values: &[f64], results: &[IcResult]) -> Result<()> {
    let mut out = writer(w);
    out.write_record(["p", "active_mean", "active_std"])?;
    for (p, r) in p_values.iter().zip(results) {
        out.write_record([num(*p), num(r.active_mean), num(r.active_std)])?;
    }
    out.flush()?;
    Ok(())
}

/// Per-Q rows followed by a `q_max,P` summary header and its values.
pub fn write_control_csv<W: Write>(w: W, report: &ControlReport) -> Result<()> {
    let mut out = writer(w);
    out.write_record(["Q", "mu1", "inv_mu1"])?;
    for e in &report.per_q {
        out.write_record([e.q.to_string(), num(e.mu1), num(1.0 / e.mu1)])?;
    }
    out.write_record(["q_max", "P"])?;
    out.write_record([report.q_max.to_string(), num(report.p_value)])?;
    out.flush()?;
    Ok(())
}

/// Grid rows followed by an `argmax_w` summary header and its value.
pub fn write_sweep_csv<W: Write>(w: W, sweep: &SweepResult) -> Result<()> {
    let mut out = writer(w);
    out.write_record(["w_global", "f_final_mean", "f_final_std"])?;
    for r in &sweep.rows {
        out.write_record([num(r.w_global), num(r.f_final_mean), num(r.f_final_std)])?;
    }
    out.write_record(["argmax_w"])?;
    out.write_record([num(sweep.argmax_w)])?;
    out.flush()?;
    Ok(())
}

fn mean_std_header(first: &str, methods: &[super::Method]) -> Vec<String> {
    let mut header = vec![first.to_owned()];
    for m in methods {
        header.push(format!("{m}_mean"));
        header.push(format!("{m}_std"));
    }
    header
}

/// `t` then `<method>_mean,<method>_std` per method.
pub fn write_sir_comparison_csv<W: Write>(w: W, cmp: &SirComparison) -> Result<()> {
    let mut out = writer(w);
    out.write_record(mean_std_header("t", &cmp.methods))?;
    let rows = cmp.traces.first().map_or(0, |t| t.f_mean.len());
    for t in 0..rows {
        let mut rec = vec![t.to_string()];
        for trace in &cmp.traces {
            rec.push(num(trace.f_mean[t]));
            rec.push(num(trace.f_std[t]));
        }
        out.write_record(rec)?;
    }
    out.flush()?;
    Ok(())
}

/// `p` then `<method>_mean,<method>_std` per method.
pub fn write_ic_comparison_csv<W: Write>(w: W, cmp: &IcComparison) -> Result<()> {
    let mut out = writer(w);
    out.write_record(mean_std_header("p", &cmp.methods))?;
    for (i, p) in cmp.p_values.iter().enumerate() {
        let mut rec = vec![num(*p)];
        for per_method in &cmp.results {
            rec.push(num(per_method[i].active_mean));
            rec.push(num(per_method[i].active_std));
        }
        out.write_record(rec)?;
    }
    out.flush()?;
    Ok(())
}

/// One row per (network, fraction): `network,frac,q_max,<method>...`.
pub fn write_constraint_comparison_csv<W: Write>(
    w: W,
    tables: &[ConstraintComparison],
) -> Result<()> {
    let mut out = writer(w);
    let Some(first) = tables.first() else {
        out.flush()?;
        return Ok(());
    };
    let mut header = vec!["network".to_owned(), "frac".to_owned(), "q_max".to_owned()];
    header.extend(first.methods.iter().map(|m| m.to_string()));
    out.write_record(header)?;
    for table in tables {
        for (f, (frac, q)) in table.fractions.iter().zip(&table.q_max).enumerate() {
            let mut rec = vec![table.network.clone(), num(*frac), q.to_string()];
            rec.extend(table.p_values.iter().map(|per| num(per[f])));
            out.write_record(rec)?;
        }
    }
    out.flush()?;
    Ok(())
}
