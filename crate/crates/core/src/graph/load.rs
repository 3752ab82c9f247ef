use std::collections::{BTreeSet, HashMap};
use std::io::Read;

use log::warn;
use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LoadOptions {
    /// When every label is a positive integer, create a node for every
    /// integer in `1..=max_label`, so gaps become isolated nodes.
    pub one_indexed_hint: bool,
    /// Keep nodes left without any edge (labels that only occurred in
    /// self-loops, or gap nodes from `one_indexed_hint`).
    pub allow_isolated: bool,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions {
            one_indexed_hint: false,
            allow_isolated: true,
        }
    }
}

/// Largest label `one_indexed_hint` will fill up to.
pub const MAX_ONE_INDEXED_LABEL: u64 = 1_000_000;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LoadReport {
    pub lines_read: usize,
    pub edge_lines: usize,
    pub self_loops: usize,
    pub duplicate_edges: usize,
    pub isolated_dropped: usize,
    pub nodes: usize,
    pub edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Key {
    Num(u64),
    Text(String),
}

/// Decimal without sign or leading zeros, so distinct labels stay distinct.
fn is_canonical_uint(label: &str) -> bool {
    label.parse::<u64>().is_ok_and(|v| v.to_string() == label)
}

/// Parses a whitespace-separated edge list.
///
/// Lines starting with `#` and blank lines are skipped; columns past the
/// second are ignored. Node indices follow the sorted order of the labels
/// (numeric when every label is an unsigned integer), so the result depends
/// only on the edge set, not on line order or endpoint order.
pub fn load_edge_list<R: Read>(mut source: R, options: LoadOptions) -> Result<(Graph, LoadReport)> {
    let mut bytes = Vec::new();
    source.read_to_end(&mut bytes)?;

    let mut report = LoadReport::default();
    let mut raw: Vec<(String, String)> = Vec::new();
    let mut loop_labels: Vec<String> = Vec::new();

    for (i, line) in bytes.split(|&b| b == b'\n').enumerate() {
        let line_no = i + 1;
        report.lines_read += 1;
        let text = std::str::from_utf8(line).map_err(|_| Error::MalformedLine {
            line: line_no,
            reason: "not valid UTF-8".into(),
        })?;
        let text = text.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let mut tokens = text.split_whitespace();
        let (Some(a), Some(b)) = (tokens.next(), tokens.next()) else {
            return Err(Error::MalformedLine {
                line: line_no,
                reason: "expected two node labels".into(),
            });
        };
        report.edge_lines += 1;
        if a == b {
            report.self_loops += 1;
            loop_labels.push(a.to_owned());
        } else {
            raw.push((a.to_owned(), b.to_owned()));
        }
    }
    if report.edge_lines == 0 {
        return Err(Error::EmptyInput);
    }

    let numeric = raw
        .iter()
        .flat_map(|(a, b)| [a, b])
        .chain(loop_labels.iter())
        .all(|l| is_canonical_uint(l));
    let key = |l: &str| -> Key {
        if numeric {
            Key::Num(l.parse().unwrap_or(0))
        } else {
            Key::Text(l.to_owned())
        }
    };

    let mut with_edges: BTreeSet<Key> = BTreeSet::new();
    for (a, b) in &raw {
        with_edges.insert(key(a));
        with_edges.insert(key(b));
    }
    let mut isolated: BTreeSet<Key> = loop_labels
        .iter()
        .map(|l| key(l))
        .filter(|k| !with_edges.contains(k))
        .collect();
    if options.one_indexed_hint && numeric {
        let max = with_edges
            .iter()
            .chain(isolated.iter())
            .filter_map(|k| match k {
                Key::Num(v) => Some(*v),
                Key::Text(_) => None,
            })
            .max()
            .unwrap_or(0);
        if max > MAX_ONE_INDEXED_LABEL {
            return Err(Error::InvalidParameter(format!(
                "one-indexed label {max} exceeds the fill limit {MAX_ONE_INDEXED_LABEL}"
            )));
        }
        for v in 1..=max {
            let k = Key::Num(v);
            if !with_edges.contains(&k) {
                isolated.insert(k);
            }
        }
    }
    if !options.allow_isolated {
        report.isolated_dropped = isolated.len();
        isolated.clear();
    }

    let all: BTreeSet<Key> = with_edges.into_iter().chain(isolated).collect();
    if all.is_empty() {
        return Err(Error::NoNodes);
    }
    let labels: Vec<String> = all
        .iter()
        .map(|k| match k {
            Key::Num(v) => v.to_string(),
            Key::Text(s) => s.clone(),
        })
        .collect();
    let index: HashMap<Key, usize> = all.into_iter().enumerate().map(|(i, k)| (k, i)).collect();

    let edges: Vec<(usize, usize)> = raw
        .iter()
        .map(|(a, b)| (index[&key(a)], index[&key(b)]))
        .collect();
    let graph = Graph::with_labels(labels, edges.iter().copied())?;

    report.duplicate_edges = raw.len() - graph.edge_count();
    report.nodes = graph.node_count();
    report.edges = graph.edge_count();
    if report.self_loops > 0 {
        warn!("edge list: dropped {} self-loop(s)", report.self_loops);
    }
    if report.duplicate_edges > 0 {
        warn!(
            "edge list: dropped {} duplicate edge(s)",
            report.duplicate_edges
        );
    }
    if report.isolated_dropped > 0 {
        warn!(
            "edge list: dropped {} isolated node(s)",
            report.isolated_dropped
        );
    }
    Ok((graph, report))
}
