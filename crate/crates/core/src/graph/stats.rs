use rayon::prelude::*;
use serde::Serialize;

use super::{connected_components, Graph};

/// Topological summary of a network.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NetworkStats {
    pub n: usize,
    pub m: usize,
    pub mean_degree: f64,
    pub max_degree: usize,
    pub mean_clustering: f64,
    /// Mean hop distance over unordered node pairs; `None` when disconnected.
    pub mean_path_length: Option<f64>,
    pub mean_square_degree: f64,
    pub component_count: usize,
}

fn local_clustering(g: &Graph, node: usize) -> f64 {
    let nbrs = g.neighbors(node);
    let k = nbrs.len();
    if k < 2 {
        return 0.0;
    }
    let mut links = 0usize;
    for (a, &u) in nbrs.iter().enumerate() {
        for &v in &nbrs[a + 1..] {
            if g.has_edge(u, v) {
                links += 1;
            }
        }
    }
    2.0 * links as f64 / (k * (k - 1)) as f64
}

pub fn stats(g: &Graph) -> NetworkStats {
    let n = g.node_count();
    let degrees = g.degrees();
    let nf = n as f64;
    let mean_degree = 2.0 * g.edge_count() as f64 / nf;
    let mean_square_degree = degrees.iter().map(|&d| (d * d) as f64).sum::<f64>() / nf;
    let clustering: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|i| local_clustering(g, i))
        .collect();
    let mean_clustering = clustering.iter().sum::<f64>() / nf;
    let component_count = connected_components(g).len();

    let mean_path_length = (component_count == 1).then(|| {
        if n < 2 {
            return 0.0;
        }
        let total: u64 = (0..n)
            .into_par_iter()
            .map(|s| {
                g.bfs_distances(s)
                    .into_iter()
                    .flatten()
                    .map(|d| d as u64)
                    .sum::<u64>()
            })
            .sum();
        // Each unordered pair was counted from both ends.
        total as f64 / (nf * (nf - 1.0))
    });

    NetworkStats {
        n,
        m: g.edge_count(),
        mean_degree,
        max_degree: g.max_degree(),
        mean_clustering,
        mean_path_length,
        mean_square_degree,
        component_count,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn path_of_three() {
        let s = stats(&Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        assert!(close(s.mean_degree, 4.0 / 3.0));
        assert_eq!(s.max_degree, 2);
        assert!(close(s.mean_clustering, 0.0));
        assert!(close(s.mean_path_length.unwrap(), 4.0 / 3.0));
        assert!(close(s.mean_square_degree, 2.0));
        assert_eq!(s.component_count, 1);
    }

    #[test]
    fn triangle() {
        let s = stats(&Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap());
        assert!(close(s.mean_degree, 2.0));
        assert!(close(s.mean_clustering, 1.0));
        assert!(close(s.mean_path_length.unwrap(), 1.0));
        assert!(close(s.mean_square_degree, 4.0));
    }

    #[test]
    fn disconnected_has_no_path_length() {
        let s = stats(&Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap());
        assert_eq!(s.mean_path_length, None);
        assert_eq!(s.component_count, 2);
    }

    #[test]
    fn single_node() {
        let s = stats(&Graph::from_edges(1, []).unwrap());
        assert_eq!(s.mean_path_length, Some(0.0));
        assert_eq!(s.mean_degree, 0.0);
    }
}
