#![no_main]

use infnode::graph::{load_edge_list, LoadOptions};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    for (one_indexed_hint, allow_isolated) in [(false, true), (true, true), (true, false)] {
        let options = LoadOptions {
            one_indexed_hint,
            allow_isolated,
        };
        let Ok((g, report)) = load_edge_list(data, options) else {
            continue;
        };
        assert_eq!(report.nodes, g.node_count());
        assert_eq!(report.edges, g.edge_count());
        let degree_sum: usize = g.degrees().iter().sum();
        assert_eq!(degree_sum, 2 * g.edge_count());
        for u in 0..g.node_count() {
            for &v in g.neighbors(u) {
                assert!(u != v && g.has_edge(v, u));
            }
        }
    }
});
