#![no_main]

use infnode::fusion::{fuse, parse_decision_matrix, FusionOptions, Weights};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(x) = parse_decision_matrix(data) else {
        return;
    };
    assert_eq!(x.labels().len(), x.node_count());
    assert_eq!(x.criteria().len(), x.criterion_count());
    // Fusion is quadratic in the row count.
    if x.node_count() > 64 {
        return;
    }
    let k = x.criterion_count();
    let mut w = vec![1.0 / k as f64; k];
    w[k - 1] = 1.0 - w[..k - 1].iter().sum::<f64>();
    let Ok(w) = Weights::new(w) else {
        return;
    };
    let fused = fuse(&x, &w, FusionOptions::default()).expect("parsed matrices are fusable");
    let total: f64 = fused.net_dominance.iter().sum();
    assert!(total.abs() <= 1e-9 * x.node_count() as f64);
    let mut seen = fused.ranking.clone();
    seen.sort_unstable();
    assert!(seen.iter().copied().eq(0..x.node_count()));
});
