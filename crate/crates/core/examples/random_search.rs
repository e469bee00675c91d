//! Sweep a seeded random corpus and report the graph that comes closest to
//! the average-degree bound.
//!
//! ```bash
//! cargo run --example random_search
//! ```

use nbwalk::bounds::audit_graph;
use nbwalk::graph::generators::random;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut best: Option<(f64, String)> = None;
    for k in 0..200 {
        let n = rng.random_range(5..=16);
        let g = random::cycle_with_chords(n, rng.random_range(1..=n), &mut rng);
        let report = audit_graph(&g).with_id(format!("sample {k}"));
        assert!(!report.has_violation());
        let Some(lb) = &report.ahl_lb else { continue };
        let ratio = lb.to_f64().unwrap() / report.n as f64;
        if best.as_ref().is_none_or(|(r, _)| ratio > *r) {
            let desc = format!(
                "{} n={} girth={} bound={} ({})",
                report.graph_id,
                report.n,
                report.girth,
                lb,
                report.ahl.label()
            );
            best = Some((ratio, desc));
        }
    }
    let (ratio, desc) = best.unwrap();
    println!("closest to the bound: {desc}, bound/n = {ratio:.3}");
}
