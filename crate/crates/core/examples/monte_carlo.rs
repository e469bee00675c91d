//! Seeded simulation of the walk process as a cross-check on the exact
//! marginals and entropy.
//!
//! ```bash
//! cargo run --release --example monte_carlo
//! ```

use nbwalk::entropy::{conditional_entropy_chain, estimate_entropy, simulate_arc_marginals, StartMode};
use nbwalk::graph::{generators, to_directed};
use nbwalk::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let p = generators::petersen();
    let g = Graph::from_edges(10, p.edges().skip(1)).unwrap();
    let arcs = to_directed(&g);
    let mut rng = ChaCha8Rng::seed_from_u64(42);

    let exact = conditional_entropy_chain(&arcs, 3, StartMode::VertexPi).unwrap();
    let freq = simulate_arc_marginals(&arcs, 3, StartMode::VertexPi, 200_000, &mut rng).unwrap();
    let z = freq.max_z_score(|j| exact.marginals.arc(j));
    println!("200000 runs, largest arc-frequency deviation: {z:.2} sigma");

    let est = estimate_entropy(&arcs, 3, StartMode::VertexPi, 200_000, &mut rng).unwrap();
    println!(
        "H exact {:.6}, simulated {:.6} +- {:.6} ({:.2} sigma)",
        exact.entropy(),
        est.mean,
        est.std_error,
        est.z_score(exact.entropy())
    );
}
