//! Certify the entropy argument on a concrete graph:
//! `ln E[n_i] >= E[ln n_i] >= H >= ln(bound)` for every `i`, plus the
//! Jensen steps that turn the entropy into the degree bound.
//!
//! ```bash
//! cargo run --example entropy_chain
//! ```

use nbwalk::entropy::{ahl_theorem_from_lemmas, conditional_entropy_chain, jensen_certificates, verify_lemma_ahl, CHAIN_TOLERANCE, StartMode};
use nbwalk::graph::{generators, to_directed};
use nbwalk::walks::count_table;
use nbwalk::Graph;

fn main() {
    let p = generators::petersen();
    let g = Graph::from_edges(10, p.edges().skip(1)).unwrap();
    let arcs = to_directed(&g);
    let counts = count_table(&arcs, 5);

    let report = verify_lemma_ahl(&g, &counts, 5).unwrap();
    println!("{:>2} {:>12} {:>12} {:>12} {:>12}", "i", "ln E[n]", "E[ln n]", "H", "ln bound");
    for r in &report.part_a {
        let [a, b, c, d] = r.values();
        println!("{:>2} {a:>12.6} {b:>12.6} {c:>12.6} {d:>12.6}", r.index);
    }
    println!("all chains hold: {}", report.holds(CHAIN_TOLERANCE));

    let audit = conditional_entropy_chain(&arcs, 2, StartMode::VertexPi).unwrap();
    println!("H[e_1 e_2 | v] = {:.12} nats from terms {:?}", audit.entropy(), audit.entropy_terms);

    for rec in jensen_certificates(&g, 2).unwrap() {
        println!("jensen {:<22} lhs={:.9} rhs={:.9} gap={:.3e}", rec.function.to_string(), rec.lhs, rec.rhs, rec.gap);
    }

    let consistency = ahl_theorem_from_lemmas(&g, &counts).unwrap();
    println!(
        "summed lemma bounds {} = bound {}; summed expectations {} <= n = {}",
        consistency.lemma_bound_sum, consistency.theorem_bound, consistency.expectation_sum, consistency.capacity
    );
}
