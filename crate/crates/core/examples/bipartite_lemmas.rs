//! Side-by-side walk processes on a bipartite graph and the side bounds they
//! certify.
//!
//! ```bash
//! cargo run --example bipartite_lemmas
//! ```

use nbwalk::entropy::{hoory_theorem_from_lemmas, verify_lemma_hoory, CHAIN_TOLERANCE};
use nbwalk::graph::generators::{self, random};
use nbwalk::graph::{bipartition, girth, to_directed};
use nbwalk::walks::count_table;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let graphs = [
        ("K23", generators::complete_bipartite(2, 3).unwrap()),
        ("heawood", generators::heawood()),
        ("random", random::bipartite_min_degree_two(4, 6, 2, &mut rng)),
    ];
    for (name, g) in graphs {
        let bv = bipartition(&g).unwrap();
        let counts = count_table(&to_directed(&g), 7);
        let lemma = verify_lemma_hoory(&bv, &counts, 3).unwrap();
        let (left, right) = hoory_theorem_from_lemmas(&bv, &counts).unwrap();
        println!(
            "{name}: girth {} d_L={} d_R={} chains hold={}",
            girth(&g),
            bv.d_left(),
            bv.d_right(),
            lemma.holds(CHAIN_TOLERANCE)
        );
        for r in &lemma.part_a {
            println!("  from left, length {}: E={} >= {}", r.walk_length, r.expectation, r.bound);
        }
        println!(
            "  n_L={} >= {} and n_R={} >= {}",
            left.capacity, left.theorem_bound, right.capacity, right.theorem_bound
        );
    }
}
