//! The per-vertex and per-edge counting facts the bounds rest on: walks
//! shorter than half the girth end at distinct vertices, so their number is
//! at most the number of vertices.
//!
//! ```bash
//! cargo run --example counting_observations
//! ```

use nbwalk::bounds::{verify_observation_bipartite, verify_observation_even, verify_observation_odd};
use nbwalk::graph::{bipartition, generators, to_directed};
use nbwalk::walks::count_table;
use nbwalk::Graph;

fn main() {
    let p = generators::petersen();
    let g = Graph::from_edges(10, p.edges().skip(1)).unwrap();
    let counts = count_table(&to_directed(&g), 3);
    let check = verify_observation_odd(&g, &counts).unwrap();
    println!("petersen minus an edge (girth {}):", 2 * check.r + 1);
    for item in &check.items {
        println!("  vertex {}: {} walks of length <= {}", item.item, item.total, check.r);
    }
    let (v, slack) = check.min_slack().unwrap();
    println!("  holds={} tightest at vertex {v} with slack {slack}", check.holds());

    let h = generators::heawood();
    let counts = count_table(&to_directed(&h), 3);
    let even = verify_observation_even(&h, &counts).unwrap();
    println!("heawood, per edge: totals {:?}, holds={}", even.items.iter().map(|i| i.total.to_string()).collect::<Vec<_>>(), even.holds());

    let k23 = generators::complete_bipartite(2, 3).unwrap();
    let counts = count_table(&to_directed(&k23), 3);
    let sides = verify_observation_bipartite(&bipartition(&k23).unwrap(), &counts).unwrap();
    println!(
        "K23 per side: left capacity {} reached {}, right capacity {} reached {}",
        sides.left.capacity, sides.left.items[0].total, sides.right.capacity, sides.right.items[0].total
    );
}
