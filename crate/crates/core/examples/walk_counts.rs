//! Exact non-returning walk counts and the enumeration oracle behind them.
//!
//! ```bash
//! cargo run --example walk_counts
//! ```

use nbwalk::graph::{generators, to_directed};
use nbwalk::walks::{brute_force_walks, count_table, endpoint_multiset};
use nbwalk::WalkStart;

fn main() {
    let g = generators::petersen();
    let arcs = to_directed(&g);
    let table = count_table(&arcs, 6);

    println!("petersen, vertex 0");
    for i in 0..=6 {
        let enumerated = brute_force_walks(&arcs, WalkStart::Vertex(0), i).unwrap().len();
        println!("  n_{i}(v) = {:>4}   enumerated: {enumerated}", table.vertex(0, i));
    }

    let a = arcs.arc_between(0, 1).unwrap();
    let arc_counts: Vec<String> = (0..=6).map(|i| table.arc(a, i).to_string()).collect();
    println!("arc 0->1: n_i = {}", arc_counts.join(", "));

    // below the girth the walks end at distinct vertices
    let ends = endpoint_multiset(&arcs, WalkStart::Vertex(0), 2).unwrap();
    println!(
        "walks of length <= 2 from vertex 0: {} walks, {} distinct endpoints",
        ends.total(),
        ends.distinct_count()
    );
    let ends = endpoint_multiset(&arcs, WalkStart::Vertex(0), 3).unwrap();
    println!(
        "walks of length <= 3 from vertex 0: {} walks, {} distinct endpoints",
        ends.total(),
        ends.distinct_count()
    );

    // counts grow exactly; no overflow at long horizons
    let k6 = to_directed(&generators::complete(6).unwrap());
    let big = count_table(&k6, 40);
    println!("K6: n_40(v) = {}", big.vertex(0, 40));
}
