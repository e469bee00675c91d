//! Load graphs from edge lists and graph6, then inspect girth, degrees and
//! the bipartition.
//!
//! ```bash
//! cargo run --example graph_io
//! ```

use nbwalk::graph::{bipartition, degree_stats, from_edge_list, from_graph6, generators, girth, to_graph6};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // a 6-cycle with one chord, plus an isolated vertex declared by the header
    let text = "\
# hexagon with a chord
n 7
0 1
1 2
2 3
3 4
4 5
5 0
0 3
";
    let g = from_edge_list(text)?;
    let stats = degree_stats(&g)?;
    println!(
        "edge list: n={} |E|={} girth={} min degree={} average degree={}",
        g.vertex_count(),
        g.edge_count(),
        girth(&g),
        stats.min_degree,
        stats.avg_degree
    );
    println!("degree histogram: {:?}", stats.degree_histogram);

    let heawood = generators::heawood();
    let code = String::from_utf8(to_graph6(&heawood)?)?;
    let back = from_graph6(code.as_bytes())?;
    assert_eq!(back, heawood);
    println!("heawood as graph6: {code}");

    let bv = bipartition(&heawood)?;
    println!(
        "heawood sides: n_L={} n_R={} d_L={} d_R={}",
        bv.n_left(),
        bv.n_right(),
        bv.d_left(),
        bv.d_right()
    );

    match bipartition(&generators::petersen()) {
        Ok(_) => unreachable!("the Petersen graph has 5-cycles"),
        Err(e) => println!("petersen: {e}"),
    }
    Ok(())
}
