//! Push the walk process forward in exact arithmetic and confirm that every
//! step is uniform on arcs, even on an irregular graph.
//!
//! ```bash
//! cargo run --example stationarity
//! ```

use nbwalk::entropy::{process_marginals, stationary_pi, StartMode};
use nbwalk::graph::{generators, to_directed};
use nbwalk::Graph;

fn main() {
    let p = generators::petersen();
    let g = Graph::from_edges(10, p.edges().skip(1)).unwrap();
    let arcs = to_directed(&g);

    let pi = stationary_pi(&g).unwrap();
    let shown: Vec<String> = pi.probs().iter().map(ToString::to_string).collect();
    println!("pi = [{}]", shown.join(", "));

    for mode in [StartMode::VertexPi, StartMode::ArcUniform] {
        let pm = process_marginals(&arcs, 4, mode).unwrap();
        let check = pm.stationarity(&arcs).unwrap();
        println!(
            "{:<12} arc steps {:?}: e_j uniform 1/{} at every step: {}",
            mode.label(),
            pm.arc_steps(),
            arcs.arc_count(),
            check.holds()
        );
    }

    let h = generators::heawood();
    let harcs = to_directed(&h);
    let pm = process_marginals(&harcs, 3, StartMode::ArcUniformLr).unwrap();
    for j in pm.arc_steps() {
        let support = pm.arc(j).probs().iter().filter(|p| !num_traits::Zero::is_zero(*p)).count();
        println!("heawood from the left side: e_{j} uniform on {support} arcs");
    }
    println!("heawood side alternation exact: {}", pm.stationarity(&harcs).unwrap().holds());
}
