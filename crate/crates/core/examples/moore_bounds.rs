//! Audit named graphs against the Moore, average-degree and bipartite side
//! bounds, and evaluate the bounds directly from parameters.
//!
//! ```bash
//! cargo run --example moore_bounds
//! ```

use nbwalk::bounds::{ahl_bound, audit_graph, hoory_bounds, moore_bound};
use nbwalk::graph::generators::{self, Family};
use nbwalk::{Girth, Graph, Rational};

fn main() {
    let families = ["complete:4", "petersen", "heawood", "complete_bipartite:3,3", "complete_bipartite:2,3", "cycle:9"];
    for spec in families {
        let family: Family = spec.parse().unwrap();
        let report = audit_graph(&family.generate().unwrap()).with_id(spec);
        print!("{}", report.to_text());
    }

    // one edge removed: the average degree drops below 3 and the bound follows
    let p = generators::petersen();
    let g = Graph::from_edges(10, p.edges().skip(1)).unwrap();
    print!("{}", audit_graph(&g).with_id("petersen minus an edge").to_text());

    let girth = Girth::Finite(5);
    let d_bar = Rational::new(14.into(), 5.into());
    println!("moore(3, girth 5)   = {}", moore_bound(3, girth).unwrap());
    println!("ahl(14/5, girth 5)  = {}", ahl_bound(&d_bar, girth).unwrap());
    let (l, r) = hoory_bounds(&Rational::from_integer(3.into()), &Rational::from_integer(2.into()), Girth::Finite(4)).unwrap();
    println!("hoory(3, 2, girth 4) = ({l}, {r})");
}
