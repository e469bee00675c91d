#![allow(dead_code)]

use nbwalk::graph::generators::{self, random};
use nbwalk::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn petersen_minus_edge() -> Graph {
    let p = generators::petersen();
    Graph::from_edges(10, p.edges().skip(1)).unwrap()
}

/// Named graphs with minimum degree two.
pub fn named() -> Vec<(String, Graph)> {
    let mut out = vec![
        ("petersen".to_string(), generators::petersen()),
        ("heawood".to_string(), generators::heawood()),
        ("petersen_minus_edge".to_string(), petersen_minus_edge()),
        ("K4".to_string(), generators::complete(4).unwrap()),
        ("K5".to_string(), generators::complete(5).unwrap()),
        ("K33".to_string(), generators::complete_bipartite(3, 3).unwrap()),
        ("K23".to_string(), generators::complete_bipartite(2, 3).unwrap()),
        ("K24".to_string(), generators::complete_bipartite(2, 4).unwrap()),
    ];
    for n in 3..=9 {
        out.push((format!("C{n}"), generators::cycle(n).unwrap()));
    }
    out
}

/// Seeded corpus of graphs with minimum degree two: cycles with chords,
/// bipartite graphs, cubic graphs and subdivided graphs (bipartite with
/// larger girth), in rotation.
pub fn random_corpus(count: usize, seed: u64) -> Vec<(String, Graph)> {
    let mut rng = rng(seed);
    (0..count)
        .map(|k| {
            let g = match k % 4 {
                0 => {
                    let n = rng.random_range(4..=12);
                    let chords = rng.random_range(0..=n);
                    random::cycle_with_chords(n, chords, &mut rng)
                }
                1 => {
                    let (l, r) = (rng.random_range(2..=6), rng.random_range(2..=6));
                    let extra = rng.random_range(0..=4);
                    random::bipartite_min_degree_two(l, r, extra, &mut rng)
                }
                2 => {
                    let n = 2 * rng.random_range(2..=6);
                    random::regular(n, 3, &mut rng).unwrap()
                }
                _ => {
                    let n = rng.random_range(3..=6);
                    let chords = rng.random_range(0..=3);
                    generators::subdivide(&random::cycle_with_chords(n, chords, &mut rng), 1)
                }
            };
            (format!("random-{seed}-{k}"), g)
        })
        .collect()
}

/// Connected graphs with minimum degree two on `3..=max_n` vertices.
pub fn connected_corpus(count: usize, seed: u64, max_n: usize) -> Vec<Graph> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(3..=max_n);
            let chords = rng.random_range(0..=n);
            random::cycle_with_chords(n, chords, &mut rng)
        })
        .collect()
}
