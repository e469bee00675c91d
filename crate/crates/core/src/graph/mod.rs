//! Undirected simple graphs and everything the bounds take as input:
//! ingestion, named families, degree statistics, girth, bipartition and the
//! directed arc space.

mod arcs;
mod bipartite;
mod edge_list;
pub mod generators;
mod girth;
mod graph6;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::Rational;

pub use arcs::{to_directed, ArcSpace};
pub use bipartite::{bipartition, BipartiteView, Side};
pub use edge_list::{from_edge_list, to_edge_list};
pub use girth::{girth, Girth};
pub use graph6::{from_graph6, to_graph6, MAX_GRAPH6_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{}self-loop at vertex {vertex}", line_prefix(*line))]
    SelfLoop { line: Option<usize>, vertex: usize },
    #[error("{}duplicate edge {{{u}, {v}}}", line_prefix(*line))]
    DuplicateEdge {
        line: Option<usize>,
        u: usize,
        v: usize,
    },
    #[error("{}vertex {vertex} out of range for {count} vertices", line_prefix(*line))]
    VertexOutOfRange {
        line: Option<usize>,
        vertex: usize,
        count: usize,
    },
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is not bipartite: odd cycle {cycle:?}")]
    NotBipartite { cycle: Vec<usize> },
}

fn line_prefix(line: Option<usize>) -> String {
    line.map(|l| format!("line {l}: ")).unwrap_or_default()
}

/// An immutable undirected simple graph on vertices `0..n`.
///
/// Adjacency lists are strictly increasing, so the graph has no loops and no
/// parallel edges. Edges are numbered in lexicographic order of `(u, v)` with
/// `u < v`; the arc space and every per-edge report use that numbering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            check_edge(u, v, n, None)?;
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge {
                    line: None,
                    u: u.min(w[0]),
                    v: u.max(w[0]),
                });
            }
        }
        Ok(Self {
            adjacency,
            edge_count,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.degrees().min()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Number of connected components (isolated vertices count).
    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = Vec::new();
        let mut components = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            components += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }
}

pub(crate) fn check_edge(
    u: usize,
    v: usize,
    n: usize,
    line: Option<usize>,
) -> Result<(), GraphError> {
    if u == v {
        return Err(GraphError::SelfLoop { line, vertex: u });
    }
    if let Some(&vertex) = [u, v].iter().find(|&&x| x >= n) {
        return Err(GraphError::VertexOutOfRange {
            line,
            vertex,
            count: n,
        });
    }
    Ok(())
}

/// Minimum, average and maximum degree with the full degree histogram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub max_degree: usize,
    /// `2|E| / n`, exact.
    pub avg_degree: Rational,
    pub degree_histogram: BTreeMap<usize, usize>,
}

pub fn degree_stats(g: &Graph) -> Result<DegreeStats, GraphError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let mut degree_histogram = BTreeMap::new();
    for d in g.degrees() {
        *degree_histogram.entry(d).or_insert(0) += 1;
    }
    Ok(DegreeStats {
        min_degree: *degree_histogram.keys().next().unwrap(),
        max_degree: *degree_histogram.keys().next_back().unwrap(),
        avg_degree: Rational::new(BigInt::from(2 * g.edge_count()), BigInt::from(n)),
        degree_histogram,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(matches!(
            Graph::from_edges(3, [(1, 1)]),
            Err(GraphError::SelfLoop { vertex: 1, .. })
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1, .. })
        ));
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn adjacency_is_sorted_and_symmetric() {
        let g = Graph::from_edges(4, [(3, 0), (2, 1), (0, 1), (2, 0)]).unwrap();
        for v in 0..4 {
            assert!(g.neighbors(v).windows(2).all(|w| w[0] < w[1]));
            for &w in g.neighbors(v) {
                assert!(g.has_edge(w, v));
            }
        }
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (0, 3), (1, 2)]);
        assert_eq!(g.degrees().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn degree_stats_of_petersen_and_cycle() {
        let p = generators::petersen();
        let s = degree_stats(&p).unwrap();
        assert_eq!(s.min_degree, 3);
        assert_eq!(s.avg_degree, Rational::from_integer(3.into()));

        let c7 = generators::cycle(7).unwrap();
        let s = degree_stats(&c7).unwrap();
        assert_eq!((s.min_degree, s.max_degree), (2, 2));
        assert_eq!(s.avg_degree, Rational::from_integer(2.into()));
    }

    #[test]
    fn degree_stats_of_petersen_minus_edge() {
        let p = generators::petersen();
        let (u, v) = p.edges().next().unwrap();
        let g = Graph::from_edges(10, p.edges().filter(|&e| e != (u, v))).unwrap();
        let s = degree_stats(&g).unwrap();
        assert_eq!(s.min_degree, 2);
        // two endpoints drop to degree 2: (8·3 + 2·2) / 10
        assert_eq!(s.avg_degree, Rational::new(28.into(), 10.into()));
        assert_eq!(s.degree_histogram.get(&2), Some(&2));
        assert_eq!(s.degree_histogram.get(&3), Some(&8));
    }

    #[test]
    fn degree_stats_rejects_empty() {
        assert_eq!(degree_stats(&Graph::empty(0)), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn components() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.component_count(), 3);
    }
}
