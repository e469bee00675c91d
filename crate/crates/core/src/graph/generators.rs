//! Named graph families and seeded random corpora.

use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError};

/// A named family with its parameters, as written on the command line
/// (`cycle:7`, `complete:4`, `complete_bipartite:2,3`, `petersen`, `heawood`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Petersen,
    Heawood,
}

impl Family {
    pub fn generate(&self) -> Result<Graph, GraphError> {
        match *self {
            Family::Cycle(n) => cycle(n),
            Family::Complete(n) => complete(n),
            Family::CompleteBipartite(a, b) => complete_bipartite(a, b),
            Family::Petersen => Ok(petersen()),
            Family::Heawood => Ok(heawood()),
        }
    }
}

pub fn generate(family: &Family) -> Result<Graph, GraphError> {
    family.generate()
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            Family::Petersen => f.write_str("petersen"),
            Family::Heawood => f.write_str("heawood"),
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, params) = match s.split_once(':') {
            Some((name, params)) => (name, Some(params)),
            None => (s, None),
        };
        let numbers = || -> Result<Vec<usize>, GraphError> {
            params
                .unwrap_or("")
                .split(',')
                .map(|p| {
                    p.trim().parse().map_err(|_| {
                        GraphError::InvalidParameter(format!("bad parameter `{p}` in `{s}`"))
                    })
                })
                .collect()
        };
        let arity = |expected: usize, got: &[usize]| {
            if got.len() == expected {
                Ok(())
            } else {
                Err(GraphError::InvalidParameter(format!(
                    "`{name}` takes {expected} parameter(s)"
                )))
            }
        };
        match name {
            "cycle" | "c" => {
                let p = numbers()?;
                arity(1, &p)?;
                Ok(Family::Cycle(p[0]))
            }
            "complete" | "k" => {
                let p = numbers()?;
                arity(1, &p)?;
                Ok(Family::Complete(p[0]))
            }
            "complete_bipartite" | "kb" => {
                let p = numbers()?;
                arity(2, &p)?;
                Ok(Family::CompleteBipartite(p[0], p[1]))
            }
            "petersen" if params.is_none() => Ok(Family::Petersen),
            "heawood" if params.is_none() => Ok(Family::Heawood),
            _ => Err(GraphError::InvalidParameter(format!("unknown family `{s}`"))),
        }
    }
}

/// `C_n` on `0..n` with edges `i ~ i+1 (mod n)`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidParameter(format!("complete needs n >= 2, got {n}")));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{a,b}` with the `a` side on `0..a` and the `b` side on `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a < 1 || b < 1 {
        return Err(GraphError::InvalidParameter(format!(
            "complete_bipartite needs a, b >= 1, got {a}, {b}"
        )));
    }
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Outer 5-cycle `0..5`, spokes `i ~ i+5`, inner pentagram `5+i ~ 5+(i+2)%5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("petersen is simple")
}

/// Hamiltonian 14-cycle with chords `i ~ i+5` for even `i` (LCF `[5,-5]^7`).
pub fn heawood() -> Graph {
    let ring = (0..14).map(|i| (i, (i + 1) % 14));
    let chords = (0..14).step_by(2).map(|i| (i, (i + 5) % 14));
    Graph::from_edges(14, ring.chain(chords)).expect("heawood is simple")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("paths are simple")
}

/// Replaces every edge by a path with `k` new internal vertices.
///
/// Girth is multiplied by `k + 1`; one subdivision (`k = 1`) always yields a
/// bipartite graph.
pub fn subdivide(g: &Graph, k: usize) -> Graph {
    let mut next = g.vertex_count();
    let mut edges = Vec::with_capacity(g.edge_count() * (k + 1));
    for (u, v) in g.edges() {
        let mut prev = u;
        for _ in 0..k {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    Graph::from_edges(next, edges).expect("subdivision of a simple graph is simple")
}

/// Disjoint union, relabelling the second graph after the first.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.vertex_count();
    let edges = a.edges().chain(b.edges().map(|(u, v)| (u + shift, v + shift)));
    Graph::from_edges(shift + b.vertex_count(), edges).expect("disjoint union is simple")
}

pub mod random {
    //! Seeded random graph corpora. Every function draws only from the
    //! generator passed in, so a fixed seed reproduces the corpus.

    use std::collections::HashSet;

    use rand::seq::SliceRandom;
    use rand::Rng;

    use crate::graph::{Graph, GraphError};

    const MAX_RESTARTS: usize = 10_000;

    /// Connected graph with minimum degree at least two: a random
    /// Hamiltonian cycle plus up to `chords` random extra edges.
    pub fn cycle_with_chords<R: Rng>(n: usize, chords: usize, rng: &mut R) -> Graph {
        assert!(n >= 3, "need at least three vertices");
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let mut edges: HashSet<(usize, usize)> = HashSet::new();
        for i in 0..n {
            let (u, v) = (order[i], order[(i + 1) % n]);
            edges.insert((u.min(v), u.max(v)));
        }
        let max_edges = n * (n - 1) / 2;
        let target = (edges.len() + chords).min(max_edges);
        while edges.len() < target {
            let u = rng.random_range(0..n);
            let v = rng.random_range(0..n);
            if u != v {
                edges.insert((u.min(v), u.max(v)));
            }
        }
        let mut edges: Vec<_> = edges.into_iter().collect();
        edges.sort_unstable();
        Graph::from_edges(n, edges).expect("edges deduplicated")
    }

    /// Uniform-ish random `d`-regular graph by the pairing model with local
    /// rejection of loops and repeated pairs; restarts when stuck.
    pub fn regular<R: Rng>(n: usize, d: usize, rng: &mut R) -> Result<Graph, GraphError> {
        if d >= n || !(n * d).is_multiple_of(2) {
            return Err(GraphError::InvalidParameter(format!(
                "no simple {d}-regular graph on {n} vertices"
            )));
        }
        'restart: for _ in 0..MAX_RESTARTS {
            let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
            let mut edges: HashSet<(usize, usize)> = HashSet::new();
            while !points.is_empty() {
                let mut placed = false;
                for _ in 0..100 {
                    let i = rng.random_range(0..points.len());
                    let j = rng.random_range(0..points.len());
                    let (u, v) = (points[i], points[j]);
                    if i == j || u == v || edges.contains(&(u.min(v), u.max(v))) {
                        continue;
                    }
                    edges.insert((u.min(v), u.max(v)));
                    let (hi, lo) = (i.max(j), i.min(j));
                    points.swap_remove(hi);
                    points.swap_remove(lo);
                    placed = true;
                    break;
                }
                if !placed {
                    continue 'restart;
                }
            }
            let mut edges: Vec<_> = edges.into_iter().collect();
            edges.sort_unstable();
            return Graph::from_edges(n, edges);
        }
        Err(GraphError::InvalidParameter(format!(
            "failed to sample a {d}-regular graph on {n} vertices"
        )))
    }

    /// Bipartite graph with sides `0..left` and `left..left+right`, every
    /// vertex of degree at least two, plus up to `extra` random cross edges.
    pub fn bipartite_min_degree_two<R: Rng>(
        left: usize,
        right: usize,
        extra: usize,
        rng: &mut R,
    ) -> Graph {
        assert!(left >= 2 && right >= 2, "each side needs two vertices");
        let mut edges: HashSet<(usize, usize)> = HashSet::new();
        let add = |u: usize, v: usize, edges: &mut HashSet<(usize, usize)>| {
            edges.insert((u, v));
        };
        for u in 0..left {
            while edges.iter().filter(|e| e.0 == u).count() < 2 {
                add(u, left + rng.random_range(0..right), &mut edges);
            }
        }
        for w in left..left + right {
            while edges.iter().filter(|e| e.1 == w).count() < 2 {
                add(rng.random_range(0..left), w, &mut edges);
            }
        }
        let target = (edges.len() + extra).min(left * right);
        while edges.len() < target {
            add(rng.random_range(0..left), left + rng.random_range(0..right), &mut edges);
        }
        let mut edges: Vec<_> = edges.into_iter().collect();
        edges.sort_unstable();
        Graph::from_edges(left + right, edges).expect("edges deduplicated")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cycle_five() {
        let g = cycle(5).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert!(g.degrees().all(|d| d == 2));
        assert!(cycle(2).is_err());
    }

    #[test]
    fn petersen_matches_outer_cycle_and_pentagram() {
        let g = petersen();
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 15));
        assert!(g.degrees().all(|d| d == 3));
        for i in 0..5 {
            assert!(g.has_edge(i, (i + 1) % 5));
            assert!(g.has_edge(i, i + 5));
            assert!(g.has_edge(5 + i, 5 + (i + 2) % 5));
            assert!(!g.has_edge(5 + i, 5 + (i + 1) % 5));
        }
    }

    #[test]
    fn heawood_is_cubic_on_fourteen() {
        let g = heawood();
        assert_eq!((g.vertex_count(), g.edge_count()), (14, 21));
        assert!(g.degrees().all(|d| d == 3));
    }

    #[test]
    fn complete_bipartite_three_three() {
        let g = complete_bipartite(3, 3).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert!(g.degrees().all(|d| d == 3));
        assert!(crate::graph::bipartition(&g).is_ok());
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn family_parsing_round_trips() {
        for s in ["cycle:7", "complete:4", "complete_bipartite:2,3", "petersen", "heawood"] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("cycle".parse::<Family>().is_err());
        assert!("petersen:3".parse::<Family>().is_err());
        assert!("mobius:8".parse::<Family>().is_err());
        assert!("complete_bipartite:3".parse::<Family>().is_err());
        assert!(Family::Complete(1).generate().is_err());
    }

    #[test]
    fn subdivision_doubles_girth() {
        let g = subdivide(&complete(4).unwrap(), 1);
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 12));
        assert_eq!(crate::graph::girth(&g), crate::graph::Girth::Finite(6));
    }

    #[test]
    fn random_generators_meet_their_contracts() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let g = random::cycle_with_chords(9, 4, &mut rng);
            assert_eq!(g.component_count(), 1);
            assert!(g.min_degree().unwrap() >= 2);

            let r = random::regular(12, 3, &mut rng).unwrap();
            assert!(r.degrees().all(|d| d == 3));

            let b = random::bipartite_min_degree_two(4, 6, 3, &mut rng);
            assert!(b.min_degree().unwrap() >= 2);
            assert!(b.edges().all(|(u, v)| u < 4 && v >= 4));
        }
        assert!(random::regular(5, 3, &mut rng).is_err());
    }
}
