use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use super::Graph;

/// Length of the shortest cycle; forests have infinite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Girth {
    Finite(u32),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<u32> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Girth::Finite(_))
    }
}

impl Ord for Girth {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Girth::Finite(a), Girth::Finite(b)) => a.cmp(b),
            (Girth::Finite(_), Girth::Infinite) => Ordering::Less,
            (Girth::Infinite, Girth::Finite(_)) => Ordering::Greater,
            (Girth::Infinite, Girth::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Girth {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

const UNSEEN: usize = usize::MAX;

/// Girth by breadth-first search from every vertex.
///
/// A non-tree edge `(u, w)` met during the search from `s` closes a closed
/// walk of length `dist(u) + dist(w) + 1` through `s`, which contains a cycle
/// no longer than that; the minimum over all roots is exact. A search stops
/// once `2·dist(u) + 1` reaches the best cycle found so far.
pub fn girth(g: &Graph) -> Girth {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![UNSEEN; n];
    let mut parent = vec![UNSEEN; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();

    for s in 0..n {
        if best == 3 {
            break;
        }
        for &v in &touched {
            dist[v] = UNSEEN;
            parent[v] = UNSEEN;
        }
        touched.clear();
        queue.clear();

        dist[s] = 0;
        touched.push(s);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == UNSEEN {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if parent[u] != w && parent[w] != u {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }

    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best as u32)
    }
}
