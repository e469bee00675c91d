use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Graph, GraphError};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A graph together with a proper 2-colouring into left and right sides.
///
/// Arc ids follow [`crate::ArcSpace`] numbering, so `arcs_lr` and `arcs_rl`
/// partition the arc space of the same graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteView {
    graph: Graph,
    sides: Vec<Side>,
    n_left: usize,
    n_right: usize,
    arcs_lr: Vec<usize>,
    arcs_rl: Vec<usize>,
}

impl BipartiteView {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn n_left(&self) -> usize {
        self.n_left
    }

    pub fn n_right(&self) -> usize {
        self.n_right
    }

    pub fn side_count(&self, side: Side) -> usize {
        match side {
            Side::Left => self.n_left,
            Side::Right => self.n_right,
        }
    }

    /// `|E| / n_L`, or zero for an empty side.
    pub fn d_left(&self) -> Rational {
        average(self.graph.edge_count(), self.n_left)
    }

    /// `|E| / n_R`, or zero for an empty side.
    pub fn d_right(&self) -> Rational {
        average(self.graph.edge_count(), self.n_right)
    }

    pub fn side_average(&self, side: Side) -> Rational {
        match side {
            Side::Left => self.d_left(),
            Side::Right => self.d_right(),
        }
    }

    /// Arcs whose tail is on the left.
    pub fn arcs_lr(&self) -> &[usize] {
        &self.arcs_lr
    }

    /// Arcs whose tail is on the right.
    pub fn arcs_rl(&self) -> &[usize] {
        &self.arcs_rl
    }

    /// Arcs leaving `side`.
    pub fn arcs_from(&self, side: Side) -> &[usize] {
        match side {
            Side::Left => &self.arcs_lr,
            Side::Right => &self.arcs_rl,
        }
    }
}

fn average(edges: usize, count: usize) -> Rational {
    if count == 0 {
        Rational::zero()
    } else {
        Rational::new(BigInt::from(edges), BigInt::from(count))
    }
}

/// Two-colours each component by BFS. The smallest vertex id of every
/// component goes to the left side. Fails with an odd cycle witness.
pub fn bipartition(g: &Graph) -> Result<BipartiteView, GraphError> {
    let n = g.vertex_count();
    let mut side: Vec<Option<Side>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();

    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(Side::Left);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(su.other());
                        parent[w] = u;
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => {
                        return Err(GraphError::NotBipartite {
                            cycle: odd_cycle(&parent, u, w),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }

    let sides: Vec<Side> = side.into_iter().map(Option::unwrap).collect();
    let n_left = sides.iter().filter(|&&s| s == Side::Left).count();
    let mut arcs_lr = Vec::with_capacity(g.edge_count());
    let mut arcs_rl = Vec::with_capacity(g.edge_count());
    for (k, (u, _)) in g.edges().enumerate() {
        // arc 2k runs u -> v with u < v, arc 2k+1 is its reverse
        if sides[u] == Side::Left {
            arcs_lr.push(2 * k);
            arcs_rl.push(2 * k + 1);
        } else {
            arcs_rl.push(2 * k);
            arcs_lr.push(2 * k + 1);
        }
    }
    arcs_lr.sort_unstable();
    arcs_rl.sort_unstable();

    Ok(BipartiteView {
        graph: g.clone(),
        n_left,
        n_right: n - n_left,
        sides,
        arcs_lr,
        arcs_rl,
    })
}

/// Closes the BFS-tree paths from `u` and `w` to their lowest common ancestor.
fn odd_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let ancestors = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let pu = ancestors(u);
    let pw = ancestors(w);
    // both paths end at the component root; strip the shared tail
    let mut shared = 0;
    while shared < pu.len().min(pw.len())
        && pu[pu.len() - 1 - shared] == pw[pw.len() - 1 - shared]
    {
        shared += 1;
    }
    let mut cycle: Vec<usize> = pu[..=pu.len() - shared].to_vec();
    cycle.extend(pw[..pw.len() - shared].iter().rev());
    cycle
}
