use super::Graph;

/// The directed version of a graph: every edge `{u, v}` becomes the two arcs
/// `u -> v` and `v -> u`.
///
/// Edge `k` (canonical order, `u < v`) owns arcs `2k = u -> v` and
/// `2k + 1 = v -> u`, so the reverse of an arc is its id with the low bit
/// flipped. The non-returning successors of `x -> y` are the arcs leaving `y`
/// other than `y -> x`; there are `deg(y) - 1` of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcSpace {
    graph: Graph,
    tail: Vec<usize>,
    head: Vec<usize>,
    out_arcs: Vec<Vec<usize>>,
    succ_start: Vec<usize>,
    succ: Vec<usize>,
}

impl ArcSpace {
    pub fn new(g: &Graph) -> Self {
        let arc_count = 2 * g.edge_count();
        let mut tail = Vec::with_capacity(arc_count);
        let mut head = Vec::with_capacity(arc_count);
        let mut out_arcs: Vec<Vec<usize>> = (0..g.vertex_count())
            .map(|v| Vec::with_capacity(g.degree(v)))
            .collect();
        for (u, v) in g.edges() {
            out_arcs[u].push(tail.len());
            tail.push(u);
            head.push(v);
            out_arcs[v].push(tail.len());
            tail.push(v);
            head.push(u);
        }
        for list in &mut out_arcs {
            list.sort_unstable_by_key(|&a| head[a]);
        }

        let mut succ_start = Vec::with_capacity(arc_count + 1);
        let mut succ = Vec::new();
        succ_start.push(0);
        for a in 0..arc_count {
            succ.extend(out_arcs[head[a]].iter().copied().filter(|&b| b != a ^ 1));
            succ_start.push(succ.len());
        }

        Self {
            graph: g.clone(),
            tail,
            head,
            out_arcs,
            succ_start,
            succ,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn arc_count(&self) -> usize {
        self.tail.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.out_arcs.len()
    }

    pub fn tail(&self, a: usize) -> usize {
        self.tail[a]
    }

    pub fn head(&self, a: usize) -> usize {
        self.head[a]
    }

    pub fn reverse(&self, a: usize) -> usize {
        a ^ 1
    }

    /// Edge index owning arc `a`.
    pub fn edge_of(&self, a: usize) -> usize {
        a / 2
    }

    pub fn successors(&self, a: usize) -> &[usize] {
        &self.succ[self.succ_start[a]..self.succ_start[a + 1]]
    }

    /// Arcs leaving `v`, ordered by head.
    pub fn out_arcs(&self, v: usize) -> &[usize] {
        &self.out_arcs[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.out_arcs[v].len()
    }

    /// The arc `u -> v`, if `{u, v}` is an edge.
    pub fn arc_between(&self, u: usize, v: usize) -> Option<usize> {
        let out = self.out_arcs.get(u)?;
        out.binary_search_by_key(&v, |&a| self.head[a])
            .ok()
            .map(|i| out[i])
    }
}

pub fn to_directed(g: &Graph) -> ArcSpace {
    ArcSpace::new(g)
}
