use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use super::{require_min_degree_two, stationary_pi, Distribution, EntropyError, StartMode, SupportKind};
use crate::graph::{bipartition, ArcSpace, Side};
use crate::Rational;

/// Exact per-step marginals of the walk process.
///
/// Arc marginals cover `e_s, ..., e_end` where `s` is the mode's first arc
/// step; vertex marginals cover `v_0, v_1, ...` with `v_0` the tail of the
/// first arc and `v_{j+1}` (arc modes) or `v_j` (vertex mode) the head of
/// `e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProcessMarginals {
    pub mode: StartMode,
    pub horizon: usize,
    arcs: Vec<Distribution>,
    vertices: Vec<Distribution>,
}

impl ProcessMarginals {
    /// Marginal of `e_j`.
    pub fn arc(&self, j: usize) -> &Distribution {
        &self.arcs[j - self.mode.first_arc_step()]
    }

    /// Marginal of `v_j`.
    pub fn vertex(&self, j: usize) -> &Distribution {
        &self.vertices[j]
    }

    /// Steps `j` for which `e_j` is defined.
    pub fn arc_steps(&self) -> std::ops::Range<usize> {
        let s = self.mode.first_arc_step();
        s..s + self.arcs.len()
    }

    pub fn vertex_steps(&self) -> std::ops::Range<usize> {
        0..self.vertices.len()
    }

    /// Compares every marginal with the stationary law: arcs uniform on
    /// their class, vertices `π` (or `d_v / |E|` on the correct side in the
    /// bipartite modes). Exact equality.
    pub fn stationarity(&self, arcs: &ArcSpace) -> Result<StationarityCheck, EntropyError> {
        let g = arcs.graph();
        let m = arcs.arc_count();
        let mut check = StationarityCheck::default();
        match self.mode.starting_side() {
            None => {
                let uniform = Distribution::uniform_on(SupportKind::Arc, m, &(0..m).collect::<Vec<_>>());
                let pi = stationary_pi(g)?;
                for j in self.arc_steps() {
                    check.record_arc(j, self.arc(j) == &uniform);
                }
                for j in self.vertex_steps() {
                    check.record_vertex(j, self.vertex(j) == &pi);
                }
            }
            Some(start) => {
                let bv = bipartition(g)?;
                let edges = BigInt::from(g.edge_count());
                let side_law = |side: Side| {
                    let probs = (0..g.vertex_count())
                        .map(|v| {
                            if bv.side(v) == side {
                                Rational::new(BigInt::from(g.degree(v)), edges.clone())
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect();
                    Distribution::new_unchecked(SupportKind::Vertex, probs)
                };
                let side_at = |j: usize| if j.is_multiple_of(2) { start } else { start.other() };
                for j in self.arc_steps() {
                    let class = bv.arcs_from(side_at(j));
                    let law = Distribution::uniform_on(SupportKind::Arc, m, class);
                    check.record_arc(j, self.arc(j) == &law);
                }
                for j in self.vertex_steps() {
                    check.record_vertex(j, self.vertex(j) == &side_law(side_at(j)));
                }
            }
        }
        Ok(check)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "mode": self.mode.label(),
            "horizon": self.horizon,
            "first_arc_step": self.mode.first_arc_step(),
            "arcs": self.arcs.iter().map(Distribution::to_json).collect::<Vec<_>>(),
            "vertices": self.vertices.iter().map(Distribution::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Steps whose marginal differs from the stationary law.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StationarityCheck {
    pub checked_arc_steps: usize,
    pub checked_vertex_steps: usize,
    pub arc_failures: Vec<usize>,
    pub vertex_failures: Vec<usize>,
}

impl StationarityCheck {
    pub fn holds(&self) -> bool {
        self.arc_failures.is_empty() && self.vertex_failures.is_empty()
    }

    fn record_arc(&mut self, j: usize, ok: bool) {
        self.checked_arc_steps += 1;
        if !ok {
            self.arc_failures.push(j);
        }
    }

    fn record_vertex(&mut self, j: usize, ok: bool) {
        self.checked_vertex_steps += 1;
        if !ok {
            self.vertex_failures.push(j);
        }
    }
}

/// Pushes the start law forward through the non-returning transition.
///
/// `horizon` is the number of arcs in the walk for [`StartMode::VertexPi`]
/// (`e_1..e_horizon`) and the number of arcs after `e_0` for the arc modes
/// (`e_0..e_horizon`).
pub fn process_marginals(
    arcs: &ArcSpace,
    horizon: usize,
    mode: StartMode,
) -> Result<ProcessMarginals, EntropyError> {
    let g = arcs.graph();
    require_min_degree_two(g)?;
    let m = arcs.arc_count();

    let first = match mode {
        StartMode::VertexPi => {
            if horizon == 0 {
                return Err(EntropyError::HorizonZero);
            }
            let pi = stationary_pi(g)?;
            let probs = (0..m)
                .map(|a| {
                    let v = arcs.tail(a);
                    pi.prob(v) / Rational::from_integer(BigInt::from(g.degree(v)))
                })
                .collect();
            Distribution::new_unchecked(SupportKind::Arc, probs)
        }
        StartMode::ArcUniform => {
            Distribution::uniform_on(SupportKind::Arc, m, &(0..m).collect::<Vec<_>>())
        }
        StartMode::ArcUniformLr | StartMode::ArcUniformRl => {
            let side = mode.starting_side().unwrap();
            let bv = bipartition(g)?;
            if bv.side_count(side) == 0 {
                return Err(EntropyError::EmptySide(side));
            }
            Distribution::uniform_on(SupportKind::Arc, m, bv.arcs_from(side))
        }
    };

    let steps = match mode {
        StartMode::VertexPi => horizon,
        _ => horizon + 1,
    };
    let mut arc_marginals = Vec::with_capacity(steps);
    arc_marginals.push(first);
    while arc_marginals.len() < steps {
        let prev = arc_marginals.last().unwrap();
        let mut next = vec![Rational::zero(); m];
        for a in 0..m {
            let p = prev.prob(a);
            if p.is_zero() {
                continue;
            }
            let succ = arcs.successors(a);
            let share = p / Rational::from_integer(BigInt::from(succ.len()));
            for &b in succ {
                next[b] += &share;
            }
        }
        arc_marginals.push(Distribution::new_unchecked(SupportKind::Arc, next));
    }

    let vertex_law = |d: &Distribution, end: fn(&ArcSpace, usize) -> usize| {
        let mut probs = vec![Rational::zero(); g.vertex_count()];
        for (a, p) in d.probs().iter().enumerate() {
            probs[end(arcs, a)] += p;
        }
        Distribution::new_unchecked(SupportKind::Vertex, probs)
    };
    let mut vertices = Vec::with_capacity(steps + 1);
    vertices.push(vertex_law(&arc_marginals[0], ArcSpace::tail));
    vertices.extend(arc_marginals.iter().map(|d| vertex_law(d, ArcSpace::head)));

    Ok(ProcessMarginals {
        mode,
        horizon,
        arcs: arc_marginals,
        vertices,
    })
}
