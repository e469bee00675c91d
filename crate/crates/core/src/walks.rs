//! Exact counts of non-returning walks.
//!
//! `n_i(v)` counts walks of `i` arcs starting at vertex `v`; `n_i(a)` counts
//! walks of `i + 1` arcs whose first arc is `a`. Both are arbitrary-precision
//! and filled in by the recurrences
//!
//! ```text
//! n_0(a) = 1,  n_i(a) = sum of n_{i-1}(b) over successors b of a
//! n_0(v) = 1,  n_i(v) = sum of n_{i-1}(a) over arcs a leaving v
//! ```

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::ArcSpace;

/// Longest walk parameter `i` accepted by the enumeration oracle.
pub const MAX_ENUMERATION_LENGTH: usize = 12;
/// Largest number of walks the enumeration oracle will materialise.
pub const MAX_ENUMERATED_WALKS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("vertex {0} out of range")]
    InvalidVertex(usize),
    #[error("arc {0} out of range")]
    InvalidArc(usize),
    #[error("walk length {requested} exceeds the table horizon {horizon}")]
    BeyondHorizon { requested: usize, horizon: usize },
    #[error("enumeration length {0} exceeds the limit {MAX_ENUMERATION_LENGTH}")]
    LengthGuard(usize),
    #[error("enumeration exceeds {MAX_ENUMERATED_WALKS} walks")]
    BlowupGuard,
}

/// Where a counted walk begins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WalkStart {
    Vertex(usize),
    Arc(usize),
}

/// `n_i(a)` and `n_i(v)` for every arc, vertex and `0 <= i <= horizon`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkCountTable {
    horizon: usize,
    per_arc: Vec<Vec<BigUint>>,
    per_vertex: Vec<Vec<BigUint>>,
}

impl WalkCountTable {
    pub fn horizon(&self) -> usize {
        self.horizon
    }

    /// `n_i(a)`. Panics if `i` exceeds the horizon.
    pub fn arc(&self, a: usize, i: usize) -> &BigUint {
        &self.per_arc[i][a]
    }

    /// `n_i(v)`. Panics if `i` exceeds the horizon.
    pub fn vertex(&self, v: usize, i: usize) -> &BigUint {
        &self.per_vertex[i][v]
    }

    /// All `n_i(a)` for one `i`, indexed by arc.
    pub fn arc_level(&self, i: usize) -> &[BigUint] {
        &self.per_arc[i]
    }

    /// All `n_i(v)` for one `i`, indexed by vertex.
    pub fn vertex_level(&self, i: usize) -> &[BigUint] {
        &self.per_vertex[i]
    }

    pub fn count(&self, start: WalkStart, i: usize) -> Result<&BigUint, WalkError> {
        if i > self.horizon {
            return Err(WalkError::BeyondHorizon {
                requested: i,
                horizon: self.horizon,
            });
        }
        match start {
            WalkStart::Vertex(v) => self.per_vertex[i].get(v).ok_or(WalkError::InvalidVertex(v)),
            WalkStart::Arc(a) => self.per_arc[i].get(a).ok_or(WalkError::InvalidArc(a)),
        }
    }

    pub(crate) fn require(&self, i: usize) -> Result<(), WalkError> {
        if i > self.horizon {
            Err(WalkError::BeyondHorizon {
                requested: i,
                horizon: self.horizon,
            })
        } else {
            Ok(())
        }
    }
}

pub fn count_table(arcs: &ArcSpace, horizon: usize) -> WalkCountTable {
    let m = arcs.arc_count();
    let n = arcs.vertex_count();
    let mut per_arc = Vec::with_capacity(horizon + 1);
    let mut per_vertex = Vec::with_capacity(horizon + 1);
    per_arc.push(vec![BigUint::one(); m]);
    per_vertex.push(vec![BigUint::one(); n]);
    for i in 1..=horizon {
        let prev: &Vec<BigUint> = &per_arc[i - 1];
        let sum = |list: &[usize]| -> BigUint {
            list.iter().fold(BigUint::zero(), |acc, &b| acc + &prev[b])
        };
        let arcs_level: Vec<BigUint> = (0..m).map(|a| sum(arcs.successors(a))).collect();
        let vertex_level: Vec<BigUint> = (0..n).map(|v| sum(arcs.out_arcs(v))).collect();
        per_arc.push(arcs_level);
        per_vertex.push(vertex_level);
    }
    WalkCountTable {
        horizon,
        per_arc,
        per_vertex,
    }
}

pub fn count_from_vertex(arcs: &ArcSpace, v: usize, i: usize) -> Result<BigUint, WalkError> {
    if v >= arcs.vertex_count() {
        return Err(WalkError::InvalidVertex(v));
    }
    Ok(count_table(arcs, i).vertex(v, i).clone())
}

pub fn count_from_arc(arcs: &ArcSpace, a: usize, i: usize) -> Result<BigUint, WalkError> {
    if a >= arcs.arc_count() {
        return Err(WalkError::InvalidArc(a));
    }
    Ok(count_table(arcs, i).arc(a, i).clone())
}

/// A walk as its sequence of arc ids.
pub type Walk = Vec<usize>;

/// Lists every non-returning walk counted by `n_i(start)`.
///
/// This is the enumeration oracle for the counting recurrences. It extends
/// walks through the adjacency lists of the underlying graph rather than the
/// arc space's successor lists.
pub fn brute_force_walks(
    arcs: &ArcSpace,
    start: WalkStart,
    i: usize,
) -> Result<Vec<Walk>, WalkError> {
    if i > MAX_ENUMERATION_LENGTH {
        return Err(WalkError::LengthGuard(i));
    }
    let g = arcs.graph();
    let (mut frontier, remaining): (Vec<Walk>, usize) = match start {
        WalkStart::Vertex(v) => {
            if v >= g.vertex_count() {
                return Err(WalkError::InvalidVertex(v));
            }
            if i == 0 {
                return Ok(vec![Vec::new()]);
            }
            let first = g
                .neighbors(v)
                .iter()
                .map(|&w| vec![arcs.arc_between(v, w).expect("edge has an arc")])
                .collect();
            (first, i - 1)
        }
        WalkStart::Arc(a) => {
            if a >= arcs.arc_count() {
                return Err(WalkError::InvalidArc(a));
            }
            (vec![vec![a]], i)
        }
    };
    for _ in 0..remaining {
        let predicted: usize = frontier
            .iter()
            .map(|w| g.degree(arcs.head(*w.last().unwrap())).saturating_sub(1))
            .sum();
        if predicted > MAX_ENUMERATED_WALKS {
            return Err(WalkError::BlowupGuard);
        }
        let mut next = Vec::with_capacity(predicted);
        for walk in &frontier {
            let last = *walk.last().unwrap();
            let (x, y) = (arcs.tail(last), arcs.head(last));
            for &z in g.neighbors(y) {
                if z == x {
                    continue;
                }
                let mut extended = walk.clone();
                extended.push(arcs.arc_between(y, z).expect("edge has an arc"));
                next.push(extended);
            }
        }
        frontier = next;
    }
    Ok(frontier)
}

/// Multiset of walk end vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EndpointMultiset {
    counts: BTreeMap<usize, usize>,
    total: usize,
}

impl EndpointMultiset {
    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }

    /// Number of walks, with multiplicity.
    pub fn total(&self) -> usize {
        self.total
    }

    pub fn distinct_count(&self) -> usize {
        self.counts.len()
    }

    /// True iff no vertex is reached twice.
    pub fn is_distinct(&self) -> bool {
        self.counts.len() == self.total
    }

    fn add(&mut self, v: usize) {
        *self.counts.entry(v).or_insert(0) += 1;
        self.total += 1;
    }
}

fn walk_end(arcs: &ArcSpace, start: WalkStart, walk: &Walk) -> usize {
    match (walk.last(), start) {
        (Some(&a), _) => arcs.head(a),
        (None, WalkStart::Vertex(v)) => v,
        (None, WalkStart::Arc(a)) => arcs.head(a),
    }
}

/// End vertices of all walks counted by `n_0(start), ..., n_radius(start)`.
pub fn endpoint_multiset(
    arcs: &ArcSpace,
    start: WalkStart,
    radius: usize,
) -> Result<EndpointMultiset, WalkError> {
    let terms: Vec<(WalkStart, usize)> = (0..=radius).map(|i| (start, i)).collect();
    counted_walk_endpoints(arcs, &terms)
}

/// End vertices of the walks counted by each `n_i(start)` term, pooled.
pub fn counted_walk_endpoints(
    arcs: &ArcSpace,
    terms: &[(WalkStart, usize)],
) -> Result<EndpointMultiset, WalkError> {
    let mut out = EndpointMultiset::default();
    for &(start, i) in terms {
        for walk in brute_force_walks(arcs, start, i)? {
            out.add(walk_end(arcs, start, &walk));
            if out.total > MAX_ENUMERATED_WALKS {
                return Err(WalkError::BlowupGuard);
            }
        }
    }
    Ok(out)
}

/// Walk terms whose end vertices the even-girth counting argument pools for
/// edge `{a, reverse a}`: `n_i(a)` and `n_i(reverse a)` for `i < r`.
pub fn edge_pair_terms(arcs: &ArcSpace, a: usize, r: usize) -> Vec<(WalkStart, usize)> {
    let b = arcs.reverse(a);
    (0..r)
        .flat_map(|i| [(WalkStart::Arc(a), i), (WalkStart::Arc(b), i)])
        .collect()
}

/// Walk lengths pooled by the bipartite counting argument at girth `2r`:
/// odd lengths `2i + 1` for `i <= floor((r-2)/2)` taken from the arc leaving
/// the counted side, and even lengths `2i` for `i <= ceil((r-2)/2)` taken
/// from the arc entering it. Requires `r >= 2`.
pub fn bipartite_term_lengths(r: usize) -> (Vec<usize>, Vec<usize>) {
    assert!(r >= 2, "bipartite girth is at least four");
    let odd = (0..=(r - 2) / 2).map(|i| 2 * i + 1).collect();
    let even = (0..=(r - 1) / 2).map(|i| 2 * i).collect();
    (odd, even)
}
