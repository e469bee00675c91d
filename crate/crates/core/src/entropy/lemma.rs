use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::chain::{chain_record, entropy_terms, BoundParams};
use super::{process_marginals, ChainRecord, Distribution, EntropyError, StartMode, CHAIN_TOLERANCE};
use crate::bounds::{ahl_bound, hoory_bounds};
use crate::graph::{girth, to_directed, BipartiteView, Girth, Graph};
use crate::walks::{bipartite_term_lengths, WalkCountTable};
use crate::{json, Rational};

/// Chain records for the two parts of an expectation lemma.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaReport {
    pub part_a: Vec<ChainRecord>,
    pub part_b: Vec<ChainRecord>,
}

impl LemmaReport {
    pub fn records(&self) -> impl Iterator<Item = &ChainRecord> {
        self.part_a.iter().chain(&self.part_b)
    }

    pub fn holds(&self, tolerance: f64) -> bool {
        self.records().all(|r| r.holds(tolerance))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "part_a": self.part_a.iter().map(ChainRecord::to_json).collect::<Vec<_>>(),
            "part_b": self.part_b.iter().map(ChainRecord::to_json).collect::<Vec<_>>(),
            "holds": self.holds(CHAIN_TOLERANCE),
        })
    }
}

fn prefix_sums(terms: &[f64]) -> Vec<f64> {
    let mut acc = 0.0;
    let mut out = vec![0.0];
    for t in terms {
        acc += t;
        out.push(acc);
    }
    out
}

/// Average-degree expectation lemma.
///
/// Part (a), `1 <= i <= i_max`: for `v ~ π`, `E[n_i(v)] >= d̄(d̄-1)^{i-1}`.
/// Part (b), `0 <= i <= i_max`: for a uniform arc `e`, `E[n_i(e)] >= (d̄-1)^i`.
/// Each record carries the full entropy chain.
pub fn verify_lemma_ahl(
    g: &Graph,
    counts: &WalkCountTable,
    i_max: usize,
) -> Result<LemmaReport, EntropyError> {
    if i_max == 0 {
        return Err(EntropyError::HorizonZero);
    }
    counts.require(i_max)?;
    let arcs = to_directed(g);
    let params = BoundParams::of(g, StartMode::ArcUniform)?;

    let from_pi = process_marginals(&arcs, i_max, StartMode::VertexPi)?;
    let h_pi = prefix_sums(&entropy_terms(&arcs, &from_pi));
    let part_a = (1..=i_max)
        .map(|i| {
            chain_record(
                i,
                i,
                from_pi.vertex(0),
                counts.vertex_level(i),
                h_pi[i],
                params.bound(StartMode::VertexPi, i),
            )
        })
        .collect();

    let from_arc = process_marginals(&arcs, i_max, StartMode::ArcUniform)?;
    let h_arc = prefix_sums(&entropy_terms(&arcs, &from_arc));
    let part_b = (0..=i_max)
        .map(|i| {
            chain_record(
                i,
                i,
                from_arc.arc(0),
                counts.arc_level(i),
                h_arc[i + 1],
                params.bound(StartMode::ArcUniform, i),
            )
        })
        .collect();

    Ok(LemmaReport { part_a, part_b })
}

/// Bipartite expectation lemma, `0 <= i <= i_max`.
///
/// Part (a): for `e` uniform on arcs leaving the left side,
/// `E[n_{2i+1}(e)] >= (d_R-1)^{i+1}(d_L-1)^i`.
/// Part (b): for `e` uniform on arcs leaving the right side,
/// `E[n_{2i}(e)] >= (d_R-1)^i(d_L-1)^i`.
pub fn verify_lemma_hoory(
    bv: &BipartiteView,
    counts: &WalkCountTable,
    i_max: usize,
) -> Result<LemmaReport, EntropyError> {
    counts.require(2 * i_max + 1)?;
    let g = bv.graph();
    let arcs = to_directed(g);
    let params = BoundParams::of(g, StartMode::ArcUniformLr)?;

    let record = |mode: StartMode, lens: Vec<(usize, usize)>| -> Result<Vec<ChainRecord>, EntropyError> {
        let horizon = lens.iter().map(|&(_, len)| len).max().unwrap_or(0);
        let pm = process_marginals(&arcs, horizon, mode)?;
        let h = prefix_sums(&entropy_terms(&arcs, &pm));
        Ok(lens
            .into_iter()
            .map(|(i, len)| {
                chain_record(i, len, pm.arc(0), counts.arc_level(len), h[len + 1], params.bound(mode, len))
            })
            .collect())
    };
    Ok(LemmaReport {
        part_a: record(
            StartMode::ArcUniformLr,
            (0..=i_max).map(|i| (i, 2 * i + 1)).collect(),
        )?,
        part_b: record(StartMode::ArcUniformRl, (0..=i_max).map(|i| (i, 2 * i)).collect())?,
    })
}

/// The step from the expectation lemmas to a vertex-count bound: the lemma
/// bounds summed over the counting argument's index range must equal the
/// theorem's bound, and the summed expectations sit between that bound and
/// the vertex count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremConsistency {
    pub capacity: usize,
    pub theorem_bound: Rational,
    pub lemma_bound_sum: Rational,
    pub expectation_sum: Rational,
}

impl TheoremConsistency {
    pub fn holds(&self) -> bool {
        self.lemma_bound_sum == self.theorem_bound
            && self.lemma_bound_sum <= self.expectation_sum
            && self.expectation_sum <= Rational::from_integer(BigInt::from(self.capacity))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "capacity": self.capacity,
            "theorem_bound": json::rational(&self.theorem_bound),
            "lemma_bound_sum": json::rational(&self.lemma_bound_sum),
            "expectation_sum": json::rational(&self.expectation_sum),
            "holds": self.holds(),
        })
    }
}

fn expected(start: &Distribution, level: &[BigUint]) -> Rational {
    start
        .probs()
        .iter()
        .zip(level)
        .map(|(p, c)| p * Rational::from_integer(BigInt::from(c.clone())))
        .sum()
}

/// Average-degree bound rebuilt from the lemma: odd girth `2r + 1` sums
/// `E_π[n_i(v)]` for `i <= r`, even girth `2r` sums `E[n_i(e₁) + n_i(e₂)]`
/// for `i < r` over a uniform arc and its reverse.
pub fn ahl_theorem_from_lemmas(
    g: &Graph,
    counts: &WalkCountTable,
) -> Result<TheoremConsistency, EntropyError> {
    let gi = girth(g).finite().ok_or(EntropyError::InfiniteGirth)?;
    let r = (gi / 2) as usize;
    let arcs = to_directed(g);
    let params = BoundParams::of(g, StartMode::ArcUniform)?;
    let two = Rational::from_integer(BigInt::from(2));

    let (lemma_bound_sum, expectation_sum) = if gi % 2 == 1 {
        counts.require(r)?;
        let pm = process_marginals(&arcs, 1, StartMode::VertexPi)?;
        (1..=r).fold((Rational::one(), Rational::one()), |(b, e), i| {
            (
                b + params.bound(StartMode::VertexPi, i),
                e + expected(pm.vertex(0), counts.vertex_level(i)),
            )
        })
    } else {
        counts.require(r - 1)?;
        let pm = process_marginals(&arcs, 0, StartMode::ArcUniform)?;
        // the reverse of a uniform arc is again uniform
        (0..r).fold((Rational::zero(), Rational::zero()), |(b, e), i| {
            (
                b + &two * params.bound(StartMode::ArcUniform, i),
                e + &two * expected(pm.arc(0), counts.arc_level(i)),
            )
        })
    };
    let theorem_bound = ahl_bound(&params.d_bar, Girth::Finite(gi))?;
    Ok(TheoremConsistency {
        capacity: g.vertex_count(),
        theorem_bound,
        lemma_bound_sum,
        expectation_sum,
    })
}

/// Side bounds rebuilt from the bipartite lemma, following the counting
/// argument's split into odd-length walks from the arc leaving the counted
/// side and even-length walks from its reverse. Returns `(left, right)`.
pub fn hoory_theorem_from_lemmas(
    bv: &BipartiteView,
    counts: &WalkCountTable,
) -> Result<(TheoremConsistency, TheoremConsistency), EntropyError> {
    let g = bv.graph();
    let gi = girth(g).finite().ok_or(EntropyError::InfiniteGirth)?;
    let r = (gi / 2) as usize;
    let (odd, even) = bipartite_term_lengths(r);
    counts.require(odd.iter().chain(&even).copied().max().unwrap_or(0))?;
    let arcs = to_directed(g);
    let params = BoundParams::of(g, StartMode::ArcUniformLr)?;
    let (theorem_left, theorem_right) =
        hoory_bounds(&bv.d_left(), &bv.d_right(), Girth::Finite(gi))?;

    let side = |leaving: StartMode, entering: StartMode, capacity: usize, theorem_bound: Rational| {
        let out = process_marginals(&arcs, 0, leaving)?;
        let back = process_marginals(&arcs, 0, entering)?;
        let mut lemma_bound_sum = Rational::zero();
        let mut expectation_sum = Rational::zero();
        for &len in &odd {
            lemma_bound_sum += params.bound(leaving, len);
            expectation_sum += expected(out.arc(0), counts.arc_level(len));
        }
        for &len in &even {
            lemma_bound_sum += params.bound(entering, len);
            expectation_sum += expected(back.arc(0), counts.arc_level(len));
        }
        Ok::<_, EntropyError>(TheoremConsistency {
            capacity,
            theorem_bound,
            lemma_bound_sum,
            expectation_sum,
        })
    };
    Ok((
        side(StartMode::ArcUniformLr, StartMode::ArcUniformRl, bv.n_left(), theorem_left)?,
        side(StartMode::ArcUniformRl, StartMode::ArcUniformLr, bv.n_right(), theorem_right)?,
    ))
}
