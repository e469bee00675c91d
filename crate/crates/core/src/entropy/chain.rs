use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::{
    ln_biguint, ln_rational, pooled_expectation, process_marginals, Distribution,
    EntropyError, ProcessMarginals, StartMode,
};
use crate::bounds::pow;
use crate::graph::{bipartition, degree_stats, ArcSpace, Graph};
use crate::walks::count_table;
use crate::{json, Rational};

/// Absolute slack allowed on each float inequality of a chain.
pub const CHAIN_TOLERANCE: f64 = 1e-9;

/// The four quantities of the entropy argument for one walk length, with
/// the exact expectation and bound they derive from.
///
/// `ln E[n] >= E[ln n] >= H >= ln(bound)`: Jensen for the concave log, the
/// support-size bound on entropy, and Jensen for the convex degree function.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainRecord {
    /// Lemma index `i`.
    pub index: usize,
    /// Counted walk length (the `i` of `n_i`).
    pub walk_length: usize,
    pub expectation: Rational,
    pub bound: Rational,
    pub log_expectation: f64,
    pub expected_log: f64,
    pub entropy: f64,
    pub log_bound: f64,
}

impl ChainRecord {
    pub fn values(&self) -> [f64; 4] {
        [self.log_expectation, self.expected_log, self.entropy, self.log_bound]
    }

    /// Adjacent differences; each is non-negative up to rounding.
    pub fn gaps(&self) -> [f64; 3] {
        let v = self.values();
        [v[0] - v[1], v[1] - v[2], v[2] - v[3]]
    }

    pub fn holds(&self, tolerance: f64) -> bool {
        self.gaps().iter().all(|&g| g >= -tolerance) && self.exact_bound_holds()
    }

    /// `E[n] >= bound` in exact arithmetic.
    pub fn exact_bound_holds(&self) -> bool {
        self.expectation >= self.bound
    }

    pub fn to_json(&self) -> Value {
        json!({
            "i": self.index,
            "walk_length": self.walk_length,
            "expectation": json::rational(&self.expectation),
            "bound": json::rational(&self.bound),
            "log_expectation": json::float(self.log_expectation),
            "expected_log": json::float(self.expected_log),
            "entropy": json::float(self.entropy),
            "log_bound": json::float(self.log_bound),
            "gaps": self.gaps().iter().map(|&g| json::float(g)).collect::<Vec<_>>(),
            "holds": self.holds(CHAIN_TOLERANCE),
        })
    }
}

/// Conditional-entropy audit of one walk process.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyAudit {
    pub mode: StartMode,
    pub horizon: usize,
    pub marginals: ProcessMarginals,
    /// `terms[0]` is `E[ln d_v]` for the vertex mode and `0` for arc modes
    /// (the first arc is conditioned on); `terms[j]` is `E[ln(d_{v_j} - 1)]`.
    pub entropy_terms: Vec<f64>,
    pub chain: ChainRecord,
}

impl EntropyAudit {
    /// `H[walk | start]`, the sum of the entropy terms.
    pub fn entropy(&self) -> f64 {
        self.chain.entropy
    }

    pub fn to_json(&self, full: bool) -> Value {
        let mut v = json!({
            "mode": self.mode.label(),
            "horizon": self.horizon,
            "entropy_terms": self.entropy_terms.iter().map(|&t| json::float(t)).collect::<Vec<_>>(),
            "chain": self.chain.to_json(),
        });
        if full {
            v["marginals"] = self.marginals.to_json();
        }
        v
    }
}

/// Per-step conditional entropies of the process in `marginals`.
pub(crate) fn entropy_terms(arcs: &ArcSpace, marginals: &ProcessMarginals) -> Vec<f64> {
    let deg = |v: usize| arcs.degree(v);
    let branching = |j: usize| {
        pooled_expectation(marginals.vertex(j).probs(), deg, |&d| (d as f64 - 1.0).ln())
    };
    match marginals.mode {
        StartMode::VertexPi => {
            let first = pooled_expectation(marginals.vertex(0).probs(), deg, |&d| (d as f64).ln());
            std::iter::once(first)
                .chain((1..marginals.horizon).map(branching))
                .collect()
        }
        _ => std::iter::once(0.0)
            .chain((1..=marginals.horizon).map(branching))
            .collect(),
    }
}

/// Assembles a chain record from the start law, the counts `n_len(x)` over
/// the same support, the entropy and the bound.
pub(crate) fn chain_record(
    index: usize,
    walk_length: usize,
    start: &Distribution,
    counts: &[BigUint],
    entropy: f64,
    bound: Rational,
) -> ChainRecord {
    let expectation: Rational = start
        .probs()
        .iter()
        .zip(counts)
        .filter(|(p, _)| !p.is_zero())
        .map(|(p, c)| p * Rational::from_integer(BigInt::from(c.clone())))
        .sum();
    let expected_log = pooled_expectation(start.probs(), |x| counts[x].clone(), ln_biguint);
    ChainRecord {
        index,
        walk_length,
        log_expectation: ln_rational(&expectation),
        expected_log,
        entropy,
        log_bound: ln_rational(&bound),
        expectation,
        bound,
    }
}

/// Degree parameters for the bound of each start mode.
pub(crate) struct BoundParams {
    pub d_bar: Rational,
    pub d_left: Rational,
    pub d_right: Rational,
}

impl BoundParams {
    pub fn of(g: &Graph, mode: StartMode) -> Result<Self, EntropyError> {
        let d_bar = degree_stats(g)?.avg_degree;
        let (d_left, d_right) = match mode.starting_side() {
            Some(_) => {
                let bv = bipartition(g)?;
                (bv.d_left(), bv.d_right())
            }
            None => (Rational::zero(), Rational::zero()),
        };
        Ok(Self {
            d_bar,
            d_left,
            d_right,
        })
    }

    /// Lower bound on `E[n_len]` under the mode's start law:
    /// `d̄(d̄-1)^{len-1}` from `π`, `(d̄-1)^len` from a uniform arc, and
    /// `(d_far-1)^{⌈len/2⌉}(d_near-1)^{⌊len/2⌋}` from a uniform arc leaving
    /// the near side.
    pub fn bound(&self, mode: StartMode, len: usize) -> Rational {
        let one = Rational::one();
        let len32 = len as u32;
        match mode {
            StartMode::VertexPi => &self.d_bar * pow(&(&self.d_bar - &one), len32 - 1),
            StartMode::ArcUniform => pow(&(&self.d_bar - &one), len32),
            StartMode::ArcUniformLr => {
                pow(&(&self.d_right - &one), len32.div_ceil(2)) * pow(&(&self.d_left - &one), len32 / 2)
            }
            StartMode::ArcUniformRl => {
                pow(&(&self.d_left - &one), len32.div_ceil(2)) * pow(&(&self.d_right - &one), len32 / 2)
            }
        }
    }
}

/// Runs the walk process of `mode` for `horizon` steps and evaluates the
/// entropy chain for `n_horizon` against the matching average-degree bound.
pub fn conditional_entropy_chain(
    arcs: &ArcSpace,
    horizon: usize,
    mode: StartMode,
) -> Result<EntropyAudit, EntropyError> {
    let marginals = process_marginals(arcs, horizon, mode)?;
    let terms = entropy_terms(arcs, &marginals);
    let entropy: f64 = terms.iter().sum();
    let counts = count_table(arcs, horizon);
    let params = BoundParams::of(arcs.graph(), mode)?;
    let bound = params.bound(mode, horizon);
    let chain = match mode {
        StartMode::VertexPi => chain_record(
            horizon,
            horizon,
            marginals.vertex(0),
            counts.vertex_level(horizon),
            entropy,
            bound,
        ),
        _ => chain_record(
            horizon,
            horizon,
            marginals.arc(0),
            counts.arc_level(horizon),
            entropy,
            bound,
        ),
    };
    Ok(EntropyAudit {
        mode,
        horizon,
        marginals,
        entropy_terms: terms,
        chain,
    })
}
