//! Exact audits of the entropy argument for the average-degree bounds.
//!
//! The non-returning walk process starts either at a vertex drawn from the
//! degree-proportional distribution `π(v) = d_v / 2|E|` (then a uniform
//! outgoing arc), or at a uniformly random arc of a given class, and moves to
//! a uniformly random non-returning successor at each step. Marginals are
//! pushed forward in exact rational arithmetic, so the claim that every step
//! is again uniform on arcs (and `π` on vertices) is checked with equality.
//! Entropies and logarithms are `f64` in nats.

mod chain;
mod jensen;
mod lemma;
mod monte_carlo;
mod process;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::bounds::BoundError;
use crate::graph::{Graph, GraphError, Side};
use crate::walks::WalkError;
use crate::{json, Rational};

pub use chain::{conditional_entropy_chain, ChainRecord, EntropyAudit, CHAIN_TOLERANCE};
pub use jensen::{jensen_certificates, ConvexFunction, JensenRecord};
pub use lemma::{
    ahl_theorem_from_lemmas, hoory_theorem_from_lemmas, verify_lemma_ahl, verify_lemma_hoory,
    LemmaReport, TheoremConsistency,
};
pub use monte_carlo::{estimate_entropy, simulate_arc_marginals, ArcFrequencies, EntropyEstimate};
pub use process::{process_marginals, ProcessMarginals, StationarityCheck};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EntropyError {
    #[error("graph has no edges")]
    Edgeless,
    #[error("vertex {vertex} has degree {degree}; the walk process needs minimum degree 2")]
    MinDegree { vertex: usize, degree: usize },
    #[error("walk horizon must be at least 1 when starting from a vertex")]
    HorizonZero,
    #[error("{0:?} side is empty")]
    EmptySide(Side),
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("girth is infinite")]
    InfiniteGirth,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Walk(#[from] WalkError),
    #[error(transparent)]
    Bound(#[from] BoundError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SupportKind {
    Vertex,
    Arc,
}

/// Exact probability vector over vertices or arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution {
    kind: SupportKind,
    probs: Vec<Rational>,
}

impl Distribution {
    /// Validates non-negativity and total mass exactly one.
    pub fn new(kind: SupportKind, probs: Vec<Rational>) -> Result<Self, EntropyError> {
        if let Some(i) = probs.iter().position(Signed::is_negative) {
            return Err(EntropyError::InvalidDistribution(format!(
                "negative mass at index {i}"
            )));
        }
        let total: Rational = probs.iter().sum();
        if !total.is_one() {
            return Err(EntropyError::InvalidDistribution(format!("total mass {total}")));
        }
        Ok(Self { kind, probs })
    }

    pub(crate) fn new_unchecked(kind: SupportKind, probs: Vec<Rational>) -> Self {
        Self { kind, probs }
    }

    /// Uniform over `support`, zero elsewhere on `0..size`.
    pub fn uniform_on(kind: SupportKind, size: usize, support: &[usize]) -> Self {
        let mut probs = vec![Rational::zero(); size];
        let p = Rational::new(BigInt::one(), BigInt::from(support.len()));
        for &i in support {
            probs[i] = p.clone();
        }
        Self { kind, probs }
    }

    pub fn kind(&self) -> SupportKind {
        self.kind
    }

    pub fn probs(&self) -> &[Rational] {
        &self.probs
    }

    pub fn prob(&self, i: usize) -> &Rational {
        &self.probs[i]
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "support": match self.kind { SupportKind::Vertex => "vertex", SupportKind::Arc => "arc" },
            "probs": self.probs.iter().map(json::rational).collect::<Vec<_>>(),
        })
    }
}

/// `π(v) = d_v / 2|E|`.
pub fn stationary_pi(g: &Graph) -> Result<Distribution, EntropyError> {
    if g.edge_count() == 0 {
        return Err(EntropyError::Edgeless);
    }
    let total = BigInt::from(2 * g.edge_count());
    let probs = g
        .degrees()
        .map(|d| Rational::new(BigInt::from(d), total.clone()))
        .collect();
    Ok(Distribution::new_unchecked(SupportKind::Vertex, probs))
}

/// How the walk process draws its first step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StartMode {
    /// `v ~ π`, then a uniform arc leaving `v`; the first arc is `e_1`.
    VertexPi,
    /// `e_0` uniform over all arcs.
    ArcUniform,
    /// `e_0` uniform over arcs leaving the left side.
    ArcUniformLr,
    /// `e_0` uniform over arcs leaving the right side.
    ArcUniformRl,
}

impl StartMode {
    pub fn label(self) -> &'static str {
        match self {
            StartMode::VertexPi => "VERTEX_PI",
            StartMode::ArcUniform => "ARC_UNIFORM",
            StartMode::ArcUniformLr => "ARC_UNIFORM_LR",
            StartMode::ArcUniformRl => "ARC_UNIFORM_RL",
        }
    }

    /// Index of the first arc of the process (`e_1` or `e_0`).
    pub fn first_arc_step(self) -> usize {
        match self {
            StartMode::VertexPi => 1,
            _ => 0,
        }
    }

    pub(crate) fn starting_side(self) -> Option<Side> {
        match self {
            StartMode::ArcUniformLr => Some(Side::Left),
            StartMode::ArcUniformRl => Some(Side::Right),
            _ => None,
        }
    }
}

impl fmt::Display for StartMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StartMode::VertexPi => "pi",
            StartMode::ArcUniform => "arc",
            StartMode::ArcUniformLr => "lr",
            StartMode::ArcUniformRl => "rl",
        })
    }
}

impl FromStr for StartMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pi" => Ok(StartMode::VertexPi),
            "arc" => Ok(StartMode::ArcUniform),
            "lr" => Ok(StartMode::ArcUniformLr),
            "rl" => Ok(StartMode::ArcUniformRl),
            _ => Err(format!("unknown start mode `{s}` (expected pi, arc, lr or rl)")),
        }
    }
}

pub(crate) fn require_min_degree_two(g: &Graph) -> Result<(), EntropyError> {
    if g.edge_count() == 0 {
        return Err(EntropyError::Edgeless);
    }
    match g.degrees().enumerate().find(|&(_, d)| d < 2) {
        Some((vertex, degree)) => Err(EntropyError::MinDegree { vertex, degree }),
        None => Ok(()),
    }
}

pub(crate) fn ln_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        x.to_f64().expect("fits in f64").ln()
    } else {
        let shift = bits - 64;
        (x >> shift).to_f64().expect("fits in f64").ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// Natural log of a positive rational, taken as `ln(num) - ln(den)`.
pub(crate) fn ln_rational(r: &Rational) -> f64 {
    if !r.is_positive() {
        return f64::NEG_INFINITY;
    }
    ln_biguint(r.numer().magnitude()) - ln_biguint(r.denom().magnitude())
}

pub(crate) fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `Σ_x P(x)·f(key(x))`, pooling exact mass per key before converting to
/// `f64` so that point masses evaluate without rounding.
pub(crate) fn pooled_expectation<K: Ord + Clone>(
    probs: &[Rational],
    key: impl Fn(usize) -> K,
    f: impl Fn(&K) -> f64,
) -> f64 {
    let mut pooled: BTreeMap<K, Rational> = BTreeMap::new();
    for (x, p) in probs.iter().enumerate() {
        if !p.is_zero() {
            *pooled.entry(key(x)).or_insert_with(Rational::zero) += p;
        }
    }
    pooled.iter().map(|(k, w)| to_f64(w) * f(k)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    fn frac(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn pi_on_small_graphs() {
        let p = stationary_pi(&generators::petersen()).unwrap();
        assert!(p.probs().iter().all(|x| *x == frac(1, 10)));

        let k23 = stationary_pi(&generators::complete_bipartite(2, 3).unwrap()).unwrap();
        // six edges: 3/12 on the left, 2/12 on the right
        assert_eq!(k23.probs()[..2], [frac(1, 4), frac(1, 4)]);
        assert!(k23.probs()[2..].iter().all(|x| *x == frac(1, 6)));

        let edge = stationary_pi(&generators::complete(2).unwrap()).unwrap();
        assert_eq!(edge.probs(), &[frac(1, 2), frac(1, 2)]);

        assert_eq!(stationary_pi(&Graph::empty(3)), Err(EntropyError::Edgeless));
    }

    #[test]
    fn distribution_validation() {
        assert!(Distribution::new(SupportKind::Arc, vec![frac(1, 2), frac(1, 2)]).is_ok());
        assert!(Distribution::new(SupportKind::Arc, vec![frac(1, 2), frac(1, 3)]).is_err());
        assert!(Distribution::new(SupportKind::Arc, vec![frac(3, 2), frac(-1, 2)]).is_err());
    }

    #[test]
    fn logs_of_large_numbers() {
        let x = BigUint::from(3u32).pow(2000);
        let expected = 2000.0 * 3f64.ln();
        assert!((ln_biguint(&x) - expected).abs() < 1e-9 * expected);
        assert_eq!(ln_rational(&frac(6, 1)), 6f64.ln());
        assert!((ln_rational(&frac(221, 25)) - (221f64 / 25.0).ln()).abs() < 1e-15);
    }

    #[test]
    fn pooling_keeps_point_masses_exact() {
        let probs = vec![frac(1, 10); 10];
        let e = pooled_expectation(&probs, |_| 3u32, |&d| f64::from(d).ln());
        assert_eq!(e, 3f64.ln());
    }

    #[test]
    fn mode_names() {
        for m in ["pi", "arc", "lr", "rl"] {
            assert_eq!(m.parse::<StartMode>().unwrap().to_string(), m);
        }
        assert!("uniform".parse::<StartMode>().is_err());
    }
}
