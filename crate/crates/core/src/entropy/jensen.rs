use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use super::{ln_rational, pooled_expectation, require_min_degree_two, EntropyError};
use crate::graph::{bipartition, degree_stats, Graph, Side};
use crate::{json, Rational};

/// Convex functions whose Jensen steps close the entropy proofs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvexFunction {
    /// `x·ln(x(x-1)^{i-1})`, vertex start.
    XLogXPow { i: u32 },
    /// `x·ln((x-1)^i)`, arc start.
    XLogPow { i: u32 },
    /// `x·ln(x-1)` over one side of a bipartite graph.
    XLogXMinusOne { side: Side },
}

impl ConvexFunction {
    pub fn id(self) -> &'static str {
        match self {
            ConvexFunction::XLogXPow { .. } => "x_ln_x_pow",
            ConvexFunction::XLogPow { .. } => "x_ln_pow",
            ConvexFunction::XLogXMinusOne { .. } => "x_ln_x_minus_one",
        }
    }

    /// `f(x) / x`; the Jensen step compares its `π`-average with its value
    /// at the average degree.
    fn log_part(self, x: &Rational) -> f64 {
        let one = Rational::one();
        match self {
            ConvexFunction::XLogXPow { i } => {
                ln_rational(x) + f64::from(i - 1) * ln_rational(&(x - &one))
            }
            ConvexFunction::XLogPow { i } => f64::from(i) * ln_rational(&(x - &one)),
            ConvexFunction::XLogXMinusOne { .. } => ln_rational(&(x - &one)),
        }
    }
}

impl fmt::Display for ConvexFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConvexFunction::XLogXPow { i } => write!(f, "x ln(x (x-1)^{})", i - 1),
            ConvexFunction::XLogPow { i } => write!(f, "x ln((x-1)^{i})"),
            ConvexFunction::XLogXMinusOne { side } => write!(f, "x ln(x-1) on {side:?}"),
        }
    }
}

/// Both sides of one Jensen step: `lhs` is the degree-weighted average,
/// `rhs` the value at the average degree.
#[derive(Debug, Clone, PartialEq)]
pub struct JensenRecord {
    pub function: ConvexFunction,
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
}

impl JensenRecord {
    pub fn holds(&self, tolerance: f64) -> bool {
        self.gap >= -tolerance
    }

    pub fn to_json(&self) -> Value {
        let (param, value) = match self.function {
            ConvexFunction::XLogXPow { i } | ConvexFunction::XLogPow { i } => ("i", json!(i)),
            ConvexFunction::XLogXMinusOne { side } => ("side", json!(format!("{side:?}"))),
        };
        let mut v = json!({ "function": self.function.id() });
        v[param] = value;
        v["lhs"] = json::float(self.lhs);
        v["rhs"] = json::float(self.rhs);
        v["gap"] = json::float(self.gap);
        v
    }
}

fn record(function: ConvexFunction, weights: &[Rational], degrees: &[usize], mean: &Rational) -> JensenRecord {
    let lhs = pooled_expectation(weights, |v| degrees[v], |&d| {
        function.log_part(&Rational::from_integer(BigInt::from(d)))
    });
    let rhs = function.log_part(mean);
    JensenRecord {
        function,
        lhs,
        rhs,
        gap: lhs - rhs,
    }
}

/// Evaluates each Jensen step for `1 <= i <= i_max`, and the side steps when
/// the graph is bipartite.
///
/// With weights `d_v / 2|E|`, `Σ_v (d_v / 2|E|)·ln(d_v(d_v-1)^{i-1})` is
/// compared with `ln(d̄(d̄-1)^{i-1})`, and likewise for `(d_v-1)^i`. The side
/// steps use weights `d_v / |E|` on one side against that side's average.
/// Point masses are pooled exactly, so regular graphs give gap `0.0`.
pub fn jensen_certificates(g: &Graph, i_max: u32) -> Result<Vec<JensenRecord>, EntropyError> {
    require_min_degree_two(g)?;
    let degrees: Vec<usize> = g.degrees().collect();
    let d_bar = degree_stats(g)?.avg_degree;
    let two_e = BigInt::from(2 * g.edge_count());
    let pi: Vec<Rational> = degrees
        .iter()
        .map(|&d| Rational::new(BigInt::from(d), two_e.clone()))
        .collect();

    let mut out = Vec::new();
    for i in 1..=i_max {
        out.push(record(ConvexFunction::XLogXPow { i }, &pi, &degrees, &d_bar));
        out.push(record(ConvexFunction::XLogPow { i }, &pi, &degrees, &d_bar));
    }
    if let Ok(bv) = bipartition(g) {
        let e = BigInt::from(g.edge_count());
        for side in [Side::Left, Side::Right] {
            let weights: Vec<Rational> = degrees
                .iter()
                .enumerate()
                .map(|(v, &d)| {
                    let d = if bv.side(v) == side { d } else { 0 };
                    Rational::new(BigInt::from(d), e.clone())
                })
                .collect();
            let mean = bv.side_average(side);
            out.push(record(ConvexFunction::XLogXMinusOne { side }, &weights, &degrees, &mean));
        }
    }
    Ok(out)
}
