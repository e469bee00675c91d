use rand::Rng;
use serde_json::{json, Value};

use super::{require_min_degree_two, to_f64, Distribution, EntropyError, StartMode};
use crate::graph::{bipartition, ArcSpace};
use crate::json;

/// Empirical arc counts per step over independent runs of the process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcFrequencies {
    pub mode: StartMode,
    pub samples: u64,
    /// `counts[k][a]`: runs whose arc at step `first_arc_step + k` was `a`.
    pub counts: Vec<Vec<u64>>,
}

impl ArcFrequencies {
    pub fn steps(&self) -> std::ops::Range<usize> {
        let s = self.mode.first_arc_step();
        s..s + self.counts.len()
    }

    /// Largest binomial z-score of any (step, arc) count against `law(step)`.
    /// A count on a zero-probability arc gives infinity.
    pub fn max_z_score<'a>(&self, law: impl Fn(usize) -> &'a Distribution) -> f64 {
        let n = self.samples as f64;
        let mut worst = 0.0f64;
        for (k, row) in self.counts.iter().enumerate() {
            let d = law(self.mode.first_arc_step() + k);
            for (a, &c) in row.iter().enumerate() {
                let p = to_f64(d.prob(a));
                let var = n * p * (1.0 - p);
                let dev = (c as f64 - n * p).abs();
                let z = if var > 0.0 {
                    dev / var.sqrt()
                } else if dev == 0.0 {
                    0.0
                } else {
                    f64::INFINITY
                };
                worst = worst.max(z);
            }
        }
        worst
    }

    pub fn to_json(&self) -> Value {
        json!({
            "mode": self.mode.label(),
            "samples": self.samples,
            "first_arc_step": self.mode.first_arc_step(),
            "counts": self.counts,
        })
    }
}

/// Sample mean of the per-run log branching sum, whose expectation is the
/// conditional entropy of the process.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: u64,
}

impl EntropyEstimate {
    /// `|mean - exact|` in units of the standard error.
    pub fn z_score(&self, exact: f64) -> f64 {
        let dev = (self.mean - exact).abs();
        if self.std_error > 0.0 {
            dev / self.std_error
        } else if dev <= 1e-12 * exact.abs().max(1.0) {
            0.0
        } else {
            f64::INFINITY
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "mean": json::float(self.mean),
            "std_error": json::float(self.std_error),
            "samples": self.samples,
        })
    }
}

struct Sampler<'a> {
    arcs: &'a ArcSpace,
    mode: StartMode,
    horizon: usize,
    /// cumulative degrees for `π` (vertex start) or the starting arc class
    prefix: Vec<usize>,
    class: Vec<usize>,
}

impl<'a> Sampler<'a> {
    fn new(arcs: &'a ArcSpace, horizon: usize, mode: StartMode) -> Result<Self, EntropyError> {
        let g = arcs.graph();
        require_min_degree_two(g)?;
        let mut prefix = Vec::new();
        let mut class = Vec::new();
        match mode.starting_side() {
            None if mode == StartMode::VertexPi => {
                if horizon == 0 {
                    return Err(EntropyError::HorizonZero);
                }
                let mut acc = 0;
                for d in g.degrees() {
                    acc += d;
                    prefix.push(acc);
                }
            }
            None => class = (0..arcs.arc_count()).collect(),
            Some(side) => {
                let bv = bipartition(g)?;
                if bv.side_count(side) == 0 {
                    return Err(EntropyError::EmptySide(side));
                }
                class = bv.arcs_from(side).to_vec();
            }
        }
        Ok(Self {
            arcs,
            mode,
            horizon,
            prefix,
            class,
        })
    }

    /// Fills `path` with one run from the first arc step on; returns `v_0`.
    fn run<R: Rng + ?Sized>(&self, rng: &mut R, path: &mut Vec<usize>) -> usize {
        path.clear();
        let first = if self.mode == StartMode::VertexPi {
            let x = rng.random_range(0..*self.prefix.last().unwrap());
            let v = self.prefix.partition_point(|&c| c <= x);
            let out = self.arcs.out_arcs(v);
            out[rng.random_range(0..out.len())]
        } else {
            self.class[rng.random_range(0..self.class.len())]
        };
        path.push(first);
        let steps = match self.mode {
            StartMode::VertexPi => self.horizon,
            _ => self.horizon + 1,
        };
        while path.len() < steps {
            let succ = self.arcs.successors(*path.last().unwrap());
            path.push(succ[rng.random_range(0..succ.len())]);
        }
        self.arcs.tail(first)
    }
}

/// Runs the process `samples` times and tallies the arc at every step.
pub fn simulate_arc_marginals<R: Rng + ?Sized>(
    arcs: &ArcSpace,
    horizon: usize,
    mode: StartMode,
    samples: u64,
    rng: &mut R,
) -> Result<ArcFrequencies, EntropyError> {
    let sampler = Sampler::new(arcs, horizon, mode)?;
    let steps = match mode {
        StartMode::VertexPi => horizon,
        _ => horizon + 1,
    };
    let mut counts = vec![vec![0u64; arcs.arc_count()]; steps];
    let mut path = Vec::with_capacity(steps);
    for _ in 0..samples {
        sampler.run(rng, &mut path);
        for (k, &a) in path.iter().enumerate() {
            counts[k][a] += 1;
        }
    }
    Ok(ArcFrequencies {
        mode,
        samples,
        counts,
    })
}

/// Estimates `H[walk | start]` by averaging, over independent runs,
/// `ln d_{v_0} + Σ ln(d_{v_j} - 1)` (vertex start) or `Σ ln(d_{v_j} - 1)`
/// (arc starts): the log of the number of choices the run had.
pub fn estimate_entropy<R: Rng + ?Sized>(
    arcs: &ArcSpace,
    horizon: usize,
    mode: StartMode,
    samples: u64,
    rng: &mut R,
) -> Result<EntropyEstimate, EntropyError> {
    let sampler = Sampler::new(arcs, horizon, mode)?;
    let mut path = Vec::new();
    // Welford, so runs with identical sums give variance exactly 0
    let (mut mean, mut m2) = (0.0f64, 0.0f64);
    for k in 1..=samples {
        let v0 = sampler.run(rng, &mut path);
        let branching = |a: usize| (arcs.degree(arcs.head(a)) as f64 - 1.0).ln();
        let x = match mode {
            // choices at v_1 .. v_{h-1}, the heads of all but the last arc
            StartMode::VertexPi => {
                (arcs.degree(v0) as f64).ln()
                    + path[..path.len() - 1].iter().map(|&a| branching(a)).sum::<f64>()
            }
            // choices at v_1 .. v_h, the heads of e_0 .. e_{h-1}
            _ => path[..path.len() - 1].iter().map(|&a| branching(a)).sum::<f64>(),
        };
        let delta = x - mean;
        mean += delta / k as f64;
        m2 += delta * (x - mean);
    }
    let n = samples as f64;
    let var = if samples > 1 { m2 / (n - 1.0) } else { 0.0 };
    Ok(EntropyEstimate {
        mean,
        std_error: (var / n).sqrt(),
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::{conditional_entropy_chain, process_marginals};
    use crate::graph::{generators, to_directed, Graph};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn petersen_minus_edge() -> Graph {
        let p = generators::petersen();
        Graph::from_edges(10, p.edges().skip(1)).unwrap()
    }

    #[test]
    fn frequencies_match_exact_marginals() {
        let arcs = to_directed(&petersen_minus_edge());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for mode in [StartMode::VertexPi, StartMode::ArcUniform] {
            let pm = process_marginals(&arcs, 4, mode).unwrap();
            let freq = simulate_arc_marginals(&arcs, 4, mode, 20_000, &mut rng).unwrap();
            assert_eq!(freq.steps(), pm.arc_steps());
            assert!(freq.max_z_score(|j| pm.arc(j)) < 5.0);
        }
    }

    #[test]
    fn entropy_estimate_agrees() {
        let arcs = to_directed(&petersen_minus_edge());
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let exact = conditional_entropy_chain(&arcs, 3, StartMode::VertexPi).unwrap().entropy();
        let est = estimate_entropy(&arcs, 3, StartMode::VertexPi, 50_000, &mut rng).unwrap();
        assert!(est.z_score(exact) < 4.0, "{est:?} vs {exact}");
    }

    #[test]
    fn cycle_estimate_is_exact() {
        let arcs = to_directed(&generators::cycle(6).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let est = estimate_entropy(&arcs, 4, StartMode::ArcUniform, 100, &mut rng).unwrap();
        assert_eq!((est.mean, est.std_error), (0.0, 0.0));
    }

    #[test]
    fn same_seed_same_counts() {
        let arcs = to_directed(&generators::heawood());
        let run = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            simulate_arc_marginals(&arcs, 3, StartMode::ArcUniformLr, 1000, &mut rng).unwrap()
        };
        assert_eq!(run(5), run(5));
        assert_ne!(run(5), run(6));
    }
}
