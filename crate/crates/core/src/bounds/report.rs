use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use super::{ahl_bound, ceil_integer, hoory_bounds, moore_bound};
use crate::graph::{bipartition, degree_stats, girth, Girth, Graph};
use crate::{json, Rational};

/// Outcome of comparing a vertex count with a lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The count equals the bound.
    Tight,
    /// The count exceeds the bound by the given margin.
    Slack(Rational),
    PreconditionUnmet,
    /// The count is below the bound by the given (negative) margin. A proven
    /// theorem never produces this on valid input.
    Violated(Rational),
}

impl Verdict {
    fn compare(count: usize, bound: &Rational) -> Self {
        let margin = Rational::from_integer(BigInt::from(count)) - bound;
        if margin.is_zero() {
            Verdict::Tight
        } else if margin.is_positive() {
            Verdict::Slack(margin)
        } else {
            Verdict::Violated(margin)
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Tight => "TIGHT",
            Verdict::Slack(_) => "SLACK",
            Verdict::PreconditionUnmet => "PRECONDITION_UNMET",
            Verdict::Violated(_) => "VIOLATED",
        }
    }

    pub fn is_violated(&self) -> bool {
        matches!(self, Verdict::Violated(_))
    }

    fn to_json(&self) -> Value {
        match self {
            Verdict::Slack(m) | Verdict::Violated(m) => {
                json!({ "status": self.label(), "margin": json::rational(m) })
            }
            _ => json!({ "status": self.label() }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteSummary {
    pub n_left: usize,
    pub n_right: usize,
    pub d_left: Rational,
    pub d_right: Rational,
}

/// Every applicable bound for one graph, with verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub graph_id: String,
    pub n: usize,
    pub edge_count: usize,
    pub girth: Girth,
    /// Minimum degree; `None` for the empty graph.
    pub delta: Option<usize>,
    pub d_bar: Option<Rational>,
    /// Present iff the graph is bipartite.
    pub bipartite: Option<BipartiteSummary>,
    pub moore_lb: Option<Rational>,
    pub ahl_lb: Option<Rational>,
    pub hoory_lb_left: Option<Rational>,
    pub hoory_lb_right: Option<Rational>,
    pub moore: Verdict,
    pub ahl: Verdict,
    pub hoory_left: Verdict,
    pub hoory_right: Verdict,
}

/// Computes the Moore, average-degree and (for bipartite graphs) side bounds
/// of `g`.
///
/// A bound whose hypotheses fail (minimum degree below two, infinite girth,
/// not bipartite) is reported as [`Verdict::PreconditionUnmet`] with no value.
pub fn audit_graph(g: &Graph) -> BoundReport {
    let n = g.vertex_count();
    let girth = girth(g);
    let stats = degree_stats(g).ok();
    let delta = stats.as_ref().map(|s| s.min_degree);
    let d_bar = stats.map(|s| s.avg_degree);
    let bipartite = bipartition(g).ok().map(|bv| BipartiteSummary {
        n_left: bv.n_left(),
        n_right: bv.n_right(),
        d_left: bv.d_left(),
        d_right: bv.d_right(),
    });

    let preconditions = delta.is_some_and(|d| d >= 2) && girth.is_finite();
    let moore_lb = delta
        .filter(|_| preconditions)
        .and_then(|d| moore_bound(d as u64, girth).ok());
    let ahl_lb = d_bar
        .as_ref()
        .filter(|_| preconditions)
        .and_then(|d| ahl_bound(d, girth).ok());
    let hoory = bipartite
        .as_ref()
        .filter(|_| preconditions)
        .and_then(|b| hoory_bounds(&b.d_left, &b.d_right, girth).ok());

    let verdict = |count: usize, lb: Option<&Rational>| {
        lb.map_or(Verdict::PreconditionUnmet, |b| Verdict::compare(count, b))
    };
    let (hoory_lb_left, hoory_lb_right) = hoory.unzip();
    BoundReport {
        graph_id: String::new(),
        n,
        edge_count: g.edge_count(),
        girth,
        delta,
        moore: verdict(n, moore_lb.as_ref()),
        ahl: verdict(n, ahl_lb.as_ref()),
        hoory_left: verdict(
            bipartite.as_ref().map_or(0, |b| b.n_left),
            hoory_lb_left.as_ref(),
        ),
        hoory_right: verdict(
            bipartite.as_ref().map_or(0, |b| b.n_right),
            hoory_lb_right.as_ref(),
        ),
        d_bar,
        bipartite,
        moore_lb,
        ahl_lb,
        hoory_lb_left,
        hoory_lb_right,
    }
}

impl BoundReport {
    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.graph_id = id.into();
        self
    }

    pub fn verdicts(&self) -> [(&'static str, &Verdict); 4] {
        [
            ("moore", &self.moore),
            ("ahl", &self.ahl),
            ("hoory_l", &self.hoory_left),
            ("hoory_r", &self.hoory_right),
        ]
    }

    pub fn has_violation(&self) -> bool {
        self.verdicts().iter().any(|(_, v)| v.is_violated())
    }

    pub fn to_json(&self) -> Value {
        let ceil = |r: &Option<Rational>| r.as_ref().map_or(Value::Null, |r| json::integer(&ceil_integer(r)));
        let girth = match self.girth {
            Girth::Finite(g) => json!(g),
            Girth::Infinite => json!("infinite"),
        };
        let side = |f: fn(&BipartiteSummary) -> Value| self.bipartite.as_ref().map_or(Value::Null, f);
        let mut verdicts = serde_json::Map::new();
        for (name, v) in self.verdicts() {
            verdicts.insert(name.into(), v.to_json());
        }
        json!({
            "graph_id": self.graph_id,
            "n": self.n,
            "edges": self.edge_count,
            "girth": girth,
            "delta": self.delta,
            "d_bar": json::opt_rational(self.d_bar.as_ref()),
            "bipartite": self.bipartite.is_some(),
            "n_l": side(|b| json!(b.n_left)),
            "n_r": side(|b| json!(b.n_right)),
            "d_l": side(|b| json::rational(&b.d_left)),
            "d_r": side(|b| json::rational(&b.d_right)),
            "moore_lb": json::opt_rational(self.moore_lb.as_ref()),
            "ahl_lb": json::opt_rational(self.ahl_lb.as_ref()),
            "hoory_lb_l": json::opt_rational(self.hoory_lb_left.as_ref()),
            "hoory_lb_r": json::opt_rational(self.hoory_lb_right.as_ref()),
            "moore_lb_ceil": ceil(&self.moore_lb),
            "ahl_lb_ceil": ceil(&self.ahl_lb),
            "hoory_lb_l_ceil": ceil(&self.hoory_lb_left),
            "hoory_lb_r_ceil": ceil(&self.hoory_lb_right),
            "verdicts": Value::Object(verdicts),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let opt = |r: &Option<Rational>| r.as_ref().map_or("-".to_string(), |r| r.to_string());
        writeln!(out, "graph {}", if self.graph_id.is_empty() { "-" } else { &self.graph_id }).unwrap();
        writeln!(
            out,
            "  n={} |E|={} girth={} delta={} d_bar={}",
            self.n,
            self.edge_count,
            self.girth,
            self.delta.map_or("-".to_string(), |d| d.to_string()),
            opt(&self.d_bar)
        )
        .unwrap();
        if let Some(b) = &self.bipartite {
            writeln!(
                out,
                "  bipartite n_L={} n_R={} d_L={} d_R={}",
                b.n_left, b.n_right, b.d_left, b.d_right
            )
            .unwrap();
        }
        let bounds = [
            ("moore", &self.moore_lb, &self.moore),
            ("ahl", &self.ahl_lb, &self.ahl),
            ("hoory_l", &self.hoory_lb_left, &self.hoory_left),
            ("hoory_r", &self.hoory_lb_right, &self.hoory_right),
        ];
        for (name, lb, verdict) in bounds {
            let detail = match verdict {
                Verdict::Slack(m) | Verdict::Violated(m) => format!(" margin={m}"),
                _ => String::new(),
            };
            writeln!(out, "  {name:<8} lb={:<12} {}{detail}", opt(lb), verdict.label()).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    fn int(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    #[test]
    fn petersen_is_tight() {
        let r = audit_graph(&generators::petersen());
        assert_eq!(r.moore_lb, Some(int(10)));
        assert_eq!(r.moore, Verdict::Tight);
        assert_eq!(r.ahl, Verdict::Tight);
        assert_eq!(r.hoory_left, Verdict::PreconditionUnmet);
        assert!(r.bipartite.is_none());
    }

    #[test]
    fn heawood_is_tight_everywhere() {
        let r = audit_graph(&generators::heawood());
        assert_eq!(r.ahl_lb, Some(int(14)));
        assert_eq!(r.ahl, Verdict::Tight);
        assert_eq!(r.hoory_lb_left, Some(int(7)));
        assert_eq!(r.hoory_lb_right, Some(int(7)));
        assert_eq!(r.hoory_left, Verdict::Tight);
        assert_eq!(r.hoory_right, Verdict::Tight);
    }

    #[test]
    fn star_fails_preconditions() {
        let r = audit_graph(&generators::complete_bipartite(1, 5).unwrap());
        assert_eq!(r.delta, Some(1));
        assert_eq!(r.girth, Girth::Infinite);
        for (_, v) in r.verdicts() {
            assert_eq!(*v, Verdict::PreconditionUnmet);
        }
        assert!(r.moore_lb.is_none() && r.hoory_lb_left.is_none());
    }

    #[test]
    fn petersen_minus_edge_has_slack() {
        let p = generators::petersen();
        let g = Graph::from_edges(10, p.edges().skip(1)).unwrap();
        let r = audit_graph(&g);
        assert_eq!(r.girth, Girth::Finite(5));
        assert_eq!(r.ahl_lb, Some(Rational::new(221.into(), 25.into())));
        assert_eq!(r.ahl, Verdict::Slack(Rational::new(29.into(), 25.into())));
        // δ = 2 at girth 5: 1 + 2·(1 + 1) = 5
        assert_eq!(r.moore_lb, Some(int(5)));
    }

    #[test]
    fn violations_are_representable() {
        assert_eq!(
            Verdict::compare(4, &int(5)),
            Verdict::Violated(int(-1))
        );
        assert!(Verdict::compare(4, &int(5)).is_violated());
    }

    #[test]
    fn json_field_names() {
        let r = audit_graph(&generators::petersen()).with_id("petersen");
        let v = r.to_json();
        for key in [
            "n", "girth", "delta", "d_bar", "moore_lb", "ahl_lb", "hoory_lb_l", "hoory_lb_r",
            "verdicts",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["moore_lb"], json!({"num": 10, "den": 1}));
        assert_eq!(v["verdicts"]["moore"]["status"], "TIGHT");
        assert_eq!(v["hoory_lb_l"], Value::Null);
    }

    #[test]
    fn empty_graph_report() {
        let r = audit_graph(&Graph::empty(0));
        assert_eq!(r.delta, None);
        assert_eq!(r.moore, Verdict::PreconditionUnmet);
    }
}
