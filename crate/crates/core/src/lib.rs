//! Non-returning walk statistics on undirected simple graphs.
//!
//! The crate counts non-returning (non-backtracking) walks exactly, evaluates
//! the Moore, Alon–Hoory–Linial and Hoory lower bounds on the order of a graph
//! from its girth and degrees, and certifies the entropy argument behind the
//! average-degree bounds on concrete graphs: exact stationarity of the walk
//! process, conditional-entropy chains and the Jensen steps.
//!
//! ```
//! use nbwalk::graph::generators;
//! use nbwalk::bounds::{audit_graph, Verdict};
//!
//! let petersen = generators::petersen();
//! let report = audit_graph(&petersen);
//! assert_eq!(report.moore, Verdict::Tight);
//! assert_eq!(report.ahl, Verdict::Tight);
//! ```

pub mod bounds;
pub mod cli;
pub mod entropy;
pub mod graph;
pub mod json;
pub mod walks;

/// Exact rational used for degrees, probabilities and bound values.
pub type Rational = num_rational::BigRational;

pub use graph::{ArcSpace, BipartiteView, DegreeStats, Girth, Graph, GraphError, Side};
pub use walks::{WalkCountTable, WalkStart};
