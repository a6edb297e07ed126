//! Exact graph-resilience metrics: vertex attack tolerance and its
//! generalizations, combinatorial conductance, and the spectral gap of the
//! normalized adjacency matrix, plus mechanical checks of the inequalities
//! relating them on regular graphs.

pub mod error;
pub mod fraction;
pub mod generators;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod spectral;
pub mod verifier;
pub mod vertex_set;

pub use error::{Error, Result};
pub use fraction::Fraction;
pub use generators::FamilySpec;
pub use graph::Graph;
pub use metrics::{Enumeration, MetricResult, WeightedValue};
pub use vertex_set::VertexSet;
