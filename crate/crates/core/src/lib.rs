//! Equidistant dimension of graphs.
//!
//! A set `S` of vertices is a *distance-equalizer set* when every two
//! distinct vertices outside `S` have a common equidistant vertex in `S`; the
//! equidistant dimension is the smallest size of such a set. This crate
//! computes it exactly, generates Johnson and Kneser graphs with closed-form
//! distances, and checks explicit equalizer constructions as certificates.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod equalizer;
pub mod error;
pub mod graph;
pub mod solver;
pub mod subsets;
pub mod vertex_set;

pub use equalizer::{Certificate, EqualizerInstance, PairKey};
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Distances, Graph};
pub use solver::{solve_exact, SolveOptions, SolveReport, SolveStatus};
pub use subsets::{GraphSpec, KSubset, Mask, SubsetIndex};
pub use vertex_set::VertexSet;
