//! General position sets in graphs, with tooling for maximal outerplanar
//! graphs: recognition, named families, and an exhaustive census.

pub mod census;
pub mod cli;
pub mod edgelist;
pub mod families;
pub mod graph;
pub mod mop;
pub mod solve;
pub mod verify;

pub use graph::{DistanceMatrix, Graph, GraphError, Vertex};
pub use mop::{recognize, CanonicalKey, MopCertificate, MopError, MopStats};
pub use solve::{gp_number, GpResult, SolveError, Solver, SolverConfig};
pub use verify::{is_gp_characterized, is_gp_naive, GpSetCheck};
