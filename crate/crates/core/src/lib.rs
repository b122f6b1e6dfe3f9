//! Vertex identification toolkit.
//!
//! Decides whether a graph can be turned into a member of a graph class, or
//! into a given graph, with at most `k` vertex identifications, and produces
//! witness structures certifying every positive answer.

pub mod acyclic;
pub(crate) mod bits;
pub mod canon;
pub mod cli;
pub mod dense;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod partition;
pub mod recognize;
pub mod reductions;
pub mod search;
pub mod solve;
pub mod target;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, IdentificationSequence, Instance, ParamMode, Vertex};
pub use solve::{solve, Certificate, Parameter, SolveResult};
pub use recognize::{recognize, GraphClass};
pub use witness::{quotient, verify_witness, WitnessStructure};
