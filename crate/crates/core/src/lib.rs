//! Burning numbers of graphs.
//!
//! An exact branch-and-bound solver that returns checkable certificates, and
//! constant-time evaluators for paths, cycles, linear forests with up to three
//! components, and unicyclic graphs with one or two pendant paths on a single
//! cycle vertex. The [`sweep`] module cross-checks the evaluators against the
//! solver over exhaustive parameter ranges.

pub mod arith;
pub mod closed_forms;
pub mod compute;
mod error;
pub mod families;
pub mod graph;
pub mod recognize;
mod result;
pub mod solver;
pub mod sweep;
pub mod unicyclic;

pub use error::{Error, Result};
pub use families::{enumerate_sweep, FamilySpec, SweepClass};
pub use graph::{DistanceMatrix, DistanceTable, Graph, GraphError, Vertex};
pub use recognize::{qr_decompose, recognize_family, FamilyDescriptor, QrDecomposition};
pub use result::{BurnResult, BurningSequence, Method};
pub use solver::{burning_number_exact, extract_partition, verify_sequence, RootedTreePartition};
