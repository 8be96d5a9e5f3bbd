//! Exact and numerical tools for connected graphs of given order and
//! dissociation number that minimize the spectral radius.
//!
//! * [`graph`]: bit-matrix graphs, named constructors, the three-anchor
//!   families and graph6/DOT formats.
//! * [`dissociation`]: exact dissociation numbers, tree DP, and the
//!   hypergraph/skeleton structures built from a dissociation set.
//! * [`spectral`]: Perron roots and vectors, exact characteristic
//!   polynomials and Sturm-based root ordering.
//! * [`reduced`]: the 3x3 fixed-point model for family graphs and the
//!   case-polynomial table.
//! * [`search`]: isomorph-free enumeration and minimum-radius searches.
//! * [`verify`]: report-producing verification workflows.

pub mod dissociation;
pub mod graph;
pub mod reduced;
pub mod search;
pub mod spectral;
pub mod verify;

pub use graph::{Family, FamilySpec, Graph, GraphError};
