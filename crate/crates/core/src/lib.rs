//! Combinatorics of polygon triangulations through Young diagrams: the
//! tail bijection, row flips, associahedron flip graphs, type-A cluster
//! algebras with their Caldero–Chapoton characters, and integer arc
//! collections.

pub mod arcs;
pub mod cluster;
pub mod error;
pub mod flipgraph;
pub mod laurent;
pub mod partition;
pub mod repcc;
pub mod triangulation;
pub mod verify;

pub use arcs::{Arc, ArcFamily, Classification};
pub use cluster::{ExchangeGraph, LazySeedAInfty, Quiver, Seed};
pub use error::{Error, Result};
pub use flipgraph::{ExportFormat, ExportGraph, FlipGraph};
pub use laurent::{LaurentPoly, Monomial, Var};
pub use partition::{DihedralElement, Partition};
pub use repcc::{IntervalModule, Orientation};
pub use triangulation::{Diagonal, Triangulation};
