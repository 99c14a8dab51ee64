//! Detection and enumeration of all 3- and 4-vertex induced subgraphs,
//! parameterized by the closure of the host graph.
//!
//! A graph is c-closed when every pair of nonadjacent vertices has fewer
//! than `c` common neighbors; the closure is the smallest such `c`. Social
//! networks tend to have small closure, and several of the detectors and
//! enumerators here exploit that: the candidate lists they draw from the
//! common-neighborhood index of nonadjacent pairs all have length below `c`.
//!
//! The crate is organized as:
//!
//! * [`graph`], [`pattern`], [`io`], [`steps`] — the graph type, the catalog
//!   of small patterns with classification, edge-list text format, and
//!   operation counters;
//! * [`generators`] — extremal families, blow-ups, projective-plane
//!   doublings, and seeded random graphs;
//! * [`index`] — induced-path enumeration, the common-neighborhood index,
//!   and closure computation;
//! * [`detect`] — one detector per pattern, each returning a witness or a
//!   certified absence;
//! * [`enumerate`] — streaming enumerators plus the exhaustive subset oracle
//!   they are all tested against;
//! * [`verify`] — the differential harness comparing every fast routine to
//!   the oracle on one graph.

pub mod detect;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod index;
pub mod io;
pub mod pattern;
pub mod steps;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use index::{ClosureReport, CommonNeighborIndex};
pub use pattern::{Occurrence, PatternId};
pub use steps::StepCounter;

/// Flow control returned by enumeration visitors; `Break` aborts the
/// enumeration early.
pub type Visit = std::ops::ControlFlow<()>;
