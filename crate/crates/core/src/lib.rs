//! Bounds, class recognition, Ramsey arithmetic and clique-cover codes for
//! index coding instances.
//!
//! An instance is a [`SideInfoGraph`]: vertex `j` is receiver `j`, and an arc
//! `i -> j` means receiver `j` already holds message `i`. The broadcast rate
//! is sandwiched between the maximum acyclic induced subgraph and the clique
//! cover number of the instance; [`bounds::bounds_report`] computes the whole
//! chain with witnesses.

pub mod approx;
pub mod bounds;
pub mod classify;
pub mod codec;
pub mod error;
pub mod generators;
pub mod graph;
pub mod limits;
pub mod lp;
pub mod par;
pub mod ramsey;
pub mod rational;
pub mod report;

pub use error::{Error, Result};
pub use graph::{Mode, SideInfoGraph, UndirectedGraph, VertexSet};
pub use limits::{Limits, MAX_VERTICES};
pub use par::Exec;
pub use rational::Rational;
