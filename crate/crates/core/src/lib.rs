//! Graph boundaries in the sense of Steinerberger and of Chartrand, Erwin,
//! Johns and Zhang (CEJZ), the boundary stability number β, generators for
//! the graph families that realize small boundaries, a structural recognizer
//! for graphs with at most four Steinerberger boundary vertices, and an
//! exhaustive verification harness.

pub mod boundary;
pub mod classifier;
pub mod error;
pub mod export;
pub mod families;
pub mod graph;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Coord, DistanceMatrix, Graph};
