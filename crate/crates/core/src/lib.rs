//! Combinatorial toolkit for 1-planar drawings of bipartite graphs.
//!
//! Drawings are planarizations with rotation systems ([`drawing`]). On top of
//! that the crate provides the extremal 1-disk family and the doubling
//! transformation ([`construct`]), closed-form density bounds ([`bounds`]), a
//! brute-force drawability oracle for tiny instances ([`search`]), and JSON /
//! SVG input-output ([`io`], [`svg`]).

pub mod bounds;
pub mod construct;
pub mod drawing;
pub mod embedding;
pub mod graph;
pub mod io;
pub mod search;
pub mod svg;

pub use bounds::{check, BoundsReport};
pub use construct::{construct_extremal, double, ConstructError, DoublingResult, Strategy};
pub use drawing::{Crossing, Drawing, DrawingError};
pub use embedding::{FaceWalk, NodeId};
pub use graph::{BipartiteGraph, EdgeId, GraphError, Part, VertexId};
pub use search::{SearchLimits, SearchOutcome};
