//! Recognition, containment and extremal-number search for edge-ordered graphs.
//!
//! An *edge-ordered graph* is a finite simple graph together with a linear
//! order on its edges, given by injective numeric labels.  Only the relative
//! order of the labels matters; every algorithm in this crate works on label
//! ranks.  An *edge-ordered bigraph* additionally carries a proper two-coloring
//! of the vertices into `Left` and `Right`.
//!
//! The crate provides:
//!
//! * core types, parsing and serialization ([`graph`], [`parse`]),
//! * order-preserving subgraph containment and embedding search ([`containment`]),
//! * recognition of semi-caterpillars and right caterpillars, and the
//!   linear-versus-superlinear classification of connected edge-ordered
//!   graphs with certificates ([`classify`]),
//! * leaning/inclined edge machinery with the counting bounds behind the
//!   classification ([`leaning`]),
//! * isomorph-free enumeration and an exact extremal-number search
//!   ([`enumerate`], [`turan`]),
//! * the parallel theory for 0-1 matrices with staircase certificates
//!   ([`matrix`]),
//! * self-check suites shared by the test harness and the `eogx verify`
//!   subcommand ([`verify`]).

pub mod classify;
pub mod containment;
pub mod enumerate;
pub mod graph;
pub mod iso;
pub mod leaning;
pub mod matrix;
pub mod parse;
pub mod random;
pub mod turan;
pub mod verify;

use thiserror::Error as ThisError;

pub use graph::{Edge, EdgeOrderedBigraph, EdgeOrderedGraph, Side, Vertex};

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop at vertex {0}")]
    SelfLoop(String),
    #[error("parallel edge between {0} and {1}")]
    ParallelEdge(String, String),
    #[error("duplicate edge label {0}")]
    DuplicateLabel(u64),
    #[error("vertex index {0} out of range")]
    VertexRange(usize),
    #[error("edge {0}-{1} joins two vertices on the same side")]
    ImproperColoring(String, String),
    #[error("vertex {0} has no declared side")]
    MissingSide(String),
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("input graph is not bipartite")]
    NotBipartite,
    #[error("input graph is not a forest")]
    NotAForest,
    #[error("input graph is not a path")]
    NotAPath,
    #[error("input needs at least {needed} edge(s)")]
    TooFewEdges { needed: usize },
    #[error("pattern has no edges")]
    TrivialPattern,
    #[error("not a right caterpillar, no extension sequence exists")]
    UncertifiedCaterpillar,
    #[error("pattern matrix has no 1 entries")]
    EmptyPattern,
    #[error("matrix is empty")]
    EmptyMatrix,
    #[error("placement is not beside an existing 1 entry")]
    DetachedPlacement,
    #[error("{0}")]
    BadArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
