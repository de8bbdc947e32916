//! Exact solvers for flood-filling games on coloured graphs.
//!
//! A flood move picks a vertex and a colour and repaints the vertex's whole
//! monochromatic component, merging it with adjacent components of the new
//! colour. The crate computes exact optima for three variants of the game:
//!
//! - free play: moves anywhere, minimise moves until the board is one colour
//!   ([`solve_free`], table over connected subgraphs);
//! - fixed root: all moves at one vertex ([`solve_fixed`], shortest path in
//!   a digraph of (region, colour) states);
//! - linking: make a given terminal set monochromatically connected
//!   ([`solve_linking`], a budgeted subtree table).
//!
//! Brute-force oracles ([`oracle_free`], [`oracle_fixed`], [`oracle_link`])
//! provide ground truth by breadth-first search over whole-board states, and
//! [`verify`] packages the equivalence and decomposition properties as
//! runnable suites. [`instance`] and [`generate`] cover the on-disk format
//! and deterministic instance families for the CLI.

pub mod corpus;
pub mod enumeration;
pub mod error;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod oracle;
pub mod record;
pub mod solver_fixed;
pub mod solver_free;
pub mod solver_linking;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{ColourId, ColouredGraph, Colouring, Move, Target, Vertex};
pub use instance::{parse_instance, write_instance};
pub use oracle::{
    min_over_spanning_trees, oracle_fixed, oracle_free, oracle_link, OracleBudget,
};
pub use record::ResultRecord;
pub use solver_fixed::{build_state_digraph, solve_fixed, FixedSolveResult, StateDigraph, StateNode};
pub use solver_free::{solve_free, FreeDpTable, FreeSolveResult};
pub use solver_linking::{
    enumerate_poss, solve_linking, solve_linking_with_limit, LinkDpTable, PartitionChoice,
    DEFAULT_K_LIMIT,
};
pub use vertex_set::VertexSet;
