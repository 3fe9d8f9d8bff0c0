//! Feedback arc sets in oriented multigraphs of bounded degree.
//!
//! An oriented multigraph is a directed multigraph without loops or
//! 2-cycles. The crate provides:
//!
//! * [`graph`]: the graph model, orderings and arc multisets;
//! * [`reduce`]: local reductions with their budgets and ordering lifts;
//! * [`bounded5`]: a solver guaranteeing at most `⌊m/3⌋` backward arcs
//!   when every degree is at most 5;
//! * [`regular5`]: a solver guaranteeing at most `⌊24n/29⌋` backward arcs
//!   on degree-5 graphs;
//! * [`exact`]: subset dynamic programming and cycle-family lower bounds;
//! * [`generators`], [`bounds`] and [`io`] for instances, closed-form
//!   bounds and text formats.

pub mod bounded5;
pub mod bounds;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod io;
pub mod reduce;
pub mod regular5;

pub use bounded5::{solve_bounded5, solve_bounded5_with, Solution, SolveOptions};
pub use error::{FasError, Result};
pub use exact::{cycle_family_bound, exact_fas};
pub use graph::{
    backward_arcs, backward_count, verify_fas, ArcMultiset, FeedbackArcSet, Ordering, OrientedMultigraph,
    VertexId,
};
pub use reduce::{ReductionKind, ReductionRecord, ReductionTrace};
pub use regular5::{solve_regular5, solve_regular5_with, Regular5Solution};
