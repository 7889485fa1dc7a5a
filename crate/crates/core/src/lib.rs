//! Certifying graph algorithms around the Erdős–Hajnal property for graphs
//! that exclude an induced path `P_k` and its complement.
//!
//! Every producer returns a witness stated in root-graph vertex ids, and
//! [`certificates`] re-checks each witness using nothing but adjacency
//! queries. The main entry points are:
//!
//! * [`extractor::path_or_empty_bipartite`]: long induced path or empty
//!   linear pair in a connected low-degree graph.
//! * [`pipeline::extract_linear_bipartite`]: empty/complete linear pair or an
//!   induced `P_k` / co-`P_k` certificate in an arbitrary graph.
//! * [`ramsey::p4free_extract`] and [`ramsey::cograph_alpha_omega`]: turn a
//!   pair oracle into a large cograph, then into a clique or stable set.
//! * [`pipeline::eh_homogeneous`]: the full composition.

pub mod certificates;
pub mod error;
pub mod exact;
pub mod extractor;
pub mod generate;
pub mod graph;
pub mod homogeneous;
pub mod io;
pub mod patterns;
pub mod pipeline;
pub mod ramsey;

pub use error::{Error, Result};
pub use exact::Ratio;
pub use graph::{Graph, VertexSet};
