//! Grundy dominating sequences.
//!
//! * [`exact`]: memoized branch and bound for `γ_gr` on graphs and for the
//!   Grundy cover and transversal numbers of hypergraphs.
//! * [`chain`]: linear-time Grundy dominating sequences of chain graphs, and
//!   co-chain graphs.
//! * [`reduction`]: the bipartite and co-bipartite gadget graphs.
//! * [`sequence`]: the independent checker every solver output goes through.

pub mod chain;
pub mod cli;
pub mod error;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod hypergraph;
pub mod reduction;
pub mod sequence;
pub mod sweep;
mod text;

pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, Vertex};
pub use hypergraph::Hypergraph;
pub use sequence::VertexSequence;
