//! Exact hypergraph homomorphism and subhypergraph counting for inputs of
//! bounded `l`-degeneracy, plus the pattern classifier, hardness gadgets and
//! brute-force oracles used to validate it.

pub mod counting;
pub mod dagdecomp;
pub mod degeneracy;
pub mod error;
pub mod generate;
pub mod hypercore;
pub mod oracle;
pub mod patterns;
pub mod reductions;

pub use error::{Error, Result};
pub use hypercore::{
    clique_completion, induced_trimmed, ColoredHypergraph, Dah, Digraph, Hypergraph, Level,
    TrimConfig, Vertex,
};
