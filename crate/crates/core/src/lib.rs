//! Certified witnesses for the Ramsey numbers of long cycles versus complete
//! multipartite graphs.
//!
//! Given a red/blue coloring of `K_N` with `N >= (k-1)(n-1) + m1` and
//! `n >= 3*mk + 5*m(k-1)`, [`extract`] returns either a red cycle through at
//! least `n` vertices or a blue `K_{m1,...,mk}`, and [`verify_witness`]
//! checks the answer independently. The crate also builds the extremal
//! colorings showing the bound is sharp ([`constructions`]), exposes the
//! Pósa rotation machinery the extraction rests on ([`posa`]) and ships
//! exact exponential-time oracles for cross-checking ([`oracle`]).

pub mod constructions;
pub mod extractor;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod posa;
pub mod random;
pub mod selftest;

pub use extractor::{
    extract, extract_traced, verify_witness, ExtractError, Instance, InstanceError, TraceEvent,
    Witness, WitnessFailure,
};
pub use graph::{Graph, GraphError, IndexMap, TwoColoring, VertexSet};
pub use graph6::{decode_coloring, decode_graph6, encode_coloring, encode_graph6, Graph6Error};
pub use oracle::SearchLimits;
