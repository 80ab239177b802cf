//! Constructive Hamiltonicity in prime difference graphs.
//!
//! The prime difference graph `G_{m,n}` has vertex set `[m, n]` with `u ~ v`
//! whenever `|u - v|` is prime. This crate builds explicit witnesses for:
//!
//! * Hamilton paths between any two designated vertices ([`paths`]),
//! * Hamilton cycles through any designated edge ([`paths`]),
//! * every 2-factor shape of `G_n`, `n >= 7` ([`factors`]),
//! * Hamilton cycles using only two prime differences, and families of
//!   edge-disjoint ones ([`generators`]).
//!
//! Every witness can be checked by the verifiers in [`graph`], and the
//! [`oracle`] module provides exhaustive ground truth at small orders.

pub mod factors;
pub mod generators;
pub mod graph;
pub mod json;
pub mod oracle;
pub mod paths;
pub mod primes;
pub mod transforms;

pub use graph::{
    adjacent, verify_cycle, verify_edge_disjoint, verify_path, verify_two_factor, CycleWitness,
    Interval, PathWitness, TwoFactorWitness, Vertex, Violation,
};
pub use paths::{hamilton_cycle, hamilton_cycle_through_edge, hamilton_path, EndpointPair};
pub use transforms::Symmetry;
