//! Qudit states generated from graphs, and their exchange symmetry.
//!
//! Two constructions are provided:
//!
//! * CZ graph states `∏ CZ^(a,b) |+>^{⊗N}` from simple undirected graphs
//!   ([`construct::cz_graph_state`]). Such a state is permutation symmetric
//!   exactly when the (nontrivial) graph is complete, and never fermionic.
//! * GR graph states from oriented graphs ([`construct::gr_graph_state`]),
//!   built vertex by vertex with the non-commuting gate
//!   `GR^(l,k) |i>_k |j>_l = |j ⊖ i>_k |j>_l`. The complete graph with every
//!   edge pointing from the higher to the lower index reproduces the
//!   recursive antisymmetric state [`construct::antisymmetric_state`].
//!
//! [`symmetry::classify`] reports whether a state is bosonic, fermionic,
//! fermionic on a leading block of qudits, or neither.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod construct;
pub mod error;
pub mod gates;
pub mod graph;
pub mod perm;
pub mod state;
pub mod symmetry;

pub use construct::{
    alternator_state, antisymmetric_state, antisymmetric_state_with, cz_graph_state,
    gr_graph_state, gr_graph_state_with, oracle_antisymmetric_state, ConstructionTrace,
    GrGraphState, ModulusSchedule, TraceStep,
};
pub use error::{Error, Result};
pub use gates::Gate;
pub use graph::{enumerate_undirected, OrientedGraph, UndirectedGraph, Witness, WitnessKind};
pub use perm::Permutation;
pub use state::{Amplitude, StateVector, DEFAULT_TOL};
pub use symmetry::{
    check_full_group, classify, is_antisymmetric, is_symmetric, Exchange, SymmetryClass,
};
