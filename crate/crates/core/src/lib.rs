//! Divisor graphs: graphs whose vertices carry distinct positive integers,
//! with an edge exactly when one label divides the other.
//!
//! The crate builds a divisor graph of every order `n >= 1` and size
//! `0 <= m <= n(n-1)/2`, turns transitive orientations into integer labels
//! and back, and recognizes divisor graphs on small inputs by searching for
//! a transitive orientation.

pub mod cli;
pub mod construct;
pub mod degree_seq;
mod error;
pub mod graph;
pub mod labeling;
pub mod primes;
pub mod recognition;

pub use construct::{build_digraph, construct_order_size, star_graph, ConstructionResult};
pub use degree_seq::{
    check_feasible, e_vector, ferrers_index, increment, initial_sequence, DegreeSequence, EVector,
    FeasibilityReport, IncrementCase, IncrementTrace,
};
pub use error::{Error, Result};
pub use graph::{Digraph, Graph, VertexId};
pub use labeling::{
    divisor_graph_of_set, label_from_orientation, label_sets, orient_by_divisibility,
    verify_certificate, LabelSets, Labeling,
};
pub use recognition::{
    find_transitive_orientation, is_divisor_graph, oracle_is_divisor_graph, Certificate,
};
