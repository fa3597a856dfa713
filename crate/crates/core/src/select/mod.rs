//! Arrangeable orderings, independent classes, legal orderings, and the
//! choice between a heavy sparse set and a greedy-friendly independent set.

pub mod arrange;
pub mod dichotomy;
pub mod legal;

pub use arrange::{
    arrangeable_ordering, distinguishing_coloring, late_independent_property, observation_check, Coloring, OrderedGraph,
};
pub use dichotomy::{c_dichotomy, distance_two_coloring, sparse_or_legal, Branch, Dichotomy};
pub use legal::{build_legal_ordering, improve_ordering, is_legal_ordering, LegalOrderingContext};
