//! Simple graphs, graph6, canonical forms and automorphism groups.

mod canon;
mod graph;
mod graph6;

pub use canon::{
    are_isomorphic, automorphism_group, automorphism_group_exhaustive, automorphism_group_with, canonical_form,
    canonical_form_with, refined_colours, CanonicalWitness,
};
pub use graph::{Graph, MAX_VERTICES};
pub use graph6::{parse_graph6, parse_graph6_with, to_graph6};
