//! Permutations, enumerated permutation groups, table groups, conjugacy
//! classes and orbits.

mod classes;
mod finite;
mod group;
mod orbits;
mod perm;

pub use classes::{conjugacy_classes, conjugacy_classes_with, ClassSummary, ConjClasses};
pub use finite::{DirectProduct, FiniteGroup};
pub use group::{closure_indices, greedy_generators, young_embedding, Group, PermGroup, YoungEmbedding};
pub use orbits::{orbits, orbits_by_index, stabilizer, Orbit};
pub use perm::{all_perms, Perm};
