//! Partitions, compositions, monomial-basis symmetric functions and their
//! specializations.

mod partition;
mod poly;
mod sym;

pub use partition::{enumerate_compositions, enumerate_partitions, rearrangements, IntComposition, IntPartition};
pub use poly::IntPolynomial;
pub use sym::{assemble_from_quasi, kostka, schur, schur_with, SymFunc};
