//! The Hopf algebras `ℳ_{Y,H}` and `ℬ_{Y,H}` for a Young set `Y` and a finite
//! abelian group `H`.
//!
//! Basis elements of `ℳ` are pairs of a canonical function `F: Y_n → Ĥ` and
//! an irreducible character of `Aut F`; basis elements of `ℬ` are canonical
//! functions alone.

mod abelian;
mod bhopf;
mod element;
mod function;
mod instance;
mod mhopf;

pub use abelian::AbelianGroup;
pub use element::{
    inner_product, BHopfElement, BHopfTensor, HopfElement, HopfTensor, KeyJson, LinComb, MBasisKey,
};
pub use function::FunctionF;
pub use instance::{AutData, Instance};
pub use mhopf::Coproduct;
