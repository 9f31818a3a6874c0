//! Base spaces: finite quasi-orders, the naturals and ordinals.

pub mod finite;
pub mod naturals;
pub mod ordinal;

pub use finite::FiniteQo;
pub use naturals::Naturals;
pub use ordinal::{cnf_leq, Cnf, Ordinals};
