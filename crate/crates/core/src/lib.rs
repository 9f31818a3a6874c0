//! Downward and upward closed subsets of well-quasi-ordered spaces,
//! represented by finite unions of ideals and of principal filters.
//!
//! A space is a [`kernel::Presentation`]. Base spaces live in [`base`];
//! [`sum_product`], [`sequences`], [`sets_multisets`] and [`transformers`]
//! build new spaces from old ones. [`termlang`] reads and prints everything,
//! and [`oracle`] cross-checks a presentation against brute-force
//! enumeration.

pub mod base;
pub mod error;
pub mod kernel;
pub mod oracle;
pub mod sequences;
pub mod sets_multisets;
pub mod sum_product;
pub mod termlang;
pub mod transformers;
pub mod value;

pub use error::WqoError;
pub use kernel::{ClosedSet, Presentation, Wqo};
pub use value::{Atom, DownSet, Element, Ideal, NatIdeal, Side, UpSet};
