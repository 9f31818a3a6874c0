//! Petri-net coverability on top of `wqo`, and the pieces shared by the
//! `wqo` binary and its tests.

pub mod coverability;

pub use coverability::{coverability, Coverage, NetError, PetriNet, Transition};
