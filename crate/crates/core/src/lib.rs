//! Determinization of nondeterministic Büchi and Streett word automata.
//!
//! The crate builds deterministic parity automata from compact Safra trees
//! whose node names are dynamic ([`parity`]), and keeps the classic
//! Rabin-producing Safra constructions around as reference implementations
//! ([`safra`]). Correctness is checked against lasso-word oracles
//! ([`oracle`]) that work directly on the nondeterministic input.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod automaton;
pub mod bitset;
mod error;
pub mod explore;
pub mod fixtures;
mod graph;
pub mod lasso;
pub mod oracle;
pub mod parity;
pub mod safra;
mod tree;
pub mod witness;

pub use automaton::{
    dualize_parity, normalize_parity, validate_automaton, Acceptance, Alphabet, Automaton,
    Diagnostic, RabinPair, StreettPair,
};
pub use bitset::{PairSet, StateSet};
pub use error::Error;
pub use lasso::{enumerate_lassos, Lasso};
pub use oracle::{
    accepts, differential_check, nbw_member, nsw_member, run_deterministic, CycleVerdict,
    DiffReport, Disagreement,
};
pub use parity::{nbw_to_dpw, nsw_to_dpw, priority_of, DpwState};
pub use safra::{safra_determinize, streett_safra_determinize};
pub use witness::nsw_witness_union_nbw;

pub type Result<T, E = Error> = core::result::Result<T, E>;
