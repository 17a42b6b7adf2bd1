//! Deterministic parity automata from compact Safra trees.
//!
//! A compact tree names its nodes `1..=N` by age, so a transition has to
//! rename the survivors. What the renaming destroys is summarised by two
//! numbers: `e`, the smallest name removed in the step, and `f`, the
//! smallest name found green. Their relative order decides the priority of
//! the step ([`priority_of`]); the DPW state is the new tree together with
//! that priority.

mod buchi;
mod streett;
mod tree;

use alloc::vec::Vec;

use crate::automaton::{Acceptance, Automaton};
use crate::explore::{explore, Explored};
use crate::{Error, Result};

pub use buchi::{compact_step, nbw_to_dpw, nbw_to_dpw_with_states};
pub use streett::{
    compact_streett_initial, compact_streett_step, nsw_to_dpw, nsw_to_dpw_with_states,
};
pub use tree::{CompactNode, CompactTree, TreeKind, Violation};

/// Priority of the rejecting sink reached when every run has died.
pub const SINK_PRIORITY: usize = 1;

/// Priority of a step that removed `e` and found `f` green: `2f − 2` when
/// `f < e`, otherwise `2e − 3`.
///
/// `e = 1` means the root died; that case is the rejecting sink and has no
/// priority of its own.
pub fn priority_of(e: usize, f: usize) -> Result<usize> {
    if e < 2 {
        return Err(Error::SinkLevel);
    }
    if f < e {
        Ok((2 * f).saturating_sub(2))
    } else {
        Ok(2 * e - 3)
    }
}

/// A state of the constructed DPW.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DpwState {
    Tree { tree: CompactTree, priority: usize },
    Sink,
}

impl DpwState {
    pub fn priority(&self) -> usize {
        match self {
            DpwState::Tree { priority, .. } => *priority,
            DpwState::Sink => SINK_PRIORITY,
        }
    }

    pub fn tree(&self) -> Option<&CompactTree> {
        match self {
            DpwState::Tree { tree, .. } => Some(tree),
            DpwState::Sink => None,
        }
    }
}

/// Result of a single compact transition. `e = 1` exactly when the step
/// fell into the sink.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepOutcome {
    pub state: DpwState,
    pub e: usize,
    pub f: usize,
}

impl StepOutcome {
    fn sink() -> Self {
        StepOutcome {
            state: DpwState::Sink,
            e: 1,
            f: 1,
        }
    }

    fn tree(tree: CompactTree, e: usize, f: usize) -> Self {
        let priority = priority_of(e, f).expect("e is at least 2 off the sink");
        StepOutcome {
            state: DpwState::Tree { tree, priority },
            e,
            f,
        }
    }
}

/// `2 nⁿ n!`, saturating.
pub fn buchi_state_bound(n: usize) -> u128 {
    let n = n as u128;
    2u128.saturating_mul(pow(n, n)).saturating_mul(factorial(n))
}

/// `2 nⁿ (k+1)^{n(k+1)} (n(k+1))!`, saturating.
pub fn streett_state_bound(n: usize, k: usize) -> u128 {
    let m = (n * (k + 1)) as u128;
    2u128
        .saturating_mul(pow(n as u128, n as u128))
        .saturating_mul(pow(k as u128 + 1, m))
        .saturating_mul(factorial(m))
}

fn pow(base: u128, exp: u128) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base))
}

fn factorial(n: u128) -> u128 {
    (1..=n).fold(1u128, |acc, i| acc.saturating_mul(i))
}

/// Explores the DPW from `initial` and packages it with priorities in
/// `0..index`.
fn build<F>(
    a: &Automaton,
    initial: DpwState,
    index: usize,
    mut step: F,
) -> (Automaton, Vec<DpwState>)
where
    F: FnMut(&CompactTree, usize) -> DpwState,
{
    let explored: Explored<DpwState> = explore(initial, a.alphabet.len(), |d, sym| match d {
        DpwState::Sink => DpwState::Sink,
        DpwState::Tree { tree, .. } => step(tree, sym),
    });
    let priorities = explored.states.iter().map(DpwState::priority).collect();
    let dpw = Automaton {
        alphabet: a.alphabet.clone(),
        state_count: explored.len(),
        initial: 0,
        transitions: explored.transition_lists(),
        acceptance: Acceptance::Parity { priorities, index },
        deterministic: true,
    };
    (dpw, explored.states)
}
