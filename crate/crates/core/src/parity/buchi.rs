use alloc::vec::Vec;

use crate::automaton::Automaton;
use crate::bitset::{PairSet, StateSet};
use crate::Result;

use super::{build, priority_of, CompactTree, DpwState, StepOutcome};

/// One transition of the compact NBW construction on `symbol`.
///
/// In order: labels advance under `δ`; every node meeting `α` spawns a
/// youngest child holding the intersection, nodes taken in name order with
/// names above all used ones; a state shared by siblings stays with the
/// older one; nodes whose label equals their children's union turn green
/// and lose their descendants; empty nodes are removed; survivors are
/// renamed consecutively. `e`/`f` start at `n + 1` and drop to the
/// smallest removed/green name.
pub fn compact_step(tree: &CompactTree, symbol: usize, a: &Automaton) -> Result<StepOutcome> {
    let accepting = a.buchi_set()?;
    Ok(step(tree, symbol, a, accepting))
}

fn step(tree: &CompactTree, symbol: usize, a: &Automaton, accepting: &StateSet) -> StepOutcome {
    let mut work = tree.to_work();
    work.advance(a, symbol);
    let by_name: Vec<usize> = (0..tree.len()).collect();
    work.spawn_accepting(&by_name, accepting);
    work.merge_siblings();
    work.collapse_buchi_greens();
    work.remove_empty();
    if !work.nodes[work.root()].alive {
        return StepOutcome::sink();
    }
    let cap = a.state_count + 1;
    let e = work.removed.iter().copied().fold(cap, usize::min);
    let f = work.greens.iter().copied().fold(cap, usize::min);
    StepOutcome::tree(CompactTree::from_work(&work), e, f)
}

fn initial_state(a: &Automaton) -> DpwState {
    DpwState::Tree {
        tree: CompactTree::initial(a.initial, PairSet::EMPTY),
        priority: priority_of(2, 1).expect("e = 2"),
    }
}

/// Determinizes an NBW with `n` states into a DPW with at most `2 nⁿ n!`
/// states and priorities below `2n`.
pub fn nbw_to_dpw(a: &Automaton) -> Result<Automaton> {
    Ok(nbw_to_dpw_with_states(a)?.0)
}

/// [`nbw_to_dpw`], also returning the DPW state behind each state index.
pub fn nbw_to_dpw_with_states(a: &Automaton) -> Result<(Automaton, Vec<DpwState>)> {
    let accepting = a.buchi_set()?.clone();
    a.expect_valid()?;
    Ok(build(a, initial_state(a), 2 * a.state_count, |t, sym| {
        step(t, sym, a, &accepting).state
    }))
}
