use alloc::vec::Vec;

use crate::automaton::{Automaton, StreettPair};
use crate::bitset::PairSet;
use crate::safra::streett_name_count;
use crate::{Error, Result};

use super::{build, priority_of, CompactTree, DpwState, StepOutcome};

fn checked_pairs(a: &Automaton) -> Result<&[StreettPair]> {
    let pairs = a.streett_pairs()?;
    if pairs.len() > PairSet::MAX_INDEX {
        return Err(Error::TooManyPairs {
            pairs: pairs.len(),
            max: PairSet::MAX_INDEX,
        });
    }
    Ok(pairs)
}

/// The one-node tree labeled `{s0}` and annotated with every pair index.
pub fn compact_streett_initial(a: &Automaton) -> Result<CompactTree> {
    let pairs = checked_pairs(a)?;
    Ok(CompactTree::initial(a.initial, PairSet::upto(pairs.len())))
}

/// One transition of the compact NSW construction on `symbol`.
///
/// After advancing the labels the recursive Streett procedure runs from
/// the root: leaves are expanded (or, with an empty annotation, turn green),
/// sons are processed first, then states move out of a son into new sons
/// when they visit the pair its annotation dropped, duplicates are resolved
/// towards the smallest dropped index and then the oldest son, empty sons
/// go, and a node all of whose sons carry its own annotation turns green.
/// `e`/`f` start at `m + 1` with `m = n(k + 1)`.
pub fn compact_streett_step(
    tree: &CompactTree,
    symbol: usize,
    a: &Automaton,
) -> Result<StepOutcome> {
    let pairs = checked_pairs(a)?;
    Ok(step(tree, symbol, a, pairs))
}

fn step(tree: &CompactTree, symbol: usize, a: &Automaton, pairs: &[StreettPair]) -> StepOutcome {
    let mut work = tree.to_work();
    work.advance(a, symbol);
    if work.nodes[work.root()].label.is_empty() {
        return StepOutcome::sink();
    }
    work.streett_transform(work.root(), pairs);
    work.remove_empty();
    let cap = streett_name_count(a.state_count, pairs.len()) + 1;
    let e = work.removed.iter().copied().fold(cap, usize::min);
    let f = work.greens.iter().copied().fold(cap, usize::min);
    StepOutcome::tree(CompactTree::from_work(&work), e, f)
}

/// Determinizes an NSW with `n` states and `k` pairs into a DPW with
/// priorities below `2n(k + 1)`.
pub fn nsw_to_dpw(a: &Automaton) -> Result<Automaton> {
    Ok(nsw_to_dpw_with_states(a)?.0)
}

/// [`nsw_to_dpw`], also returning the DPW state behind each state index.
pub fn nsw_to_dpw_with_states(a: &Automaton) -> Result<(Automaton, Vec<DpwState>)> {
    let initial = compact_streett_initial(a)?;
    let pairs = checked_pairs(a)?.to_vec();
    a.expect_valid()?;
    let m = streett_name_count(a.state_count, pairs.len());
    let d0 = DpwState::Tree {
        tree: initial,
        priority: priority_of(2, 1).expect("e = 2"),
    };
    Ok(build(a, d0, 2 * m, |t, sym| step(t, sym, a, &pairs).state))
}
