use crate::automaton::{Automaton, StreettPair};
use crate::bitset::PairSet;
use crate::{Error, Result};

use super::{rabin_automaton, SafraTree};

/// Number of node names used for an NSW with `states` states and `pairs`
/// pairs: `n(k + 1)`.
pub fn streett_name_count(states: usize, pairs: usize) -> usize {
    states * (pairs + 1)
}

fn check_pairs(pairs: &[StreettPair]) -> Result<()> {
    if pairs.len() > PairSet::MAX_INDEX {
        return Err(Error::TooManyPairs {
            pairs: pairs.len(),
            max: PairSet::MAX_INDEX,
        });
    }
    Ok(())
}

fn initial_tree(a: &Automaton, pairs: usize) -> SafraTree {
    let names = streett_name_count(a.state_count, pairs);
    let mut tree = SafraTree::initial(a.initial, names);
    tree.nodes[0].annotation = PairSet::upto(pairs);
    tree
}

/// One transition of Safra's NSW construction on `symbol`.
pub fn streett_safra_step(tree: &SafraTree, symbol: usize, a: &Automaton) -> Result<SafraTree> {
    let pairs = a.streett_pairs()?;
    check_pairs(pairs)?;
    Ok(step(tree, symbol, a, pairs))
}

fn step(tree: &SafraTree, symbol: usize, a: &Automaton, pairs: &[StreettPair]) -> SafraTree {
    let names = streett_name_count(a.state_count, pairs.len());
    let mut work = tree.to_work(names);
    if work.nodes.is_empty() {
        return SafraTree::sink(names);
    }
    work.advance(a, symbol);
    if work.nodes[0].label.is_empty() {
        return SafraTree::sink(names);
    }
    work.streett_transform(work.root(), pairs);
    work.remove_empty();
    SafraTree::from_work(&work, names)
}

/// Safra's determinization of an NSW into a DRW with one pair per name.
pub fn streett_safra_determinize(a: &Automaton) -> Result<Automaton> {
    let pairs = a.streett_pairs()?.to_vec();
    check_pairs(&pairs)?;
    a.expect_valid()?;
    let names = streett_name_count(a.state_count, pairs.len());
    Ok(rabin_automaton(
        a,
        initial_tree(a, pairs.len()),
        names,
        |t, sym| step(t, sym, a, &pairs),
    ))
}

/// The initial tree of the NSW construction.
pub fn streett_initial_tree(a: &Automaton) -> Result<SafraTree> {
    let pairs = a.streett_pairs()?;
    check_pairs(pairs)?;
    Ok(initial_tree(a, pairs.len()))
}
