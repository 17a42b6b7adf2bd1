use crate::automaton::Automaton;
use crate::Result;

use super::{rabin_automaton, SafraTree};

/// One transition of Safra's NBW construction on symbol `symbol`.
///
/// 1. every label `L` becomes `δ(L, σ)`, and the marks are cleared;
/// 2. every node meeting `α` gets a youngest child labeled by the
///    intersection (preorder, fresh names `n+1..`);
/// 3. a state held by an older sibling is removed from the younger one and
///    its descendants;
/// 4. nodes with empty labels are removed;
/// 5. a node whose label equals the union of its children's loses its
///    descendants and is put in `F`;
/// 6. names of `1..=n` without a surviving original node go to `E`;
/// 7. fresh nodes take the smallest free names.
pub fn safra_step(tree: &SafraTree, symbol: usize, a: &Automaton) -> Result<SafraTree> {
    let accepting = a.buchi_set()?;
    Ok(step(tree, symbol, a, accepting))
}

fn step(
    tree: &SafraTree,
    symbol: usize,
    a: &Automaton,
    accepting: &crate::bitset::StateSet,
) -> SafraTree {
    let n = a.state_count;
    let mut work = tree.to_work(n);
    if work.nodes.is_empty() {
        return SafraTree::sink(n);
    }
    work.advance(a, symbol);
    let order = work.preorder();
    work.spawn_accepting(&order, accepting);
    work.merge_siblings();
    work.remove_empty();
    if !work.nodes[0].alive {
        return SafraTree::sink(n);
    }
    work.collapse_buchi_greens();
    SafraTree::from_work(&work, n)
}

/// Safra's determinization of an NBW into a DRW with one pair per name.
pub fn safra_determinize(a: &Automaton) -> Result<Automaton> {
    let accepting = a.buchi_set()?.clone();
    a.expect_valid()?;
    let n = a.state_count;
    Ok(rabin_automaton(
        a,
        SafraTree::initial(a.initial, n),
        n,
        |t, sym| step(t, sym, a, &accepting),
    ))
}
