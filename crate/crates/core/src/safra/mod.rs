//! Safra's original determinization constructions with static node names,
//! producing deterministic Rabin automata.
//!
//! These are the references the compact parity constructions in
//! [`crate::parity`] are cross-validated against. State identity is the
//! complete tree record including the `E`/`F` marks and sibling order.

mod buchi;
mod streett;

use alloc::vec::Vec;

use crate::automaton::{Acceptance, Automaton, RabinPair};
use crate::bitset::{PairSet, StateSet};
use crate::explore::{explore, Explored};
use crate::tree::WorkTree;

pub use buchi::{safra_determinize, safra_step};
pub use streett::{
    streett_initial_tree, streett_name_count, streett_safra_determinize, streett_safra_step,
};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SafraNode {
    pub name: usize,
    pub parent: Option<usize>,
    /// Child names, oldest first.
    pub children: Vec<usize>,
    pub label: StateSet,
    /// Streett annotation; always empty for Büchi trees.
    pub annotation: PairSet,
}

/// A Safra tree over names `1..=names`.
///
/// `nodes` is sorted by name and the root comes first in the sense that it
/// is the unique node without a parent. A tree with no nodes is the
/// rejecting sink reached once every run has died.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SafraTree {
    pub nodes: Vec<SafraNode>,
    /// Names marked as erased (`E`).
    pub erased: StateSet,
    /// Names marked as accepting (`F`).
    pub accepting: StateSet,
}

impl SafraTree {
    /// The single node `1` labeled `{initial}` with `E = V − {1}`.
    pub fn initial(initial: usize, names: usize) -> Self {
        SafraTree {
            nodes: alloc::vec![SafraNode {
                name: 1,
                parent: None,
                children: Vec::new(),
                label: StateSet::singleton(initial),
                annotation: PairSet::EMPTY,
            }],
            erased: (2..=names).collect(),
            accepting: StateSet::new(),
        }
    }

    pub fn is_sink(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, name: usize) -> Option<&SafraNode> {
        self.nodes
            .binary_search_by_key(&name, |n| n.name)
            .ok()
            .map(|i| &self.nodes[i])
    }

    pub fn root(&self) -> Option<&SafraNode> {
        self.nodes.iter().find(|n| n.parent.is_none())
    }

    fn sink(names: usize) -> Self {
        SafraTree {
            nodes: Vec::new(),
            erased: (1..=names).collect(),
            accepting: StateSet::new(),
        }
    }

    /// Loads the tree into a work arena (root at index 0, preorder) with
    /// fresh names starting above `names`.
    fn to_work(&self, names: usize) -> WorkTree {
        let mut work = WorkTree::new(names + 1);
        let Some(root) = self.root() else {
            return work;
        };
        let mut stack = alloc::vec![(root.name, None)];
        while let Some((name, parent)) = stack.pop() {
            let node = self.node(name).expect("child names refer to nodes");
            let id = work.push(name, parent, node.label.clone(), node.annotation);
            stack.extend(node.children.iter().rev().map(|&c| (c, Some(id))));
        }
        work
    }

    /// Reads a work arena back, renaming fresh nodes (names above `names`)
    /// to the smallest free names in creation order, and computes the marks:
    /// `E` holds every name of `1..=names` not kept by a surviving original
    /// node, `F` the surviving original green nodes.
    fn from_work(work: &WorkTree, names: usize) -> Self {
        if work.nodes.is_empty() || !work.nodes[0].alive {
            return SafraTree::sink(names);
        }
        let live: Vec<usize> = (0..work.nodes.len())
            .filter(|&v| work.nodes[v].alive)
            .collect();
        let kept: StateSet = live
            .iter()
            .map(|&v| work.nodes[v].name)
            .filter(|&name| name <= names)
            .collect();
        let erased = StateSet::full(names + 1)
            .difference(&kept)
            .difference(&StateSet::singleton(0));
        let accepting: StateSet = work
            .greens
            .iter()
            .copied()
            .filter(|name| kept.contains(*name))
            .collect();

        let mut free = erased.iter();
        let mut rename = alloc::collections::BTreeMap::new();
        let mut fresh: Vec<usize> = live
            .iter()
            .map(|&v| work.nodes[v].name)
            .filter(|&name| name > names)
            .collect();
        fresh.sort_unstable();
        for name in fresh {
            let target = free.next().expect("name supply exhausted");
            rename.insert(name, target);
        }
        let final_name = |v: usize| {
            let name = work.nodes[v].name;
            *rename.get(&name).unwrap_or(&name)
        };

        let mut nodes: Vec<SafraNode> = live
            .iter()
            .map(|&v| SafraNode {
                name: final_name(v),
                parent: work.nodes[v].parent.map(final_name),
                children: work.live_children(v).into_iter().map(final_name).collect(),
                label: work.nodes[v].label.clone(),
                annotation: work.nodes[v].annotation,
            })
            .collect();
        nodes.sort_by_key(|n| n.name);
        SafraTree {
            nodes,
            erased,
            accepting,
        }
    }
}

/// Builds the reachable DRW over Safra trees with one Rabin pair per name.
fn rabin_automaton<F>(a: &Automaton, initial: SafraTree, names: usize, step: F) -> Automaton
where
    F: FnMut(&SafraTree, usize) -> SafraTree,
{
    let explored: Explored<SafraTree> = explore(initial, a.alphabet.len(), step);
    let pairs = (1..=names)
        .map(|i| RabinPair {
            avoid: (0..explored.len())
                .filter(|&d| explored.states[d].erased.contains(i))
                .collect(),
            visit: (0..explored.len())
                .filter(|&d| explored.states[d].accepting.contains(i))
                .collect(),
        })
        .collect();
    Automaton {
        alphabet: a.alphabet.clone(),
        state_count: explored.len(),
        initial: 0,
        transitions: explored.transition_lists(),
        acceptance: Acceptance::Rabin(pairs),
        deterministic: true,
    }
}

/// Every reachable tree of the reference construction, in BFS order.
pub fn reachable_trees<F>(initial: SafraTree, symbols: usize, step: F) -> Vec<SafraTree>
where
    F: FnMut(&SafraTree, usize) -> SafraTree,
{
    explore(initial, symbols, step).states
}
