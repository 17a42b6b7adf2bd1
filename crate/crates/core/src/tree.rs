//! Mutable tree arena shared by the Safra-style transitions.
//!
//! Both the static-name reference trees and the compact dynamic-name trees
//! are loaded into a [`WorkTree`] at the start of a transition, rewritten in
//! place, and read back out. Children are kept oldest first; fresh nodes are
//! always appended, so for compact trees child order is also name order.

use alloc::vec::Vec;

use crate::automaton::{Automaton, StreettPair};
use crate::bitset::{PairSet, StateSet};

#[derive(Clone, Debug)]
pub(crate) struct WorkNode {
    pub name: usize,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    pub label: StateSet,
    pub annotation: PairSet,
    pub alive: bool,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct WorkTree {
    pub nodes: Vec<WorkNode>,
    /// Names of nodes removed so far, in removal order.
    pub removed: Vec<usize>,
    /// Names of nodes found green, in discovery order.
    pub greens: Vec<usize>,
    next_name: usize,
}

impl WorkTree {
    /// An empty arena whose fresh names start at `next_name`.
    pub fn new(next_name: usize) -> Self {
        WorkTree {
            nodes: Vec::new(),
            removed: Vec::new(),
            greens: Vec::new(),
            next_name,
        }
    }

    /// Adds a node with an explicit name (used when loading a tree).
    pub fn push(
        &mut self,
        name: usize,
        parent: Option<usize>,
        label: StateSet,
        annotation: PairSet,
    ) -> usize {
        let id = self.nodes.len();
        self.nodes.push(WorkNode {
            name,
            parent,
            children: Vec::new(),
            label,
            annotation,
            alive: true,
        });
        if let Some(p) = parent {
            self.nodes[p].children.push(id);
        }
        id
    }

    /// Adds a youngest child of `parent` with the next fresh name.
    pub fn spawn(&mut self, parent: usize, label: StateSet, annotation: PairSet) -> usize {
        let name = self.next_name;
        self.next_name += 1;
        self.push(name, Some(parent), label, annotation)
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn live_children(&self, v: usize) -> Vec<usize> {
        self.nodes[v]
            .children
            .iter()
            .copied()
            .filter(|&c| self.nodes[c].alive)
            .collect()
    }

    /// Live nodes, parents before children, siblings oldest first.
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = alloc::vec![self.root()];
        while let Some(v) = stack.pop() {
            if !self.nodes[v].alive {
                continue;
            }
            out.push(v);
            stack.extend(self.nodes[v].children.iter().rev().copied());
        }
        out
    }

    fn subtree(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = alloc::vec![v];
        while let Some(u) = stack.pop() {
            if self.nodes[u].alive {
                out.push(u);
                stack.extend(self.nodes[u].children.iter().copied());
            }
        }
        out
    }

    /// Removes `states` from the label of `v` and all its descendants.
    pub fn strip(&mut self, v: usize, states: &StateSet) {
        if states.is_empty() {
            return;
        }
        for u in self.subtree(v) {
            self.nodes[u].label.difference_with(states);
        }
    }

    /// Removes `v` together with its descendants.
    pub fn remove_subtree(&mut self, v: usize) {
        for u in self.subtree(v) {
            self.nodes[u].alive = false;
            self.removed.push(self.nodes[u].name);
        }
    }

    pub fn remove_descendants(&mut self, v: usize) {
        for c in self.live_children(v) {
            self.remove_subtree(c);
        }
    }

    pub fn children_union(&self, v: usize) -> StateSet {
        let mut out = StateSet::new();
        for c in self.live_children(v) {
            out.union_with(&self.nodes[c].label);
        }
        out
    }

    /// Replaces every label `L` by `δ(L, σ)`.
    pub fn advance(&mut self, a: &Automaton, symbol: usize) {
        for node in &mut self.nodes {
            if node.alive {
                node.label = a.post(&node.label, symbol);
            }
        }
    }

    /// Removes every live node with an empty label.
    pub fn remove_empty(&mut self) {
        for v in self.preorder() {
            if self.nodes[v].alive && self.nodes[v].label.is_empty() {
                self.remove_subtree(v);
            }
        }
    }

    /// Removes from every node the states already held by an older sibling,
    /// together with the descendants' copies.
    pub fn merge_siblings(&mut self) {
        for v in self.preorder() {
            let mut seen = StateSet::new();
            for c in self.live_children(v) {
                let dup = self.nodes[c].label.intersection(&seen);
                self.strip(c, &dup);
                seen.union_with(&self.nodes[c].label);
            }
        }
    }

    /// Gives every node of `order` intersecting `accepting` a youngest child
    /// labeled by that intersection, handing out fresh names in that order.
    pub fn spawn_accepting(&mut self, order: &[usize], accepting: &StateSet) {
        for &v in order {
            let hit = self.nodes[v].label.intersection(accepting);
            if !hit.is_empty() {
                self.spawn(v, hit, PairSet::EMPTY);
            }
        }
    }

    /// Marks green every node whose nonempty label equals the union of its
    /// children's labels, and drops the green nodes' descendants.
    pub fn collapse_buchi_greens(&mut self) {
        for v in self.preorder() {
            let node = &self.nodes[v];
            if !node.alive || node.label.is_empty() || self.live_children(v).is_empty() {
                continue;
            }
            if self.children_union(v) == self.nodes[v].label {
                self.greens.push(self.nodes[v].name);
                self.remove_descendants(v);
            }
        }
    }

    /// The recursive Streett transition, applied at `v` (labels must already
    /// be advanced).
    ///
    /// Children are all processed recursively before the fulfil/request
    /// moves of `v` look at them. A leaf with empty annotation has nothing
    /// left to wait for and is green.
    pub fn streett_transform(&mut self, v: usize, pairs: &[StreettPair]) {
        let h = self.nodes[v].annotation;
        if self.live_children(v).is_empty() {
            if h.is_empty() {
                self.greens.push(self.nodes[v].name);
                return;
            }
            let label = self.nodes[v].label.clone();
            self.spawn(v, label, h.without(h.max()));
        }

        let sons = self.live_children(v);
        for &c in &sons {
            self.streett_transform(c, pairs);
        }

        let dropped = |tree: &WorkTree, c: usize| h.difference(tree.nodes[c].annotation).max();
        for &c in &sons {
            let j = dropped(self, c);
            if j == 0 {
                continue;
            }
            let pair = &pairs[j - 1];
            let label = self.nodes[c].label.clone();
            for s in &label {
                let annotation = if pair.fulfil.contains(s) {
                    h.without(h.max_below(j))
                } else if pair.request.contains(s) {
                    h.without(j)
                } else {
                    continue;
                };
                let single = StateSet::singleton(s);
                self.strip(c, &single);
                self.spawn(v, single, annotation);
            }
        }

        // Each state stays in the son with the smallest dropped index, ties
        // going to the oldest son.
        let sons = self.live_children(v);
        let keys: Vec<(usize, usize)> = sons
            .iter()
            .enumerate()
            .map(|(age, &c)| (dropped(self, c), age))
            .collect();
        let mut order: Vec<usize> = (0..sons.len()).collect();
        order.sort_by_key(|&i| keys[i]);
        let mut seen = StateSet::new();
        for &i in &order {
            let c = sons[i];
            let dup = self.nodes[c].label.intersection(&seen);
            self.strip(c, &dup);
            seen.union_with(&self.nodes[c].label);
        }

        for &c in &sons {
            if self.nodes[c].label.is_empty() {
                self.remove_subtree(c);
            }
        }
        let sons = self.live_children(v);
        if sons.iter().all(|&c| self.nodes[c].annotation == h) {
            self.greens.push(self.nodes[v].name);
            self.remove_descendants(v);
        }
    }
}
