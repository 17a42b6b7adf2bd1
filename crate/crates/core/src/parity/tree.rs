use alloc::vec::Vec;
use core::fmt;

use crate::bitset::{PairSet, StateSet};
use crate::tree::WorkTree;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompactNode {
    /// Name of the parent; `None` only for the root.
    pub parent: Option<usize>,
    pub label: StateSet,
    /// Streett annotation; always empty in Büchi trees.
    pub annotation: PairSet,
}

/// A compact Safra tree. Node names are `1..=len()`, node `i` living at
/// `nodes[i - 1]`, so names are consecutive by construction and siblings
/// are ordered by name, oldest first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompactTree {
    pub nodes: Vec<CompactNode>,
}

/// Which flavour of compact tree an invariant check is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeKind {
    Buchi,
    Streett,
}

/// A broken structural invariant, naming the offending node(s).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoNodes,
    RootNotFirst,
    ParentNotSmaller { name: usize },
    EmptyLabel { name: usize },
    NotSuperset { name: usize },
    NotProperSuperset { name: usize },
    NotChildUnion { name: usize },
    SiblingOverlap { older: usize, younger: usize },
    AnnotationNotContained { name: usize },
    AnnotationMissesMany { name: usize },
    NonemptyBuchiAnnotation { name: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoNodes => write!(f, "tree has no nodes"),
            Violation::RootNotFirst => write!(f, "root is not the unique parentless node 1"),
            Violation::ParentNotSmaller { name } => {
                write!(f, "node {name} has a parent with a larger name")
            }
            Violation::EmptyLabel { name } => write!(f, "node {name} has an empty label"),
            Violation::NotSuperset { name } => {
                write!(f, "label of node {name} misses states of its children")
            }
            Violation::NotProperSuperset { name } => {
                write!(f, "label of node {name} equals the union of its children")
            }
            Violation::NotChildUnion { name } => {
                write!(
                    f,
                    "label of node {name} differs from the union of its children"
                )
            }
            Violation::SiblingOverlap { older, younger } => {
                write!(f, "siblings {older} and {younger} share a state")
            }
            Violation::AnnotationNotContained { name } => {
                write!(
                    f,
                    "annotation of node {name} is not contained in its parent's"
                )
            }
            Violation::AnnotationMissesMany { name } => {
                write!(
                    f,
                    "annotation of node {name} misses more than one parent index"
                )
            }
            Violation::NonemptyBuchiAnnotation { name } => {
                write!(f, "Büchi node {name} carries an annotation")
            }
        }
    }
}

impl CompactTree {
    /// The single root `1` labeled `{initial}`.
    pub fn initial(initial: usize, annotation: PairSet) -> Self {
        CompactTree {
            nodes: alloc::vec![CompactNode {
                parent: None,
                label: StateSet::singleton(initial),
                annotation,
            }],
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, name: usize) -> &CompactNode {
        &self.nodes[name - 1]
    }

    /// Children of `name` in name order.
    pub fn children(&self, name: usize) -> Vec<usize> {
        (1..=self.len())
            .filter(|&c| self.node(c).parent == Some(name))
            .collect()
    }

    pub(crate) fn to_work(&self) -> WorkTree {
        let mut work = WorkTree::new(self.len() + 1);
        for (i, node) in self.nodes.iter().enumerate() {
            work.push(
                i + 1,
                node.parent.map(|p| p - 1),
                node.label.clone(),
                node.annotation,
            );
        }
        work
    }

    /// Reads the surviving nodes back, renaming each to its rank among the
    /// surviving names. A node named `v` thus becomes `v − rem(v)` where
    /// `rem(v)` counts the removed names below `v`.
    pub(crate) fn from_work(work: &WorkTree) -> Self {
        let mut live: Vec<usize> = (0..work.nodes.len())
            .filter(|&v| work.nodes[v].alive)
            .collect();
        live.sort_by_key(|&v| work.nodes[v].name);
        let mut rank = alloc::vec![0; work.nodes.len()];
        for (i, &v) in live.iter().enumerate() {
            rank[v] = i + 1;
        }
        CompactTree {
            nodes: live
                .iter()
                .map(|&v| CompactNode {
                    parent: work.nodes[v].parent.map(|p| rank[p]),
                    label: work.nodes[v].label.clone(),
                    annotation: work.nodes[v].annotation,
                })
                .collect(),
        }
    }

    /// Every structural invariant violated by the tree.
    pub fn violations(&self, kind: TreeKind) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.nodes.is_empty() {
            out.push(Violation::NoNodes);
            return out;
        }
        let parentless = self.nodes.iter().filter(|n| n.parent.is_none()).count();
        if self.nodes[0].parent.is_some() || parentless != 1 {
            out.push(Violation::RootNotFirst);
        }
        for name in 1..=self.len() {
            let node = self.node(name);
            if let Some(p) = node.parent {
                if p >= name {
                    out.push(Violation::ParentNotSmaller { name });
                    continue;
                }
                let h = self.node(p).annotation;
                if !node.annotation.is_subset(h) {
                    out.push(Violation::AnnotationNotContained { name });
                } else if h.difference(node.annotation).len() > 1 {
                    out.push(Violation::AnnotationMissesMany { name });
                }
            }
            if kind == TreeKind::Buchi && !node.annotation.is_empty() {
                out.push(Violation::NonemptyBuchiAnnotation { name });
            }
            if node.label.is_empty() {
                out.push(Violation::EmptyLabel { name });
            }
            let children = self.children(name);
            let mut union = StateSet::new();
            for (i, &c) in children.iter().enumerate() {
                for &older in &children[..i] {
                    if self.node(older).label.intersects(&self.node(c).label) {
                        out.push(Violation::SiblingOverlap { older, younger: c });
                    }
                }
                union.union_with(&self.node(c).label);
            }
            if children.is_empty() {
                continue;
            }
            match kind {
                TreeKind::Buchi if !union.is_subset(&node.label) => {
                    out.push(Violation::NotSuperset { name })
                }
                TreeKind::Buchi if union == node.label => {
                    out.push(Violation::NotProperSuperset { name })
                }
                TreeKind::Streett if union != node.label => {
                    out.push(Violation::NotChildUnion { name })
                }
                _ => {}
            }
        }
        out
    }

    /// Whether every internal node has a child whose annotation is strictly
    /// smaller than its own.
    pub fn internal_nodes_have_smaller_child(&self) -> bool {
        (1..=self.len()).all(|name| {
            let children = self.children(name);
            let h = self.node(name).annotation;
            children.is_empty() || children.iter().any(|&c| self.node(c).annotation != h)
        })
    }
}
