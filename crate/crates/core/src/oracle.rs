//! Membership of lasso words, used as ground truth for the determinizers.
//!
//! Nondeterministic automata are checked on the product with the lasso
//! shape: positions `0..|u|+|v|`, where the last period position wraps back
//! to `|u|`. Deterministic automata are simply run.

use alloc::vec;
use alloc::vec::Vec;

use crate::automaton::{Acceptance, Automaton, StreettPair};
use crate::bitset::StateSet;
use crate::graph::Graph;
use crate::lasso::Lasso;
use crate::{Error, Result};

/// Outcome of running a deterministic automaton on a lasso.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleVerdict {
    pub accepted: bool,
    /// States visited on the eventual cycle, i.e. `inf(r)`.
    pub cycle_states: StateSet,
    /// Number of letters read until the cycle is closed.
    pub entry_steps: usize,
}

/// Runs a deterministic total automaton on `lasso`.
///
/// After the prefix, whole copies of the period are read until the state at
/// the start of a copy repeats; by pigeonhole this takes at most
/// `state_count` copies.
pub fn run_deterministic(d: &Automaton, lasso: &Lasso) -> Result<CycleVerdict> {
    if !d.deterministic {
        return Err(Error::NotDeterministic);
    }
    lasso.check(d.alphabet.len())?;
    let mut q = d.initial;
    for &sym in &lasso.prefix {
        q = d.step(q, sym)?;
    }
    let mut first_seen = vec![usize::MAX; d.state_count];
    let mut block = 0;
    while first_seen[q] == usize::MAX {
        first_seen[q] = block;
        for &sym in &lasso.period {
            q = d.step(q, sym)?;
        }
        block += 1;
    }
    let loop_blocks = block - first_seen[q];
    let mut cycle_states = StateSet::new();
    for _ in 0..loop_blocks {
        for &sym in &lasso.period {
            cycle_states.insert(q);
            q = d.step(q, sym)?;
        }
    }
    Ok(CycleVerdict {
        accepted: d.acceptance.accepts_infinity_set(&cycle_states),
        cycle_states,
        entry_steps: lasso.prefix.len() + block * lasso.period.len(),
    })
}

/// Product of `a` with the lasso shape. Node `q * P + pos` pairs state `q`
/// with shape position `pos`.
struct Product {
    graph: Graph,
    positions: usize,
    start: usize,
}

impl Product {
    fn new(a: &Automaton, lasso: &Lasso) -> Result<Self> {
        a.expect_valid()?;
        lasso.check(a.alphabet.len())?;
        let positions = lasso.positions();
        let mut succ = vec![Vec::new(); a.state_count * positions];
        for q in 0..a.state_count {
            for pos in 0..positions {
                let next = lasso.next_position(pos);
                succ[q * positions + pos] = a
                    .successors(q, lasso.symbol_at(pos))
                    .iter()
                    .map(|&t| t * positions + next)
                    .collect();
            }
        }
        Ok(Product {
            graph: Graph { succ },
            positions,
            start: a.initial * positions,
        })
    }

    fn state(&self, node: usize) -> usize {
        node / self.positions
    }

    fn states_of(&self, nodes: &[usize]) -> StateSet {
        nodes.iter().map(|&v| self.state(v)).collect()
    }
}

/// Whether some run of the Büchi automaton `a` on `lasso` visits the
/// accepting set infinitely often.
pub fn nbw_member(a: &Automaton, lasso: &Lasso) -> Result<bool> {
    let accepting = a.buchi_set()?;
    let product = Product::new(a, lasso)?;
    let reachable = product.graph.reachable_from(product.start);
    Ok(product
        .graph
        .sccs(&reachable)
        .iter()
        .filter(|c| product.graph.is_cyclic(c))
        .any(|c| c.iter().any(|&v| accepting.contains(product.state(v)))))
}

/// Whether some run of the Streett automaton `a` on `lasso` satisfies every
/// pair.
pub fn nsw_member(a: &Automaton, lasso: &Lasso) -> Result<bool> {
    let pairs = a.streett_pairs()?;
    streett_nonempty(a, pairs, lasso)
}

/// Streett emptiness on the lasso product by repeated SCC refinement: a
/// component that requests some pair without fulfilling it loses its
/// requesting nodes and is decomposed again.
fn streett_nonempty(a: &Automaton, pairs: &[StreettPair], lasso: &Lasso) -> Result<bool> {
    let product = Product::new(a, lasso)?;
    let graph = &product.graph;
    let reachable = graph.reachable_from(product.start);
    let mut work = graph.sccs(&reachable);
    let mut alive = vec![false; graph.succ.len()];
    while let Some(component) = work.pop() {
        if !graph.is_cyclic(&component) {
            continue;
        }
        let states = product.states_of(&component);
        let unfulfilled: Vec<&StreettPair> = pairs
            .iter()
            .filter(|p| states.intersects(&p.request) && !states.intersects(&p.fulfil))
            .collect();
        if unfulfilled.is_empty() {
            return Ok(true);
        }
        let mut kept = 0;
        for &v in &component {
            let q = product.state(v);
            alive[v] = !unfulfilled.iter().any(|p| p.request.contains(q));
            kept += alive[v] as usize;
        }
        if kept > 0 {
            work.extend(graph.sccs(&alive));
        }
        for &v in &component {
            alive[v] = false;
        }
    }
    Ok(false)
}

/// Min-even parity as a Streett condition: each odd priority requests a
/// smaller priority.
fn parity_as_streett(priorities: &[usize], index: usize) -> Vec<StreettPair> {
    (1..index)
        .step_by(2)
        .map(|odd| StreettPair {
            fulfil: (0..priorities.len())
                .filter(|&s| priorities[s] < odd)
                .collect(),
            request: (0..priorities.len())
                .filter(|&s| priorities[s] == odd)
                .collect(),
        })
        .collect()
}

/// Membership of `lasso` in `L(a)`, routed to the matching oracle.
pub fn accepts(a: &Automaton, lasso: &Lasso) -> Result<bool> {
    if a.deterministic {
        return Ok(run_deterministic(a, lasso)?.accepted);
    }
    match &a.acceptance {
        Acceptance::Buchi(_) => nbw_member(a, lasso),
        Acceptance::Streett(pairs) => streett_nonempty(a, pairs, lasso),
        Acceptance::Parity { priorities, index } => {
            streett_nonempty(a, &parity_as_streett(priorities, *index), lasso)
        }
        Acceptance::Rabin(_) => Err(Error::NoOracle("Rabin")),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub lasso: Lasso,
    pub left: bool,
    pub right: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffReport {
    pub agreed: usize,
    pub disagreements: Vec<Disagreement>,
}

impl DiffReport {
    pub fn examined(&self) -> usize {
        self.agreed + self.disagreements.len()
    }

    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Compares the verdicts of two automata on every lasso, in order.
pub fn differential_check<'a, I>(
    left: &Automaton,
    right: &Automaton,
    lassos: I,
) -> Result<DiffReport>
where
    I: IntoIterator<Item = &'a Lasso>,
{
    if left.alphabet.symbols() != right.alphabet.symbols() {
        return Err(Error::AlphabetMismatch);
    }
    let mut report = DiffReport::default();
    for lasso in lassos {
        let l = accepts(left, lasso)?;
        let r = accepts(right, lasso)?;
        if l == r {
            report.agreed += 1;
        } else {
            report.disagreements.push(Disagreement {
                lasso: lasso.clone(),
                left: l,
                right: r,
            });
        }
    }
    Ok(report)
}
