//! Breadth-first construction of a deterministic automaton from a step
//! function over arbitrary state values.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

/// The reachable part of a deterministic transition structure.
///
/// `states[i]` is the value of state `i`, numbered in BFS discovery order
/// from the initial value (state 0). `transitions[i][a]` is the successor of
/// state `i` on symbol `a`.
#[derive(Clone, Debug)]
pub struct Explored<T> {
    pub states: Vec<T>,
    pub transitions: Vec<Vec<usize>>,
}

impl<T> Explored<T> {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Turns the successor table into the singleton-list form used by
    /// [`crate::Automaton`].
    pub fn transition_lists(&self) -> Vec<Vec<Vec<usize>>> {
        self.transitions
            .iter()
            .map(|row| row.iter().map(|&t| vec![t]).collect())
            .collect()
    }
}

/// Explores every value reachable from `initial` under `step`.
///
/// Values are deduplicated by their `Ord` identity, so the numbering only
/// depends on `initial`, `symbols` and `step`.
pub fn explore<T, F>(initial: T, symbols: usize, mut step: F) -> Explored<T>
where
    T: Ord + Clone,
    F: FnMut(&T, usize) -> T,
{
    let mut ids: BTreeMap<T, usize> = BTreeMap::new();
    let mut states = vec![initial.clone()];
    let mut transitions: Vec<Vec<usize>> = Vec::new();
    ids.insert(initial, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(id) = queue.pop_front() {
        let mut row = Vec::with_capacity(symbols);
        for sym in 0..symbols {
            let next = step(&states[id], sym);
            let target = match ids.get(&next) {
                Some(&t) => t,
                None => {
                    let t = states.len();
                    ids.insert(next.clone(), t);
                    states.push(next);
                    queue.push_back(t);
                    t
                }
            };
            row.push(target);
        }
        if transitions.len() <= id {
            transitions.resize(id + 1, Vec::new());
        }
        transitions[id] = row;
    }
    Explored {
        states,
        transitions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counter_mod_five() {
        let e = explore(0u8, 2, |&x, sym| (x + 1 + sym as u8) % 5);
        assert_eq!(e.len(), 5);
        assert_eq!(e.states, [0, 1, 2, 3, 4]);
        assert_eq!(e.transitions[4], [0, 1]);
    }
}
