use detpar_core::{Acceptance, Alphabet, Automaton, StateSet, StreettPair};
use proptest::prelude::*;

fn skeleton(n: usize, edges: &[bool], acceptance: Acceptance) -> Automaton {
    let mut a = Automaton::empty(Alphabet::new(["a", "b"]).unwrap(), n, acceptance);
    for q in 0..n {
        for sym in 0..2 {
            for t in 0..n {
                if edges[(q * 2 + sym) * n + t] {
                    a.add_transition(q, sym, t);
                }
            }
        }
    }
    a
}

fn set(bits: &[bool]) -> StateSet {
    bits.iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect()
}

/// NBWs over `{a, b}` with `1..=max_states` states.
pub fn nbw(max_states: usize) -> impl Strategy<Value = Automaton> {
    (1..=max_states).prop_flat_map(|n| {
        (
            prop::collection::vec(prop::bool::weighted(0.45), 2 * n * n),
            prop::collection::vec(prop::bool::weighted(0.4), n),
        )
            .prop_map(move |(edges, acc)| skeleton(n, &edges, Acceptance::Buchi(set(&acc))))
    })
}

/// NSWs over `{a, b}` with `1..=max_states` states and `0..=max_pairs`
/// pairs.
pub fn nsw(max_states: usize, max_pairs: usize) -> impl Strategy<Value = Automaton> {
    (1..=max_states, 0..=max_pairs).prop_flat_map(|(n, k)| {
        (
            prop::collection::vec(prop::bool::weighted(0.45), 2 * n * n),
            prop::collection::vec(prop::bool::weighted(0.4), 2 * n * k),
        )
            .prop_map(move |(edges, marks)| {
                let pairs = marks
                    .chunks(2 * n)
                    .map(|c| StreettPair {
                        fulfil: set(&c[..n]),
                        request: set(&c[n..]),
                    })
                    .collect();
                skeleton(n, &edges, Acceptance::Streett(pairs))
            })
    })
}
