//! Streett to Büchi by guessing a witness set.
//!
//! A run satisfies a Streett condition iff for some `J ⊆ [k]` it visits
//! every `R_j` (`j ∈ J`) infinitely often and every `G_j` (`j ∉ J`) only
//! finitely often. The union over all `J` of a two-part Büchi automaton
//! checks this; the result is exponential in `k` and only meant as an
//! independent test oracle.

use alloc::vec::Vec;

use crate::automaton::{Acceptance, Automaton};
use crate::bitset::StateSet;
use crate::{Error, Result};

/// Largest number of pairs accepted by [`nsw_witness_union_nbw`].
pub const MAX_WITNESS_PAIRS: usize = 12;

/// Büchi automaton equivalent to the Streett automaton `s`.
///
/// States `0..n` copy `s` and wait for the last forbidden visits. For each
/// `J`, listed in descending order as `j_0 > j_1 > …`, the states `(q, i)`
/// await a visit to `R_{j_i}`; leaving a state of `R_{j_i}` advances `i`
/// cyclically, and `(q, |J|-1)` with `q ∈ R_{j_{|J|-1}}` is accepting. For
/// `J = ∅` there is one phase and all of it is accepting. Part-two states
/// never contain a state of `G_j`, `j ∉ J`.
pub fn nsw_witness_union_nbw(s: &Automaton) -> Result<Automaton> {
    let pairs = s.streett_pairs()?;
    let k = pairs.len();
    if k > MAX_WITNESS_PAIRS {
        return Err(Error::TooManyPairs {
            pairs: k,
            max: MAX_WITNESS_PAIRS,
        });
    }
    s.expect_valid()?;
    let n = s.state_count;

    struct Part {
        order: Vec<usize>,
        allowed: StateSet,
        // id[q * phases + i], or usize::MAX when q is forbidden
        ids: Vec<usize>,
        phases: usize,
    }

    let mut next = n;
    let mut parts = Vec::with_capacity(1 << k);
    for mask in 0usize..1 << k {
        let order: Vec<usize> = (0..k).rev().filter(|j| mask & (1 << j) != 0).collect();
        let mut forbidden = StateSet::new();
        for j in (0..k).filter(|j| mask & (1 << j) == 0) {
            forbidden.union_with(&pairs[j].request);
        }
        let allowed = StateSet::full(n).difference(&forbidden);
        let phases = order.len().max(1);
        let mut ids = alloc::vec![usize::MAX; n * phases];
        for q in &allowed {
            for i in 0..phases {
                ids[q * phases + i] = next;
                next += 1;
            }
        }
        parts.push(Part {
            order,
            allowed,
            ids,
            phases,
        });
    }

    let mut accepting = StateSet::new();
    let mut out = Automaton::empty(s.alphabet.clone(), next, Acceptance::Buchi(StateSet::new()));
    out.initial = s.initial;
    for q in 0..n {
        for sym in 0..s.alphabet.len() {
            for &t in s.successors(q, sym) {
                out.add_transition(q, sym, t);
                for part in &parts {
                    if part.allowed.contains(t) {
                        out.add_transition(q, sym, part.ids[t * part.phases]);
                    }
                }
            }
        }
    }
    for part in &parts {
        for q in &part.allowed {
            for i in 0..part.phases {
                let id = part.ids[q * part.phases + i];
                let next_phase = match part.order.get(i) {
                    Some(&j) if pairs[j].fulfil.contains(q) => (i + 1) % part.phases,
                    Some(_) => i,
                    None => 0,
                };
                let completes = match part.order.get(i) {
                    None => true,
                    Some(&j) => i + 1 == part.phases && pairs[j].fulfil.contains(q),
                };
                if completes {
                    accepting.insert(id);
                }
                for sym in 0..s.alphabet.len() {
                    for &t in s.successors(q, sym) {
                        if part.allowed.contains(t) {
                            out.add_transition(id, sym, part.ids[t * part.phases + next_phase]);
                        }
                    }
                }
            }
        }
    }
    out.acceptance = Acceptance::Buchi(accepting);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{Alphabet, StreettPair};
    use crate::lasso::enumerate_lassos;
    use crate::oracle::{nbw_member, nsw_member};
    use alloc::vec;

    fn one_state(pairs: Vec<StreettPair>) -> Automaton {
        let mut a = Automaton::empty(
            Alphabet::new(["a", "b"]).unwrap(),
            1,
            Acceptance::Streett(pairs),
        );
        a.add_transition(0, 0, 0);
        a.add_transition(0, 1, 0);
        a
    }

    #[test]
    fn no_pairs_accepts_everything_infinite() {
        let s = one_state(vec![]);
        let b = nsw_witness_union_nbw(&s).unwrap();
        assert_eq!(b.validate(), []);
        for l in enumerate_lassos(&b.alphabet, 2, 2) {
            assert!(nbw_member(&b, &l).unwrap());
        }
    }

    #[test]
    fn unsatisfiable_pair() {
        let s = one_state(vec![StreettPair {
            fulfil: StateSet::new(),
            request: StateSet::singleton(0),
        }]);
        let b = nsw_witness_union_nbw(&s).unwrap();
        for l in enumerate_lassos(&b.alphabet, 2, 2) {
            assert!(!nbw_member(&b, &l).unwrap());
        }
    }

    #[test]
    fn trivially_satisfied_pair() {
        let s = one_state(vec![StreettPair {
            fulfil: StateSet::singleton(0),
            request: StateSet::singleton(0),
        }]);
        let b = nsw_witness_union_nbw(&s).unwrap();
        for l in enumerate_lassos(&b.alphabet, 2, 2) {
            assert!(nbw_member(&b, &l).unwrap());
            assert!(nsw_member(&s, &l).unwrap());
        }
    }

    #[test]
    fn rejects_non_streett_and_large_k() {
        let mut s = one_state(vec![StreettPair::default(); MAX_WITNESS_PAIRS + 1]);
        assert_eq!(
            nsw_witness_union_nbw(&s),
            Err(Error::TooManyPairs {
                pairs: MAX_WITNESS_PAIRS + 1,
                max: MAX_WITNESS_PAIRS
            })
        );
        s.acceptance = Acceptance::Buchi(StateSet::new());
        assert!(matches!(
            nsw_witness_union_nbw(&s),
            Err(Error::WrongAcceptance { .. })
        ));
    }
}
