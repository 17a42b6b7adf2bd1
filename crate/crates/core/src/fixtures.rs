//! Small named automata used throughout the tests and the CLI.

use alloc::vec::Vec;

use crate::automaton::{Acceptance, Alphabet, Automaton};
use crate::bitset::StateSet;
use crate::{Error, Result};

/// NBW over `{a, b}` accepting the words with infinitely many `a`.
///
/// `q0 -a-> q1, q0 -b-> q0, q1 -a-> q1, q1 -b-> q0`, accepting `{q1}`.
pub fn infinitely_many_a() -> Automaton {
    let mut a = Automaton::empty(
        Alphabet::new(["a", "b"]).expect("static alphabet"),
        2,
        Acceptance::Buchi(StateSet::singleton(1)),
    );
    a.add_transition(0, 0, 1);
    a.add_transition(0, 1, 0);
    a.add_transition(1, 0, 1);
    a.add_transition(1, 1, 0);
    a
}

/// NBW with `k` states over `{1, .., k}` for
/// `L_k = { w | min(inf(w)) is even }`.
///
/// State 0 waits, reading anything. For each even `i` the automaton may
/// commit to `i` being the recurring minimum: state `A_i` is entered on
/// every `i` and is accepting, state `B_i` is entered on every symbol
/// above `i`, and smaller symbols block. `B_k` is never needed because no
/// symbol exceeds `k`, which keeps the total at `k` states.
pub fn build_lk_fixture(k: usize) -> Result<Automaton> {
    if k == 0 {
        return Err(Error::ZeroFixture);
    }
    // (accepting, holding) state per committed even value
    let mut committed: Vec<(usize, usize, Option<usize>)> = Vec::new();
    let mut next = 1;
    for i in (2..=k).step_by(2) {
        let accepting = next;
        let holding = if i < k { Some(next + 1) } else { None };
        next += 1 + holding.is_some() as usize;
        committed.push((i, accepting, holding));
    }
    let accepting: StateSet = committed.iter().map(|c| c.1).collect();
    let mut a = Automaton::empty(Alphabet::numeric(k)?, next, Acceptance::Buchi(accepting));
    // symbol index `x` is the letter `x + 1`
    for x in 0..k {
        a.add_transition(0, x, 0);
    }
    for &(i, acc, hold) in &committed {
        a.add_transition(0, i - 1, acc);
        for from in [Some(acc), hold].into_iter().flatten() {
            a.add_transition(from, i - 1, acc);
            for letter in i + 1..=k {
                let to = hold.expect("letters above i imply i < k");
                a.add_transition(from, letter - 1, to);
            }
        }
    }
    Ok(a)
}

/// Membership in `L_k` straight from the definition: the minimum letter of
/// the period is the minimum recurring letter.
pub fn lk_contains(period: &[usize]) -> bool {
    let min_letter = period.iter().min().expect("nonempty period") + 1;
    min_letter.is_multiple_of(2)
}

/// The two-state NBW `δ(s0,a)={s0,s1}, δ(s1,a)={s1}`, `α={s1}` over `{a}`.
pub fn two_state_spawner() -> Automaton {
    let mut a = Automaton::empty(
        Alphabet::new(["a"]).expect("static alphabet"),
        2,
        Acceptance::Buchi(StateSet::singleton(1)),
    );
    a.add_transition(0, 0, 0);
    a.add_transition(0, 0, 1);
    a.add_transition(1, 0, 1);
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lasso::{enumerate_lassos, Lasso};
    use crate::oracle::nbw_member;
    use alloc::vec;

    #[test]
    fn lk_sizes() {
        for k in 1..=8 {
            let a = build_lk_fixture(k).unwrap();
            assert_eq!(a.state_count, k);
            assert_eq!(a.validate(), []);
        }
        assert_eq!(build_lk_fixture(0), Err(Error::ZeroFixture));
    }

    #[test]
    fn l2_examples() {
        let a = build_lk_fixture(2).unwrap();
        let two = Lasso::parse(&a.alphabet, &[] as &[&str], &["2"]).unwrap();
        let one_two = Lasso::parse(&a.alphabet, &[] as &[&str], &["1", "2"]).unwrap();
        assert!(nbw_member(&a, &two).unwrap());
        assert!(!nbw_member(&a, &one_two).unwrap());
    }

    #[test]
    fn lk_matches_definition() {
        for k in 1..=4 {
            let a = build_lk_fixture(k).unwrap();
            for l in enumerate_lassos(&a.alphabet, 2, 3) {
                assert_eq!(
                    nbw_member(&a, &l).unwrap(),
                    lk_contains(&l.period),
                    "k={k} lasso={l:?}"
                );
            }
        }
    }

    #[test]
    fn spawner_accepts_a_omega() {
        let a = two_state_spawner();
        assert!(nbw_member(&a, &Lasso::new(vec![], vec![0]).unwrap()).unwrap());
    }
}
