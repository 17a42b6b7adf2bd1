//! Seeded random automata for differential testing.
//!
//! Every automaton is over the two-letter alphabet of valuations of the
//! single proposition `p0`, so it can be written out as HOA unchanged.

use detpar_core::{Acceptance, Alphabet, Automaton, StateSet, StreettPair};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Knobs of the random generator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomParams {
    /// Probability of each possible transition `q -σ-> t`.
    pub transition_density: f64,
    /// Probability of a state being accepting, or of belonging to a given
    /// fulfil/request set.
    pub acceptance_density: f64,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams {
            transition_density: 0.4,
            acceptance_density: 0.4,
        }
    }
}

/// A seeded stream of random automata.
#[derive(Clone, Debug)]
pub struct Generator {
    rng: ChaCha8Rng,
    params: RandomParams,
}

impl Generator {
    pub fn new(seed: u64, params: RandomParams) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            params,
        }
    }

    fn alphabet() -> Alphabet {
        Alphabet::from_props(["p0"]).expect("one proposition")
    }

    fn subset(&mut self, n: usize, density: f64) -> StateSet {
        (0..n).filter(|_| self.rng.gen_bool(density)).collect()
    }

    fn skeleton(&mut self, n: usize, acceptance: Acceptance) -> Automaton {
        let mut a = Automaton::empty(Self::alphabet(), n, acceptance);
        for q in 0..n {
            for sym in 0..a.alphabet.len() {
                for t in 0..n {
                    if self.rng.gen_bool(self.params.transition_density) {
                        a.add_transition(q, sym, t);
                    }
                }
            }
        }
        a
    }

    /// An NBW with `n` states.
    pub fn nbw(&mut self, n: usize) -> Automaton {
        let accepting = self.subset(n, self.params.acceptance_density);
        self.skeleton(n, Acceptance::Buchi(accepting))
    }

    /// An NSW with `n` states and `k` pairs.
    pub fn nsw(&mut self, n: usize, k: usize) -> Automaton {
        let density = self.params.acceptance_density;
        let pairs = (0..k)
            .map(|_| StreettPair {
                fulfil: self.subset(n, density),
                request: self.subset(n, density),
            })
            .collect();
        self.skeleton(n, Acceptance::Streett(pairs))
    }

    /// A uniformly chosen value in `lo..=hi`.
    pub fn between(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_automata() {
        let mut x = Generator::new(7, RandomParams::default());
        let mut y = Generator::new(7, RandomParams::default());
        for n in 1..5 {
            assert_eq!(x.nbw(n), y.nbw(n));
            assert_eq!(x.nsw(n, 2), y.nsw(n, 2));
        }
    }

    #[test]
    fn shapes() {
        let mut g = Generator::new(1, RandomParams::default());
        let a = g.nsw(3, 2);
        assert_eq!(a.state_count, 3);
        assert_eq!(a.alphabet.len(), 2);
        assert!(a.validate().is_empty());
        assert!(matches!(a.acceptance, Acceptance::Streett(ref p) if p.len() == 2));
        assert!(g.nbw(4).validate().is_empty());
    }
}
