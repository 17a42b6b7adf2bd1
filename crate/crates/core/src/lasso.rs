//! Ultimately periodic words `u·v^ω`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::automaton::Alphabet;
use crate::{Error, Result};

/// The word `prefix · period^ω`, symbols given as alphabet indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lasso {
    pub prefix: Vec<usize>,
    pub period: Vec<usize>,
}

impl Lasso {
    pub fn new(prefix: Vec<usize>, period: Vec<usize>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        Ok(Lasso { prefix, period })
    }

    /// Builds a lasso from symbol names.
    pub fn parse<S: AsRef<str>>(alphabet: &Alphabet, prefix: &[S], period: &[S]) -> Result<Self> {
        let lookup = |names: &[S]| {
            names
                .iter()
                .map(|n| alphabet.index_of(n.as_ref()))
                .collect::<Result<Vec<_>>>()
        };
        Lasso::new(lookup(prefix)?, lookup(period)?)
    }

    /// Total number of positions `|u| + |v|` of the lasso shape.
    pub fn positions(&self) -> usize {
        self.prefix.len() + self.period.len()
    }

    /// Symbol read at shape position `pos`.
    pub fn symbol_at(&self, pos: usize) -> usize {
        if pos < self.prefix.len() {
            self.prefix[pos]
        } else {
            self.period[pos - self.prefix.len()]
        }
    }

    /// Position following `pos`; the last period position wraps to `|u|`.
    pub fn next_position(&self, pos: usize) -> usize {
        if pos + 1 == self.positions() {
            self.prefix.len()
        } else {
            pos + 1
        }
    }

    pub(crate) fn check(&self, alphabet_len: usize) -> Result<()> {
        if self.period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        match self
            .prefix
            .iter()
            .chain(&self.period)
            .find(|&&s| s >= alphabet_len)
        {
            Some(&s) => Err(Error::SymbolOutOfRange(s)),
            None => Ok(()),
        }
    }

    /// `u` and `v` rendered with symbol names, comma separated.
    pub fn display(&self, alphabet: &Alphabet) -> (String, String) {
        let render = |word: &[usize]| {
            let mut out = String::new();
            for (i, &s) in word.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(alphabet.name(s));
            }
            out
        };
        (render(&self.prefix), render(&self.period))
    }
}

/// Every word over `symbols` of length `min..=max`, length-lexicographic.
fn words(symbols: usize, min: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = alloc::vec![Vec::new()];
    for len in 0..=max {
        if len >= min {
            out.extend(layer.iter().cloned());
        }
        if len == max {
            break;
        }
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..symbols).map(move |s| {
                    let mut next = w.clone();
                    next.push(s);
                    next
                })
            })
            .collect();
    }
    out
}

/// All lassos with `|u| ≤ max_prefix` and `1 ≤ |v| ≤ max_period`.
///
/// Prefixes vary slowest; both components are enumerated length-
/// lexicographically. Different representations of the same ω-word are all
/// kept.
pub fn enumerate_lassos(alphabet: &Alphabet, max_prefix: usize, max_period: usize) -> Vec<Lasso> {
    let prefixes = words(alphabet.len(), 0, max_prefix);
    let periods = words(alphabet.len(), 1, max_period);
    let mut out = Vec::with_capacity(prefixes.len() * periods.len());
    for u in &prefixes {
        for v in &periods {
            out.push(Lasso {
                prefix: u.clone(),
                period: v.clone(),
            });
        }
    }
    out
}
