//! Explicit ω-word automata with Büchi, Rabin, Streett and parity acceptance.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::StateSet;
use crate::{Error, Result};

/// An ordered list of distinct symbol names.
///
/// Symbols are referred to by index everywhere else in the crate; the
/// position in this list is the canonical enumeration order. An alphabet may
/// additionally carry atomic proposition names, in which case symbol `i`
/// stands for the valuation whose `j`-th proposition is true iff bit `j` of
/// `i` is set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
    props: Option<Vec<String>>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        for (i, s) in symbols.iter().enumerate() {
            if symbols[..i].contains(s) {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet {
            symbols,
            props: None,
        })
    }

    /// The alphabet of all valuations over `props`, named `a&!b`-style.
    pub fn from_props<I, S>(props: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let props: Vec<String> = props.into_iter().map(Into::into).collect();
        for (i, p) in props.iter().enumerate() {
            if props[..i].contains(p) {
                return Err(Error::DuplicateSymbol(p.clone()));
            }
        }
        if props.len() >= usize::BITS as usize - 1 {
            return Err(Error::Invalid(format!("{} propositions", props.len())));
        }
        let symbols = (0..1usize << props.len())
            .map(|v| valuation_name(&props, v))
            .collect();
        Ok(Alphabet {
            symbols,
            props: Some(props),
        })
    }

    /// Attaches proposition names to an alphabet whose size is `2^props.len()`.
    pub fn with_props(mut self, props: Vec<String>) -> Result<Self> {
        if props.len() >= usize::BITS as usize - 1 || 1usize << props.len() != self.len() {
            return Err(Error::Invalid(format!(
                "{} symbols cannot be encoded by {} propositions",
                self.len(),
                props.len()
            )));
        }
        self.props = Some(props);
        Ok(self)
    }

    /// `{"1", .., "k"}`.
    pub fn numeric(k: usize) -> Result<Self> {
        Alphabet::new((1..=k).map(|i| format!("{i}")))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn props(&self) -> Option<&[String]> {
        self.props.as_deref()
    }

    pub fn name(&self, symbol: usize) -> &str {
        &self.symbols[symbol]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.symbols
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| Error::UnknownSymbol(name.into()))
    }

    /// True when the symbol names are the ones [`Alphabet::from_props`]
    /// would generate.
    pub fn has_valuation_names(&self) -> bool {
        match &self.props {
            Some(props) => self
                .symbols
                .iter()
                .enumerate()
                .all(|(v, s)| *s == valuation_name(props, v)),
            None => false,
        }
    }
}

fn valuation_name(props: &[String], valuation: usize) -> String {
    if props.is_empty() {
        return "t".into();
    }
    let mut out = String::new();
    for (j, p) in props.iter().enumerate() {
        if j > 0 {
            out.push('&');
        }
        if valuation & (1 << j) == 0 {
            out.push('!');
        }
        out.push_str(p);
    }
    out
}

/// Rabin pair: accepting when `avoid` is visited finitely often and `visit`
/// infinitely often.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RabinPair {
    pub avoid: StateSet,
    pub visit: StateSet,
}

/// Streett pair: if `request` is visited infinitely often then so is
/// `fulfil`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct StreettPair {
    pub fulfil: StateSet,
    pub request: StateSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Acceptance {
    Buchi(StateSet),
    Rabin(Vec<RabinPair>),
    Streett(Vec<StreettPair>),
    /// Min-even parity. `priorities[s]` is the priority of state `s`; every
    /// priority is below `index`.
    Parity {
        priorities: Vec<usize>,
        index: usize,
    },
}

impl Acceptance {
    pub fn kind(&self) -> &'static str {
        match self {
            Acceptance::Buchi(_) => "Buchi",
            Acceptance::Rabin(_) => "Rabin",
            Acceptance::Streett(_) => "Streett",
            Acceptance::Parity { .. } => "parity",
        }
    }

    /// Whether a run whose infinity set is `inf` is accepting.
    pub fn accepts_infinity_set(&self, inf: &StateSet) -> bool {
        match self {
            Acceptance::Buchi(acc) => inf.intersects(acc),
            Acceptance::Rabin(pairs) => pairs
                .iter()
                .any(|p| !inf.intersects(&p.avoid) && inf.intersects(&p.visit)),
            Acceptance::Streett(pairs) => pairs
                .iter()
                .all(|p| !inf.intersects(&p.request) || inf.intersects(&p.fulfil)),
            Acceptance::Parity { priorities, .. } => inf
                .iter()
                .map(|s| priorities[s])
                .min()
                .is_some_and(|p| p % 2 == 0),
        }
    }
}

/// An automaton `⟨Σ, S, δ, s0, α⟩` with states `0..state_count`.
///
/// `transitions[s][a]` lists the successors of `s` on symbol `a` in
/// ascending order. Nondeterministic automata may have empty successor
/// lists; deterministic ones must have exactly one successor everywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automaton {
    pub alphabet: Alphabet,
    pub state_count: usize,
    pub initial: usize,
    pub transitions: Vec<Vec<Vec<usize>>>,
    pub acceptance: Acceptance,
    pub deterministic: bool,
}

/// A single violated well-formedness invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    InitialOutOfRange {
        initial: usize,
    },
    TableShape {
        state: Option<usize>,
        found: usize,
        expected: usize,
    },
    TargetOutOfRange {
        state: usize,
        symbol: usize,
        target: usize,
    },
    UnsortedTargets {
        state: usize,
        symbol: usize,
    },
    DeterminismViolated {
        state: usize,
        symbol: usize,
        successors: usize,
    },
    AcceptanceStateOutOfRange {
        set: String,
        state: usize,
    },
    PriorityTableLength {
        found: usize,
    },
    PriorityOutOfRange {
        state: usize,
        priority: usize,
        index: usize,
    },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::InitialOutOfRange { initial } => {
                write!(f, "initial state {initial} out of range")
            }
            Diagnostic::TableShape {
                state: None,
                found,
                expected,
            } => write!(f, "transition table has {found} rows, expected {expected}"),
            Diagnostic::TableShape {
                state: Some(s),
                found,
                expected,
            } => write!(
                f,
                "state {s} has {found} symbol entries, expected {expected}"
            ),
            Diagnostic::TargetOutOfRange {
                state,
                symbol,
                target,
            } => write!(
                f,
                "target out of range: state {state}, symbol {symbol} -> {target}"
            ),
            Diagnostic::UnsortedTargets { state, symbol } => write!(
                f,
                "successors of state {state} on symbol {symbol} are not strictly ascending"
            ),
            Diagnostic::DeterminismViolated {
                state,
                symbol,
                successors,
            } => write!(
                f,
                "determinism violated: state {state}, symbol {symbol} has {successors} successors"
            ),
            Diagnostic::AcceptanceStateOutOfRange { set, state } => {
                write!(
                    f,
                    "acceptance set {set} mentions state {state} out of range"
                )
            }
            Diagnostic::PriorityTableLength { found } => {
                write!(f, "priority table has {found} entries")
            }
            Diagnostic::PriorityOutOfRange {
                state,
                priority,
                index,
            } => write!(
                f,
                "state {state} has priority {priority}, outside index {index}"
            ),
        }
    }
}

impl Automaton {
    /// A nondeterministic automaton with no transitions.
    pub fn empty(alphabet: Alphabet, state_count: usize, acceptance: Acceptance) -> Self {
        let transitions = vec![vec![Vec::new(); alphabet.len()]; state_count];
        Automaton {
            alphabet,
            state_count,
            initial: 0,
            transitions,
            acceptance,
            deterministic: false,
        }
    }

    /// Adds `from -σ-> to`, keeping successor lists sorted.
    pub fn add_transition(&mut self, from: usize, symbol: usize, to: usize) {
        let succ = &mut self.transitions[from][symbol];
        if let Err(pos) = succ.binary_search(&to) {
            succ.insert(pos, to);
        }
    }

    pub fn successors(&self, state: usize, symbol: usize) -> &[usize] {
        &self.transitions[state][symbol]
    }

    /// `δ(set, σ)`.
    pub fn post(&self, set: &StateSet, symbol: usize) -> StateSet {
        let mut out = StateSet::new();
        for s in set {
            for &t in &self.transitions[s][symbol] {
                out.insert(t);
            }
        }
        out
    }

    pub fn is_total(&self) -> bool {
        self.transitions
            .iter()
            .all(|row| row.iter().all(|succ| !succ.is_empty()))
    }

    pub fn validate(&self) -> Vec<Diagnostic> {
        validate_automaton(self)
    }

    pub(crate) fn expect_valid(&self) -> Result<()> {
        match self.validate().first() {
            None => Ok(()),
            Some(d) => Err(Error::Invalid(format!("{d}"))),
        }
    }

    pub(crate) fn buchi_set(&self) -> Result<&StateSet> {
        match &self.acceptance {
            Acceptance::Buchi(set) => Ok(set),
            other => Err(Error::WrongAcceptance {
                expected: "Buchi",
                found: other.kind(),
            }),
        }
    }

    pub(crate) fn streett_pairs(&self) -> Result<&[StreettPair]> {
        match &self.acceptance {
            Acceptance::Streett(pairs) => Ok(pairs),
            other => Err(Error::WrongAcceptance {
                expected: "Streett",
                found: other.kind(),
            }),
        }
    }

    /// The single successor in a deterministic automaton.
    pub(crate) fn step(&self, state: usize, symbol: usize) -> Result<usize> {
        match self.transitions[state][symbol].as_slice() {
            [t] => Ok(*t),
            [] => Err(Error::Partial { state, symbol }),
            _ => Err(Error::NotDeterministic),
        }
    }

    /// Largest priority of a parity automaton.
    pub fn max_priority(&self) -> Option<usize> {
        match &self.acceptance {
            Acceptance::Parity { priorities, .. } => priorities.iter().copied().max(),
            _ => None,
        }
    }
}

/// Checks every structural invariant of `a`, reporting one diagnostic per
/// violation.
pub fn validate_automaton(a: &Automaton) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let n = a.state_count;
    let symbols = a.alphabet.len();
    if a.initial >= n {
        out.push(Diagnostic::InitialOutOfRange { initial: a.initial });
    }
    if a.transitions.len() != n {
        out.push(Diagnostic::TableShape {
            state: None,
            found: a.transitions.len(),
            expected: n,
        });
    }
    for (s, row) in a.transitions.iter().enumerate() {
        if row.len() != symbols {
            out.push(Diagnostic::TableShape {
                state: Some(s),
                found: row.len(),
                expected: symbols,
            });
        }
        for (sym, succ) in row.iter().enumerate() {
            for &t in succ {
                if t >= n {
                    out.push(Diagnostic::TargetOutOfRange {
                        state: s,
                        symbol: sym,
                        target: t,
                    });
                }
            }
            if succ.windows(2).any(|w| w[0] >= w[1]) {
                out.push(Diagnostic::UnsortedTargets {
                    state: s,
                    symbol: sym,
                });
            }
            if a.deterministic && succ.len() != 1 {
                out.push(Diagnostic::DeterminismViolated {
                    state: s,
                    symbol: sym,
                    successors: succ.len(),
                });
            }
        }
    }
    let mut check_set = |name: String, set: &StateSet| {
        if let Some(state) = set.iter().find(|&s| s >= n) {
            out.push(Diagnostic::AcceptanceStateOutOfRange { set: name, state });
        }
    };
    match &a.acceptance {
        Acceptance::Buchi(acc) => check_set("Buchi".into(), acc),
        Acceptance::Rabin(pairs) => {
            for (i, p) in pairs.iter().enumerate() {
                check_set(format!("E{}", i + 1), &p.avoid);
                check_set(format!("F{}", i + 1), &p.visit);
            }
        }
        Acceptance::Streett(pairs) => {
            for (i, p) in pairs.iter().enumerate() {
                check_set(format!("R{}", i + 1), &p.fulfil);
                check_set(format!("G{}", i + 1), &p.request);
            }
        }
        Acceptance::Parity { priorities, index } => {
            if priorities.len() != n {
                out.push(Diagnostic::PriorityTableLength {
                    found: priorities.len(),
                });
            }
            for (state, &priority) in priorities.iter().enumerate() {
                if priority >= *index {
                    out.push(Diagnostic::PriorityOutOfRange {
                        state,
                        priority,
                        index: *index,
                    });
                }
            }
        }
    }
    out
}

fn expect_deterministic_parity(d: &Automaton) -> Result<(&[usize], usize)> {
    let Acceptance::Parity { priorities, index } = &d.acceptance else {
        return Err(Error::WrongAcceptance {
            expected: "parity",
            found: d.acceptance.kind(),
        });
    };
    if !d.deterministic {
        return Err(Error::NotDeterministic);
    }
    d.expect_valid()?;
    Ok((priorities, *index))
}

/// Complements a deterministic parity automaton by shifting every priority
/// up by one.
pub fn dualize_parity(d: &Automaton) -> Result<Automaton> {
    let (priorities, index) = expect_deterministic_parity(d)?;
    let mut out = d.clone();
    out.acceptance = Acceptance::Parity {
        priorities: priorities.iter().map(|p| p + 1).collect(),
        index: index + 1,
    };
    Ok(out)
}

/// Shifts all priorities down by 2 while the minimum is at least 2.
///
/// Never applied implicitly by any other operation.
pub fn normalize_parity(d: &Automaton) -> Result<Automaton> {
    let Acceptance::Parity { priorities, index } = &d.acceptance else {
        return Err(Error::WrongAcceptance {
            expected: "parity",
            found: d.acceptance.kind(),
        });
    };
    let min = priorities.iter().copied().min().unwrap_or(0);
    let shift = min - min % 2;
    let mut out = d.clone();
    out.acceptance = Acceptance::Parity {
        priorities: priorities.iter().map(|p| p - shift).collect(),
        index: index - shift,
    };
    Ok(out)
}
