use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("alphabet contains duplicate symbol '{0}'")]
    DuplicateSymbol(String),
    #[error("symbol '{0}' is not part of the alphabet")]
    UnknownSymbol(String),
    #[error("symbol index {0} is outside the alphabet")]
    SymbolOutOfRange(usize),
    #[error("alphabets of the two automata differ")]
    AlphabetMismatch,
    #[error("expected {expected} acceptance, found {found}")]
    WrongAcceptance {
        expected: &'static str,
        found: &'static str,
    },
    #[error("automaton must be deterministic")]
    NotDeterministic,
    #[error("deterministic automaton has no successor from state {state} on symbol {symbol}")]
    Partial { state: usize, symbol: usize },
    #[error("automaton is malformed: {0}")]
    Invalid(String),
    #[error("lasso period must be nonempty")]
    EmptyPeriod,
    #[error("{pairs} acceptance pairs exceed the supported maximum of {max}")]
    TooManyPairs { pairs: usize, max: usize },
    #[error("no membership oracle for nondeterministic {0} automata")]
    NoOracle(&'static str),
    #[error("e = 1 denotes the rejecting sink and has no priority")]
    SinkLevel,
    #[error("fixture parameter must be at least 1")]
    ZeroFixture,
}
