//! A strict subset of the HOA v1 format.
//!
//! Supported: one initial state, explicit full-conjunction edge labels,
//! state-based acceptance sets, and the acceptance names `Buchi`,
//! `Rabin k`, `Streett k` and `parity min even K` with their standard
//! formulas. Everything else is rejected with a diagnostic pointing at the
//! offending construct.

use std::fmt::Write as _;

use detpar_core::{Acceptance, Alphabet, Automaton, RabinPair, StateSet, StreettPair};

/// A position in the input, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {}, column {}: {message}", pos.line, pos.column)]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EmitError {
    #[error(
        "alphabet of {0} symbols is not a set of valuations; re-encode it over 2^k symbols first"
    )]
    NotPowerOfTwo(usize),
    #[error("automaton is malformed: {0}")]
    Malformed(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Header(String),
    Ident(String),
    Int(usize),
    Str(String),
    Punct(char),
    Body,
    End,
    Abort,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Header(h) => format!("header '{h}:'"),
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Int(i) => format!("'{i}'"),
            Tok::Str(s) => format!("string \"{s}\""),
            Tok::Punct(c) => format!("'{c}'"),
            Tok::Body => "'--BODY--'".into(),
            Tok::End => "'--END--'".into(),
            Tok::Abort => "'--ABORT--'".into(),
        }
    }
}

fn err<T>(pos: Pos, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        message: message.into(),
    })
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let advance = |i: &mut usize, line: &mut usize, col: &mut usize, c: char| {
        *i += 1;
        if c == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column: col };
        if c.is_whitespace() {
            advance(&mut i, &mut line, &mut col, c);
        } else if c == '/' && chars.get(i + 1) == Some(&'*') {
            let mut depth = 0;
            loop {
                match (chars.get(i), chars.get(i + 1)) {
                    (Some('/'), Some('*')) => {
                        depth += 1;
                        advance(&mut i, &mut line, &mut col, '/');
                        advance(&mut i, &mut line, &mut col, '*');
                    }
                    (Some('*'), Some('/')) => {
                        depth -= 1;
                        advance(&mut i, &mut line, &mut col, '*');
                        advance(&mut i, &mut line, &mut col, '/');
                        if depth == 0 {
                            break;
                        }
                    }
                    (Some(&c), _) => advance(&mut i, &mut line, &mut col, c),
                    (None, _) => return err(pos, "unterminated comment"),
                }
            }
        } else if c == '"' {
            advance(&mut i, &mut line, &mut col, c);
            let mut s = String::new();
            loop {
                match chars.get(i) {
                    None => return err(pos, "unterminated string"),
                    Some('"') => {
                        advance(&mut i, &mut line, &mut col, '"');
                        break;
                    }
                    Some('\\') => {
                        advance(&mut i, &mut line, &mut col, '\\');
                        let Some(&e) = chars.get(i) else {
                            return err(pos, "unterminated string");
                        };
                        s.push(e);
                        advance(&mut i, &mut line, &mut col, e);
                    }
                    Some(&ch) => {
                        s.push(ch);
                        advance(&mut i, &mut line, &mut col, ch);
                    }
                }
            }
            out.push((Tok::Str(s), pos));
        } else if c.is_ascii_digit() {
            let mut value: usize = 0;
            while let Some(&d) = chars.get(i).filter(|d| d.is_ascii_digit()) {
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(d as usize - '0' as usize))
                    .map_or_else(|| err(pos, "integer too large"), Ok)?;
                advance(&mut i, &mut line, &mut col, d);
            }
            out.push((Tok::Int(value), pos));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars
                .get(i)
                .filter(|d| d.is_ascii_alphanumeric() || **d == '_' || **d == '-')
            {
                s.push(d);
                advance(&mut i, &mut line, &mut col, d);
            }
            if chars.get(i) == Some(&':') {
                advance(&mut i, &mut line, &mut col, ':');
                out.push((Tok::Header(s), pos));
            } else {
                out.push((Tok::Ident(s), pos));
            }
        } else if c == '-' {
            let rest: String = chars[i..].iter().take(9).collect();
            let tok = if rest.starts_with("--BODY--") {
                Tok::Body
            } else if rest.starts_with("--END--") {
                Tok::End
            } else if rest.starts_with("--ABORT--") {
                Tok::Abort
            } else {
                return err(pos, "unexpected '-'");
            };
            let len = match tok {
                Tok::Body => 8,
                Tok::End => 7,
                _ => 9,
            };
            for _ in 0..len {
                advance(&mut i, &mut line, &mut col, '-');
            }
            out.push((tok, pos));
        } else if "[]{}()&|!@".contains(c) {
            out.push((Tok::Punct(c), pos));
            advance(&mut i, &mut line, &mut col, c);
        } else {
            return err(pos, format!("unexpected character '{c}'"));
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum AccKind {
    Buchi,
    Rabin(usize),
    Streett(usize),
    Parity(usize),
}

impl AccKind {
    fn sets(self) -> usize {
        match self {
            AccKind::Buchi => 1,
            AccKind::Rabin(k) | AccKind::Streett(k) => 2 * k,
            AccKind::Parity(k) => k,
        }
    }

    fn name(self) -> String {
        match self {
            AccKind::Buchi => "Buchi".into(),
            AccKind::Rabin(k) => format!("Rabin {k}"),
            AccKind::Streett(k) => format!("Streett {k}"),
            AccKind::Parity(k) => format!("parity min even {k}"),
        }
    }

    fn formula(self) -> String {
        let pairs = |k: usize, inner: &str, outer: &str, empty: &str, first: &str| {
            if k == 0 {
                return empty.to_string();
            }
            let terms: Vec<String> = (0..k)
                .map(|i| format!("{first}({}) {inner} Inf({})", 2 * i, 2 * i + 1))
                .collect();
            if k == 1 {
                terms[0].clone()
            } else {
                terms
                    .iter()
                    .map(|t| format!("({t})"))
                    .collect::<Vec<_>>()
                    .join(&format!(" {outer} "))
            }
        };
        match self {
            AccKind::Buchi => "Inf(0)".into(),
            AccKind::Rabin(k) => pairs(k, "&", "|", "f", "Fin"),
            AccKind::Streett(k) => pairs(k, "|", "&", "t", "Fin"),
            AccKind::Parity(0) => "f".into(),
            AccKind::Parity(k) => parity_formula(0, k),
        }
    }
}

fn parity_formula(i: usize, k: usize) -> String {
    let atom = if i.is_multiple_of(2) {
        format!("Inf({i})")
    } else {
        format!("Fin({i})")
    };
    if i + 1 == k {
        return atom;
    }
    let op = if i.is_multiple_of(2) { "|" } else { "&" };
    let rest = parity_formula(i + 1, k);
    if i + 2 == k {
        format!("{atom} {op} {rest}")
    } else {
        format!("{atom} {op} ({rest})")
    }
}

fn kind_of(a: &Automaton) -> AccKind {
    match &a.acceptance {
        Acceptance::Buchi(_) => AccKind::Buchi,
        Acceptance::Rabin(p) => AccKind::Rabin(p.len()),
        Acceptance::Streett(p) => AccKind::Streett(p.len()),
        Acceptance::Parity { index, .. } => AccKind::Parity(*index),
    }
}

fn state_sets(a: &Automaton, q: usize) -> Vec<usize> {
    match &a.acceptance {
        Acceptance::Buchi(acc) => acc.contains(q).then_some(0).into_iter().collect(),
        Acceptance::Rabin(pairs) => pairs
            .iter()
            .enumerate()
            .flat_map(|(i, p)| {
                [
                    (p.avoid.contains(q), 2 * i),
                    (p.visit.contains(q), 2 * i + 1),
                ]
            })
            .filter_map(|(member, set)| member.then_some(set))
            .collect(),
        Acceptance::Streett(pairs) => pairs
            .iter()
            .enumerate()
            .flat_map(|(i, p)| {
                [
                    (p.request.contains(q), 2 * i),
                    (p.fulfil.contains(q), 2 * i + 1),
                ]
            })
            .filter_map(|(member, set)| member.then_some(set))
            .collect(),
        Acceptance::Parity { priorities, .. } => vec![priorities[q]],
    }
}

fn quote(s: &str) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Atomic propositions describing `alphabet`: its own if it has valuation
/// names, synthetic `p0, p1, …` if its size is a power of two.
fn propositions(alphabet: &Alphabet) -> Result<Vec<String>, EmitError> {
    if alphabet.has_valuation_names() {
        return Ok(alphabet.props().unwrap_or_default().to_vec());
    }
    let len = alphabet.len();
    if !len.is_power_of_two() {
        return Err(EmitError::NotPowerOfTwo(len));
    }
    Ok((0..len.trailing_zeros()).map(|j| format!("p{j}")).collect())
}

fn label(props: usize, symbol: usize) -> String {
    if props == 0 {
        return "t".into();
    }
    (0..props)
        .map(|j| {
            if symbol & (1 << j) == 0 {
                format!("!{j}")
            } else {
                j.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("&")
}

/// Writes `a` as a HOA document. The output only depends on `a`.
pub fn emit_hoa(a: &Automaton) -> Result<String, EmitError> {
    let diagnostics = a.validate();
    if let Some(d) = diagnostics.first() {
        return Err(EmitError::Malformed(d.to_string()));
    }
    let props = propositions(&a.alphabet)?;
    let kind = kind_of(a);
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "HOA: v1");
    let _ = writeln!(w, "States: {}", a.state_count);
    let _ = writeln!(w, "Start: {}", a.initial);
    let quoted: Vec<String> = props.iter().map(|p| quote(p)).collect();
    let _ = writeln!(w, "AP: {}{}", props.len(), prefixed(&quoted));
    let _ = writeln!(w, "acc-name: {}", kind.name());
    let _ = writeln!(w, "Acceptance: {} {}", kind.sets(), kind.formula());
    let mut properties = vec!["trans-labels", "explicit-labels", "state-acc"];
    if a.is_total() {
        properties.push("complete");
    }
    if a.deterministic {
        properties.push("deterministic");
    }
    let _ = writeln!(w, "properties: {}", properties.join(" "));
    let _ = writeln!(w, "--BODY--");
    for q in 0..a.state_count {
        let sets = state_sets(a, q);
        if sets.is_empty() {
            let _ = writeln!(w, "State: {q}");
        } else {
            let sets: Vec<String> = sets.iter().map(usize::to_string).collect();
            let _ = writeln!(w, "State: {q} {{{}}}", sets.join(" "));
        }
        for sym in 0..a.alphabet.len() {
            for t in a.successors(q, sym) {
                let _ = writeln!(w, "[{}] {t}", label(props.len(), sym));
            }
        }
    }
    let _ = writeln!(w, "--END--");
    Ok(out)
}

fn prefixed(items: &[String]) -> String {
    items.iter().map(|s| format!(" {s}")).collect()
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    eof: Pos,
}

struct Header {
    states: Option<usize>,
    start: Option<usize>,
    props: Option<Vec<String>>,
    kind: Option<AccKind>,
    acceptance: Option<(usize, String, Pos)>,
    deterministic: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map_or(self.eof, |(_, p)| *p)
    }

    fn next(&mut self) -> Option<(Tok, Pos)> {
        let t = self.toks.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn expect_int(&mut self, what: &str) -> Result<usize, ParseError> {
        match self.next() {
            Some((Tok::Int(i), _)) => Ok(i),
            Some((t, p)) => err(p, format!("expected {what}, found {}", t.describe())),
            None => err(self.eof, format!("expected {what}, found end of input")),
        }
    }

    /// Tokens up to the next header or `--BODY--`.
    fn header_items(&mut self) -> Vec<(Tok, Pos)> {
        let mut items = Vec::new();
        while let Some(t) = self.peek() {
            if matches!(t, Tok::Header(_) | Tok::Body | Tok::End | Tok::Abort) {
                break;
            }
            items.push(self.next().expect("peeked"));
        }
        items
    }

    fn header(&mut self) -> Result<Header, ParseError> {
        match (self.next(), self.next()) {
            (Some((Tok::Header(h), _)), Some((Tok::Ident(v), _))) if h == "HOA" && v == "v1" => {}
            _ => return err(Pos { line: 1, column: 1 }, "expected 'HOA: v1'"),
        }
        let mut h = Header {
            states: None,
            start: None,
            props: None,
            kind: None,
            acceptance: None,
            deterministic: false,
        };
        loop {
            let pos = self.pos();
            match self.next() {
                Some((Tok::Body, _)) => return Ok(h),
                Some((Tok::Header(name), _)) => self.header_item(&mut h, &name, pos)?,
                Some((t, p)) => return err(p, format!("unexpected {}", t.describe())),
                None => return err(self.eof, "missing '--BODY--'"),
            }
        }
    }

    fn header_item(&mut self, h: &mut Header, name: &str, pos: Pos) -> Result<(), ParseError> {
        match name {
            "States" => {
                h.states = Some(self.expect_int("state count")?);
                self.no_more("States")?;
            }
            "Start" => {
                if h.start.is_some() {
                    return err(pos, "multiple initial states are not supported");
                }
                h.start = Some(self.expect_int("initial state")?);
                if self.peek() == Some(&Tok::Punct('&')) {
                    return err(self.pos(), "conjunctive initial states are not supported");
                }
                self.no_more("Start")?;
            }
            "AP" => {
                let count = self.expect_int("proposition count")?;
                let mut props = Vec::new();
                for (t, p) in self.header_items() {
                    match t {
                        Tok::Str(s) => props.push(s),
                        t => {
                            return err(
                                p,
                                format!("expected proposition name, found {}", t.describe()),
                            )
                        }
                    }
                }
                if props.len() != count {
                    return err(
                        pos,
                        format!("AP declares {count} propositions but names {}", props.len()),
                    );
                }
                h.props = Some(props);
            }
            "acc-name" => h.kind = Some(self.acc_name(pos)?),
            "Acceptance" => {
                let sets = self.expect_int("acceptance set count")?;
                let formula: String = self
                    .header_items()
                    .into_iter()
                    .map(|(t, _)| match t {
                        Tok::Ident(s) => s,
                        Tok::Int(i) => i.to_string(),
                        Tok::Punct(c) => c.to_string(),
                        Tok::Str(s) => quote(&s),
                        other => other.describe(),
                    })
                    .collect();
                h.acceptance = Some((sets, formula, pos));
            }
            "Alias" => return err(pos, "aliases are not supported"),
            "properties" => {
                for (t, p) in self.header_items() {
                    match t {
                        Tok::Ident(s) if s == "deterministic" => h.deterministic = true,
                        Tok::Ident(s) if s == "implicit-labels" => {
                            return err(p, "implicit edge labels are not supported")
                        }
                        Tok::Ident(s) if s == "trans-acc" => {
                            return err(p, "edge-based acceptance marks are not supported")
                        }
                        _ => {}
                    }
                }
            }
            other if other.starts_with(|c: char| c.is_ascii_uppercase()) => {
                return err(pos, format!("unsupported header '{other}:'"));
            }
            _ => {
                self.header_items();
            }
        }
        Ok(())
    }

    fn no_more(&mut self, header: &str) -> Result<(), ParseError> {
        match self.header_items().first() {
            Some((t, p)) => err(*p, format!("unexpected {} in '{header}:'", t.describe())),
            None => Ok(()),
        }
    }

    fn acc_name(&mut self, pos: Pos) -> Result<AccKind, ParseError> {
        let items = self.header_items();
        let words: Vec<String> = items
            .iter()
            .map(|(t, _)| match t {
                Tok::Ident(s) => s.clone(),
                Tok::Int(i) => i.to_string(),
                other => other.describe(),
            })
            .collect();
        let int = |i: usize| {
            items.get(i).and_then(|(t, _)| match t {
                Tok::Int(v) => Some(*v),
                _ => None,
            })
        };
        let words: Vec<&str> = words.iter().map(String::as_str).collect();
        match words.as_slice() {
            ["Buchi"] => Ok(AccKind::Buchi),
            ["Rabin", _] if int(1).is_some() => Ok(AccKind::Rabin(int(1).expect("checked"))),
            ["Streett", _] if int(1).is_some() => Ok(AccKind::Streett(int(1).expect("checked"))),
            ["parity", "min", "even", _] if int(3).is_some() => {
                Ok(AccKind::Parity(int(3).expect("checked")))
            }
            ["parity", ..] => err(pos, "unsupported parity polarity"),
            [] => err(pos, "empty acc-name"),
            [name, ..] => err(pos, format!("unsupported acceptance name '{name}'")),
        }
    }

    fn label(&mut self, props: usize) -> Result<usize, ParseError> {
        let open = self.pos();
        self.next();
        let mut symbol = 0;
        let mut assigned = vec![false; props];
        let mut literals = 0;
        loop {
            let pos = self.pos();
            match self.next() {
                Some((Tok::Ident(s), _)) if s == "t" && props == 0 && literals == 0 => {
                    literals += 1;
                }
                Some((Tok::Punct('!'), _)) => {
                    self.label_prop(props, &mut assigned)?;
                    literals += 1;
                }
                Some((Tok::Int(_), _)) => {
                    self.at -= 1;
                    symbol |= 1 << self.label_prop(props, &mut assigned)?;
                    literals += 1;
                }
                Some((Tok::Punct('|'), p)) => {
                    return err(p, "disjunctive labels are not supported")
                }
                Some((Tok::Punct('@'), p)) => return err(p, "aliases are not supported"),
                Some((t, p)) => return err(p, format!("unexpected {} in label", t.describe())),
                None => return err(pos, "unterminated label"),
            }
            match self.next() {
                Some((Tok::Punct('&'), _)) => continue,
                Some((Tok::Punct(']'), _)) => break,
                Some((Tok::Punct('|'), p)) => {
                    return err(p, "disjunctive labels are not supported")
                }
                Some((t, p)) => return err(p, format!("unexpected {} in label", t.describe())),
                None => return err(self.eof, "unterminated label"),
            }
        }
        if assigned.iter().any(|a| !a) {
            return err(
                open,
                "incomplete label: every atomic proposition must be assigned",
            );
        }
        Ok(symbol)
    }

    fn label_prop(&mut self, props: usize, assigned: &mut [bool]) -> Result<usize, ParseError> {
        let pos = self.pos();
        let j = self.expect_int("proposition index")?;
        if j >= props {
            return err(pos, format!("proposition {j} is not declared"));
        }
        if std::mem::replace(&mut assigned[j], true) {
            return err(pos, format!("proposition {j} is assigned twice"));
        }
        Ok(j)
    }

    fn set_list(&mut self) -> Result<Vec<(usize, Pos)>, ParseError> {
        self.next();
        let mut sets = Vec::new();
        loop {
            let pos = self.pos();
            match self.next() {
                Some((Tok::Int(i), _)) => sets.push((i, pos)),
                Some((Tok::Punct('}'), _)) => return Ok(sets),
                Some((t, p)) => {
                    return err(p, format!("unexpected {} in acceptance sets", t.describe()))
                }
                None => return err(pos, "unterminated acceptance sets"),
            }
        }
    }
}

/// Parses a HOA document of the supported subset.
pub fn parse_hoa(text: &str) -> Result<Automaton, ParseError> {
    let toks = lex(text)?;
    let eof = {
        let line = text.lines().count().max(1);
        let column = text.lines().last().map_or(0, |l| l.chars().count()) + 1;
        Pos { line, column }
    };
    let mut p = Parser { toks, at: 0, eof };
    let h = p.header()?;
    let origin = Pos { line: 1, column: 1 };
    let Some(n) = h.states else {
        return err(origin, "missing 'States:' header");
    };
    let Some(start) = h.start else {
        return err(origin, "missing 'Start:' header");
    };
    if start >= n {
        return err(origin, format!("initial state {start} out of range"));
    }
    let props = h.props.unwrap_or_default();
    let Some(kind) = h.kind else {
        return err(origin, "missing 'acc-name:' header");
    };
    let Some((sets, formula, acc_pos)) = h.acceptance else {
        return err(origin, "missing 'Acceptance:' header");
    };
    let expected: String = kind
        .formula()
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect();
    if sets != kind.sets() || formula != expected {
        return err(
            acc_pos,
            format!(
                "acceptance condition does not match acc-name '{}'",
                kind.name()
            ),
        );
    }
    let alphabet = Alphabet::from_props(props.clone()).map_err(|e| ParseError {
        pos: origin,
        message: e.to_string(),
    })?;

    let mut transitions = vec![vec![Vec::new(); alphabet.len()]; n];
    let mut marks: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut current: Option<usize> = None;
    loop {
        let pos = p.pos();
        match p.peek().cloned() {
            Some(Tok::End) => {
                p.next();
                break;
            }
            Some(Tok::Abort) => return err(pos, "document was aborted"),
            Some(Tok::Header(h)) if h == "State" => {
                p.next();
                if p.peek() == Some(&Tok::Punct('[')) {
                    return err(p.pos(), "state labels are not supported");
                }
                let q_pos = p.pos();
                let q = p.expect_int("state number")?;
                if q >= n {
                    return err(q_pos, format!("state {q} out of range"));
                }
                if marks[q].is_some() {
                    return err(q_pos, format!("state {q} is defined twice"));
                }
                if matches!(p.peek(), Some(Tok::Str(_))) {
                    p.next();
                }
                let mut own = Vec::new();
                if p.peek() == Some(&Tok::Punct('{')) {
                    for (set, set_pos) in p.set_list()? {
                        if set >= sets {
                            return err(set_pos, format!("acceptance set {set} is not declared"));
                        }
                        own.push(set);
                    }
                }
                marks[q] = Some(own);
                current = Some(q);
            }
            Some(Tok::Punct('[')) => {
                let Some(q) = current else {
                    return err(pos, "edge outside of a state");
                };
                let sym = p.label(props.len())?;
                let t_pos = p.pos();
                let t = p.expect_int("target state")?;
                if t >= n {
                    return err(t_pos, format!("target state {t} out of range"));
                }
                match p.peek() {
                    Some(Tok::Punct('&')) => {
                        return err(p.pos(), "universal branching is not supported")
                    }
                    Some(Tok::Punct('{')) => {
                        return err(p.pos(), "edge-based acceptance marks are not supported")
                    }
                    _ => {}
                }
                let succ: &mut Vec<usize> = &mut transitions[q][sym];
                if let Err(i) = succ.binary_search(&t) {
                    succ.insert(i, t);
                }
            }
            Some(Tok::Int(_)) if current.is_some() => {
                return err(pos, "implicit edge labels are not supported")
            }
            Some(t) => return err(pos, format!("unexpected {} in body", t.describe())),
            None => return err(pos, "missing '--END--'"),
        }
    }
    if let Some((t, pos)) = p.next() {
        return err(pos, format!("unexpected {} after '--END--'", t.describe()));
    }

    let in_set = |set: usize| -> StateSet {
        (0..n)
            .filter(|&q| marks[q].as_ref().is_some_and(|m| m.contains(&set)))
            .collect()
    };
    let acceptance = match kind {
        AccKind::Buchi => Acceptance::Buchi(in_set(0)),
        AccKind::Rabin(k) => Acceptance::Rabin(
            (0..k)
                .map(|i| RabinPair {
                    avoid: in_set(2 * i),
                    visit: in_set(2 * i + 1),
                })
                .collect(),
        ),
        AccKind::Streett(k) => Acceptance::Streett(
            (0..k)
                .map(|i| StreettPair {
                    request: in_set(2 * i),
                    fulfil: in_set(2 * i + 1),
                })
                .collect(),
        ),
        AccKind::Parity(index) => {
            let mut priorities = Vec::with_capacity(n);
            for (q, m) in marks.iter().enumerate() {
                match m.as_deref() {
                    Some([p]) => priorities.push(*p),
                    _ => {
                        return err(
                            origin,
                            format!("state {q} must belong to exactly one parity set"),
                        )
                    }
                }
            }
            Acceptance::Parity { priorities, index }
        }
    };
    let a = Automaton {
        alphabet,
        state_count: n,
        initial: start,
        transitions,
        acceptance,
        deterministic: h.deterministic,
    };
    if let Some(d) = a.validate().first() {
        return err(origin, d.to_string());
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexer_positions() {
        let toks = lex("HOA: v1\n  States: 12 /* c */ \"x\\\"y\"").unwrap();
        let kinds: Vec<&Tok> = toks.iter().map(|(t, _)| t).collect();
        assert_eq!(
            kinds,
            [
                &Tok::Header("HOA".into()),
                &Tok::Ident("v1".into()),
                &Tok::Header("States".into()),
                &Tok::Int(12),
                &Tok::Str("x\"y".into()),
            ]
        );
        assert_eq!(toks[2].1, Pos { line: 2, column: 3 });
        assert_eq!(toks[4].1, Pos { line: 2, column: 22 });
        assert_eq!(lex("a $").unwrap_err().pos, Pos { line: 1, column: 3 });
        assert!(lex("/* open").is_err());
    }

    #[test]
    fn standard_formulas() {
        assert_eq!(AccKind::Parity(1).formula(), "Inf(0)");
        assert_eq!(AccKind::Parity(2).formula(), "Inf(0) | Fin(1)");
        assert_eq!(AccKind::Parity(3).formula(), "Inf(0) | (Fin(1) & Inf(2))");
        assert_eq!(AccKind::Parity(0).formula(), "f");
        assert_eq!(AccKind::Rabin(1).formula(), "Fin(0) & Inf(1)");
        assert_eq!(AccKind::Streett(0).formula(), "t");
        assert_eq!(AccKind::Streett(1).formula(), "Fin(0) | Inf(1)");
    }

    #[test]
    fn labels_follow_bit_order() {
        assert_eq!(label(0, 0), "t");
        assert_eq!(label(2, 1), "0&!1");
        assert_eq!(label(2, 2), "!0&1");
    }
}
