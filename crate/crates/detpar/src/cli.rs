//! The `detpar` command line.
//!
//! Every subcommand prints `key: value` lines on standard output and
//! diagnostics on standard error. Exit code 0 means success, acceptance or
//! agreement; 1 a negative verdict or a counterexample; 2 a usage, input or
//! format error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use detpar_core::parity::{buchi_state_bound, streett_state_bound};
use detpar_core::{
    accepts, differential_check, dualize_parity, enumerate_lassos, nbw_member, nbw_to_dpw,
    nsw_to_dpw, run_deterministic, safra_determinize, streett_safra_determinize, Acceptance,
    Alphabet, Automaton, Lasso,
};

use crate::hoa::{emit_hoa, parse_hoa, EmitError, ParseError};
use crate::random::{Generator, RandomParams};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Hoa { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Emit(#[from] EmitError),
    #[error(transparent)]
    Core(#[from] detpar_core::Error),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Parser)]
#[command(
    name = "detpar",
    version,
    about = "Determinize Büchi and Streett automata into parity automata"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Determinize an NBW or NSW.
    Determinize(DeterminizeArgs),
    /// Complement an automaton through a deterministic parity automaton.
    Complement(ComplementArgs),
    /// Decide membership of a lasso word u·v^ω.
    Member(MemberArgs),
    /// Compare two automata on all small lasso words.
    Xcheck(XcheckArgs),
    /// Print size and acceptance information.
    Stats(StatsArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InputType {
    Buchi,
    Streett,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Backend {
    /// Compact trees with dynamic names, producing a parity automaton.
    Compact,
    /// Safra's construction with static names, producing a Rabin automaton.
    Safra,
}

#[derive(Debug, Args)]
struct DeterminizeArgs {
    #[arg(long = "type", value_enum)]
    kind: InputType,
    #[arg(long, value_enum, default_value = "compact")]
    backend: Backend,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: PathBuf,
    /// Also print the state bound and the largest priority.
    #[arg(long)]
    stats: bool,
}

#[derive(Debug, Args)]
struct ComplementArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: PathBuf,
}

#[derive(Debug, Args)]
struct MemberArgs {
    #[arg(long)]
    input: PathBuf,
    /// Comma-separated symbols of the finite prefix u.
    #[arg(long, default_value = "")]
    prefix: String,
    /// Comma-separated symbols of the repeated period v.
    #[arg(long)]
    period: String,
}

#[derive(Debug, Args)]
struct XcheckArgs {
    #[arg(long, required_unless_present = "random")]
    left: Option<PathBuf>,
    #[arg(long, required_unless_present = "random")]
    right: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    max_prefix: usize,
    #[arg(long, default_value_t = 4)]
    max_period: usize,
    /// Instead of two files, check COUNT random NBWs against their
    /// determinizations.
    #[arg(long, value_name = "COUNT", conflicts_with_all = ["left", "right"])]
    random: Option<usize>,
    #[arg(long, default_value_t = 3, requires = "random")]
    states: usize,
    #[arg(long, default_value_t = 0, requires = "random")]
    seed: u64,
}

#[derive(Debug, Args)]
struct StatsArgs {
    #[arg(long)]
    input: PathBuf,
}

/// Runs the command line `argv` (program name first) and returns the exit
/// code.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    let result = match cli.command {
        Command::Determinize(args) => determinize(&args, out),
        Command::Complement(args) => complement(&args, out),
        Command::Member(args) => member(&args, out),
        Command::Xcheck(args) => xcheck(&args, out),
        Command::Stats(args) => stats(&args, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read(path: &Path) -> Result<Automaton, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_hoa(&text).map_err(|source| CliError::Hoa {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, a: &Automaton) -> Result<(), CliError> {
    fs::write(path, emit_hoa(a)?).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn acceptance_line(a: &Automaton) -> String {
    match &a.acceptance {
        Acceptance::Buchi(_) => "Buchi".into(),
        Acceptance::Rabin(p) => format!("Rabin {}", p.len()),
        Acceptance::Streett(p) => format!("Streett {}", p.len()),
        Acceptance::Parity { index, .. } => format!("parity min even {index}"),
    }
}

fn determinize(args: &DeterminizeArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let a = read(&args.input)?;
    let d = match (args.kind, args.backend) {
        (InputType::Buchi, Backend::Compact) => nbw_to_dpw(&a)?,
        (InputType::Buchi, Backend::Safra) => safra_determinize(&a)?,
        (InputType::Streett, Backend::Compact) => nsw_to_dpw(&a)?,
        (InputType::Streett, Backend::Safra) => streett_safra_determinize(&a)?,
    };
    write(&args.output, &d)?;
    let _ = writeln!(out, "states: {}", d.state_count);
    let _ = writeln!(out, "acceptance: {}", acceptance_line(&d));
    if args.stats {
        let pairs = match &a.acceptance {
            Acceptance::Streett(p) => p.len(),
            _ => 0,
        };
        let bound = match args.kind {
            InputType::Buchi => buchi_state_bound(a.state_count),
            InputType::Streett => streett_state_bound(a.state_count, pairs),
        };
        let _ = writeln!(out, "input-states: {}", a.state_count);
        if let Some(p) = d.max_priority() {
            let _ = writeln!(out, "max-priority: {p}");
        }
        let _ = writeln!(out, "state-bound: {bound}");
    }
    Ok(0)
}

fn complement(args: &ComplementArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let a = read(&args.input)?;
    let d = match &a.acceptance {
        Acceptance::Buchi(_) => nbw_to_dpw(&a)?,
        Acceptance::Streett(_) => nsw_to_dpw(&a)?,
        Acceptance::Parity { .. } if a.deterministic => a.clone(),
        Acceptance::Parity { .. } => {
            return Err(CliError::Invalid(
                "cannot complement a nondeterministic parity automaton".into(),
            ))
        }
        Acceptance::Rabin(_) => {
            return Err(CliError::Invalid(
                "complementation of Rabin automata is not supported".into(),
            ))
        }
    };
    let c = dualize_parity(&d)?;
    write(&args.output, &c)?;
    let _ = writeln!(out, "states: {}", c.state_count);
    let _ = writeln!(out, "acceptance: {}", acceptance_line(&c));
    Ok(0)
}

/// Resolves one symbol written as its exact name, its index, or the
/// `+`-joined set of propositions that are true.
fn resolve_symbol(alphabet: &Alphabet, token: &str) -> Result<usize, CliError> {
    if let Ok(i) = alphabet.index_of(token) {
        return Ok(i);
    }
    if let Ok(i) = token.parse::<usize>() {
        if i < alphabet.len() {
            return Ok(i);
        }
    }
    if let Some(props) = alphabet.props() {
        let mut symbol = 0;
        let all_known = token.split('+').all(|p| {
            props
                .iter()
                .position(|q| q == p)
                .map(|j| symbol |= 1 << j)
                .is_some()
        });
        if all_known && alphabet.has_valuation_names() {
            return Ok(symbol);
        }
    }
    Err(CliError::Invalid(format!("unknown symbol '{token}'")))
}

fn parse_word(alphabet: &Alphabet, text: &str) -> Result<Vec<usize>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| resolve_symbol(alphabet, t.trim()))
        .collect()
}

fn verdict(accepted: bool) -> &'static str {
    if accepted {
        "accepted"
    } else {
        "rejected"
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn member(args: &MemberArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let a = read(&args.input)?;
    let lasso = Lasso::new(
        parse_word(&a.alphabet, &args.prefix)?,
        parse_word(&a.alphabet, &args.period)?,
    )?;
    let accepted = if a.deterministic {
        let run = run_deterministic(&a, &lasso)?;
        let _ = writeln!(out, "verdict: {}", verdict(run.accepted));
        let _ = writeln!(out, "cycle-states: {}", join(run.cycle_states.iter()));
        if let Acceptance::Parity { priorities, .. } = &a.acceptance {
            let mut seen: Vec<usize> = run.cycle_states.iter().map(|q| priorities[q]).collect();
            seen.sort_unstable();
            seen.dedup();
            let _ = writeln!(out, "cycle-priorities: {}", join(seen));
        }
        run.accepted
    } else {
        let accepted = accepts(&a, &lasso)?;
        let _ = writeln!(out, "verdict: {}", verdict(accepted));
        accepted
    };
    Ok(if accepted { 0 } else { 1 })
}

fn xcheck(args: &XcheckArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if let Some(count) = args.random {
        return xcheck_random(args, count, out);
    }
    let (Some(left), Some(right)) = (&args.left, &args.right) else {
        return Err(CliError::Invalid("--left and --right are required".into()));
    };
    let left = read(left)?;
    let right = read(right)?;
    let lassos = enumerate_lassos(&left.alphabet, args.max_prefix, args.max_period);
    let report = differential_check(&left, &right, &lassos)?;
    let _ = writeln!(out, "lassos: {}", report.examined());
    let _ = writeln!(out, "agreed: {}", report.agreed);
    let _ = writeln!(out, "disagreements: {}", report.disagreements.len());
    if let Some(d) = report.disagreements.first() {
        let (u, v) = d.lasso.display(&left.alphabet);
        let _ = writeln!(out, "counterexample-prefix: {u}");
        let _ = writeln!(out, "counterexample-period: {v}");
        let _ = writeln!(out, "left: {}", verdict(d.left));
        let _ = writeln!(out, "right: {}", verdict(d.right));
        return Ok(1);
    }
    Ok(0)
}

/// Draws `count` seeded random NBWs and checks that the compact DPW and
/// the reference DRW both agree with the NBW on every lasso.
fn xcheck_random(args: &XcheckArgs, count: usize, out: &mut dyn Write) -> Result<i32, CliError> {
    if args.states == 0 {
        return Err(CliError::Invalid("--states must be at least 1".into()));
    }
    let mut generator = Generator::new(args.seed, RandomParams::default());
    let (mut lassos_seen, mut agreed) = (0, 0);
    for index in 0..count {
        let a = generator.nbw(args.states);
        let dpw = nbw_to_dpw(&a)?;
        let drw = safra_determinize(&a)?;
        for lasso in enumerate_lassos(&a.alphabet, args.max_prefix, args.max_period) {
            lassos_seen += 1;
            let expected = nbw_member(&a, &lasso)?;
            let compact = run_deterministic(&dpw, &lasso)?.accepted;
            let reference = run_deterministic(&drw, &lasso)?.accepted;
            if compact == expected && reference == expected {
                agreed += 1;
                continue;
            }
            let (u, v) = lasso.display(&a.alphabet);
            let _ = writeln!(out, "automata: {}", index + 1);
            let _ = writeln!(out, "lassos: {lassos_seen}");
            let _ = writeln!(out, "agreed: {agreed}");
            let _ = writeln!(out, "failing-automaton: {index}");
            let _ = writeln!(out, "counterexample-prefix: {u}");
            let _ = writeln!(out, "counterexample-period: {v}");
            let _ = writeln!(out, "nbw: {}", verdict(expected));
            let _ = writeln!(out, "compact: {}", verdict(compact));
            let _ = writeln!(out, "safra: {}", verdict(reference));
            return Ok(1);
        }
    }
    let _ = writeln!(out, "automata: {count}");
    let _ = writeln!(out, "lassos: {lassos_seen}");
    let _ = writeln!(out, "agreed: {agreed}");
    let _ = writeln!(out, "disagreements: 0");
    Ok(0)
}

fn stats(args: &StatsArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let a = read(&args.input)?;
    let transitions: usize = a.transitions.iter().flatten().map(Vec::len).sum();
    let _ = writeln!(out, "states: {}", a.state_count);
    let _ = writeln!(out, "symbols: {}", a.alphabet.len());
    let _ = writeln!(out, "transitions: {transitions}");
    let _ = writeln!(out, "deterministic: {}", a.deterministic);
    let _ = writeln!(out, "complete: {}", a.is_total());
    let _ = writeln!(out, "acceptance: {}", acceptance_line(&a));
    match &a.acceptance {
        Acceptance::Buchi(acc) => {
            let _ = writeln!(out, "accepting-states: {}", acc.len());
        }
        Acceptance::Parity { .. } => {
            if let Some(p) = a.max_priority() {
                let _ = writeln!(out, "max-priority: {p}");
            }
        }
        Acceptance::Rabin(_) | Acceptance::Streett(_) => {}
    }
    Ok(0)
}
