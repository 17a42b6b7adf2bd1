use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use detpar::cli::run_cli;
use detpar::hoa::{emit_hoa, parse_hoa};
use detpar_core::fixtures::two_state_spawner;
use detpar_core::{Acceptance, Alphabet, Automaton, StateSet, StreettPair};
use tempfile::TempDir;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("detpar").chain(args.iter().copied());
    let code = run_cli(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn value<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no '{key}' in {out}"))
}

/// Infinitely many `a` over the proposition `a`.
fn inf_a() -> Automaton {
    let mut n = Automaton::empty(
        Alphabet::from_props(["a"]).unwrap(),
        2,
        Acceptance::Buchi(StateSet::singleton(1)),
    );
    for q in 0..2 {
        n.add_transition(q, 0, 0);
        n.add_transition(q, 1, 1);
    }
    n
}

fn write(dir: &TempDir, name: &str, a: &Automaton) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, emit_hoa(a).unwrap()).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn determinize_with_stats() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "nbw.hoa", &inf_a());
    let output = dir.path().join("dpw.hoa");
    let r = run(&[
        "determinize",
        "--type",
        "buchi",
        "--backend",
        "compact",
        "--input",
        s(&input),
        "--output",
        s(&output),
        "--stats",
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    let states: usize = value(&r.out, "states").parse().unwrap();
    assert!(states <= 16);
    assert_eq!(value(&r.out, "state-bound"), "16");
    assert!(value(&r.out, "max-priority").parse::<usize>().unwrap() <= 3);
    assert_eq!(value(&r.out, "acceptance"), "parity min even 4");
    let d = parse_hoa(&fs::read_to_string(&output).unwrap()).unwrap();
    assert!(d.deterministic);
    assert_eq!(d.state_count, states);
}

#[test]
fn determinize_with_the_reference_backend() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "nbw.hoa", &inf_a());
    let output = dir.path().join("drw.hoa");
    let r = run(&[
        "determinize",
        "--type",
        "buchi",
        "--backend",
        "safra",
        "--input",
        s(&input),
        "--output",
        s(&output),
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(value(&r.out, "acceptance"), "Rabin 2");
    let check = run(&["xcheck", "--left", s(&input), "--right", s(&output)]);
    assert_eq!(check.code, 0, "{}", check.out);
}

#[test]
fn determinize_streett() {
    let dir = TempDir::new().unwrap();
    let mut nsw = inf_a();
    nsw.acceptance = Acceptance::Streett(vec![StreettPair {
        fulfil: StateSet::singleton(1),
        request: StateSet::full(2),
    }]);
    let input = write(&dir, "nsw.hoa", &nsw);
    let output = dir.path().join("dpw.hoa");
    let r = run(&[
        "determinize",
        "--type",
        "streett",
        "--input",
        s(&input),
        "--output",
        s(&output),
        "--stats",
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(value(&r.out, "state-bound"), "3072");
    let check = run(&[
        "xcheck",
        "--left",
        s(&input),
        "--right",
        s(&output),
        "--max-prefix",
        "2",
    ]);
    assert_eq!(check.code, 0, "{}", check.out);

    let wrong = run(&[
        "determinize",
        "--type",
        "buchi",
        "--input",
        s(&input),
        "--output",
        s(&output),
    ]);
    assert_eq!(wrong.code, 2);
    assert!(
        wrong.err.contains("expected Buchi acceptance"),
        "{}",
        wrong.err
    );
}

#[test]
fn member_reports_cycle_priorities() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "nbw.hoa", &inf_a());
    let output = dir.path().join("dpw.hoa");
    let r = run(&[
        "determinize",
        "--type",
        "buchi",
        "--input",
        s(&input),
        "--output",
        s(&output),
    ]);
    assert_eq!(r.code, 0);

    let yes = run(&[
        "member",
        "--input",
        s(&output),
        "--prefix",
        "a",
        "--period",
        "a,!a",
    ]);
    assert_eq!(yes.code, 0, "{}", yes.err);
    assert_eq!(value(&yes.out, "verdict"), "accepted");
    let priorities: Vec<usize> = value(&yes.out, "cycle-priorities")
        .split(',')
        .map(|p| p.parse().unwrap())
        .collect();
    assert_eq!(priorities.iter().min().unwrap() % 2, 0);

    let no = run(&["member", "--input", s(&output), "--period", "!a"]);
    assert_eq!(no.code, 1);
    assert_eq!(value(&no.out, "verdict"), "rejected");

    // symbol indices and the nondeterministic input work too
    let nondet = run(&[
        "member",
        "--input",
        s(&input),
        "--prefix",
        "0,0",
        "--period",
        "1",
    ]);
    assert_eq!(
        (nondet.code, value(&nondet.out, "verdict")),
        (0, "accepted")
    );

    let bad = run(&["member", "--input", s(&output), "--period", "c"]);
    assert_eq!(bad.code, 2);
    assert!(bad.err.contains("unknown symbol 'c'"));
    let empty = run(&["member", "--input", s(&output), "--period", ""]);
    assert_eq!(empty.code, 2);
}

#[test]
fn xcheck_finds_counterexamples() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "nbw.hoa", &inf_a());
    let complement = dir.path().join("co.hoa");
    let r = run(&[
        "complement",
        "--input",
        s(&input),
        "--output",
        s(&complement),
    ]);
    assert_eq!(r.code, 0, "{}", r.err);

    let agree = run(&[
        "xcheck",
        "--left",
        s(&input),
        "--right",
        s(&input),
        "--max-prefix",
        "3",
        "--max-period",
        "4",
    ]);
    assert_eq!(agree.code, 0);
    assert_eq!(value(&agree.out, "agreed"), "450");

    let differ = run(&["xcheck", "--left", s(&input), "--right", s(&complement)]);
    assert_eq!(differ.code, 1);
    assert_eq!(value(&differ.out, "agreed"), "0");
    assert_eq!(value(&differ.out, "counterexample-prefix"), "");
    assert_eq!(value(&differ.out, "counterexample-period"), "!a");
    assert_eq!(value(&differ.out, "left"), "rejected");
    assert_eq!(value(&differ.out, "right"), "accepted");
}

#[test]
fn complement_refuses_nondeterministic_parity() {
    let dir = TempDir::new().unwrap();
    let mut a = inf_a();
    a.acceptance = Acceptance::Parity {
        priorities: vec![1, 0],
        index: 2,
    };
    let input = write(&dir, "npw.hoa", &a);
    let r = run(&[
        "complement",
        "--input",
        s(&input),
        "--output",
        s(&dir.path().join("x.hoa")),
    ]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("nondeterministic parity"), "{}", r.err);

    a.deterministic = true;
    let input = write(&dir, "dpw.hoa", &a);
    let out = dir.path().join("co.hoa");
    let r = run(&["complement", "--input", s(&input), "--output", s(&out)]);
    assert_eq!(r.code, 0);
    assert_eq!(value(&r.out, "acceptance"), "parity min even 3");
}

#[test]
fn random_xcheck_is_reproducible() {
    let args = [
        "xcheck",
        "--random",
        "5",
        "--states",
        "3",
        "--seed",
        "9",
        "--max-prefix",
        "2",
        "--max-period",
        "3",
    ];
    let first = run(&args);
    assert_eq!(first.code, 0, "{}", first.out);
    assert_eq!(value(&first.out, "automata"), "5");
    assert_eq!(value(&first.out, "lassos"), "490");
    assert_eq!(first.out, run(&args).out);
}

#[test]
fn stats_of_a_fixture() {
    let dir = TempDir::new().unwrap();
    let mut a = two_state_spawner();
    a.alphabet = Alphabet::from_props(Vec::<String>::new()).unwrap();
    let input = write(&dir, "spawner.hoa", &a);
    let r = run(&["stats", "--input", s(&input)]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(value(&r.out, "states"), "2");
    assert_eq!(value(&r.out, "symbols"), "1");
    assert_eq!(value(&r.out, "transitions"), "3");
    assert_eq!(value(&r.out, "deterministic"), "false");
    assert_eq!(value(&r.out, "accepting-states"), "1");
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(
        run(&[
            "determinize",
            "--type",
            "rabin",
            "--input",
            "a",
            "--output",
            "b"
        ])
        .code,
        2
    );
    assert_eq!(run(&["xcheck", "--left", "x.hoa"]).code, 2);
    let missing = run(&["stats", "--input", "/nonexistent/input.hoa"]);
    assert_eq!(missing.code, 2);
    assert!(missing.err.starts_with("error: /nonexistent/input.hoa"));

    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.hoa");
    fs::write(
        &bad,
        "HOA: v1\nStates: 1\nStart: 0\nacc-name: parity max odd 1\n",
    )
    .unwrap();
    let r = run(&["stats", "--input", s(&bad)]);
    assert_eq!(r.code, 2);
    assert!(
        r.err
            .contains("line 4, column 1: unsupported parity polarity"),
        "{}",
        r.err
    );

    let help = run(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.out.contains("determinize"));
}

#[test]
fn binary_exit_codes() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "nbw.hoa", &inf_a());
    let status = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_detpar"))
            .args(args)
            .output()
            .unwrap()
    };
    let yes = status(&["member", "--input", s(&input), "--period", "a"]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&yes.stdout), "verdict: accepted\n");
    let no = status(&["member", "--input", s(&input), "--period", "!a"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(status(&["member"]).status.code(), Some(2));
}
