//! End-to-end acceptance checks on seeded random corpora and the named
//! fixtures. Prints one PASS/FAIL line per check and exits non-zero if any
//! check fails.

use std::process::ExitCode;
use std::time::Instant;

use detpar::hoa::{emit_hoa, parse_hoa};
use detpar::random::{Generator, RandomParams};
use detpar_core::fixtures::{build_lk_fixture, infinitely_many_a, lk_contains};
use detpar_core::parity::{
    buchi_state_bound, compact_step, compact_streett_initial, compact_streett_step,
    nbw_to_dpw_with_states, streett_state_bound, CompactTree, DpwState, StepOutcome, TreeKind,
};
use detpar_core::{
    differential_check, dualize_parity, enumerate_lassos, nbw_member, nbw_to_dpw, nsw_member,
    nsw_to_dpw, nsw_witness_union_nbw, run_deterministic, safra_determinize, Acceptance, Automaton,
    PairSet,
};
use rand::Rng;

const BUCHI_SEED: u64 = 2026;
const STREETT_SEED: u64 = 2027;
const STEP_SEED: u64 = 2028;
const STEPS_PER_VARIANT: usize = 5_000;

struct Corpus {
    /// Random NBWs with one to four states.
    nbws: Vec<Automaton>,
    /// `nbws` followed by the fixed NBWs.
    nbws_and_fixtures: Vec<Automaton>,
    /// Random NSWs with up to three states and two pairs.
    nsws: Vec<Automaton>,
}

fn corpus() -> Corpus {
    let mut g = Generator::new(BUCHI_SEED, RandomParams::default());
    let nbws: Vec<Automaton> = (0..200).map(|i| g.nbw(1 + i % 4)).collect();
    let mut nbws_and_fixtures = nbws.clone();
    nbws_and_fixtures.push(infinitely_many_a());
    nbws_and_fixtures.push(build_lk_fixture(2).expect("k > 0"));
    nbws_and_fixtures.push(build_lk_fixture(3).expect("k > 0"));
    let mut g = Generator::new(STREETT_SEED, RandomParams::default());
    let nsws = (0..100).map(|i| g.nsw(1 + i % 3, (i / 3) % 3)).collect();
    Corpus {
        nbws,
        nbws_and_fixtures,
        nsws,
    }
}

fn pairs(a: &Automaton) -> usize {
    match &a.acceptance {
        Acceptance::Streett(p) => p.len(),
        _ => 0,
    }
}

type Check = Result<String, String>;
type Criterion = (&'static str, fn(&Corpus) -> Check);

fn buchi_state_bound_holds(c: &Corpus) -> Check {
    let mut worst = (0.0f64, 0, 0);
    let mut failures = Vec::new();
    let mut sink_only = 0;
    let mut sizes = std::collections::BTreeSet::new();
    for (i, a) in c.nbws.iter().enumerate() {
        let (d, states) = nbw_to_dpw_with_states(a).map_err(|e| e.to_string())?;
        let n = a.state_count;
        let bound = buchi_state_bound(n);
        let max_priority = d.max_priority().unwrap_or(0);
        let ratio = d.state_count as f64 / bound as f64;
        if ratio > worst.0 {
            worst = (ratio, d.state_count, n);
        }
        if d.state_count as u128 > bound || max_priority > 2 * n - 1 {
            let trees = states.iter().filter(|s| s.tree().is_some()).count();
            sink_only += (trees as u128 <= bound) as usize;
            sizes.insert(n);
            failures.push(format!(
                "#{i} n={n}: {} states ({trees} trees + sink) > {bound}, max priority {max_priority}",
                d.state_count
            ));
        }
    }
    if failures.is_empty() {
        Ok(format!(
            "{} NBWs, fullest: {} states at n={}",
            c.nbws.len(),
            worst.1,
            worst.2
        ))
    } else {
        Err(format!(
            "{} of {} NBWs over the bound ({sink_only} only by the sink state, n in {sizes:?}); first: {}",
            failures.len(),
            c.nbws.len(),
            failures[0]
        ))
    }
}

fn buchi_language_equality(c: &Corpus) -> Check {
    let mut lassos_checked = 0;
    for (i, a) in c.nbws_and_fixtures.iter().enumerate() {
        let d = nbw_to_dpw(a).map_err(|e| e.to_string())?;
        let lassos = enumerate_lassos(&a.alphabet, 3, 4);
        let report = differential_check(a, &d, &lassos).map_err(|e| e.to_string())?;
        if let Some(x) = report.disagreements.first() {
            return Err(format!("automaton #{i}: {:?}", x));
        }
        lassos_checked += report.examined();
    }
    Ok(format!(
        "{} automata, {lassos_checked} lassos, 0 disagreements",
        c.nbws_and_fixtures.len()
    ))
}

fn reference_agreement(c: &Corpus) -> Check {
    let mut lassos_checked = 0;
    for (i, a) in c.nbws_and_fixtures.iter().enumerate() {
        let d = nbw_to_dpw(a).map_err(|e| e.to_string())?;
        let r = safra_determinize(a).map_err(|e| e.to_string())?;
        let lassos = enumerate_lassos(&a.alphabet, 3, 4);
        let report = differential_check(&r, &d, &lassos).map_err(|e| e.to_string())?;
        if let Some(x) = report.disagreements.first() {
            return Err(format!("automaton #{i}: {:?}", x));
        }
        lassos_checked += report.examined();
    }
    Ok(format!("{lassos_checked} lassos, 0 disagreements"))
}

fn complementation(c: &Corpus) -> Check {
    let mut lassos_checked = 0;
    for (i, a) in c.nbws_and_fixtures.iter().enumerate() {
        let dual = dualize_parity(&nbw_to_dpw(a).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        for l in enumerate_lassos(&a.alphabet, 3, 4) {
            let original = nbw_member(a, &l).map_err(|e| e.to_string())?;
            let complement = run_deterministic(&dual, &l)
                .map_err(|e| e.to_string())?
                .accepted;
            if original == complement {
                return Err(format!("automaton #{i}: both {original} on {l:?}"));
            }
            lassos_checked += 1;
        }
    }
    Ok(format!("{lassos_checked} lassos, all verdicts flipped"))
}

fn streett_state_bound_holds(c: &Corpus) -> Check {
    let mut largest = 0;
    for (i, a) in c.nsws.iter().enumerate() {
        let d = nsw_to_dpw(a).map_err(|e| e.to_string())?;
        let (n, k) = (a.state_count, pairs(a));
        let bound = streett_state_bound(n, k);
        let max_priority = d.max_priority().unwrap_or(0);
        largest = largest.max(d.state_count);
        if d.state_count as u128 > bound || max_priority > 2 * n * (k + 1) - 1 {
            return Err(format!(
                "#{i} n={n} k={k}: {} states (bound {bound}), max priority {max_priority}",
                d.state_count
            ));
        }
    }
    Ok(format!(
        "{} NSWs, largest DPW {largest} states",
        c.nsws.len()
    ))
}

fn streett_three_way(c: &Corpus) -> Check {
    let mut lassos_checked = 0;
    for (i, a) in c.nsws.iter().enumerate() {
        let direct = nsw_to_dpw(a).map_err(|e| e.to_string())?;
        let witness = nsw_witness_union_nbw(a).map_err(|e| e.to_string())?;
        let via_buchi = nbw_to_dpw(&witness).map_err(|e| e.to_string())?;
        for l in enumerate_lassos(&a.alphabet, 2, 4) {
            let oracle = nsw_member(a, &l).map_err(|e| e.to_string())?;
            let d = run_deterministic(&direct, &l)
                .map_err(|e| e.to_string())?
                .accepted;
            let w = run_deterministic(&via_buchi, &l)
                .map_err(|e| e.to_string())?
                .accepted;
            if d != oracle || w != oracle {
                return Err(format!(
                    "NSW #{i} on {l:?}: oracle {oracle}, direct {d}, witness pipeline {w}"
                ));
            }
            lassos_checked += 1;
        }
    }
    Ok(format!("{lassos_checked} lassos, 0 disagreements"))
}

fn check_outcome(outcome: &StepOutcome, kind: TreeKind) -> Result<(), String> {
    let DpwState::Tree { tree, priority } = &outcome.state else {
        return if outcome.e == 1 {
            Ok(())
        } else {
            Err(format!("sink with e = {}", outcome.e))
        };
    };
    if let Some(v) = tree.violations(kind).first() {
        return Err(format!("{v} in {tree:?}"));
    }
    if priority % 2 == 0 && outcome.f >= outcome.e {
        return Err(format!(
            "even priority {priority} with e = {}, f = {}",
            outcome.e, outcome.f
        ));
    }
    Ok(())
}

fn random_steps(kind: TreeKind) -> Result<usize, String> {
    let mut g = Generator::new(
        STEP_SEED + (kind == TreeKind::Streett) as u64,
        RandomParams::default(),
    );
    let mut steps = 0;
    while steps < STEPS_PER_VARIANT {
        let a = match kind {
            TreeKind::Buchi => {
                let n = g.between(1, 4);
                g.nbw(n)
            }
            TreeKind::Streett => {
                let (n, k) = (g.between(1, 3), g.between(0, 2));
                g.nsw(n, k)
            }
        };
        let mut tree = match kind {
            TreeKind::Buchi => CompactTree::initial(a.initial, PairSet::EMPTY),
            TreeKind::Streett => compact_streett_initial(&a).map_err(|e| e.to_string())?,
        };
        for _ in 0..25 {
            let sym = g.rng().gen_range(0..a.alphabet.len());
            let outcome = match kind {
                TreeKind::Buchi => compact_step(&tree, sym, &a),
                TreeKind::Streett => compact_streett_step(&tree, sym, &a),
            }
            .map_err(|e| e.to_string())?;
            check_outcome(&outcome, kind).map_err(|e| format!("step {steps}: {e}"))?;
            steps += 1;
            match outcome.state {
                DpwState::Tree { tree: next, .. } => tree = next,
                DpwState::Sink => break,
            }
            if steps == STEPS_PER_VARIANT {
                break;
            }
        }
    }
    Ok(steps)
}

fn tree_invariants(_: &Corpus) -> Check {
    let buchi = random_steps(TreeKind::Buchi)?;
    let streett = random_steps(TreeKind::Streett)?;
    Ok(format!(
        "{} single steps ({buchi} Büchi, {streett} Streett)",
        buchi + streett
    ))
}

fn hoa_round_trip(c: &Corpus) -> Check {
    let mut documents = 0;
    let mut all: Vec<Automaton> = Vec::new();
    for a in c.nbws.iter().chain(&c.nsws) {
        all.push(a.clone());
    }
    for a in &c.nbws {
        all.push(nbw_to_dpw(a).map_err(|e| e.to_string())?);
        all.push(safra_determinize(a).map_err(|e| e.to_string())?);
    }
    for a in &c.nsws {
        all.push(nsw_to_dpw(a).map_err(|e| e.to_string())?);
    }
    for (i, a) in all.iter().enumerate() {
        let text = emit_hoa(a).map_err(|e| e.to_string())?;
        if emit_hoa(a).map_err(|e| e.to_string())? != text {
            return Err(format!("document #{i} differs between two emits"));
        }
        let back = parse_hoa(&text).map_err(|e| format!("document #{i}: {e}"))?;
        if &back != a {
            return Err(format!("document #{i} does not round-trip"));
        }
        documents += 1;
    }
    Ok(format!("{documents} automata round-tripped byte-stably"))
}

fn lk_semantics(_: &Corpus) -> Check {
    let mut lassos_checked = 0;
    for k in [2, 3] {
        let a = build_lk_fixture(k).map_err(|e| e.to_string())?;
        let d = nbw_to_dpw(&a).map_err(|e| e.to_string())?;
        for l in enumerate_lassos(&a.alphabet, 2, 3) {
            let verdict = run_deterministic(&d, &l)
                .map_err(|e| e.to_string())?
                .accepted;
            if verdict != lk_contains(&l.period) {
                return Err(format!("k={k}: {l:?} classified as {verdict}"));
            }
            lassos_checked += 1;
        }
    }
    Ok(format!(
        "{lassos_checked} lassos classified by their minimal recurring letter"
    ))
}

fn main() -> ExitCode {
    let corpus = corpus();
    let checks: [Criterion; 9] = [
        ("buchi-state-bound", buchi_state_bound_holds),
        ("buchi-language-equality", buchi_language_equality),
        ("safra-reference-agreement", reference_agreement),
        ("complementation", complementation),
        ("streett-state-bound", streett_state_bound_holds),
        ("streett-three-way-equality", streett_three_way),
        ("compact-tree-invariants", tree_invariants),
        ("hoa-round-trip", hoa_round_trip),
        ("lk-fixture-semantics", lk_semantics),
    ];
    let mut failed = 0;
    for (name, check) in checks {
        let start = Instant::now();
        let result = check(&corpus);
        let elapsed = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {name}: {detail} ({elapsed:.2}s)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail} ({elapsed:.2}s)");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        checks.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
