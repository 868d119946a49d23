//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ordind::frontend::parse_kb;
use ordind::independence::{
    recover_strict_order, strong_indep, strong_indep_direct, weak_indep, weak_indep_direct,
};
use ordind::lab::table::{generator_set, normalized_level_vectors, EventTable};
use ordind::lab::{Agreement, Criterion, Expectation, Lab, LabConfig, Law, Relation};
use ordind::logic::{Formula, Vocabulary};
use ordind::possibility::{Dist, Level, Measure, TriState};
use ordind::ranking::{check_rational_monotony, compute_pi_star, RuleOrigin};

const PENGUIN_LIMIT: Duration = Duration::from_secs(1);
const AGREEMENT_LIMIT: Duration = Duration::from_secs(30);

/// Enumeration scopes as `(atoms, top)`.
const SCOPES: [(usize, u32); 2] = [(2, 3), (3, 2)];

const CORPUS: &[(&str, &str)] = &[
    ("penguin.kb", include_str!("data/penguin.kb")),
    ("penguin_fixed.kb", include_str!("data/penguin_fixed.kb")),
    ("single.kb", include_str!("data/single.kb")),
    ("chain.kb", include_str!("data/chain.kb")),
    ("nixon.kb", include_str!("data/nixon.kb")),
    ("mixed.kb", include_str!("data/mixed.kb")),
    ("layered.kb", include_str!("data/layered.kb")),
    ("legless.kb", include_str!("data/legless.kb")),
];

type Check<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome {
            pass: true,
            notes: Vec::new(),
        }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.notes.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }
}

fn dists(atoms: usize, top: u32) -> Vec<Dist> {
    let vocab = Vocabulary::letters(atoms).unwrap();
    normalized_level_vectors(atoms, top)
        .map(|l| Dist::new(vocab.clone(), Level::new(top), l).unwrap())
        .collect()
}

fn penguin_scenario() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let doc = parse_kb(CORPUS[0].1).unwrap();
    let kb = doc.rule_base().unwrap();
    let v = kb.vocab();
    let atom = |n: &str| v.atom(n).unwrap();
    let r = compute_pi_star(kb).unwrap();

    let strata = &r.stratification.strata;
    o.require(
        strata == &vec![vec![1, 3], vec![0, 2]],
        format!("strata {strata:?}, expected [[1, 3], [0, 2]]"),
    );
    let prios: Vec<u32> = r.priorities.iter().map(|p| p.get()).collect();
    o.require(
        prios == [2, 1, 2, 1],
        format!("priorities {prios:?}, expected [2, 1, 2, 1]"),
    );
    for (e, c, want) in [
        ("p", "b", TriState::Accepted),
        ("p", "f", TriState::Rejected),
        ("p", "l", TriState::Ignored),
    ] {
        let got = r.query(&atom(e), &atom(c));
        o.require(
            got == want,
            format!("query({e}, {c}) = {got}, expected {want}"),
        );
    }

    let fixed = parse_kb(CORPUS[1].1).unwrap();
    let kb2 = fixed.rule_base().unwrap();
    let r2 = compute_pi_star(kb2).unwrap();
    let injected = kb2.len() - 1;
    o.require(
        kb2.rules()[injected].origin == RuleOrigin::IndependenceInjected,
        "last rule of the repaired base is not tagged as injected",
    );
    o.require(
        r2.priorities[injected] == Level::new(2),
        format!(
            "injected rule priority {}, expected 2",
            r2.priorities[injected]
        ),
    );
    let got = r2.query(&atom("p"), &atom("l"));
    o.require(
        got == TriState::Accepted,
        format!("repaired query(p, l) = {got}"),
    );

    let elapsed = start.elapsed();
    o.require(elapsed < PENGUIN_LIMIT, format!("took {elapsed:?}"));
    o.note(format!("{elapsed:.2?}"));
    o
}

fn definition_agreement() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    for (atoms, top) in SCOPES {
        let ds = dists(atoms, top);
        let gens = generator_set(ds[0].vocab());
        let mut discrepancies = 0u64;
        let mut pairs = 0u64;
        for d in &ds {
            for a in &gens {
                for c in &gens {
                    pairs += 1;
                    let (fa, fc) = (&a.formula, &c.formula);
                    if strong_indep(d, fa, fc) != strong_indep_direct(d, fa, fc) {
                        discrepancies += 1;
                    }
                    if weak_indep(d, fa, fc) != weak_indep_direct(d, fa, fc) {
                        discrepancies += 1;
                    }
                }
            }
        }
        o.require(
            discrepancies == 0,
            format!("{discrepancies} discrepancies at atoms={atoms} top={top}"),
        );
        o.note(format!(
            "atoms={atoms} top={top}: {} distributions, {pairs} pairs",
            ds.len()
        ));
    }
    let elapsed = start.elapsed();
    o.require(elapsed < AGREEMENT_LIMIT, format!("took {elapsed:?}"));
    o.note(format!("{elapsed:.2?}"));
    o
}

fn labs() -> Vec<Lab> {
    SCOPES
        .iter()
        .map(|&(atoms, top)| Lab::new(atoms, top, LabConfig::default()).unwrap())
        .collect()
}

fn law_catalog(labs: &[Lab]) -> Outcome {
    let mut o = Outcome::new();
    let asserted = Law::ALL
        .iter()
        .filter(|l| l.expectation() != Expectation::Report)
        .count();
    for lab in labs {
        let s = lab.scope();
        for report in lab.check_all() {
            let law = report.law;
            if let Some(cx) = &report.counterexample {
                o.require(
                    cx.falsifies(law),
                    format!("counterexample for {} does not re-verify", law.id()),
                );
            }
            match report.agreement() {
                Agreement::Confirmed => {}
                Agreement::Contradicted => o.require(
                    false,
                    format!(
                        "atoms={} top={}: {} ({}) {}{}",
                        s.atoms,
                        s.top,
                        law.id(),
                        law.statement(),
                        if report.holds { "holds" } else { "fails" },
                        report
                            .counterexample
                            .as_ref()
                            .map(|cx| format!(" at {}", cx.describe()))
                            .unwrap_or_default()
                    ),
                ),
                Agreement::Reported => o.note(format!(
                    "atoms={} top={}: report {} {}",
                    s.atoms,
                    s.top,
                    law.id(),
                    if report.holds { "holds" } else { "fails" }
                )),
            }
        }
    }
    o.note(format!("{asserted} asserted laws"));
    o
}

fn criteria_table(labs: &[Lab]) -> Outcome {
    let mut o = Outcome::new();
    for lab in labs {
        let s = lab.scope();
        for report in lab.criteria_table() {
            if let Some(cx) = &report.counterexample {
                o.require(
                    cx.falsifies_criterion(report.criterion, report.relation),
                    format!(
                        "counterexample for {} {} does not re-verify",
                        report.relation, report.criterion
                    ),
                );
            }
            if report.claimed {
                o.require(
                    report.holds,
                    format!(
                        "atoms={} top={}: {} {} fails{}",
                        s.atoms,
                        s.top,
                        report.relation,
                        report.criterion,
                        report
                            .counterexample
                            .as_ref()
                            .map(|cx| format!(" at {}", cx.describe()))
                            .unwrap_or_default()
                    ),
                );
            }
        }
        let eq = lab.check_law(Law::WeakConjunctionEquivalence);
        o.require(
            eq.holds,
            format!(
                "atoms={} top={}: weak conjunction equivalence fails",
                s.atoms, s.top
            ),
        );
    }
    let claimed = Relation::ALL
        .iter()
        .flat_map(|&r| Criterion::ALL.iter().map(move |&c| (c, r)))
        .filter(|&(c, r)| ordind::lab::is_claimed(c, r))
        .count();
    o.note(format!("{claimed} claimed cells"));
    o
}

fn order_reconstruction(labs: &[Lab]) -> Outcome {
    let mut o = Outcome::new();
    let ds = dists(2, 3);
    let gens = generator_set(ds[0].vocab());
    let mut disagreements = 0;
    for d in &ds {
        for a in &gens {
            for c in &gens {
                let direct = d.poss(&a.formula) > d.poss(&c.formula);
                if recover_strict_order(d, &a.formula, &c.formula) != direct {
                    disagreements += 1;
                }
            }
        }
    }
    o.require(disagreements == 0, format!("{disagreements} disagreements"));
    let item2 = labs[0].check_law(Law::OrderWeakAsPrinted);
    o.note(format!(
        "item 2 as printed ({}) {}",
        Law::OrderWeakAsPrinted.statement(),
        if item2.holds { "holds" } else { "fails" }
    ));
    o
}

fn maximality() -> Outcome {
    let mut o = Outcome::new();
    for (name, text) in CORPUS {
        let doc = parse_kb(text).unwrap();
        let kb = doc.rule_base().unwrap();
        let r = compute_pi_star(kb).unwrap();
        let raised = r.maximality_violations(kb);
        o.require(
            raised.is_empty(),
            format!("{name}: {} admissible raises", raised.len()),
        );
        let unsat = r.unsatisfied_rules(kb);
        o.require(
            unsat.is_empty(),
            format!("{name}: rules {unsat:?} unsatisfied"),
        );
        let d = &r.pi_star;
        let normalized = d.levels().iter().any(|&l| l == d.top());
        o.require(normalized, format!("{name}: not normalized"));
    }
    o.note(format!("{} bases", CORPUS.len()));
    o
}

fn rational_monotony() -> Outcome {
    let mut o = Outcome::new();
    let vocab = Vocabulary::letters(3).unwrap();
    let gens = generator_set(&vocab);
    let mut checked = 0u64;
    let mut failures = 0u64;
    let mut first: Option<(Vec<Level>, [Formula; 3])> = None;
    for levels in normalized_level_vectors(3, 2) {
        let t = EventTable::new(3, Level::new(2), &levels);
        for a in &gens {
            for b in &gens {
                for c in &gens {
                    checked += 1;
                    if !check_rational_monotony(&t, &a.mask, &b.mask, &c.mask) {
                        failures += 1;
                        if first.is_none() {
                            let args = [a.formula.clone(), b.formula.clone(), c.formula.clone()];
                            first = Some((levels.clone(), args));
                        }
                    }
                }
            }
        }
    }
    o.require(
        failures == 0,
        format!("{failures} failures, first {first:?}"),
    );
    o.note(format!("{checked} triples"));
    o
}

fn main() -> ExitCode {
    let labs = labs();
    let criteria: Vec<Check> = vec![
        ("penguin scenario", Box::new(penguin_scenario)),
        (
            "definition/characterization agreement",
            Box::new(definition_agreement),
        ),
        ("law catalog", Box::new(|| law_catalog(&labs))),
        ("criteria table", Box::new(|| criteria_table(&labs))),
        (
            "order reconstruction",
            Box::new(|| order_reconstruction(&labs)),
        ),
        ("pi* maximality", Box::new(maximality)),
        ("rational monotony sweep", Box::new(rational_monotony)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} criterion {}: {name}", i + 1);
        for n in &o.notes {
            println!("     {n}");
        }
        if !o.pass {
            failed += 1;
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
