//! Exhaustive checking of laws over every small normalized distribution.
//!
//! A [`Lab`] fixes an atom count and a scale top, enumerates every
//! normalized distribution, and quantifies each law over the fixed
//! [generator set](table::generator_set). Counterexamples are reported as
//! formula-level distributions so they can be re-checked independently of
//! the bitmask tables used during the sweep.

pub mod completeness;
pub mod criteria;
pub mod laws;
pub mod table;

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::logic::{Formula, Vocabulary};
use crate::possibility::{Dist, Level};

pub use criteria::{criterion_holds, is_claimed, Criterion, Relation};
pub use laws::{Expectation, Law};
pub use table::{generator_set, EventTable, Generator, Mask, MAX_LAB_ATOMS};

/// Default cap on law evaluations per check.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest scale top the lab enumerates.
pub const MAX_LAB_TOP: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabConfig {
    /// Upper bound on `distributions × tuples` for the widest law.
    pub budget: u64,
}

impl Default for LabConfig {
    fn default() -> Self {
        LabConfig {
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScaleError {
    #[error("atom count must be between 1 and {MAX_LAB_ATOMS}, got {0}")]
    Atoms(usize),
    #[error("scale top must be between 1 and {MAX_LAB_TOP}, got {0}")]
    Top(u32),
    #[error("enumeration needs {needed} evaluations, above the budget of {budget}")]
    Budget { needed: u64, budget: u64 },
}

fn check_scale(atoms: usize, top: u32) -> Result<(), ScaleError> {
    if !(1..=MAX_LAB_ATOMS).contains(&atoms) {
        return Err(ScaleError::Atoms(atoms));
    }
    if !(1..=MAX_LAB_TOP).contains(&top) {
        return Err(ScaleError::Top(top));
    }
    Ok(())
}

/// Every normalized distribution over `atoms` letters on scale `0..=top`,
/// in a fixed order.
pub fn enumerate_dists(atoms: usize, top: u32, budget: u64) -> Result<Vec<Dist>, ScaleError> {
    check_scale(atoms, top)?;
    let needed = table::level_vector_count(atoms, top);
    if needed > budget {
        return Err(ScaleError::Budget { needed, budget });
    }
    let vocab = Vocabulary::letters(atoms).expect("lab atom counts are valid");
    Ok(table::normalized_level_vectors(atoms, top)
        .map(|levels| Dist::new(vocab.clone(), Level::new(top), levels).expect("normalized"))
        .collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct Scope {
    pub atoms: usize,
    pub top: u32,
    pub distributions: usize,
    pub generators: usize,
}

/// A distribution and argument tuple on which a law evaluates to false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub dist: Dist,
    pub args: Vec<Formula>,
}

impl Counterexample {
    fn padded(&self) -> [Formula; 3] {
        let get = |i: usize| self.args.get(i).cloned().unwrap_or(Formula::True);
        [get(0), get(1), get(2)]
    }

    /// Re-evaluates the law on the formula-level distribution; true when the
    /// law is indeed falsified there.
    pub fn falsifies(&self, law: Law) -> bool {
        let [a, b, c] = self.padded();
        !law.holds(&self.dist, &a, &b, &c)
    }

    pub fn falsifies_criterion(&self, criterion: Criterion, relation: Relation) -> bool {
        let [a, b, c] = self.padded();
        !criterion_holds(criterion, relation, &self.dist, &a, &b, &c)
    }

    pub fn record(&self) -> CounterexampleRecord {
        let vocab = self.dist.vocab();
        CounterexampleRecord {
            worlds: vocab
                .worlds()
                .map(|w| (w.display(vocab), self.dist.level(w).get()))
                .collect(),
            args: self
                .args
                .iter()
                .map(|f| f.display(vocab).to_string())
                .collect(),
        }
    }

    pub fn describe(&self) -> String {
        let rec = self.record();
        let mut s = String::from("π = {");
        for (i, (w, l)) in rec.worlds.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            let _ = write!(s, "{w}: {l}");
        }
        s.push('}');
        for (name, arg) in ["a", "b", "c"].iter().zip(&rec.args) {
            let _ = write!(s, "; {name} = {arg}");
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleRecord {
    pub worlds: Vec<(String, u32)>,
    pub args: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct LawReport {
    pub law: Law,
    pub scope: Scope,
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
    pub evaluations: u64,
}

/// How a verdict relates to the catalog's expectation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Agreement {
    /// Verdict matches the expectation.
    Confirmed,
    /// Verdict contradicts the expectation.
    Contradicted,
    /// No expectation was asserted.
    Reported,
}

impl LawReport {
    pub fn agreement(&self) -> Agreement {
        match (self.law.expectation(), self.holds) {
            (Expectation::Report, _) => Agreement::Reported,
            (Expectation::Holds, true) | (Expectation::Fails, false) => Agreement::Confirmed,
            _ => Agreement::Contradicted,
        }
    }

    pub fn text_line(&self) -> String {
        let tag = match self.agreement() {
            Agreement::Confirmed => "ok",
            Agreement::Contradicted => "MISMATCH",
            Agreement::Reported => "report",
        };
        let verdict = if self.holds { "holds" } else { "fails" };
        let expected = match self.law.expectation() {
            Expectation::Holds => "expected to hold",
            Expectation::Fails => "expected to fail",
            Expectation::Report => "no expectation",
        };
        let mut s = format!(
            "[{tag}] {:<34} {verdict} ({expected}) :: {}",
            self.law.id(),
            self.law.statement()
        );
        if let Some(cx) = &self.counterexample {
            let _ = write!(s, "\n      counterexample: {}", cx.describe());
        }
        s
    }

    pub fn record(&self) -> LawRecord {
        LawRecord {
            kind: "law",
            law: self.law.id(),
            statement: self.law.statement(),
            expectation: self.law.expectation(),
            scope: self.scope.clone(),
            holds: self.holds,
            agreement: self.agreement(),
            evaluations: self.evaluations,
            counterexample: self.counterexample.as_ref().map(Counterexample::record),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LawRecord {
    pub kind: &'static str,
    pub law: &'static str,
    pub statement: &'static str,
    pub expectation: Expectation,
    pub scope: Scope,
    pub holds: bool,
    pub agreement: Agreement,
    pub evaluations: u64,
    pub counterexample: Option<CounterexampleRecord>,
}

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub criterion: Criterion,
    pub relation: Relation,
    pub claimed: bool,
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

impl CriterionReport {
    pub fn record(&self, scope: &Scope) -> CriterionRecord {
        CriterionRecord {
            kind: "criterion",
            criterion: self.criterion,
            relation: self.relation,
            statement: self.criterion.statement(),
            scope: scope.clone(),
            claimed: self.claimed,
            holds: self.holds,
            counterexample: self.counterexample.as_ref().map(Counterexample::record),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionRecord {
    pub kind: &'static str,
    pub criterion: Criterion,
    pub relation: Relation,
    pub statement: String,
    pub scope: Scope,
    pub claimed: bool,
    pub holds: bool,
    pub counterexample: Option<CounterexampleRecord>,
}

/// The enumerated universe for one `(atoms, top)` pair.
pub struct Lab {
    vocab: Vocabulary,
    top: u32,
    generators: Vec<Generator>,
    tables: Vec<EventTable>,
}

impl Lab {
    pub fn new(atoms: usize, top: u32, config: LabConfig) -> Result<Lab, ScaleError> {
        check_scale(atoms, top)?;
        let vocab = Vocabulary::letters(atoms).expect("lab atom counts are valid");
        let generators = generator_set(&vocab);
        let vectors = table::level_vector_count(atoms, top);
        let needed = vectors.saturating_mul((generators.len() as u64).pow(3));
        if vectors > config.budget || needed > config.budget {
            return Err(ScaleError::Budget {
                needed: needed.max(vectors),
                budget: config.budget,
            });
        }
        let tables = table::normalized_level_vectors(atoms, top)
            .map(|levels| EventTable::new(atoms, Level::new(top), &levels))
            .collect();
        Ok(Lab {
            vocab,
            top,
            generators,
            tables,
        })
    }

    /// Same universe, distributions visited in reverse order.
    pub fn reversed(&self) -> Lab {
        Lab {
            vocab: self.vocab.clone(),
            top: self.top,
            generators: self.generators.clone(),
            tables: self.tables.iter().rev().cloned().collect(),
        }
    }

    pub fn vocab(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn distribution_count(&self) -> usize {
        self.tables.len()
    }

    pub fn scope(&self) -> Scope {
        Scope {
            atoms: self.vocab.len(),
            top: self.top,
            distributions: self.tables.len(),
            generators: self.generators.len(),
        }
    }

    /// Runs `pred` over every distribution and every `arity`-tuple of
    /// generators, stopping at the first tuple where it is false.
    fn sweep<F>(&self, arity: usize, mut pred: F) -> (Option<Counterexample>, u64)
    where
        F: FnMut(&EventTable, Mask, Mask, Mask) -> bool,
    {
        let g = &self.generators;
        let width = |k: usize| if k < arity { g.len() } else { 1 };
        let mut evaluations = 0u64;
        for t in &self.tables {
            for i in 0..width(0) {
                for j in 0..width(1) {
                    for k in 0..width(2) {
                        evaluations += 1;
                        if !pred(t, g[i].mask, g[j].mask, g[k].mask) {
                            let args = [i, j, k][..arity]
                                .iter()
                                .map(|&x| g[x].formula.clone())
                                .collect();
                            let cx = Counterexample {
                                dist: t.to_dist(&self.vocab),
                                args,
                            };
                            return (Some(cx), evaluations);
                        }
                    }
                }
            }
        }
        (None, evaluations)
    }

    pub fn check_law(&self, law: Law) -> LawReport {
        let (counterexample, evaluations) =
            self.sweep(law.arity(), |t, a, b, c| law.holds(t, &a, &b, &c));
        LawReport {
            law,
            scope: self.scope(),
            holds: counterexample.is_none(),
            counterexample,
            evaluations,
        }
    }

    pub fn check_all(&self) -> Vec<LawReport> {
        Law::ALL.iter().map(|&l| self.check_law(l)).collect()
    }

    pub fn check_criterion(&self, criterion: Criterion, relation: Relation) -> CriterionReport {
        let (counterexample, _) = self.sweep(3, |t, a, b, c| {
            criterion_holds(criterion, relation, t, &a, &b, &c)
        });
        CriterionReport {
            criterion,
            relation,
            claimed: is_claimed(criterion, relation),
            holds: counterexample.is_none(),
            counterexample,
        }
    }

    /// All 8 criteria for each of the 3 relations, relation-major.
    pub fn criteria_table(&self) -> Vec<CriterionReport> {
        Relation::ALL
            .iter()
            .flat_map(|&r| Criterion::ALL.iter().map(move |&c| (c, r)))
            .map(|(c, r)| self.check_criterion(c, r))
            .collect()
    }
}

/// Text grid of a criteria table: one row per criterion, one column per relation.
pub fn render_criteria_table(reports: &[CriterionReport]) -> String {
    let mut s = format!("{:<8}", "");
    for r in Relation::ALL {
        let _ = write!(s, "{:>10}", r.name());
    }
    s.push('\n');
    for c in Criterion::ALL {
        let _ = write!(s, "{:<8}", c.name());
        for r in Relation::ALL {
            let cell = reports
                .iter()
                .find(|x| x.criterion == c && x.relation == r)
                .map(|x| {
                    let v = if x.holds { "holds" } else { "fails" };
                    if x.claimed {
                        format!("{v}*")
                    } else {
                        v.to_string()
                    }
                })
                .unwrap_or_default();
            let _ = write!(s, "{cell:>10}");
        }
        s.push('\n');
    }
    s.push_str("(* = claimed to hold)\n");
    s
}
