//! Empirical checks that the dependence axioms pin down possibility theory.
//!
//! Two searches are offered. [`check_completeness`] treats the axioms as a
//! theory of abstract relations: every relation over the event algebra that
//! satisfies them should be the strong-independence relation of some
//! distribution. With one atom the relations are enumerated outright; with
//! two atoms the search covers every single-pair perturbation of a
//! realizable relation. [`check_set_functions`] instead starts from an
//! arbitrary grading of events, derives the relation through the
//! conditioning definition, and compares "the axioms hold" with "the grading
//! is maxitive".

use std::collections::HashSet;

use serde::Serialize;

use super::table::{normalized_level_vectors, EventTable, Mask};
use crate::independence::strong_indep;
use crate::possibility::{Level, Measure};

/// The two readings of the negation axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NegationReading {
    /// `a dep ¬a` for every `a`.
    Literal,
    /// `a dep c` whenever `a` entails `¬c`.
    Exclusion,
}

/// A binary relation on the events of a vocabulary with at most two atoms:
/// row `a` has bit `c` set when `a ⊥ c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndepRelation {
    atoms: usize,
    rows: Vec<u16>,
}

impl IndepRelation {
    fn events(&self) -> usize {
        1 << (1 << self.atoms)
    }

    fn full(&self) -> usize {
        self.events() - 1
    }

    pub fn indep(&self, a: usize, c: usize) -> bool {
        (self.rows[a] >> c) & 1 == 1
    }

    fn dep(&self, a: usize, c: usize) -> bool {
        !self.indep(a, c)
    }

    fn flip(&mut self, a: usize, c: usize) {
        self.rows[a] ^= 1 << c;
    }

    /// The strong-independence relation of a distribution.
    pub fn of_table(t: &EventTable) -> IndepRelation {
        IndepRelation::of_measure(t, t.atoms())
    }

    /// The strong-independence relation of any grading of the events of an
    /// `atoms`-letter vocabulary.
    pub fn of_measure<M: Measure<Event = Mask>>(m: &M, atoms: usize) -> IndepRelation {
        let events = 1usize << (1 << atoms);
        let rows = (0..events)
            .map(|a| {
                (0..events)
                    .filter(|&c| strong_indep(m, &(a as Mask), &(c as Mask)))
                    .fold(0u16, |r, c| r | (1 << c))
            })
            .collect();
        IndepRelation { atoms, rows }
    }

    /// Checks the five dependence axioms under the given reading of the
    /// negation axiom.
    pub fn satisfies_axioms(&self, reading: NegationReading) -> bool {
        let e = self.events();
        let full = self.full();
        let not = |x: usize| full & !x;
        if !self.indep(full, full) {
            return false;
        }
        if (0..e).any(|a| self.indep(a, 0)) {
            return false;
        }
        let negation_ok = match reading {
            NegationReading::Literal => (0..e).all(|a| self.dep(a, not(a))),
            NegationReading::Exclusion => {
                (0..e).all(|a| (0..e).all(|c| a & c != 0 || self.dep(a, c)))
            }
        };
        if !negation_ok {
            return false;
        }
        for a in 0..e {
            for b in 0..e {
                for c in 0..e {
                    let transitive = !(self.dep(a | b, not(b)) && self.dep(b | c, not(c)))
                        || self.dep(a | c, not(c));
                    let conjunctive = self.indep(a, b & c) || self.dep(a, b) || self.dep(a, c);
                    if !transitive || !conjunctive {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CompletenessReport {
    pub atoms: usize,
    pub reading: NegationReading,
    /// Every realizable relation satisfies the axioms.
    pub sound: bool,
    pub realizable: usize,
    pub candidates_examined: u64,
    pub satisfying_axioms: usize,
    pub realized: usize,
    pub unrealized: usize,
    /// Row bitmasks of one unrealized relation, if any.
    pub unrealized_example: Option<Vec<u16>>,
}

impl CompletenessReport {
    pub fn complete(&self) -> bool {
        self.unrealized == 0
    }

    pub fn text_line(&self) -> String {
        format!(
            "atoms={} reading={:?}: sound={} realizable={} examined={} satisfying={} realized={} unrealized={}",
            self.atoms,
            self.reading,
            self.sound,
            self.realizable,
            self.candidates_examined,
            self.satisfying_axioms,
            self.realized,
            self.unrealized
        )
    }
}

/// Relations of all distributions with scale tops up to `2^atoms`, which
/// covers every ordering of worlds including impossible ones.
fn realizable_relations(atoms: usize) -> HashSet<IndepRelation> {
    let mut out = HashSet::new();
    for top in 1..=(1u32 << atoms) {
        for levels in normalized_level_vectors(atoms, top) {
            let t = EventTable::new(atoms, Level::new(top), &levels);
            out.insert(IndepRelation::of_table(&t));
        }
    }
    out
}

/// Runs the soundness and completeness search at one or two atoms.
pub fn check_completeness(atoms: usize, reading: NegationReading) -> CompletenessReport {
    assert!(
        (1..=2).contains(&atoms),
        "completeness search supports 1 or 2 atoms"
    );
    let realizable = realizable_relations(atoms);
    let sound = realizable.iter().all(|r| r.satisfies_axioms(reading));
    let events = 1usize << (1 << atoms);

    let mut satisfying = HashSet::new();
    let mut examined = 0u64;
    if atoms == 1 {
        let pairs = events * events;
        for code in 0u32..(1 << pairs) {
            let rows = (0..events)
                .map(|a| ((code >> (a * events)) & ((1 << events) - 1)) as u16)
                .collect();
            let r = IndepRelation { atoms, rows };
            examined += 1;
            if r.satisfies_axioms(reading) {
                satisfying.insert(r);
            }
        }
    } else {
        for base in &realizable {
            for a in 0..events {
                for c in 0..events {
                    let mut r = base.clone();
                    r.flip(a, c);
                    examined += 1;
                    if r.satisfies_axioms(reading) {
                        satisfying.insert(r);
                    }
                }
            }
        }
    }
    let unrealized: Vec<&IndepRelation> = satisfying
        .iter()
        .filter(|r| !realizable.contains(r))
        .collect();
    CompletenessReport {
        atoms,
        reading,
        sound,
        realizable: realizable.len(),
        candidates_examined: examined,
        satisfying_axioms: satisfying.len(),
        realized: satisfying.len() - unrealized.len(),
        unrealized: unrealized.len(),
        unrealized_example: unrealized.first().map(|r| r.rows.clone()),
    }
}

/// An arbitrary grading of events with `Π(False) = 0` and `Π(True) = top`,
/// not necessarily maxitive. Conditioning and necessity follow the same
/// definitions as for a distribution.
#[derive(Debug, Clone)]
pub struct SetFunction {
    top: Level,
    full: Mask,
    poss: Vec<Level>,
}

impl SetFunction {
    pub fn new(atoms: usize, top: Level, poss: Vec<Level>) -> SetFunction {
        assert!((1..=2).contains(&atoms));
        let events = 1usize << (1 << atoms);
        assert_eq!(poss.len(), events);
        SetFunction {
            top,
            full: (events - 1) as Mask,
            poss,
        }
    }

    pub fn is_maxitive(&self) -> bool {
        let e = self.poss.len();
        (0..e).all(|a| (0..e).all(|b| self.poss[a | b] == self.poss[a].max(self.poss[b])))
    }
}

impl Measure for SetFunction {
    type Event = Mask;

    fn top(&self) -> Level {
        self.top
    }

    fn poss(&self, e: &Mask) -> Level {
        self.poss[*e as usize]
    }

    fn meet(&self, a: &Mask, b: &Mask) -> Mask {
        a & b
    }

    fn join(&self, a: &Mask, b: &Mask) -> Mask {
        a | b
    }

    fn negate(&self, a: &Mask) -> Mask {
        self.full & !a
    }

    fn tautology(&self) -> Mask {
        self.full
    }

    fn contradiction(&self) -> Mask {
        0
    }

    fn implies(&self, a: &Mask, b: &Mask) -> bool {
        a & !b == 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SetFunctionReport {
    pub atoms: usize,
    pub top: u32,
    pub reading: NegationReading,
    pub functions: u64,
    pub maxitive: u64,
    /// Maxitive gradings whose relation satisfies the axioms.
    pub maxitive_satisfying: u64,
    /// Non-maxitive gradings whose relation satisfies the axioms.
    pub non_maxitive_satisfying: u64,
    /// Of those, how many induce a relation no distribution induces.
    pub non_maxitive_unrealized: u64,
    /// Event grades of one non-maxitive grading satisfying the axioms.
    pub example: Option<Vec<u32>>,
}

impl SetFunctionReport {
    pub fn sound(&self) -> bool {
        self.maxitive_satisfying == self.maxitive
    }

    /// Axioms hold exactly for maxitive gradings.
    pub fn characterizes(&self) -> bool {
        self.sound() && self.non_maxitive_satisfying == 0
    }

    pub fn text_line(&self) -> String {
        format!(
            "atoms={} top={} reading={:?}: gradings={} maxitive={} maxitive-satisfying={} non-maxitive-satisfying={} of-which-unrealized={}",
            self.atoms,
            self.top,
            self.reading,
            self.functions,
            self.maxitive,
            self.maxitive_satisfying,
            self.non_maxitive_satisfying,
            self.non_maxitive_unrealized
        )
    }
}

/// Enumerates every grading of the `2^(2^atoms)` events on `0..=top` with
/// the constants pinned, and compares axiom satisfaction with maxitivity.
pub fn check_set_functions(atoms: usize, top: u32, reading: NegationReading) -> SetFunctionReport {
    assert!(
        (1..=2).contains(&atoms),
        "set-function search supports 1 or 2 atoms"
    );
    let events = 1usize << (1 << atoms);
    let free = events - 2;
    let base = top as u64 + 1;
    let total = base.pow(free as u32);
    let realizable = realizable_relations(atoms);
    let mut report = SetFunctionReport {
        atoms,
        top,
        reading,
        functions: total,
        maxitive: 0,
        maxitive_satisfying: 0,
        non_maxitive_satisfying: 0,
        non_maxitive_unrealized: 0,
        example: None,
    };
    let mut poss = vec![Level::ZERO; events];
    poss[events - 1] = Level::new(top);
    for mut code in 0..total {
        for p in poss.iter_mut().take(events - 1).skip(1) {
            *p = Level::new((code % base) as u32);
            code /= base;
        }
        let f = SetFunction::new(atoms, Level::new(top), poss.clone());
        let maxitive = f.is_maxitive();
        let rel = IndepRelation::of_measure(&f, atoms);
        let ok = rel.satisfies_axioms(reading);
        match (maxitive, ok) {
            (true, true) => {
                report.maxitive += 1;
                report.maxitive_satisfying += 1;
            }
            (true, false) => report.maxitive += 1,
            (false, true) => {
                report.non_maxitive_satisfying += 1;
                if !realizable.contains(&rel) {
                    report.non_maxitive_unrealized += 1;
                }
                if report.example.is_none() {
                    report.example = Some(poss.iter().map(|l| l.get()).collect());
                }
            }
            (false, false) => {}
        }
    }
    report
}
