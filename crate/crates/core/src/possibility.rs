//! Possibility distributions on worlds and the measures they induce.
//!
//! Levels live on a finite ordinal scale `0..=top` instead of the unit
//! interval: `0` is impossibility, `top` is full possibility. Everything in
//! this module and in [`crate::independence`] only compares levels or takes
//! `top - x`, so any finite chain works.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::logic::{Formula, Vocabulary, World, WorldSet};

/// A degree on the scale `0..=top` of some distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Level(u32);

impl Level {
    pub const ZERO: Level = Level(0);

    pub const fn new(value: u32) -> Level {
        Level(value)
    }

    pub const fn get(self) -> u32 {
        self.0
    }

    /// `top - self`, the order-reversing map of the scale.
    pub fn reverse(self, top: Level) -> Level {
        debug_assert!(self <= top);
        Level(top.0 - self.0)
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u32> for Level {
    fn from(v: u32) -> Self {
        Level(v)
    }
}

/// Outcome of a plausible-entailment test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TriState {
    Accepted,
    Rejected,
    Ignored,
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriState::Accepted => "Accepted",
            TriState::Rejected => "Rejected",
            TriState::Ignored => "Ignored",
        })
    }
}

/// A possibility measure over some event algebra.
///
/// Implementors supply the scale top, the possibility of an event and the
/// Boolean operations on events; everything else is derived here so that
/// every representation shares one definition of each quantity.
pub trait Measure {
    type Event: Clone;

    fn top(&self) -> Level;
    fn poss(&self, e: &Self::Event) -> Level;

    fn meet(&self, a: &Self::Event, b: &Self::Event) -> Self::Event;
    fn join(&self, a: &Self::Event, b: &Self::Event) -> Self::Event;
    fn negate(&self, a: &Self::Event) -> Self::Event;
    fn tautology(&self) -> Self::Event;
    fn contradiction(&self) -> Self::Event;
    /// Classical entailment: every world of `a` is a world of `b`.
    fn implies(&self, a: &Self::Event, b: &Self::Event) -> bool;

    /// `N(e) = top - Π(¬e)`.
    fn nec(&self, e: &Self::Event) -> Level {
        self.poss(&self.negate(e)).reverse(self.top())
    }

    /// Min-based conditioning: the greatest `x` with `Π(a ∧ c) = min(x, Π(a))`.
    fn cond_poss(&self, c: &Self::Event, a: &Self::Event) -> Level {
        let joint = self.poss(&self.meet(a, c));
        if joint == self.poss(a) {
            self.top()
        } else {
            joint
        }
    }

    /// `N(c | a) = top - Π(¬c | a)`.
    fn cond_nec(&self, c: &Self::Event, a: &Self::Event) -> Level {
        self.cond_poss(&self.negate(c), a).reverse(self.top())
    }

    /// Plausible entailment of `c` from `a`: compares `Π(a ∧ c)` with `Π(a ∧ ¬c)`.
    fn entails(&self, a: &Self::Event, c: &Self::Event) -> TriState {
        let yes = self.poss(&self.meet(a, c));
        let no = self.poss(&self.meet(a, &self.negate(c)));
        match yes.cmp(&no) {
            std::cmp::Ordering::Greater => TriState::Accepted,
            std::cmp::Ordering::Less => TriState::Rejected,
            std::cmp::Ordering::Equal => TriState::Ignored,
        }
    }

    /// Qualitative possibility ordering: `a` is at least as possible as `b`.
    fn qpo_geq(&self, a: &Self::Event, b: &Self::Event) -> bool {
        self.poss(a) >= self.poss(b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistError {
    #[error("scale top must be at least 1")]
    ZeroTop,
    #[error("expected {expected} world levels, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("world {world} has level {level} above the top {top}")]
    AboveTop { world: String, level: u32, top: u32 },
    #[error("distribution is not normalized: no world reaches level {0}")]
    NotNormalized(u32),
}

/// Normalized possibility distribution: one level per world, some world at `top`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dist {
    vocab: Vocabulary,
    top: Level,
    levels: Vec<Level>,
}

impl Dist {
    pub fn new(vocab: Vocabulary, top: Level, levels: Vec<Level>) -> Result<Dist, DistError> {
        if top == Level::ZERO {
            return Err(DistError::ZeroTop);
        }
        if levels.len() != vocab.world_count() {
            return Err(DistError::WrongLength {
                expected: vocab.world_count(),
                got: levels.len(),
            });
        }
        if let Some((w, l)) = levels.iter().enumerate().find(|(_, l)| **l > top) {
            return Err(DistError::AboveTop {
                world: World(w as u32).display(&vocab),
                level: l.get(),
                top: top.get(),
            });
        }
        if !levels.contains(&top) {
            return Err(DistError::NotNormalized(top.get()));
        }
        Ok(Dist { vocab, top, levels })
    }

    /// Convenience constructor from raw integers.
    pub fn from_levels(vocab: Vocabulary, top: u32, levels: &[u32]) -> Result<Dist, DistError> {
        Dist::new(
            vocab,
            Level::new(top),
            levels.iter().copied().map(Level::new).collect(),
        )
    }

    pub fn vocab(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn level(&self, w: World) -> Level {
        self.levels[w.index()]
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// Maximum level over a set of worlds, `0` when empty.
    pub fn poss_set(&self, worlds: &WorldSet) -> Level {
        worlds
            .iter()
            .map(|w| self.level(w))
            .max()
            .unwrap_or(Level::ZERO)
    }

    /// True when no two worlds share a level, i.e. the induced plausibility
    /// ordering of worlds is a strict total order.
    pub fn is_total_order(&self) -> bool {
        let mut seen = self.levels.clone();
        seen.sort_unstable();
        seen.windows(2).all(|p| p[0] != p[1])
    }
}

impl Measure for Dist {
    type Event = Formula;

    fn top(&self) -> Level {
        self.top
    }

    fn poss(&self, f: &Formula) -> Level {
        debug_assert!(f.is_over(&self.vocab), "formula outside the vocabulary");
        self.vocab
            .worlds()
            .filter(|w| f.eval(*w))
            .map(|w| self.level(w))
            .max()
            .unwrap_or(Level::ZERO)
    }

    fn meet(&self, a: &Formula, b: &Formula) -> Formula {
        Formula::and(a.clone(), b.clone())
    }

    fn join(&self, a: &Formula, b: &Formula) -> Formula {
        Formula::or(a.clone(), b.clone())
    }

    fn negate(&self, a: &Formula) -> Formula {
        Formula::not(a.clone())
    }

    fn tautology(&self) -> Formula {
        Formula::True
    }

    fn contradiction(&self) -> Formula {
        Formula::False
    }

    fn implies(&self, a: &Formula, b: &Formula) -> bool {
        self.vocab.worlds().all(|w| !a.eval(w) || b.eval(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // vocab {a, c}; world bits: bit 0 = a, bit 1 = c.
    // a∧c → 3, a∧¬c → 1, ¬a∧c → 2, ¬a∧¬c → 1
    fn sample() -> Dist {
        let v = Vocabulary::new(["a", "c"]).unwrap();
        Dist::from_levels(v, 3, &[1, 1, 2, 3]).unwrap()
    }

    fn a() -> Formula {
        Formula::atom(0)
    }
    fn c() -> Formula {
        Formula::atom(1)
    }
    fn not(f: Formula) -> Formula {
        Formula::not(f)
    }

    #[test]
    fn poss_examples() {
        let d = sample();
        assert_eq!(d.poss(&Formula::False), Level::new(0));
        assert_eq!(d.poss(&a()), Level::new(3));
        assert_eq!(d.poss(&not(c())), Level::new(1));
    }

    #[test]
    fn nec_examples() {
        let d = sample();
        assert_eq!(d.nec(&Formula::True), Level::new(3));
        assert_eq!(d.nec(&c()), Level::new(2));
        assert_eq!(d.nec(&a()), Level::new(1));
    }

    #[test]
    fn cond_poss_examples() {
        let d = sample();
        assert_eq!(d.cond_poss(&c(), &a()), Level::new(3));
        assert_eq!(d.cond_poss(&not(c()), &a()), Level::new(1));
        assert_eq!(d.cond_poss(&c(), &Formula::False), Level::new(3));
        assert_eq!(d.cond_poss(&Formula::False, &Formula::False), Level::new(3));
    }

    #[test]
    fn cond_nec_examples() {
        let d = sample();
        assert_eq!(d.cond_nec(&c(), &a()), Level::new(2));
        assert_eq!(d.cond_nec(&c(), &Formula::False), Level::new(0));
        assert_eq!(d.cond_nec(&c(), &Formula::True), d.nec(&c()));
        assert_eq!(d.cond_nec(&c(), &Formula::True), Level::new(2));
    }

    #[test]
    fn entails_examples() {
        let d = sample();
        assert_eq!(d.entails(&a(), &c()), TriState::Accepted);
        assert_eq!(d.entails(&Formula::True, &c()), TriState::Accepted);
        let not_c_worlds = Formula::or(
            Formula::and(not(a()), not(c())),
            Formula::and(a(), not(c())),
        );
        assert_eq!(d.entails(&not_c_worlds, &c()), TriState::Rejected);
        assert_eq!(d.entails(&Formula::False, &c()), TriState::Ignored);
    }

    #[test]
    fn qpo_examples() {
        let d = sample();
        assert!(d.qpo_geq(&Formula::True, &a()));
        assert!(d.qpo_geq(&a(), &Formula::and(a(), c())));
        assert!(!d.qpo_geq(&not(c()), &c()));
    }

    #[test]
    fn construction_errors() {
        let v = Vocabulary::new(["a", "c"]).unwrap();
        assert_eq!(
            Dist::from_levels(v.clone(), 3, &[1, 1, 2, 2]),
            Err(DistError::NotNormalized(3))
        );
        assert!(matches!(
            Dist::from_levels(v.clone(), 3, &[1, 1, 4, 3]),
            Err(DistError::AboveTop { level: 4, .. })
        ));
        assert!(matches!(
            Dist::from_levels(v.clone(), 3, &[3]),
            Err(DistError::WrongLength {
                expected: 4,
                got: 1
            })
        ));
        assert_eq!(
            Dist::from_levels(v, 0, &[0, 0, 0, 0]),
            Err(DistError::ZeroTop)
        );
    }

    #[test]
    fn total_order_detection() {
        let v = Vocabulary::new(["a", "c"]).unwrap();
        assert!(Dist::from_levels(v.clone(), 3, &[0, 1, 2, 3])
            .unwrap()
            .is_total_order());
        assert!(!sample().is_total_order());
    }
}
