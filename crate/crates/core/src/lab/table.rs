//! Bitmask events and precomputed possibility tables for desk-scale
//! enumeration.

use crate::logic::{models, Formula, Vocabulary, World};
use crate::possibility::{Dist, Level, Measure};

/// An event over at most 8 worlds, bit `w` set when world `w` belongs to it.
pub type Mask = u8;

/// Largest vocabulary the lab enumerates over.
pub const MAX_LAB_ATOMS: usize = 3;

/// A distribution with `Π` tabulated for every event.
#[derive(Debug, Clone)]
pub struct EventTable {
    atoms: usize,
    top: Level,
    full: Mask,
    levels: Vec<Level>,
    poss: Vec<Level>,
}

impl EventTable {
    pub fn new(atoms: usize, top: Level, levels: &[Level]) -> EventTable {
        assert!((1..=MAX_LAB_ATOMS).contains(&atoms));
        let worlds = 1usize << atoms;
        assert_eq!(levels.len(), worlds);
        let events = 1usize << worlds;
        let mut poss = vec![Level::ZERO; events];
        for m in 1..events {
            let lowest = m.trailing_zeros() as usize;
            poss[m] = poss[m & (m - 1)].max(levels[lowest]);
        }
        EventTable {
            atoms,
            top,
            full: (events - 1) as Mask,
            levels: levels.to_vec(),
            poss,
        }
    }

    pub fn from_dist(d: &Dist) -> EventTable {
        EventTable::new(d.vocab().len(), d.top(), d.levels())
    }

    pub fn atoms(&self) -> usize {
        self.atoms
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn to_dist(&self, vocab: &Vocabulary) -> Dist {
        assert_eq!(vocab.len(), self.atoms);
        Dist::new(vocab.clone(), self.top, self.levels.clone())
            .expect("tables are built from normalized level vectors")
    }
}

impl Measure for EventTable {
    type Event = Mask;

    #[inline]
    fn top(&self) -> Level {
        self.top
    }

    #[inline]
    fn poss(&self, e: &Mask) -> Level {
        self.poss[*e as usize]
    }

    #[inline]
    fn meet(&self, a: &Mask, b: &Mask) -> Mask {
        a & b
    }

    #[inline]
    fn join(&self, a: &Mask, b: &Mask) -> Mask {
        a | b
    }

    #[inline]
    fn negate(&self, a: &Mask) -> Mask {
        self.full & !a
    }

    #[inline]
    fn tautology(&self) -> Mask {
        self.full
    }

    #[inline]
    fn contradiction(&self) -> Mask {
        0
    }

    #[inline]
    fn implies(&self, a: &Mask, b: &Mask) -> bool {
        a & !b == 0
    }
}

/// Number of level vectors over `atoms` atoms on scale `0..=top`, i.e.
/// `(top+1)^(2^atoms)`, saturating.
pub fn level_vector_count(atoms: usize, top: u32) -> u64 {
    let worlds = 1u32 << atoms.min(5);
    (top as u64 + 1).saturating_pow(worlds)
}

/// Every normalized level vector, counting in base `top+1` with world 0 as
/// the least significant digit.
pub fn normalized_level_vectors(atoms: usize, top: u32) -> impl Iterator<Item = Vec<Level>> {
    let worlds = 1usize << atoms;
    let total = level_vector_count(atoms, top);
    let base = top as u64 + 1;
    (0..total).filter_map(move |mut code| {
        let mut levels = Vec::with_capacity(worlds);
        for _ in 0..worlds {
            levels.push(Level::new((code % base) as u32));
            code /= base;
        }
        levels.contains(&Level::new(top)).then_some(levels)
    })
}

/// A generator formula with its event mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub formula: Formula,
    pub mask: Mask,
}

/// Constants, literals, and for every atom pair `x, y` the four formulas
/// `x & y`, `!x | !y`, `x & !y`, `!x | y`. Closed under negation up to
/// equivalence; 10 formulas at two atoms, 20 at three.
pub fn generator_set(vocab: &Vocabulary) -> Vec<Generator> {
    assert!(vocab.len() <= MAX_LAB_ATOMS);
    let n = vocab.len();
    let x = Formula::atom;
    let not = Formula::not;
    let mut formulas = vec![Formula::True, Formula::False];
    for i in 0..n {
        formulas.push(x(i));
        formulas.push(not(x(i)));
    }
    for i in 0..n {
        for j in i + 1..n {
            formulas.push(Formula::and(x(i), x(j)));
            formulas.push(Formula::or(not(x(i)), not(x(j))));
            formulas.push(Formula::and(x(i), not(x(j))));
            formulas.push(Formula::or(not(x(i)), x(j)));
        }
    }
    formulas
        .into_iter()
        .map(|formula| {
            let mask = models(&formula, vocab)
                .iter()
                .fold(0, |m, w: World| m | (1 << w.index()));
            Generator { formula, mask }
        })
        .collect()
}
