//! Propositional formulas over a small named vocabulary, worlds as bit
//! patterns, and model enumeration.

use std::fmt;

use thiserror::Error;

/// Largest vocabulary supported. Worlds are `u32` bit patterns and world sets
/// hold `2^MAX_ATOMS` bits.
pub const MAX_ATOMS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VocabularyError {
    #[error("vocabulary must declare between 1 and {MAX_ATOMS} atoms, got {0}")]
    Size(usize),
    #[error("invalid atom name `{0}`")]
    InvalidName(String),
    #[error("atom `{0}` declared twice")]
    Duplicate(String),
    #[error("unknown atom `{0}`")]
    Unknown(String),
}

/// Ordered list of distinct atom names. Atom `i` is bit `i` of a [`World`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vocabulary {
    atoms: Vec<String>,
}

pub(crate) fn is_reserved(name: &str) -> bool {
    matches!(name, "true" | "false" | "wrt" | "given")
}

pub(crate) fn is_valid_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && !is_reserved(name)
}

impl Vocabulary {
    pub fn new<I, S>(atoms: I) -> Result<Self, VocabularyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        if atoms.is_empty() || atoms.len() > MAX_ATOMS {
            return Err(VocabularyError::Size(atoms.len()));
        }
        for (i, name) in atoms.iter().enumerate() {
            if !is_valid_atom_name(name) {
                return Err(VocabularyError::InvalidName(name.clone()));
            }
            if atoms[..i].contains(name) {
                return Err(VocabularyError::Duplicate(name.clone()));
            }
        }
        Ok(Vocabulary { atoms })
    }

    /// `a, b, c, ...` for the first `n` letters, skipping nothing.
    pub fn letters(n: usize) -> Result<Self, VocabularyError> {
        if n == 0 || n > MAX_ATOMS {
            return Err(VocabularyError::Size(n));
        }
        Self::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn name(&self, index: usize) -> &str {
        &self.atoms[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == name)
    }

    /// The atom named `name` as a formula.
    pub fn atom(&self, name: &str) -> Result<Formula, VocabularyError> {
        self.index_of(name)
            .map(Formula::Atom)
            .ok_or_else(|| VocabularyError::Unknown(name.to_string()))
    }

    pub fn world_count(&self) -> usize {
        1usize << self.atoms.len()
    }

    /// All worlds in ascending bit-pattern order.
    pub fn worlds(&self) -> impl Iterator<Item = World> + Clone {
        (0..self.world_count() as u32).map(World)
    }
}

/// A total truth assignment: bit `i` is the value of atom `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct World(pub u32);

impl World {
    pub fn get(self, atom: usize) -> bool {
        (self.0 >> atom) & 1 == 1
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Literal rendering, e.g. `a !c`.
    pub fn display(self, vocab: &Vocabulary) -> String {
        (0..vocab.len())
            .map(|i| {
                if self.get(i) {
                    vocab.name(i).to_string()
                } else {
                    format!("!{}", vocab.name(i))
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Set of worlds as a dense bitset over `2^n` positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WorldSet {
    len: usize,
    blocks: Vec<u64>,
}

impl WorldSet {
    pub fn empty(world_count: usize) -> Self {
        WorldSet {
            len: world_count,
            blocks: vec![0; world_count.div_ceil(64)],
        }
    }

    pub fn full(world_count: usize) -> Self {
        let mut s = Self::empty(world_count);
        for w in 0..world_count {
            s.insert(World(w as u32));
        }
        s
    }

    pub fn from_worlds(world_count: usize, worlds: impl IntoIterator<Item = World>) -> Self {
        let mut s = Self::empty(world_count);
        for w in worlds {
            s.insert(w);
        }
        s
    }

    pub fn insert(&mut self, w: World) {
        let i = w.index();
        assert!(i < self.len, "world out of range");
        self.blocks[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, w: World) -> bool {
        let i = w.index();
        i < self.len && (self.blocks[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn world_count(&self) -> usize {
        self.len
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn intersection(&self, other: &WorldSet) -> WorldSet {
        self.zip(other, |a, b| a & b)
    }

    pub fn union(&self, other: &WorldSet) -> WorldSet {
        self.zip(other, |a, b| a | b)
    }

    pub fn difference(&self, other: &WorldSet) -> WorldSet {
        self.zip(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> WorldSet {
        WorldSet::full(self.len).difference(self)
    }

    pub fn is_subset(&self, other: &WorldSet) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    fn zip(&self, other: &WorldSet, op: impl Fn(u64, u64) -> u64) -> WorldSet {
        assert_eq!(
            self.len, other.len,
            "world sets over different vocabularies"
        );
        WorldSet {
            len: self.len,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = World> + '_ {
        (0..self.len as u32)
            .map(World)
            .filter(move |w| self.contains(*w))
    }
}

/// Propositional formula. Implication and equivalence are expanded by their
/// constructors, so the tree only ever holds these six shapes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    True,
    False,
    Atom(usize),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(index: usize) -> Formula {
        Formula::Atom(index)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(f: Formula, g: Formula) -> Formula {
        Formula::And(Box::new(f), Box::new(g))
    }

    pub fn or(f: Formula, g: Formula) -> Formula {
        Formula::Or(Box::new(f), Box::new(g))
    }

    /// `f -> g` as `!f | g`.
    pub fn implies(f: Formula, g: Formula) -> Formula {
        Formula::or(Formula::not(f), g)
    }

    /// `f <-> g` as `(f & g) | (!f & !g)`.
    pub fn iff(f: Formula, g: Formula) -> Formula {
        Formula::or(
            Formula::and(f.clone(), g.clone()),
            Formula::and(Formula::not(f), Formula::not(g)),
        )
    }

    pub fn eval(&self, w: World) -> bool {
        match self {
            Formula::True => true,
            Formula::False => false,
            Formula::Atom(i) => w.get(*i),
            Formula::Not(f) => !f.eval(w),
            Formula::And(f, g) => f.eval(w) && g.eval(w),
            Formula::Or(f, g) => f.eval(w) || g.eval(w),
        }
    }

    /// Highest atom index mentioned, if any.
    pub fn max_atom(&self) -> Option<usize> {
        match self {
            Formula::True | Formula::False => None,
            Formula::Atom(i) => Some(*i),
            Formula::Not(f) => f.max_atom(),
            Formula::And(f, g) | Formula::Or(f, g) => f.max_atom().max(g.max_atom()),
        }
    }

    pub fn is_over(&self, vocab: &Vocabulary) -> bool {
        self.max_atom().is_none_or(|i| i < vocab.len())
    }

    pub fn display<'a>(&'a self, vocab: &'a Vocabulary) -> FormulaDisplay<'a> {
        FormulaDisplay {
            formula: self,
            vocab,
        }
    }
}

/// Truth value of `f` in `w`.
pub fn eval(w: World, f: &Formula) -> bool {
    f.eval(w)
}

/// Worlds satisfying `f`, ascending.
pub fn models(f: &Formula, vocab: &Vocabulary) -> WorldSet {
    debug_assert!(f.is_over(vocab));
    WorldSet::from_worlds(vocab.world_count(), vocab.worlds().filter(|w| f.eval(*w)))
}

/// Prints with the frontend's ASCII syntax, parenthesizing by precedence.
pub struct FormulaDisplay<'a> {
    formula: &'a Formula,
    vocab: &'a Vocabulary,
}

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Or(..) => 1,
        Formula::And(..) => 2,
        Formula::Not(..) => 3,
        _ => 4,
    }
}

impl FormulaDisplay<'_> {
    fn write(&self, f: &Formula, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let child = |g: &Formula, min: u8, out: &mut fmt::Formatter<'_>| {
            if precedence(g) < min {
                write!(out, "(")?;
                self.write(g, out)?;
                write!(out, ")")
            } else {
                self.write(g, out)
            }
        };
        match f {
            Formula::True => write!(out, "true"),
            Formula::False => write!(out, "false"),
            Formula::Atom(i) => write!(out, "{}", self.vocab.name(*i)),
            Formula::Not(g) => {
                write!(out, "!")?;
                child(g, 3, out)
            }
            Formula::And(g, h) => {
                child(g, 2, out)?;
                write!(out, " & ")?;
                child(h, 2, out)
            }
            Formula::Or(g, h) => {
                child(g, 1, out)?;
                write!(out, " | ")?;
                child(h, 1, out)
            }
        }
    }
}

impl fmt::Display for FormulaDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(self.formula, f)
    }
}
