//! Ordinal independence over possibility distributions.
//!
//! The crate covers finite propositional worlds, possibility and necessity
//! measures with min-based conditioning, three independence relations of
//! increasing strength, tolerance-based ranking of default rules, and an
//! exhaustive checker for the algebraic laws these notions obey.

pub mod frontend;
pub mod independence;
pub mod lab;
pub mod logic;
pub mod possibility;
pub mod ranking;

pub use independence::{classify, strong_indep, weak_indep, IndepReport};
pub use logic::{models, Formula, Vocabulary, World, WorldSet};
pub use possibility::{Dist, Level, Measure, TriState};
pub use ranking::{compute_pi_star, stratify, Rule, RuleBase, StratifiedRanking};
