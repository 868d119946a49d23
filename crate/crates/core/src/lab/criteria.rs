//! Conjunction and disjunction closure criteria for the three relations.

use std::fmt;

use serde::Serialize;

use crate::independence::{related_z, strong_indep, weak_indep};
use crate::possibility::Measure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Criterion {
    #[serde(rename = "CCD")]
    Ccd,
    #[serde(rename = "CCI")]
    Cci,
    #[serde(rename = "CCD-r")]
    CcdR,
    #[serde(rename = "CCI-r")]
    CciR,
    #[serde(rename = "DCI")]
    Dci,
    #[serde(rename = "DCI-r")]
    DciR,
    #[serde(rename = "DCD")]
    Dcd,
    #[serde(rename = "DCD-r")]
    DcdR,
}

impl Criterion {
    pub const ALL: [Criterion; 8] = [
        Criterion::Ccd,
        Criterion::Cci,
        Criterion::CcdR,
        Criterion::CciR,
        Criterion::Dci,
        Criterion::DciR,
        Criterion::Dcd,
        Criterion::DcdR,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Ccd => "CCD",
            Criterion::Cci => "CCI",
            Criterion::CcdR => "CCD-r",
            Criterion::CciR => "CCI-r",
            Criterion::Dci => "DCI",
            Criterion::DciR => "DCI-r",
            Criterion::Dcd => "DCD",
            Criterion::DcdR => "DCD-r",
        }
    }

    fn conjunctive(self) -> bool {
        matches!(
            self,
            Criterion::Ccd | Criterion::Cci | Criterion::CcdR | Criterion::CciR
        )
    }

    /// Stated for dependence rather than independence.
    fn about_dependence(self) -> bool {
        matches!(
            self,
            Criterion::Ccd | Criterion::CcdR | Criterion::Dcd | Criterion::DcdR
        )
    }

    /// Combines on the consequent side (`a R b ∧ a R c ⇒ a R b∘c`) rather
    /// than the antecedent side (`a R c ∧ b R c ⇒ a∘b R c`).
    fn on_consequent(self) -> bool {
        matches!(
            self,
            Criterion::CcdR | Criterion::CciR | Criterion::DciR | Criterion::DcdR
        )
    }

    pub fn statement(self) -> String {
        let r = if self.about_dependence() {
            "dep"
        } else {
            "indep"
        };
        let op = if self.conjunctive() { "∧" } else { "∨" };
        if self.on_consequent() {
            format!("a {r} b and a {r} c ⇒ a {r} b{op}c")
        } else {
            format!("a {r} c and b {r} c ⇒ a{op}b {r} c")
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    Zadeh,
    Strong,
    Weak,
}

impl Relation {
    pub const ALL: [Relation; 3] = [Relation::Zadeh, Relation::Strong, Relation::Weak];

    pub fn name(self) -> &'static str {
        match self {
            Relation::Zadeh => "Zadeh",
            Relation::Strong => "Strong",
            Relation::Weak => "Weak",
        }
    }

    /// The independence side of the relation (unrelatedness for Zadeh).
    pub fn independent<M: Measure + ?Sized>(self, m: &M, a: &M::Event, c: &M::Event) -> bool {
        match self {
            Relation::Zadeh => !related_z(m, a, c),
            Relation::Strong => strong_indep(m, a, c),
            Relation::Weak => weak_indep(m, a, c),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Cells the criteria table is expected to report as holding.
pub fn is_claimed(criterion: Criterion, relation: Relation) -> bool {
    use Criterion::*;
    match relation {
        Relation::Zadeh => matches!(criterion, Dci | DciR | Dcd | DcdR),
        Relation::Strong | Relation::Weak => matches!(criterion, CcdR | CciR | Dci | Dcd),
    }
}

/// Evaluates one criterion on one argument triple.
pub fn criterion_holds<M: Measure + ?Sized>(
    criterion: Criterion,
    relation: Relation,
    m: &M,
    a: &M::Event,
    b: &M::Event,
    c: &M::Event,
) -> bool {
    let rel =
        |x: &M::Event, y: &M::Event| relation.independent(m, x, y) != criterion.about_dependence();
    let combine = |x: &M::Event, y: &M::Event| {
        if criterion.conjunctive() {
            m.meet(x, y)
        } else {
            m.join(x, y)
        }
    };
    if criterion.on_consequent() {
        !(rel(a, b) && rel(a, c)) || rel(a, &combine(b, c))
    } else {
        !(rel(a, c) && rel(b, c)) || rel(&combine(a, b), c)
    }
}
