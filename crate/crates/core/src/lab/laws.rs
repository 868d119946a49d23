//! The catalog of laws checked by exhaustive enumeration.
//!
//! Each law is a predicate over a measure and up to three events. Laws are
//! written once against [`Measure`], so the same code runs on bitmask tables
//! during enumeration and on formula-level distributions when a
//! counterexample is re-verified.

use serde::Serialize;

use crate::independence::{
    classify, recover_strict_order, related_z, strong_indep, strong_indep_direct, weak_indep,
    weak_indep_direct,
};
use crate::possibility::{Level, Measure};
use crate::ranking::check_rational_monotony;

/// What the catalog expects enumeration to find.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Expectation {
    /// Claimed to hold for every distribution and every argument tuple.
    Holds,
    /// Claimed not to hold in general; enumeration must find a counterexample.
    Fails,
    /// No claim is asserted; the verdict is recorded as found.
    Report,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    Maxitivity,
    NecessityMinitivity,
    Normalization,
    OneSidedAcceptance,
    OrderNonTriviality,
    OrderTautology,
    OrderTransitivity,
    OrderDisjunctiveness,
    OrderDominance,

    CondImpossibleAntecedent,
    CondJointTop,
    CondImpossibleConsequent,
    CondSelfNegationTop,
    CondSelfNegationZero,
    CondMinDecomposition,
    CondAcceptanceComparison,
    CondMaterialNecessity,

    ZadehCharacterization,
    ZadehMutualRejection,
    ZadehSymmetry,
    ZadehSplitDisjunctionRight,
    ZadehSplitDisjunctionLeft,
    ZadehMergeDisjunctionLeft,
    ZadehMergeDisjunctionRight,
    ZadehFalseUnrelated,
    ZadehTrueUnrelated,
    ZadehSelfUnrelated,
    ZadehNegation,
    ZadehAbsorption,

    StrongDefinitionAgreement,
    StrongCaseSplit,
    StrongCaseIgnored,
    StrongCaseAccepted,
    StrongDirectDependence,
    StrongMinForm,
    StrongTruthFunctional,
    StrongDominatedAntecedent,
    StrongImpliesOrder,
    StrongConjunctionSplit,
    StrongDisjunctionSplit,
    StrongDisjunctionMerge,
    StrongConjunctionMerge,
    StrongFalseAntecedent,
    StrongTrueAntecedent,
    StrongFalseConsequent,
    StrongTrueConsequent,
    StrongExcludedConjunction,
    StrongExclusive,
    StrongOrderFromIndependence,
    StrongSelf,
    StrongImpossibleAntecedent,
    StrongCertainNegation,
    StrongContrapositionExclusion,
    StrongRejectionForm,
    StrongZadehForm,

    AxiomTrueTrue,
    AxiomFalseConsequent,
    AxiomTransitivity,
    AxiomNegation,
    AxiomExclusion,
    AxiomConjunction,

    OrderStrict,
    OrderWeakAsPrinted,
    OrderNecessityStrict,
    OrderNecessityWeak,

    WeakDefinitionAgreement,
    WeakStrongSplit,
    WeakImpliesUnrelated,
    WeakSelf,
    WeakMaterialCollapse,
    WeakConjunctionEquivalence,
    WeakDisjunctionEquivalence,
    WeakDisjunctionOrForm,
    WeakConjunctionOrForm,
    WeakMutualAcceptance,

    ImplicationChain,
    RationalMonotony,

    StrongSymmetry,
    StrongNegationTransparency,
    StrongNegatedConsequent,
    WeakContrapositionExclusion,
}

use Expectation::*;
use Law::*;

impl Law {
    pub const ALL: &'static [Law] = &[
        Maxitivity,
        NecessityMinitivity,
        Normalization,
        OneSidedAcceptance,
        OrderNonTriviality,
        OrderTautology,
        OrderTransitivity,
        OrderDisjunctiveness,
        OrderDominance,
        CondImpossibleAntecedent,
        CondJointTop,
        CondImpossibleConsequent,
        CondSelfNegationTop,
        CondSelfNegationZero,
        CondMinDecomposition,
        CondAcceptanceComparison,
        CondMaterialNecessity,
        ZadehCharacterization,
        ZadehMutualRejection,
        ZadehSymmetry,
        ZadehSplitDisjunctionRight,
        ZadehSplitDisjunctionLeft,
        ZadehMergeDisjunctionLeft,
        ZadehMergeDisjunctionRight,
        ZadehFalseUnrelated,
        ZadehTrueUnrelated,
        ZadehSelfUnrelated,
        ZadehNegation,
        ZadehAbsorption,
        StrongDefinitionAgreement,
        StrongCaseSplit,
        StrongCaseIgnored,
        StrongCaseAccepted,
        StrongDirectDependence,
        StrongMinForm,
        StrongTruthFunctional,
        StrongDominatedAntecedent,
        StrongImpliesOrder,
        StrongConjunctionSplit,
        StrongDisjunctionSplit,
        StrongDisjunctionMerge,
        StrongConjunctionMerge,
        StrongFalseAntecedent,
        StrongTrueAntecedent,
        StrongFalseConsequent,
        StrongTrueConsequent,
        StrongExcludedConjunction,
        StrongExclusive,
        StrongOrderFromIndependence,
        StrongSelf,
        StrongImpossibleAntecedent,
        StrongCertainNegation,
        StrongContrapositionExclusion,
        StrongRejectionForm,
        StrongZadehForm,
        AxiomTrueTrue,
        AxiomFalseConsequent,
        AxiomTransitivity,
        AxiomNegation,
        AxiomExclusion,
        AxiomConjunction,
        OrderStrict,
        OrderWeakAsPrinted,
        OrderNecessityStrict,
        OrderNecessityWeak,
        WeakDefinitionAgreement,
        WeakStrongSplit,
        WeakImpliesUnrelated,
        WeakSelf,
        WeakMaterialCollapse,
        WeakConjunctionEquivalence,
        WeakDisjunctionEquivalence,
        WeakDisjunctionOrForm,
        WeakConjunctionOrForm,
        WeakMutualAcceptance,
        ImplicationChain,
        RationalMonotony,
        StrongSymmetry,
        StrongNegationTransparency,
        StrongNegatedConsequent,
        WeakContrapositionExclusion,
    ];

    /// Stable identifier used in reports and on the command line.
    pub fn id(self) -> &'static str {
        self.info().0
    }

    /// The law in symbols. `⊥` is strong independence, `⊥w` weak
    /// independence, `~z` Zadeh relatedness, `dep` the negation of `⊥`.
    pub fn statement(self) -> &'static str {
        self.info().1
    }

    /// Number of event arguments quantified over.
    pub fn arity(self) -> usize {
        self.info().2
    }

    pub fn expectation(self) -> Expectation {
        self.info().3
    }

    pub fn from_id(id: &str) -> Option<Law> {
        Law::ALL.iter().copied().find(|l| l.id() == id)
    }

    fn info(self) -> (&'static str, &'static str, usize, Expectation) {
        match self {
            Maxitivity => ("poss.maxitivity", "Π(a∨b) = max(Π(a), Π(b))", 2, Holds),
            NecessityMinitivity => ("poss.nec-minitivity", "N(a∧b) = min(N(a), N(b))", 2, Holds),
            Normalization => ("poss.normalization", "max(Π(a), Π(¬a)) = top", 1, Holds),
            OneSidedAcceptance => ("poss.one-sided-acceptance", "N(a) > 0 ⇒ N(¬a) = 0", 1, Holds),
            OrderNonTriviality => ("order.non-triviality", "True > False", 0, Holds),
            OrderTautology => ("order.tautology", "True ≥ a", 1, Holds),
            OrderTransitivity => ("order.transitivity", "a ≥ b ∧ b ≥ c ⇒ a ≥ c", 3, Holds),
            OrderDisjunctiveness => ("order.disjunctiveness", "a∨c ≤ a or a∨c ≤ c", 2, Holds),
            OrderDominance => ("order.dominance", "a ⊨ b ⇒ a ≤ b", 2, Holds),

            CondImpossibleAntecedent => ("cond.impossible-antecedent", "Π(a) = 0 ⇒ Π(c|a) = top", 2, Holds),
            CondJointTop => ("cond.joint-top", "Π(a∧c) = top ⇒ Π(c|a) = top", 2, Holds),
            CondImpossibleConsequent => ("cond.impossible-consequent", "Π(a) > 0 ∧ Π(c) = 0 ⇒ Π(c|a) = 0", 2, Holds),
            CondSelfNegationTop => ("cond.self-negation-top", "Π(c|¬c) = top ⇔ Π(¬c) = 0", 1, Holds),
            CondSelfNegationZero => ("cond.self-negation-zero", "Π(c|¬c) = 0 ⇔ Π(¬c) > 0", 1, Holds),
            CondMinDecomposition => ("cond.min-decomposition", "min(Π(c|a), Π(a)) = Π(a∧c)", 2, Holds),
            CondAcceptanceComparison => ("cond.acceptance-comparison", "N(c|a) > 0 ⇔ Π(a∧c) > Π(a∧¬c)", 2, Holds),
            CondMaterialNecessity => ("cond.material-necessity", "N(c|a) > 0 ⇒ N(c|a) = N(¬a∨c)", 2, Report),

            ZadehCharacterization => ("zadeh.characterization", "¬(a ~z c) ⇔ Π(a∧c) ≥ min(Π(a∧¬c), Π(¬a∧c))", 2, Holds),
            ZadehMutualRejection => ("zadeh.mutual-rejection", "a ~z c ⇔ N(¬c|a) > 0 ∧ N(¬a|c) > 0", 2, Holds),
            ZadehSymmetry => ("zadeh.symmetry", "a ~z c ⇔ c ~z a", 2, Holds),
            ZadehSplitDisjunctionRight => ("zadeh.split-disjunction-right", "a ~z b∨c ⇒ a ~z b ∨ a ~z c", 3, Holds),
            ZadehSplitDisjunctionLeft => ("zadeh.split-disjunction-left", "a∨b ~z c ⇒ a ~z c ∨ b ~z c", 3, Holds),
            ZadehMergeDisjunctionLeft => ("zadeh.merge-disjunction-left", "a ~z c ∧ b ~z c ⇒ a∨b ~z c", 3, Holds),
            ZadehMergeDisjunctionRight => ("zadeh.merge-disjunction-right", "a ~z b ∧ a ~z c ⇒ a ~z b∨c", 3, Holds),
            ZadehFalseUnrelated => ("zadeh.false-unrelated", "¬(False ~z a)", 1, Holds),
            ZadehTrueUnrelated => ("zadeh.true-unrelated", "¬(True ~z a)", 1, Holds),
            ZadehSelfUnrelated => ("zadeh.self-unrelated", "¬(a ~z a)", 1, Holds),
            ZadehNegation => ("zadeh.negation", "¬(a ~z ¬a) ⇔ Π(a) = 0 ∨ Π(¬a) = 0", 1, Holds),
            ZadehAbsorption => ("zadeh.absorption", "¬(a∨c ~z a)", 2, Holds),

            StrongDefinitionAgreement => ("strong.definition-agreement", "a ⊥ c ⇔ Π(a) > Π(¬c) = Π(a∧¬c)", 2, Holds),
            StrongCaseSplit => ("strong.case-split", "N(c|a) = N(c) ⇔ (i) ∨ (ii)", 2, Holds),
            StrongCaseIgnored => ("strong.case-ignored", "(i) ⇔ N(c|a) = N(c) = 0", 2, Holds),
            StrongCaseAccepted => ("strong.case-accepted", "(ii) ⇔ N(c|a) = N(c) > 0", 2, Holds),
            StrongDirectDependence => ("strong.direct-dependence", "a dep c ⇔ Π(a) ≤ Π(¬c) ∨ Π(¬c) > Π(a∧¬c)", 2, Holds),
            StrongMinForm => ("strong.min-form", "a ⊥ c ⇔ Π(a∧¬c) = min(Π(a), Π(¬c)) ∧ Π(¬c) < Π(a)", 2, Holds),
            StrongTruthFunctional => ("strong.truth-functional", "a ⊥ c ⇒ Π(a∧c) = min(Π(a), Π(c))", 2, Holds),
            StrongDominatedAntecedent => ("strong.dominated-antecedent", "Π(¬c) ≥ Π(a) ⇒ a dep c", 2, Holds),
            StrongImpliesOrder => ("strong.implies-order", "a ⊥ c ⇒ Π(a) > Π(¬c)", 2, Holds),
            StrongConjunctionSplit => ("strong.conjunction-split", "a dep b∧c ⇒ a dep b ∨ a dep c", 3, Holds),
            StrongDisjunctionSplit => ("strong.disjunction-split", "a∨b dep c ⇒ a dep c ∨ b dep c", 3, Holds),
            StrongDisjunctionMerge => ("strong.disjunction-merge", "a dep c ∧ b dep c ⇒ a∨b dep c", 3, Holds),
            StrongConjunctionMerge => ("strong.conjunction-merge", "a dep b ∧ a dep c ⇒ a dep b∧c", 3, Holds),
            StrongFalseAntecedent => ("strong.false-antecedent", "False dep c", 1, Holds),
            StrongTrueAntecedent => ("strong.true-antecedent", "True ⊥ c ⇔ N(c) > 0", 1, Holds),
            StrongFalseConsequent => ("strong.false-consequent", "a dep False", 1, Holds),
            StrongTrueConsequent => ("strong.true-consequent", "a ⊥ True ⇔ Π(a) > 0", 1, Holds),
            StrongExcludedConjunction => ("strong.excluded-conjunction", "a∧b dep ¬b∧c", 3, Holds),
            StrongExclusive => ("strong.exclusive", "a ⊨ ¬c ⇒ a dep c", 2, Holds),
            StrongOrderFromIndependence => ("strong.order-from-independence", "a∨c ⊥ ¬c ⇔ Π(a) > Π(c)", 2, Holds),
            StrongSelf => ("strong.self", "a ⊥ a ⇔ N(a) = top", 1, Holds),
            StrongImpossibleAntecedent => ("strong.impossible-antecedent", "Π(a) = 0 ⇒ a dep c", 2, Holds),
            StrongCertainNegation => ("strong.certain-negation", "Π(c) = top ⇒ a dep ¬c", 2, Holds),
            StrongContrapositionExclusion => ("strong.contraposition-exclusion", "a dep c ∨ ¬c dep ¬a", 2, Holds),
            StrongRejectionForm => ("strong.rejection-form", "a ⊥ c ⇔ N(c|a) > 0 ∧ ¬(N(¬a|¬c) > 0)", 2, Holds),
            StrongZadehForm => ("strong.zadeh-form", "a ⊥ c ⇔ ¬(a ~z ¬c) ∧ Π(¬c) < Π(a)", 2, Holds),

            AxiomTrueTrue => ("axiom.true-true", "True ⊥ True", 0, Holds),
            AxiomFalseConsequent => ("axiom.false-consequent", "a dep False", 1, Holds),
            AxiomTransitivity => ("axiom.transitivity", "a∨b dep ¬b ∧ b∨c dep ¬c ⇒ a∨c dep ¬c", 3, Holds),
            AxiomNegation => ("axiom.negation", "a dep ¬a", 1, Holds),
            AxiomExclusion => ("axiom.exclusion", "a ⊨ ¬c ⇒ a dep c", 2, Holds),
            AxiomConjunction => ("axiom.conjunction", "a dep b∧c ⇒ a dep b ∨ a dep c", 3, Holds),

            OrderStrict => ("order.strict-reconstruction", "Π(a) > Π(c) ⇔ a∨c ⊥ ¬c", 2, Holds),
            OrderWeakAsPrinted => ("order.weak-reconstruction", "Π(a) ≥ Π(c) ⇔ a∨c dep ¬a", 2, Report),
            OrderNecessityStrict => ("order.necessity-strict", "N(a) > N(c) ⇔ ¬a∨¬c ⊥ a", 2, Holds),
            OrderNecessityWeak => ("order.necessity-weak", "N(a) ≥ N(c) ⇔ ¬a∨¬c dep c", 2, Holds),

            WeakDefinitionAgreement => ("weak.definition-agreement", "a ⊥w c ⇔ Π(a∧c) > Π(a∧¬c) ∧ max(Π(c∧a), Π(c∧¬a)) > Π(¬a∧¬c)", 2, Holds),
            WeakStrongSplit => ("weak.strong-split", "a ⊥ c ⇔ a ⊥w c ∧ Π(a∧¬c) = Π(¬c)", 2, Holds),
            WeakImpliesUnrelated => ("weak.implies-unrelated", "a ⊥w c ⇒ ¬(a ~z c)", 2, Holds),
            WeakSelf => ("weak.self", "a ⊥w a ⇔ N(a) > 0", 1, Holds),
            WeakMaterialCollapse => ("weak.material-collapse", "a∨¬c ⊥w c ⇔ a∨¬c ⊥ c", 2, Holds),
            WeakConjunctionEquivalence => ("weak.conjunction-equivalence", "a ⊥w b∧c ⇔ a ⊥w b ∧ a ⊥w c", 3, Holds),
            WeakDisjunctionEquivalence => ("weak.disjunction-equivalence", "a∨b ⊥w c ⇔ a ⊥w c ∧ b ⊥w c", 3, Report),
            WeakDisjunctionOrForm => ("weak.disjunction-or-form", "a ⊥w c ∨ b ⊥w c ⇒ a∨b ⊥w c", 3, Report),
            WeakConjunctionOrForm => ("weak.conjunction-or-form", "a ⊥w b ∨ a ⊥w c ⇒ a ⊥w b∧c", 3, Report),
            WeakMutualAcceptance => ("weak.mutual-acceptance", "a ⊥w c ∧ ¬c ⊥w ¬a ⇔ Π(¬a∧c) > max(Π(a∧c), Π(¬a∧¬c)) ∧ min(Π(a∧c), Π(¬a∧¬c)) > Π(a∧¬c)", 2, Holds),

            ImplicationChain => ("chain.strong-weak-unrelated", "a ⊥ c ⇒ a ⊥w c ⇒ ¬(a ~z c)", 2, Holds),
            RationalMonotony => ("inference.rational-monotony", "N(a|b) > 0 ∧ N(¬c|b) = 0 ⇒ N(a|b∧c) > 0", 3, Holds),

            StrongSymmetry => ("strong.symmetry", "a ⊥ c ⇒ c ⊥ a", 2, Fails),
            StrongNegationTransparency => ("strong.negation-transparency", "a ⊥ c ⇒ ¬a ⊥ c", 2, Fails),
            StrongNegatedConsequent => ("strong.negated-consequent", "a ⊥ c ⇒ a ⊥ ¬c", 2, Fails),
            WeakContrapositionExclusion => ("weak.contraposition-exclusion", "¬(a ⊥w c) ∨ ¬(¬c ⊥w ¬a)", 2, Fails),
        }
    }

    /// Evaluates the law on one argument tuple. Unused trailing arguments
    /// are ignored.
    pub fn holds<M: Measure + ?Sized>(
        self,
        m: &M,
        a: &M::Event,
        b: &M::Event,
        c: &M::Event,
    ) -> bool {
        let top = m.top();
        let p = |e: &M::Event| m.poss(e);
        let n = |e: &M::Event| m.nec(e);
        let not = |e: &M::Event| m.negate(e);
        let and = |x: &M::Event, y: &M::Event| m.meet(x, y);
        let or = |x: &M::Event, y: &M::Event| m.join(x, y);
        let si = |x: &M::Event, y: &M::Event| strong_indep(m, x, y);
        let dep = |x: &M::Event, y: &M::Event| !strong_indep(m, x, y);
        let wi = |x: &M::Event, y: &M::Event| weak_indep(m, x, y);
        let rz = |x: &M::Event, y: &M::Event| related_z(m, x, y);
        let t = m.tautology();
        let f = m.contradiction();
        let zero = Level::ZERO;

        match self {
            Maxitivity => p(&or(a, b)) == p(a).max(p(b)),
            NecessityMinitivity => n(&and(a, b)) == n(a).min(n(b)),
            Normalization => p(a).max(p(&not(a))) == top,
            OneSidedAcceptance => !n(a).is_positive() || n(&not(a)) == zero,
            OrderNonTriviality => p(&t) > p(&f),
            OrderTautology => m.qpo_geq(&t, a),
            OrderTransitivity => !(m.qpo_geq(a, b) && m.qpo_geq(b, c)) || m.qpo_geq(a, c),
            OrderDisjunctiveness => {
                let ac = or(a, b);
                m.qpo_geq(a, &ac) || m.qpo_geq(b, &ac)
            }
            OrderDominance => !m.implies(a, b) || m.qpo_geq(b, a),

            CondImpossibleAntecedent => p(a) != zero || m.cond_poss(b, a) == top,
            CondJointTop => p(&and(a, b)) != top || m.cond_poss(b, a) == top,
            CondImpossibleConsequent => !(p(a) > zero && p(b) == zero) || m.cond_poss(b, a) == zero,
            CondSelfNegationTop => (m.cond_poss(a, &not(a)) == top) == (p(&not(a)) == zero),
            CondSelfNegationZero => (m.cond_poss(a, &not(a)) == zero) == (p(&not(a)) > zero),
            CondMinDecomposition => m.cond_poss(b, a).min(p(a)) == p(&and(a, b)),
            CondAcceptanceComparison => {
                m.cond_nec(b, a).is_positive() == (p(&and(a, b)) > p(&and(a, &not(b))))
            }
            CondMaterialNecessity => {
                let cn = m.cond_nec(b, a);
                !cn.is_positive() || cn == n(&or(&not(a), b))
            }

            ZadehCharacterization => {
                let [ac, a_nc, na_c, _] = crate::independence::quadrants(m, a, b);
                !rz(a, b) == (ac >= a_nc.min(na_c))
            }
            ZadehMutualRejection => {
                rz(a, b)
                    == (m.cond_nec(&not(b), a).is_positive()
                        && m.cond_nec(&not(a), b).is_positive())
            }
            ZadehSymmetry => rz(a, b) == rz(b, a),
            ZadehSplitDisjunctionRight => !rz(a, &or(b, c)) || rz(a, b) || rz(a, c),
            ZadehSplitDisjunctionLeft => !rz(&or(a, b), c) || rz(a, c) || rz(b, c),
            ZadehMergeDisjunctionLeft => !(rz(a, c) && rz(b, c)) || rz(&or(a, b), c),
            ZadehMergeDisjunctionRight => !(rz(a, b) && rz(a, c)) || rz(a, &or(b, c)),
            ZadehFalseUnrelated => !rz(&f, a),
            ZadehTrueUnrelated => !rz(&t, a),
            ZadehSelfUnrelated => !rz(a, a),
            ZadehNegation => !rz(a, &not(a)) == (p(a) == zero || p(&not(a)) == zero),
            ZadehAbsorption => !rz(&or(a, b), a),

            StrongDefinitionAgreement => si(a, b) == strong_indep_direct(m, a, b),
            StrongCaseSplit => {
                let (i, ii) = strong_cases(m, a, b);
                (m.cond_nec(b, a) == n(b)) == (i || ii)
            }
            StrongCaseIgnored => {
                let (i, _) = strong_cases(m, a, b);
                i == (m.cond_nec(b, a) == zero && n(b) == zero)
            }
            StrongCaseAccepted => {
                let (_, ii) = strong_cases(m, a, b);
                ii == (m.cond_nec(b, a) == n(b) && n(b).is_positive())
            }
            StrongDirectDependence => {
                let nc = not(b);
                dep(a, b) == (p(a) <= p(&nc) || p(&nc) > p(&and(a, &nc)))
            }
            StrongMinForm => {
                let nc = not(b);
                si(a, b) == (p(&and(a, &nc)) == p(a).min(p(&nc)) && p(&nc) < p(a))
            }
            StrongTruthFunctional => !si(a, b) || p(&and(a, b)) == p(a).min(p(b)),
            StrongDominatedAntecedent => p(&not(b)) < p(a) || dep(a, b),
            StrongImpliesOrder => !si(a, b) || p(a) > p(&not(b)),
            StrongConjunctionSplit => !dep(a, &and(b, c)) || dep(a, b) || dep(a, c),
            StrongDisjunctionSplit => !dep(&or(a, b), c) || dep(a, c) || dep(b, c),
            StrongDisjunctionMerge => !(dep(a, c) && dep(b, c)) || dep(&or(a, b), c),
            StrongConjunctionMerge => !(dep(a, b) && dep(a, c)) || dep(a, &and(b, c)),
            StrongFalseAntecedent => dep(&f, a),
            StrongTrueAntecedent => si(&t, a) == n(a).is_positive(),
            StrongFalseConsequent => dep(a, &f),
            StrongTrueConsequent => si(a, &t) == p(a).is_positive(),
            StrongExcludedConjunction => dep(&and(a, b), &and(&not(b), c)),
            StrongExclusive => !m.implies(a, &not(b)) || dep(a, b),
            StrongOrderFromIndependence => si(&or(a, b), &not(b)) == (p(a) > p(b)),
            StrongSelf => si(a, a) == (n(a) == top),
            StrongImpossibleAntecedent => p(a) != zero || dep(a, b),
            StrongCertainNegation => p(b) != top || dep(a, &not(b)),
            StrongContrapositionExclusion => dep(a, b) || dep(&not(b), &not(a)),
            StrongRejectionForm => {
                si(a, b)
                    == (m.cond_nec(b, a).is_positive()
                        && !m.cond_nec(&not(a), &not(b)).is_positive())
            }
            StrongZadehForm => si(a, b) == (!rz(a, &not(b)) && p(&not(b)) < p(a)),

            AxiomTrueTrue => si(&t, &t),
            AxiomFalseConsequent => dep(a, &f),
            AxiomTransitivity => {
                !(dep(&or(a, b), &not(b)) && dep(&or(b, c), &not(c))) || dep(&or(a, c), &not(c))
            }
            AxiomNegation => dep(a, &not(a)),
            AxiomExclusion => !m.implies(a, &not(b)) || dep(a, b),
            AxiomConjunction => !dep(a, &and(b, c)) || dep(a, b) || dep(a, c),

            OrderStrict => recover_strict_order(m, a, b) == (p(a) > p(b)),
            OrderWeakAsPrinted => (p(a) >= p(b)) == dep(&or(a, b), &not(a)),
            OrderNecessityStrict => (n(a) > n(b)) == si(&or(&not(a), &not(b)), a),
            OrderNecessityWeak => (n(a) >= n(b)) == dep(&or(&not(a), &not(b)), b),

            WeakDefinitionAgreement => wi(a, b) == weak_indep_direct(m, a, b),
            WeakStrongSplit => si(a, b) == (wi(a, b) && p(&and(a, &not(b))) == p(&not(b))),
            WeakImpliesUnrelated => !wi(a, b) || !rz(a, b),
            WeakSelf => wi(a, a) == n(a).is_positive(),
            WeakMaterialCollapse => {
                let x = or(a, &not(b));
                wi(&x, b) == si(&x, b)
            }
            WeakConjunctionEquivalence => wi(a, &and(b, c)) == (wi(a, b) && wi(a, c)),
            WeakDisjunctionEquivalence => wi(&or(a, b), c) == (wi(a, c) && wi(b, c)),
            WeakDisjunctionOrForm => !(wi(a, c) || wi(b, c)) || wi(&or(a, b), c),
            WeakConjunctionOrForm => !(wi(a, b) || wi(a, c)) || wi(a, &and(b, c)),
            WeakMutualAcceptance => {
                let [ac, a_nc, na_c, na_nc] = crate::independence::quadrants(m, a, b);
                (wi(a, b) && wi(&not(b), &not(a))) == (na_c > ac.max(na_nc) && ac.min(na_nc) > a_nc)
            }

            ImplicationChain => classify(m, a, b).is_chain_consistent(),
            RationalMonotony => check_rational_monotony(m, a, b, c),

            StrongSymmetry => !si(a, b) || si(b, a),
            StrongNegationTransparency => !si(a, b) || si(&not(a), b),
            StrongNegatedConsequent => !si(a, b) || si(a, &not(b)),
            WeakContrapositionExclusion => !wi(a, b) || !wi(&not(b), &not(a)),
        }
    }
}

/// The two orderings of the four quadrants under which `N(c|a) = N(c)`:
/// (i) `Π(¬c) = top` and `Π(a∧¬c) ≥ Π(a∧c)`;
/// (ii) `Π(a∧c) > Π(a∧¬c) ≥ Π(¬a∧¬c)`.
fn strong_cases<M: Measure + ?Sized>(m: &M, a: &M::Event, c: &M::Event) -> (bool, bool) {
    let [ac, a_nc, _, na_nc] = crate::independence::quadrants(m, a, c);
    let i = na_nc.max(a_nc) == m.top() && a_nc >= ac;
    let ii = ac > a_nc && a_nc >= na_nc;
    (i, ii)
}
