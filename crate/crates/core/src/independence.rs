//! Ordinal (in)dependence relations between events.
//!
//! Three independence notions of increasing strength are provided:
//! Zadeh-style unrelatedness, weak independence and strong independence.
//! Strong and weak independence each come in two forms, one through the
//! conditional measures and one through a closed-form comparison of four
//! elementary possibilities. The two forms are computed separately and
//! must always agree.
//!
//! Argument order follows the notation `a ⊥ c`: `c` is the event whose
//! acceptance is at stake, `a` is the event learned.

use serde::Serialize;

use crate::possibility::{Level, Measure};

/// `Π(a ∧ c) ≠ min(Π(a), Π(c))`.
pub fn related_z<M: Measure + ?Sized>(m: &M, a: &M::Event, c: &M::Event) -> bool {
    m.poss(&m.meet(a, c)) != m.poss(a).min(m.poss(c))
}

/// `N(c | a) = N(c) > 0`.
pub fn strong_indep<M: Measure + ?Sized>(m: &M, a: &M::Event, c: &M::Event) -> bool {
    let prior = m.nec(c);
    prior.is_positive() && m.cond_nec(c, a) == prior
}

/// `Π(a) > Π(¬c) = Π(a ∧ ¬c)`.
pub fn strong_indep_direct<M: Measure + ?Sized>(m: &M, a: &M::Event, c: &M::Event) -> bool {
    let not_c = m.negate(c);
    let p_not_c = m.poss(&not_c);
    m.poss(a) > p_not_c && p_not_c == m.poss(&m.meet(a, &not_c))
}

/// `N(c | a) > 0` and `N(c) > 0`.
pub fn weak_indep<M: Measure + ?Sized>(m: &M, a: &M::Event, c: &M::Event) -> bool {
    m.nec(c).is_positive() && m.cond_nec(c, a).is_positive()
}

/// `Π(a ∧ c) > Π(a ∧ ¬c)` and `max(Π(c ∧ a), Π(c ∧ ¬a)) > Π(¬a ∧ ¬c)`.
pub fn weak_indep_direct<M: Measure + ?Sized>(m: &M, a: &M::Event, c: &M::Event) -> bool {
    let [ac, a_nc, na_c, na_nc] = quadrants(m, a, c);
    ac > a_nc && ac.max(na_c) > na_nc
}

/// Contraction-based dependence: `N(c) > 0` and `N(a) ≥ N(a ∨ c)`.
pub fn contraction_dep<M: Measure + ?Sized>(m: &M, a: &M::Event, c: &M::Event) -> bool {
    m.nec(c).is_positive() && m.nec(a) >= m.nec(&m.join(a, c))
}

/// Conditional weak independence of `c` from `extra` in `context`:
/// `N(c | context) > 0` and `N(c | context ∧ extra) > 0`.
pub fn cond_weak_indep<M: Measure + ?Sized>(
    m: &M,
    c: &M::Event,
    context: &M::Event,
    extra: &M::Event,
) -> bool {
    m.cond_nec(c, context).is_positive() && m.cond_nec(c, &m.meet(context, extra)).is_positive()
}

/// Reads the strict possibility ordering back out of strong independence:
/// `a ∨ c` is strongly independent of `¬c`. Equal to `Π(a) > Π(c)`.
pub fn recover_strict_order<M: Measure + ?Sized>(m: &M, a: &M::Event, c: &M::Event) -> bool {
    strong_indep(m, &m.join(a, c), &m.negate(c))
}

/// `[Π(a∧c), Π(a∧¬c), Π(¬a∧c), Π(¬a∧¬c)]`.
pub fn quadrants<M: Measure + ?Sized>(m: &M, a: &M::Event, c: &M::Event) -> [Level; 4] {
    let na = m.negate(a);
    let nc = m.negate(c);
    [
        m.poss(&m.meet(a, c)),
        m.poss(&m.meet(a, &nc)),
        m.poss(&m.meet(&na, c)),
        m.poss(&m.meet(&na, &nc)),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IndepReport {
    pub unrelated_z: bool,
    pub weak: bool,
    pub strong: bool,
    pub poss_a_c: Level,
    pub poss_a_not_c: Level,
    pub poss_not_a_c: Level,
    pub poss_not_a_not_c: Level,
}

impl IndepReport {
    /// `strong ⇒ weak ⇒ unrelated`.
    pub fn is_chain_consistent(&self) -> bool {
        (!self.strong || self.weak) && (!self.weak || self.unrelated_z)
    }
}

pub fn classify<M: Measure + ?Sized>(m: &M, a: &M::Event, c: &M::Event) -> IndepReport {
    let [ac, a_nc, na_c, na_nc] = quadrants(m, a, c);
    IndepReport {
        unrelated_z: !related_z(m, a, c),
        weak: weak_indep(m, a, c),
        strong: strong_indep(m, a, c),
        poss_a_c: ac,
        poss_a_not_c: a_nc,
        poss_not_a_c: na_c,
        poss_not_a_not_c: na_nc,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{Formula, Vocabulary};
    use crate::possibility::Dist;

    // Level vectors are indexed by world = a + 2c: [¬a¬c, a¬c, ¬ac, ac].
    fn dist(levels: [u32; 4]) -> Dist {
        Dist::from_levels(Vocabulary::new(["a", "c"]).unwrap(), 3, &levels).unwrap()
    }

    fn strong_case() -> Dist {
        dist([1, 1, 2, 3])
    }
    fn related_case() -> Dist {
        dist([1, 3, 2, 0])
    }
    fn weak_not_strong_case() -> Dist {
        dist([2, 0, 3, 2])
    }

    fn a() -> Formula {
        Formula::atom(0)
    }
    fn c() -> Formula {
        Formula::atom(1)
    }

    #[test]
    fn related_z_examples() {
        for d in [strong_case(), related_case(), weak_not_strong_case()] {
            assert!(!related_z(&d, &a(), &a()));
            assert!(!related_z(&d, &Formula::False, &a()));
        }
        assert!(related_z(&related_case(), &a(), &c()));
    }

    #[test]
    fn strong_examples() {
        let d = strong_case();
        assert!(strong_indep(&d, &a(), &c()));
        assert!(strong_indep_direct(&d, &a(), &c()));
        assert!(!strong_indep(&d, &a(), &Formula::False));
        for f in [a(), c(), Formula::not(c())] {
            assert_eq!(
                strong_indep(&d, &Formula::True, &f),
                d.nec(&f).is_positive()
            );
        }
        assert!(strong_indep(&d, &Formula::True, &Formula::True));
        assert!(strong_indep_direct(&d, &Formula::True, &Formula::True));
    }

    #[test]
    fn strong_direct_fails_when_negation_dominates() {
        // Π(¬c) = 3 ≥ Π(a) here
        let d = dist([3, 1, 2, 1]);
        assert!(d.poss(&Formula::not(c())) >= d.poss(&a()));
        assert!(!strong_indep_direct(&d, &a(), &c()));
        assert!(!strong_indep(&d, &a(), &c()));
    }

    #[test]
    fn weak_examples() {
        let d = weak_not_strong_case();
        assert!(weak_indep(&d, &a(), &c()));
        assert!(weak_indep_direct(&d, &a(), &c()));
        assert!(!strong_indep(&d, &a(), &c()));
        assert!(weak_indep(&strong_case(), &a(), &c()));
        for d in [strong_case(), related_case(), weak_not_strong_case()] {
            assert_eq!(weak_indep(&d, &a(), &a()), d.nec(&a()).is_positive());
            assert_eq!(
                weak_indep_direct(&d, &a(), &Formula::True),
                weak_indep(&d, &a(), &Formula::True)
            );
        }
    }

    #[test]
    fn contraction_examples() {
        let d = strong_case();
        assert!(!contraction_dep(&d, &a(), &c()));
        assert!(
            !contraction_dep(&dist([3, 1, 1, 3]), &a(), &c()),
            "N(c) = 0"
        );
        // N(a) = 3 - Π(¬a) = 1 here
        let d = dist([1, 3, 1, 2]);
        assert!(d.nec(&a()).is_positive());
        assert!(contraction_dep(&d, &a(), &a()));
    }

    #[test]
    fn cond_weak_collapses_on_true_context() {
        for d in [strong_case(), related_case(), weak_not_strong_case()] {
            for (x, y) in [(a(), c()), (c(), a()), (Formula::not(a()), c())] {
                assert_eq!(
                    cond_weak_indep(&d, &y, &Formula::True, &x),
                    weak_indep(&d, &x, &y)
                );
            }
        }
    }

    #[test]
    fn classify_examples() {
        let r = classify(&strong_case(), &a(), &c());
        assert!(r.unrelated_z && r.weak && r.strong);
        let r = classify(&weak_not_strong_case(), &a(), &c());
        assert!(r.unrelated_z && r.weak && !r.strong);
        let r = classify(&related_case(), &a(), &c());
        assert!(!r.unrelated_z && !r.weak && !r.strong);
        assert_eq!(r.poss_a_c, Level::new(0));
        assert_eq!(r.poss_a_not_c, Level::new(3));
        assert_eq!(r.poss_not_a_c, Level::new(2));
        assert_eq!(r.poss_not_a_not_c, Level::new(1));
    }

    #[test]
    fn recover_strict_order_examples() {
        let d = strong_case();
        let not_c = Formula::not(c());
        assert!(recover_strict_order(&d, &a(), &not_c));
        assert!(d.poss(&a()) > d.poss(&not_c));
        assert!(!recover_strict_order(&d, &a(), &a()));
        assert!(!recover_strict_order(&d, &Formula::False, &c()));
        assert!(!recover_strict_order(&d, &Formula::False, &Formula::False));
    }
}
