//! Tolerance-based stratification of default rules, the least specific
//! distribution it induces, and plausible queries against it.
//!
//! A rule `A |~ B` is read as the constraint `Π(A ∧ B) > Π(A ∧ ¬B)`. The
//! stratification puts the least specific rules first; the distribution
//! `π*` gives each world the highest level compatible with every rule, which
//! is `m - 1 - j` when the most specific rule it falsifies sits in stratum
//! `j`, and `m` when it falsifies none.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::independence::cond_weak_indep;
use crate::logic::{models, Formula, Vocabulary, World, WorldSet};
use crate::possibility::{Dist, Level, Measure, TriState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RuleOrigin {
    User,
    IndependenceInjected,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    pub antecedent: Formula,
    pub consequent: Formula,
    pub origin: RuleOrigin,
}

impl Rule {
    pub fn new(antecedent: Formula, consequent: Formula) -> Rule {
        Rule {
            antecedent,
            consequent,
            origin: RuleOrigin::User,
        }
    }

    pub fn injected(antecedent: Formula, consequent: Formula) -> Rule {
        Rule {
            antecedent,
            consequent,
            origin: RuleOrigin::IndependenceInjected,
        }
    }

    /// Worlds where the rule applies and holds: `A ∧ B`.
    pub fn verifiers(&self, vocab: &Vocabulary) -> WorldSet {
        models(
            &Formula::and(self.antecedent.clone(), self.consequent.clone()),
            vocab,
        )
    }

    /// Worlds where the rule applies and fails: `A ∧ ¬B`.
    pub fn falsifiers(&self, vocab: &Vocabulary) -> WorldSet {
        models(
            &Formula::and(
                self.antecedent.clone(),
                Formula::not(self.consequent.clone()),
            ),
            vocab,
        )
    }

    /// `¬A ∨ B`.
    pub fn material(&self) -> Formula {
        Formula::implies(self.antecedent.clone(), self.consequent.clone())
    }

    fn same_content(&self, other: &Rule) -> bool {
        self.antecedent == other.antecedent && self.consequent == other.consequent
    }

    pub fn display<'a>(&'a self, vocab: &'a Vocabulary) -> RuleDisplay<'a> {
        RuleDisplay { rule: self, vocab }
    }
}

pub struct RuleDisplay<'a> {
    rule: &'a Rule,
    vocab: &'a Vocabulary,
}

impl fmt::Display for RuleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} |~ {}",
            self.rule.antecedent.display(self.vocab),
            self.rule.consequent.display(self.vocab)
        )?;
        if self.rule.origin == RuleOrigin::IndependenceInjected {
            write!(f, " [indep]")?;
        }
        Ok(())
    }
}

/// Conditional knowledge base: an ordered rule list over one vocabulary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleBase {
    vocab: Vocabulary,
    rules: Vec<Rule>,
}

impl RuleBase {
    pub fn new(vocab: Vocabulary) -> RuleBase {
        RuleBase {
            vocab,
            rules: Vec::new(),
        }
    }

    pub fn with_rules(vocab: Vocabulary, rules: Vec<Rule>) -> RuleBase {
        let mut kb = RuleBase::new(vocab);
        for r in rules {
            kb.push(r);
        }
        kb
    }

    pub fn push(&mut self, rule: Rule) {
        assert!(
            rule.antecedent.is_over(&self.vocab) && rule.consequent.is_over(&self.vocab),
            "rule mentions an atom outside the vocabulary"
        );
        self.rules.push(rule);
    }

    pub fn vocab(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }
}

/// A weak conditional independence assertion: learning `extra` in
/// `context` leaves `conclusion` accepted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceAssertion {
    pub context: Formula,
    pub extra: Formula,
    pub conclusion: Formula,
}

/// Adds `context ∧ extra |~ conclusion`, tagged as injected.
pub fn inject_independence(
    kb: &RuleBase,
    context: &Formula,
    extra: &Formula,
    conclusion: &Formula,
) -> RuleBase {
    let mut out = kb.clone();
    out.push(Rule::injected(
        Formula::and(context.clone(), extra.clone()),
        conclusion.clone(),
    ));
    out
}

/// Some world verifies `r` while falsifying no rule of `others`.
pub fn tolerates(others: &[Rule], r: &Rule, vocab: &Vocabulary) -> bool {
    let forbidden = others
        .iter()
        .fold(WorldSet::empty(vocab.world_count()), |acc, o| {
            acc.union(&o.falsifiers(vocab))
        });
    !r.verifiers(vocab).difference(&forbidden).is_empty()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("rule base is inconsistent: no rule is tolerated among {}", .residual_text.join("; "))]
pub struct ConsistencyError {
    /// Indices of the rules left unstratified.
    pub residual: Vec<usize>,
    pub residual_text: Vec<String>,
    /// Subset of `residual` that came from independence assertions.
    pub injected: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankingError {
    #[error("rule base has no rules")]
    EmptyBase,
    #[error(transparent)]
    Inconsistent(#[from] ConsistencyError),
}

/// Partition of rule indices into strata, least specific first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratification {
    pub strata: Vec<Vec<usize>>,
    pub stratum_of: Vec<usize>,
}

impl Stratification {
    pub fn len(&self) -> usize {
        self.strata.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strata.is_empty()
    }
}

/// Partitions the base by repeated tolerance tests. Rules with identical
/// antecedent and consequent are treated as one rule and share a stratum.
pub fn stratify(kb: &RuleBase) -> Result<Stratification, RankingError> {
    if kb.is_empty() {
        return Err(RankingError::EmptyBase);
    }
    let vocab = kb.vocab();
    let rules = kb.rules();

    let mut representative = Vec::with_capacity(rules.len());
    for (i, r) in rules.iter().enumerate() {
        let rep = rules[..i]
            .iter()
            .position(|o| o.same_content(r))
            .unwrap_or(i);
        representative.push(rep);
    }
    let verify: HashMap<usize, WorldSet> = representative
        .iter()
        .map(|&i| (i, rules[i].verifiers(vocab)))
        .collect();
    let falsify: HashMap<usize, WorldSet> = representative
        .iter()
        .map(|&i| (i, rules[i].falsifiers(vocab)))
        .collect();

    let mut remaining: Vec<usize> = (0..rules.len())
        .filter(|&i| representative[i] == i)
        .collect();
    let mut strata = Vec::new();
    let mut stratum_of = vec![usize::MAX; rules.len()];
    while !remaining.is_empty() {
        let forbidden = remaining
            .iter()
            .fold(WorldSet::empty(vocab.world_count()), |acc, i| {
                acc.union(&falsify[i])
            });
        let (tolerated, rest): (Vec<usize>, Vec<usize>) = remaining
            .iter()
            .partition(|i| !verify[i].difference(&forbidden).is_empty());
        if tolerated.is_empty() {
            let residual: Vec<usize> = (0..rules.len())
                .filter(|i| rest.contains(&representative[*i]))
                .collect();
            return Err(ConsistencyError {
                residual_text: residual
                    .iter()
                    .map(|&i| rules[i].display(vocab).to_string())
                    .collect(),
                injected: residual
                    .iter()
                    .copied()
                    .filter(|&i| rules[i].origin == RuleOrigin::IndependenceInjected)
                    .collect(),
                residual,
            }
            .into());
        }
        let j = strata.len();
        let members: Vec<usize> = (0..rules.len())
            .filter(|i| tolerated.contains(&representative[*i]))
            .collect();
        for &i in &members {
            stratum_of[i] = j;
        }
        strata.push(members);
        remaining = rest;
    }
    Ok(Stratification { strata, stratum_of })
}

/// Stratification together with the least specific distribution and the
/// per-rule priority levels read off it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratifiedRanking {
    pub stratification: Stratification,
    pub pi_star: Dist,
    /// `N*(¬A ∨ B)` for each rule, in rule order.
    pub priorities: Vec<Level>,
}

pub fn compute_pi_star(kb: &RuleBase) -> Result<StratifiedRanking, RankingError> {
    let stratification = stratify(kb)?;
    let vocab = kb.vocab();
    let m = stratification.len() as u32;
    let falsifiers: Vec<WorldSet> = kb.rules().iter().map(|r| r.falsifiers(vocab)).collect();

    let levels: Vec<Level> = vocab
        .worlds()
        .map(|w| {
            let worst = falsifiers
                .iter()
                .enumerate()
                .filter(|(_, f)| f.contains(w))
                .map(|(i, _)| stratification.stratum_of[i] as u32)
                .max();
            Level::new(match worst {
                None => m,
                Some(j) => m - 1 - j,
            })
        })
        .collect();
    // A stratum-0 witness falsifies nothing, so some world sits at m.
    let pi_star = Dist::new(vocab.clone(), Level::new(m), levels)
        .expect("tolerance witness of the first stratum reaches the top level");

    let priorities = kb
        .rules()
        .iter()
        .map(|r| pi_star.nec(&r.material()))
        .collect();
    let ranking = StratifiedRanking {
        stratification,
        pi_star,
        priorities,
    };
    assert!(
        ranking.unsatisfied_rules(kb).is_empty(),
        "least specific distribution violates a rule constraint"
    );
    Ok(ranking)
}

impl StratifiedRanking {
    pub fn top(&self) -> Level {
        self.pi_star.top()
    }

    pub fn query(&self, evidence: &Formula, conclusion: &Formula) -> TriState {
        self.pi_star.entails(evidence, conclusion)
    }

    /// Rules whose constraint `Π*(A ∧ B) > Π*(A ∧ ¬B)` fails. Always empty
    /// for a ranking built by [`compute_pi_star`].
    pub fn unsatisfied_rules(&self, kb: &RuleBase) -> Vec<usize> {
        kb.rules()
            .iter()
            .enumerate()
            .filter(|(_, r)| {
                self.pi_star.entails(&r.antecedent, &r.consequent) != TriState::Accepted
            })
            .map(|(i, _)| i)
            .collect()
    }

    /// Rules whose priority differs from their stratum index plus one.
    /// Happens when falsifying a rule always forces falsifying a more
    /// specific one.
    pub fn priority_mismatches(&self) -> Vec<usize> {
        self.priorities
            .iter()
            .enumerate()
            .filter(|(i, p)| p.get() != self.stratification.stratum_of[*i] as u32 + 1)
            .map(|(i, _)| i)
            .collect()
    }

    /// Single-world raises of `π*` that keep every rule constraint. Empty
    /// exactly when no world can be made more possible on its own.
    pub fn maximality_violations(&self, kb: &RuleBase) -> Vec<(World, Level)> {
        let vocab = self.pi_star.vocab();
        let top = self.top().get();
        let mut out = Vec::new();
        for w in vocab.worlds() {
            let current = self.pi_star.level(w).get();
            for raised in current + 1..=top {
                let mut levels = self.pi_star.levels().to_vec();
                levels[w.index()] = Level::new(raised);
                let Ok(candidate) = Dist::new(vocab.clone(), self.top(), levels) else {
                    continue;
                };
                let all_hold = kb
                    .rules()
                    .iter()
                    .all(|r| candidate.entails(&r.antecedent, &r.consequent) == TriState::Accepted);
                if all_hold {
                    out.push((w, Level::new(raised)));
                }
            }
        }
        out
    }

    /// Whether `conclusion` stays accepted in `context` and in `context ∧ extra`.
    pub fn satisfies(&self, assertion: &IndependenceAssertion) -> bool {
        cond_weak_indep(
            &self.pi_star,
            &assertion.conclusion,
            &assertion.context,
            &assertion.extra,
        )
    }
}

pub fn query(
    kb: &RuleBase,
    evidence: &Formula,
    conclusion: &Formula,
) -> Result<TriState, RankingError> {
    Ok(compute_pi_star(kb)?.query(evidence, conclusion))
}

/// Rational monotony on one triple: `N(a|b) > 0` and `N(¬c|b) = 0`
/// imply `N(a | b ∧ c) > 0`.
pub fn check_rational_monotony<M: Measure + ?Sized>(
    m: &M,
    a: &M::Event,
    b: &M::Event,
    c: &M::Event,
) -> bool {
    let premise = m.cond_nec(a, b).is_positive() && !m.cond_nec(&m.negate(c), b).is_positive();
    !premise || m.cond_nec(a, &m.meet(b, c)).is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vocab(names: &[&str]) -> Vocabulary {
        Vocabulary::new(names.iter().copied()).unwrap()
    }

    fn lit(v: &Vocabulary, s: &str) -> Formula {
        match s.strip_prefix('!') {
            Some(name) => Formula::not(v.atom(name).unwrap()),
            None => v.atom(s).unwrap(),
        }
    }

    fn rule(v: &Vocabulary, a: &str, b: &str) -> Rule {
        Rule::new(lit(v, a), lit(v, b))
    }

    fn penguin() -> RuleBase {
        let v = vocab(&["p", "b", "f", "l"]);
        let rules = vec![
            rule(&v, "p", "!f"),
            rule(&v, "b", "f"),
            rule(&v, "p", "b"),
            rule(&v, "b", "l"),
        ];
        RuleBase::with_rules(v, rules)
    }

    #[test]
    fn tolerance_examples() {
        let v = vocab(&["a", "b"]);
        assert!(tolerates(&[], &rule(&v, "a", "b"), &v));
        let pos = rule(&v, "a", "b");
        let neg = rule(&v, "a", "!b");
        assert!(!tolerates(std::slice::from_ref(&neg), &pos, &v));
        assert!(!tolerates(std::slice::from_ref(&pos), &neg, &v));

        let kb = penguin();
        assert!(tolerates(kb.rules(), &kb.rules()[1], kb.vocab()));
        assert!(!tolerates(kb.rules(), &kb.rules()[2], kb.vocab()));
    }

    #[test]
    fn single_rule_base() {
        let v = vocab(&["a", "b"]);
        let kb = RuleBase::with_rules(v, vec![rule(&vocab(&["a", "b"]), "a", "b")]);
        let s = stratify(&kb).unwrap();
        assert_eq!(s.strata, vec![vec![0]]);
        let r = compute_pi_star(&kb).unwrap();
        assert_eq!(r.top(), Level::new(1));
        // worlds indexed a + 2b: [¬a¬b, a¬b, ¬ab, ab]
        let lv: Vec<u32> = r.pi_star.levels().iter().map(|l| l.get()).collect();
        assert_eq!(lv, vec![1, 0, 1, 1]);
        assert_eq!(r.priorities, vec![Level::new(1)]);
    }

    #[test]
    fn contradictory_base_reports_residual() {
        let v = vocab(&["a", "b"]);
        let kb = RuleBase::with_rules(v.clone(), vec![rule(&v, "a", "b"), rule(&v, "a", "!b")]);
        match stratify(&kb) {
            Err(RankingError::Inconsistent(e)) => {
                assert_eq!(e.residual, vec![0, 1]);
                assert!(e.injected.is_empty());
                assert_eq!(e.residual_text, vec!["a |~ b", "a |~ !b"]);
            }
            other => panic!("expected inconsistency, got {other:?}"),
        }
        assert_eq!(stratify(&RuleBase::new(v)), Err(RankingError::EmptyBase));
    }

    #[test]
    fn penguin_strata_and_levels() {
        let kb = penguin();
        let r = compute_pi_star(&kb).unwrap();
        assert_eq!(r.stratification.strata, vec![vec![1, 3], vec![0, 2]]);
        assert_eq!(r.top(), Level::new(2));
        let v = kb.vocab();
        let world = |s: &[&str]| {
            let f = s.iter().map(|x| lit(v, x)).reduce(Formula::and).unwrap();
            let ws: Vec<World> = models(&f, v).iter().collect();
            assert_eq!(ws.len(), 1);
            r.pi_star.level(ws[0])
        };
        assert_eq!(world(&["!p", "b", "f", "l"]), Level::new(2));
        assert_eq!(world(&["p", "b", "!f", "l"]), Level::new(1));
        assert_eq!(world(&["p", "b", "f", "l"]), Level::new(0));
        assert_eq!(world(&["p", "b", "f", "!l"]), Level::new(0));
        let pr: Vec<u32> = r.priorities.iter().map(|l| l.get()).collect();
        assert_eq!(pr, vec![2, 1, 2, 1]);
        assert!(r.priority_mismatches().is_empty());
        assert!(r.maximality_violations(&kb).is_empty());
    }

    #[test]
    fn penguin_queries() {
        let kb = penguin();
        let v = kb.vocab().clone();
        let q = |e: &str, c: &str| query(&kb, &lit(&v, e), &lit(&v, c)).unwrap();
        assert_eq!(q("p", "b"), TriState::Accepted);
        assert_eq!(q("p", "f"), TriState::Rejected);
        assert_eq!(q("p", "l"), TriState::Ignored);
        assert_eq!(q("b", "f"), TriState::Accepted);
    }

    #[test]
    fn duplicate_injection_leaves_strata_unchanged() {
        let kb = penguin();
        let v = kb.vocab().clone();
        let dup = RuleBase::with_rules(
            v.clone(),
            kb.rules()
                .iter()
                .cloned()
                .chain([Rule::injected(lit(&v, "b"), lit(&v, "l"))])
                .collect(),
        );
        let before = stratify(&kb).unwrap();
        let after = stratify(&dup).unwrap();
        assert_eq!(after.len(), before.len());
        assert_eq!(after.strata[0], vec![1, 3, 4]);
        assert_eq!(after.strata[1], before.strata[1]);
        assert_eq!(
            compute_pi_star(&dup).unwrap().pi_star,
            compute_pi_star(&kb).unwrap().pi_star
        );
    }

    #[test]
    fn priority_can_exceed_stratum() {
        // Falsifying a |~ b always falsifies the more specific third rule.
        let v = vocab(&["a", "b", "p", "q"]);
        let a = lit(&v, "a");
        let b = lit(&v, "b");
        let p = lit(&v, "p");
        let q = lit(&v, "q");
        let exceptional = Formula::or(Formula::and(a.clone(), Formula::not(b.clone())), p);
        let guard = Formula::and(
            Formula::implies(a.clone(), b.clone()),
            Formula::not(q.clone()),
        );
        let kb = RuleBase::with_rules(
            v,
            vec![
                Rule::new(a, b),
                Rule::new(Formula::True, q),
                Rule::new(exceptional, guard),
            ],
        );
        let r = compute_pi_star(&kb).unwrap();
        assert_eq!(r.stratification.strata, vec![vec![0, 1], vec![2]]);
        assert_eq!(r.priorities[0], Level::new(2));
        assert_eq!(r.priority_mismatches(), vec![0]);
        assert!(r.maximality_violations(&kb).is_empty());
    }

    #[test]
    fn rational_monotony_on_penguin() {
        let kb = penguin();
        let v = kb.vocab().clone();
        let r = compute_pi_star(&kb).unwrap();
        assert!(check_rational_monotony(
            &r.pi_star,
            &lit(&v, "f"),
            &lit(&v, "b"),
            &lit(&v, "l")
        ));
        // N(f | p) = 0: vacuous
        assert!(check_rational_monotony(
            &r.pi_star,
            &lit(&v, "f"),
            &lit(&v, "p"),
            &lit(&v, "l")
        ));
    }
}
