//! Exhaustive checks of standard residuated-lattice identities and of the
//! identities relating Boolean elements to arbitrary ones.

use serde::Serialize;

use crate::algebra::{Algebra, ElementId};
use crate::boolean_center::boolean_center;

/// Outcome of one law over every instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub id: &'static str,
    pub statement: &'static str,
    pub instances: usize,
    pub failures: usize,
    pub first_failure: Option<Vec<ElementId>>,
}

impl LawResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawSuiteReport {
    pub suite: &'static str,
    pub results: Vec<LawResult>,
}

impl LawSuiteReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(LawResult::passed)
    }
}

struct Tally {
    result: LawResult,
}

impl Tally {
    fn new(id: &'static str, statement: &'static str) -> Self {
        Tally { result: LawResult { id, statement, instances: 0, failures: 0, first_failure: None } }
    }

    fn check(&mut self, ok: bool, witness: &[ElementId]) {
        self.result.instances += 1;
        if !ok {
            self.result.failures += 1;
            if self.result.first_failure.is_none() {
                self.result.first_failure = Some(witness.to_vec());
            }
        }
    }
}

fn sweep1(alg: &Algebra, id: &'static str, st: &'static str, f: impl Fn(ElementId) -> bool) -> LawResult {
    let mut t = Tally::new(id, st);
    for a in alg.elements() {
        t.check(f(a), &[a]);
    }
    t.result
}

fn sweep2(alg: &Algebra, id: &'static str, st: &'static str, f: impl Fn(ElementId, ElementId) -> bool) -> LawResult {
    let mut t = Tally::new(id, st);
    for a in alg.elements() {
        for b in alg.elements() {
            t.check(f(a, b), &[a, b]);
        }
    }
    t.result
}

fn sweep3(
    alg: &Algebra,
    id: &'static str,
    st: &'static str,
    f: impl Fn(ElementId, ElementId, ElementId) -> bool,
) -> LawResult {
    let mut t = Tally::new(id, st);
    for a in alg.elements() {
        for b in alg.elements() {
            for c in alg.elements() {
                t.check(f(a, b, c), &[a, b, c]);
            }
        }
    }
    t.result
}

/// Thirteen identities valid in every residuated lattice.
pub fn residuated_identities(alg: &Algebra) -> LawSuiteReport {
    let x = alg;
    let (zero, one) = (x.zero(), x.one());
    let neg = |a| x.neg(a);
    let leq = |a, b| x.leq(a, b);

    let mut results = Vec::new();
    let mut t = Tally::new("neg-constants", "¬0 = 1 and ¬1 = 0");
    t.check(neg(zero) == one && neg(one) == zero, &[]);
    results.push(t.result);
    results.push(sweep1(x, "one-implication", "a = 1 → a and 1 = a → 1", |a| {
        x.imp(one, a) == a && x.imp(a, one) == one
    }));
    results.push(sweep2(
        x,
        "order-via-implication",
        "a ≤ b iff a → b = 1, and a ≤ ¬b iff a ⊙ b = 0",
        |a, b| leq(a, b) == (x.imp(a, b) == one) && leq(a, neg(b)) == (x.prod(a, b) == zero),
    ));
    let mut t = Tally::new("prod-monotone", "a ≤ b and c ≤ d imply a ⊙ c ≤ b ⊙ d");
    for a in x.elements() {
        for b in x.elements().filter(|&b| leq(a, b)) {
            for c in x.elements() {
                for d in x.elements().filter(|&d| leq(c, d)) {
                    t.check(leq(x.prod(a, c), x.prod(b, d)), &[a, b, c, d]);
                }
            }
        }
    }
    results.push(t.result);
    results.push(sweep3(
        x,
        "implication-monotone",
        "a ≤ b implies c → a ≤ c → b and b → c ≤ a → c",
        |a, b, c| !leq(a, b) || (leq(x.imp(c, a), x.imp(c, b)) && leq(x.imp(b, c), x.imp(a, c))),
    ));
    results.push(sweep2(x, "prod-below-meet", "a ⊙ b ≤ a ∧ b", |a, b| leq(x.prod(a, b), x.meet(a, b))));
    results.push(sweep2(x, "weakening", "a ≤ b → a", |a, b| leq(a, x.imp(b, a))));
    results.push(sweep1(x, "zero-laws", "a ⊙ 0 = 0, 0 → a = 1 and a ↔ 0 = ¬a", |a| {
        x.prod(a, zero) == zero && x.imp(zero, a) == one && x.biimpl(a, zero) == neg(a)
    }));
    results.push(sweep1(x, "double-negation", "a ≤ ¬¬a and ¬¬¬a = ¬a", |a| {
        leq(a, neg(neg(a))) && neg(neg(neg(a))) == neg(a)
    }));
    results.push(sweep3(x, "prod-distributes", "a ⊙ (b ∨ c) = (a ⊙ b) ∨ (a ⊙ c)", |a, b, c| {
        x.prod(a, x.join(b, c)) == x.join(x.prod(a, b), x.prod(a, c))
    }));
    results.push(sweep3(x, "join-antecedent", "(a ∨ b) → c = (a → c) ∧ (b → c)", |a, b, c| {
        x.imp(x.join(a, b), c) == x.meet(x.imp(a, c), x.imp(b, c))
    }));
    results.push(sweep3(x, "prefixing", "a → b ≤ (c → a) → (c → b)", |a, b, c| {
        leq(x.imp(a, b), x.imp(x.imp(c, a), x.imp(c, b)))
    }));
    results.push(sweep3(x, "exchange", "a → (b → c) = b → (a → c)", |a, b, c| {
        x.imp(a, x.imp(b, c)) == x.imp(b, x.imp(a, c))
    }));
    LawSuiteReport { suite: "residuated-identities", results }
}

/// Five identities for `e, f ∈ B(A)` and arbitrary `a, b`.
pub fn boolean_identities(alg: &Algebra) -> LawSuiteReport {
    let x = alg;
    let center: Vec<ElementId> = boolean_center(x).members.to_vec();
    let mut ts = [
        Tally::new("boolean-absorbs-above", "e ≤ a implies ¬e → a = a"),
        Tally::new("boolean-idempotent-implication", "e → a = e → (e → a)"),
        Tally::new("boolean-self-distributive", "e → (a → b) = (e → a) → (e → b)"),
        Tally::new("boolean-negated-implication", "¬e → a = e ∨ a"),
        Tally::new("boolean-join-distributive", "a ∨ (e ∧ f) = (a ∨ e) ∧ (a ∨ f)"),
    ];
    for &e in &center {
        for a in x.elements() {
            if x.leq(e, a) {
                ts[0].check(x.imp(x.neg(e), a) == a, &[e, a]);
            }
            ts[1].check(x.imp(e, a) == x.imp(e, x.imp(e, a)), &[e, a]);
            ts[3].check(x.imp(x.neg(e), a) == x.join(e, a), &[e, a]);
            for b in x.elements() {
                ts[2].check(x.imp(e, x.imp(a, b)) == x.imp(x.imp(e, a), x.imp(e, b)), &[e, a, b]);
            }
            for &f in &center {
                ts[4].check(x.join(a, x.meet(e, f)) == x.meet(x.join(a, e), x.join(a, f)), &[e, f, a]);
            }
        }
    }
    LawSuiteReport { suite: "boolean-identities", results: ts.into_iter().map(|t| t.result).collect() }
}

/// Both suites.
pub fn check_laws(alg: &Algebra) -> Vec<LawSuiteReport> {
    vec![residuated_identities(alg), boolean_identities(alg)]
}
