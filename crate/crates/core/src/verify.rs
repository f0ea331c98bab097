//! Exhaustive axiom check.

use serde::Serialize;

use crate::algebra::{Algebra, ElementId};

/// A defining law of residuated lattices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    JoinCommutative,
    JoinAssociative,
    JoinIdempotent,
    MeetCommutative,
    MeetAssociative,
    MeetIdempotent,
    Absorption,
    ZeroBottom,
    OneTop,
    ProdCommutative,
    ProdAssociative,
    ProdUnit,
    Residuation,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::JoinCommutative => "join commutative",
            Law::JoinAssociative => "join associative",
            Law::JoinIdempotent => "join idempotent",
            Law::MeetCommutative => "meet commutative",
            Law::MeetAssociative => "meet associative",
            Law::MeetIdempotent => "meet idempotent",
            Law::Absorption => "absorption",
            Law::ZeroBottom => "zero is bottom",
            Law::OneTop => "one is top",
            Law::ProdCommutative => "prod commutative",
            Law::ProdAssociative => "prod associative",
            Law::ProdUnit => "one is the prod unit",
            Law::Residuation => "residuation: a <= b->c iff a*b <= c",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: Law,
    pub witness: Vec<ElementId>,
}

impl Violation {
    pub fn describe(&self, alg: &Algebra) -> String {
        let w: Vec<&str> = self.witness.iter().map(|&i| alg.label(i)).collect();
        format!("{} at ({})", self.law.name(), w.join(", "))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, law: Law) -> usize {
        self.violations.iter().filter(|v| v.law == law).count()
    }
}

/// Checks every bounded-lattice, commutative-monoid and residuation law
/// over all element tuples and reports each failing instance.
pub fn verify_axioms(alg: &Algebra) -> VerificationReport {
    let n = alg.n();
    let (zero, one) = (alg.zero(), alg.one());
    let mut out = Vec::new();
    let mut fail = |law: Law, witness: &[ElementId]| out.push(Violation { law, witness: witness.to_vec() });

    for a in 0..n {
        if alg.join(a, a) != a {
            fail(Law::JoinIdempotent, &[a]);
        }
        if alg.meet(a, a) != a {
            fail(Law::MeetIdempotent, &[a]);
        }
        if alg.meet(zero, a) != zero || alg.join(zero, a) != a {
            fail(Law::ZeroBottom, &[a]);
        }
        if alg.join(one, a) != one || alg.meet(one, a) != a {
            fail(Law::OneTop, &[a]);
        }
        if alg.prod(one, a) != a || alg.prod(a, one) != a {
            fail(Law::ProdUnit, &[a]);
        }
        for b in 0..n {
            if alg.join(a, b) != alg.join(b, a) {
                fail(Law::JoinCommutative, &[a, b]);
            }
            if alg.meet(a, b) != alg.meet(b, a) {
                fail(Law::MeetCommutative, &[a, b]);
            }
            if alg.prod(a, b) != alg.prod(b, a) {
                fail(Law::ProdCommutative, &[a, b]);
            }
            if alg.join(a, alg.meet(a, b)) != a || alg.meet(a, alg.join(a, b)) != a {
                fail(Law::Absorption, &[a, b]);
            }
            for c in 0..n {
                if alg.join(alg.join(a, b), c) != alg.join(a, alg.join(b, c)) {
                    fail(Law::JoinAssociative, &[a, b, c]);
                }
                if alg.meet(alg.meet(a, b), c) != alg.meet(a, alg.meet(b, c)) {
                    fail(Law::MeetAssociative, &[a, b, c]);
                }
                if alg.prod(alg.prod(a, b), c) != alg.prod(a, alg.prod(b, c)) {
                    fail(Law::ProdAssociative, &[a, b, c]);
                }
                if alg.leq(a, alg.imp(b, c)) != alg.leq(alg.prod(a, b), c) {
                    fail(Law::Residuation, &[a, b, c]);
                }
            }
        }
    }
    VerificationReport { violations: out }
}
