//! The Boolean center, relative algebras `⟨e⟩` and lifting of idempotents
//! modulo the radical.

use crate::algebra::{Algebra, ElementId};
use crate::error::{Error, Result};
use crate::filters::{filter_violation, radical, upset, FilterSet};
use crate::quotients::{quotient, QuotientResult};
use crate::set::ElementSet;

/// Complemented elements of the underlying bounded lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanCenter {
    pub members: ElementSet,
    /// `complement[e]` is `Some(¬e)` for members, `None` otherwise.
    pub complement: Vec<Option<ElementId>>,
}

impl BooleanCenter {
    pub fn contains(&self, e: ElementId) -> bool {
        self.members.contains(e)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn boolean_center(alg: &Algebra) -> BooleanCenter {
    let mut members = ElementSet::empty(alg.n());
    let mut complement = vec![None; alg.n()];
    for e in alg.elements() {
        let c = alg.elements().find(|&f| alg.join(e, f) == alg.one() && alg.meet(e, f) == alg.zero());
        if let Some(f) = c {
            members.insert(e);
            complement[e] = Some(f);
        }
    }
    BooleanCenter { members, complement }
}

/// `⟨e⟩ = {a | e ≤ a}` with `a →ₑ b = e ∨ (a → b)`, bottom `e` and top `1`.
#[derive(Clone, Debug)]
pub struct RelativeAlgebra {
    pub e: ElementId,
    pub algebra: Algebra,
    /// Local index ↦ element of the base algebra.
    pub embedding: Vec<ElementId>,
}

impl RelativeAlgebra {
    /// Local index of a base element `a ≥ e`.
    pub fn local(&self, a: ElementId) -> Option<ElementId> {
        self.embedding.iter().position(|&x| x == a)
    }

    /// `F ∩ ⟨e⟩` as a filter of `⟨e⟩`, checked against `{e ∨ a | a ∈ F}`.
    pub fn restrict_filter(&self, base: &Algebra, f: &FilterSet) -> Result<FilterSet> {
        let meet_form = ElementSet::from_members(
            self.algebra.n(),
            self.embedding.iter().enumerate().filter(|(_, &a)| f.contains(a)).map(|(i, _)| i),
        );
        let join_form = ElementSet::from_members(
            self.algebra.n(),
            f.iter().map(|a| self.local(base.join(self.e, a)).expect("e ∨ a lies above e")),
        );
        if meet_form != join_form {
            return Err(Error::Inconsistency("F ∩ ⟨e⟩ differs from {e ∨ a | a ∈ F}".into()));
        }
        if let Some(why) = filter_violation(&self.algebra, &meet_form) {
            return Err(Error::Inconsistency(format!("F ∩ ⟨e⟩ is not a filter of ⟨e⟩: {why}")));
        }
        Ok(meet_form)
    }
}

pub fn relative_algebra(alg: &Algebra, e: ElementId) -> Result<RelativeAlgebra> {
    alg.check_index(e)?;
    if !boolean_center(alg).contains(e) {
        return Err(Error::NotComplemented(alg.label(e).to_string()));
    }
    let members = upset(alg, e);
    let name = format!("{}<{}>", alg.name(), alg.label(e));
    let (algebra, embedding) = alg.induced(&members, name, e, alg.one(), |a, b| alg.join(e, alg.imp(a, b)));
    let algebra = algebra
        .verified()
        .map_err(|err| Error::Inconsistency(format!("relative algebra failed verification: {err}")))?;
    Ok(RelativeAlgebra { e, algebra, embedding })
}

/// Checks `a ≡ b (mod F) ⇒ a ∨ e ≡ b ∨ e (mod F ∩ ⟨e⟩)` over all pairs.
pub fn congruence_restriction_check(alg: &Algebra, f: &FilterSet, e: ElementId) -> Result<bool> {
    if let Some(why) = filter_violation(alg, f) {
        return Err(Error::NotAFilter(why));
    }
    let rel = relative_algebra(alg, e)?;
    let fe = rel.restrict_filter(alg, f)?;
    let r = &rel.algebra;
    for a in alg.elements() {
        for b in alg.elements() {
            if f.contains(alg.biimpl(a, b)) {
                let x = rel.local(alg.join(a, e)).expect("above e");
                let y = rel.local(alg.join(b, e)).expect("above e");
                if !fe.contains(r.biimpl(x, y)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Lifting data for `B(A) → B(A/Rad(A))`.
#[derive(Clone, Debug)]
pub struct Lifting {
    pub radical_quotient: QuotientResult,
    pub center: BooleanCenter,
    pub quotient_center: BooleanCenter,
    /// For each member of `B(A/Rad(A))`, the least member of `B(A)` in its
    /// class, if any.
    pub table: Vec<(ElementId, Option<ElementId>)>,
}

impl Lifting {
    pub fn holds(&self) -> bool {
        self.table.iter().all(|(_, lift)| lift.is_some())
    }

    /// First idempotent of the radical quotient without a lift.
    pub fn unliftable(&self) -> Option<ElementId> {
        self.table.iter().find(|(_, l)| l.is_none()).map(|(f, _)| *f)
    }

    /// e.g. `b/Rad`
    pub fn witness_label(&self) -> Option<String> {
        self.unliftable().map(|f| format!("{}/Rad", self.radical_quotient.quotient.label(f)))
    }
}

pub fn has_lifting(alg: &Algebra) -> Result<Lifting> {
    let rq = quotient(alg, &radical(alg))?;
    let center = boolean_center(alg);
    let quotient_center = boolean_center(&rq.quotient);
    let table =
        quotient_center.members.iter().map(|f| (f, center.members.iter().find(|&e| rq.class_of[e] == f))).collect();
    Ok(Lifting { radical_quotient: rq, center, quotient_center, table })
}

/// A member of `B(A)` whose radical class is `f`, least index first.
pub fn lift_idempotent(alg: &Algebra, f: ElementId) -> Result<Option<ElementId>> {
    let lifting = has_lifting(alg)?;
    let q = &lifting.radical_quotient.quotient;
    q.check_index(f)?;
    if !lifting.quotient_center.contains(f) {
        return Err(Error::NotComplemented(format!("{}/Rad", q.label(f))));
    }
    Ok(lifting.table.iter().find(|(x, _)| *x == f).and_then(|(_, l)| *l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filters::{all_filters, max_filters};
    use crate::fixtures::{fixture, FIXTURE_NAMES};
    use crate::morphisms::find_isomorphism;
    use std::sync::Arc;

    #[test]
    fn centers() {
        let g = fixture("g6").unwrap();
        let b = boolean_center(&g);
        assert_eq!(b.members.to_vec(), vec![g.zero(), g.one()]);
        assert_eq!(boolean_center(&fixture("boolean4").unwrap()).len(), 4);
        let rq = quotient(&g, &radical(&g)).unwrap();
        assert!(boolean_center(&rq.quotient).members.is_full());
    }

    #[test]
    fn complements_are_negations() {
        for name in FIXTURE_NAMES {
            let a = fixture(name).unwrap();
            let b = boolean_center(&a);
            for e in b.members.iter() {
                assert_eq!(b.complement[e], Some(a.neg(e)), "{name}");
                assert_eq!(a.prod(e, e), e);
            }
            let rad = radical(&a);
            if !a.is_trivial() {
                assert_eq!(b.members.intersection(&rad).to_vec(), vec![a.one()], "{name}");
            }
        }
    }

    #[test]
    fn relative_algebras() {
        let g = fixture("g6").unwrap();
        let r0 = relative_algebra(&g, g.zero()).unwrap();
        assert_eq!(r0.algebra.n(), 6);
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(r0.algebra.imp(a, b), g.imp(a, b));
            }
        }
        assert_eq!(relative_algebra(&g, g.one()).unwrap().algebra.n(), 1);
        let b = g.index_of("b").unwrap();
        assert!(matches!(relative_algebra(&g, b), Err(Error::NotComplemented(_))));

        let b4 = fixture("boolean4").unwrap();
        let e = b4.index_of("(1,0)").unwrap();
        let rel = Arc::new(relative_algebra(&b4, e).unwrap().algebra);
        let c2 = Arc::new(fixture("chain2").unwrap());
        assert!(find_isomorphism(&rel, &c2).unwrap().is_some());
    }

    #[test]
    fn restricted_filters_and_congruences() {
        for name in ["g6", "godel3xgodel3", "chain2xlukasiewicz3", "boolean4"] {
            let a = fixture(name).unwrap();
            for e in boolean_center(&a).members.iter() {
                let rel = relative_algebra(&a, e).unwrap();
                for f in all_filters(&a) {
                    rel.restrict_filter(&a, &f).unwrap();
                    assert!(congruence_restriction_check(&a, &f, e).unwrap(), "{name}");
                }
            }
        }
    }

    #[test]
    fn lifting() {
        let g = fixture("g6").unwrap();
        let l = has_lifting(&g).unwrap();
        assert!(!l.holds());
        assert_eq!(l.witness_label().as_deref(), Some("b/Rad"));
        assert!(has_lifting(&fixture("boolean4").unwrap()).unwrap().holds());
        let gg = fixture("godel3xgodel3").unwrap();
        let l = has_lifting(&gg).unwrap();
        assert!(l.holds());
        assert_eq!(l.center.len(), 4);
        assert_eq!(l.quotient_center.len(), 4);
    }

    #[test]
    fn lifting_single_idempotents() {
        let g = fixture("g6").unwrap();
        let rq = quotient(&g, &radical(&g)).unwrap();
        assert_eq!(lift_idempotent(&g, rq.quotient.one()).unwrap(), Some(g.one()));
        let b_class = rq.class_of[g.index_of("b").unwrap()];
        assert_eq!(lift_idempotent(&g, b_class).unwrap(), None);

        let gg = fixture("godel3xgodel3").unwrap();
        let rq = quotient(&gg, &radical(&gg)).unwrap();
        let target = rq.class_of[gg.index_of("(1,0)").unwrap()];
        let e = lift_idempotent(&gg, target).unwrap().unwrap();
        assert_eq!(gg.label(e), "(1,0)");
        assert_eq!(max_filters(&gg).len(), 2);
    }
}
