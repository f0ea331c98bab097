//! Filters and the distinguished filters of a finite residuated lattice.
//!
//! In a finite algebra every filter `F` is the principal up-set of the
//! product of its members, which is an idempotent. The filter lattice is
//! therefore enumerated from the idempotents rather than from subsets.

use crate::algebra::{Algebra, ElementId};
use crate::set::ElementSet;

/// Filters are carried as plain element sets over the owning algebra.
pub type FilterSet = ElementSet;

/// The first closure condition `s` fails, if any.
pub fn filter_violation(alg: &Algebra, s: &ElementSet) -> Option<String> {
    if s.universe() != alg.n() {
        return Some(format!("set universe {} does not match algebra size {}", s.universe(), alg.n()));
    }
    if s.is_empty() {
        return Some("set is empty".into());
    }
    for a in s.iter() {
        for b in s.iter() {
            let p = alg.prod(a, b);
            if !s.contains(p) {
                return Some(format!(
                    "not closed under prod: {} * {} = {} is missing",
                    alg.label(a),
                    alg.label(b),
                    alg.label(p)
                ));
            }
        }
        for b in alg.elements() {
            if alg.leq(a, b) && !s.contains(b) {
                return Some(format!(
                    "not upward closed: {} <= {} but {} is missing",
                    alg.label(a),
                    alg.label(b),
                    alg.label(b)
                ));
            }
        }
    }
    None
}

pub fn is_filter(alg: &Algebra, s: &ElementSet) -> bool {
    filter_violation(alg, s).is_none()
}

/// A filter different from the whole algebra.
pub fn is_proper(alg: &Algebra, s: &ElementSet) -> bool {
    is_filter(alg, s) && !s.is_full()
}

/// `{b | a <= b}`
pub fn upset(alg: &Algebra, a: ElementId) -> ElementSet {
    ElementSet::from_predicate(alg.n(), |b| alg.leq(a, b))
}

/// The idempotent at which the descending power sequence of `a` settles.
pub fn idempotent_power(alg: &Algebra, a: ElementId) -> ElementId {
    let mut p = a;
    loop {
        let next = alg.prod(p, a);
        if next == p {
            return p;
        }
        p = next;
    }
}

/// Smallest filter containing `x`; `{1}` for the empty set.
pub fn generated_filter(alg: &Algebra, x: &[ElementId]) -> FilterSet {
    // products of members of x are bounded below by powers of their product
    let q = alg.prod_all(x.iter().copied());
    upset(alg, idempotent_power(alg, q))
}

/// Every filter, in cardinality-then-lexicographic order.
pub fn all_filters(alg: &Algebra) -> Vec<FilterSet> {
    let mut out: Vec<FilterSet> = alg.elements().filter(|&e| alg.prod(e, e) == e).map(|e| upset(alg, e)).collect();
    out.sort();
    out.dedup();
    out
}

/// Prime condition `a ∨ b ∈ P ⇒ a ∈ P or b ∈ P`, on a proper filter.
pub fn is_prime(alg: &Algebra, p: &FilterSet) -> bool {
    if !is_proper(alg, p) {
        return false;
    }
    let outside: Vec<ElementId> = alg.elements().filter(|&a| !p.contains(a)).collect();
    outside.iter().all(|&a| outside.iter().all(|&b| !p.contains(alg.join(a, b))))
}

/// Prime filters.
pub fn spec(alg: &Algebra) -> Vec<FilterSet> {
    all_filters(alg).into_iter().filter(|f| is_prime(alg, f)).collect()
}

/// Maximal proper filters. Empty for the trivial algebra.
pub fn max_filters(alg: &Algebra) -> Vec<FilterSet> {
    let proper: Vec<FilterSet> = all_filters(alg).into_iter().filter(|f| !f.is_full()).collect();
    proper.iter().filter(|f| !proper.iter().any(|g| g != *f && f.is_subset(g))).cloned().collect()
}

pub fn is_maximal(alg: &Algebra, f: &FilterSet) -> bool {
    max_filters(alg).contains(f)
}

/// Intersection of the maximal filters; `{0}` (the whole algebra) when
/// the algebra is trivial.
pub fn radical(alg: &Algebra) -> FilterSet {
    if alg.is_trivial() {
        return ElementSet::full(1);
    }
    max_filters(alg).iter().fold(ElementSet::full(alg.n()), |acc, m| acc.intersection(m))
}

/// `Ds(A) = {a | ¬a = 0}`
pub fn dense_filter(alg: &Algebra) -> FilterSet {
    ElementSet::from_predicate(alg.n(), |a| alg.neg(a) == alg.zero())
}

/// `D(A) = {a | ord(a) = ∞}`; a filter exactly when the algebra is local.
pub fn infinite_order_set(alg: &Algebra) -> ElementSet {
    ElementSet::from_predicate(alg.n(), |a| alg.ord(a).is_none())
}

/// Elements excluded from only finitely many maximal filters. With finitely
/// many maximal filters this is every element.
pub fn f_m_filter(alg: &Algebra) -> FilterSet {
    let max = max_filters(alg);
    ElementSet::from_predicate(alg.n(), |a| {
        let excluding = max.iter().filter(|m| !m.contains(a)).count();
        excluding <= max.len()
    })
}

/// Join in the filter lattice.
pub fn filter_join(alg: &Algebra, f: &FilterSet, g: &FilterSet) -> FilterSet {
    let union: Vec<ElementId> = f.union(g).to_vec();
    generated_filter(alg, &union)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;

    fn set(alg: &Algebra, labels: &[&str]) -> ElementSet {
        ElementSet::from_members(alg.n(), labels.iter().map(|l| alg.index_of(l).unwrap()))
    }

    #[test]
    fn filter_membership() {
        let g = fixture("g6").unwrap();
        assert!(is_filter(&g, &set(&g, &["a", "1"])));
        assert!(is_proper(&g, &set(&g, &["a", "1"])));
        assert!(is_proper(&g, &set(&g, &["1"])));
        let bad = set(&g, &["b", "1"]);
        assert!(!is_filter(&g, &bad));
        assert!(filter_violation(&g, &bad).unwrap().contains("upward"));
        assert!(!is_proper(&g, &ElementSet::full(6)));
        assert!(!is_filter(&g, &ElementSet::empty(6)));
    }

    #[test]
    fn generated() {
        let g = fixture("g6").unwrap();
        let c = g.index_of("c").unwrap();
        let b = g.index_of("b").unwrap();
        assert_eq!(generated_filter(&g, &[c]), set(&g, &["a", "c", "d", "1"]));
        assert_eq!(generated_filter(&g, &[]), set(&g, &["1"]));
        assert!(generated_filter(&g, &[b, c]).is_full());
    }

    #[test]
    fn g6_filter_lattice() {
        let g = fixture("g6").unwrap();
        let fs = all_filters(&g);
        let expected = vec![
            set(&g, &["1"]),
            set(&g, &["a", "1"]),
            set(&g, &["a", "b", "1"]),
            set(&g, &["a", "c", "d", "1"]),
            ElementSet::full(6),
        ];
        assert_eq!(fs, expected);
        assert_eq!(max_filters(&g), vec![set(&g, &["a", "b", "1"]), set(&g, &["a", "c", "d", "1"])]);
        assert_eq!(radical(&g), set(&g, &["a", "1"]));
        assert_eq!(dense_filter(&g), set(&g, &["a", "1"]));
        assert!(f_m_filter(&g).is_full());
    }

    #[test]
    fn g6_spec() {
        // 1 is join-irreducible, so {1} is prime; b ∨ c = a rules out {a, 1}
        let g = fixture("g6").unwrap();
        assert_eq!(spec(&g), vec![set(&g, &["1"]), set(&g, &["a", "b", "1"]), set(&g, &["a", "c", "d", "1"])]);
    }

    #[test]
    fn small_chains() {
        let c2 = fixture("chain2").unwrap();
        assert_eq!(all_filters(&c2), vec![set(&c2, &["1"]), ElementSet::full(2)]);
        assert_eq!(spec(&c2), vec![set(&c2, &["1"])]);
        assert_eq!(max_filters(&c2), vec![set(&c2, &["1"])]);
        assert_eq!(radical(&c2), set(&c2, &["1"]));
        assert_eq!(dense_filter(&c2), set(&c2, &["1"]));
        let b4 = fixture("boolean4").unwrap();
        assert_eq!(all_filters(&b4).len(), 4);
        // m -> 0 = 0 in the Gödel chain, so m is dense
        let g3 = fixture("godel3").unwrap();
        assert_eq!(dense_filter(&g3), set(&g3, &["m", "1"]));
    }

    #[test]
    fn trivial_algebra() {
        let t = fixture("trivial").unwrap();
        assert!(max_filters(&t).is_empty());
        assert!(spec(&t).is_empty());
        assert_eq!(radical(&t), ElementSet::full(1));
    }

    #[test]
    fn joins() {
        let g = fixture("g6").unwrap();
        let m = max_filters(&g);
        assert!(filter_join(&g, &m[0], &m[1]).is_full());
        let one = set(&g, &["1"]);
        for f in all_filters(&g) {
            assert_eq!(filter_join(&g, &f, &one), f);
        }
        assert_eq!(filter_join(&g, &set(&g, &["a", "1"]), &m[0]), m[0]);
    }
}
