//! Quotients `A/F` modulo a filter.

use std::sync::Arc;

use crate::algebra::{Algebra, ElementId};
use crate::error::{Error, Result};
use crate::filters::{all_filters, filter_violation, max_filters, FilterSet};
use crate::morphisms::Morphism;
use crate::set::ElementSet;

/// `A/F` with its class map.
///
/// Quotient elements are the congruence classes ordered by their least
/// member, which is also the class representative.
#[derive(Clone, Debug)]
pub struct QuotientResult {
    pub quotient: Arc<Algebra>,
    /// Parent element ↦ quotient element.
    pub class_of: Vec<ElementId>,
    /// Quotient element ↦ its class in the parent.
    pub classes: Vec<ElementSet>,
    pub representatives: Vec<ElementId>,
    pub filter: FilterSet,
}

impl QuotientResult {
    /// Image of a parent set under the class map.
    pub fn image(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_members(self.quotient.n(), s.iter().map(|a| self.class_of[a]))
    }

    /// Parent elements whose class lies in `s`.
    pub fn preimage(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_predicate(self.class_of.len(), |a| s.contains(self.class_of[a]))
    }

    /// `a/F ≤ b/F` in the quotient.
    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.quotient.leq(self.class_of[a], self.class_of[b])
    }
}

/// Label of a set of parent elements, e.g. `{a,1}`.
pub fn set_label(alg: &Algebra, s: &ElementSet) -> String {
    format!("{{{}}}", s.labels(alg.labels()).join(","))
}

/// `A/F`. Each class is labelled by its representative, except that the
/// classes of `0` and `1` carry those labels.
pub fn quotient(alg: &Algebra, filter: &FilterSet) -> Result<QuotientResult> {
    if let Some(why) = filter_violation(alg, filter) {
        return Err(Error::NotAFilter(why));
    }
    let n = alg.n();
    let mut class_of = vec![usize::MAX; n];
    let mut reps: Vec<ElementId> = Vec::new();
    for a in alg.elements() {
        let found = reps.iter().position(|&r| filter.contains(alg.biimpl(a, r)));
        class_of[a] = match found {
            Some(k) => k,
            None => {
                reps.push(a);
                reps.len() - 1
            }
        };
    }
    let m = reps.len();
    let mut classes = vec![ElementSet::empty(n); m];
    for a in alg.elements() {
        classes[class_of[a]].insert(a);
    }
    let mut tables = [vec![0u32; m * m], vec![0u32; m * m], vec![0u32; m * m], vec![0u32; m * m]];
    for (i, &x) in reps.iter().enumerate() {
        for (j, &y) in reps.iter().enumerate() {
            let vals = [alg.join(x, y), alg.meet(x, y), alg.prod(x, y), alg.imp(x, y)];
            for (t, v) in tables.iter_mut().zip(vals) {
                t[i * m + j] = class_of[v] as u32;
            }
        }
    }
    let (zero, one) = (class_of[alg.zero()], class_of[alg.one()]);
    let labels: Vec<String> = (0..m)
        .map(|k| {
            let src = if k == one {
                alg.one()
            } else if k == zero {
                alg.zero()
            } else {
                reps[k]
            };
            alg.label(src).to_string()
        })
        .collect();
    let name = format!("{}/{}", alg.name(), set_label(alg, filter));
    let [join, meet, prod, imp] = tables;
    let q = Algebra::from_raw(name, labels, join, meet, prod, imp, zero, one)
        .verified()
        .map_err(|e| Error::Inconsistency(format!("quotient failed re-verification: {e}")))?;
    Ok(QuotientResult { quotient: Arc::new(q), class_of, classes, representatives: reps, filter: filter.clone() })
}

/// `a/F ≤ b/F`, cross-checked against `a → b ∈ F`.
pub fn quotient_order(q: &QuotientResult, alg: &Algebra, a: ElementId, b: ElementId) -> Result<bool> {
    let via_table = q.leq(a, b);
    if via_table != q.filter.contains(alg.imp(a, b)) {
        return Err(Error::Inconsistency(format!(
            "quotient order disagrees with implication membership at ({}, {})",
            alg.label(a),
            alg.label(b)
        )));
    }
    Ok(via_table)
}

/// Filters of `A` above `F` paired with their images in `A/F`.
#[derive(Clone, Debug)]
pub struct FilterCorrespondence {
    pub quotient: QuotientResult,
    /// `(G, G/F)` in the order of the filters of `A`.
    pub pairs: Vec<(FilterSet, FilterSet)>,
}

impl FilterCorrespondence {
    pub fn forward(&self, g: &FilterSet) -> Option<&FilterSet> {
        self.pairs.iter().find(|(a, _)| a == g).map(|(_, b)| b)
    }

    pub fn backward(&self, h: &FilterSet) -> Option<&FilterSet> {
        self.pairs.iter().find(|(_, b)| b == h).map(|(a, _)| a)
    }
}

/// The inclusion-preserving bijection `G ↦ G/F` between filters of `A`
/// containing `F` and filters of `A/F`. Bijectivity, monotonicity in both
/// directions and the matching of maximal filters are all checked.
pub fn filter_correspondence(alg: &Algebra, filter: &FilterSet) -> Result<FilterCorrespondence> {
    let q = quotient(alg, filter)?;
    let above: Vec<FilterSet> = all_filters(alg).into_iter().filter(|g| filter.is_subset(g)).collect();
    let pairs: Vec<(FilterSet, FilterSet)> = above.iter().map(|g| (g.clone(), q.image(g))).collect();

    let mut images: Vec<FilterSet> = pairs.iter().map(|p| p.1.clone()).collect();
    images.sort();
    if images != all_filters(&q.quotient) {
        return Err(Error::Inconsistency("filter images do not match the quotient's filters".into()));
    }
    for (g, h) in &pairs {
        if &q.preimage(h) != g {
            return Err(Error::Inconsistency("preimage does not invert the image".into()));
        }
    }
    for (g1, h1) in &pairs {
        for (g2, h2) in &pairs {
            if g1.is_subset(g2) != h1.is_subset(h2) {
                return Err(Error::Inconsistency("correspondence does not preserve inclusion".into()));
            }
        }
    }
    let max_a = max_filters(alg);
    let max_q = max_filters(&q.quotient);
    for (g, h) in &pairs {
        if max_a.contains(g) != max_q.contains(h) {
            return Err(Error::Inconsistency("maximal filters do not correspond".into()));
        }
    }
    Ok(FilterCorrespondence { quotient: q, pairs })
}

/// `φ : A/F → A/G, a/F ↦ a/G` for `F ⊆ G`.
pub fn canonical_surjection(alg: &Algebra, f: &FilterSet, g: &FilterSet) -> Result<Morphism> {
    if !f.is_subset(g) {
        return Err(Error::NotIncluded(format!("{} is not contained in {}", set_label(alg, f), set_label(alg, g))));
    }
    let qf = quotient(alg, f)?;
    let qg = quotient(alg, g)?;
    let map = qf.representatives.iter().map(|&r| qg.class_of[r]).collect();
    let phi = Morphism::new(qf.quotient.clone(), qg.quotient.clone(), map)?;
    if !phi.surjective {
        return Err(Error::Inconsistency("canonical map is not surjective".into()));
    }
    if phi.injective != (f == g) {
        return Err(Error::Inconsistency("canonical map injective although F != G".into()));
    }
    Ok(phi)
}

/// The isomorphism `(A/F)/(G/F) → A/G` for `F ⊆ G`.
pub fn second_isomorphism_check(alg: &Algebra, f: &FilterSet, g: &FilterSet) -> Result<Morphism> {
    if !f.is_subset(g) {
        return Err(Error::NotIncluded(format!("{} is not contained in {}", set_label(alg, f), set_label(alg, g))));
    }
    let qf = quotient(alg, f)?;
    let qg = quotient(alg, g)?;
    let g_mod_f = qf.image(g);
    let qq = quotient(&qf.quotient, &g_mod_f)?;
    // representative in A/F, then its representative in A
    let map = qq.representatives.iter().map(|&x| qg.class_of[qf.representatives[x]]).collect();
    let iso = Morphism::new(qq.quotient.clone(), qg.quotient.clone(), map)?;
    if !iso.is_bijective() {
        return Err(Error::Inconsistency("second isomorphism map is not bijective".into()));
    }
    Ok(iso)
}
