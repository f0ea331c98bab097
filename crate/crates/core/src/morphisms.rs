//! Homomorphisms between finite residuated lattices.

use std::sync::Arc;

use crate::algebra::{Algebra, ElementId, Op};
use crate::boolean_center::boolean_center;
use crate::error::{Error, Result};
use crate::filters::{all_filters, is_filter, max_filters, spec, FilterSet};
use crate::quotients::{quotient, QuotientResult};
use crate::set::ElementSet;

/// Default element-count cap for [`find_isomorphism`].
pub const DEFAULT_ISO_CAP: usize = 24;

/// An element map between two algebras.
#[derive(Clone, Debug)]
pub struct Morphism {
    pub source: Arc<Algebra>,
    pub target: Arc<Algebra>,
    pub map: Vec<ElementId>,
    pub verified: bool,
    pub injective: bool,
    pub surjective: bool,
}

/// The first operation instance a map fails to preserve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismViolation {
    NotTotal { expected: usize, got: usize },
    OutOfRange { element: ElementId, image: ElementId },
    Constant { which: &'static str },
    Operation { op: Op, a: ElementId, b: ElementId },
}

impl MorphismViolation {
    pub fn describe(&self, source: &Algebra) -> String {
        match self {
            MorphismViolation::NotTotal { expected, got } => {
                format!("map has {got} entries, source has {expected} elements")
            }
            MorphismViolation::OutOfRange { element, image } => {
                format!("{} maps to out-of-range index {image}", source.label(*element))
            }
            MorphismViolation::Constant { which } => format!("{which} is not preserved"),
            MorphismViolation::Operation { op, a, b } => {
                format!("{} is not preserved at ({}, {})", op.symbol(), source.label(*a), source.label(*b))
            }
        }
    }
}

/// Exhaustive preservation check of the four operations and both constants.
pub fn check_map(source: &Algebra, target: &Algebra, map: &[ElementId]) -> Result<(), MorphismViolation> {
    if map.len() != source.n() {
        return Err(MorphismViolation::NotTotal { expected: source.n(), got: map.len() });
    }
    if let Some((element, &image)) = map.iter().enumerate().find(|(_, &y)| y >= target.n()) {
        return Err(MorphismViolation::OutOfRange { element, image });
    }
    if map[source.zero()] != target.zero() {
        return Err(MorphismViolation::Constant { which: "zero" });
    }
    if map[source.one()] != target.one() {
        return Err(MorphismViolation::Constant { which: "one" });
    }
    for a in source.elements() {
        for b in source.elements() {
            for op in Op::ALL {
                if map[op.apply(source, a, b)] != op.apply(target, map[a], map[b]) {
                    return Err(MorphismViolation::Operation { op, a, b });
                }
            }
        }
    }
    Ok(())
}

impl Morphism {
    /// A candidate map; nothing is checked beyond computing the flags.
    pub fn candidate(source: Arc<Algebra>, target: Arc<Algebra>, map: Vec<ElementId>) -> Self {
        let in_range = map.iter().all(|&y| y < target.n());
        let image = ElementSet::from_members(target.n(), map.iter().copied().filter(|&y| y < target.n()));
        let injective = in_range && image.len() == map.len();
        let surjective = image.is_full();
        Morphism { source, target, map, verified: false, injective, surjective }
    }

    /// A verified morphism, or the first violation.
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, map: Vec<ElementId>) -> Result<Self> {
        let mut f = Self::candidate(source, target, map);
        check_map(&f.source, &f.target, &f.map).map_err(|v| Error::NotAMorphism(v.describe(&f.source)))?;
        f.verified = true;
        Ok(f)
    }

    pub fn identity(alg: Arc<Algebra>) -> Self {
        let map = alg.elements().collect();
        Morphism::new(alg.clone(), alg, map).expect("identity is a morphism")
    }

    pub fn is_bijective(&self) -> bool {
        self.injective && self.surjective
    }

    pub fn apply(&self, a: ElementId) -> ElementId {
        self.map[a]
    }

    /// `other ∘ self`
    pub fn then(&self, other: &Morphism) -> Result<Morphism> {
        if self.target.as_ref() != other.source.as_ref() {
            return Err(Error::NotAMorphism("composition of non-matching maps".into()));
        }
        let map = self.map.iter().map(|&x| other.map[x]).collect();
        Morphism::new(self.source.clone(), other.target.clone(), map)
    }

    /// Inverse of a bijective morphism.
    pub fn inverse(&self) -> Result<Morphism> {
        if !self.is_bijective() {
            return Err(Error::NotAMorphism("only bijections can be inverted".into()));
        }
        let mut inv = vec![0; self.map.len()];
        for (a, &b) in self.map.iter().enumerate() {
            inv[b] = a;
        }
        Morphism::new(self.target.clone(), self.source.clone(), inv)
    }
}

/// Exhaustive check of a candidate.
pub fn is_morphism(f: &Morphism) -> Result<(), MorphismViolation> {
    check_map(&f.source, &f.target, &f.map)
}

/// `{a | f(a) ∈ F}`
pub fn preimage_filter(f: &Morphism, filter: &FilterSet) -> FilterSet {
    ElementSet::from_predicate(f.source.n(), |a| filter.contains(f.map[a]))
}

/// `Ker(f) = f⁻¹({1})`
pub fn kernel(f: &Morphism) -> FilterSet {
    let top = ElementSet::from_members(f.target.n(), [f.target.one()]);
    preimage_filter(f, &top)
}

/// `f(F)` for a surjective morphism.
pub fn image_filter(f: &Morphism, filter: &FilterSet) -> Result<FilterSet> {
    if !f.surjective {
        return Err(Error::NotSurjective);
    }
    let image = ElementSet::from_members(f.target.n(), filter.iter().map(|a| f.map[a]));
    if !is_filter(&f.target, &image) {
        return Err(Error::Inconsistency("image of a filter under a surjection is not a filter".into()));
    }
    Ok(image)
}

/// Cheap isomorphism invariants: size, filter counts, Boolean center size
/// and the sorted multiset of element orders.
fn invariants(alg: &Algebra) -> (usize, usize, usize, usize, usize, Vec<Option<usize>>) {
    let mut ords: Vec<Option<usize>> = alg.elements().map(|a| alg.ord(a)).collect();
    ords.sort();
    (alg.n(), all_filters(alg).len(), max_filters(alg).len(), spec(alg).len(), boolean_center(alg).members.len(), ords)
}

/// Per-element data preserved by any isomorphism.
fn signature(alg: &Algebra, a: ElementId) -> (Option<usize>, Option<usize>, usize, usize, bool) {
    let below = alg.elements().filter(|&x| alg.leq(x, a)).count();
    let above = alg.elements().filter(|&x| alg.leq(a, x)).count();
    (alg.ord(a), alg.ord(alg.neg(a)), below, above, alg.prod(a, a) == a)
}

/// The lexicographically least isomorphism `a → b`, if any.
pub fn find_isomorphism(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Result<Option<Morphism>> {
    find_isomorphism_capped(a, b, DEFAULT_ISO_CAP)
}

pub fn find_isomorphism_capped(a: &Arc<Algebra>, b: &Arc<Algebra>, cap: usize) -> Result<Option<Morphism>> {
    if a.n() != b.n() {
        return Ok(None);
    }
    if a.n() > cap {
        return Err(Error::SizeCap { size: a.n(), cap });
    }
    if invariants(a) != invariants(b) {
        return Ok(None);
    }
    let n = a.n();
    let sig_b: Vec<_> = b.elements().map(|y| signature(b, y)).collect();
    let candidates: Vec<Vec<ElementId>> = a
        .elements()
        .map(|x| {
            let s = signature(a, x);
            if x == a.zero() {
                vec![b.zero()]
            } else if x == a.one() {
                vec![b.one()]
            } else {
                b.elements().filter(|&y| sig_b[y] == s).collect()
            }
        })
        .collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if search(a, b, &candidates, 0, &mut map, &mut used) {
        return Morphism::new(a.clone(), b.clone(), map).map(Some);
    }
    Ok(None)
}

fn consistent(a: &Algebra, b: &Algebra, map: &[ElementId], x: ElementId) -> bool {
    let assigned = |y: ElementId| map[y] != usize::MAX;
    for y in a.elements().filter(|&y| assigned(y)) {
        for op in Op::ALL {
            for (l, r) in [(x, y), (y, x)] {
                let v = op.apply(a, l, r);
                if assigned(v) && map[v] != op.apply(b, map[l], map[r]) {
                    return false;
                }
            }
        }
    }
    true
}

fn search(
    a: &Algebra,
    b: &Algebra,
    candidates: &[Vec<ElementId>],
    x: ElementId,
    map: &mut Vec<ElementId>,
    used: &mut Vec<bool>,
) -> bool {
    if x == a.n() {
        return check_map(a, b, map).is_ok();
    }
    for &y in &candidates[x] {
        if used[y] {
            continue;
        }
        map[x] = y;
        used[y] = true;
        // every assigned pair whose result is now assigned must agree
        let ok = consistent(a, b, map, x)
            && a.elements().filter(|&u| map[u] != usize::MAX).all(|u| consistent(a, b, map, u));
        if ok && search(a, b, candidates, x + 1, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}

/// `f̄ : A/Ds(A) → B/Ds(B)` together with the two dense quotients.
#[derive(Clone, Debug)]
pub struct DenseFunctorImage {
    pub source_quotient: QuotientResult,
    pub target_quotient: QuotientResult,
    pub map: Morphism,
}

/// The induced map `a/Ds(A) ↦ f(a)/Ds(B)`, checked to be well defined.
pub fn dense_functor_map(f: &Morphism) -> Result<DenseFunctorImage> {
    let sq = quotient(&f.source, &crate::filters::dense_filter(&f.source))?;
    let tq = quotient(&f.target, &crate::filters::dense_filter(&f.target))?;
    let mut map = vec![usize::MAX; sq.quotient.n()];
    for a in f.source.elements() {
        let (x, y) = (sq.class_of[a], tq.class_of[f.map[a]]);
        if map[x] != usize::MAX && map[x] != y {
            return Err(Error::Inconsistency(format!(
                "induced dense-quotient map not well defined at {}",
                f.source.label(a)
            )));
        }
        map[x] = y;
    }
    let induced = Morphism::new(sq.quotient.clone(), tq.quotient.clone(), map)?;
    Ok(DenseFunctorImage { source_quotient: sq, target_quotient: tq, map: induced })
}

/// Restriction of a morphism to the Boolean centers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanMap {
    /// `(e, f(e))` for each `e ∈ B(source)` in index order.
    pub pairs: Vec<(ElementId, ElementId)>,
    pub injective: bool,
    /// Onto `B(target)`.
    pub surjective: bool,
}

pub fn boolean_restriction(f: &Morphism) -> Result<BooleanMap> {
    let bs = boolean_center(&f.source);
    let bt = boolean_center(&f.target);
    let pairs: Vec<(ElementId, ElementId)> = bs.members.iter().map(|e| (e, f.map[e])).collect();
    if let Some(&(e, _)) = pairs.iter().find(|(_, y)| !bt.members.contains(*y)) {
        return Err(Error::Inconsistency(format!(
            "image of Boolean element {} is not complemented",
            f.source.label(e)
        )));
    }
    let image = ElementSet::from_members(f.target.n(), pairs.iter().map(|p| p.1));
    Ok(BooleanMap { injective: image.len() == pairs.len(), surjective: image == bt.members, pairs })
}

/// The quotient map `A → A/F` as a morphism.
pub fn class_map(alg: &Arc<Algebra>, q: &QuotientResult) -> Result<Morphism> {
    Morphism::new(alg.clone(), q.quotient.clone(), q.class_of.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filters::{dense_filter, radical};
    use crate::fixtures::fixture;
    use crate::products::direct_product;

    fn arc(name: &str) -> Arc<Algebra> {
        Arc::new(fixture(name).unwrap())
    }

    #[test]
    fn class_maps_are_morphisms_with_kernel_f() {
        let g = arc("g6");
        for f in all_filters(&g) {
            let q = quotient(&g, &f).unwrap();
            let p = class_map(&g, &q).unwrap();
            assert!(is_morphism(&p).is_ok());
            assert!(p.surjective);
            assert_eq!(kernel(&p), f);
        }
    }

    #[test]
    fn identity_kernel() {
        let g = arc("g6");
        let id = Morphism::identity(g.clone());
        assert_eq!(kernel(&id).to_vec(), vec![g.one()]);
        assert!(id.is_bijective());
    }

    #[test]
    fn g6_to_chain2_collapse_is_not_a_morphism() {
        let g = arc("g6");
        let c2 = arc("chain2");
        let rad = radical(&g);
        let map: Vec<usize> = g.elements().map(|x| usize::from(rad.contains(x))).collect();
        let f = Morphism::candidate(g.clone(), c2, map);
        assert!(is_morphism(&f).is_err());
        // b ∨ c = a lands in 1 while 0 ∨ 0 = 0
        let (b, c) = (g.index_of("b").unwrap(), g.index_of("c").unwrap());
        assert_eq!((f.map[b], f.map[c]), (0, 0));
        assert_eq!(f.map[g.join(b, c)], 1);
    }

    #[test]
    fn projections_preimages_and_images() {
        let p = direct_product(&[fixture("g6").unwrap(), fixture("chain2").unwrap()]).unwrap();
        let pr0 = &p.projections[0];
        assert!(is_morphism(pr0).is_ok());
        for m in max_filters(&p.factors[0]) {
            let pre = preimage_filter(pr0, &m);
            assert!(crate::filters::is_maximal(&p.algebra, &pre));
            assert_eq!(image_filter(pr0, &pre).unwrap(), m);
        }
        let g = arc("g6");
        let emb = Morphism::new(arc("chain2"), g.clone(), vec![g.zero(), g.one()]).unwrap();
        assert!(matches!(image_filter(&emb, &ElementSet::full(2)), Err(Error::NotSurjective)));
    }

    #[test]
    fn isomorphism_search() {
        let g = arc("g6");
        let id = find_isomorphism(&g, &g).unwrap().unwrap();
        assert_eq!(id.map, (0..6).collect::<Vec<_>>());
        let qd = Arc::new(quotient(&g, &dense_filter(&g)).unwrap().quotient.as_ref().clone());
        let qr = Arc::new(quotient(&g, &radical(&g)).unwrap().quotient.as_ref().clone());
        assert!(find_isomorphism(&qd, &qr).unwrap().is_some());
        let leq: Vec<Vec<bool>> = (0..6).map(|i| (0..6).map(|j| i <= j).collect()).collect();
        let labels: Vec<String> = (0..6).map(|i| i.to_string()).collect();
        let prod = (0..6).map(|i| (0..6).map(|j| usize::min(i, j)).collect()).collect();
        let godel6 = Arc::new(Algebra::from_order("godel6", labels, &leq, prod, None, 0, 5).unwrap());
        assert!(find_isomorphism(&g, &godel6).unwrap().is_none());
        let b4 = arc("boolean4");
        let swapped = find_isomorphism(&b4, &b4).unwrap().unwrap();
        assert_eq!(swapped.map, vec![0, 1, 2, 3]);
    }

    #[test]
    fn dense_functor() {
        let g = arc("g6");
        let img = dense_functor_map(&Morphism::identity(g.clone())).unwrap();
        assert_eq!(img.map.map, (0..img.source_quotient.quotient.n()).collect::<Vec<_>>());

        let emb = Morphism::new(arc("chain2"), g.clone(), vec![g.zero(), g.one()]).unwrap();
        let img = dense_functor_map(&emb).unwrap();
        assert!(img.map.injective);

        let p = direct_product(&[fixture("godel3").unwrap(), fixture("lukasiewicz3").unwrap()]).unwrap();
        let pr = &p.projections[0];
        let img = dense_functor_map(pr).unwrap();
        assert!(img.map.surjective);
        for a in p.algebra.elements() {
            assert_eq!(img.target_quotient.class_of[pr.map[a]], img.map.map[img.source_quotient.class_of[a]]);
        }
    }

    #[test]
    fn boolean_restrictions() {
        let g = arc("g6");
        let q = quotient(&g, &radical(&g)).unwrap();
        let r = class_map(&g, &q).unwrap();
        let br = boolean_restriction(&r).unwrap();
        assert!(br.injective);
        assert!(!br.surjective);
        let id = boolean_restriction(&Morphism::identity(g.clone())).unwrap();
        assert!(id.pairs.iter().all(|(a, b)| a == b));
        assert!(id.surjective && id.injective);
    }
}
