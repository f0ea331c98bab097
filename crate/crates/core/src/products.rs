//! Finite direct products, their prime and maximal filters, and CRT solving.

use std::sync::Arc;

use crate::algebra::{Algebra, ElementId};
use crate::error::{Error, Result};
use crate::filters::{filter_join, filter_violation, is_prime, max_filters, spec, FilterSet};
use crate::morphisms::{preimage_filter, Morphism};
use crate::set::ElementSet;

/// Default cap on the number of elements of a product.
pub const DEFAULT_SIZE_CAP: usize = 4096;

/// `A₁ × … × Aₖ` with projections and the elements `δᵢ`.
///
/// Tuples are encoded in mixed radix with the first factor most
/// significant.
#[derive(Clone, Debug)]
pub struct ProductAlgebra {
    pub algebra: Arc<Algebra>,
    pub factors: Vec<Arc<Algebra>>,
    pub projections: Vec<Morphism>,
    /// `δᵢ`: `0` in coordinate `i`, `1` elsewhere.
    pub deltas: Vec<ElementId>,
}

impl ProductAlgebra {
    pub fn encode(&self, coords: &[ElementId]) -> ElementId {
        encode(&self.factors, coords)
    }

    pub fn decode(&self, x: ElementId) -> Vec<ElementId> {
        decode(&self.factors, x)
    }
}

fn encode(factors: &[Arc<Algebra>], coords: &[ElementId]) -> ElementId {
    factors.iter().zip(coords).fold(0, |acc, (f, &c)| acc * f.n() + c)
}

fn decode(factors: &[Arc<Algebra>], mut x: ElementId) -> Vec<ElementId> {
    let mut out = vec![0; factors.len()];
    for (i, f) in factors.iter().enumerate().rev() {
        out[i] = x % f.n();
        x /= f.n();
    }
    out
}

pub fn direct_product(factors: &[Algebra]) -> Result<ProductAlgebra> {
    direct_product_with_cap(factors, DEFAULT_SIZE_CAP)
}

pub fn direct_product_with_cap(factors: &[Algebra], cap: usize) -> Result<ProductAlgebra> {
    let arcs: Vec<Arc<Algebra>> = factors.iter().cloned().map(Arc::new).collect();
    product_of_arcs(arcs, cap)
}

pub fn product_of_arcs(factors: Vec<Arc<Algebra>>, cap: usize) -> Result<ProductAlgebra> {
    if factors.is_empty() {
        return Err(Error::Inconsistency("product of an empty family".into()));
    }
    let size = factors.iter().try_fold(1usize, |acc, f| acc.checked_mul(f.n())).unwrap_or(usize::MAX);
    if size > cap {
        return Err(Error::SizeCap { size, cap });
    }
    let tuples: Vec<Vec<ElementId>> = (0..size).map(|x| decode(&factors, x)).collect();
    let mut tables =
        [vec![0u32; size * size], vec![0u32; size * size], vec![0u32; size * size], vec![0u32; size * size]];
    let mut buf = [vec![0; factors.len()], vec![0; factors.len()], vec![0; factors.len()], vec![0; factors.len()]];
    for (x, tx) in tuples.iter().enumerate() {
        for (y, ty) in tuples.iter().enumerate() {
            for (i, f) in factors.iter().enumerate() {
                let (a, b) = (tx[i], ty[i]);
                buf[0][i] = f.join(a, b);
                buf[1][i] = f.meet(a, b);
                buf[2][i] = f.prod(a, b);
                buf[3][i] = f.imp(a, b);
            }
            for (t, coords) in tables.iter_mut().zip(&buf) {
                t[x * size + y] = encode(&factors, coords) as u32;
            }
        }
    }
    let labels = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t.iter().zip(&factors).map(|(&c, f)| f.label(c)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let zeros: Vec<ElementId> = factors.iter().map(|f| f.zero()).collect();
    let ones: Vec<ElementId> = factors.iter().map(|f| f.one()).collect();
    let name = factors.iter().map(|f| f.name()).collect::<Vec<_>>().join("x");
    let [join, meet, prod, imp] = tables;
    let algebra = Arc::new(Algebra::from_raw(
        name,
        labels,
        join,
        meet,
        prod,
        imp,
        encode(&factors, &zeros),
        encode(&factors, &ones),
    ));
    let projections = (0..factors.len())
        .map(|i| {
            let map = tuples.iter().map(|t| t[i]).collect();
            Morphism::new(algebra.clone(), factors[i].clone(), map)
        })
        .collect::<Result<Vec<_>>>()?;
    let deltas = (0..factors.len())
        .map(|i| {
            let mut c = ones.clone();
            c[i] = zeros[i];
            encode(&factors, &c)
        })
        .collect();
    Ok(ProductAlgebra { algebra, factors, projections, deltas })
}

pub fn delta_elements(p: &ProductAlgebra) -> Vec<ElementId> {
    p.deltas.clone()
}

/// `Ov(Q) = prᵢ⁻¹(Q)` for a prime filter `Q` of factor `i`.
pub fn over_filter(p: &ProductAlgebra, i: usize, q: &FilterSet) -> Result<FilterSet> {
    let factor = p.factors.get(i).ok_or(Error::IndexOutOfRange { index: i, n: p.factors.len() })?;
    if !is_prime(factor, q) {
        return Err(Error::NotPrime);
    }
    let ov = preimage_filter(&p.projections[i], q);
    if !is_prime(&p.algebra, &ov) {
        return Err(Error::Inconsistency("over-filter of a prime filter is not prime".into()));
    }
    Ok(ov)
}

/// Spec and Max of a product computed directly and from the over-filters.
#[derive(Clone, Debug)]
pub struct ProductFilterReport {
    pub spec_direct: Vec<FilterSet>,
    pub max_direct: Vec<FilterSet>,
    pub spec_over: Vec<FilterSet>,
    pub max_over: Vec<FilterSet>,
    pub factor_spec_counts: Vec<usize>,
    pub factor_max_counts: Vec<usize>,
}

pub fn spec_max_of_product(p: &ProductAlgebra) -> Result<ProductFilterReport> {
    let spec_direct = spec(&p.algebra);
    let max_direct = max_filters(&p.algebra);
    let mut spec_over = Vec::new();
    let mut max_over = Vec::new();
    let mut factor_spec_counts = Vec::new();
    let mut factor_max_counts = Vec::new();
    for (i, f) in p.factors.iter().enumerate() {
        let sp = spec(f);
        let mx = max_filters(f);
        factor_spec_counts.push(sp.len());
        factor_max_counts.push(mx.len());
        for q in &sp {
            spec_over.push(over_filter(p, i, q)?);
        }
        for q in &mx {
            max_over.push(over_filter(p, i, q)?);
        }
    }
    spec_over.sort();
    max_over.sort();
    if spec_over != spec_direct || max_over != max_direct {
        return Err(Error::Inconsistency("prime/maximal filters of the product differ from the over-filters".into()));
    }
    if spec_direct.len() != factor_spec_counts.iter().sum::<usize>()
        || max_direct.len() != factor_max_counts.iter().sum::<usize>()
    {
        return Err(Error::Inconsistency("filter counts of the product are not additive".into()));
    }
    Ok(ProductFilterReport { spec_direct, max_direct, spec_over, max_over, factor_spec_counts, factor_max_counts })
}

/// Least `x` with `x ≡ aᵢ (mod Fᵢ)` for all `i`, given pairwise
/// co-maximal filters.
pub fn crt_solve(alg: &Algebra, system: &[(ElementId, FilterSet)]) -> Result<ElementId> {
    for (a, f) in system {
        alg.check_index(*a)?;
        if let Some(why) = filter_violation(alg, f) {
            return Err(Error::NotAFilter(why));
        }
    }
    for i in 0..system.len() {
        for j in i + 1..system.len() {
            if !filter_join(alg, &system[i].1, &system[j].1).is_full() {
                return Err(Error::NotComaximal { i, j });
            }
        }
    }
    alg.elements()
        .find(|&x| system.iter().all(|(a, f)| f.contains(alg.biimpl(x, *a))))
        .ok_or_else(|| Error::Inconsistency("co-maximal system without a solution".into()))
}

/// Elements of `A` congruent to `a` modulo `F`.
pub fn congruence_class(alg: &Algebra, a: ElementId, f: &FilterSet) -> ElementSet {
    ElementSet::from_predicate(alg.n(), |x| f.contains(alg.biimpl(x, a)))
}
