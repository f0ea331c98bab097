//! Classification flags and the structure-theorem pipeline
//! `A ≅ ∏ ⟨eᵢ⟩` for algebras whose Boolean center lifts.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Algebra, ElementId};
use crate::boolean_center::{has_lifting, relative_algebra, RelativeAlgebra};
use crate::error::{Error, Result};
use crate::filters::{all_filters, dense_filter, max_filters, radical, spec};
use crate::morphisms::Morphism;
use crate::products::{product_of_arcs, ProductAlgebra, DEFAULT_SIZE_CAP};
use crate::quotients::{quotient, QuotientResult};

/// A diagnostic that is not a failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Note {
    pub code: &'static str,
    pub message: String,
}

pub const NOTE_RADICAL_DENSE_WITHOUT_LIFTING: &str = "radical-dense-without-lifting";
pub const NOTE_PERFECTNESS_FORMS_DIFFER: &str = "perfectness-forms-differ";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub local: bool,
    pub semilocal: bool,
    /// Local, and `ord(a) < ∞` exactly when `ord(¬a) = ∞`.
    pub perfect: bool,
    /// Local, and `ord(a) < ∞` exactly when `ord(¬a) < ∞`. Never holds on
    /// a nontrivial algebra (take `a = 1`); reported for comparison.
    pub perfect_literal: bool,
    pub radical_dense: bool,
    /// Every finite algebra has finitely many filters and is maximal.
    pub maximal: bool,
    pub has_lifting: bool,
    pub max_count: usize,
    pub spec_count: usize,
    pub filter_count: usize,
    pub notes: Vec<Note>,
}

fn perfect_forms(alg: &Algebra) -> (bool, bool) {
    let corrected = alg.elements().all(|a| alg.ord(a).is_some() == alg.ord(alg.neg(a)).is_none());
    let literal = alg.elements().all(|a| alg.ord(a).is_some() == alg.ord(alg.neg(a)).is_some());
    (corrected, literal)
}

pub fn classify(alg: &Algebra) -> Result<Classification> {
    let max_count = max_filters(alg).len();
    let local = max_count == 1;
    let (corrected, literal) = perfect_forms(alg);
    let (perfect, perfect_literal) = (local && corrected, local && literal);
    let radical_dense = radical(alg) == dense_filter(alg);
    let has_lifting = has_lifting(alg)?.holds();
    let mut notes = Vec::new();
    if radical_dense && !has_lifting {
        notes.push(Note {
            code: NOTE_RADICAL_DENSE_WITHOUT_LIFTING,
            message: "Rad(A) = Ds(A) yet B(A) -> B(A/Rad(A)) is not surjective: radical-density \
                      does not imply lifting Boolean center"
                .into(),
        });
    }
    if local && perfect != perfect_literal {
        notes.push(Note {
            code: NOTE_PERFECTNESS_FORMS_DIFFER,
            message: format!(
                "perfect (ord(a) finite iff ord(¬a) infinite) = {perfect}, \
                 literal form (ord(a) finite iff ord(¬a) finite) = {perfect_literal}"
            ),
        });
    }
    Ok(Classification {
        local,
        semilocal: true,
        perfect,
        perfect_literal,
        radical_dense,
        maximal: true,
        has_lifting,
        max_count,
        spec_count: spec(alg).len(),
        filter_count: all_filters(alg).len(),
        notes,
    })
}

/// `A/Rad(A) ≅ ∏ A/Mᵢ` over the maximal filters.
#[derive(Clone, Debug)]
pub struct SemilocalIso {
    pub radical_quotient: QuotientResult,
    pub maximal_quotients: Vec<QuotientResult>,
    pub product: ProductAlgebra,
    pub iso: Morphism,
}

pub fn semilocal_decompose(alg: &Algebra) -> Result<SemilocalIso> {
    if alg.is_trivial() {
        return Err(Error::Trivial);
    }
    let rq = quotient(alg, &radical(alg))?;
    let mq = max_filters(alg).iter().map(|m| quotient(alg, m)).collect::<Result<Vec<_>>>()?;
    let factors = mq.iter().map(|q| q.quotient.clone()).collect();
    let product = product_of_arcs(factors, DEFAULT_SIZE_CAP.max(alg.n()))?;
    let map = rq
        .representatives
        .iter()
        .map(|&r| {
            let coords: Vec<ElementId> = mq.iter().map(|q| q.class_of[r]).collect();
            product.encode(&coords)
        })
        .collect();
    let iso = Morphism::new(rq.quotient.clone(), product.algebra.clone(), map)
        .map_err(|e| Error::Inconsistency(format!("A/Rad -> prod A/M: {e}")))?;
    if !iso.is_bijective() {
        return Err(Error::Inconsistency("A/Rad -> prod A/M is not bijective".into()));
    }
    Ok(SemilocalIso { radical_quotient: rq, maximal_quotients: mq, product, iso })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FactorFlags {
    pub local: bool,
    pub nontrivial: bool,
    pub size: usize,
}

/// The structure theorem witness `A ≅ ∏ ⟨eᵢ⟩`.
#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub idempotents: Vec<ElementId>,
    pub factors: Vec<RelativeAlgebra>,
    pub product: ProductAlgebra,
    /// `a ↦ (a ∨ eᵢ)ᵢ`
    pub iso: Morphism,
    pub factor_flags: Vec<FactorFlags>,
    pub classification: Classification,
}

/// Decomposes a nontrivial algebra with lifting Boolean center into local
/// factors. Refuses algebras without lifting.
pub fn decompose(alg: &Algebra) -> Result<DecompositionReport> {
    if alg.is_trivial() {
        return Err(Error::Trivial);
    }
    let lifting = has_lifting(alg)?;
    if let Some(witness) = lifting.witness_label() {
        return Err(Error::NoLifting { witness });
    }
    let semi = semilocal_decompose(alg)?;
    let k = semi.maximal_quotients.len();
    let inverse = semi.iso.inverse()?;

    let mut idempotents = Vec::with_capacity(k);
    for i in 0..k {
        let coords: Vec<ElementId> = semi
            .maximal_quotients
            .iter()
            .enumerate()
            .map(|(j, q)| if j == i { q.quotient.zero() } else { q.quotient.one() })
            .collect();
        let f = inverse.map[semi.product.encode(&coords)];
        let e = lifting
            .table
            .iter()
            .find(|(x, _)| *x == f)
            .and_then(|(_, l)| *l)
            .ok_or_else(|| Error::Inconsistency("idempotent of A/Rad without lift".into()))?;
        idempotents.push(e);
    }

    if alg.meet_all(idempotents.iter().copied()) != alg.zero() {
        return Err(Error::Inconsistency("meet of the idempotents is not 0".into()));
    }
    for i in 0..k {
        for j in 0..k {
            if i != j && alg.join(idempotents[i], idempotents[j]) != alg.one() {
                return Err(Error::Inconsistency(format!(
                    "e{} ∨ e{} = {} ≠ 1",
                    i + 1,
                    j + 1,
                    alg.label(alg.join(idempotents[i], idempotents[j]))
                )));
            }
        }
    }

    let factors = idempotents.iter().map(|&e| relative_algebra(alg, e)).collect::<Result<Vec<_>>>()?;
    let product =
        product_of_arcs(factors.iter().map(|f| Arc::new(f.algebra.clone())).collect(), DEFAULT_SIZE_CAP.max(alg.n()))?;
    let source = Arc::new(alg.clone());
    let map = alg
        .elements()
        .map(|a| {
            let coords: Vec<ElementId> =
                factors.iter().map(|f| f.local(alg.join(a, f.e)).expect("a ∨ e lies above e")).collect();
            product.encode(&coords)
        })
        .collect();
    let iso = Morphism::new(source, product.algebra.clone(), map)
        .map_err(|e| Error::Inconsistency(format!("A -> prod <e_i>: {e}")))?;
    if !iso.is_bijective() {
        return Err(Error::Inconsistency("A -> prod <e_i> is not bijective".into()));
    }
    // inverse (xᵢ) ↦ ∧ xᵢ
    for x in product.algebra.elements() {
        let coords = product.decode(x);
        let back = alg.meet_all(coords.iter().zip(&factors).map(|(&c, f)| f.embedding[c]));
        if iso.map[back] != x {
            return Err(Error::Inconsistency("meet of coordinates does not invert the iso".into()));
        }
    }

    let factor_flags: Vec<FactorFlags> = factors
        .iter()
        .map(|f| FactorFlags {
            local: max_filters(&f.algebra).len() == 1,
            nontrivial: f.algebra.n() > 1,
            size: f.algebra.n(),
        })
        .collect();
    if factor_flags.iter().any(|f| !f.local || !f.nontrivial) {
        return Err(Error::Inconsistency("a factor is trivial or not local".into()));
    }
    let factor_max: usize = factors.iter().map(|f| max_filters(&f.algebra).len()).sum();
    if factor_max != k {
        return Err(Error::Inconsistency("maximal filter count is not additive over factors".into()));
    }
    Ok(DecompositionReport { idempotents, factors, product, iso, factor_flags, classification: classify(alg)? })
}
