//! Aggregate structure report over one algebra.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::boolean_center::has_lifting;
use crate::decomposition::{classify, Classification};
use crate::error::Result;
use crate::filters::{all_filters, dense_filter, max_filters, radical, spec, FilterSet};
use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FilterEntry {
    pub members: Vec<String>,
    pub proper: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftEntry {
    /// Member of `B(A/Rad(A))`, by its quotient label.
    pub class: String,
    pub lift: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftingSummary {
    pub holds: bool,
    pub witness: Option<String>,
    pub table: Vec<LiftEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub name: String,
    pub size: usize,
    pub elements: Vec<String>,
    pub filters: Vec<FilterEntry>,
    pub spec: Vec<Vec<String>>,
    pub max: Vec<Vec<String>>,
    pub radical: Vec<String>,
    pub dense: Vec<String>,
    pub boolean_center: Vec<String>,
    pub radical_quotient: Vec<String>,
    pub radical_quotient_center: Vec<String>,
    pub lifting: LiftingSummary,
    pub classification: Classification,
}

fn names(alg: &Algebra, s: &ElementSet) -> Vec<String> {
    s.iter().map(|i| alg.label(i).to_string()).collect()
}

pub fn structure_report(alg: &Algebra) -> Result<StructureReport> {
    let lifting = has_lifting(alg)?;
    let q = &lifting.radical_quotient.quotient;
    let filters = all_filters(alg)
        .iter()
        .map(|f: &FilterSet| FilterEntry { members: names(alg, f), proper: !f.is_full() })
        .collect();
    let table = lifting
        .table
        .iter()
        .map(|&(f, l)| LiftEntry { class: format!("{}/Rad", q.label(f)), lift: l.map(|e| alg.label(e).to_string()) })
        .collect();
    Ok(StructureReport {
        name: alg.name().to_string(),
        size: alg.n(),
        elements: alg.labels().to_vec(),
        filters,
        spec: spec(alg).iter().map(|f| names(alg, f)).collect(),
        max: max_filters(alg).iter().map(|f| names(alg, f)).collect(),
        radical: names(alg, &radical(alg)),
        dense: names(alg, &dense_filter(alg)),
        boolean_center: names(alg, &lifting.center.members),
        radical_quotient: lifting
            .radical_quotient
            .classes
            .iter()
            .map(|c| format!("{{{}}}", names(alg, c).join(",")))
            .collect(),
        radical_quotient_center: names(q, &lifting.quotient_center.members),
        lifting: LiftingSummary { holds: lifting.holds(), witness: lifting.witness_label(), table },
        classification: classify(alg)?,
    })
}
