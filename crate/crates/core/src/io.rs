//! The JSON algebra file format.
//!
//! ```json
//! {
//!   "name": "chain2",
//!   "elements": ["0", "1"],
//!   "zero": "0",
//!   "one": "1",
//!   "covers": [["0", "1"]],
//!   "prod": [["0", "0"], ["0", "1"]],
//!   "impl": [["1", "1"], ["0", "1"]]
//! }
//! ```
//!
//! Lattice data is given either as `join`/`meet` tables or as a `covers`
//! list of `[lower, upper]` pairs; when both are present they must agree.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::algebra::{lattice_from_order, order_from_covers, Algebra, Op};
use crate::decomposition::classify;
use crate::enumeration::Catalog;
use crate::error::{Result, StructureError};

type LabelTable = Vec<Vec<String>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub elements: Vec<String>,
    pub zero: String,
    pub one: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub join: Option<LabelTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meet: Option<LabelTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<[String; 2]>>,
    pub prod: LabelTable,
    #[serde(rename = "impl")]
    pub imp: LabelTable,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Map<String, Value>>,
}

impl AlgebraFile {
    pub fn from_algebra(alg: &Algebra) -> Self {
        let t = |op: Op| -> LabelTable {
            alg.table(op).into_iter().map(|r| r.into_iter().map(|i| alg.label(i).to_string()).collect()).collect()
        };
        AlgebraFile {
            name: alg.name().to_string(),
            elements: alg.labels().to_vec(),
            zero: alg.label(alg.zero()).to_string(),
            one: alg.label(alg.one()).to_string(),
            join: Some(t(Op::Join)),
            meet: Some(t(Op::Meet)),
            covers: None,
            prod: t(Op::Prod),
            imp: t(Op::Impl),
            metadata: None,
        }
    }

    pub fn with_metadata(mut self, metadata: Map<String, Value>) -> Self {
        self.metadata = Some(metadata);
        self
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&fs::read_to_string(path)?)
    }

    /// Resolve labels into an [`Algebra`]. Shape only; axioms are not checked.
    pub fn to_algebra(&self) -> Result<Algebra, StructureError> {
        let labels = &self.elements;
        let n = labels.len();
        let index = |field: &str, l: &str| -> Result<usize, StructureError> {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| StructureError::UnknownLabel { field: field.to_string(), label: l.to_string() })
        };
        let table = |field: &'static str, t: &LabelTable| -> Result<Vec<Vec<usize>>, StructureError> {
            if t.len() != n || t.iter().any(|r| r.len() != n) {
                return Err(StructureError::BadShape { table: field, expected: n });
            }
            t.iter().map(|r| r.iter().map(|l| index(field, l)).collect()).collect()
        };
        let zero = index("zero", &self.zero)?;
        let one = index("one", &self.one)?;
        let prod = table("prod", &self.prod)?;
        let imp = table("impl", &self.imp)?;

        let from_covers = match &self.covers {
            Some(cs) => {
                let edges = cs
                    .iter()
                    .map(|[lo, hi]| Ok((index("covers", lo)?, index("covers", hi)?)))
                    .collect::<Result<Vec<_>, StructureError>>()?;
                let leq = order_from_covers(n, &edges);
                Some(lattice_from_order(labels, &leq)?)
            }
            None => None,
        };
        let explicit = match (&self.join, &self.meet) {
            (Some(j), Some(m)) => Some((table("join", j)?, table("meet", m)?)),
            (None, None) => None,
            _ => return Err(StructureError::InconsistentLattice("join and meet must be given together".into())),
        };
        let (join, meet) = match (explicit, from_covers) {
            (Some(e), Some(d)) => {
                if e != d {
                    return Err(StructureError::InconsistentLattice(
                        "join/meet tables disagree with the covers list".into(),
                    ));
                }
                e
            }
            (Some(e), None) => e,
            (None, Some(d)) => d,
            (None, None) => return Err(StructureError::MissingLattice),
        };
        Algebra::from_tables(self.name.clone(), labels.clone(), join, meet, prod, imp, zero, one)
    }

    /// Deterministic rendering: one table row per line, trailing newline.
    pub fn to_json_string(&self) -> String {
        let s = |v: &str| serde_json::to_string(v).expect("string");
        let row = |r: &Vec<String>| serde_json::to_string(r).expect("row");
        let mut out = String::from("{\n");
        let mut fields: Vec<String> = vec![
            format!("  \"name\": {}", s(&self.name)),
            format!("  \"elements\": {}", row(&self.elements)),
            format!("  \"zero\": {}", s(&self.zero)),
            format!("  \"one\": {}", s(&self.one)),
        ];
        let table = |key: &str, t: &LabelTable| {
            let rows: Vec<String> = t.iter().map(|r| format!("    {}", row(r))).collect();
            format!("  \"{key}\": [\n{}\n  ]", rows.join(",\n"))
        };
        if let Some(j) = &self.join {
            fields.push(table("join", j));
        }
        if let Some(m) = &self.meet {
            fields.push(table("meet", m));
        }
        if let Some(c) = &self.covers {
            let rows: Vec<String> =
                c.iter().map(|e| format!("    {}", serde_json::to_string(e).expect("edge"))).collect();
            fields.push(format!("  \"covers\": [\n{}\n  ]", rows.join(",\n")));
        }
        fields.push(table("prod", &self.prod));
        fields.push(table("impl", &self.imp));
        if let Some(m) = &self.metadata {
            let body = serde_json::to_string_pretty(m).expect("metadata");
            let indented = body.replace('\n', "\n  ");
            fields.push(format!("  \"metadata\": {indented}"));
        }
        out.push_str(&fields.join(",\n"));
        out.push_str("\n}\n");
        out
    }
}

pub fn load_algebra(path: impl AsRef<Path>) -> Result<Algebra> {
    Ok(AlgebraFile::load(path)?.to_algebra()?)
}

pub fn algebra_to_json(alg: &Algebra) -> String {
    AlgebraFile::from_algebra(alg).to_json_string()
}

/// Writes one file per catalog entry plus `index.json`.
pub fn write_catalog(catalog: &Catalog, dir: impl AsRef<Path>) -> Result<()> {
    let dir = dir.as_ref();
    fs::create_dir_all(dir)?;
    let mut entries = Vec::new();
    for alg in &catalog.entries {
        let file = format!("{}.json", alg.name());
        fs::write(dir.join(&file), algebra_to_json(alg))?;
        let c = classify(alg)?;
        entries.push(serde_json::json!({
            "name": alg.name(),
            "file": file,
            "local": c.local,
            "perfect": c.perfect,
            "radical_dense": c.radical_dense,
            "has_lifting": c.has_lifting,
            "max_count": c.max_count,
            "spec_count": c.spec_count,
            "filter_count": c.filter_count,
        }));
    }
    let index = serde_json::json!({
        "order": catalog.order,
        "counts": catalog.counts,
        "entries": entries,
    });
    let mut text = serde_json::to_string_pretty(&index)?;
    writeln!(text).expect("string write");
    fs::write(dir.join("index.json"), text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fixture, FIXTURE_NAMES};
    use proptest::prelude::*;

    #[test]
    fn covers_only_file() {
        let text = r#"{
            "name": "chain2",
            "elements": ["0", "1"],
            "zero": "0",
            "one": "1",
            "covers": [["0", "1"]],
            "prod": [["0", "0"], ["0", "1"]],
            "impl": [["1", "1"], ["0", "1"]]
        }"#;
        let a = AlgebraFile::parse(text).unwrap().to_algebra().unwrap();
        assert_eq!(a, fixture("chain2").unwrap());
    }

    #[test]
    fn inconsistent_lattice_data() {
        let mut f = AlgebraFile::from_algebra(&fixture("g6").unwrap());
        f.covers = Some(vec![
            ["0".into(), "b".into()],
            ["b".into(), "c".into()],
            ["0".into(), "d".into()],
            ["d".into(), "c".into()],
            ["c".into(), "a".into()],
            ["a".into(), "1".into()],
        ]);
        assert!(matches!(f.to_algebra(), Err(StructureError::InconsistentLattice(_))));
    }

    #[test]
    fn structural_errors() {
        let mut f = AlgebraFile::from_algebra(&fixture("chain2").unwrap());
        f.prod[1][1] = "2".into();
        assert!(matches!(f.to_algebra(), Err(StructureError::UnknownLabel { .. })));
        let mut f = AlgebraFile::from_algebra(&fixture("chain2").unwrap());
        f.imp.pop();
        assert!(matches!(f.to_algebra(), Err(StructureError::BadShape { table: "impl", .. })));
        let mut f = AlgebraFile::from_algebra(&fixture("chain2").unwrap());
        f.elements[1] = "0".into();
        assert!(f.to_algebra().is_err());
        assert!(AlgebraFile::parse("{\"name\": 3}").is_err());
        assert!(AlgebraFile::parse("{\"bogus\": 1}").is_err());
    }

    #[test]
    fn metadata_round_trip() {
        let mut m = Map::new();
        m.insert("source".into(), Value::String("test".into()));
        m.insert("nested".into(), serde_json::json!({"k": [1, 2]}));
        let f = AlgebraFile::from_algebra(&fixture("g6").unwrap()).with_metadata(m);
        let text = f.to_json_string();
        let back = AlgebraFile::parse(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.to_json_string(), text);
    }

    proptest! {
        #[test]
        fn emitted_files_reparse_identically(idx in 0..FIXTURE_NAMES.len()) {
            let alg = fixture(FIXTURE_NAMES[idx]).unwrap();
            let text = algebra_to_json(&alg);
            let back = load_from_str(&text);
            prop_assert_eq!(&back, &alg);
            prop_assert_eq!(algebra_to_json(&back), text);
        }
    }

    fn load_from_str(text: &str) -> Algebra {
        AlgebraFile::parse(text).unwrap().to_algebra().unwrap()
    }
}
