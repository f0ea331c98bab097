//! Named example algebras, each axiom-verified on load.

use crate::algebra::{order_from_covers, Algebra};
use crate::error::{Error, Result};
use crate::products::direct_product;

pub const FIXTURE_NAMES: &[&str] = &[
    "trivial",
    "chain2",
    "godel3",
    "godel4",
    "lukasiewicz3",
    "lukasiewicz4",
    "boolean4",
    "g6",
    "godel3xgodel3",
    "chain2xlukasiewicz3",
    "g6xchain2",
];

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn label_table(labels: &[String], rows: &[&str]) -> Vec<Vec<usize>> {
    rows.iter()
        .map(|r| r.split_whitespace().map(|l| labels.iter().position(|x| x == l).expect("fixture label")).collect())
        .collect()
}

/// A chain `0 < 1 < ... < n-1` with the product given on indices.
fn chain(name: &str, labels: &[&str], prod: impl Fn(usize, usize) -> usize) -> Result<Algebra> {
    let n = labels.len();
    let leq: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect();
    let table = (0..n).map(|i| (0..n).map(|j| prod(i, j)).collect()).collect();
    Ok(Algebra::from_order(name, strings(labels), &leq, table, None, 0, n - 1)?)
}

fn lukasiewicz(name: &str, labels: &[&str]) -> Result<Algebra> {
    let top = labels.len() - 1;
    chain(name, labels, |i, j| (i + j).saturating_sub(top))
}

fn g6() -> Result<Algebra> {
    let labels = strings(&["0", "a", "b", "c", "d", "1"]);
    // Hasse diagram: 0 < d < c < a < 1 and 0 < b < a
    let covers = [(0, 4), (4, 3), (3, 1), (0, 2), (2, 1), (1, 5)];
    let leq = order_from_covers(6, &covers);
    let imp = label_table(
        &labels,
        &["1 1 1 1 1 1", "0 1 b c c 1", "c 1 1 c c 1", "b 1 b 1 a 1", "b 1 b 1 1 1", "0 a b c d 1"],
    );
    let prod = label_table(
        &labels,
        &["0 0 0 0 0 0", "0 a b d d a", "0 b b 0 0 b", "0 d 0 d d c", "0 d 0 d d d", "0 a b c d 1"],
    );
    Ok(Algebra::from_order("g6", labels, &leq, prod, Some(imp), 0, 5)?)
}

fn product_of(name: &str, parts: &[&str]) -> Result<Algebra> {
    let factors = parts.iter().map(|p| fixture(p)).collect::<Result<Vec<_>>>()?;
    Ok(direct_product(&factors)?.algebra.as_ref().clone().with_name(name))
}

/// Look up a named fixture (case-insensitive).
pub fn fixture(name: &str) -> Result<Algebra> {
    let key = name.to_ascii_lowercase();
    let alg = match key.as_str() {
        "trivial" => chain("trivial", &["0"], |_, _| 0)?,
        "chain2" => chain("chain2", &["0", "1"], |i, j| i.min(j))?,
        "godel3" => chain("godel3", &["0", "m", "1"], |i, j| i.min(j))?,
        "godel4" => chain("godel4", &["0", "p", "q", "1"], |i, j| i.min(j))?,
        "lukasiewicz3" => lukasiewicz("lukasiewicz3", &["0", "1/2", "1"])?,
        "lukasiewicz4" => lukasiewicz("lukasiewicz4", &["0", "1/3", "2/3", "1"])?,
        "boolean4" => product_of("boolean4", &["chain2", "chain2"])?,
        "g6" => g6()?,
        "godel3xgodel3" => product_of("godel3xgodel3", &["godel3", "godel3"])?,
        "chain2xlukasiewicz3" => product_of("chain2xlukasiewicz3", &["chain2", "lukasiewicz3"])?,
        "g6xchain2" => product_of("g6xchain2", &["g6", "chain2"])?,
        _ => return Err(Error::UnknownFixture(name.to_string())),
    };
    alg.verified()
}
