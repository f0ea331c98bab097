//! Benchmark inputs shared by the criterion suites.

use reslat_core::{direct_product, fixture, Algebra};

/// Product of the named fixtures.
pub fn product(names: &[&str]) -> Algebra {
    let factors: Vec<Algebra> = names.iter().map(|n| fixture(n).expect("fixture")).collect();
    direct_product(&factors).expect("product").algebra.as_ref().clone()
}
