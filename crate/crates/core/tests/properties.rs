//! Cross-checks of the library against brute-force definitions.

use std::sync::Arc;

use proptest::prelude::*;
use reslat_core::{
    all_filters, boolean_center, canonical_surjection, dense_filter, direct_product, enumerate_algebras,
    filter_correspondence, find_isomorphism, fixture, max_filters, radical, second_isomorphism_check, spec, Algebra,
    ElementSet, EnumerationOptions, Op, FIXTURE_NAMES,
};

fn fixtures() -> Vec<Algebra> {
    FIXTURE_NAMES.iter().map(|n| fixture(n).unwrap()).collect()
}

fn catalog(n: usize) -> Vec<Algebra> {
    enumerate_algebras(n, &EnumerationOptions::default()).unwrap().entries
}

fn small_algebras() -> Vec<Algebra> {
    let mut all = fixtures();
    for n in 1..=5 {
        all.extend(catalog(n));
    }
    all
}

fn subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    (0u32..1 << n).map(move |bits| ElementSet::from_predicate(n, |i| bits >> i & 1 == 1))
}

fn brute_is_filter(alg: &Algebra, s: &ElementSet) -> bool {
    s.contains(alg.one())
        && s.iter().all(|a| alg.elements().all(|b| !alg.leq(a, b) || s.contains(b)))
        && s.iter().all(|a| s.iter().all(|b| s.contains(alg.prod(a, b))))
}

fn brute_filters(alg: &Algebra) -> Vec<ElementSet> {
    let mut fs: Vec<ElementSet> = subsets(alg.n()).filter(|s| brute_is_filter(alg, s)).collect();
    fs.sort();
    fs
}

fn brute_max(alg: &Algebra) -> Vec<ElementSet> {
    let proper: Vec<ElementSet> = brute_filters(alg).into_iter().filter(|f| !f.contains(alg.zero())).collect();
    proper.iter().filter(|f| !proper.iter().any(|g| g != *f && f.is_subset(g))).cloned().collect()
}

fn brute_spec(alg: &Algebra) -> Vec<ElementSet> {
    brute_filters(alg)
        .into_iter()
        .filter(|p| !p.contains(alg.zero()))
        .filter(|p| {
            alg.elements()
                .all(|a| alg.elements().all(|b| !p.contains(alg.join(a, b)) || p.contains(a) || p.contains(b)))
        })
        .collect()
}

fn sorted(mut v: Vec<ElementSet>) -> Vec<ElementSet> {
    v.sort();
    v
}

#[test]
fn filters_match_brute_force() {
    for alg in small_algebras() {
        assert_eq!(all_filters(&alg), brute_filters(&alg), "{}", alg.name());
        assert_eq!(sorted(max_filters(&alg)), brute_max(&alg), "{}", alg.name());
        assert_eq!(sorted(spec(&alg)), brute_spec(&alg), "{}", alg.name());
    }
}

#[test]
fn radical_contains_dense_and_meets_center_in_one() {
    for alg in small_algebras().into_iter().filter(|a| !a.is_trivial()) {
        let rad = radical(&alg);
        assert!(dense_filter(&alg).is_subset(&rad), "{}", alg.name());
        let b = boolean_center(&alg).members;
        assert_eq!(b.intersection(&rad).to_vec(), vec![alg.one()], "{}", alg.name());
    }
}

#[test]
fn catalog_sizes_follow_the_known_sequence() {
    let counts: Vec<usize> = (1..=5).map(|n| catalog(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 7, 26]);
    let six = enumerate_algebras(6, &EnumerationOptions { cap: 6 }).unwrap();
    assert_eq!(six.entries.len(), 129);
}

#[test]
fn catalog_entries_are_pairwise_distinct() {
    for n in 1..=4 {
        enumerate_algebras(n, &EnumerationOptions::default()).unwrap().verify_distinct().unwrap();
    }
}

#[test]
fn radical_of_product_is_product_of_radicals() {
    let algs: Vec<Algebra> = ["chain2", "godel3", "lukasiewicz3", "g6"].iter().map(|n| fixture(n).unwrap()).collect();
    for a in &algs {
        for b in &algs {
            let p = direct_product(&[a.clone(), b.clone()]).unwrap();
            let (ra, rb) = (radical(a), radical(b));
            let expected = ElementSet::from_predicate(p.algebra.n(), |x| {
                let c = p.decode(x);
                ra.contains(c[0]) && rb.contains(c[1])
            });
            assert_eq!(radical(&p.algebra), expected, "{} x {}", a.name(), b.name());
        }
    }
}

#[test]
fn filter_correspondence_and_isomorphism_theorems() {
    for alg in fixtures().into_iter().filter(|a| a.n() <= 9) {
        let filters = all_filters(&alg);
        for f in &filters {
            let corr = filter_correspondence(&alg, f).unwrap();
            assert_eq!(corr.pairs.len(), filters.iter().filter(|g| f.is_subset(g)).count());
            for g in filters.iter().filter(|g| f.is_subset(g)) {
                let iso = second_isomorphism_check(&alg, f, g).unwrap();
                assert!(iso.is_bijective());
                canonical_surjection(&alg, f, g).unwrap();
            }
        }
    }
}

fn permuted(alg: &Algebra, perm: &[usize]) -> Algebra {
    let n = alg.n();
    let table = |op: Op| {
        let mut t = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                t[perm[a]][perm[b]] = perm[op.apply(alg, a, b)];
            }
        }
        t
    };
    let mut labels = vec![String::new(); n];
    for a in 0..n {
        labels[perm[a]] = alg.label(a).to_string();
    }
    Algebra::from_tables(
        "permuted",
        labels,
        table(Op::Join),
        table(Op::Meet),
        table(Op::Prod),
        table(Op::Impl),
        perm[alg.zero()],
        perm[alg.one()],
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn isomorphism_search_sees_through_relabeling(
        index in 0usize..FIXTURE_NAMES.len(),
        perm in Just((0..12).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let alg = fixture(FIXTURE_NAMES[index]).unwrap();
        let n = alg.n();
        let perm: Vec<usize> = perm.into_iter().filter(|&i| i < n).collect();
        let a = Arc::new(alg.clone());
        let b = Arc::new(permuted(&alg, &perm));
        let iso = find_isomorphism(&a, &b).unwrap().expect("isomorphic");
        prop_assert!(iso.is_bijective());
        prop_assert_eq!(max_filters(&a).len(), max_filters(&b).len());
        prop_assert_eq!(all_filters(&a).len(), all_filters(&b).len());
    }
}
