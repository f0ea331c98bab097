//! Enumeration of all residuated lattices of a small order, up to
//! isomorphism.
//!
//! Bounded lattices are generated first (index `0` bottom, `n-1` top, every
//! partial order on the middle elements that is a lattice, deduplicated by
//! canonical form). For each lattice every commutative, monotone product
//! with unit `1` and `x ⊙ y ≤ x ∧ y` is searched by backtracking; survivors
//! must be associative and admit a residuum. Results are deduplicated by a
//! canonical form taken over all relabelings fixing `0` and `1`.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::{lattice_from_order, residuum, Algebra, ElementId, Op};
use crate::boolean_center::boolean_center;
use crate::decomposition::classify;
use crate::error::{Error, Result};
use crate::morphisms::find_isomorphism;
use crate::verify::verify_axioms;

pub const DEFAULT_ENUMERATION_CAP: usize = 5;
/// Orders above this are never attempted, whatever the configured cap.
pub const HARD_ENUMERATION_LIMIT: usize = 6;

#[derive(Debug, Clone, Copy)]
pub struct EnumerationOptions {
    pub cap: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions { cap: DEFAULT_ENUMERATION_CAP }
    }
}

/// All residuated lattices of one order, one canonical representative per
/// isomorphism class, sorted by canonical form.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub order: usize,
    pub entries: Vec<Algebra>,
    pub counts: BTreeMap<String, usize>,
}

impl Catalog {
    /// Checks that no two entries are isomorphic and that all verify.
    pub fn verify_distinct(&self) -> Result<()> {
        let arcs: Vec<Arc<Algebra>> = self.entries.iter().cloned().map(Arc::new).collect();
        for (i, a) in arcs.iter().enumerate() {
            if !verify_axioms(a).passed() {
                return Err(Error::Inconsistency(format!("{} fails the axioms", a.name())));
            }
            for b in &arcs[i + 1..] {
                if find_isomorphism(a, b)?.is_some() {
                    return Err(Error::Inconsistency(format!("{} and {} are isomorphic", a.name(), b.name())));
                }
            }
        }
        Ok(())
    }
}

fn labels_for(n: usize) -> Vec<String> {
    let mut out = vec!["0".to_string()];
    out.extend((1..n.saturating_sub(1)).map(|i| ((b'a' + (i - 1) as u8) as char).to_string()));
    if n > 1 {
        out.push("1".to_string());
    }
    out
}

/// Calls `f` on every permutation of `0..m` in lexicographic order.
fn for_each_permutation(m: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..m).collect();
    loop {
        f(&p);
        let Some(i) = (1..m).rev().find(|&i| p[i - 1] < p[i]) else { return };
        let j = (i..m).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Relabeling `old → new` sending `zero` to `0`, `one` to `n-1` and the
/// remaining elements (in index order) through `perm`.
fn relabeling(alg: &Algebra, perm: &[usize]) -> Vec<ElementId> {
    let n = alg.n();
    let mut new_of_old = vec![0; n];
    if n == 1 {
        return new_of_old;
    }
    new_of_old[alg.zero()] = 0;
    new_of_old[alg.one()] = n - 1;
    let middle: Vec<ElementId> = alg.elements().filter(|&a| a != alg.zero() && a != alg.one()).collect();
    for (k, &old) in middle.iter().enumerate() {
        new_of_old[old] = perm[k] + 1;
    }
    new_of_old
}

fn key_under(alg: &Algebra, new_of_old: &[ElementId]) -> Vec<u32> {
    let n = alg.n();
    let mut old_of_new = vec![0; n];
    for (old, &new) in new_of_old.iter().enumerate() {
        old_of_new[new] = old;
    }
    let mut key = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        for j in 0..n {
            key.push(alg.leq(old_of_new[i], old_of_new[j]) as u32);
        }
    }
    for i in 0..n {
        for j in 0..n {
            key.push(new_of_old[alg.prod(old_of_new[i], old_of_new[j])] as u32);
        }
    }
    key
}

/// Minimum of the order-and-product tables over all relabelings fixing
/// `0` and `1`, with the relabeling attaining it. Exact but factorial in
/// the size; intended for `n ≤ 8`.
pub fn canonical_form(alg: &Algebra) -> (Vec<u32>, Vec<ElementId>) {
    let m = alg.n().saturating_sub(2);
    let mut best: Option<(Vec<u32>, Vec<ElementId>)> = None;
    for_each_permutation(m, |perm| {
        let relabel = relabeling(alg, perm);
        let key = key_under(alg, &relabel);
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, relabel));
        }
    });
    best.expect("at least one permutation")
}

fn relabel(alg: &Algebra, new_of_old: &[ElementId], name: String, labels: Vec<String>) -> Algebra {
    let n = alg.n();
    let mut old_of_new = vec![0; n];
    for (old, &new) in new_of_old.iter().enumerate() {
        old_of_new[new] = old;
    }
    let table = |op: Op| -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).map(|j| new_of_old[op.apply(alg, old_of_new[i], old_of_new[j])]).collect()).collect()
    };
    Algebra::from_tables(
        name,
        labels,
        table(Op::Join),
        table(Op::Meet),
        table(Op::Prod),
        table(Op::Impl),
        new_of_old[alg.zero()],
        new_of_old[alg.one()],
    )
    .expect("relabeling preserves shape")
}

/// Bounded lattices on `n ≥ 2` elements up to isomorphism, as order
/// matrices with `0` bottom and `n-1` top.
pub fn bounded_lattices(n: usize) -> Vec<Vec<Vec<bool>>> {
    assert!(n >= 2);
    let m = n - 2;
    let pairs: Vec<(usize, usize)> = (1..=m).flat_map(|i| (i + 1..=m).map(move |j| (i, j))).collect();
    let labels = labels_for(n);
    let total = 3usize.pow(pairs.len() as u32);
    let mut seen: BTreeMap<Vec<u32>, Vec<Vec<bool>>> = BTreeMap::new();
    for code in 0..total {
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            leq[i][i] = true;
            leq[0][i] = true;
            leq[i][n - 1] = true;
        }
        let mut c = code;
        for &(i, j) in &pairs {
            match c % 3 {
                1 => leq[i][j] = true,
                2 => leq[j][i] = true,
                _ => {}
            }
            c /= 3;
        }
        let transitive = (0..n).all(|a| (0..n).all(|b| !leq[a][b] || (0..n).all(|d| !leq[b][d] || leq[a][d])));
        if !transitive || lattice_from_order(&labels, &leq).is_err() {
            continue;
        }
        // canonical key of the bare order
        let mut best: Option<Vec<u32>> = None;
        for_each_permutation(m, |perm| {
            let map = |x: usize| if x == 0 || x == n - 1 { x } else { perm[x - 1] + 1 };
            let mut inv = vec![0; n];
            for x in 0..n {
                inv[map(x)] = x;
            }
            let key: Vec<u32> =
                (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| leq[inv[i]][inv[j]] as u32).collect();
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        });
        seen.entry(best.unwrap()).or_insert(leq);
    }
    seen.into_values().collect()
}

/// Every residuated lattice on a fixed bounded lattice, possibly with
/// isomorphic duplicates.
fn algebras_on_lattice(n: usize, leq: &[Vec<bool>]) -> Vec<Algebra> {
    let labels = labels_for(n);
    let (join, meet) = lattice_from_order(&labels, leq).expect("lattice");
    let top = n - 1;
    let mut prod: Vec<Vec<Option<usize>>> = vec![vec![None; n]; n];
    for x in 0..n {
        prod[0][x] = Some(0);
        prod[x][0] = Some(0);
        prod[top][x] = Some(x);
        prod[x][top] = Some(x);
    }
    let cells: Vec<(usize, usize)> = (1..top).flat_map(|i| (i..top).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    search_products(n, leq, &meet, &cells, 0, &mut prod, &mut |table| {
        let p: Vec<Vec<usize>> = table.iter().map(|r| r.iter().map(|v| v.unwrap()).collect()).collect();
        let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| p[p[a][b]][c] == p[a][p[b][c]])));
        if !assoc {
            return;
        }
        let distributes = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| p[a][join[b][c]] == join[p[a][b]][p[a][c]])));
        if !distributes {
            return;
        }
        let Ok(imp) = residuum(&labels, leq, &p) else { return };
        let alg = Algebra::from_tables("candidate", labels.clone(), join.clone(), meet.clone(), p, imp, 0, top)
            .expect("well-shaped");
        if verify_axioms(&alg).passed() {
            out.push(alg);
        }
    });
    out
}

fn search_products(
    n: usize,
    leq: &[Vec<bool>],
    meet: &[Vec<usize>],
    cells: &[(usize, usize)],
    k: usize,
    prod: &mut Vec<Vec<Option<usize>>>,
    emit: &mut impl FnMut(&[Vec<Option<usize>>]),
) {
    if k == cells.len() {
        emit(prod);
        return;
    }
    let (i, j) = cells[k];
    for v in 0..n {
        if !leq[v][meet[i][j]] {
            continue;
        }
        prod[i][j] = Some(v);
        prod[j][i] = Some(v);
        let monotone = (0..n).all(|x| {
            (0..n).all(|y| match prod[x][y] {
                None => true,
                Some(w) => (!(leq[x][i] && leq[y][j]) || leq[w][v]) && (!(leq[i][x] && leq[j][y]) || leq[v][w]),
            })
        });
        if monotone {
            search_products(n, leq, meet, cells, k + 1, prod, emit);
        }
        prod[i][j] = None;
        prod[j][i] = None;
    }
}

pub fn enumerate_algebras(n: usize, options: &EnumerationOptions) -> Result<Catalog> {
    let cap = options.cap.min(HARD_ENUMERATION_LIMIT);
    if n == 0 || n > cap {
        return Err(Error::EnumerationCap { n, cap });
    }
    let raw: Vec<Algebra> = if n == 1 {
        vec![Algebra::from_tables(
            "candidate",
            labels_for(1),
            vec![vec![0]],
            vec![vec![0]],
            vec![vec![0]],
            vec![vec![0]],
            0,
            0,
        )?]
    } else {
        bounded_lattices(n)
            .par_iter()
            .map(|leq| algebras_on_lattice(n, leq))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    };
    let mut by_key: BTreeMap<Vec<u32>, Algebra> = BTreeMap::new();
    for alg in raw {
        let (key, relabel_map) = canonical_form(&alg);
        by_key.entry(key).or_insert_with(|| relabel(&alg, &relabel_map, String::new(), labels_for(n)));
    }
    let entries: Vec<Algebra> =
        by_key.into_values().enumerate().map(|(k, a)| a.with_name(format!("rl{n}-{:03}", k + 1))).collect();

    let mut counts = BTreeMap::new();
    counts.insert("total".to_string(), entries.len());
    for key in ["local", "perfect", "radical_dense", "has_lifting", "boolean", "chain"] {
        counts.insert(key.to_string(), 0);
    }
    for a in &entries {
        let c = classify(a)?;
        let chain = a.elements().all(|x| a.elements().all(|y| a.leq(x, y) || a.leq(y, x)));
        let flags = [
            ("local", c.local),
            ("perfect", c.perfect),
            ("radical_dense", c.radical_dense),
            ("has_lifting", c.has_lifting),
            ("boolean", boolean_center(a).members.is_full()),
            ("chain", chain),
        ];
        for (k, v) in flags {
            if v {
                *counts.get_mut(k).unwrap() += 1;
            }
        }
    }
    Ok(Catalog { order: n, entries, counts })
}
