//! Finite residuated lattices given by operation tables.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result, StructureError};
use crate::set::ElementSet;

/// Index of an element inside one [`Algebra`]. Only meaningful together with
/// the algebra it was taken from.
pub type ElementId = usize;

/// A finite commutative integral residuated bounded lattice.
///
/// Elements are the indices `0..n`; labels are for presentation only. The
/// four binary operations are stored as row-major `n*n` tables. Construction
/// checks shape and ranges but not the axioms; see [`crate::verify_axioms`].
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    labels: Vec<String>,
    join: Vec<u32>,
    meet: Vec<u32>,
    prod: Vec<u32>,
    imp: Vec<u32>,
    zero: ElementId,
    one: ElementId,
}

/// Nilpotency data of a single element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ElementClass {
    pub nilpotent: bool,
    pub unity: bool,
    pub finite: bool,
}

fn check_labels(labels: &[String]) -> Result<(), StructureError> {
    if labels.is_empty() {
        return Err(StructureError::Empty);
    }
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(StructureError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

fn flatten(table: &'static str, rows: Vec<Vec<usize>>, n: usize) -> Result<Vec<u32>, StructureError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(StructureError::BadShape { table, expected: n });
    }
    let mut out = Vec::with_capacity(n * n);
    for (row, r) in rows.into_iter().enumerate() {
        for (col, value) in r.into_iter().enumerate() {
            if value >= n {
                return Err(StructureError::OutOfRange { table, row, col, value, n });
            }
            out.push(value as u32);
        }
    }
    Ok(out)
}

fn check_constant(name: &'static str, value: usize, n: usize) -> Result<(), StructureError> {
    if value >= n {
        Err(StructureError::ConstantOutOfRange { name, value, n })
    } else {
        Ok(())
    }
}

/// An `n×n` operation table of element indices.
pub type Table = Vec<Vec<usize>>;

/// Derive join and meet tables from a partial order given as an `n*n`
/// relation matrix. Fails if the relation is not a partial order or some
/// pair lacks a supremum or infimum.
pub fn lattice_from_order(labels: &[String], leq: &[Vec<bool>]) -> Result<(Table, Table), StructureError> {
    let n = labels.len();
    if leq.len() != n || leq.iter().any(|r| r.len() != n) {
        return Err(StructureError::BadShape { table: "order", expected: n });
    }
    for a in 0..n {
        if !leq[a][a] {
            return Err(StructureError::NotPartialOrder(format!("{} not <= itself", labels[a])));
        }
        for b in 0..n {
            if a != b && leq[a][b] && leq[b][a] {
                return Err(StructureError::NotPartialOrder(format!(
                    "{} and {} are mutually below each other",
                    labels[a], labels[b]
                )));
            }
            for c in 0..n {
                if leq[a][b] && leq[b][c] && !leq[a][c] {
                    return Err(StructureError::NotPartialOrder(format!(
                        "not transitive at {}, {}, {}",
                        labels[a], labels[b], labels[c]
                    )));
                }
            }
        }
    }
    let bound = |a: usize, b: usize, upper: bool| -> Option<usize> {
        let cands: Vec<usize> =
            (0..n).filter(|&c| if upper { leq[a][c] && leq[b][c] } else { leq[c][a] && leq[c][b] }).collect();
        cands.iter().copied().find(|&c| cands.iter().all(|&d| if upper { leq[c][d] } else { leq[d][c] }))
    };
    let mut join = vec![vec![0; n]; n];
    let mut meet = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            join[a][b] = bound(a, b, true).ok_or_else(|| StructureError::NotLattice {
                a: labels[a].clone(),
                b: labels[b].clone(),
                which: "join",
            })?;
            meet[a][b] = bound(a, b, false).ok_or_else(|| StructureError::NotLattice {
                a: labels[a].clone(),
                b: labels[b].clone(),
                which: "meet",
            })?;
        }
    }
    Ok((join, meet))
}

/// Reflexive-transitive closure of a covering relation given as
/// `(lower, upper)` pairs.
pub fn order_from_covers(n: usize, covers: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(lo, hi) in covers {
        leq[lo][hi] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if leq[i][k] {
                for j in 0..n {
                    if leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
    }
    leq
}

/// The residuum `a -> b = max{c | c*a <= b}` of a product table over a
/// lattice order, if it exists for every pair.
pub fn residuum(labels: &[String], leq: &[Vec<bool>], prod: &[Vec<usize>]) -> Result<Vec<Vec<usize>>, StructureError> {
    let n = labels.len();
    let mut imp = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let cands: Vec<usize> = (0..n).filter(|&c| leq[prod[c][a]][b]).collect();
            imp[a][b] = cands
                .iter()
                .copied()
                .find(|&c| cands.iter().all(|&d| leq[d][c]))
                .ok_or_else(|| StructureError::NoResiduum { a: labels[a].clone(), b: labels[b].clone() })?;
        }
    }
    Ok(imp)
}

impl Algebra {
    /// Build from explicit tables of element indices.
    #[allow(clippy::too_many_arguments)]
    pub fn from_tables(
        name: impl Into<String>,
        labels: Vec<String>,
        join: Vec<Vec<usize>>,
        meet: Vec<Vec<usize>>,
        prod: Vec<Vec<usize>>,
        imp: Vec<Vec<usize>>,
        zero: ElementId,
        one: ElementId,
    ) -> Result<Self, StructureError> {
        check_labels(&labels)?;
        let n = labels.len();
        check_constant("zero", zero, n)?;
        check_constant("one", one, n)?;
        Ok(Algebra {
            name: name.into(),
            join: flatten("join", join, n)?,
            meet: flatten("meet", meet, n)?,
            prod: flatten("prod", prod, n)?,
            imp: flatten("impl", imp, n)?,
            labels,
            zero,
            one,
        })
    }

    /// Build from an order relation and a product table. Join and meet are
    /// derived from the order; the implication is derived as the residuum
    /// when `imp` is `None`.
    pub fn from_order(
        name: impl Into<String>,
        labels: Vec<String>,
        leq: &[Vec<bool>],
        prod: Vec<Vec<usize>>,
        imp: Option<Vec<Vec<usize>>>,
        zero: ElementId,
        one: ElementId,
    ) -> Result<Self, StructureError> {
        check_labels(&labels)?;
        let (join, meet) = lattice_from_order(&labels, leq)?;
        let n = labels.len();
        // validate prod before it is used for indexing
        flatten("prod", prod.clone(), n)?;
        let imp = match imp {
            Some(t) => t,
            None => residuum(&labels, leq, &prod)?,
        };
        Self::from_tables(name, labels, join, meet, prod, imp, zero, one)
    }

    /// Tables already flattened and range-checked by the caller.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_raw(
        name: String,
        labels: Vec<String>,
        join: Vec<u32>,
        meet: Vec<u32>,
        prod: Vec<u32>,
        imp: Vec<u32>,
        zero: ElementId,
        one: ElementId,
    ) -> Self {
        let n = labels.len();
        debug_assert!(join.len() == n * n && meet.len() == n * n);
        debug_assert!(prod.len() == n * n && imp.len() == n * n);
        Algebra { name, labels, join, meet, prod, imp, zero, one }
    }

    /// Runs the axiom check and returns the algebra only if it passes.
    pub fn verified(self) -> Result<Self> {
        let report = crate::verify::verify_axioms(&self);
        match report.violations.first() {
            None => Ok(self),
            Some(v) => Err(Error::AxiomViolation {
                name: self.name.clone(),
                count: report.violations.len(),
                first: v.describe(&self),
            }),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, StructureError> {
        check_labels(&labels)?;
        if labels.len() != self.n() {
            return Err(StructureError::BadShape { table: "labels", expected: self.n() });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Number of elements.
    #[inline]
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.n()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: ElementId) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<ElementId> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn check_index(&self, a: ElementId) -> Result<ElementId> {
        if a < self.n() {
            Ok(a)
        } else {
            Err(Error::IndexOutOfRange { index: a, n: self.n() })
        }
    }

    #[inline]
    pub fn zero(&self) -> ElementId {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> ElementId {
        self.one
    }

    pub fn is_trivial(&self) -> bool {
        self.n() == 1
    }

    #[inline]
    pub fn join(&self, a: ElementId, b: ElementId) -> ElementId {
        self.join[a * self.n() + b] as usize
    }

    #[inline]
    pub fn meet(&self, a: ElementId, b: ElementId) -> ElementId {
        self.meet[a * self.n() + b] as usize
    }

    #[inline]
    pub fn prod(&self, a: ElementId, b: ElementId) -> ElementId {
        self.prod[a * self.n() + b] as usize
    }

    #[inline]
    pub fn imp(&self, a: ElementId, b: ElementId) -> ElementId {
        self.imp[a * self.n() + b] as usize
    }

    /// Lattice order: `a <= b` iff `a ∧ b = a`.
    #[inline]
    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.meet(a, b) == a
    }

    /// `¬a = a → 0`
    #[inline]
    pub fn neg(&self, a: ElementId) -> ElementId {
        self.imp(a, self.zero)
    }

    /// `a ↔ b = (a → b) ∧ (b → a)`
    #[inline]
    pub fn biimpl(&self, a: ElementId, b: ElementId) -> ElementId {
        self.meet(self.imp(a, b), self.imp(b, a))
    }

    /// Meet of a nonempty sequence; `one` for an empty one.
    pub fn meet_all<I: IntoIterator<Item = ElementId>>(&self, items: I) -> ElementId {
        items.into_iter().fold(self.one, |acc, x| self.meet(acc, x))
    }

    pub fn prod_all<I: IntoIterator<Item = ElementId>>(&self, items: I) -> ElementId {
        items.into_iter().fold(self.one, |acc, x| self.prod(acc, x))
    }

    /// `a^k` with `a^0 = 1`.
    pub fn power(&self, a: ElementId, k: u64) -> ElementId {
        // the power sequence is eventually periodic, so large k is reduced
        let seq = self.power_sequence(a);
        let (pre, period) = (seq.preperiod, seq.period);
        let k = k as usize;
        if k < seq.powers.len() {
            seq.powers[k]
        } else {
            seq.powers[pre + (k - pre) % period]
        }
    }

    /// Distinct powers `a^0, a^1, ...` up to the first repetition.
    pub fn power_sequence(&self, a: ElementId) -> PowerSequence {
        let mut powers = vec![self.one];
        let mut pos = HashMap::new();
        pos.insert(self.one, 0usize);
        loop {
            let next = self.prod(*powers.last().unwrap(), a);
            if let Some(&start) = pos.get(&next) {
                let period = powers.len() - start;
                return PowerSequence { powers, preperiod: start, period };
            }
            pos.insert(next, powers.len());
            powers.push(next);
        }
    }

    /// Least `n >= 1` with `a^n = 0`, or `None` for infinite order.
    pub fn ord(&self, a: ElementId) -> Option<usize> {
        let mut p = a;
        let mut seen = HashSet::new();
        for k in 1.. {
            if p == self.zero {
                return Some(k);
            }
            if !seen.insert(p) {
                return None;
            }
            p = self.prod(p, a);
        }
        unreachable!()
    }

    pub fn classify_element(&self, a: ElementId) -> ElementClass {
        let nilpotent = self.ord(a).is_some();
        let unity = self.power_sequence(a).powers.iter().all(|&p| self.ord(self.neg(p)).is_some());
        let finite = nilpotent && self.ord(self.neg(a)).is_some();
        ElementClass { nilpotent, unity, finite }
    }

    /// Closure of `x ∪ {0, 1}` under the four operations.
    pub fn generated_universe(&self, x: &[ElementId]) -> ElementSet {
        let mut set = ElementSet::from_members(self.n(), [self.zero, self.one]);
        for &a in x {
            set.insert(a);
        }
        loop {
            let members = set.to_vec();
            let mut grew = false;
            for &a in &members {
                for &b in &members {
                    for c in [self.join(a, b), self.meet(a, b), self.prod(a, b), self.imp(a, b)] {
                        grew |= set.insert(c);
                    }
                }
            }
            if !grew {
                return set;
            }
        }
    }

    /// Subalgebra generated by `x`, with its inclusion map into `self`.
    pub fn subalgebra_generated(&self, x: &[ElementId]) -> (Algebra, Vec<ElementId>) {
        let members = self.generated_universe(x);
        let name = format!("{}[sub]", self.name);
        self.induced(&members, name, self.zero, self.one, |a, b| self.imp(a, b))
    }

    /// Restrict the algebra to a subset closed under join, meet and prod,
    /// with the given constants and implication. Members keep parent order.
    pub(crate) fn induced(
        &self,
        members: &ElementSet,
        name: String,
        zero: ElementId,
        one: ElementId,
        imp: impl Fn(ElementId, ElementId) -> ElementId,
    ) -> (Algebra, Vec<ElementId>) {
        let embed = members.to_vec();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &a) in embed.iter().enumerate() {
            local[a] = i;
        }
        let m = embed.len();
        let mut tables = [vec![0u32; m * m], vec![0u32; m * m], vec![0u32; m * m], vec![0u32; m * m]];
        for (i, &a) in embed.iter().enumerate() {
            for (j, &b) in embed.iter().enumerate() {
                let vals = [self.join(a, b), self.meet(a, b), self.prod(a, b), imp(a, b)];
                for (t, v) in tables.iter_mut().zip(vals) {
                    assert!(local[v] != usize::MAX, "induced subset not closed");
                    t[i * m + j] = local[v] as u32;
                }
            }
        }
        let labels = embed.iter().map(|&a| self.labels[a].clone()).collect();
        let [join, meet, prod, imp_t] = tables;
        let alg = Algebra::from_raw(name, labels, join, meet, prod, imp_t, local[zero], local[one]);
        (alg, embed)
    }

    /// Row-major table as nested vectors.
    pub fn table(&self, op: Op) -> Vec<Vec<ElementId>> {
        let t = match op {
            Op::Join => &self.join,
            Op::Meet => &self.meet,
            Op::Prod => &self.prod,
            Op::Impl => &self.imp,
        };
        t.chunks(self.n().max(1)).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }
}

/// The four binary operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Op {
    Join,
    Meet,
    Prod,
    Impl,
}

impl Op {
    pub const ALL: [Op; 4] = [Op::Join, Op::Meet, Op::Prod, Op::Impl];

    pub fn apply(self, alg: &Algebra, a: ElementId, b: ElementId) -> ElementId {
        match self {
            Op::Join => alg.join(a, b),
            Op::Meet => alg.meet(a, b),
            Op::Prod => alg.prod(a, b),
            Op::Impl => alg.imp(a, b),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Op::Join => "join",
            Op::Meet => "meet",
            Op::Prod => "prod",
            Op::Impl => "impl",
        }
    }
}

/// Powers `a^0 .. a^(preperiod + period - 1)`; afterwards the sequence
/// repeats with the given period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSequence {
    pub powers: Vec<ElementId>,
    pub preperiod: usize,
    pub period: usize,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("name", &self.name)
            .field("labels", &self.labels)
            .field("zero", &self.zero)
            .field("one", &self.one)
            .finish_non_exhaustive()
    }
}
