//! Sparse coordinate vectors and incremental echelon bases.
//!
//! Graded components reach hundreds of dimensions while the relevant
//! operators are nearly monomial, so elimination runs on ordered maps.

use super::number::CycNum;
use std::collections::{BTreeMap, HashMap};

/// Coordinate vector with zero entries omitted.
pub type SparseVec = BTreeMap<usize, CycNum>;

/// `v += c·w`, dropping entries that cancel.
pub fn axpy(v: &mut SparseVec, c: &CycNum, w: &SparseVec) {
    for (k, x) in w {
        let delta = c * x;
        match v.get_mut(k) {
            Some(cur) => {
                *cur += &delta;
                if cur.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                if !delta.is_zero() {
                    v.insert(*k, delta);
                }
            }
        }
    }
}

pub fn scale(v: &SparseVec, c: &CycNum) -> SparseVec {
    if c.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(k, x)| (*k, x * c)).collect()
}

pub fn to_dense(v: &SparseVec, len: usize, conductor: u32) -> Vec<CycNum> {
    let mut out = vec![CycNum::zero(conductor); len];
    for (k, x) in v {
        out[*k] = x.clone();
    }
    out
}

pub fn from_dense(v: &[CycNum]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k, x.clone()))
        .collect()
}

/// Which coordinate of a row is its pivot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotOrder {
    /// Smallest index (leftmost nonzero).
    Leftmost,
    /// Largest index (leading monomial under an increasing monomial order).
    Rightmost,
}

/// Rows with distinct pivots, each normalized to pivot coefficient 1.
///
/// Invariant: every entry of a row lies on the non-pivot side of its own pivot,
/// so clearing pivot coordinates in pivot order terminates.
#[derive(Clone, Debug)]
pub struct Echelon {
    order: PivotOrder,
    rows: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(order: PivotOrder) -> Echelon {
        Echelon {
            order,
            rows: Vec::new(),
            pivot_row: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| self.lead(r).unwrap()).collect()
    }

    pub fn is_pivot(&self, k: usize) -> bool {
        self.pivot_row.contains_key(&k)
    }

    fn lead(&self, v: &SparseVec) -> Option<usize> {
        match self.order {
            PivotOrder::Leftmost => v.keys().next().copied(),
            PivotOrder::Rightmost => v.keys().next_back().copied(),
        }
    }

    /// Clears every pivot coordinate of `v`; also returns the multiples
    /// `(row index, coefficient)` that were subtracted.
    pub fn reduce_tracked(&self, mut v: SparseVec) -> (SparseVec, Vec<(usize, CycNum)>) {
        let mut used = Vec::new();
        let mut cursor: Option<usize> = None;
        loop {
            let next = match (self.order, cursor) {
                (PivotOrder::Leftmost, None) => v.keys().next().copied(),
                (PivotOrder::Leftmost, Some(c)) => v.range(c + 1..).next().map(|(k, _)| *k),
                (PivotOrder::Rightmost, None) => v.keys().next_back().copied(),
                (PivotOrder::Rightmost, Some(c)) => v.range(..c).next_back().map(|(k, _)| *k),
            };
            let Some(k) = next else { break };
            cursor = Some(k);
            if let Some(&ri) = self.pivot_row.get(&k) {
                let c = v[&k].clone();
                axpy(&mut v, &-&c, &self.rows[ri]);
                debug_assert!(!v.contains_key(&k));
                used.push((ri, c));
            }
        }
        (v, used)
    }

    pub fn reduce(&self, v: SparseVec) -> SparseVec {
        self.reduce_tracked(v).0
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds `v` to the span; returns the new pivot, or `None` if `v` was dependent.
    pub fn insert(&mut self, v: SparseVec) -> Option<usize> {
        let r = self.reduce(v);
        self.push_reduced(r)
    }

    /// Adds an already-reduced vector.
    pub fn push_reduced(&mut self, r: SparseVec) -> Option<usize> {
        let p = self.lead(&r)?;
        let inv = r[&p].inv().unwrap();
        let row = scale(&r, &inv);
        self.pivot_row.insert(p, self.rows.len());
        self.rows.push(row);
        Some(p)
    }

    /// Rows rewritten so that each pivot column is zero in every other row.
    pub fn reduced_rows(&self) -> Vec<(usize, SparseVec)> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        let pivots = self.pivots();
        // rows whose pivot lies deepest in the order are finalized first
        match self.order {
            PivotOrder::Leftmost => order.sort_by_key(|&i| std::cmp::Reverse(pivots[i])),
            PivotOrder::Rightmost => order.sort_by_key(|&i| pivots[i]),
        }
        let mut done = Echelon::new(self.order);
        let mut out = Vec::new();
        for i in order {
            let row = &self.rows[i];
            let p = pivots[i];
            let mut rest = row.clone();
            rest.remove(&p);
            let mut red = done.reduce(rest);
            red.insert(p, row[&p].clone());
            done.pivot_row.insert(p, done.rows.len());
            done.rows.push(red.clone());
            out.push((p, red));
        }
        out.sort_by_key(|(p, _)| *p);
        out
    }

    /// Basis of the null space of the system whose equations are the rows, in
    /// `ncols` unknowns; one vector per free column, in increasing column order.
    pub fn kernel(&self, ncols: usize, conductor: u32) -> Vec<SparseVec> {
        let reduced = self.reduced_rows();
        let mut out = Vec::new();
        let mut by_free: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for f in 0..ncols {
            if !self.is_pivot(f) {
                let mut v = SparseVec::new();
                v.insert(f, CycNum::one(conductor));
                by_free.insert(f, v);
            }
        }
        for (p, row) in &reduced {
            for (k, c) in row {
                if k == p {
                    continue;
                }
                if let Some(v) = by_free.get_mut(k) {
                    v.insert(*p, -c);
                }
            }
        }
        out.extend(by_free.into_values());
        out
    }
}
