//! Sparse exact Gaussian elimination.
//!
//! Vectors are sorted `(index, coefficient)` lists without zero entries.
//! [`Echelon`] maintains a row-echelon basis that vectors can be reduced
//! against or inserted into one at a time.

use std::collections::BTreeMap;

use crate::field::Field;

pub type SparseVec<F> = Vec<(usize, F)>;

/// `v - c * w` on sorted sparse vectors.
pub fn sub_scaled<F: Field>(v: &[(usize, F)], c: &F, w: &[(usize, F)]) -> SparseVec<F> {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let take_v = j == w.len() || (i < v.len() && v[i].0 < w[j].0);
        let take_w = i == v.len() || (j < w.len() && w[j].0 < v[i].0);
        if take_v {
            out.push(v[i].clone());
            i += 1;
        } else if take_w {
            out.push((w[j].0, -(c.clone() * w[j].1.clone())));
            j += 1;
        } else {
            let x = v[i].1.clone() - c.clone() * w[j].1.clone();
            if !x.is_zero() {
                out.push((v[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale<F: Field>(v: &mut SparseVec<F>, c: &F) {
    for (_, x) in v.iter_mut() {
        *x = x.clone() * c.clone();
    }
}

/// Builds a sparse vector from unsorted entries, summing duplicates.
pub fn collect_sparse<F: Field>(entries: impl IntoIterator<Item = (usize, F)>) -> SparseVec<F> {
    let mut acc: BTreeMap<usize, F> = BTreeMap::new();
    for (i, c) in entries {
        let slot = acc.entry(i).or_insert_with(F::zero);
        *slot = slot.clone() + c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// A semi-reduced row-echelon basis keyed by pivot index; every stored row
/// has leading coefficient 1 at its pivot.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    rows: BTreeMap<usize, SparseVec<F>>,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; the result has no entry at a pivot.
    pub fn reduce(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        let mut cursor = 0;
        loop {
            let hit = v
                .iter()
                .position(|(i, _)| *i >= cursor && self.rows.contains_key(i));
            let Some(pos) = hit else { break };
            let (i, c) = v[pos].clone();
            v = sub_scaled(&v, &c, &self.rows[&i]);
            cursor = i + 1;
        }
        v
    }

    /// Inserts `v`; returns `false` if it was already in the span.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        let mut r = self.reduce(v);
        let Some((pivot, lead)) = r.first().cloned() else {
            return false;
        };
        let inv = lead.inverse().expect("nonzero leading coefficient");
        scale(&mut r, &inv);
        self.rows.insert(pivot, r);
        true
    }

    pub fn contains(&self, v: SparseVec<F>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank of the span of `vectors`.
pub fn rank<F: Field>(vectors: impl IntoIterator<Item = SparseVec<F>>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Basis of the kernel of the matrix with the given columns, as sparse
/// vectors over column indices.
pub fn kernel<F: Field>(columns: &[SparseVec<F>], nrows: usize) -> Vec<SparseVec<F>> {
    let mut image: Echelon<F> = Echelon::new();
    let mut out = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        debug_assert!(col.iter().all(|(i, _)| *i < nrows));
        // Tag the column with e_j in the index range past the rows.
        let mut v = col.clone();
        v.push((nrows + j, F::one()));
        let r = image.reduce(v);
        match r.first() {
            Some((p, _)) if *p < nrows => {
                image.insert(r);
            }
            _ => out.push(r.into_iter().map(|(i, c)| (i - nrows, c)).collect()),
        }
    }
    out
}

/// Applies the matrix with the given columns to a sparse vector.
pub fn apply<F: Field>(columns: &[SparseVec<F>], v: &[(usize, F)]) -> SparseVec<F> {
    collect_sparse(v.iter().flat_map(|(j, c)| {
        columns[*j]
            .iter()
            .map(move |(i, a)| (*i, a.clone() * c.clone()))
    }))
}
