//! Graded homological algebra over `R = k[S]`.
//!
//! Graded pieces of `R` are at most one-dimensional, so a homogeneous map
//! `R(-e) -> R(-d)` is a scalar times `t^(e-d)`. A [`GradedMap`] therefore
//! stores only scalars; the monomial of entry `(i, j)` is implied by the
//! shifts. In degree `n` the basis of a free module `F` is
//! `{ t^(n - d_i) f_i : n - d_i in S }`, and the matrix of a map in degree
//! `n` is the scalar matrix restricted to the source columns present in
//! that degree. Past `max shift + conductor` every basis element is
//! present, which is what makes all degreewise computations finite.

mod syzygy;
mod tensor;
mod tor;
mod transpose;

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use syzygy::{kernel_generators, present_ideal, present_quotient, resolve};
pub use tensor::{hilbert_iso_to_ideal, tensor_presentation, torsion_length, TorsionReport};
pub use tor::{tor, TorLength, TorReport};
pub use transpose::{auslander_transpose, pd_le_one};

use crate::config::DegreeBound;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{rank, SparseVec};
use crate::semigroup::NumericalSemigroup;

/// `⊕ R(-shift_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GradedFreeModule {
    pub shifts: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(shifts: Vec<i64>) -> Self {
        GradedFreeModule { shifts }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    /// Indices of basis elements with a nonzero component in degree `n`.
    pub fn present_in(&self, s: &NumericalSemigroup, n: i64) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| s.is_member(n - self.shifts[i]))
            .collect()
    }

    pub fn dim_in(&self, s: &NumericalSemigroup, n: i64) -> usize {
        self.shifts.iter().filter(|&&d| s.is_member(n - d)).count()
    }

    pub fn dual(&self) -> Self {
        GradedFreeModule::new(self.shifts.iter().map(|d| -d).collect())
    }

    /// Basis of `self ⊗ other`, indexed `a * other.rank() + b`.
    pub fn tensor(&self, other: &Self) -> Self {
        GradedFreeModule::new(
            self.shifts
                .iter()
                .flat_map(|a| other.shifts.iter().map(move |b| a + b))
                .collect(),
        )
    }

    pub fn min_shift(&self) -> Option<i64> {
        self.shifts.iter().min().copied()
    }

    pub fn max_shift(&self) -> Option<i64> {
        self.shifts.iter().max().copied()
    }

    pub fn max_abs_shift(&self) -> i64 {
        self.shifts.iter().map(|d| d.abs()).max().unwrap_or(0)
    }
}

/// A homogeneous map of graded free modules, stored column by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap<F> {
    semigroup: Arc<NumericalSemigroup>,
    source: GradedFreeModule,
    target: GradedFreeModule,
    columns: Vec<SparseVec<F>>,
}

impl<F: Field> GradedMap<F> {
    /// Checks homogeneity: every nonzero entry `(i, j)` needs
    /// `source[j] - target[i]` in `S`.
    pub fn new(
        semigroup: &Arc<NumericalSemigroup>,
        source: GradedFreeModule,
        target: GradedFreeModule,
        columns: Vec<SparseVec<F>>,
    ) -> Result<Self> {
        if columns.len() != source.rank() {
            return Err(Error::NotHomogeneous(format!(
                "{} columns for a source of rank {}",
                columns.len(),
                source.rank()
            )));
        }
        for (j, col) in columns.iter().enumerate() {
            for (i, c) in col {
                if *i >= target.rank() {
                    return Err(Error::NotHomogeneous(format!("row {i} out of range")));
                }
                let v = source.shifts[j] - target.shifts[*i];
                if !c.is_zero() && !semigroup.is_member(v) {
                    return Err(Error::NotHomogeneous(format!(
                        "entry ({i},{j}) would need t^{v}"
                    )));
                }
            }
        }
        let columns = columns
            .into_iter()
            .map(|c| c.into_iter().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        Ok(GradedMap {
            semigroup: Arc::clone(semigroup),
            source,
            target,
            columns,
        })
    }

    pub fn zero(
        semigroup: &Arc<NumericalSemigroup>,
        source: GradedFreeModule,
        target: GradedFreeModule,
    ) -> Self {
        let columns = vec![Vec::new(); source.rank()];
        GradedMap {
            semigroup: Arc::clone(semigroup),
            source,
            target,
            columns,
        }
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    pub fn columns(&self) -> &[SparseVec<F>] {
        &self.columns
    }

    /// Entry `(i, j)` as `(scalar, value)`, meaning `scalar * t^value`.
    pub fn entry(&self, i: usize, j: usize) -> Option<(F, i64)> {
        self.columns[j]
            .iter()
            .find(|(r, _)| *r == i)
            .map(|(_, c)| (c.clone(), self.source.shifts[j] - self.target.shifts[i]))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap<F>) -> Result<GradedMap<F>> {
        if other.target != self.source {
            return Err(Error::NotHomogeneous("maps are not composable".into()));
        }
        let columns = other
            .columns
            .iter()
            .map(|col| crate::linalg::apply(&self.columns, col))
            .collect();
        GradedMap::new(
            &self.semigroup,
            other.source.clone(),
            self.target.clone(),
            columns,
        )
    }

    /// `self ⊗ id_G : F ⊗ G -> F' ⊗ G`.
    pub fn tensor_identity(&self, g: &GradedFreeModule) -> GradedMap<F> {
        let r = g.rank();
        let columns = (0..self.source.rank() * r)
            .map(|idx| {
                let (a, b) = (idx / r, idx % r);
                self.columns[a]
                    .iter()
                    .map(|(k, c)| (k * r + b, c.clone()))
                    .collect()
            })
            .collect();
        GradedMap {
            semigroup: Arc::clone(&self.semigroup),
            source: self.source.tensor(g),
            target: self.target.tensor(g),
            columns,
        }
    }

    /// `id_F ⊗ self : F ⊗ G -> F ⊗ G'`.
    pub fn identity_tensor(&self, f: &GradedFreeModule) -> GradedMap<F> {
        let (rs, rt) = (self.source.rank(), self.target.rank());
        let columns = (0..f.rank() * rs)
            .map(|idx| {
                let (a, c) = (idx / rs, idx % rs);
                self.columns[c]
                    .iter()
                    .map(|(b, x)| (a * rt + b, x.clone()))
                    .collect()
            })
            .collect();
        GradedMap {
            semigroup: Arc::clone(&self.semigroup),
            source: f.tensor(&self.source),
            target: f.tensor(&self.target),
            columns,
        }
    }

    /// Columns present in degree `n`.
    pub fn columns_in(&self, n: i64) -> impl Iterator<Item = &SparseVec<F>> + '_ {
        let s = self.semigroup.as_ref();
        self.columns
            .iter()
            .zip(&self.source.shifts)
            .filter(move |(_, &d)| s.is_member(n - d))
            .map(|(c, _)| c)
    }

    /// Rank of the map in degree `n`.
    pub fn rank_in(&self, n: i64) -> usize {
        rank(self.columns_in(n).cloned())
    }

    /// Kernel generators, complete by construction (see [`kernel_generators`]).
    pub fn syzygy(&self, bound: DegreeBound) -> Result<GradedMap<F>> {
        let gens = kernel_generators(
            &self.semigroup,
            &self.source,
            &self.columns,
            self.target.rank(),
            bound,
        )?;
        let shifts = gens.iter().map(|(d, _)| *d).collect();
        let columns = gens.into_iter().map(|(_, v)| v).collect();
        GradedMap::new(
            &self.semigroup,
            GradedFreeModule::new(shifts),
            self.source.clone(),
            columns,
        )
    }

    pub fn transpose(&self) -> GradedMap<F> {
        let mut columns: Vec<SparseVec<F>> = vec![Vec::new(); self.target.rank()];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col {
                columns[*i].push((j, c.clone()));
            }
        }
        GradedMap {
            semigroup: Arc::clone(&self.semigroup),
            source: self.target.dual(),
            target: self.source.dual(),
            columns,
        }
    }

    pub fn summary(&self) -> MapSummary {
        let mut entries = Vec::new();
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col {
                entries.push(EntrySummary {
                    row: *i,
                    col: j,
                    coef: c.to_string(),
                    value: self.source.shifts[j] - self.target.shifts[*i],
                });
            }
        }
        entries.sort_by_key(|e| (e.row, e.col));
        MapSummary {
            source_shifts: self.source.shifts.clone(),
            target_shifts: self.target.shifts.clone(),
            entries,
        }
    }
}

/// A module given as `coker(F1 -> F0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPresentation<F> {
    map: GradedMap<F>,
}

impl<F: Field> GradedPresentation<F> {
    pub fn new(map: GradedMap<F>) -> Self {
        GradedPresentation { map }
    }

    pub fn free(semigroup: &Arc<NumericalSemigroup>, shifts: Vec<i64>) -> Self {
        GradedPresentation {
            map: GradedMap::zero(
                semigroup,
                GradedFreeModule::default(),
                GradedFreeModule::new(shifts),
            ),
        }
    }

    pub fn map(&self) -> &GradedMap<F> {
        &self.map
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.map.semigroup
    }

    pub fn generators(&self) -> &GradedFreeModule {
        &self.map.target
    }

    pub fn relations(&self) -> &GradedFreeModule {
        &self.map.source
    }

    /// No nonzero entry is a unit.
    pub fn has_unit_entries(&self) -> bool {
        self.map.columns.iter().enumerate().any(|(j, col)| {
            col.iter()
                .any(|(i, _)| self.map.source.shifts[j] == self.map.target.shifts[*i])
        })
    }

    /// `dim_k M_n`.
    pub fn hilbert(&self, n: i64) -> usize {
        let s = self.semigroup();
        self.map.target.dim_in(s, n) - self.map.rank_in(n)
    }

    /// Degree from which every basis element of `F0` and `F1` is present;
    /// the Hilbert function is constant from here on.
    pub fn stable_degree(&self) -> i64 {
        let top = self
            .map
            .source
            .max_shift()
            .into_iter()
            .chain(self.map.target.max_shift())
            .max()
            .unwrap_or(0);
        top + self.semigroup().conductor()
    }

    pub fn max_abs_shift(&self) -> i64 {
        self.map
            .source
            .max_abs_shift()
            .max(self.map.target.max_abs_shift())
    }

    /// Hilbert function on `[lo, hi)`, memoized on the set of present columns.
    pub fn hilbert_range(&self, lo: i64, hi: i64) -> Vec<usize> {
        let s = self.semigroup().clone();
        let mut cache: HashMap<Vec<bool>, usize> = HashMap::new();
        (lo..hi)
            .map(|n| {
                let key: Vec<bool> = self
                    .map
                    .source
                    .shifts
                    .iter()
                    .map(|&d| s.is_member(n - d))
                    .collect();
                let r = *cache.entry(key).or_insert_with(|| self.map.rank_in(n));
                self.map.target.dim_in(&s, n) - r
            })
            .collect()
    }

    /// An equivalent presentation with no unit entries and a minimal set
    /// of relations.
    pub fn minimalize(&self) -> GradedPresentation<F> {
        let mut rows = self.map.target.shifts.clone();
        let mut src = self.map.source.shifts.clone();
        let mut cols = self.map.columns.clone();

        while let Some((i, j)) = find_unit(&rows, &src, &cols) {
            let pivot = cols[j].iter().find(|(r, _)| *r == i).unwrap().1.clone();
            let inv = pivot.inverse().expect("nonzero pivot");
            let pivot_col = cols[j].clone();
            for (k, col) in cols.iter_mut().enumerate() {
                if k == j {
                    continue;
                }
                if let Some((_, a)) = col.iter().find(|(r, _)| *r == i) {
                    let factor = a.clone() * inv.clone();
                    *col = crate::linalg::sub_scaled(col, &factor, &pivot_col);
                }
            }
            cols.remove(j);
            src.remove(j);
            rows.remove(i);
            for col in cols.iter_mut() {
                debug_assert!(col.iter().all(|(r, _)| *r != i));
                for (r, _) in col.iter_mut() {
                    if *r > i {
                        *r -= 1;
                    }
                }
            }
        }

        // Keep a relation only if it is not an R-combination of earlier ones.
        let s = self.semigroup();
        let mut order: Vec<usize> = (0..src.len()).collect();
        order.sort_by_key(|&j| (src[j], j));
        let mut kept: Vec<usize> = Vec::new();
        for &j in &order {
            if cols[j].is_empty() {
                continue;
            }
            let span = kept
                .iter()
                .filter(|&&k| s.is_member(src[j] - src[k]))
                .map(|&k| cols[k].clone());
            let mut e = crate::linalg::Echelon::new();
            for v in span {
                e.insert(v);
            }
            if !e.contains(cols[j].clone()) {
                kept.push(j);
            }
        }
        kept.sort_unstable();
        let source = GradedFreeModule::new(kept.iter().map(|&j| src[j]).collect());
        let columns = kept.iter().map(|&j| cols[j].clone()).collect();
        GradedPresentation {
            map: GradedMap {
                semigroup: Arc::clone(s),
                source,
                target: GradedFreeModule::new(rows),
                columns,
            },
        }
    }

    pub fn summary(&self) -> MapSummary {
        self.map.summary()
    }
}

fn find_unit<F: Field>(rows: &[i64], src: &[i64], cols: &[SparseVec<F>]) -> Option<(usize, usize)> {
    cols.iter().enumerate().find_map(|(j, col)| {
        col.iter()
            .find(|(i, c)| rows[*i] == src[j] && !c.is_zero())
            .map(|(i, _)| (*i, j))
    })
}

/// Degree bound check shared by the engine entry points.
pub(crate) fn check_bound(
    bound: DegreeBound,
    s: &NumericalSemigroup,
    max_abs_shift: i64,
    required: i64,
) -> Result<i64> {
    let b = bound.resolve(s.conductor(), max_abs_shift, s.multiplicity());
    if b < required {
        Err(Error::BoundExceeded { bound: b, required })
    } else {
        Ok(b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntrySummary {
    pub row: usize,
    pub col: usize,
    pub coef: String,
    pub value: i64,
}

/// Serializable view of a graded map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapSummary {
    pub source_shifts: Vec<i64>,
    pub target_shifts: Vec<i64>,
    pub entries: Vec<EntrySummary>,
}
