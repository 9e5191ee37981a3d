//! `Tor_i^R(M, N)` from a minimal resolution of `M` tensored with `N`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{check_bound, resolve, GradedFreeModule, GradedMap, GradedPresentation};
use crate::config::DegreeBound;
use crate::error::Result;
use crate::field::Field;
use crate::linalg::{Echelon, SparseVec};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum TorLength {
    Finite(u64),
    Infinite,
}

impl TorLength {
    pub fn is_zero(&self) -> bool {
        *self == TorLength::Finite(0)
    }
}

impl std::fmt::Display for TorLength {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TorLength::Finite(n) => write!(f, "{n}"),
            TorLength::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorReport {
    pub index: usize,
    /// Nonzero graded dimensions below the stable degree.
    pub graded: Vec<(i64, u64)>,
    /// Dimension in every degree from `bound_used` on.
    pub tail: u64,
    pub length: TorLength,
    pub bound_used: i64,
    pub stabilized: bool,
}

/// One step `F_k ⊗ G0` of the tensored complex with its pieces.
struct Level<'a, F> {
    basis: GradedFreeModule,
    /// Image of `F_k ⊗ ψ`.
    rel: GradedMap<F>,
    /// `d_k ⊗ 1 : F_k ⊗ G0 -> F_{k-1} ⊗ G0`.
    diff: Option<GradedMap<F>>,
    s: &'a NumericalSemigroup,
}

impl<F: Field> Level<'_, F> {
    fn present(&self, map: &GradedMap<F>, n: i64) -> Vec<SparseVec<F>> {
        map.columns_in(n).cloned().collect()
    }

    fn dim(&self, n: i64) -> usize {
        self.basis.dim_in(self.s, n)
    }
}

/// Graded `Tor_i(M, N)` with `N = coker(ψ: G1 -> G0)`.
///
/// In degree `n`, with `A_k = (F_k ⊗ G0)_n`, `B_k` the image of `F_k ⊗ G1`
/// and `d` the tensored differential:
/// `Z = { a in A_i : d a in B_(i-1) }`, `W = B_i + d A_(i+1)`, and
/// `dim Tor_i,n = dim Z - dim W`. Every piece is constant from
/// `max shift + conductor` on, so that degree gives the tail.
pub fn tor<F: Field>(
    m: &GradedPresentation<F>,
    n: &GradedPresentation<F>,
    i: usize,
    bound: DegreeBound,
) -> Result<TorReport> {
    let s = m.semigroup().clone();
    let maps = resolve(m, i + 1, bound)?;
    let np = n.minimalize();
    let g0 = np.generators().clone();
    let psi = np.map();

    // Free modules F_0 .. F_(i+1) of the resolution.
    let free = |k: usize| -> GradedFreeModule {
        if k == 0 {
            maps[0].target().clone()
        } else {
            maps[k - 1].source().clone()
        }
    };
    let level = |k: usize| -> Level<'_, F> {
        let fk = free(k);
        Level {
            basis: fk.tensor(&g0),
            rel: psi.identity_tensor(&fk),
            diff: (k > 0).then(|| maps[k - 1].tensor_identity(&g0)),
            s: &s,
        }
    };
    let cur = level(i);
    let prev = (i > 0).then(|| level(i - 1));
    let next = level(i + 1);

    let mut all_shifts: Vec<i64> = Vec::new();
    for l in [Some(&cur), prev.as_ref(), Some(&next)]
        .into_iter()
        .flatten()
    {
        all_shifts.extend(&l.basis.shifts);
        all_shifts.extend(&l.rel.source().shifts);
    }
    let Some(lo) = cur.basis.min_shift() else {
        return Ok(TorReport {
            index: i,
            graded: Vec::new(),
            tail: 0,
            length: TorLength::Finite(0),
            bound_used: 0,
            stabilized: true,
        });
    };
    let top = all_shifts.iter().copied().max().unwrap_or(lo);
    let stable = top + s.conductor();
    let max_abs = all_shifts.iter().map(|d| d.abs()).max().unwrap_or(0);
    check_bound(bound, &s, max_abs, stable)?;

    let mut memo: HashMap<Vec<bool>, u64> = HashMap::new();
    let mut dim_at = |deg: i64| -> u64 {
        let key: Vec<bool> = all_shifts.iter().map(|&d| s.is_member(deg - d)).collect();
        *memo.entry(key).or_insert_with(|| {
            let a = cur.dim(deg);
            if a == 0 {
                return 0;
            }
            let z = match (&prev, &cur.diff) {
                (Some(p), Some(d)) => {
                    let mut e = Echelon::new();
                    for v in p.present(&p.rel, deg) {
                        e.insert(v);
                    }
                    let b = e.rank();
                    for v in cur.present(d, deg) {
                        e.insert(v);
                    }
                    a - (e.rank() - b)
                }
                _ => a,
            };
            let mut w = Echelon::new();
            for v in cur.present(&cur.rel, deg) {
                w.insert(v);
            }
            for v in next.present(next.diff.as_ref().unwrap(), deg) {
                w.insert(v);
            }
            (z - w.rank()) as u64
        })
    };

    let mut graded = Vec::new();
    let mut total = 0u64;
    for deg in lo..stable {
        let d = dim_at(deg);
        if d > 0 {
            graded.push((deg, d));
            total += d;
        }
    }
    let tail = dim_at(stable);
    Ok(TorReport {
        index: i,
        graded,
        tail,
        length: if tail == 0 {
            TorLength::Finite(total)
        } else {
            TorLength::Infinite
        },
        bound_used: stable,
        stabilized: true,
    })
}
