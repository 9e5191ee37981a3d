//! Brute-force oracles built from value sets and dense elimination only.
#![allow(dead_code)]

/// Oracle matrices have entries in {-1, 0, 1}; elimination runs modulo the
/// Mersenne prime 2^61 - 1. Every matrix built here is the transpose of a
/// graph incidence matrix, whose rank is the same in every characteristic.
const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn inv(a: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a, P - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base);
        }
        base = mulmod(base, base);
        e >>= 1;
    }
    acc
}

type Q = u64;
const ONE: u64 = 1;
const NEG_ONE: u64 = P - 1;

/// Membership in `<gens>` by direct dynamic programming.
pub fn member_table(gens: &[i64], n: usize) -> Vec<bool> {
    let mut m = vec![false; n];
    m[0] = true;
    for v in 1..n {
        m[v] = gens.iter().any(|&g| (g as usize) <= v && m[v - g as usize]);
    }
    m
}

pub struct Oracle {
    pub gens: Vec<i64>,
    table: Vec<bool>,
}

impl Oracle {
    pub fn new(gens: &[i64]) -> Self {
        Oracle {
            gens: gens.to_vec(),
            table: member_table(gens, 2000),
        }
    }

    pub fn in_s(&self, v: i64) -> bool {
        v >= 0 && self.table[v as usize]
    }

    /// `v ∈ ⋃ (g + S)`.
    pub fn in_ideal(&self, ideal: &[i64], v: i64) -> bool {
        ideal.iter().any(|&g| self.in_s(v - g))
    }
}

/// Rank by dense Gaussian elimination.
pub fn dense_rank(mut rows: Vec<Vec<Q>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_inv = inv(rows[rank][col]);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = mulmod(rows[r][col], pivot_inv);
                for c in col..ncols {
                    let x = mulmod(rows[rank][c], f);
                    rows[r][c] = (rows[r][c] + P - x) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim_k (I ⊗_R J)_n`: pairs `(a, b)` of values with `a + b = n`
/// modulo the relations `(a + g, b) = (a, b + g)` for generators `g`.
pub fn tensor_dim(o: &Oracle, i: &[i64], j: &[i64], n: i64) -> usize {
    let (imin, jmin) = (*i.iter().min().unwrap(), *j.iter().min().unwrap());
    let pairs: Vec<i64> = (imin..=n - jmin)
        .filter(|&a| o.in_ideal(i, a) && o.in_ideal(j, n - a))
        .collect();
    if pairs.is_empty() {
        return 0;
    }
    let pos = |a: i64| pairs.iter().position(|&x| x == a);
    let mut rows = Vec::new();
    for &a in &pairs {
        for &g in &o.gens {
            // (a, n - a) with a = a' + g and n - a + g = b' + g
            if o.in_ideal(i, a - g) {
                if let (Some(p), Some(q)) = (pos(a), pos(a - g)) {
                    let mut row = vec![0; pairs.len()];
                    row[p] = ONE;
                    row[q] = NEG_ONE;
                    rows.push(row);
                }
            }
        }
    }
    pairs.len() - if rows.is_empty() { 0 } else { dense_rank(rows) }
}

/// Number of minimal syzygies of `(t^g1, ..., t^gm)` in degree `n`:
/// `dim K_n - dim span(K_(n - a) : a generator of S)`, with
/// `K_n = {c : sum c_i = 0, c_i = 0 unless n - g_i ∈ S}`.
pub fn syzygy_count(o: &Oracle, ideal: &[i64], n: i64) -> usize {
    let m = ideal.len();
    let kernel_basis = |d: i64| -> Vec<Vec<Q>> {
        let present: Vec<usize> = (0..m).filter(|&k| o.in_s(d - ideal[k])).collect();
        present
            .windows(2)
            .map(|w| {
                let mut v = vec![0; m];
                v[w[0]] = ONE;
                v[w[1]] = NEG_ONE;
                v
            })
            .collect()
    };
    let k_n = kernel_basis(n).len();
    let lower: Vec<Vec<Q>> = o.gens.iter().flat_map(|&a| kernel_basis(n - a)).collect();
    let r = if lower.is_empty() {
        0
    } else {
        dense_rank(lower)
    };
    k_n - r
}
