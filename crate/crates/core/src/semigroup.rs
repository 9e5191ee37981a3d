//! Numerical semigroups `S = <a1, ..., an>` and their invariants.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A numerical semigroup, i.e. the value semigroup of `k[[t^a1, ..., t^an]]`.
///
/// All invariants are computed once on construction; the type is immutable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    frobenius: i64,
    /// Membership of `0..conductor`; everything from the conductor on is in `S`.
    small: Vec<bool>,
    gaps: Vec<i64>,
    pf_numbers: Vec<i64>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, discarding redundant generators.
    pub fn new(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidGenerators("empty generator list".into()));
        }
        if let Some(bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::InvalidGenerators(format!(
                "generator {bad} is not positive"
            )));
        }
        let g = gens.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::GcdNotOne(g as u64));
        }

        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        let apery = apery_by_dijkstra(&sorted);
        let e = sorted[0];
        let frobenius = apery.iter().max().copied().unwrap_or(0) - e;
        let conductor = frobenius + 1;
        let small: Vec<bool> = (0..conductor.max(0))
            .map(|v| v >= apery[(v % e) as usize])
            .collect();
        let member = |v: i64| v >= 0 && (v >= conductor || small[v as usize]);

        // g is redundant iff it is a sum of two nonzero elements.
        let generators: Vec<i64> = sorted
            .iter()
            .copied()
            .filter(|&g| !(1..g).any(|s| member(s) && member(g - s)))
            .collect();

        let gaps: Vec<i64> = (1..conductor).filter(|&v| !member(v)).collect();
        let pf_numbers = if gaps.is_empty() {
            vec![-1]
        } else {
            gaps.iter()
                .copied()
                .filter(|&x| generators.iter().all(|&a| member(x + a)))
                .collect()
        };

        Ok(NumericalSemigroup {
            generators,
            frobenius,
            small,
            gaps,
            pf_numbers,
        })
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Largest integer not in `S`; `-1` for `S = N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn pf_numbers(&self) -> &[i64] {
        &self.pf_numbers
    }

    /// Smallest nonzero element `e(S)`.
    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn embdim(&self) -> usize {
        self.generators.len()
    }

    /// Cohen-Macaulay type of `k[[S]]`, the number of pseudo-Frobenius numbers.
    pub fn cm_type(&self) -> usize {
        self.pf_numbers.len()
    }

    pub fn largest_generator(&self) -> i64 {
        *self.generators.last().expect("nonempty generators")
    }

    pub fn is_member(&self, v: i64) -> bool {
        if v < 0 {
            false
        } else if v >= self.conductor() {
            true
        } else {
            self.small[v as usize]
        }
    }

    /// `S = N`, i.e. the ring is a DVR.
    pub fn is_dvr(&self) -> bool {
        self.frobenius < 0
    }

    pub fn is_symmetric(&self) -> bool {
        self.cm_type() == 1
    }

    /// `e(S) = embdim(S)`, which is minimal multiplicity in dimension one.
    pub fn has_minimal_multiplicity(&self) -> bool {
        self.multiplicity() == self.embdim() as i64
    }

    /// Apéry set with respect to `n`, sorted ascending.
    pub fn apery(&self, n: i64) -> Result<Vec<i64>> {
        if n <= 0 || !self.is_member(n) {
            return Err(Error::NotAMember { value: n });
        }
        let mut least = vec![None; n as usize];
        let mut found = 0;
        let mut v = 0;
        while found < n {
            if self.is_member(v) {
                let r = (v % n) as usize;
                if least[r].is_none() {
                    least[r] = Some(v);
                    found += 1;
                }
            }
            v += 1;
        }
        let mut out: Vec<i64> = least.into_iter().map(|x| x.unwrap()).collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Elements of `S` in `[lo, hi)`.
    pub fn elements_in(&self, lo: i64, hi: i64) -> impl Iterator<Item = i64> + '_ {
        (lo.max(0)..hi).filter(move |&v| self.is_member(v))
    }

    pub fn info(&self) -> SemigroupInfo {
        SemigroupInfo {
            generators: self.generators.clone(),
            frobenius: self.frobenius,
            conductor: self.conductor(),
            gaps: self.gaps.clone(),
            pf_numbers: self.pf_numbers.clone(),
            apery: self
                .apery(self.multiplicity())
                .expect("multiplicity is a member"),
            multiplicity: self.multiplicity(),
            embdim: self.embdim(),
            cm_type: self.cm_type(),
            minimal_multiplicity: self.has_minimal_multiplicity(),
            gorenstein: self.is_symmetric(),
        }
    }
}

/// Least element of each residue class modulo the smallest generator,
/// via shortest paths on the residue graph.
fn apery_by_dijkstra(sorted: &[i64]) -> Vec<i64> {
    let e = sorted[0];
    let n = e as usize;
    let mut dist = vec![i64::MAX; n];
    let mut done = vec![false; n];
    dist[0] = 0;
    for _ in 0..n {
        let Some(u) = (0..n)
            .filter(|&r| !done[r] && dist[r] != i64::MAX)
            .min_by_key(|&r| dist[r])
        else {
            break;
        };
        done[u] = true;
        for &g in &sorted[1..] {
            let w = (u + (g % e) as usize) % n;
            let cand = dist[u] + g;
            if cand < dist[w] {
                dist[w] = cand;
            }
        }
    }
    dist
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}

/// Serializable summary of a semigroup's invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupInfo {
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub conductor: i64,
    pub gaps: Vec<i64>,
    pub pf_numbers: Vec<i64>,
    pub apery: Vec<i64>,
    pub multiplicity: i64,
    pub embdim: usize,
    pub cm_type: usize,
    pub minimal_multiplicity: bool,
    pub gorenstein: bool,
}
