use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ideal::ValueIdeal;
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFilter {
    pub reflexive_only: bool,
    pub weakly_m_full_only: bool,
    pub non_principal_only: bool,
    pub max_gens: Option<usize>,
}

impl IdealFilter {
    pub fn accepts(&self, i: &ValueIdeal) -> bool {
        (!self.reflexive_only || i.is_reflexive())
            && (!self.weakly_m_full_only || i.is_weakly_m_full())
            && (!self.non_principal_only || !i.is_principal())
            && self.max_gens.is_none_or(|k| i.mu() <= k)
    }
}

/// Every monomial ideal of `R` whose minimal generators lie in
/// `S ∩ [1, cap]`, in lexicographic order of generator lists.
///
/// Minimal generating sets are exactly the antichains of `S` under
/// `a ≤ b ⟺ b - a ∈ S`, so a depth-first walk over antichains visits
/// each ideal once and in order.
pub fn enumerate_ideals(
    s: &Arc<NumericalSemigroup>,
    cap: i64,
    filter: &IdealFilter,
) -> Vec<ValueIdeal> {
    let elems: Vec<i64> = s.elements_in(1, cap + 1).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    walk(s, &elems, 0, &mut chosen, filter, &mut out);
    out
}

fn walk(
    s: &Arc<NumericalSemigroup>,
    elems: &[i64],
    start: usize,
    chosen: &mut Vec<i64>,
    filter: &IdealFilter,
    out: &mut Vec<ValueIdeal>,
) {
    for k in start..elems.len() {
        let v = elems[k];
        if chosen.iter().any(|&a| s.is_member(v - a)) {
            continue;
        }
        chosen.push(v);
        if filter.max_gens.is_none_or(|m| chosen.len() <= m) {
            let i = ValueIdeal::from_gens(s, chosen).expect("nonempty generator list");
            if filter.accepts(&i) {
                out.push(i);
            }
            walk(s, elems, k + 1, chosen, filter, out);
        }
        chosen.pop();
    }
}

/// All numerical semigroups with Frobenius number at most `max_frobenius`
/// and every minimal generator at most `max_generator`, ordered by
/// generator list. Walks the tree in which the children of `S` are
/// `S \ {g}` for minimal generators `g > F(S)`.
pub fn enumerate_semigroups(
    max_generator: i64,
    max_frobenius: i64,
) -> Result<Vec<NumericalSemigroup>> {
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut stack = vec![NumericalSemigroup::new(&[1])?];
    while let Some(s) = stack.pop() {
        if s.largest_generator() <= max_generator {
            found.insert(s.generators().to_vec());
        }
        for &g in s.generators() {
            if g <= s.frobenius() || g > max_frobenius {
                continue;
            }
            // S \ {g} has conductor g + 1, so its elements below hi generate it.
            let hi = g + s.largest_generator() + s.conductor().max(g) + 1;
            let gens: Vec<i64> = s.elements_in(1, hi).filter(|&v| v != g).collect();
            stack.push(NumericalSemigroup::new(&gens)?);
        }
    }
    found
        .into_iter()
        .map(|g| NumericalSemigroup::new(&g))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(g: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::new(g).unwrap())
    }

    fn gens(v: &[ValueIdeal]) -> Vec<Vec<i64>> {
        v.iter().map(|i| i.gens().to_vec()).collect()
    }

    #[test]
    fn small_enumerations() {
        let f = IdealFilter::default();
        assert_eq!(
            gens(&enumerate_ideals(&ns(&[2, 3]), 3, &f)),
            vec![vec![2], vec![2, 3], vec![3]]
        );
        assert!(enumerate_ideals(&ns(&[4, 5, 6]), 0, &f).is_empty());
        let e = gens(&enumerate_ideals(&ns(&[4, 5, 6]), 7, &f));
        assert_eq!(
            e,
            vec![
                vec![4],
                vec![4, 5],
                vec![4, 5, 6],
                vec![4, 6],
                vec![5],
                vec![5, 6],
                vec![6]
            ]
        );
    }

    #[test]
    fn matches_powerset_oracle() {
        let s = ns(&[2, 3]);
        let cap = 5;
        let elems: Vec<i64> = s.elements_in(1, cap + 1).collect();
        let mut oracle: BTreeSet<Vec<i64>> = BTreeSet::new();
        for mask in 1u32..(1 << elems.len()) {
            let sub: Vec<i64> = (0..elems.len())
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| elems[k])
                .collect();
            let i = ValueIdeal::from_gens(&s, &sub).unwrap();
            oracle.insert(i.gens().to_vec());
        }
        let got = gens(&enumerate_ideals(&s, cap, &IdealFilter::default()));
        let mut sorted = got.clone();
        sorted.sort();
        assert_eq!(sorted, got, "canonical order");
        assert_eq!(got.into_iter().collect::<BTreeSet<_>>(), oracle);
    }

    #[test]
    fn semigroups_by_frobenius() {
        // Counts by Frobenius number -1..=7; nothing has Frobenius number 0.
        let all = enumerate_semigroups(i64::MAX, 7).unwrap();
        let mut by_f = [0usize; 9];
        for s in &all {
            by_f[(s.frobenius() + 1) as usize] += 1;
        }
        assert_eq!(&by_f[..], &[1, 0, 1, 1, 2, 2, 5, 4, 11][..]);
    }
}
