//! Degreewise kernels and minimal generators of syzygy modules.

use std::sync::Arc;

use super::{check_bound, GradedFreeModule, GradedMap, GradedPresentation};
use crate::config::DegreeBound;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::ValueIdeal;
use crate::linalg::{kernel, Echelon, SparseVec};
use crate::semigroup::NumericalSemigroup;

/// Minimal homogeneous generators of the kernel of the map with the given
/// scalar columns on `source`, as `(degree, vector over source indices)`.
///
/// Completeness: from `N0 = max source shift + conductor` on, the degree-`n`
/// matrix is the full scalar matrix `C`, so `K_n = ker C`. For `n >= N0 + e`,
/// `t^e K_{n-e}` already fills `K_n`, hence no generator lives in degree
/// `>= N0 + e`. Degrees `min shift ..< N0 + e` are scanned exhaustively.
pub fn kernel_generators<F: Field>(
    s: &Arc<NumericalSemigroup>,
    source: &GradedFreeModule,
    columns: &[SparseVec<F>],
    nrows: usize,
    bound: DegreeBound,
) -> Result<Vec<(i64, SparseVec<F>)>> {
    let (Some(lo), Some(hi)) = (source.min_shift(), source.max_shift()) else {
        return Ok(Vec::new());
    };
    let last = hi + s.conductor() + s.multiplicity() - 1;
    check_bound(bound, s, source.max_abs_shift(), last)?;

    let mut gens: Vec<(i64, SparseVec<F>)> = Vec::new();
    for n in lo..=last {
        let present = source.present_in(s, n);
        if present.is_empty() {
            continue;
        }
        let cols: Vec<SparseVec<F>> = present.iter().map(|&j| columns[j].clone()).collect();
        let ker = kernel(&cols, nrows);
        if ker.is_empty() {
            continue;
        }
        let mut span = Echelon::new();
        for (d, g) in &gens {
            if s.is_member(n - d) {
                span.insert(g.clone());
            }
        }
        for v in ker {
            let v: SparseVec<F> = v.into_iter().map(|(k, c)| (present[k], c)).collect();
            if span.insert(v.clone()) {
                gens.push((n, v));
            }
        }
    }
    Ok(gens)
}

/// Minimal graded presentation of a fractional ideal `I`, generated in the
/// degrees of its minimal generators. Relations are the syzygies of
/// `(t^g1, ..., t^gm)`, found as the coefficient-sum-zero kernel in each
/// degree.
pub fn present_ideal<F: Field>(
    ideal: &ValueIdeal,
    bound: DegreeBound,
) -> Result<GradedPresentation<F>> {
    let s = ideal.semigroup();
    let gens = GradedFreeModule::new(ideal.gens().to_vec());
    let ones: Vec<SparseVec<F>> = vec![vec![(0, F::one())]; gens.rank()];
    let syz = kernel_generators(s, &gens, &ones, 1, bound)?;
    let shifts = syz.iter().map(|(d, _)| *d).collect();
    let columns = syz.into_iter().map(|(_, v)| v).collect();
    let map = GradedMap::new(s, GradedFreeModule::new(shifts), gens, columns)?;
    Ok(GradedPresentation::new(map))
}

/// `R/I` for an integral ideal, presented as `coker(⊕ R(-g) -> R)`.
pub fn present_quotient<F: Field>(ideal: &ValueIdeal) -> Result<GradedPresentation<F>> {
    if !ideal.is_integral() {
        return Err(Error::NotIntegral);
    }
    let s = ideal.semigroup();
    let columns = vec![vec![(0, F::one())]; ideal.gens().len()];
    let map = GradedMap::new(
        s,
        GradedFreeModule::new(ideal.gens().to_vec()),
        GradedFreeModule::new(vec![0]),
        columns,
    )?;
    Ok(GradedPresentation::new(map))
}

/// Differentials `d_1, ..., d_len` of a minimal free resolution of the
/// module presented by `p` (which is minimalized first). `d_1` is the
/// presentation map.
pub fn resolve<F: Field>(
    p: &GradedPresentation<F>,
    len: usize,
    bound: DegreeBound,
) -> Result<Vec<GradedMap<F>>> {
    let mut maps = vec![p.minimalize().map().clone()];
    while maps.len() < len {
        let next = maps.last().unwrap().syzygy(bound)?;
        maps.push(next);
    }
    maps.truncate(len.max(1));
    Ok(maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    type Q = Rational;

    fn ns(g: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::new(g).unwrap())
    }

    #[test]
    fn maximal_ideal_of_three_generated() {
        let s = ns(&[4, 5, 6]);
        let m = ValueIdeal::maximal(&s);
        let p = present_ideal::<Q>(&m, DegreeBound::Auto).unwrap();
        assert!(!p.has_unit_entries());
        // Rank check: the presentation has rank one, so its Hilbert
        // function is 1 from the conductor of m onward.
        let h = p.hilbert_range(0, 30);
        for (n, &d) in h.iter().enumerate() {
            assert_eq!(d, m.contains(n as i64) as usize, "degree {n}");
        }
    }

    #[test]
    fn relations_are_homogeneous_and_exact() {
        let s = ns(&[7, 9, 11, 13]);
        let i = ValueIdeal::from_gens(&s, &[0, 1]).unwrap();
        let p = present_ideal::<Q>(&i, DegreeBound::Auto).unwrap();
        // (R + Rt) over S: generator relations t^a e1 = t^(a-1) e0 for a - 1 in S.
        let h = p.hilbert_range(-5, 60);
        for (k, &d) in h.iter().enumerate() {
            let n = k as i64 - 5;
            assert_eq!(d, i.contains(n) as usize, "degree {n}");
        }
    }

    #[test]
    fn fixed_bound_too_small() {
        let s = ns(&[4, 5, 6]);
        let m = ValueIdeal::maximal(&s);
        let err = present_ideal::<Q>(&m, DegreeBound::Fixed(5)).unwrap_err();
        assert!(matches!(err, Error::BoundExceeded { .. }));
    }

    #[test]
    fn resolution_is_a_complex() {
        let s = ns(&[4, 5, 6]);
        let i = ValueIdeal::from_gens(&s, &[4, 11]).unwrap();
        let p = present_ideal::<Fp<32003>>(&i, DegreeBound::Auto).unwrap();
        let res = resolve(&p, 3, DegreeBound::Auto).unwrap();
        assert_eq!(res.len(), 3);
        for w in res.windows(2) {
            assert!(w[0].compose(&w[1]).unwrap().is_zero());
        }
    }

    #[test]
    fn dvr_ideals_are_free() {
        let s = ns(&[1]);
        let i = ValueIdeal::from_gens(&s, &[3]).unwrap();
        let p = present_ideal::<Q>(&i, DegreeBound::Auto).unwrap();
        assert_eq!(p.relations().rank(), 0);
    }
}
