//! Tensor products of presented modules and torsion of `I ⊗ J`.

use serde::{Deserialize, Serialize};

use super::{check_bound, present_ideal, GradedFreeModule, GradedMap, GradedPresentation};
use crate::config::DegreeBound;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::ValueIdeal;

/// `coker(F1 ⊗ G0 ⊕ F0 ⊗ G1 -> F0 ⊗ G0)`, not minimalized.
pub(crate) fn tensor_raw<F: Field>(
    m: &GradedPresentation<F>,
    n: &GradedPresentation<F>,
) -> GradedPresentation<F> {
    let left = m.map().tensor_identity(n.generators());
    let right = n.map().identity_tensor(m.generators());
    debug_assert_eq!(left.target(), right.target());
    let mut shifts = left.source().shifts.clone();
    shifts.extend_from_slice(&right.source().shifts);
    let mut columns = left.columns().to_vec();
    columns.extend_from_slice(right.columns());
    let map = GradedMap::new(
        m.semigroup(),
        GradedFreeModule::new(shifts),
        left.target().clone(),
        columns,
    )
    .expect("tensor of homogeneous maps is homogeneous");
    GradedPresentation::new(map)
}

/// Minimal presentation of `M ⊗ N`.
pub fn tensor_presentation<F: Field>(
    m: &GradedPresentation<F>,
    n: &GradedPresentation<F>,
) -> GradedPresentation<F> {
    tensor_raw(&m.minimalize(), &n.minimalize()).minimalize()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionReport {
    /// `length T(I ⊗ J)`.
    pub length: u64,
    /// Degrees carrying torsion, with their dimensions.
    pub graded: Vec<(i64, u64)>,
    pub bound_used: i64,
}

/// Length of the torsion submodule of `I ⊗_R J`.
///
/// `I ⊗ J -> IJ` is onto with torsion kernel, so the length is
/// `sum_n dim (I ⊗ J)_n - [n in IJ]`. Both sides are constant from the
/// stable degree of the tensor presentation on, where they must agree.
pub fn torsion_length<F: Field>(
    i: &ValueIdeal,
    j: &ValueIdeal,
    bound: DegreeBound,
) -> Result<TorsionReport> {
    if i.semigroup().generators() != j.semigroup().generators() {
        return Err(Error::SemigroupMismatch);
    }
    let s = i.semigroup();
    let pi = present_ideal::<F>(i, bound)?;
    let pj = present_ideal::<F>(j, bound)?;
    let t = tensor_raw(&pi, &pj);
    let ij = i.product(j);
    let lo = i.min() + j.min();
    let stable = t.stable_degree();
    let hi = stable + s.multiplicity();
    let bound_used = check_bound(bound, s, t.max_abs_shift(), hi)?;

    let h = t.hilbert_range(lo, hi);
    let mut length = 0u64;
    let mut graded = Vec::new();
    for (k, &d) in h.iter().enumerate() {
        let n = lo + k as i64;
        let expected = ij.contains(n) as usize;
        assert!(
            d >= expected,
            "tensor product smaller than product in degree {n}"
        );
        if n >= stable {
            assert_eq!(
                d, expected,
                "torsion persists past the stable degree {stable}"
            );
        }
        if d > expected {
            let extra = (d - expected) as u64;
            length += extra;
            graded.push((n, extra));
        }
    }
    Ok(TorsionReport {
        length,
        graded,
        bound_used,
    })
}

/// Whether the Hilbert function of `p` is that of a shift of `ideal`.
/// For a torsion-free rank-one module this is isomorphism with `ideal`.
pub fn hilbert_iso_to_ideal<F: Field>(p: &GradedPresentation<F>, ideal: &ValueIdeal) -> bool {
    let Some(lo) = p.generators().min_shift() else {
        return false;
    };
    let s = p.semigroup();
    let hi = p
        .stable_degree()
        .max(lo + ideal.stable_from() - ideal.min())
        + s.multiplicity();
    let h = p.hilbert_range(lo, hi);
    let Some(first) = h.iter().position(|&d| d > 0) else {
        return false;
    };
    let shift = lo + first as i64 - ideal.min();
    h.iter().enumerate().all(|(k, &d)| {
        let n = lo + k as i64;
        d == ideal.contains(n - shift) as usize
    })
}
