use super::GradedPresentation;
use crate::config::DegreeBound;
use crate::error::Result;
use crate::field::Field;

/// `Tr M = coker(F0* -> F1*)` for a minimal presentation `F1 -> F0` of `M`.
pub fn auslander_transpose<F: Field>(m: &GradedPresentation<F>) -> GradedPresentation<F> {
    let min = m.minimalize();
    GradedPresentation::new(min.map().transpose()).minimalize()
}

/// `pd M <= 1`, i.e. the minimal presentation map is injective.
pub fn pd_le_one<F: Field>(m: &GradedPresentation<F>, bound: DegreeBound) -> Result<bool> {
    let min = m.minimalize();
    Ok(min.map().syzygy(bound)?.source().rank() == 0)
}
