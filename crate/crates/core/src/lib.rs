//! Exact ideal theory and graded homological algebra over numerical
//! semigroup rings `R = k[[t^a1, ..., t^an]]`.
//!
//! * [`semigroup`] and [`ideal`]: value-set combinatorics of `S` and of
//!   monomial fractional ideals (colons, duals, canonical ideal, closure,
//!   weak m-fullness).
//! * [`element`]: non-monomial ring elements and m-fullness certificates.
//! * [`homology`]: graded presentations, syzygies, Tor, tensor products and
//!   torsion lengths over `k[S]`.
//! * [`lab`]: reproduction of worked examples, property suites and
//!   enumeration-driven searches.
//!
//! Coefficient arithmetic is generic over [`Field`]; [`Rational`] and
//! [`Fp32003`] are the two concrete choices used throughout.

pub mod config;
pub mod element;
pub mod error;
pub mod field;
pub mod homology;
pub mod ideal;
pub mod lab;
pub mod linalg;
pub mod parse;
pub mod semigroup;

pub use config::{Config, DegreeBound, FieldChoice};
pub use element::{MFullCertificate, SubspaceDescription, TruncatedElement};
pub use error::{Error, Result};
pub use field::{Field, Fp, Fp32003, Rational};
pub use homology::{GradedFreeModule, GradedMap, GradedPresentation, TorLength, TorReport};
pub use ideal::ValueIdeal;
pub use semigroup::NumericalSemigroup;

/// Elements with rational coefficients.
pub type QElement = TruncatedElement<Rational>;
/// Elements over the default prime field.
pub type FpElement = TruncatedElement<Fp32003>;
/// Graded maps with rational coefficients.
pub type QMap = GradedMap<Rational>;
/// Graded presentations with rational coefficients.
pub type QPresentation = GradedPresentation<Rational>;

use std::sync::Arc;

/// Convenience constructor returning a shareable semigroup.
pub fn semigroup(gens: &[i64]) -> Result<Arc<NumericalSemigroup>> {
    NumericalSemigroup::new(gens).map(Arc::new)
}
