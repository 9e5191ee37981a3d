//! Non-monomial ring elements, colon-by-element and m-fullness.
//!
//! An ideal `I` is m-full when `mI : x = I` for some `x` in `m`. The
//! quantifier over all of `m` cannot be decided on value sets alone, so
//! [`is_m_full`] combines two sound refutations with a witness search.
//!
//! # Exactness of the colon computation
//!
//! For `J` monomial and `x` known up to `t^T` with `T >= stable_from(J)`,
//! the set `C = {r in R : r x in J}` is a k-subspace containing every
//! series of order `>= B`, where `B >= conductor` and `B + ord(x) >=
//! stable_from(J)`: all terms of such `r x` land in `J`. Below `B` only
//! finitely many monomials of `R` exist, and `r x` is fully known below
//! `stable_from(J)` (unknown terms have value `>= T`). Membership of `r x`
//! in `J` is termwise, so `C / t^B k[[t]]` is the kernel of a finite
//! matrix whose rows are the non-values of `J` below `stable_from(J)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::ValueIdeal;
use crate::linalg::{kernel, Echelon, SparseVec};
use crate::semigroup::NumericalSemigroup;

/// Truncation used for elements known exactly.
pub const EXACT: i64 = i64::MAX / 8;

/// A finite `k`-linear combination of powers of `t`, known below the
/// truncation value; terms at or above it are unknown.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedElement<F> {
    semigroup: Arc<NumericalSemigroup>,
    terms: BTreeMap<i64, F>,
    truncation: i64,
}

impl<F: Field> TruncatedElement<F> {
    pub fn new(
        semigroup: &Arc<NumericalSemigroup>,
        terms: impl IntoIterator<Item = (i64, F)>,
        truncation: i64,
    ) -> Self {
        let mut map: BTreeMap<i64, F> = BTreeMap::new();
        for (v, c) in terms {
            if v >= truncation {
                continue;
            }
            let slot = map.entry(v).or_insert_with(F::zero);
            *slot = slot.clone() + c;
        }
        map.retain(|_, c| !c.is_zero());
        TruncatedElement {
            semigroup: Arc::clone(semigroup),
            terms: map,
            truncation,
        }
    }

    /// An exactly known polynomial in `t`.
    pub fn polynomial(
        semigroup: &Arc<NumericalSemigroup>,
        terms: impl IntoIterator<Item = (i64, F)>,
    ) -> Self {
        Self::new(semigroup, terms, EXACT)
    }

    pub fn monomial(semigroup: &Arc<NumericalSemigroup>, value: i64, coef: F) -> Self {
        Self::polynomial(semigroup, [(value, coef)])
    }

    pub fn zero(semigroup: &Arc<NumericalSemigroup>) -> Self {
        Self::polynomial(semigroup, [])
    }

    pub fn one(semigroup: &Arc<NumericalSemigroup>) -> Self {
        Self::monomial(semigroup, 0, F::one())
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &F)> {
        self.terms.iter().map(|(v, c)| (*v, c))
    }

    pub fn truncation(&self) -> i64 {
        self.truncation
    }

    pub fn is_exact(&self) -> bool {
        self.truncation >= EXACT
    }

    /// True when no term is known; the element may still be nonzero above
    /// the truncation.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Order of the element; the truncation if no term is known.
    pub fn order(&self) -> i64 {
        self.terms.keys().next().copied().unwrap_or(self.truncation)
    }

    /// All known terms have values in `S`.
    pub fn is_ring_element(&self) -> bool {
        self.terms.keys().all(|&v| self.semigroup.is_member(v))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.semigroup.generators() != other.semigroup.generators() {
            return Err(Error::SemigroupMismatch);
        }
        // Unknown tails contribute from ord(a) + T_b and ord(b) + T_a on.
        let truncation = if self.is_exact() && other.is_exact() {
            EXACT
        } else {
            (self.order().saturating_add(other.truncation))
                .min(other.order().saturating_add(self.truncation))
                .min(EXACT)
        };
        let terms = self.terms.iter().flat_map(|(v, a)| {
            other
                .terms
                .iter()
                .map(move |(w, b)| (v + w, a.clone() * b.clone()))
        });
        Ok(Self::new(&self.semigroup, terms, truncation))
    }

    /// Termwise membership in a monomial ideal.
    pub fn member_of(&self, ideal: &ValueIdeal) -> Result<bool> {
        if self.truncation < ideal.stable_from() {
            return Err(Error::TruncationTooLow {
                truncation: self.truncation,
                required: ideal.stable_from(),
            });
        }
        Ok(self.terms.keys().all(|&v| ideal.contains(v)))
    }
}

impl<F: Field> fmt::Display for TruncatedElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        for (i, (v, c)) in self.terms.iter().enumerate() {
            let txt = c.to_string();
            let (neg, mag) = match txt.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, txt),
            };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *v == 0 {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "t^{v}")?;
            } else {
                write!(f, "{mag}*t^{v}")?;
            }
        }
        if !self.is_exact() {
            write!(f, " + O(t^{})", self.truncation)?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for TruncatedElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedElement({self})")
    }
}

/// The subspace `{r in R : r x in J}`: a finite basis of representatives
/// below `bound`, plus every series of order `>= bound`.
#[derive(Clone, Debug)]
pub struct SubspaceDescription<F> {
    semigroup: Arc<NumericalSemigroup>,
    bound: i64,
    /// Monomial basis of `R` below the bound, ascending.
    monomials: Vec<i64>,
    basis: Vec<SparseVec<F>>,
    echelon: Echelon<F>,
}

impl<F: Field> SubspaceDescription<F> {
    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// Dimension of the subspace modulo series of order `>= bound`.
    pub fn dim_below_bound(&self) -> usize {
        self.basis.len()
    }

    /// Basis representatives, each truncated at the bound.
    pub fn basis(&self) -> Vec<TruncatedElement<F>> {
        self.basis
            .iter()
            .map(|v| {
                TruncatedElement::new(
                    &self.semigroup,
                    v.iter().map(|(i, c)| (self.monomials[*i], c.clone())),
                    self.bound,
                )
            })
            .collect()
    }

    fn coordinates(&self, r: &TruncatedElement<F>) -> Option<SparseVec<F>> {
        let mut out = Vec::new();
        for (v, c) in r.terms() {
            if v >= self.bound {
                break;
            }
            let idx = self.monomials.binary_search(&v).ok()?;
            out.push((idx, c.clone()));
        }
        Some(out)
    }

    /// Membership of a ring element known at least up to the bound.
    pub fn contains(&self, r: &TruncatedElement<F>) -> Result<bool> {
        if r.truncation() < self.bound {
            return Err(Error::TruncationTooLow {
                truncation: r.truncation(),
                required: self.bound,
            });
        }
        Ok(match self.coordinates(r) {
            Some(v) => self.echelon.contains(v),
            None => false,
        })
    }

    pub fn contains_monomial(&self, v: i64) -> bool {
        if v >= self.bound {
            return true;
        }
        match self.monomials.binary_search(&v) {
            Ok(idx) => self.echelon.contains(vec![(idx, F::one())]),
            Err(_) => false,
        }
    }

    /// Equality with a monomial ideal of `R`.
    pub fn equals_ideal(&self, ideal: &ValueIdeal) -> bool {
        if !ideal.is_integral() || ideal.stable_from() > self.bound {
            return false;
        }
        let below: Vec<i64> = ideal.values_in(0, self.bound).collect();
        below.len() == self.dim_below_bound() && below.iter().all(|&v| self.contains_monomial(v))
    }
}

/// `J : x` inside `R`, for an integral monomial ideal `J`.
pub fn colon_by_element<F: Field>(
    j: &ValueIdeal,
    x: &TruncatedElement<F>,
) -> Result<SubspaceDescription<F>> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !j.is_integral() {
        return Err(Error::NotIntegral);
    }
    if x.truncation() < j.stable_from() {
        return Err(Error::TruncationTooLow {
            truncation: x.truncation(),
            required: j.stable_from(),
        });
    }
    let s = j.semigroup();
    let stable = j.stable_from();
    let bound = (stable + s.conductor() + s.largest_generator()).max(stable - x.order());
    let monomials: Vec<i64> = s.elements_in(0, bound).collect();

    let holes: Vec<i64> = (x.order().min(0)..stable)
        .filter(|&w| !j.contains(w))
        .collect();
    let columns: Vec<SparseVec<F>> = monomials
        .iter()
        .map(|&r| {
            x.terms()
                .filter_map(|(v, c)| {
                    holes
                        .binary_search(&(r + v))
                        .ok()
                        .map(|row| (row, c.clone()))
                })
                .collect()
        })
        .collect();
    let basis = kernel(&columns, holes.len());
    let mut echelon = Echelon::new();
    for v in &basis {
        echelon.insert(v.clone());
    }
    Ok(SubspaceDescription {
        semigroup: Arc::clone(s),
        bound,
        monomials,
        basis,
        echelon,
    })
}

/// Outcome of the m-fullness decision procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MFullCertificate<F: Field> {
    /// `mI : x = I` for the stored `x`.
    MFullWitness(TruncatedElement<F>),
    /// `μ(I) < embdim(S)`, impossible for m-full ideals by Goto's inequality.
    NotMFullByMu { mu: usize, embdim: usize },
    /// For every order `a` an element of `m` can have, the colength of
    /// `mI + xR` is at most `max_colength < μ(I)`, whereas `mI : x = I`
    /// forces that colength to equal `μ(I)`.
    NotMFullByColength { max_colength: u64, mu: usize },
    /// No certificate either way after the given number of random trials.
    Undetermined { trials: usize },
}

impl<F: Field> MFullCertificate<F> {
    pub fn kind(&self) -> &'static str {
        match self {
            MFullCertificate::MFullWitness(_) => "MFullWitness",
            MFullCertificate::NotMFullByMu { .. } => "NotMFullByMu",
            MFullCertificate::NotMFullByColength { .. } => "NotMFullByColength",
            MFullCertificate::Undetermined { .. } => "Undetermined",
        }
    }

    pub fn is_m_full(&self) -> Option<bool> {
        match self {
            MFullCertificate::MFullWitness(_) => Some(true),
            MFullCertificate::NotMFullByMu { .. } | MFullCertificate::NotMFullByColength { .. } => {
                Some(false)
            }
            MFullCertificate::Undetermined { .. } => None,
        }
    }

    /// Re-checks a witness; `None` for verdicts without one.
    pub fn replay(&self, ideal: &ValueIdeal) -> Option<bool> {
        match self {
            MFullCertificate::MFullWitness(x) => Some(witnesses(ideal, x)),
            _ => None,
        }
    }

    pub fn summary(&self) -> MFullSummary {
        let (witness, trials) = match self {
            MFullCertificate::MFullWitness(x) => (Some(x.to_string()), None),
            MFullCertificate::Undetermined { trials } => (None, Some(*trials)),
            _ => (None, None),
        };
        MFullSummary {
            verdict: self.kind().to_string(),
            witness,
            trials,
        }
    }
}

/// Field-independent serializable view of a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MFullSummary {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trials: Option<usize>,
}

fn witnesses<F: Field>(ideal: &ValueIdeal, x: &TruncatedElement<F>) -> bool {
    let m = ValueIdeal::maximal(ideal.semigroup());
    let mi = m.product(ideal);
    match colon_by_element(&mi, x) {
        Ok(c) => c.equals_ideal(ideal),
        Err(_) => false,
    }
}

/// Upper bound on `length(R / (mI + xR))` over all `x` of order `a`.
fn colength_bound(mi: &ValueIdeal, a: i64) -> u64 {
    let s = mi.semigroup();
    s.elements_in(0, mi.stable_from())
        .filter(|&v| !mi.contains(v) && !s.is_member(v - a))
        .count() as u64
}

fn derived_seed(seed: u64, trial: u64) -> u64 {
    // splitmix64 step
    let mut z = seed.wrapping_add(trial.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A random linear combination of the generators of `m` for trial `trial`.
pub fn random_linear_form<F: Field>(
    semigroup: &Arc<NumericalSemigroup>,
    seed: u64,
    trial: u64,
) -> TruncatedElement<F> {
    let mut rng = ChaCha8Rng::seed_from_u64(derived_seed(seed, trial));
    let terms: Vec<(i64, F)> = semigroup
        .generators()
        .iter()
        .map(|&a| (a, F::sample_nonzero(&mut rng)))
        .collect();
    TruncatedElement::polynomial(semigroup, terms)
}

/// Decides m-fullness of an integral m-primary ideal as far as possible.
pub fn is_m_full<F: Field>(
    ideal: &ValueIdeal,
    trials: usize,
    seed: u64,
) -> Result<MFullCertificate<F>> {
    if !ideal.is_integral() {
        return Err(Error::NotIntegral);
    }
    if ideal.contains(0) {
        return Err(Error::NotMPrimary);
    }
    let s = ideal.semigroup();
    let mu = ideal.mu();
    if mu < s.embdim() {
        return Ok(MFullCertificate::NotMFullByMu {
            mu,
            embdim: s.embdim(),
        });
    }

    let m = ValueIdeal::maximal(s);
    let mi = m.product(ideal);
    let max_colength = s
        .elements_in(1, mi.stable_from())
        .map(|a| colength_bound(&mi, a))
        .max()
        .unwrap_or(0);
    if max_colength < mu as u64 {
        return Ok(MFullCertificate::NotMFullByColength { max_colength, mu });
    }

    for &a in s.generators() {
        let x = TruncatedElement::monomial(s, a, F::one());
        if witnesses(ideal, &x) {
            return Ok(MFullCertificate::MFullWitness(x));
        }
    }

    let found = (0..trials as u64).into_par_iter().find_map_first(|trial| {
        let x = random_linear_form::<F>(s, seed, trial);
        witnesses(ideal, &x).then_some(x)
    });
    Ok(match found {
        Some(x) => MFullCertificate::MFullWitness(x),
        None => MFullCertificate::Undetermined { trials },
    })
}
