//! Instance reports, example reproduction, enumeration and searches.

mod enumerate;
mod hunt;
mod repro;
mod suite;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use enumerate::{enumerate_ideals, enumerate_semigroups, IdealFilter};
pub use hunt::{hunt, HuntConfig, HuntMode, HuntReport, HuntSummary, SemigroupFamily};
pub use repro::{repro_all, repro_example, ExampleId, ReproOutcome};
pub use suite::{property_suite, suite_semigroups, PropertyResult, SuiteReport};

use crate::config::Config;
use crate::element::{is_m_full, MFullSummary};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::torsion_length;
use crate::ideal::ValueIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::with_field;

/// Version of the serialized report layout.
pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Classification {
    IsoToR,
    IsoToOmega,
    Other,
}

/// A length computed by the graded engine, or the reason it is missing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Measurement {
    Length(u64),
    BoundExceeded { bound: i64, required: i64 },
}

impl Measurement {
    fn from_result(r: Result<u64>) -> Result<Self> {
        match r {
            Ok(n) => Ok(Measurement::Length(n)),
            Err(Error::BoundExceeded { bound, required }) => {
                Ok(Measurement::BoundExceeded { bound, required })
            }
            Err(e) => Err(e),
        }
    }

    pub fn value(&self) -> Option<u64> {
        match self {
            Measurement::Length(n) => Some(*n),
            Measurement::BoundExceeded { .. } => None,
        }
    }

    pub fn is_zero(&self) -> Option<bool> {
        self.value().map(|n| n == 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FlagKind {
    /// A theorem consequence or a claimed value; `false` is a failure.
    Check,
    /// Reported for information only.
    Finding,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flag {
    pub name: String,
    pub kind: FlagKind,
    /// `None` when an input measurement hit the degree bound.
    pub value: Option<bool>,
    pub detail: String,
}

impl Flag {
    pub fn check(name: &str, value: Option<bool>, detail: impl Into<String>) -> Self {
        Flag {
            name: name.into(),
            kind: FlagKind::Check,
            value,
            detail: detail.into(),
        }
    }

    pub fn finding(name: &str, value: Option<bool>, detail: impl Into<String>) -> Self {
        Flag {
            name: name.into(),
            kind: FlagKind::Finding,
            value,
            detail: detail.into(),
        }
    }

    pub fn failed(&self) -> bool {
        self.kind == FlagKind::Check && self.value == Some(false)
    }

    pub fn undecided(&self) -> bool {
        self.kind == FlagKind::Check && self.value.is_none()
    }
}

/// A cofinite value set rendered finitely: every value in `[min, stable_from)`
/// is listed, everything from `stable_from` on is included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueSet {
    pub gens: Vec<i64>,
    pub values: Vec<i64>,
    pub stable_from: i64,
}

impl From<&ValueIdeal> for ValueSet {
    fn from(i: &ValueIdeal) -> Self {
        ValueSet {
            gens: i.gens().to_vec(),
            values: i.values_in(i.min(), i.stable_from()).collect(),
            stable_from: i.stable_from(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicates {
    pub weakly_m_full: bool,
    /// Smallest value of `(mI : m) ∩ R` outside `I`.
    pub weakly_m_full_witness: Option<i64>,
    /// Only for proper integral ideals.
    pub m_full: Option<MFullSummary>,
    /// Only for integral ideals.
    pub integrally_closed: Option<bool>,
    pub reflexive: bool,
    pub principal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub schema: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub label: Option<String>,
    pub field: String,
    pub semigroup: Vec<i64>,
    pub ideal: Vec<i64>,
    pub predicates: Predicates,
    pub dual: ValueSet,
    pub dagger: ValueSet,
    /// `length T(I ⊗ I*)`.
    pub torsion_star: Option<Measurement>,
    /// `length T(I ⊗ I†)`.
    pub torsion_dagger: Option<Measurement>,
    /// `I ⊗ I† ≅ ω`, when `torsion_dagger` was computed.
    pub dagger_tensor_is_omega: Option<bool>,
    pub classification: Classification,
    pub flags: Vec<Flag>,
}

impl InstanceReport {
    pub fn failed_checks(&self) -> impl Iterator<Item = &Flag> {
        self.flags.iter().filter(|f| f.failed())
    }

    pub fn bound_limited(&self) -> bool {
        self.flags.iter().any(|f| f.undecided())
            || [self.torsion_star, self.torsion_dagger]
                .iter()
                .flatten()
                .any(|m| m.value().is_none())
    }

    pub fn flag(&self, name: &str) -> Option<&Flag> {
        self.flags.iter().find(|f| f.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Which torsion lengths to compute.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Wants {
    pub star: bool,
    pub dagger: bool,
}

pub fn classify(ideal: &ValueIdeal) -> Classification {
    let s = ideal.semigroup();
    if ideal.iso_up_to_shift(&ValueIdeal::unit(s)) {
        Classification::IsoToR
    } else if ideal.iso_up_to_shift(&ValueIdeal::canonical(s)) {
        Classification::IsoToOmega
    } else {
        Classification::Other
    }
}

/// `length T(I ⊗ J)`, with a bound failure recorded rather than raised.
pub fn torsion_measure<F: Field>(
    i: &ValueIdeal,
    j: &ValueIdeal,
    cfg: &Config,
) -> Result<Measurement> {
    Measurement::from_result(torsion_length::<F>(i, j, cfg.degree_bound).map(|t| t.length))
}

fn predicates_in<F: Field>(ideal: &ValueIdeal, cfg: &Config) -> Result<Predicates> {
    let witness = ideal.weakly_m_full_witness();
    let proper = ideal.is_integral() && !ideal.contains(0);
    let m_full = if proper {
        Some(is_m_full::<F>(ideal, cfg.trials, cfg.seed)?.summary())
    } else {
        None
    };
    let integrally_closed = if ideal.is_integral() {
        Some(ideal.is_integrally_closed()?)
    } else {
        None
    };
    Ok(Predicates {
        weakly_m_full: witness.is_none(),
        weakly_m_full_witness: witness,
        m_full,
        integrally_closed,
        reflexive: ideal.is_reflexive(),
        principal: ideal.is_principal(),
    })
}

/// Predicates of an ideal, without any homology.
pub fn predicates(ideal: &ValueIdeal, cfg: &Config) -> Result<Predicates> {
    cfg.validate()?;
    with_field!(cfg.field, F => predicates_in::<F>(ideal, cfg))
}

/// Computes every field of a report except the flags.
pub(crate) fn analyze<F: Field>(
    ideal: &ValueIdeal,
    cfg: &Config,
    wants: Wants,
) -> Result<InstanceReport> {
    let s = ideal.semigroup();
    let predicates = predicates_in::<F>(ideal, cfg)?;
    let dual = ideal.dual();
    let dagger = ideal.dagger();
    let torsion_star = if wants.star {
        Some(torsion_measure::<F>(ideal, &dual, cfg)?)
    } else {
        None
    };
    let torsion_dagger = if wants.dagger {
        Some(torsion_measure::<F>(ideal, &dagger, cfg)?)
    } else {
        None
    };
    let omega = ValueIdeal::canonical(s);
    let dagger_tensor_is_omega = torsion_dagger
        .and_then(|t| t.is_zero())
        .map(|free| free && ideal.product(&dagger).iso_up_to_shift(&omega));

    Ok(InstanceReport {
        schema: SCHEMA,
        index: None,
        label: None,
        field: F::label(),
        semigroup: s.generators().to_vec(),
        ideal: ideal.gens().to_vec(),
        predicates,
        dual: ValueSet::from(&dual),
        dagger: ValueSet::from(&dagger),
        torsion_star,
        torsion_dagger,
        dagger_tensor_is_omega,
        classification: classify(ideal),
        flags: Vec::new(),
    })
}

/// Flags tied to `torsion(I ⊗ I*)`.
pub(crate) fn star_flags(ideal: &ValueIdeal, r: &InstanceReport) -> Vec<Flag> {
    let s = ideal.semigroup();
    let free = r.torsion_star.and_then(|t| t.is_zero());
    let mut flags = vec![Flag::check(
        "HW_star_ok",
        free.map(|f| !f || r.predicates.principal),
        "I ⊗ I* torsion-free implies I principal",
    )];
    let proper = ideal.is_integral() && !ideal.contains(0);
    let tame = r.predicates.weakly_m_full || r.predicates.integrally_closed == Some(true);
    if proper && tame {
        flags.push(Flag::check(
            "WMF_torsion_ok",
            free.map(|f| !f || (s.is_dvr() && r.predicates.principal)),
            "weakly m-full or integrally closed with I ⊗ I* torsion-free forces a DVR and I principal",
        ));
    }
    flags
}

/// Flags tied to `torsion(I ⊗ I†)`.
pub(crate) fn dagger_flags(ideal: &ValueIdeal, r: &InstanceReport) -> Vec<Flag> {
    let s = ideal.semigroup();
    let free = r.torsion_dagger.and_then(|t| t.is_zero());
    let iso_omega = r.dagger_tensor_is_omega;
    let hypotheses = s.has_minimal_multiplicity() && r.predicates.reflexive;
    vec![
        Flag::finding(
            "Q42_interesting",
            free.map(|f| f && r.classification == Classification::Other),
            "I ⊗ I† torsion-free while I is isomorphic to neither R nor ω",
        ),
        Flag::check(
            "Thm43_ok",
            if hypotheses {
                iso_omega.map(|iso| !iso || r.classification == Classification::IsoToR)
            } else {
                Some(true)
            },
            "minimal multiplicity, I reflexive and I ⊗ I† ≅ ω imply I ≅ R",
        ),
    ]
}

fn checked_ideal(s: &[i64], gens: &[i64]) -> Result<ValueIdeal> {
    let s = Arc::new(NumericalSemigroup::new(s)?);
    ValueIdeal::from_gens(&s, gens)
}

/// Report with the Huneke–Wiegand flag for `I ⊗ I*`.
pub fn check_hw_star(ideal: &ValueIdeal, cfg: &Config) -> Result<InstanceReport> {
    cfg.validate()?;
    with_field!(cfg.field, F => {
        let mut r = analyze::<F>(ideal, cfg, Wants { star: true, dagger: false })?;
        r.flags = star_flags(ideal, &r);
        Ok(r)
    })
}

/// Report with the canonical-dual flags for `I ⊗ I†`.
pub fn check_hw_dagger(ideal: &ValueIdeal, cfg: &Config) -> Result<InstanceReport> {
    cfg.validate()?;
    with_field!(cfg.field, F => {
        let mut r = analyze::<F>(ideal, cfg, Wants { star: false, dagger: true })?;
        r.flags = dagger_flags(ideal, &r);
        Ok(r)
    })
}

/// Both torsion lengths and every flag.
pub fn full_report(ideal: &ValueIdeal, cfg: &Config) -> Result<InstanceReport> {
    cfg.validate()?;
    with_field!(cfg.field, F => {
        let mut r = analyze::<F>(ideal, cfg, Wants { star: true, dagger: true })?;
        let mut flags = star_flags(ideal, &r);
        flags.extend(dagger_flags(ideal, &r));
        r.flags = flags;
        Ok(r)
    })
}

/// Convenience wrapper taking raw generator lists.
pub fn report_for(semigroup: &[i64], gens: &[i64], cfg: &Config) -> Result<InstanceReport> {
    full_report(&checked_ideal(semigroup, gens)?, cfg)
}
