use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{analyze, dagger_flags, star_flags, Classification, Flag, InstanceReport, Wants};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::{
    hilbert_iso_to_ideal, present_ideal, present_quotient, tensor_presentation, tor, torsion_length,
};
use crate::ideal::ValueIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::with_field;

/// The worked examples that can be reproduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExampleId {
    #[serde(rename = "Ex_q_colon_456")]
    QColon456,
    #[serde(rename = "Ex_q_colon_7911")]
    QColon7911,
    #[serde(rename = "Ex_torfree_pair")]
    TorfreePair,
    #[serde(rename = "Rmk_dual_is_m")]
    DualIsM,
    #[serde(rename = "Ex_L_big")]
    LBig,
    #[serde(rename = "Ex_GT_dagger")]
    GtDagger,
}

impl ExampleId {
    pub const ALL: [ExampleId; 6] = [
        ExampleId::QColon456,
        ExampleId::QColon7911,
        ExampleId::TorfreePair,
        ExampleId::DualIsM,
        ExampleId::LBig,
        ExampleId::GtDagger,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ExampleId::QColon456 => "Ex_q_colon_456",
            ExampleId::QColon7911 => "Ex_q_colon_7911",
            ExampleId::TorfreePair => "Ex_torfree_pair",
            ExampleId::DualIsM => "Rmk_dual_is_m",
            ExampleId::LBig => "Ex_L_big",
            ExampleId::GtDagger => "Ex_GT_dagger",
        }
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExampleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExampleId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown example id {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReproOutcome {
    pub reports: Vec<InstanceReport>,
    pub mismatches: usize,
    pub bound_limited: usize,
}

impl ReproOutcome {
    pub fn all_passed(&self) -> bool {
        self.mismatches == 0 && self.bound_limited == 0
    }

    /// `(example, flag name, value)` for every check and finding, the
    /// field-independent part of the outcome.
    pub fn verdicts(&self) -> Vec<(String, String, Option<bool>)> {
        self.reports
            .iter()
            .flat_map(|r| {
                let label = r.label.clone().unwrap_or_default();
                r.flags
                    .iter()
                    .map(move |f| (label.clone(), f.name.clone(), f.value))
            })
            .collect()
    }
}

fn ns(g: &[i64]) -> Arc<NumericalSemigroup> {
    Arc::new(NumericalSemigroup::new(g).expect("valid example semigroup"))
}

fn ideal(s: &Arc<NumericalSemigroup>, g: &[i64]) -> ValueIdeal {
    ValueIdeal::from_gens(s, g).expect("valid example ideal")
}

/// `Ok(None)` on a bound failure so the flag can record it.
fn bounded<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::BoundExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn gens_flag(name: &str, got: &ValueIdeal, want: &[i64]) -> Flag {
    Flag::check(
        name,
        Some(got.gens() == want),
        format!("computed {got}, expected {want:?}"),
    )
}

fn repro_in<F: Field>(id: ExampleId, cfg: &Config) -> Result<InstanceReport> {
    let star = Wants {
        star: true,
        dagger: false,
    };
    let (inst, mut report, mut flags) = match id {
        ExampleId::QColon456 | ExampleId::QColon7911 => {
            let (s, q, want): (_, i64, &[i64]) = if id == ExampleId::QColon456 {
                (ns(&[4, 5, 6]), 4, &[4, 11])
            } else {
                (ns(&[7, 9, 11, 13]), 14, &[14, 29, 31, 33])
            };
            let m = ValueIdeal::maximal(&s);
            let i = ValueIdeal::principal(&s, q).colon_in_ring(&m);
            let r = analyze::<F>(&i, cfg, star)?;
            let mut flags = vec![
                gens_flag("colon_matches", &i, want),
                Flag::check(
                    "weakly_m_full",
                    Some(r.predicates.weakly_m_full),
                    "q : m is weakly m-full",
                ),
                Flag::check(
                    "not_integrally_closed",
                    r.predicates.integrally_closed.map(|c| !c),
                    format!("closure {}", i.integral_closure()?),
                ),
                Flag::check(
                    "mu_is_one_plus_type",
                    Some(i.mu() == 1 + s.cm_type()),
                    format!("mu = {}, type = {}", i.mu(), s.cm_type()),
                ),
            ];
            let verdict = r
                .predicates
                .m_full
                .clone()
                .map(|m| m.verdict)
                .unwrap_or_default();
            if id == ExampleId::QColon456 {
                flags.push(Flag::check(
                    "m_full_by_mu",
                    Some(verdict == "NotMFullByMu"),
                    format!("certificate {verdict}"),
                ));
                let closure = i.integral_closure()?;
                flags.push(gens_flag("closure_is_m", &closure, &[4, 5, 6]));
                flags.push(Flag::check(
                    "torsion_star_positive",
                    r.torsion_star.and_then(|t| t.is_zero()).map(|z| !z),
                    "I ⊗ I* has torsion",
                ));
            } else {
                let m_full = if verdict == "MFullWitness" {
                    Some(true)
                } else if verdict.starts_with("NotMFull") {
                    Some(false)
                } else {
                    None
                };
                flags.push(Flag::finding(
                    "m_full",
                    m_full,
                    format!("certificate {verdict}"),
                ));
                flags.push(Flag::finding(
                    "embdim_exceeds_one_plus_type",
                    Some(s.embdim() > 1 + s.cm_type()),
                    format!("embdim {} vs 1 + type {}", s.embdim(), 1 + s.cm_type()),
                ));
            }
            (i, r, flags)
        }
        ExampleId::TorfreePair => {
            let s = ns(&[4, 5, 6]);
            let i = ideal(&s, &[4, 5]);
            let j = ideal(&s, &[4, 6]);
            let r = analyze::<F>(&i, cfg, star)?;
            let tor2 = bounded(tor(
                &present_quotient::<F>(&i)?,
                &present_quotient::<F>(&j)?,
                2,
                cfg.degree_bound,
            ))?;
            let tl = bounded(torsion_length::<F>(&i, &j, cfg.degree_bound))?;
            let flags = vec![
                Flag::check(
                    "tor2_vanishes",
                    tor2.as_ref().map(|t| t.length.is_zero()),
                    format!(
                        "Tor_2(R/I, R/J) length {}",
                        tor2.map_or("?".into(), |t| t.length.to_string())
                    ),
                ),
                Flag::check(
                    "torsion_free_pair",
                    tl.as_ref().map(|t| t.length == 0),
                    format!(
                        "torsion length {}",
                        tl.map_or("?".into(), |t| t.length.to_string())
                    ),
                ),
                Flag::check(
                    "I_not_weakly_m_full",
                    Some(i.weakly_m_full_witness() == Some(6)),
                    format!("witness {:?}", i.weakly_m_full_witness()),
                ),
                Flag::check(
                    "J_not_weakly_m_full",
                    Some(!j.is_weakly_m_full()),
                    format!("witness {:?}", j.weakly_m_full_witness()),
                ),
            ];
            (i, r, flags)
        }
        ExampleId::DualIsM => {
            let s = ns(&[4, 5, 6]);
            let m = ValueIdeal::maximal(&s);
            let x = 4;
            let i = ValueIdeal::principal(&s, x).colon_in_ring(&m);
            let r = analyze::<F>(&i, cfg, star)?;
            let prime = i.shift(-x);
            let flags = vec![
                Flag::check(
                    "square_is_xI",
                    Some(i.product(&i) == i.shift(x)),
                    "I^2 = xI",
                ),
                Flag::check("mI_is_xm", Some(m.product(&i) == m.shift(x)), "mI = xm"),
                Flag::check(
                    "dual_iso_m",
                    Some(i.dual().iso_up_to_shift(&m)),
                    format!("I* = {}", i.dual()),
                ),
                Flag::check(
                    "blowup_is_ring",
                    Some(prime.product(&prime) == prime && prime.contains(0) && prime.min() >= 0),
                    format!("I/x = {prime}"),
                ),
                Flag::check(
                    "torsion_star_positive",
                    r.torsion_star.and_then(|t| t.is_zero()).map(|z| !z),
                    "I ⊗ I* has torsion",
                ),
            ];
            (i, r, flags)
        }
        ExampleId::LBig => {
            let s = ns(&[9, 11, 13, 14, 15, 17]);
            let m = ValueIdeal::maximal(&s);
            let l = ideal(&s, &[26, 30, 32]).colon_in_ring(&m);
            let r = analyze::<F>(&l, cfg, star)?;
            let prime = l.shift(-26);
            let flags = vec![
                gens_flag("colon_matches", &l, &[26, 30, 32, 34, 36, 38, 42]),
                gens_flag("shifted_generators", &prime, &[0, 4, 6, 8, 10, 12, 16]),
                Flag::check(
                    "weakly_m_full",
                    Some(r.predicates.weakly_m_full),
                    "I : m is weakly m-full",
                ),
                Flag::check(
                    "dual_not_iso_m",
                    Some(!l.dual().iso_up_to_shift(&m)),
                    format!("L* = {}", l.dual()),
                ),
                Flag::check(
                    "value_19_escapes",
                    Some(m.product(&prime).contains(19) && !s.is_member(19)),
                    "t^19 lies in mL' but not in R",
                ),
                Flag::check(
                    "torsion_star_positive",
                    r.torsion_star.and_then(|t| t.is_zero()).map(|z| !z),
                    format!("torsion length {:?}", r.torsion_star),
                ),
            ];
            (l, r, flags)
        }
        ExampleId::GtDagger => {
            let s = ns(&[9, 10, 11, 12, 15]);
            let i = ideal(&s, &[0, 1]);
            let omega = ValueIdeal::canonical(&s);
            let r = analyze::<F>(
                &i,
                cfg,
                Wants {
                    star: false,
                    dagger: true,
                },
            )?;
            let pres_iso = bounded((|| {
                let p = present_ideal::<F>(&i, cfg.degree_bound)?;
                let q = present_ideal::<F>(&i.dagger(), cfg.degree_bound)?;
                Ok(hilbert_iso_to_ideal(&tensor_presentation(&p, &q), &omega))
            })())?;
            let free = r.torsion_dagger.and_then(|t| t.is_zero());
            let flags = vec![
                gens_flag("canonical_matches", &omega, &[0, 1, 3, 4]),
                Flag::check(
                    "torsion_dagger_zero",
                    free,
                    format!("{:?}", r.torsion_dagger),
                ),
                Flag::check(
                    "tensor_iso_omega",
                    r.dagger_tensor_is_omega,
                    "I I† ≅ ω with no torsion",
                ),
                Flag::check(
                    "presentation_iso_omega",
                    pres_iso,
                    "Hilbert function of the tensor presentation is that of ω",
                ),
                Flag::check(
                    "classified_other",
                    Some(r.classification == Classification::Other),
                    format!("{:?}", r.classification),
                ),
            ];
            (i, r, flags)
        }
    };
    match id {
        ExampleId::GtDagger => flags.extend(dagger_flags(&inst, &report)),
        _ => flags.extend(star_flags(&inst, &report)),
    }
    report.label = Some(id.as_str().to_string());
    report.flags = flags;
    Ok(report)
}

/// Reproduces one example; mismatches show up as failed flags.
pub fn repro_example(id: ExampleId, cfg: &Config) -> Result<InstanceReport> {
    cfg.validate()?;
    with_field!(cfg.field, F => repro_in::<F>(id, cfg))
}

pub fn repro_all(cfg: &Config) -> Result<ReproOutcome> {
    let reports = ExampleId::ALL
        .iter()
        .map(|&id| repro_example(id, cfg))
        .collect::<Result<Vec<_>>>()?;
    let mismatches = reports.iter().map(|r| r.failed_checks().count()).sum();
    let bound_limited = reports.iter().filter(|r| r.bound_limited()).count();
    Ok(ReproOutcome {
        reports,
        mismatches,
        bound_limited,
    })
}
