use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    analyze, dagger_flags, enumerate_ideals, enumerate_semigroups, star_flags, Classification,
    IdealFilter, InstanceReport, Measurement, Wants,
};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::ValueIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::with_field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HuntMode {
    /// Search for torsion-free `I ⊗ I*`.
    Star,
    /// Search for torsion-free `I ⊗ I†`.
    Dagger,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SemigroupFamily {
    Explicit(Vec<Vec<i64>>),
    /// All semigroups with minimal generators `<= max_generator` and
    /// Frobenius number `<= max_frobenius`.
    Bounded {
        max_generator: i64,
        max_frobenius: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntConfig {
    pub family: SemigroupFamily,
    /// Largest generator value; `None` means twice the conductor of each
    /// semigroup.
    pub cap: Option<i64>,
    pub mode: HuntMode,
    pub filter: IdealFilter,
    pub minimal_multiplicity_only: bool,
    /// Instances with a smaller canonical index are skipped.
    pub skip_to: usize,
}

impl HuntConfig {
    pub fn new(family: SemigroupFamily, mode: HuntMode) -> Self {
        HuntConfig {
            family,
            cap: None,
            mode,
            filter: IdealFilter::default(),
            minimal_multiplicity_only: false,
            skip_to: 0,
        }
    }

    fn validate(&self) -> Result<()> {
        if let Some(c) = self.cap {
            if c < 0 {
                return Err(Error::Config("cap must be nonnegative".into()));
            }
        }
        if let SemigroupFamily::Bounded {
            max_generator,
            max_frobenius,
        } = self.family
        {
            if max_generator <= 0 || max_frobenius < 0 {
                return Err(Error::Config("family bounds must be positive".into()));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntSummary {
    pub semigroups: usize,
    pub scanned: usize,
    pub torsion_free: usize,
    pub bound_limited: usize,
    pub failed_checks: usize,
    pub classification: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntReport {
    pub schema: u32,
    pub summary: HuntSummary,
    /// Hits, i.e. instances whose torsion vanished, in canonical order.
    pub hits: Vec<InstanceReport>,
    /// Instances whose torsion could not be decided within the bound.
    pub unknown: Vec<InstanceReport>,
}

fn family(cfg: &HuntConfig) -> Result<Vec<Arc<NumericalSemigroup>>> {
    let list = match &cfg.family {
        SemigroupFamily::Explicit(gens) => gens
            .iter()
            .map(|g| NumericalSemigroup::new(g))
            .collect::<Result<Vec<_>>>()?,
        SemigroupFamily::Bounded {
            max_generator,
            max_frobenius,
        } => enumerate_semigroups(*max_generator, *max_frobenius)?,
    };
    Ok(list
        .into_iter()
        .filter(|s| !cfg.minimal_multiplicity_only || s.has_minimal_multiplicity())
        .map(Arc::new)
        .collect())
}

/// Semigroup generators and normalized ideal generators.
type IsoKey = (Vec<i64>, Vec<i64>);

fn run<F: Field>(cfg: &Config, hunt_cfg: &HuntConfig) -> Result<HuntReport> {
    let semigroups = family(hunt_cfg)?;
    let instances: Vec<(usize, ValueIdeal)> = semigroups
        .iter()
        .flat_map(|s| {
            let cap = hunt_cfg.cap.unwrap_or(2 * s.conductor());
            enumerate_ideals(s, cap, &hunt_cfg.filter)
        })
        .enumerate()
        .filter(|(k, _)| *k >= hunt_cfg.skip_to)
        .collect();

    let wants = match hunt_cfg.mode {
        HuntMode::Star => Wants {
            star: true,
            dagger: false,
        },
        HuntMode::Dagger => Wants {
            star: false,
            dagger: true,
        },
    };
    // Torsion lengths depend only on the isomorphism class.
    let memo: Mutex<HashMap<IsoKey, Measurement>> = Mutex::new(HashMap::new());
    let one = |(k, i): &(usize, ValueIdeal)| -> Result<InstanceReport> {
        let key = (i.semigroup().generators().to_vec(), i.normalized_gens());
        let cached = memo.lock().unwrap().get(&key).copied();
        let mut r = match cached {
            Some(t) => {
                let mut r = analyze::<F>(i, cfg, Wants::default())?;
                match hunt_cfg.mode {
                    HuntMode::Star => r.torsion_star = Some(t),
                    HuntMode::Dagger => {
                        r.torsion_dagger = Some(t);
                        r.dagger_tensor_is_omega = t.is_zero().map(|z| {
                            z && i
                                .product(&i.dagger())
                                .iso_up_to_shift(&ValueIdeal::canonical(i.semigroup()))
                        });
                    }
                }
                r
            }
            None => {
                let r = analyze::<F>(i, cfg, wants)?;
                let t = match hunt_cfg.mode {
                    HuntMode::Star => r.torsion_star,
                    HuntMode::Dagger => r.torsion_dagger,
                };
                memo.lock()
                    .unwrap()
                    .insert(key, t.expect("requested torsion"));
                r
            }
        };
        r.flags = match hunt_cfg.mode {
            HuntMode::Star => star_flags(i, &r),
            HuntMode::Dagger => dagger_flags(i, &r),
        };
        r.index = Some(*k);
        Ok(r)
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    let reports: Vec<InstanceReport> =
        pool.install(|| instances.par_iter().map(one).collect::<Result<Vec<_>>>())?;

    let mut summary = HuntSummary {
        semigroups: semigroups.len(),
        scanned: reports.len(),
        ..HuntSummary::default()
    };
    for c in [
        Classification::IsoToR,
        Classification::IsoToOmega,
        Classification::Other,
    ] {
        summary.classification.insert(format!("{c:?}"), 0);
    }
    let mut hits = Vec::new();
    let mut unknown = Vec::new();
    for r in reports {
        summary.failed_checks += r.failed_checks().count();
        let t = match hunt_cfg.mode {
            HuntMode::Star => r.torsion_star,
            HuntMode::Dagger => r.torsion_dagger,
        };
        match t.and_then(|t| t.is_zero()) {
            Some(true) => {
                summary.torsion_free += 1;
                *summary
                    .classification
                    .entry(format!("{:?}", r.classification))
                    .or_default() += 1;
                hits.push(r);
            }
            Some(false) => {}
            None => {
                summary.bound_limited += 1;
                unknown.push(r);
            }
        }
    }
    Ok(HuntReport {
        schema: super::SCHEMA,
        summary,
        hits,
        unknown,
    })
}

/// Enumerates instances, computes the mode's torsion for each and keeps
/// the torsion-free ones. Deterministic for a fixed configuration.
pub fn hunt(cfg: &Config, hunt_cfg: &HuntConfig) -> Result<HuntReport> {
    cfg.validate()?;
    hunt_cfg.validate()?;
    with_field!(cfg.field, F => run::<F>(cfg, hunt_cfg))
}
