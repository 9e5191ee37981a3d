use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::element::is_m_full;
use crate::error::Result;
use crate::ideal::ValueIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::with_field;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub name: String,
    pub checked: usize,
    pub passed: bool,
    /// `semigroup | ideal | detail` of the first failure.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub seed: u64,
    pub samples: usize,
    pub properties: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }
}

struct Tally {
    name: &'static str,
    checked: usize,
    witness: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            checked: 0,
            witness: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(what());
        }
    }

    fn finish(self) -> PropertyResult {
        PropertyResult {
            name: self.name.into(),
            checked: self.checked,
            passed: self.witness.is_none(),
            witness: self.witness,
        }
    }
}

/// A random nonempty antichain of `S ∩ [1, cap]`.
fn random_ideal(s: &Arc<NumericalSemigroup>, cap: i64, rng: &mut ChaCha8Rng) -> ValueIdeal {
    let mut elems: Vec<i64> = s.elements_in(1, cap + 1).collect();
    elems.shuffle(rng);
    let want = rng.gen_range(1..=4);
    let mut gens: Vec<i64> = Vec::new();
    for v in elems {
        if gens.len() == want {
            break;
        }
        if gens
            .iter()
            .all(|&a| !s.is_member(v - a) && !s.is_member(a - v))
        {
            gens.push(v);
        }
    }
    ValueIdeal::from_gens(s, &gens).expect("nonempty")
}

/// Default semigroups for the suite: every non-regular example ring.
pub fn suite_semigroups() -> Vec<Vec<i64>> {
    vec![
        vec![2, 3],
        vec![3, 4, 5],
        vec![4, 5, 6],
        vec![3, 5, 7],
        vec![7, 9, 11, 13],
        vec![5, 6, 7, 8, 9],
        vec![9, 10, 11, 12, 15],
    ]
}

/// Randomized checks of the structural statements about `J : m`,
/// `q : m` for principal parameter ideals `q`, and principal ideals.
pub fn property_suite(
    seed: u64,
    samples: usize,
    semigroups: &[Vec<i64>],
    cfg: &Config,
) -> Result<SuiteReport> {
    cfg.validate()?;
    let rings: Vec<Arc<NumericalSemigroup>> = semigroups
        .iter()
        .map(|g| NumericalSemigroup::new(g).map(Arc::new))
        .collect::<Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut colon_wmf = Tally::new("colon_by_m_is_weakly_m_full");
    let mut corso_polini = Tally::new("q_colon_m_square_and_product");
    let mut mu_length = Tally::new("mu_is_mu_plus_length");
    let mut not_m_full = Tally::new("q_colon_m_not_m_full_when_embdim_large");
    let mut principal = Tally::new("principal_not_weakly_m_full");
    let mut dual_m = Tally::new("x_colon_m_dual_is_m_and_blowup_is_ring");

    for k in 0..samples {
        let s = &rings[k % rings.len()];
        if s.is_dvr() {
            continue;
        }
        let m = ValueIdeal::maximal(s);
        let cap = 2 * s.conductor() + s.multiplicity();
        let tag = |i: &ValueIdeal, d: &str| format!("{s} | {i} | {d}");

        let j = random_ideal(s, cap, &mut rng);
        let i = j.colon_in_ring(&m);
        colon_wmf.record(i.is_weakly_m_full(), || tag(&i, "J : m not weakly m-full"));

        let elems: Vec<i64> = s.elements_in(1, cap + 1).collect();
        let x = *elems.choose(&mut rng).expect("S has positive elements");
        let q = ValueIdeal::principal(s, x);
        let i = q.colon_in_ring(&m);
        corso_polini.record(
            i.product(&i) == i.shift(x) && m.product(&i) == m.shift(x),
            || tag(&i, "I^2 != qI or mI != mq"),
        );
        mu_length.record(i.mu() == q.mu() + i.length_quotient(&q)? as usize, || {
            tag(&i, "mu(I) != mu(q) + length(I/q)")
        });
        if s.embdim() > 1 + s.cm_type() {
            let (full, kind) = with_field!(cfg.field, F => {
                is_m_full::<F>(&i, cfg.trials, cfg.seed).map(|c| (c.is_m_full(), c.kind()))
            })?;
            not_m_full.record(full != Some(true), || tag(&i, kind));
        }
        let prime = i.shift(-x);
        dual_m.record(
            i.dual().iso_up_to_shift(&m) && prime.product(&prime) == prime && prime.contains(0),
            || tag(&i, "I* not m or I/x not a ring"),
        );

        let p = ValueIdeal::principal(s, x);
        principal.record(!p.is_weakly_m_full(), || {
            tag(&p, "principal ideal weakly m-full")
        });
    }

    Ok(SuiteReport {
        schema: super::SCHEMA,
        seed,
        samples,
        properties: [
            colon_wmf,
            corso_polini,
            mu_length,
            not_m_full,
            principal,
            dual_m,
        ]
        .into_iter()
        .map(Tally::finish)
        .collect(),
    })
}
