//! Monomial fractional ideals of `k[[S]]`, represented by their value sets.
//!
//! A [`ValueIdeal`] is an `S`-closed subset `E` of the integers that is
//! bounded below and contains every integer from `stable_from` on. It is
//! stored as its minimal generators together with a dense membership
//! bitmap on `[min, stable_from)`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone)]
pub struct ValueIdeal {
    semigroup: Arc<NumericalSemigroup>,
    gens: Vec<i64>,
    min: i64,
    stable_from: i64,
    bitmap: Vec<bool>,
}

impl PartialEq for ValueIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens && same_semigroup(&self.semigroup, &other.semigroup)
    }
}

impl Eq for ValueIdeal {}

fn same_semigroup(a: &Arc<NumericalSemigroup>, b: &Arc<NumericalSemigroup>) -> bool {
    Arc::ptr_eq(a, b) || a.generators() == b.generators()
}

impl ValueIdeal {
    /// The ideal generated by `t^v` for `v` in `vals`; duplicates and
    /// absorbed values are dropped.
    pub fn from_gens(semigroup: &Arc<NumericalSemigroup>, vals: &[i64]) -> Result<Self> {
        let lo = *vals.iter().min().ok_or(Error::EmptyIdeal)?;
        let hi = vals.iter().max().unwrap() + semigroup.conductor();
        let s = semigroup.as_ref();
        Ok(Self::from_predicate(semigroup, lo, hi, |v| {
            vals.iter().any(|&g| s.is_member(v - g))
        }))
    }

    /// Builds an ideal from its value set: `pred` decides membership on
    /// `[lo, hi)`, values below `lo` are excluded and values from `hi` on are
    /// included. The caller guarantees the resulting set is `S`-closed.
    pub(crate) fn from_predicate(
        semigroup: &Arc<NumericalSemigroup>,
        lo: i64,
        hi: i64,
        pred: impl Fn(i64) -> bool,
    ) -> Self {
        let hi = hi.max(lo);
        let dense: Vec<bool> = (lo..hi).map(&pred).collect();
        let min = dense.iter().position(|&b| b).map_or(hi, |p| lo + p as i64);
        let stable_from = dense
            .iter()
            .rposition(|&b| !b)
            .map_or(lo, |p| lo + p as i64 + 1)
            .max(min);
        let bitmap = dense[(min - lo) as usize..(stable_from - lo) as usize].to_vec();
        let mut ideal = ValueIdeal {
            semigroup: Arc::clone(semigroup),
            gens: Vec::new(),
            min,
            stable_from,
            bitmap,
        };
        debug_assert!(ideal.check_closed(), "value set is not S-closed");
        let e = semigroup.multiplicity();
        ideal.gens = (min..stable_from + e)
            .filter(|&v| {
                ideal.contains(v)
                    && semigroup
                        .generators()
                        .iter()
                        .all(|&a| !ideal.contains(v - a))
            })
            .collect();
        ideal
    }

    fn check_closed(&self) -> bool {
        let s = &self.semigroup;
        (self.min..self.stable_from)
            .all(|v| !self.contains(v) || s.generators().iter().all(|&a| self.contains(v + a)))
    }

    pub fn unit(semigroup: &Arc<NumericalSemigroup>) -> Self {
        Self::from_gens(semigroup, &[0]).expect("nonempty")
    }

    pub fn maximal(semigroup: &Arc<NumericalSemigroup>) -> Self {
        Self::from_gens(semigroup, semigroup.generators()).expect("nonempty")
    }

    pub fn principal(semigroup: &Arc<NumericalSemigroup>, v: i64) -> Self {
        Self::from_gens(semigroup, &[v]).expect("nonempty")
    }

    /// The canonical ideal `K(S) = {x : F - x not in S}`, normalized to
    /// minimum value 0.
    pub fn canonical(semigroup: &Arc<NumericalSemigroup>) -> Self {
        let f = semigroup.frobenius();
        let s = semigroup.as_ref();
        Self::from_predicate(semigroup, 0, f + 1, |x| !s.is_member(f - x))
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    /// Minimal generators, ascending.
    pub fn gens(&self) -> &[i64] {
        &self.gens
    }

    pub fn min(&self) -> i64 {
        self.min
    }

    /// Every integer `>= stable_from` lies in the value set.
    pub fn stable_from(&self) -> i64 {
        self.stable_from
    }

    pub fn contains(&self, v: i64) -> bool {
        if v >= self.stable_from {
            true
        } else if v < self.min {
            false
        } else {
            self.bitmap[(v - self.min) as usize]
        }
    }

    /// Values in `[lo, hi)`.
    pub fn values_in(&self, lo: i64, hi: i64) -> impl Iterator<Item = i64> + '_ {
        (lo.max(self.min)..hi).filter(move |&v| self.contains(v))
    }

    /// All minimal generators lie in `S`.
    pub fn is_integral(&self) -> bool {
        self.gens.iter().all(|&g| self.semigroup.is_member(g))
    }

    /// Value-set containment `self ⊆ other`.
    pub fn is_subset_of(&self, other: &ValueIdeal) -> bool {
        self.assert_same(other);
        self.gens.iter().all(|&g| other.contains(g))
    }

    fn assert_same(&self, other: &ValueIdeal) {
        assert!(
            same_semigroup(&self.semigroup, &other.semigroup),
            "ideals over different semigroups: {} vs {}",
            self.semigroup,
            other.semigroup
        );
    }

    /// `t^k · self`.
    pub fn shift(&self, k: i64) -> Self {
        let gens: Vec<i64> = self.gens.iter().map(|g| g + k).collect();
        ValueIdeal {
            semigroup: Arc::clone(&self.semigroup),
            gens,
            min: self.min + k,
            stable_from: self.stable_from + k,
            bitmap: self.bitmap.clone(),
        }
    }

    /// Minimal generators translated so the least one is 0.
    pub fn normalized_gens(&self) -> Vec<i64> {
        self.gens.iter().map(|g| g - self.min).collect()
    }

    pub fn intersect(&self, other: &ValueIdeal) -> Self {
        self.assert_same(other);
        let lo = self.min.max(other.min);
        let hi = self.stable_from.max(other.stable_from);
        Self::from_predicate(&self.semigroup, lo, hi, |v| {
            self.contains(v) && other.contains(v)
        })
    }

    pub fn sum(&self, other: &ValueIdeal) -> Self {
        self.assert_same(other);
        let mut all = self.gens.clone();
        all.extend_from_slice(&other.gens);
        Self::from_gens(&self.semigroup, &all).expect("nonempty")
    }

    /// `self ∩ R`.
    pub fn in_ring(&self) -> Self {
        let r = Self::unit(&self.semigroup);
        self.intersect(&r)
    }

    pub fn product(&self, other: &ValueIdeal) -> Self {
        self.assert_same(other);
        let sums: Vec<i64> = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a + b))
            .collect();
        Self::from_gens(&self.semigroup, &sums).expect("nonempty")
    }

    /// The fractional colon `(self : other) = {v : v + other ⊆ self}`.
    pub fn colon(&self, other: &ValueIdeal) -> Self {
        self.assert_same(other);
        let max_b = *other.gens.last().expect("nonempty");
        let min_b = other.gens[0];
        let lo = self.min - max_b;
        let hi = self.stable_from - min_b;
        Self::from_predicate(&self.semigroup, lo, hi, |v| {
            other.gens.iter().all(|&b| self.contains(v + b))
        })
    }

    /// The ring-theoretic colon `(self :_R other) = (self : other) ∩ R`.
    pub fn colon_in_ring(&self, other: &ValueIdeal) -> Self {
        self.colon(other).in_ring()
    }

    /// `R : self`, representing `Hom(self, R)`.
    pub fn dual(&self) -> Self {
        Self::unit(&self.semigroup).colon(self)
    }

    /// `ω : self`, representing `Hom(self, ω)`.
    pub fn dagger(&self) -> Self {
        Self::canonical(&self.semigroup).colon(self)
    }

    /// Integral closure of an integral ideal: all of `S` from `min` on.
    pub fn integral_closure(&self) -> Result<Self> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        let s = self.semigroup.as_ref();
        Ok(Self::from_predicate(
            &self.semigroup,
            self.min,
            self.min.max(s.conductor()),
            |v| s.is_member(v),
        ))
    }

    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    /// `length(self / sub)` for `sub ⊆ self`.
    pub fn length_quotient(&self, sub: &ValueIdeal) -> Result<u64> {
        if !sub.is_subset_of(self) {
            return Err(Error::NotContained);
        }
        let hi = self.stable_from.max(sub.stable_from);
        Ok(self
            .values_in(self.min, hi)
            .filter(|&v| !sub.contains(v))
            .count() as u64)
    }

    /// Smallest value of `(mI : m) ∩ R` outside `I`, if any.
    ///
    /// For a fractional ideal the colon is not intersected with `R`.
    pub fn weakly_m_full_witness(&self) -> Option<i64> {
        let m = Self::maximal(&self.semigroup);
        let mut c = m.product(self).colon(&m);
        if self.is_integral() {
            c = c.in_ring();
        }
        let hi = c.stable_from.max(self.stable_from);
        let found = c.values_in(c.min, hi).find(|&v| !self.contains(v));
        found
    }

    /// `mI : m = I`.
    pub fn is_weakly_m_full(&self) -> bool {
        self.weakly_m_full_witness().is_none()
    }

    pub fn is_integrally_closed(&self) -> Result<bool> {
        Ok(self.integral_closure()? == *self)
    }

    /// `I = R : (R : I)`.
    pub fn is_reflexive(&self) -> bool {
        self.dual().dual() == *self
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    /// Graded isomorphism: value sets agree after translating minima to 0.
    pub fn iso_up_to_shift(&self, other: &ValueIdeal) -> bool {
        self.assert_same(other);
        self.normalized_gens() == other.normalized_gens()
    }
}

impl fmt::Display for ValueIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for ValueIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ValueIdeal{} over {}", self, self.semigroup)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(g: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::new(g).unwrap())
    }

    fn id(s: &Arc<NumericalSemigroup>, g: &[i64]) -> ValueIdeal {
        ValueIdeal::from_gens(s, g).unwrap()
    }

    #[test]
    fn absorption() {
        let s = ns(&[4, 5, 6]);
        assert_eq!(id(&s, &[4, 8, 11]).gens(), &[4, 11]);
        let i = id(&s, &[4, 11]);
        assert!(i.is_integral());
        assert_eq!(i.min(), 4);
        assert_eq!(i.stable_from(), 8);
        assert!(!i.contains(5));
        assert!(i.contains(11));
    }

    #[test]
    fn ideal_l_is_minimal() {
        let s = ns(&[9, 11, 13, 14, 15, 17]);
        let l = id(&s, &[26, 30, 32, 34, 36, 38, 42]);
        assert_eq!(l.gens(), &[26, 30, 32, 34, 36, 38, 42]);
    }

    #[test]
    fn fractional_ideal() {
        let s = ns(&[9, 10, 11, 12, 15]);
        let i = id(&s, &[0, 1]);
        assert_eq!(i.gens(), &[0, 1]);
        assert!(!i.is_integral());
        let neg = id(&s, &[-3, 5]);
        assert_eq!(neg.min(), -3);
        assert!(neg.contains(6));
    }

    #[test]
    fn colon_by_maximal_ideal() {
        let s = ns(&[4, 5, 6]);
        let m = ValueIdeal::maximal(&s);
        assert_eq!(id(&s, &[4]).colon_in_ring(&m).gens(), &[4, 11]);

        let s = ns(&[7, 9, 11, 13]);
        let m = ValueIdeal::maximal(&s);
        assert_eq!(id(&s, &[14]).colon_in_ring(&m).gens(), &[14, 29, 31, 33]);

        let s = ns(&[9, 11, 13, 14, 15, 17]);
        let m = ValueIdeal::maximal(&s);
        assert_eq!(
            id(&s, &[26, 30, 32]).colon_in_ring(&m).gens(),
            &[26, 30, 32, 34, 36, 38, 42]
        );
    }

    #[test]
    fn products() {
        let s = ns(&[4, 5, 6]);
        let m = ValueIdeal::maximal(&s);
        assert_eq!(m.product(&id(&s, &[4, 5])).gens(), &[8, 9, 10, 11]);
        assert_eq!(m.product(&id(&s, &[4, 11])).gens(), &[8, 9, 10]);
        let a = id(&s, &[5, 6]);
        assert_eq!(ValueIdeal::unit(&s).product(&a), a);
    }

    #[test]
    fn duals() {
        let s = ns(&[4, 5, 6]);
        let d = id(&s, &[4, 11]).dual();
        assert_eq!(d.gens(), &[0, 1, 2]);
        assert!(d.iso_up_to_shift(&ValueIdeal::maximal(&s)));
        let r = ValueIdeal::unit(&s);
        assert_eq!(r.dual(), r);

        let s = ns(&[9, 11, 13, 14, 15, 17]);
        let l = id(&s, &[26, 30, 32, 34, 36, 38, 42]);
        // R : L, frozen from the brute-force colon scan.
        assert_eq!(l.dual().gens(), &[-12, -8, -6, -4, -2, 0, 4]);
        assert!(!l.dual().iso_up_to_shift(&ValueIdeal::maximal(&s)));
    }

    #[test]
    fn canonical_ideals() {
        assert_eq!(
            ValueIdeal::canonical(&ns(&[9, 10, 11, 12, 15])).gens(),
            &[0, 1, 3, 4]
        );
        assert_eq!(ValueIdeal::canonical(&ns(&[4, 5, 6])).gens(), &[0]);
        assert_eq!(ValueIdeal::canonical(&ns(&[2, 3])).gens(), &[0]);
        assert_eq!(ValueIdeal::canonical(&ns(&[1])).gens(), &[0]);
    }

    #[test]
    fn daggers() {
        let s = ns(&[9, 10, 11, 12, 15]);
        let w = ValueIdeal::canonical(&s);
        let i = id(&s, &[0, 1]);
        let dag = i.dagger();
        assert_eq!(dag.gens(), &[0, 3]);
        for v in -5..40 {
            assert_eq!(dag.contains(v), w.contains(v) && w.contains(v + 1));
        }
        assert_eq!(ValueIdeal::unit(&s).dagger(), w);
        assert_eq!(w.dagger(), ValueIdeal::unit(&s));
    }

    #[test]
    fn closures() {
        let s = ns(&[4, 5, 6]);
        let i = id(&s, &[4, 11]);
        assert_eq!(i.integral_closure().unwrap().gens(), &[4, 5, 6]);
        assert!(!i.is_integrally_closed().unwrap());
        let m = ValueIdeal::maximal(&s);
        assert!(m.is_integrally_closed().unwrap());

        let s = ns(&[7, 9, 11, 13]);
        let i = id(&s, &[14, 29, 31, 33]);
        assert_eq!(
            i.integral_closure().unwrap().gens(),
            &[14, 16, 18, 20, 22, 24, 26]
        );
        let frac = id(&s, &[-1]);
        assert_eq!(frac.integral_closure().unwrap_err(), Error::NotIntegral);
    }

    #[test]
    fn mu_and_length() {
        let s = ns(&[4, 5, 6]);
        let i = id(&s, &[4, 11]);
        let q = id(&s, &[4]);
        assert_eq!(i.mu(), 2);
        assert_eq!(i.length_quotient(&q).unwrap(), 1);
        let r = ValueIdeal::unit(&s);
        assert_eq!(r.mu(), 1);
        assert_eq!(r.length_quotient(&r).unwrap(), 0);
        assert_eq!(q.length_quotient(&i).unwrap_err(), Error::NotContained);

        let s = ns(&[7, 9, 11, 13]);
        let i = id(&s, &[14, 29, 31, 33]);
        assert_eq!(i.length_quotient(&id(&s, &[14])).unwrap(), 3);
    }

    #[test]
    fn weakly_m_full() {
        let s = ns(&[4, 5, 6]);
        assert!(id(&s, &[4, 11]).is_weakly_m_full());
        assert_eq!(id(&s, &[4, 5]).weakly_m_full_witness(), Some(6));
        assert!(!id(&s, &[4, 6]).is_weakly_m_full());
        assert!(!id(&s, &[5]).is_weakly_m_full());
        let s = ns(&[9, 11, 13, 14, 15, 17]);
        assert!(id(&s, &[26, 30, 32, 34, 36, 38, 42]).is_weakly_m_full());
    }

    #[test]
    fn reflexive_and_principal() {
        let s = ns(&[4, 5, 6]);
        assert!(ValueIdeal::unit(&s).is_reflexive());
        assert!(id(&s, &[4]).is_principal());
        let s = ns(&[9, 10, 11, 12, 15]);
        let i = id(&s, &[0, 1]);
        // R : (R : I) = (0, 1, 14, 17) by the colon scan.
        assert_eq!(i.dual().dual().gens(), &[0, 1, 14, 17]);
        assert!(!i.is_reflexive());
    }

    #[test]
    fn canonical_duality_counts_gaps() {
        for g in [
            [4, 5, 6].as_slice(),
            &[7, 9, 11, 13],
            &[9, 10, 11, 12, 15],
            &[3, 5, 7],
        ] {
            let s = ns(g);
            let w = ValueIdeal::canonical(&s);
            assert_eq!(w.min(), 0);
            let in_range = w.values_in(0, s.frobenius() + 1).count();
            assert_eq!(in_range, s.gaps().len(), "{s}");
        }
    }
}
