//! Plain-text rendering.

use numsemi::lab::{
    Classification, FlagKind, HuntReport, InstanceReport, Measurement, Predicates, ReproOutcome,
    SuiteReport, ValueSet,
};
use numsemi::semigroup::SemigroupInfo;

use crate::IdealOutput;

fn list(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// `(g1,...,gk) = {v1, v2, …(all ≥ b)}`.
pub fn value_set(v: &ValueSet) -> String {
    let mut shown: Vec<String> = v.values.iter().map(i64::to_string).collect();
    shown.push(format!("…(all ≥ {})", v.stable_from));
    format!("({}) = {{{}}}", list(&v.gens), shown.join(", "))
}

pub fn measurement(m: &Measurement) -> String {
    match m {
        Measurement::Length(n) => n.to_string(),
        Measurement::BoundExceeded { bound, required } => {
            format!("unknown (bound {bound} below required {required})")
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn semigroup(i: &SemigroupInfo) -> String {
    [
        format!("S = <{}>", list(&i.generators)),
        format!("frobenius {}, conductor {}", i.frobenius, i.conductor),
        format!("gaps {{{}}}", list(&i.gaps)),
        format!("pseudo-frobenius {{{}}}", list(&i.pf_numbers)),
        format!("apery({}) {{{}}}", i.multiplicity, list(&i.apery)),
        format!(
            "multiplicity {}, embdim {}, type {}",
            i.multiplicity, i.embdim, i.cm_type
        ),
        format!(
            "minimal multiplicity {}, gorenstein {}",
            yes(i.minimal_multiplicity),
            yes(i.gorenstein)
        ),
    ]
    .join("\n")
}

fn predicates(p: &Predicates) -> Vec<String> {
    let mut out = vec![match p.weakly_m_full_witness {
        None => "weakly m-full: yes".to_string(),
        Some(w) => format!("weakly m-full: no (witness {w})"),
    }];
    if let Some(m) = &p.m_full {
        let mut line = format!("m-full: {}", m.verdict);
        if let Some(w) = &m.witness {
            line += &format!(" (x = {w})");
        }
        if let Some(t) = m.trials {
            line += &format!(" after {t} trials");
        }
        out.push(line);
    }
    if let Some(c) = p.integrally_closed {
        out.push(format!("integrally closed: {}", yes(c)));
    }
    out.push(format!("reflexive: {}", yes(p.reflexive)));
    out.push(format!("principal: {}", yes(p.principal)));
    out
}

pub fn ideal(o: &IdealOutput) -> String {
    let mut out = vec![
        format!("S = <{}> over {}", list(&o.semigroup), o.field),
        format!("I {}", value_set(&o.ideal)),
    ];
    let sets = [
        ("I*", &o.dual),
        ("I†", &o.dagger),
        ("I : m", &o.colon_m),
        ("closure", &o.closure),
    ];
    for (name, v) in sets {
        if let Some(v) = v {
            out.push(format!("{name} {}", value_set(v)));
        }
    }
    if let Some(p) = &o.predicates {
        out.extend(predicates(p));
    }
    if let Some(t) = &o.torsion_star {
        out.push(format!("length T(I ⊗ I*): {}", measurement(t)));
    }
    if let Some(t) = &o.torsion_dagger {
        out.push(format!("length T(I ⊗ I†): {}", measurement(t)));
    }
    if let Some(tor) = &o.tor {
        for t in tor {
            out.push(format!("length Tor_{}(R/I, R/J): {}", t.index, t.length));
        }
    }
    out.join("\n")
}

fn flags(r: &InstanceReport) -> String {
    r.flags
        .iter()
        .map(|f| {
            let v = match f.value {
                _ if f.failed() => "FALSE",
                Some(true) => "true",
                Some(false) => "false",
                None => "unknown",
            };
            format!("{}={v}", f.name)
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn instance_line(r: &InstanceReport) -> String {
    let mut line = String::new();
    if let Some(k) = r.index {
        line += &format!("#{k} ");
    }
    if let Some(l) = &r.label {
        line += &format!("{l} ");
    }
    line += &format!("<{}> ({})", list(&r.semigroup), list(&r.ideal));
    if let Some(t) = &r.torsion_star {
        line += &format!(" torsion* {}", measurement(t));
    }
    if let Some(t) = &r.torsion_dagger {
        line += &format!(" torsion† {}", measurement(t));
    }
    if r.dagger_tensor_is_omega == Some(true) {
        line += " I⊗I†≅ω";
    }
    line += &format!(" class {:?} {}", r.classification, flags(r));
    line
}

pub fn repro(o: &ReproOutcome) -> String {
    let mut out = Vec::new();
    for r in &o.reports {
        out.push(r.label.clone().unwrap_or_default());
        for f in &r.flags {
            let status = if f.failed() {
                "MISMATCH"
            } else if f.undecided() {
                "BOUND"
            } else if f.kind == FlagKind::Finding {
                "info"
            } else {
                "ok"
            };
            let v = f.value.map_or("unknown".to_string(), |b| b.to_string());
            out.push(format!("  {status:<8} {} = {v}  ({})", f.name, f.detail));
        }
    }
    out.push(format!(
        "{} examples, {} mismatches, {} bound-limited",
        o.reports.len(),
        o.mismatches,
        o.bound_limited
    ));
    out.join("\n")
}

pub fn hunt(h: &HuntReport) -> String {
    let mut out = Vec::new();
    for r in h.hits.iter().chain(&h.unknown) {
        let tag = if r.flag("Q42_interesting").and_then(|f| f.value) == Some(true) {
            "[discovery] "
        } else if r.bound_limited() {
            "[unknown] "
        } else {
            ""
        };
        out.push(format!("{tag}{}", instance_line(r)));
    }
    let s = &h.summary;
    out.push(format!("semigroups        {}", s.semigroups));
    out.push(format!("instances         {}", s.scanned));
    out.push(format!("torsion-free      {}", s.torsion_free));
    out.push(format!("bound-limited     {}", s.bound_limited));
    out.push(format!("failed checks     {}", s.failed_checks));
    for c in [
        Classification::IsoToR,
        Classification::IsoToOmega,
        Classification::Other,
    ] {
        let name = format!("{c:?}");
        let n = s.classification.get(&name).copied().unwrap_or(0);
        out.push(format!("  {name:<15} {n}"));
    }
    out.join("\n")
}

pub fn suite(s: &SuiteReport) -> String {
    let mut out = vec![format!("seed {}, {} samples", s.seed, s.samples)];
    for p in &s.properties {
        let status = if p.passed { "pass" } else { "FAIL" };
        out.push(format!("  {status} {:<45} {} checked", p.name, p.checked));
        if let Some(w) = &p.witness {
            out.push(format!("       witness: {w}"));
        }
    }
    out.join("\n")
}
