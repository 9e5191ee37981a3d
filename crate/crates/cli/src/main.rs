//! `numsemi`: command-line front end.
//!
//! Exit codes: 0 success, 1 property-suite failure, 2 parse or
//! configuration error, 3 degree bound exceeded, 4 reproduction mismatch.
//!
//! With `--json` every command prints JSON carrying `"schema": 1`: one
//! object for `semigroup`, `ideal`, `suite`; a `ReproOutcome` for `repro`;
//! for `hunt` a JSON-lines stream with one `InstanceReport` per hit or
//! bound-limited instance, in canonical order, followed by a
//! `{"schema": 1, "summary": ...}` line.

mod cache;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use numsemi::config::OutputFormat;
use numsemi::homology::{present_quotient, tor, TorLength};
use numsemi::lab::{
    self, hunt, predicates, repro_all, repro_example, torsion_measure, ExampleId, HuntConfig,
    HuntMode, IdealFilter, Measurement, Predicates, ReproOutcome, SemigroupFamily, ValueSet,
    SCHEMA,
};
use numsemi::parse::{parse_ideal, parse_semigroup};
use numsemi::{
    with_field, Config, DegreeBound, Error, FieldChoice, NumericalSemigroup, ValueIdeal,
};

#[derive(Parser)]
#[command(
    name = "numsemi",
    version,
    about = "Ideals and homology over numerical semigroup rings"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Coefficient field: Q, or a supported prime such as 32003 (also F32003).
    #[arg(long, global = true, default_value = "Q")]
    field: String,
    /// Degree bound for graded linear algebra: `auto` or a positive integer.
    #[arg(long, global = true, default_value = "auto")]
    bound: String,
    /// Largest Tor index computed by `ideal --tor-with`.
    #[arg(long = "tor-max", global = true, default_value_t = 3)]
    tor_max: usize,
    /// Random trials for m-fullness.
    #[arg(long, global = true, default_value_t = 64)]
    trials: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for `hunt`.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[arg(long, global = true)]
    json: bool,
    /// Append-only JSON-lines results cache.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Skip hunt instances with a smaller canonical index.
    #[arg(long = "skip-to", global = true, default_value_t = 0)]
    skip_to: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a semigroup, e.g. `S=<4,5,6>`.
    Semigroup { gens: String },
    /// Operations on a monomial ideal, e.g. `S=<4,5,6> I=(4,11) --predicates`.
    Ideal(IdealArgs),
    /// Re-derive the worked examples and compare with the stated values.
    Repro {
        /// Only this example (e.g. Ex_L_big).
        #[arg(long)]
        example: Option<String>,
    },
    /// Search enumerated ideals for torsion-free tensor products.
    Hunt(HuntArgs),
    /// Randomized property suite.
    Suite {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Semigroups to sample from; defaults to the built-in list.
        #[arg(long = "semigroups")]
        semigroups: Vec<String>,
    },
}

#[derive(Args, Serialize)]
struct IdealArgs {
    semigroup: String,
    ideal: String,
    #[arg(long)]
    dual: bool,
    #[arg(long)]
    dagger: bool,
    /// `I :_R m` for integral `I`, `I : m` otherwise.
    #[arg(long = "colon-m")]
    colon_m: bool,
    #[arg(long)]
    closure: bool,
    #[arg(long)]
    predicates: bool,
    #[arg(long = "torsion-star")]
    torsion_star: bool,
    #[arg(long = "torsion-dagger")]
    torsion_dagger: bool,
    /// Lengths of `Tor_i(R/I, R/J)` for `1 <= i <= --tor-max`.
    #[arg(long = "tor-with")]
    tor_with: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Star,
    Dagger,
}

#[derive(Args)]
struct HuntArgs {
    #[arg(long, value_enum, default_value = "star")]
    mode: Mode,
    /// Semigroup generators, e.g. `9,10,11,12,15`; repeatable.
    #[arg(long = "semigroups")]
    semigroups: Vec<String>,
    /// Enumerate all semigroups with generators up to this value instead.
    #[arg(long = "max-generator", requires = "max_frobenius")]
    max_generator: Option<i64>,
    #[arg(long = "max-frobenius")]
    max_frobenius: Option<i64>,
    /// Largest generator value of enumerated ideals; default 2 * conductor.
    #[arg(long)]
    cap: Option<i64>,
    #[arg(long)]
    reflexive: bool,
    #[arg(long = "weakly-m-full")]
    weakly_m_full: bool,
    #[arg(long = "non-principal")]
    non_principal: bool,
    #[arg(long = "max-gens")]
    max_gens: Option<usize>,
    #[arg(long = "minimal-multiplicity")]
    minimal_multiplicity: bool,
}

#[derive(Serialize, Deserialize)]
pub struct TorEntry {
    pub index: usize,
    pub length: TorLength,
}

/// Output of `ideal`; only the requested fields are present.
#[derive(Serialize, Deserialize)]
pub struct IdealOutput {
    pub schema: u32,
    pub field: String,
    pub semigroup: Vec<i64>,
    pub ideal: ValueSet,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dual: Option<ValueSet>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dagger: Option<ValueSet>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub colon_m: Option<ValueSet>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub closure: Option<ValueSet>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub predicates: Option<Predicates>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub torsion_star: Option<Measurement>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub torsion_dagger: Option<Measurement>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tor: Option<Vec<TorEntry>>,
}

impl IdealOutput {
    fn bound_limited(&self) -> bool {
        [self.torsion_star, self.torsion_dagger]
            .iter()
            .flatten()
            .any(|m| m.value().is_none())
    }
}

/// Failure with its exit code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BoundExceeded { .. } => 3,
            _ => 2,
        };
        Fail(code, e.to_string())
    }
}

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Self {
        Fail(2, format!("cache: {e}"))
    }
}

fn parse_field(s: &str) -> Result<FieldChoice, Fail> {
    let t = s.trim();
    if ["q", "qq", "rational", "rationals"].contains(&t.to_ascii_lowercase().as_str()) {
        return Ok(FieldChoice::Q);
    }
    let digits = t.trim_start_matches(|c: char| c.is_ascii_alphabetic());
    digits
        .parse::<u32>()
        .map(FieldChoice::Fp)
        .map_err(|_| Fail(2, format!("unknown field {s:?}; use Q or a prime")))
}

fn parse_bound(s: &str) -> Result<DegreeBound, Fail> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(DegreeBound::Auto);
    }
    s.parse::<i64>()
        .map(DegreeBound::Fixed)
        .map_err(|_| Fail(2, format!("bad --bound {s:?}; use auto or an integer")))
}

fn config(g: &Global) -> Result<Config, Fail> {
    let cfg = Config {
        field: parse_field(&g.field)?,
        degree_bound: parse_bound(&g.bound)?,
        tor_max_index: g.tor_max,
        trials: g.trials,
        seed: g.seed,
        parallelism: g.jobs,
        output: if g.json {
            OutputFormat::Json
        } else {
            OutputFormat::Text
        },
    };
    cfg.validate()?;
    Ok(cfg)
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("outputs serialize")
}

/// Looks `key` up in the cache, computing and appending on a miss.
fn cached<T, K>(
    cache: &Option<PathBuf>,
    key: &K,
    compute: impl FnOnce() -> Result<T, Fail>,
) -> Result<T, Fail>
where
    T: Serialize + for<'de> Deserialize<'de>,
    K: Serialize,
{
    let Some(path) = cache else {
        return compute();
    };
    let mut c = cache::Cache::open(path)?;
    let k = cache::key(key);
    if let Some(v) = c
        .get(&k)
        .and_then(|v| serde_json::from_value(v.clone()).ok())
    {
        return Ok(v);
    }
    let v = compute()?;
    c.put(k, serde_json::to_value(&v).expect("outputs serialize"))?;
    Ok(v)
}

fn semigroup_of(text: &str) -> Result<Arc<NumericalSemigroup>, Fail> {
    Ok(Arc::new(NumericalSemigroup::new(&parse_semigroup(text)?)?))
}

fn cmd_semigroup(text: &str, cfg: &Config, g: &Global) -> Result<u8, Fail> {
    let gens = parse_semigroup(text)?;
    let info = cached(&g.cache, &("semigroup", &gens), || {
        Ok(NumericalSemigroup::new(&gens)?.info())
    })?;
    match cfg.output {
        OutputFormat::Json => {
            let mut v = serde_json::to_value(&info).expect("outputs serialize");
            v["schema"] = SCHEMA.into();
            println!("{v}");
        }
        OutputFormat::Text => println!("{}", render::semigroup(&info)),
    }
    Ok(0)
}

fn compute_ideal(a: &IdealArgs, cfg: &Config) -> Result<IdealOutput, Fail> {
    let s = semigroup_of(&a.semigroup)?;
    let i = ValueIdeal::from_gens(&s, &parse_ideal(&a.ideal)?)?;
    let any = a.dual
        || a.dagger
        || a.colon_m
        || a.closure
        || a.predicates
        || a.torsion_star
        || a.torsion_dagger
        || a.tor_with.is_some();
    // With no operation flags, show the cheap ones.
    let (dual, dagger, colon_m, preds) = if any {
        (a.dual, a.dagger, a.colon_m, a.predicates)
    } else {
        (true, true, true, true)
    };
    let m = ValueIdeal::maximal(&s);
    let colon = |i: &ValueIdeal| {
        if i.is_integral() {
            i.colon_in_ring(&m)
        } else {
            i.colon(&m)
        }
    };

    let mut out = IdealOutput {
        schema: SCHEMA,
        field: cfg.field.label(),
        semigroup: s.generators().to_vec(),
        ideal: ValueSet::from(&i),
        dual: dual.then(|| ValueSet::from(&i.dual())),
        dagger: dagger.then(|| ValueSet::from(&i.dagger())),
        colon_m: colon_m.then(|| ValueSet::from(&colon(&i))),
        closure: None,
        predicates: None,
        torsion_star: None,
        torsion_dagger: None,
        tor: None,
    };
    if a.closure {
        out.closure = Some(ValueSet::from(&i.integral_closure()?));
    }
    if preds {
        out.predicates = Some(predicates(&i, cfg)?);
    }
    with_field!(cfg.field, F => {
        if a.torsion_star {
            out.torsion_star = Some(torsion_measure::<F>(&i, &i.dual(), cfg)?);
        }
        if a.torsion_dagger {
            out.torsion_dagger = Some(torsion_measure::<F>(&i, &i.dagger(), cfg)?);
        }
        if let Some(j) = &a.tor_with {
            let j = ValueIdeal::from_gens(&s, &parse_ideal(j)?)?;
            let (pi, pj) = (present_quotient::<F>(&i)?, present_quotient::<F>(&j)?);
            let mut entries = Vec::new();
            for k in 1..=cfg.tor_max_index {
                let r = tor(&pi, &pj, k, cfg.degree_bound)?;
                entries.push(TorEntry { index: k, length: r.length });
            }
            out.tor = Some(entries);
        }
        Ok::<(), Error>(())
    })?;
    Ok(out)
}

fn cmd_ideal(a: &IdealArgs, cfg: &Config, g: &Global) -> Result<u8, Fail> {
    let out = {
        // The output format does not change the result.
        let key_cfg = Config {
            output: OutputFormat::Json,
            ..cfg.clone()
        };
        cached(&g.cache, &("ideal", a, key_cfg), || compute_ideal(a, cfg))?
    };
    match cfg.output {
        OutputFormat::Json => println!("{}", json(&out)),
        OutputFormat::Text => println!("{}", render::ideal(&out)),
    }
    Ok(if out.bound_limited() { 3 } else { 0 })
}

fn cmd_repro(example: &Option<String>, cfg: &Config) -> Result<u8, Fail> {
    let outcome = match example {
        None => repro_all(cfg)?,
        Some(id) => {
            let r = repro_example(id.parse::<ExampleId>()?, cfg)?;
            ReproOutcome {
                mismatches: r.failed_checks().count(),
                bound_limited: usize::from(r.bound_limited()),
                reports: vec![r],
            }
        }
    };
    match cfg.output {
        OutputFormat::Json => {
            let mut v = serde_json::to_value(&outcome).expect("outputs serialize");
            v["schema"] = SCHEMA.into();
            println!("{v}");
        }
        OutputFormat::Text => println!("{}", render::repro(&outcome)),
    }
    Ok(if outcome.mismatches > 0 {
        4
    } else if outcome.bound_limited > 0 {
        3
    } else {
        0
    })
}

fn cmd_hunt(a: &HuntArgs, cfg: &Config, g: &Global) -> Result<u8, Fail> {
    let family = match (a.max_generator, a.max_frobenius) {
        (Some(max_generator), Some(max_frobenius)) if a.semigroups.is_empty() => {
            SemigroupFamily::Bounded {
                max_generator,
                max_frobenius,
            }
        }
        (None, None) if !a.semigroups.is_empty() => SemigroupFamily::Explicit(
            a.semigroups
                .iter()
                .map(|s| parse_semigroup(s))
                .collect::<Result<_, _>>()?,
        ),
        _ => {
            return Err(Fail(
                2,
                "give either --semigroups or both --max-generator and --max-frobenius".into(),
            ))
        }
    };
    let hunt_cfg = HuntConfig {
        cap: a.cap,
        filter: IdealFilter {
            reflexive_only: a.reflexive,
            weakly_m_full_only: a.weakly_m_full,
            non_principal_only: a.non_principal,
            max_gens: a.max_gens,
        },
        minimal_multiplicity_only: a.minimal_multiplicity,
        skip_to: g.skip_to,
        ..HuntConfig::new(
            family,
            match a.mode {
                Mode::Star => HuntMode::Star,
                Mode::Dagger => HuntMode::Dagger,
            },
        )
    };
    let report = hunt(cfg, &hunt_cfg)?;
    match cfg.output {
        OutputFormat::Json => {
            let mut lines: Vec<&lab::InstanceReport> =
                report.hits.iter().chain(&report.unknown).collect();
            lines.sort_by_key(|r| r.index);
            for r in lines {
                println!("{}", r.to_json());
            }
            println!(
                "{}",
                json(&serde_json::json!({ "schema": SCHEMA, "summary": report.summary }))
            );
        }
        OutputFormat::Text => println!("{}", render::hunt(&report)),
    }
    Ok(0)
}

fn cmd_suite(samples: usize, semigroups: &[String], cfg: &Config) -> Result<u8, Fail> {
    let list = if semigroups.is_empty() {
        lab::suite_semigroups()
    } else {
        semigroups
            .iter()
            .map(|s| parse_semigroup(s))
            .collect::<Result<_, _>>()?
    };
    let report = lab::property_suite(cfg.seed, samples, &list, cfg)?;
    match cfg.output {
        OutputFormat::Json => println!("{}", json(&report)),
        OutputFormat::Text => println!("{}", render::suite(&report)),
    }
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn run(cli: &Cli) -> Result<u8, Fail> {
    let cfg = config(&cli.global)?;
    match &cli.command {
        Command::Semigroup { gens } => cmd_semigroup(gens, &cfg, &cli.global),
        Command::Ideal(a) => cmd_ideal(a, &cfg, &cli.global),
        Command::Repro { example } => cmd_repro(example, &cfg),
        Command::Hunt(a) => cmd_hunt(a, &cfg, &cli.global),
        Command::Suite {
            samples,
            semigroups,
        } => cmd_suite(*samples, semigroups, &cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
