use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::is_prime;

/// Coefficient field selection; the prime must be one the binary was built
/// for (see [`FieldChoice::SUPPORTED_PRIMES`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldChoice {
    Q,
    Fp(u32),
}

impl FieldChoice {
    pub const SUPPORTED_PRIMES: [u32; 8] = [2, 3, 5, 7, 101, 32003, 65521, 2147483647];

    pub fn label(&self) -> String {
        match self {
            FieldChoice::Q => "Q".into(),
            FieldChoice::Fp(p) => format!("F{p}"),
        }
    }
}

/// Runs `$body` with `$F` bound to the coefficient type selected by a
/// [`FieldChoice`]. `$body` must evaluate to a `Result`.
#[macro_export]
macro_rules! with_field {
    ($choice:expr, $F:ident => $body:expr) => {{
        match $choice {
            $crate::FieldChoice::Q => {
                type $F = $crate::Rational;
                $body
            }
            $crate::FieldChoice::Fp(2) => {
                type $F = $crate::Fp<2>;
                $body
            }
            $crate::FieldChoice::Fp(3) => {
                type $F = $crate::Fp<3>;
                $body
            }
            $crate::FieldChoice::Fp(5) => {
                type $F = $crate::Fp<5>;
                $body
            }
            $crate::FieldChoice::Fp(7) => {
                type $F = $crate::Fp<7>;
                $body
            }
            $crate::FieldChoice::Fp(101) => {
                type $F = $crate::Fp<101>;
                $body
            }
            $crate::FieldChoice::Fp(32003) => {
                type $F = $crate::Fp<32003>;
                $body
            }
            $crate::FieldChoice::Fp(65521) => {
                type $F = $crate::Fp<65521>;
                $body
            }
            $crate::FieldChoice::Fp(2147483647) => {
                type $F = $crate::Fp<2147483647>;
                $body
            }
            $crate::FieldChoice::Fp(p) => {
                Err($crate::Error::Config(format!("prime {p} not supported")))
            }
        }
    }};
}

/// Degree cap for degreewise linear algebra.
///
/// `Auto` derives the cap per call from that call's inputs as
/// `2 * (conductor + max |shift|) + multiplicity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DegreeBound {
    Auto,
    Fixed(i64),
}

impl DegreeBound {
    pub fn resolve(&self, conductor: i64, max_abs_shift: i64, multiplicity: i64) -> i64 {
        match *self {
            DegreeBound::Auto => 2 * (conductor + max_abs_shift) + multiplicity,
            DegreeBound::Fixed(b) => b,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Config {
    pub field: FieldChoice,
    pub degree_bound: DegreeBound,
    pub tor_max_index: usize,
    pub trials: usize,
    pub seed: u64,
    pub parallelism: usize,
    pub output: OutputFormat,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            field: FieldChoice::Q,
            degree_bound: DegreeBound::Auto,
            tor_max_index: 3,
            trials: 64,
            seed: 0,
            parallelism: 1,
            output: OutputFormat::Text,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        if let FieldChoice::Fp(p) = self.field {
            if !is_prime(p as u64) {
                return Err(Error::Config(format!("{p} is not prime")));
            }
            if !FieldChoice::SUPPORTED_PRIMES.contains(&p) {
                return Err(Error::Config(format!(
                    "prime {p} not supported; choose one of {:?}",
                    FieldChoice::SUPPORTED_PRIMES
                )));
            }
        }
        if self.trials == 0 || self.parallelism == 0 || self.tor_max_index == 0 {
            return Err(Error::Config("counts must be positive".into()));
        }
        if let DegreeBound::Fixed(b) = self.degree_bound {
            if b <= 0 {
                return Err(Error::Config("degree bound must be positive".into()));
            }
        }
        Ok(())
    }
}
