//! Run configuration and JSON reports.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use cyclic_ainf::field::is_prime;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

/// Prime fields the suites are compiled for.
pub const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("unknown field {0:?}; use `rational` or `p<prime>` such as `p5`")]
    UnknownField(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is not compiled in; available: 2, 3, 5, 7, 11, 13")]
    UnsupportedPrime(u64),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("{0} must be at least 1")]
    TooSmall(&'static str),
    #[error("cannot read {path}: {reason}")]
    Input { path: String, reason: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldChoice {
    Rational,
    Prime(u64),
}

impl FromStr for FieldChoice {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, ConfigError> {
        let s = s.trim().to_ascii_lowercase();
        if s == "rational" || s == "q" {
            return Ok(FieldChoice::Rational);
        }
        let digits = s.strip_prefix("prime:").or_else(|| s.strip_prefix('p')).unwrap_or(&s);
        let p: u64 = digits.parse().map_err(|_| ConfigError::UnknownField(s.clone()))?;
        if !is_prime(p) {
            return Err(ConfigError::NotPrime(p));
        }
        if !PRIMES.contains(&p) {
            return Err(ConfigError::UnsupportedPrime(p));
        }
        Ok(FieldChoice::Prime(p))
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rational => write!(f, "rational"),
            FieldChoice::Prime(p) => write!(f, "p{p}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    AinfLaws,
    FunctorLaws,
    TheoremCyclic,
    QuiverCompare,
    GradedSquare,
    RibbonDiagram,
    HomTable,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::AinfLaws,
        Suite::FunctorLaws,
        Suite::TheoremCyclic,
        Suite::QuiverCompare,
        Suite::GradedSquare,
        Suite::RibbonDiagram,
        Suite::HomTable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::AinfLaws => "ainf-laws",
            Suite::FunctorLaws => "functor-laws",
            Suite::TheoremCyclic => "theorem-cyclic",
            Suite::QuiverCompare => "quiver-compare",
            Suite::GradedSquare => "graded-square",
            Suite::RibbonDiagram => "ribbon-diagram",
            Suite::HomTable => "hom-table",
        }
    }
}

impl FromStr for Suite {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, ConfigError> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| ConfigError::UnknownSuite(s.into()))
    }
}

/// Deliberate corruptions, each picked up by the suite that exercises it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// Negate one composition of the cyclic category (ainf-laws, quiver-compare).
    FlipSign,
    /// Drop one full cycle of the cyclic category (ainf-laws, quiver-compare).
    DropCycle,
    /// Zero the interval component at the image of `s_0` (functor-laws).
    ZeroInterval,
    /// Skip removal of zero objects when composing pullbacks (theorem-cyclic).
    SkipNormalization,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub field: FieldChoice,
    pub max_size: Option<usize>,
    pub max_len: Option<usize>,
    pub seed: u64,
    pub mutation: Option<Mutation>,
    /// Ribbon graph input for `ribbon-diagram`.
    pub graph: Option<PathBuf>,
    /// A point pair `{a, b}` for a graded `hom-table`.
    pub pair: Option<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            field: FieldChoice::Rational,
            max_size: None,
            max_len: None,
            seed: 0,
            mutation: None,
            graph: None,
            pair: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.max_size == Some(0) {
            return Err(ConfigError::TooSmall("max-size"));
        }
        if self.max_len == Some(0) {
            return Err(ConfigError::TooSmall("max-len"));
        }
        Ok(())
    }
}

/// One failing case with the data needed to rerun it.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub case: String,
    pub witness: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub config: RunConfig,
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<Failure>,
    /// Suite-specific results such as tables and counts.
    pub details: Value,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn exit_code(&self) -> i32 {
        if self.is_ok() {
            0
        } else {
            1
        }
    }

    /// Plain-text rendering of the JSON report.
    pub fn summary(&self) -> String {
        let mut out = format!(
            "{}: {} checked, {} passed, {} failed ({} ms)\n",
            self.suite.name(),
            self.checked,
            self.passed,
            self.failed,
            self.elapsed_ms
        );
        for f in self.failures.iter().take(5) {
            out += &format!("  FAIL {}: {}\n", f.case, f.witness);
        }
        if self.failures.len() > 5 {
            out += &format!("  ... and {} more\n", self.failures.len() - 5);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_names() {
        assert_eq!("rational".parse::<FieldChoice>(), Ok(FieldChoice::Rational));
        assert_eq!("p5".parse::<FieldChoice>(), Ok(FieldChoice::Prime(5)));
        assert_eq!("prime:7".parse::<FieldChoice>(), Ok(FieldChoice::Prime(7)));
        assert_eq!("p4".parse::<FieldChoice>(), Err(ConfigError::NotPrime(4)));
        assert_eq!("p17".parse::<FieldChoice>(), Err(ConfigError::UnsupportedPrime(17)));
        assert!("reals".parse::<FieldChoice>().is_err());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
    }

    #[test]
    fn zero_bounds_are_rejected() {
        let cfg = RunConfig { max_size: Some(0), ..RunConfig::default() };
        assert_eq!(cfg.validate(), Err(ConfigError::TooSmall("max-size")));
    }
}
