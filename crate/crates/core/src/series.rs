//! Number series driven by navigation rules.
//!
//! A rule is a cyclic list of steps. `Split` reads a Dec/Hex string on a
//! seven-segment display and rewrites it as OILU digit pairs, `Merge` goes
//! back, and `Facet` turns the OILU stack. OILU digits are re-read as decimal
//! digits between steps, so every member is a plain digit string.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::numbers::{OiluNumber, ParseError};
use crate::sevenseg::{merge_number, split_number, Base, SplitError, SplitStrategy};

pub const DEFAULT_MAX_LENGTH: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Split(SplitStrategy),
    Merge(SplitStrategy),
    /// Quarter turns, `0..=3`.
    Facet(u8),
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Split(s) => write!(f, "split:{s}"),
            Step::Merge(s) => write!(f, "merge:{s}"),
            Step::Facet(k) => write!(f, "facet:{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleParseError {
    #[error("empty navigation rule")]
    Empty,
    #[error("bad rule token '{0}', expected split:a|b|c, merge:a|b|c or facet:0..3")]
    BadToken(String),
}

impl FromStr for Step {
    type Err = RuleParseError;

    fn from_str(token: &str) -> Result<Self, Self::Err> {
        let bad = || RuleParseError::BadToken(token.to_string());
        let (op, arg) = token.trim().split_once(':').ok_or_else(bad)?;
        match op.to_ascii_lowercase().as_str() {
            "split" => arg.parse().map(Step::Split).map_err(|_| bad()),
            "merge" => arg.parse().map(Step::Merge).map_err(|_| bad()),
            "facet" => match arg.parse::<u8>() {
                Ok(k) if k <= 3 => Ok(Step::Facet(k)),
                _ => Err(bad()),
            },
            _ => Err(bad()),
        }
    }
}

/// Nonempty sequence of steps, applied cyclically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NavRule(Vec<Step>);

impl NavRule {
    pub fn new(steps: Vec<Step>) -> Result<NavRule, RuleParseError> {
        if steps.is_empty() {
            return Err(RuleParseError::Empty);
        }
        Ok(NavRule(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    /// Step applied at iteration `i`.
    pub fn step(&self, i: usize) -> Step {
        self.0[i % self.0.len()]
    }
}

impl FromStr for NavRule {
    type Err = RuleParseError;

    /// Comma-separated tokens, e.g. `split:a,facet:1,merge:a`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        if text.trim().is_empty() {
            return Err(RuleParseError::Empty);
        }
        NavRule::new(text.split(',').map(str::parse).collect::<Result<_, _>>()?)
    }
}

impl fmt::Display for NavRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{step}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum StepFailure {
    #[error(transparent)]
    Split(#[from] SplitError),
    #[error(transparent)]
    Digits(#[from] ParseError),
}

/// A step whose input is outside its domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("step {step} cannot be applied: {failure}")]
pub struct StepError {
    pub step: Step,
    pub failure: StepFailure,
}

impl StepError {
    /// Character position of the offending digit or pair, when there is one.
    pub fn position(&self) -> Option<usize> {
        match &self.failure {
            StepFailure::Split(e) => e.position(),
            StepFailure::Digits(e) => e.position(),
        }
    }
}

pub fn apply_step(text: &str, step: Step, base: Base) -> Result<String, StepError> {
    let wrap = |failure: StepFailure| StepError { step, failure };
    match step {
        Step::Split(s) => split_number(text, s, base)
            .map(|n| n.to_string())
            .map_err(|e| wrap(e.into())),
        Step::Merge(s) => {
            let n: OiluNumber = text.parse().map_err(|e: ParseError| wrap(e.into()))?;
            merge_number(&n, s, base).map_err(|e| wrap(e.into()))
        }
        Step::Facet(k) => {
            let n: OiluNumber = text.parse().map_err(|e: ParseError| wrap(e.into()))?;
            Ok(n.facet(k as i64).to_string())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("iterations must be at least 1")]
    NoIterations,
    #[error("max length {max_length} is shorter than the seed ({seed_length} digits)")]
    MaxLengthTooSmall {
        max_length: usize,
        seed_length: usize,
    },
    #[error("empty seed")]
    EmptySeed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesConfig {
    seed: String,
    base: Base,
    rule: NavRule,
    iterations: usize,
    max_length: usize,
}

impl SeriesConfig {
    pub fn new(
        seed: impl Into<String>,
        base: Base,
        rule: NavRule,
        iterations: usize,
    ) -> Result<SeriesConfig, ConfigError> {
        SeriesConfig::with_max_length(seed, base, rule, iterations, DEFAULT_MAX_LENGTH)
    }

    pub fn with_max_length(
        seed: impl Into<String>,
        base: Base,
        rule: NavRule,
        iterations: usize,
        max_length: usize,
    ) -> Result<SeriesConfig, ConfigError> {
        let seed = seed.into();
        if seed.is_empty() {
            return Err(ConfigError::EmptySeed);
        }
        if iterations == 0 {
            return Err(ConfigError::NoIterations);
        }
        let seed_length = seed.chars().count();
        if max_length < seed_length {
            return Err(ConfigError::MaxLengthTooSmall {
                max_length,
                seed_length,
            });
        }
        Ok(SeriesConfig {
            seed,
            base,
            rule,
            iterations,
            max_length,
        })
    }

    pub fn seed(&self) -> &str {
        &self.seed
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn rule(&self) -> &NavRule {
        &self.rule
    }

    pub fn iterations(&self) -> usize {
        self.iterations
    }

    pub fn max_length(&self) -> usize {
        self.max_length
    }
}

/// Why generation ended before the requested number of iterations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stop {
    /// Step `iteration` would produce `length` digits, over the guard.
    MaxLength { iteration: usize, length: usize },
    /// Step `iteration` failed on the last member.
    StepFailed { iteration: usize, error: StepError },
}

impl fmt::Display for Stop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stop::MaxLength { iteration, length } => write!(
                f,
                "iteration {iteration} would produce {length} digits, over the length limit"
            ),
            Stop::StepFailed { iteration, error } => write!(f, "iteration {iteration}: {error}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    /// Seed first, then one member per completed step.
    pub members: Vec<String>,
    pub stop: Option<Stop>,
}

pub fn generate(cfg: &SeriesConfig) -> Series {
    let mut members = vec![cfg.seed.clone()];
    for iteration in 0..cfg.iterations {
        let current = members.last().expect("seed present");
        let next = match apply_step(current, cfg.rule.step(iteration), cfg.base) {
            Ok(next) => next,
            Err(error) => {
                return Series {
                    members,
                    stop: Some(Stop::StepFailed { iteration, error }),
                }
            }
        };
        if next.len() > cfg.max_length {
            return Series {
                members,
                stop: Some(Stop::MaxLength {
                    iteration,
                    length: next.len(),
                }),
            };
        }
        members.push(next);
    }
    Series {
        members,
        stop: None,
    }
}
