//! Exhaustive and certificate checks of superimposed-code and design
//! properties.
//!
//! Columns are 0-indexed. Every exhaustive checker enumerates candidate
//! tuples in a fixed lexicographic order and reports the first failing tuple,
//! so results are identical for sequential and parallel runs.

use std::fmt;

use serde::Serialize;

mod cover_free;
mod dcode;
mod design;
mod enumerate;
mod mcode;
mod outcome;
mod threshold;

pub use cover_free::check_cover_free;
pub use dcode::{check_d_certificate, check_d_code};
pub use design::{check_design, DesignMode};
pub use mcode::check_m_code;
pub use outcome::OutcomeFunction;
pub use threshold::{check_threshold_bar_design, check_threshold_design};

use crate::codegen::{BinaryCode, QaryCode};
use crate::error::{Error, Result};

/// Default row-scan budget for exhaustive checks.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// Execution settings shared by the exhaustive checkers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    /// Maximum number of row scans (tuples times rows) a check may need.
    pub budget: u64,
    pub parallel: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            budget: DEFAULT_BUDGET,
            parallel: true,
        }
    }
}

impl CheckConfig {
    pub fn with_budget(budget: u64) -> Self {
        CheckConfig {
            budget,
            ..Self::default()
        }
    }

    pub fn sequential() -> Self {
        CheckConfig {
            parallel: false,
            ..Self::default()
        }
    }
}

/// The first counterexample found by a checker.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// No row has ones on all of `u` and zeros on all of `z`.
    CoverFree { u: Vec<usize>, z: Vec<usize> },
    /// Every row with a one in column `j` has at least `l` ones among `s`.
    DCode { s: Vec<usize>, j: usize },
    /// No row has `x(j)=1`, exactly `l` ones on `u`, and zeros on `z`.
    MCode { u: Vec<usize>, j: usize, z: Vec<usize> },
    /// The two sets are not separated as required.
    Pair { p: Vec<usize>, p_prime: Vec<usize> },
}

fn fmt_set(f: &mut fmt::Formatter<'_>, name: &str, set: &[usize]) -> fmt::Result {
    write!(f, "{name}={{")?;
    for (i, v) in set.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, "}}")
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::CoverFree { u, z } => {
                fmt_set(f, "U", u)?;
                write!(f, " ")?;
                fmt_set(f, "Z", z)
            }
            Witness::DCode { s, j } => {
                fmt_set(f, "S", s)?;
                write!(f, " j={j}")
            }
            Witness::MCode { u, j, z } => {
                fmt_set(f, "U", u)?;
                write!(f, " j={j} ")?;
                fmt_set(f, "Z", z)
            }
            Witness::Pair { p, p_prime } => {
                fmt_set(f, "P", p)?;
                write!(f, " ")?;
                fmt_set(f, "P'", p_prime)
            }
        }
    }
}

/// Outcome of an exhaustive check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub satisfied: bool,
    pub witness: Option<Witness>,
    /// Tuples enumerated, up to and including the witness when one exists.
    pub tuples_checked: u64,
}

impl VerificationReport {
    pub(crate) fn from_search(checked: u64, witness: Option<Witness>) -> Self {
        VerificationReport {
            satisfied: witness.is_none(),
            witness,
            tuples_checked: checked,
        }
    }
}

/// Maximum pairwise agreement between codewords.
pub trait Coincidence {
    /// Largest agreement over distinct column pairs; needs two columns.
    fn coincidence(&self) -> Result<usize>;
}

impl Coincidence for BinaryCode {
    fn coincidence(&self) -> Result<usize> {
        let t = self.cols();
        if t < 2 {
            return Err(Error::TooFewColumns);
        }
        Ok((0..t)
            .flat_map(|a| (a + 1..t).map(move |b| (a, b)))
            .map(|(a, b)| self.dot(a, b))
            .max()
            .unwrap_or(0))
    }
}

impl Coincidence for QaryCode {
    fn coincidence(&self) -> Result<usize> {
        let t = self.size();
        if t < 2 {
            return Err(Error::TooFewColumns);
        }
        Ok((0..t)
            .flat_map(|a| (a + 1..t).map(move |b| (a, b)))
            .map(|(a, b)| self.agreement(a, b))
            .max()
            .unwrap_or(0))
    }
}

/// Maximum pairwise agreement of a binary or q-ary code.
pub fn coincidence<C: Coincidence + ?Sized>(code: &C) -> Result<usize> {
    code.coincidence()
}
