//! Numerical upper and lower bounds on the rates of superimposed codes and
//! group-testing designs. Rates are in bits per test (base-2 logarithms).
//!
//! Every routine is generic over the floating-point type; see [`Real`].

use serde::Serialize;

mod asymptotic;
mod entropy;
mod lower;
mod optimize;
pub mod reference;
mod upper;

pub use asymptotic::{asymptotic_rate, AsymptoticKind};
pub use entropy::{entropy, f_z};
pub use lower::{
    lower_z1, lower_z1_objective, lower_zu, prop10_double_min, prop10_term, prop7_lower,
    threshold_lower, threshold_objective, threshold_term,
};
pub use optimize::{bisect, golden_section_max, nelder_mead_max};
pub use upper::{
    nonrecurrent_upper, recurrent_upper, upper_zu, universal_upper, UpperZuTable, SEED_R22,
};

use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    RecurrentUpper,
    NonrecurrentUpper,
    UpperZu,
    LowerZu,
    LowerZ1,
    UniversalUpper,
    Prop7Lower,
    ThresholdLower,
    Asymptotic,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::RecurrentUpper => "recurrent-upper",
            BoundKind::NonrecurrentUpper => "nonrecurrent-upper",
            BoundKind::UpperZu => "upper-zu",
            BoundKind::LowerZu => "lower-zu",
            BoundKind::LowerZ1 => "lower-z1",
            BoundKind::UniversalUpper => "universal-upper",
            BoundKind::Prop7Lower => "prop7-lower",
            BoundKind::ThresholdLower => "threshold-lower",
            BoundKind::Asymptotic => "asymptotic",
        }
    }
}

/// Integer parameters of a bound; unused ones are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct BoundParams {
    pub z: Option<usize>,
    pub u: Option<usize>,
    pub s: Option<usize>,
    pub l: Option<usize>,
}

impl BoundParams {
    pub fn zu(z: usize, u: usize) -> Self {
        BoundParams { z: Some(z), u: Some(u), ..Self::default() }
    }

    pub fn z(z: usize) -> Self {
        BoundParams { z: Some(z), ..Self::default() }
    }

    pub fn us(u: usize, s: usize) -> Self {
        BoundParams { u: Some(u), s: Some(s), ..Self::default() }
    }

    pub fn ls(l: usize, s: usize) -> Self {
        BoundParams { l: Some(l), s: Some(s), ..Self::default() }
    }
}

/// The argument at which an optimized bound attains its value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Optimizer<T> {
    Alpha { alpha: T },
    AlphaQ { alpha: T, q: T },
    /// Minimizing step `(i, j)` of the `(z,u)` recurrence.
    Split { i: usize, j: usize },
    /// Maximizing `beta` and the minimizing set size.
    Beta { beta: T, argmin_u: usize },
}

/// Where a value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Computed,
    /// A published constant injected into a recurrence, not derived here.
    ExternalSeed,
}

/// A computed rate bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RateBound<T> {
    pub kind: BoundKind,
    pub params: BoundParams,
    pub value: T,
    pub optimizer: Option<Optimizer<T>>,
    pub provenance: Provenance,
}

impl<T: Real> RateBound<T> {
    pub fn computed(kind: BoundKind, params: BoundParams, value: T) -> Self {
        RateBound {
            kind,
            params,
            value,
            optimizer: None,
            provenance: Provenance::Computed,
        }
    }

    pub fn with_optimizer(mut self, opt: Optimizer<T>) -> Self {
        self.optimizer = Some(opt);
        self
    }
}
