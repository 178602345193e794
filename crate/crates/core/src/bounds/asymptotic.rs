use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::BoundParams;
use crate::error::{out_of_range, Error, Result};
use crate::scalar::Real;

/// Leading-order asymptotic forms of the rate bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AsymptoticKind {
    /// `2 log2 z / z^2`
    NonrecurrentUpper,
    /// `(u+1)^(u+1) / (2 e^(u-1)) * log2 z / z^(u+1)`
    UpperZu,
    /// `e^(-u) u^u log2 e / z^(u+1)`
    LowerZu,
    /// `1 / (z^2 log2 e)`
    LowerZ1,
    /// `2 l^2 log2 s / s^2`
    UniversalUpper,
    /// `e^(-u) u^u log2 e / s^(u+1)`
    Prop7Lower,
    /// `1 / (s^2 log2 e)`
    DesignLowerLe,
    /// `2 / (s^2 log2 e)`
    DesignLowerEq,
    /// `4 log2 s / s^2`
    DesignUpperEq,
    /// `2 log2 s / s^2`
    ThresholdUpperLe,
}

impl AsymptoticKind {
    pub const ALL: [AsymptoticKind; 10] = [
        AsymptoticKind::NonrecurrentUpper,
        AsymptoticKind::UpperZu,
        AsymptoticKind::LowerZu,
        AsymptoticKind::LowerZ1,
        AsymptoticKind::UniversalUpper,
        AsymptoticKind::Prop7Lower,
        AsymptoticKind::DesignLowerLe,
        AsymptoticKind::DesignLowerEq,
        AsymptoticKind::DesignUpperEq,
        AsymptoticKind::ThresholdUpperLe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AsymptoticKind::NonrecurrentUpper => "nonrecurrent-upper",
            AsymptoticKind::UpperZu => "upper-zu",
            AsymptoticKind::LowerZu => "lower-zu",
            AsymptoticKind::LowerZ1 => "lower-z1",
            AsymptoticKind::UniversalUpper => "universal-upper",
            AsymptoticKind::Prop7Lower => "prop7-lower",
            AsymptoticKind::DesignLowerLe => "design-lower-le",
            AsymptoticKind::DesignLowerEq => "design-lower-eq",
            AsymptoticKind::DesignUpperEq => "design-upper-eq",
            AsymptoticKind::ThresholdUpperLe => "threshold-upper-le",
        }
    }
}

impl fmt::Display for AsymptoticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AsymptoticKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AsymptoticKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

fn need(name: &str, v: Option<usize>, min: usize) -> Result<usize> {
    match v {
        Some(v) if v >= min => Ok(v),
        Some(v) => Err(out_of_range(format!("{name}={v} must be at least {min}"))),
        None => Err(out_of_range(format!("missing parameter {name}"))),
    }
}

/// Evaluates the leading-order term selected by `kind`, without the
/// `1 + o(1)` factor.
pub fn asymptotic_rate<T: Real>(kind: AsymptoticKind, p: &BoundParams) -> Result<T> {
    let log2e = T::LOG2_E();
    let sq = |x: usize| {
        let x = T::from_count(x);
        x * x
    };
    // e^(-u) u^u log2 e / n^(u+1)
    let random = |u: usize, n: usize| {
        let (ut, nt) = (T::from_count(u), T::from_count(n));
        (ut * ut.ln() - ut - (ut + T::one()) * nt.ln()).exp() * log2e
    };
    Ok(match kind {
        AsymptoticKind::NonrecurrentUpper => {
            let z = need("z", p.z, 2)?;
            T::lit(2.0) * T::from_count(z).log2() / sq(z)
        }
        AsymptoticKind::UpperZu => {
            let (z, u) = (need("z", p.z, 2)?, need("u", p.u, 1)?);
            let (zt, u1) = (T::from_count(z), T::from_count(u + 1));
            let log_coef = u1 * u1.ln() - T::lit(2.0).ln() - (u1 - T::lit(2.0));
            (log_coef - u1 * zt.ln()).exp() * zt.log2()
        }
        AsymptoticKind::LowerZu => random(need("u", p.u, 1)?, need("z", p.z, 1)?),
        AsymptoticKind::LowerZ1 => T::one() / (sq(need("z", p.z, 1)?) * log2e),
        AsymptoticKind::UniversalUpper => {
            let (l, s) = (need("l", p.l, 1)?, need("s", p.s, 2)?);
            T::lit(2.0) * sq(l) * T::from_count(s).log2() / sq(s)
        }
        AsymptoticKind::Prop7Lower => random(need("u", p.u, 1)?, need("s", p.s, 1)?),
        AsymptoticKind::DesignLowerLe => T::one() / (sq(need("s", p.s, 1)?) * log2e),
        AsymptoticKind::DesignLowerEq => T::lit(2.0) / (sq(need("s", p.s, 1)?) * log2e),
        AsymptoticKind::DesignUpperEq => {
            let s = need("s", p.s, 2)?;
            T::lit(4.0) * T::from_count(s).log2() / sq(s)
        }
        AsymptoticKind::ThresholdUpperLe => {
            let s = need("s", p.s, 2)?;
            T::lit(2.0) * T::from_count(s).log2() / sq(s)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::{E, LOG2_E};

    #[test]
    fn names_round_trip() {
        for k in AsymptoticKind::ALL {
            assert_eq!(k.name().parse::<AsymptoticKind>().unwrap(), k);
        }
        assert_eq!("nope".parse::<AsymptoticKind>().unwrap_err(), Error::UnknownKind("nope".into()));
    }

    #[test]
    fn closed_forms() {
        let v: f64 = asymptotic_rate(AsymptoticKind::UpperZu, &BoundParams::zu(10, 2)).unwrap();
        assert_relative_eq!(v, 27.0 / (2.0 * E) * 10f64.log2() / 1000.0, max_relative = 1e-13);
        let v: f64 = asymptotic_rate(AsymptoticKind::DesignLowerLe, &BoundParams { s: Some(10), ..Default::default() }).unwrap();
        assert_relative_eq!(v, 0.00693, max_relative = 1e-3);
        let v: f64 = asymptotic_rate(AsymptoticKind::DesignUpperEq, &BoundParams { s: Some(10), ..Default::default() }).unwrap();
        assert_relative_eq!(v, 4.0 * 10f64.log2() / 100.0, max_relative = 1e-13);
        let v: f64 = asymptotic_rate(AsymptoticKind::Prop7Lower, &BoundParams::us(2, 100)).unwrap();
        assert_relative_eq!(v, (-2f64).exp() * 4.0 * LOG2_E / 1e6, max_relative = 1e-13);
    }

    #[test]
    fn missing_parameters() {
        assert!(asymptotic_rate::<f64>(AsymptoticKind::UpperZu, &BoundParams::z(5)).is_err());
    }
}
