use rayon::prelude::*;

use super::optimize::{golden_section_max, grid_max_unit, nelder_mead_max};
use super::{BoundKind, BoundParams, Optimizer, RateBound};
use crate::error::{out_of_range, Result};
use crate::scalar::Real;

const GRID_STEP: f64 = 1e-3;
const REFINE_TOL: f64 = 1e-8;

/// `-log2(1 - x)` for `0 <= x < 1`.
#[inline]
fn neg_log2_1m<T: Real>(x: T) -> T {
    -(-x).ln_1p() / T::LN_2()
}

/// `a^a b^b / (a+b)^(a+b)`, evaluated in log space.
fn power_ratio<T: Real>(a: usize, b: usize) -> T {
    let xlx = |n: usize| {
        let x = T::from_count(n);
        if n == 0 {
            T::zero()
        } else {
            x * x.ln()
        }
    };
    (xlx(a) + xlx(b) - xlx(a + b)).exp()
}

fn binomial_real<T: Real>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    (0..k.min(n - k)).fold(T::one(), |acc, i| acc * T::from_count(n - i) / T::from_count(i + 1))
}

/// Random-coding lower bound
/// `-(z+u-1)^(-1) log2(1 - z^z u^u / (z+u)^(z+u))`, with `R(1,1) = 1`.
/// Symmetric in `z` and `u`.
pub fn lower_zu<T: Real>(z: usize, u: usize) -> Result<T> {
    if z < 1 || u < 1 {
        return Err(out_of_range(format!("lower bound needs z, u >= 1 (z={z}, u={u})")));
    }
    if (z, u) == (1, 1) {
        return Ok(T::one());
    }
    Ok(neg_log2_1m(power_ratio::<T>(z, u)) / T::from_count(z + u - 1))
}

/// The function maximized in the `R(z,1)` lower bound:
/// `-(1-Q) log2(1 - a^z) + z (Q log2(a/Q) + (1-Q) log2((1-a)/(1-Q)))`.
/// Outside the open unit square it is `-inf`.
pub fn lower_z1_objective<T: Real>(z: usize, alpha: T, q: T) -> T {
    let (zero, one) = (T::zero(), T::one());
    if !(alpha > zero && alpha < one && q > zero && q < one) {
        return T::neg_infinity();
    }
    let zt = T::from_count(z);
    let first = (one - q) * neg_log2_1m(alpha.powi(z as i32));
    let kl = q * (alpha / q).log2() + (one - q) * ((one - alpha) / (one - q)).log2();
    first + zt * kl
}

/// Lower bound `A(z)/z` on `R(z,1)`, where `A(z)` is the maximum of
/// [`lower_z1_objective`]. Coarse `1e-3` grid, then Nelder-Mead to `1e-8`.
pub fn lower_z1<T: Real>(z: usize) -> Result<RateBound<T>> {
    if z < 1 {
        return Err(out_of_range("lower bound needs z >= 1"));
    }
    if z == 1 {
        return Ok(RateBound::computed(BoundKind::LowerZ1, BoundParams::zu(1, 1), T::one()));
    }
    let n = (1.0 / GRID_STEP).round() as usize;
    let (a0, q0, _) = (1..n)
        .into_par_iter()
        .map(|i| {
            let alpha = T::lit(i as f64 * GRID_STEP);
            let (q, v) = grid_max_unit(|q| lower_z1_objective(z, alpha, q), GRID_STEP);
            (alpha, q, v)
        })
        .reduce(
            || (T::nan(), T::nan(), T::neg_infinity()),
            |a, b| if b.2 > a.2 || (b.2 == a.2 && b.0 < a.0) { b } else { a },
        );
    let tol = T::tolerance(REFINE_TOL, T::one());
    let (p, a) = nelder_mead_max(|p| lower_z1_objective(z, p[0], p[1]), [a0, q0], T::lit(GRID_STEP), tol)?;
    let value = a / T::from_count(z);
    if !value.is_finite() || value <= T::zero() {
        return Err(crate::error::Error::ConvergenceFailure(format!("lower_z1({z}) gave {value}")));
    }
    Ok(RateBound::computed(BoundKind::LowerZ1, BoundParams::zu(z, 1), value)
        .with_optimizer(Optimizer::AlphaQ { alpha: p[0], q: p[1] }))
}

/// `-(1/s) log2(1 - (s-u+1)^(s-u+1) u^u / (s+1)^(s+1))` for `1 <= u < s`.
pub fn prop7_lower<T: Real>(u: usize, s: usize) -> Result<T> {
    if !(1 <= u && u < s) {
        return Err(out_of_range(format!("need 1 <= u < s (u={u}, s={s})")));
    }
    Ok(neg_log2_1m(power_ratio::<T>(s - u + 1, u)) / T::from_count(s))
}

/// `-log2(1 - C(v-1, u-1) b^u (1-b)^(v+z-u)) / (v+z-1)`, with `v` the set
/// size and `z` the number of extra columns. Infinite when `v+z = 1`.
pub fn prop10_term<T: Real>(beta: T, u: usize, v: usize, z: usize) -> T {
    if v + z <= 1 {
        return T::infinity();
    }
    let p = binomial_real::<T>(v - 1, u - 1) * beta.powi(u as i32) * (T::one() - beta).powi((v + z - u) as i32);
    neg_log2_1m(p) / T::from_count(v + z - 1)
}

/// `min` of [`prop10_term`] over `u <= v <= s` and `0 <= z <= v`.
pub fn prop10_double_min<T: Real>(beta: T, u: usize, s: usize) -> T {
    (u..=s)
        .flat_map(|v| (0..=v).map(move |z| (v, z)))
        .map(|(v, z)| prop10_term(beta, u, v, z))
        .fold(T::infinity(), T::min)
}

/// `L_u(b, v) = -log2(1 - C(v-1, u-1) b^u (1-b)^(2v-u)) / (2v-1)`.
pub fn threshold_term<T: Real>(beta: T, u: usize, v: usize) -> T {
    prop10_term(beta, u, v, v)
}

/// `min_{u <= v <= s} L_u(b, v)` and the smallest minimizing `v`.
pub fn threshold_objective<T: Real>(beta: T, u: usize, s: usize) -> (T, usize) {
    (u..=s)
        .map(|v| (threshold_term(beta, u, v), v))
        .fold((T::infinity(), u), |best, cur| if cur.0 < best.0 { cur } else { best })
}

/// Lower bound on the rate of threshold designs:
/// `max_b min_{u <= v <= s} L_u(b, v)` for `1 <= u < s`.
pub fn threshold_lower<T: Real>(u: usize, s: usize) -> Result<RateBound<T>> {
    if !(1 <= u && u < s) {
        return Err(out_of_range(format!("need 1 <= u < s (u={u}, s={s})")));
    }
    let f = |b: T| threshold_objective(b, u, s).0;
    let (b0, _) = grid_max_unit(f, GRID_STEP);
    let step = T::lit(GRID_STEP);
    let tol = T::tolerance(REFINE_TOL, T::one());
    let lo = (b0 - step).max(T::lit(GRID_STEP / 2.0));
    let hi = (b0 + step).min(T::one() - T::lit(GRID_STEP / 2.0));
    let (beta, value) = golden_section_max(f, lo, hi, tol);
    let argmin_u = threshold_objective(beta, u, s).1;
    if !value.is_finite() || value <= T::zero() {
        return Err(crate::error::Error::ConvergenceFailure(format!("threshold_lower({u},{s}) gave {value}")));
    }
    Ok(RateBound::computed(BoundKind::ThresholdLower, BoundParams::us(u, s), value)
        .with_optimizer(Optimizer::Beta { beta, argmin_u }))
}
