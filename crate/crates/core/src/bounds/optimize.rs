//! Small derivative-free optimizers used by the bound computations.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Root of `f` on `[lo, hi]` by bisection, to interval width `tol`.
/// Requires a sign change at the endpoints.
pub fn bisect<T: Real>(f: impl Fn(T) -> T, mut lo: T, mut hi: T, tol: T) -> Result<T> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo.is_nan() || fhi.is_nan() || flo.signum() == fhi.signum() {
        return Err(Error::ConvergenceFailure(format!(
            "bisection bracket [{lo}, {hi}] has no sign change ({flo}, {fhi})"
        )));
    }
    for _ in 0..400 {
        if hi - lo <= tol {
            return Ok((lo + hi) / T::lit(2.0));
        }
        let mid = (lo + hi) / T::lit(2.0);
        let fm = f(mid);
        if fm == T::zero() {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Err(Error::ConvergenceFailure("bisection did not reach tolerance".into()))
}

/// Maximizer of a unimodal `f` on `[lo, hi]` by golden-section search.
pub fn golden_section_max<T: Real>(f: impl Fn(T) -> T, mut lo: T, mut hi: T, tol: T) -> (T, T) {
    let inv_phi = T::lit((5f64.sqrt() - 1.0) / 2.0);
    let mut a = hi - inv_phi * (hi - lo);
    let mut b = lo + inv_phi * (hi - lo);
    let mut fa = f(a);
    let mut fb = f(b);
    for _ in 0..400 {
        if hi - lo <= tol {
            break;
        }
        if fa >= fb {
            hi = b;
            b = a;
            fb = fa;
            a = hi - inv_phi * (hi - lo);
            fa = f(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + inv_phi * (hi - lo);
            fb = f(b);
        }
    }
    if fa >= fb {
        (a, fa)
    } else {
        (b, fb)
    }
}

/// Best point of `f` on the grid `k * step`, `k = 1 .. 1/step - 1`.
pub(crate) fn grid_max_unit<T: Real>(f: impl Fn(T) -> T, step: f64) -> (T, T) {
    let n = (1.0 / step).round() as usize;
    (1..n)
        .map(|k| {
            let x = T::lit(k as f64 * step);
            (x, f(x))
        })
        .fold((T::nan(), T::neg_infinity()), |best, cur| if cur.1 > best.1 { cur } else { best })
}

/// Nelder-Mead maximization in two dimensions from `start`, stopping when
/// the simplex diameter drops below `tol`.
pub fn nelder_mead_max<T: Real>(f: impl Fn([T; 2]) -> T, start: [T; 2], scale: T, tol: T) -> Result<([T; 2], T)> {
    let two = T::lit(2.0);
    let half = T::lit(0.5);
    let mut simplex = [
        start,
        [start[0] + scale, start[1]],
        [start[0], start[1] + scale],
    ];
    let mut values = simplex.map(&f);
    let combine = |a: [T; 2], b: [T; 2], t: T| [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])];

    for _ in 0..20_000 {
        // order best (max) first
        let mut order = [0usize, 1, 2];
        order.sort_by(|&i, &j| values[j].partial_cmp(&values[i]).unwrap_or(std::cmp::Ordering::Equal));
        simplex = order.map(|i| simplex[i]);
        values = order.map(|i| values[i]);

        let diameter = (1..3)
            .map(|i| (simplex[i][0] - simplex[0][0]).abs().max((simplex[i][1] - simplex[0][1]).abs()))
            .fold(T::zero(), T::max);
        if diameter <= tol {
            return Ok((simplex[0], values[0]));
        }

        let centroid = [(simplex[0][0] + simplex[1][0]) * half, (simplex[0][1] + simplex[1][1]) * half];
        let worst = simplex[2];
        let reflected = combine(centroid, worst, -T::one());
        let fr = f(reflected);
        if fr > values[0] {
            let expanded = combine(centroid, worst, -two);
            let fe = f(expanded);
            if fe > fr {
                simplex[2] = expanded;
                values[2] = fe;
            } else {
                simplex[2] = reflected;
                values[2] = fr;
            }
            continue;
        }
        if fr > values[1] {
            simplex[2] = reflected;
            values[2] = fr;
            continue;
        }
        let contracted = if fr > values[2] {
            combine(centroid, reflected, half)
        } else {
            combine(centroid, worst, half)
        };
        let fc = f(contracted);
        if fc > values[2].max(fr) {
            simplex[2] = contracted;
            values[2] = fc;
            continue;
        }
        // shrink toward the best vertex
        for i in 1..3 {
            simplex[i] = combine(simplex[0], simplex[i], half);
            values[i] = f(simplex[i]);
        }
    }
    Err(Error::ConvergenceFailure("Nelder-Mead iteration limit".into()))
}
