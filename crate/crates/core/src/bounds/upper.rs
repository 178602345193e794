use super::entropy::fz;
use super::optimize::{bisect, golden_section_max, grid_max_unit};
use super::{BoundKind, BoundParams, Optimizer, Provenance, RateBound};
use crate::error::{out_of_range, Result};
use crate::scalar::Real;

/// Published value of the upper bound at `(z,u) = (2,2)`, used as a seed of
/// the `(z,u)` recurrence. The recurrence alone only gives `1/5` there.
pub const SEED_R22: f64 = 0.1610;

const GRID_STEP: f64 = 1e-3;

fn upper_z2<T: Real>() -> RateBound<T> {
    let f = |a: T| fz(2, a);
    let (a0, _) = grid_max_unit(f, GRID_STEP);
    let step = T::lit(GRID_STEP);
    let tol = T::tolerance(1e-12, T::one());
    let (alpha, value) = golden_section_max(f, (a0 - step).max(T::zero()), (a0 + step).min(T::one()), tol);
    RateBound::computed(BoundKind::RecurrentUpper, BoundParams::zu(2, 1), value)
        .with_optimizer(Optimizer::Alpha { alpha })
}

/// The recurrent upper bound on `R(z,1)` for `z = 1..=z_max` (index `z-1`).
///
/// `R(1,1) = 1`, `R(2,1) = max_a f_2(a)`, and for `z >= 3` the value is the
/// root `R` of `R = f_z(1 - R/R(z-1,1))` on `(0, R(z-1,1))`, found by
/// bisection to `1e-12`. The optimizer records `a = 1 - R/R(z-1,1)`.
pub fn recurrent_upper<T: Real>(z_max: usize) -> Result<Vec<RateBound<T>>> {
    if z_max < 1 {
        return Err(out_of_range("recurrent bound needs z_max >= 1"));
    }
    let mut out = vec![RateBound::computed(BoundKind::RecurrentUpper, BoundParams::zu(1, 1), T::one())];
    if z_max >= 2 {
        out.push(upper_z2());
    }
    for z in 3..=z_max {
        let prev = out[z - 2].value;
        let g = |r: T| r - fz(z, T::one() - r / prev);
        let tol = T::tolerance(1e-12, prev);
        let lo = prev * T::lit(1e-3);
        let hi = prev * (T::one() - T::tolerance(1e-9, T::one()));
        let root = bisect(g, lo, hi, tol)?;
        out.push(
            RateBound::computed(BoundKind::RecurrentUpper, BoundParams::zu(z, 1), root)
                .with_optimizer(Optimizer::Alpha { alpha: T::one() - root / prev }),
        );
    }
    Ok(out)
}

/// `2 log2(e (z+1) / 2) / z^2`, valid for `z >= 2`.
pub fn nonrecurrent_upper<T: Real>(z: usize) -> Result<T> {
    if z < 2 {
        return Err(out_of_range("non-recurrent bound needs z >= 2"));
    }
    let zt = T::from_count(z);
    Ok(T::lit(2.0) * (T::E() * (zt + T::one()) / T::lit(2.0)).log2() / (zt * zt))
}

/// `min{ log2(l+1)/s, R((s-1)/l, 1) }` with the floor division, `1 <= l < s`.
pub fn universal_upper<T: Real>(l: usize, s: usize) -> Result<T> {
    if !(1 <= l && l < s) {
        return Err(out_of_range(format!("universal bound needs 1 <= l < s (l={l}, s={s})")));
    }
    let z = (s - 1) / l;
    let recurrent = recurrent_upper::<T>(z)?[z - 1].value;
    let trivial = T::from_count(l + 1).log2() / T::from_count(s);
    Ok(trivial.min(recurrent))
}

/// `(i+j)^(i+j) / (i^i j^j)`.
fn split_penalty<T: Real>(i: usize, j: usize) -> T {
    let (it, jt) = (T::from_count(i), T::from_count(j));
    let ij = it + jt;
    (ij * ij.ln() - it * it.ln() - jt * jt.ln()).exp()
}

/// Upper bounds on `R(z,u)` for all `1 <= u <= z <= size`.
///
/// Row `u = 1` is the recurrent bound; `(2,2)` is the seed [`SEED_R22`];
/// every other cell minimizes `R/(R + (i+j)^(i+j)/(i^i j^j))` with
/// `R = R(z-i, u-j)` over `i in [1, z-1]`, `j in [1, u-1]`.
#[derive(Debug, Clone)]
pub struct UpperZuTable<T> {
    size: usize,
    row1: Vec<RateBound<T>>,
    cells: Vec<Vec<Option<RateBound<T>>>>,
}

impl<T: Real> UpperZuTable<T> {
    pub fn build(size: usize) -> Result<Self> {
        if size < 1 {
            return Err(out_of_range("table size must be at least 1"));
        }
        let mut row1 = recurrent_upper::<T>(size)?;
        for (z, b) in row1.iter_mut().enumerate() {
            b.kind = BoundKind::UpperZu;
            b.params = BoundParams::zu(z + 1, 1);
        }
        let mut table = UpperZuTable {
            size,
            row1,
            cells: vec![vec![None; size + 1]; size + 1],
        };
        for sum in 4..=2 * size {
            for u in 2..=sum / 2 {
                let z = sum - u;
                if z > size {
                    continue;
                }
                let entry = if (z, u) == (2, 2) {
                    RateBound {
                        kind: BoundKind::UpperZu,
                        params: BoundParams::zu(2, 2),
                        value: T::lit(SEED_R22),
                        optimizer: None,
                        provenance: Provenance::ExternalSeed,
                    }
                } else {
                    table.recurrence(z, u)
                };
                table.cells[z][u] = Some(entry);
            }
        }
        Ok(table)
    }

    fn recurrence(&self, z: usize, u: usize) -> RateBound<T> {
        let mut best: Option<(T, usize, usize)> = None;
        for i in 1..z {
            for j in 1..u {
                let r = self.value(z - i, u - j).expect("dependency computed earlier");
                let v = r / (r + split_penalty::<T>(i, j));
                if best.map_or(true, |(b, _, _)| v < b) {
                    best = Some((v, i, j));
                }
            }
        }
        let (value, i, j) = best.expect("z, u >= 2 gives at least one split");
        RateBound::computed(BoundKind::UpperZu, BoundParams::zu(z, u), value).with_optimizer(Optimizer::Split { i, j })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry for `(z,u)`, using the symmetry `R(z,u) = R(u,z)`. The stored
    /// entry has `z >= u`.
    pub fn get(&self, z: usize, u: usize) -> Option<&RateBound<T>> {
        let (z, u) = if z >= u { (z, u) } else { (u, z) };
        if u < 1 || z > self.size {
            return None;
        }
        if u == 1 {
            return self.row1.get(z - 1);
        }
        self.cells[z][u].as_ref()
    }

    pub fn value(&self, z: usize, u: usize) -> Option<T> {
        self.get(z, u).map(|b| b.value)
    }
}

/// Upper bound on `R(z,u)`; see [`UpperZuTable`].
pub fn upper_zu<T: Real>(z: usize, u: usize) -> Result<RateBound<T>> {
    if z < 1 || u < 1 {
        return Err(out_of_range(format!("upper bound needs z, u >= 1 (z={z}, u={u})")));
    }
    let table = UpperZuTable::<T>::build(z.max(u))?;
    let mut b = *table.get(z, u).expect("cell inside table");
    b.params = BoundParams::zu(z, u);
    Ok(b)
}
