use crate::error::{Error, Result};
use crate::scalar::Real;

/// Binary entropy `-a log2 a - (1-a) log2 (1-a)` for `0 < a < 1`.
pub fn entropy<T: Real>(alpha: T) -> Result<T> {
    if !(alpha > T::zero() && alpha < T::one()) {
        return Err(Error::DomainError(format!("entropy needs 0 < alpha < 1, got {alpha}")));
    }
    Ok(h(alpha))
}

/// Binary entropy with the limits `h(0) = h(1) = 0`.
#[inline]
pub(crate) fn h<T: Real>(a: T) -> T {
    let xlx = |x: T| if x <= T::zero() { T::zero() } else { x * x.log2() };
    -(xlx(a) + xlx(T::one() - a))
}

/// `f_z(a) = h(a/z) - a h(1/z)`.
pub fn f_z<T: Real>(z: usize, alpha: T) -> Result<T> {
    if z < 1 {
        return Err(Error::DomainError("f_z needs z >= 1".into()));
    }
    if !(alpha > T::zero() && alpha < T::one()) {
        return Err(Error::DomainError(format!("f_z needs 0 < alpha < 1, got {alpha}")));
    }
    Ok(fz(z, alpha))
}

#[inline]
pub(crate) fn fz<T: Real>(z: usize, a: T) -> T {
    let zt = T::from_count(z);
    h(a / zt) - a * h(T::one() / zt)
}
