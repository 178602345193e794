use serde::Serialize;

use crate::error::{out_of_range, Result};
use crate::field::is_prime_power;

/// Parameters of a binary constant-weight code obtained from a shortened
/// Reed-Solomon code, together with the target `D_s^l` property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub q: u64,
    pub k: u64,
    pub r: u64,
    /// Coincidence `k - r - 1`.
    pub lambda: u64,
    /// q-ary length `q + 1 - r`.
    pub n: u64,
    /// Binary length `n * q`.
    pub len: u64,
    /// Column weight, equal to `n`.
    pub w: u64,
    /// Code size `q^(lambda + 1)`.
    pub t: u128,
    pub s: u64,
    pub l: u64,
}

impl CodeParams {
    /// Derives the dependent parameters; fails unless `2 <= k <= q+1`,
    /// `r <= k-1` and `1 <= l < s`.
    pub fn new(q: u64, k: u64, r: u64, s: u64, l: u64) -> Result<Self> {
        if is_prime_power(q).is_none() {
            return Err(out_of_range(format!("q={q} is not a prime power")));
        }
        if k < 2 || k > q + 1 {
            return Err(out_of_range(format!("k={k} outside [2, {}]", q + 1)));
        }
        if r > k - 1 {
            return Err(out_of_range(format!("r={r} exceeds k-1={}", k - 1)));
        }
        if l < 1 || l >= s {
            return Err(out_of_range(format!("need 1 <= l < s, got l={l}, s={s}")));
        }
        let lambda = k - r - 1;
        let n = q + 1 - r;
        let t = (q as u128)
            .checked_pow((lambda + 1) as u32)
            .ok_or_else(|| out_of_range("code size overflows"))?;
        Ok(CodeParams {
            q,
            k,
            r,
            lambda,
            n,
            len: n * q,
            w: n,
            t,
            s,
            l,
        })
    }

    /// Whether the construction is guaranteed to yield a `D_s^l`-code.
    pub fn satisfies_dcode_condition(&self) -> bool {
        self.s * self.lambda + 1 <= self.l * self.n
    }
}

/// `s * ((k-1) - r) <= l * (q+1-r) - 1`.
pub fn dcode_condition_check(q: u64, k: u64, r: u64, s: u64, l: u64) -> Result<bool> {
    Ok(CodeParams::new(q, k, r, s, l)?.satisfies_dcode_condition())
}

/// Cheapest superimposed `(s,1)`-code from a shortened RS code with size in
/// `[2^m, 2^(m+1))`.
///
/// For each prime power `q <= q_max` and coincidence `lambda`, the minimal
/// weight is `w = s*lambda + 1`, which needs `w <= q + 1`. Among feasible
/// choices the one with the smallest length `N = w*q` wins; ties go to the
/// smaller `q`, then the smaller `lambda`.
pub fn ks_search(s: u64, m: u32, q_max: u64) -> Option<CodeParams> {
    if s < 2 || m < 1 || q_max < 2 || m >= 126 {
        return None;
    }
    let lo = 1u128 << m;
    let hi = 1u128 << (m + 1);
    let mut best: Option<(u64, u64, u64)> = None;
    for q in (2..=q_max).filter(|&q| is_prime_power(q).is_some()) {
        let mut lambda = 1u64;
        loop {
            let Some(t) = (q as u128).checked_pow(lambda as u32 + 1) else {
                break;
            };
            if t >= hi {
                break;
            }
            if t >= lo && s * lambda <= q {
                let cand = ((s * lambda + 1) * q, q, lambda);
                if best.map_or(true, |b| cand < b) {
                    best = Some(cand);
                }
            }
            lambda += 1;
        }
    }
    best.map(|(_, q, lambda)| {
        let w = s * lambda + 1;
        let r = q + 1 - w;
        CodeParams::new(q, lambda + r + 1, r, s, 1).expect("search yields consistent parameters")
    })
}
