use std::ops::ControlFlow;

use super::enumerate::{
    and_not_nonzero, binomial, ensure_budget, for_each_combination, for_each_combination_from,
    or_into, run_chunks, ChunkResult, LevelMasks,
};
use super::{CheckConfig, VerificationReport, Witness};
use crate::codegen::BinaryCode;
use crate::error::{out_of_range, Result};

/// Whether `x` is an `M_s^u`-code: for all disjoint `U`, `Z` with
/// `u <= |U| <= s`, `|Z| <= |U|`, and every `j` in `U`, some row has
/// `x(j) = 1`, exactly `u` ones on `U`, and zeros on `Z`.
///
/// Enumeration order: `|U|` ascending, `U` lexicographic, `j` ascending, then
/// `Z` by size ascending and lexicographically.
pub fn check_m_code(x: &BinaryCode, s: usize, u: usize, cfg: &CheckConfig) -> Result<VerificationReport> {
    let t = x.cols();
    if !(1 <= u && u < s && 2 * s < t) {
        return Err(out_of_range(format!("M-code needs 1 <= u < s < t/2 (u={u}, s={s}, t={t})")));
    }
    let tuples = (u..=s).fold(0u128, |acc, a| {
        let zs = (0..=a.min(t - a)).fold(0u128, |z, b| z.saturating_add(binomial(t - a, b)));
        acc.saturating_add(binomial(t, a).saturating_mul(a as u128).saturating_mul(zs))
    });
    ensure_budget(tuples, x.rows(), cfg.budget)?;

    let chunks: Vec<(usize, usize)> = (u..=s).flat_map(|a| (0..t).map(move |f| (a, f))).collect();
    let (checked, witness) = run_chunks(chunks.len(), cfg.parallel, |ci, cancelled| {
        let (size, first) = chunks[ci];
        let mut checked = 0u64;
        let mut witness = None;
        let mut levels = LevelMasks::new(x, u + 1);
        let mut exact = vec![0u64; x.words()];
        let mut target = vec![0u64; x.words()];
        let mut or = vec![0u64; x.words()];
        let mut rest = Vec::with_capacity(t);
        let _ = for_each_combination_from(t, first, size, |uset| {
            if cancelled() {
                return ControlFlow::Break(());
            }
            levels.load(x, uset);
            for ((e, a), b) in exact.iter_mut().zip(levels.at_least(u)).zip(levels.at_least(u + 1)) {
                *e = a & !b;
            }
            rest.clear();
            rest.extend((0..t).filter(|c| !uset.contains(c)));
            for &j in uset {
                for ((d, e), c) in target.iter_mut().zip(&exact).zip(x.column(j)) {
                    *d = e & c;
                }
                for zsize in 0..=size.min(rest.len()) {
                    for_each_combination(&rest, zsize, |zset| {
                        checked += 1;
                        or.iter_mut().for_each(|w| *w = 0);
                        for &c in zset {
                            or_into(&mut or, x.column(c));
                        }
                        if and_not_nonzero(&target, &or) {
                            ControlFlow::Continue(())
                        } else {
                            witness = Some(Witness::MCode {
                                u: uset.to_vec(),
                                j,
                                z: zset.to_vec(),
                            });
                            ControlFlow::Break(())
                        }
                    })?;
                }
            }
            ControlFlow::Continue(())
        });
        ChunkResult { checked, witness }
    });
    Ok(VerificationReport::from_search(checked, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn small_t_is_rejected() {
        assert!(matches!(check_m_code(&BinaryCode::identity(2), 2, 1, &CheckConfig::default()), Err(Error::ParameterOutOfRange(_))));
        assert!(matches!(check_m_code(&BinaryCode::identity(4), 2, 1, &CheckConfig::default()), Err(Error::ParameterOutOfRange(_))));
    }

    #[test]
    fn identity_is_m_code_for_unit_threshold() {
        let r = check_m_code(&BinaryCode::identity(7), 3, 1, &CheckConfig::default()).unwrap();
        assert!(r.satisfied);
    }

    #[test]
    fn identity_fails_higher_threshold() {
        // no row of the identity carries two ones
        let r = check_m_code(&BinaryCode::identity(7), 3, 2, &CheckConfig::default()).unwrap();
        assert_eq!(r.witness, Some(Witness::MCode { u: vec![0, 1], j: 0, z: vec![] }));
    }
}
