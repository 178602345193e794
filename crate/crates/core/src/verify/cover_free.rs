use std::ops::ControlFlow;

use super::enumerate::{
    and_into, and_not_nonzero, binomial, ensure_budget, for_each_combination,
    for_each_combination_from, or_into, run_chunks, ChunkResult,
};
use super::{CheckConfig, VerificationReport, Witness};
use crate::codegen::BinaryCode;
use crate::error::{out_of_range, Result};

/// Whether `x` is a superimposed `(z,u)`-code: for all disjoint `Z`, `U` with
/// `|Z| = z`, `|U| = u`, some row has ones on `U` and zeros on `Z`.
///
/// Pairs are enumerated with `U` in lexicographic order, then `Z`
/// lexicographically among the remaining columns.
pub fn check_cover_free(x: &BinaryCode, z: usize, u: usize, cfg: &CheckConfig) -> Result<VerificationReport> {
    let t = x.cols();
    if z < 1 || u < 1 || z + u > t {
        return Err(out_of_range(format!("cover-free needs z,u >= 1 and z+u <= t (z={z}, u={u}, t={t})")));
    }
    ensure_budget(binomial(t, u).saturating_mul(binomial(t - u, z)), x.rows(), cfg.budget)?;

    let row_mask = x.row_mask();
    let (checked, witness) = run_chunks(t, cfg.parallel, |first, cancelled| {
        let mut checked = 0u64;
        let mut witness = None;
        let mut and = vec![0u64; x.words()];
        let mut or = vec![0u64; x.words()];
        let mut rest = Vec::with_capacity(t);
        let _ = for_each_combination_from(t, first, u, |uset| {
            if cancelled() {
                return ControlFlow::Break(());
            }
            and.copy_from_slice(&row_mask);
            for &c in uset {
                and_into(&mut and, x.column(c));
            }
            rest.clear();
            rest.extend((0..t).filter(|c| !uset.contains(c)));
            for_each_combination(&rest, z, |zset| {
                checked += 1;
                or.iter_mut().for_each(|w| *w = 0);
                for &c in zset {
                    or_into(&mut or, x.column(c));
                }
                if and_not_nonzero(&and, &or) {
                    ControlFlow::Continue(())
                } else {
                    witness = Some(Witness::CoverFree {
                        u: uset.to_vec(),
                        z: zset.to_vec(),
                    });
                    ControlFlow::Break(())
                }
            })
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
    fn identity_isolates_every_column() {
        for t in 2..7 {
            let r = check_cover_free(&BinaryCode::identity(t), t - 1, 1, &CheckConfig::default()).unwrap();
            assert!(r.satisfied && r.witness.is_none());
            assert_eq!(r.tuples_checked, t as u64);
        }
    }

    #[test]
    fn all_ones_fails_with_first_pair() {
        let r = check_cover_free(&BinaryCode::ones(2, 2), 1, 1, &CheckConfig::default()).unwrap();
        assert!(!r.satisfied);
        assert_eq!(r.witness, Some(Witness::CoverFree { u: vec![0], z: vec![1] }));
        assert_eq!(r.tuples_checked, 1);
    }

    #[test]
    fn parameters_validated() {
        let x = BinaryCode::identity(3);
        assert!(matches!(check_cover_free(&x, 3, 1, &CheckConfig::default()), Err(Error::ParameterOutOfRange(_))));
        assert!(matches!(check_cover_free(&x, 0, 1, &CheckConfig::default()), Err(Error::ParameterOutOfRange(_))));
    }

    #[test]
    fn budget_is_enforced() {
        let x = BinaryCode::identity(30);
        let err = check_cover_free(&x, 5, 1, &CheckConfig::with_budget(1000)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { budget: 1000, .. }));
    }
}
