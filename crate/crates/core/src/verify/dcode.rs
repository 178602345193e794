use std::ops::ControlFlow;

use super::enumerate::{
    and_not_nonzero, binomial, ensure_budget, for_each_combination_from, run_chunks, ChunkResult,
    LevelMasks,
};
use super::{CheckConfig, Coincidence, VerificationReport, Witness};
use crate::codegen::BinaryCode;
use crate::error::{out_of_range, Result};

/// Whether `x` is a `D_s^l`-code: for every `s`-set `S` and column `j` outside
/// it, some row has `x(j) = 1` and at most `l - 1` ones on `S`.
///
/// `S` runs in lexicographic order, then `j` ascending.
pub fn check_d_code(x: &BinaryCode, s: usize, l: usize, cfg: &CheckConfig) -> Result<VerificationReport> {
    let t = x.cols();
    if !(1 <= l && l < s && s < t) {
        return Err(out_of_range(format!("D-code needs 1 <= l < s < t (l={l}, s={s}, t={t})")));
    }
    ensure_budget(binomial(t, s).saturating_mul((t - s) as u128), x.rows(), cfg.budget)?;

    let (checked, witness) = run_chunks(t, cfg.parallel, |first, cancelled| {
        let mut checked = 0u64;
        let mut witness = None;
        let mut levels = LevelMasks::new(x, l);
        let _ = for_each_combination_from(t, first, s, |sset| {
            if cancelled() {
                return ControlFlow::Break(());
            }
            levels.load(x, sset);
            let covered = levels.at_least(l);
            for j in (0..t).filter(|j| !sset.contains(j)) {
                checked += 1;
                if !and_not_nonzero(x.column(j), covered) {
                    witness = Some(Witness::DCode { s: sset.to_vec(), j });
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        });
        ChunkResult { checked, witness }
    });
    Ok(VerificationReport::from_search(checked, witness))
}

/// Sufficient condition for a constant-weight code to be a `D_s^l`-code:
/// `s * coincidence <= l * w - 1`.
///
/// `false` means "not certified", not "not a D-code".
pub fn check_d_certificate(x: &BinaryCode, s: usize, l: usize) -> Result<bool> {
    if l < 1 || s < 1 {
        return Err(out_of_range(format!("certificate needs s, l >= 1 (s={s}, l={l})")));
    }
    let w = x.constant_weight()?;
    let lambda = x.coincidence()?;
    Ok(s * lambda + 1 <= l * w)
}
