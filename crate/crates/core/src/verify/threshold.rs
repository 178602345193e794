use super::enumerate::{and_not_nonzero, ensure_budget, run_chunks, subsets_by_size, ChunkResult, LevelMasks};
use super::{CheckConfig, VerificationReport, Witness};
use crate::codegen::BinaryCode;
use crate::error::{out_of_range, Result};

/// Threshold outcome masks (rows with at least `u` ones) of every set with
/// size in `[u, s]`, ordered by size then lexicographically.
fn positive_masks(x: &BinaryCode, u: usize, s: usize) -> (Vec<Vec<usize>>, Vec<Vec<u64>>) {
    let sets = subsets_by_size(x.cols(), u..=s);
    let mut levels = LevelMasks::new(x, u);
    let masks = sets
        .iter()
        .map(|p| {
            levels.load(x, p);
            levels.at_least(u).to_vec()
        })
        .collect();
    (sets, masks)
}

fn check_params(x: &BinaryCode, u: usize, s: usize) -> Result<()> {
    let t = x.cols();
    if !(1 <= u && u < s && 2 * s < t) {
        return Err(out_of_range(format!("threshold design needs 1 <= u < s < t/2 (u={u}, s={s}, t={t})")));
    }
    Ok(())
}

fn separate(
    x: &BinaryCode,
    u: usize,
    s: usize,
    cfg: &CheckConfig,
    admissible: impl Fn(&[usize], &[usize]) -> bool + Sync,
) -> Result<VerificationReport> {
    check_params(x, u, s)?;
    let n_sets: u128 = super::enumerate::binomial(x.cols(), s);
    // cheap early refusal before materializing the set list
    ensure_budget(n_sets.saturating_mul(n_sets), x.rows(), cfg.budget)?;
    let (sets, masks) = positive_masks(x, u, s);
    let n = sets.len() as u128;
    ensure_budget(n.saturating_mul(n.saturating_sub(1)), x.rows(), cfg.budget)?;

    let (checked, witness) = run_chunks(sets.len(), cfg.parallel, |pi, _| {
        let p = &sets[pi];
        let mut checked = 0u64;
        for (qi, q) in sets.iter().enumerate() {
            if qi == pi || !admissible(p, q) {
                continue;
            }
            checked += 1;
            if !and_not_nonzero(&masks[pi], &masks[qi]) {
                return ChunkResult {
                    checked,
                    witness: Some(Witness::Pair {
                        p: p.clone(),
                        p_prime: q.clone(),
                    }),
                };
            }
        }
        ChunkResult { checked, witness: None }
    });
    Ok(VerificationReport::from_search(checked, witness))
}

/// Whether `x` is a threshold `(u, <=s)`-design: for every ordered pair
/// `P != P'` with `u <= |P'| <= |P| <= s`, some row has at least `u` ones on
/// `P` and fewer than `u` on `P'`.
///
/// Both orientations of equal-size pairs are checked. `P` runs by size then
/// lexicographically, and `P'` likewise.
pub fn check_threshold_design(x: &BinaryCode, u: usize, s: usize, cfg: &CheckConfig) -> Result<VerificationReport> {
    separate(x, u, s, cfg, |p, q| q.len() <= p.len())
}

/// Whether `x` is a threshold `bar(u, <=s)`-design: like
/// [`check_threshold_design`] but over every ordered pair with sizes in
/// `[u, s]` and `P \ P'` nonempty.
pub fn check_threshold_bar_design(x: &BinaryCode, u: usize, s: usize, cfg: &CheckConfig) -> Result<VerificationReport> {
    separate(x, u, s, cfg, |p, q| p.iter().any(|c| q.binary_search(c).is_err()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_column_breaks_threshold_design() {
        let mut x = BinaryCode::identity(6);
        x.set(0, 0, false);
        let r = check_threshold_design(&x, 1, 2, &CheckConfig::default()).unwrap();
        assert_eq!(r.witness, Some(Witness::Pair { p: vec![0], p_prime: vec![1] }));
    }

    #[test]
    fn identity_is_bar_design() {
        let r = check_threshold_bar_design(&BinaryCode::identity(5), 1, 2, &CheckConfig::default()).unwrap();
        assert!(r.satisfied);
    }

    #[test]
    fn too_few_columns() {
        assert!(check_threshold_design(&BinaryCode::identity(4), 1, 2, &CheckConfig::default()).is_err());
    }
}
