use std::collections::HashMap;
use std::ops::ControlFlow;

use serde::Serialize;

use super::enumerate::{binomial, ensure_budget, for_each_combination, LevelMasks};
use super::{CheckConfig, OutcomeFunction, VerificationReport, Witness};
use crate::codegen::BinaryCode;
use crate::error::{out_of_range, Result};

/// Which candidate sets a design must distinguish.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DesignMode {
    /// All sets of size at most `s`.
    AtMost,
    /// All sets of size exactly `s`.
    Exactly,
}

/// Whether every candidate set yields a distinct outcome vector under `f`.
///
/// For the threshold map `[0, ..., 0, 1]` in at-most mode, sets with fewer
/// than `l` elements are excluded from the comparison. Candidates are visited
/// by size, then lexicographically; the witness pairs the first repeated
/// outcome vector with the earlier set that produced it.
pub fn check_design(
    x: &BinaryCode,
    f: &OutcomeFunction,
    s: usize,
    mode: DesignMode,
    cfg: &CheckConfig,
) -> Result<VerificationReport> {
    let t = x.cols();
    let l = f.level();
    if !(l < s && s < t) {
        return Err(out_of_range(format!("design needs 1 <= l < s < t (l={l}, s={s}, t={t})")));
    }
    let sizes = match mode {
        DesignMode::AtMost if f.is_threshold() => l..=s,
        DesignMode::AtMost => 0..=s,
        DesignMode::Exactly => s..=s,
    };
    let total = sizes.clone().fold(0u128, |acc, k| acc.saturating_add(binomial(t, k)));
    ensure_budget(total, x.rows(), cfg.budget)?;

    let mut labels: Vec<i64> = f.values().to_vec();
    labels.sort_unstable();
    labels.dedup();

    let words = x.words();
    let mut levels = LevelMasks::new(x, l);
    let mut seen: HashMap<Vec<u64>, Vec<usize>> = HashMap::with_capacity(total.min(1 << 24) as usize);
    let mut checked = 0u64;
    let mut witness = None;
    let pool: Vec<usize> = (0..t).collect();

    for size in sizes {
        let flow = for_each_combination(&pool, size, |p| {
            checked += 1;
            levels.load(x, p);
            let mut key = vec![0u64; words * labels.len()];
            for count in 0..=l {
                let slot = labels.binary_search(&f.eval(count)).expect("label present");
                let dst = &mut key[slot * words..(slot + 1) * words];
                let ge = levels.at_least(count);
                if count < l {
                    let above = levels.at_least(count + 1);
                    for ((d, a), b) in dst.iter_mut().zip(ge).zip(above) {
                        *d |= a & !b;
                    }
                } else {
                    for (d, a) in dst.iter_mut().zip(ge) {
                        *d |= a;
                    }
                }
            }
            match seen.get(&key) {
                Some(earlier) => {
                    witness = Some(Witness::Pair {
                        p: earlier.clone(),
                        p_prime: p.to_vec(),
                    });
                    ControlFlow::Break(())
                }
                None => {
                    seen.insert(key, p.to_vec());
                    ControlFlow::Continue(())
                }
            }
        });
        if flow.is_break() {
            break;
        }
    }
    Ok(VerificationReport::from_search(checked, witness))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_separates_singletons() {
        let x = BinaryCode::identity(5);
        let f = OutcomeFunction::threshold(1).unwrap();
        assert!(check_design(&x, &f, 1, DesignMode::Exactly, &CheckConfig::default()).is_err());
        let r = check_design(&x, &f, 2, DesignMode::Exactly, &CheckConfig::default()).unwrap();
        assert!(r.satisfied);
        assert_eq!(r.tuples_checked, 10);
    }

    #[test]
    fn identity_threshold_design_at_most() {
        let x = BinaryCode::identity(5);
        let f = OutcomeFunction::threshold(1).unwrap();
        assert!(check_design(&x, &f, 2, DesignMode::AtMost, &CheckConfig::default()).unwrap().satisfied);
    }

    #[test]
    fn collision_is_reported_with_earlier_set() {
        // columns 0 and 1 are identical
        let x = BinaryCode::from_rows(&[[true, true, false], [false, false, true]]).unwrap();
        let f = OutcomeFunction::adder(1).unwrap();
        let r = check_design(&x, &f, 2, DesignMode::AtMost, &CheckConfig::default()).unwrap();
        assert_eq!(r.witness, Some(Witness::Pair { p: vec![0], p_prime: vec![1] }));
    }
}
