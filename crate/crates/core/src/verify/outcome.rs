use serde::Serialize;

use crate::error::{out_of_range, Result};

/// Saturating outcome map: a test containing `n` positives reports
/// `values[min(n, l)]`.
///
/// Every label below the saturation level differs from the saturated label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OutcomeFunction {
    values: Vec<i64>,
}

impl OutcomeFunction {
    /// `values[n]` for `n = 0..=l`; needs `l >= 1` and `values[n] != values[l]`
    /// for all `n < l`.
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(out_of_range("outcome function needs at least two labels (l >= 1)"));
        }
        let top = *values.last().expect("nonempty");
        if let Some(n) = values[..values.len() - 1].iter().position(|&v| v == top) {
            return Err(out_of_range(format!("label at n={n} equals the saturated label")));
        }
        Ok(OutcomeFunction { values })
    }

    /// Threshold outcome: 0 below `u` positives, 1 from `u` on.
    pub fn threshold(u: usize) -> Result<Self> {
        let mut values = vec![0; u + 1];
        values[u] = 1;
        Self::new(values)
    }

    /// Additive channel saturated at `l`: reports the count itself.
    pub fn adder(l: usize) -> Result<Self> {
        Self::new((0..=l as i64).collect())
    }

    /// Quantized adder with range ends `r_1 < ... < r_k`: zero positives
    /// report 0, counts in `(r_{i-1}, r_i]` report `i`. Saturation starts at
    /// `r_{k-1} + 1`, the first count of the last range.
    pub fn quantizer(range_ends: &[usize]) -> Result<Self> {
        if range_ends.is_empty() || range_ends[0] == 0 || range_ends.windows(2).any(|w| w[0] >= w[1]) {
            return Err(out_of_range("range ends must be positive and strictly increasing"));
        }
        let k = range_ends.len();
        let l = if k == 1 { 1 } else { range_ends[k - 2] + 1 };
        let values = (0..=l)
            .map(|n| {
                if n == 0 {
                    0
                } else {
                    range_ends.iter().position(|&r| n <= r).map_or(k, |i| i + 1) as i64
                }
            })
            .collect();
        Self::new(values)
    }

    /// Saturation level `l`.
    pub fn level(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn eval(&self, n: usize) -> i64 {
        self.values[n.min(self.level())]
    }

    /// True for the threshold map with labels exactly `[0, ..., 0, 1]`.
    pub fn is_threshold(&self) -> bool {
        let l = self.level();
        self.values[..l].iter().all(|&v| v == 0) && self.values[l] == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn saturation() {
        let f = OutcomeFunction::adder(3).unwrap();
        assert_eq!((f.eval(0), f.eval(2), f.eval(3), f.eval(10)), (0, 2, 3, 3));
        assert!(!f.is_threshold());
        assert!(OutcomeFunction::threshold(2).unwrap().is_threshold());
    }

    #[test]
    fn rejects_ambiguous_labels() {
        assert!(OutcomeFunction::new(vec![1, 0, 1]).is_err());
        assert!(OutcomeFunction::new(vec![1]).is_err());
        assert!(OutcomeFunction::new(vec![0, 0, 1]).is_ok());
    }

    #[test]
    fn quantizer_ranges() {
        // ranges (0,2], (2,4], (4,6]: saturation at 5
        let f = OutcomeFunction::quantizer(&[2, 4, 6]).unwrap();
        assert_eq!(f.values(), &[0, 1, 1, 2, 2, 3]);
        assert_eq!(OutcomeFunction::quantizer(&[3]).unwrap(), OutcomeFunction::threshold(1).unwrap());
        assert!(OutcomeFunction::quantizer(&[2, 2]).is_err());
    }
}
