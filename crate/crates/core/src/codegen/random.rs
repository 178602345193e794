use rand::distributions::{Bernoulli, Distribution};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::binary::BinaryCode;
use crate::error::{out_of_range, Result};

/// `rows x cols` matrix of independent Bernoulli(`beta`) bits from a seeded
/// ChaCha8 stream, filled column by column.
pub fn random_code(rows: usize, cols: usize, beta: f64, seed: u64) -> Result<BinaryCode> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(out_of_range(format!("beta={beta} outside (0,1)")));
    }
    if rows == 0 || cols == 0 {
        return Err(out_of_range("matrix must have at least one row and column"));
    }
    let dist = Bernoulli::new(beta).map_err(|e| out_of_range(e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = BinaryCode::zeros(rows, cols);
    for j in 0..cols {
        for i in 0..rows {
            if dist.sample(&mut rng) {
                x.set(i, j, true);
            }
        }
    }
    Ok(x)
}
