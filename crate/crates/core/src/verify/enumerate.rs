use std::ops::ControlFlow;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::codegen::BinaryCode;
use crate::error::{Error, Result};

/// `n choose k`, saturating at `u128::MAX`.
pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

pub(crate) fn ensure_budget(tuples: u128, rows: usize, budget: u64) -> Result<()> {
    let required = tuples.saturating_mul(rows.max(1) as u128);
    if required > budget as u128 {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(())
}

/// Visits every `k`-subset of `pool` in lexicographic order of positions.
pub(crate) fn for_each_combination(
    pool: &[usize],
    k: usize,
    mut f: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let n = pool.len();
    if k > n {
        return ControlFlow::Continue(());
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf: Vec<usize> = idx.iter().map(|&i| pool[i]).collect();
    loop {
        f(&buf)?;
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return ControlFlow::Continue(());
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
        for j in i - 1..k {
            buf[j] = pool[idx[j]];
        }
    }
}

/// Visits the `k`-subsets of `0..t` whose smallest element is `first`, in
/// lexicographic order.
pub(crate) fn for_each_combination_from(
    t: usize,
    first: usize,
    k: usize,
    mut f: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    debug_assert!(k >= 1);
    let pool: Vec<usize> = (first + 1..t).collect();
    let mut buf = Vec::with_capacity(k);
    for_each_combination(&pool, k - 1, |rest| {
        buf.clear();
        buf.push(first);
        buf.extend_from_slice(rest);
        f(&buf)
    })
}

/// All subsets of `0..t` with sizes in `sizes`, ordered by size then
/// lexicographically.
pub(crate) fn subsets_by_size(t: usize, sizes: std::ops::RangeInclusive<usize>) -> Vec<Vec<usize>> {
    let pool: Vec<usize> = (0..t).collect();
    let mut out = Vec::new();
    for k in sizes {
        let _ = for_each_combination(&pool, k, |c| {
            out.push(c.to_vec());
            ControlFlow::Continue(())
        });
    }
    out
}

/// Per-row counters of how many added columns have a one, saturated at
/// `levels`. `at_least(k)` is the mask of rows with count `>= k`.
pub(crate) struct LevelMasks {
    words: usize,
    levels: usize,
    data: Vec<u64>,
}

impl LevelMasks {
    pub(crate) fn new(x: &BinaryCode, levels: usize) -> Self {
        let words = x.words();
        let mut data = vec![0; words * (levels + 1)];
        data[..words].copy_from_slice(&x.row_mask());
        LevelMasks {
            words,
            levels,
            data,
        }
    }

    pub(crate) fn clear(&mut self) {
        self.data[self.words..].iter_mut().for_each(|w| *w = 0);
    }

    pub(crate) fn add(&mut self, col: &[u64]) {
        let w = self.words;
        for k in (1..=self.levels).rev() {
            let (lower, upper) = self.data.split_at_mut(k * w);
            let below = &lower[(k - 1) * w..];
            for ((dst, b), c) in upper[..w].iter_mut().zip(below).zip(col) {
                *dst |= b & c;
            }
        }
    }

    pub(crate) fn load(&mut self, x: &BinaryCode, cols: &[usize]) {
        self.clear();
        for &c in cols {
            self.add(x.column(c));
        }
    }

    pub(crate) fn at_least(&self, k: usize) -> &[u64] {
        &self.data[k * self.words..(k + 1) * self.words]
    }
}

#[inline]
pub(crate) fn and_not_nonzero(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & !y != 0)
}

#[inline]
pub(crate) fn or_into(dst: &mut [u64], src: &[u64]) {
    dst.iter_mut().zip(src).for_each(|(d, s)| *d |= s);
}

#[inline]
pub(crate) fn and_into(dst: &mut [u64], src: &[u64]) {
    dst.iter_mut().zip(src).for_each(|(d, s)| *d &= s);
}

pub(crate) struct ChunkResult<W> {
    pub checked: u64,
    pub witness: Option<W>,
}

/// Runs `chunk(i, cancelled)` for `i in 0..n_chunks`, sequentially or in
/// parallel, and returns the first witness in chunk order together with the
/// number of tuples enumerated up to and including it.
///
/// A chunk may stop early once `cancelled()` reports that an earlier chunk
/// already failed; its partial result is then discarded.
pub(crate) fn run_chunks<W, F>(n_chunks: usize, parallel: bool, chunk: F) -> (u64, Option<W>)
where
    W: Send,
    F: Fn(usize, &dyn Fn() -> bool) -> ChunkResult<W> + Sync,
{
    let first_fail = AtomicUsize::new(usize::MAX);
    let run = |i: usize| {
        let cancelled = || first_fail.load(Ordering::Relaxed) < i;
        if cancelled() {
            return ChunkResult {
                checked: 0,
                witness: None,
            };
        }
        let res = chunk(i, &cancelled);
        if res.witness.is_some() {
            first_fail.fetch_min(i, Ordering::Relaxed);
        }
        res
    };
    let results: Vec<ChunkResult<W>> = if parallel {
        (0..n_chunks).into_par_iter().map(run).collect()
    } else {
        (0..n_chunks).map(run).collect()
    };
    let mut checked = 0;
    for res in results {
        checked += res.checked;
        if res.witness.is_some() {
            return (checked, res.witness);
        }
    }
    (checked, None)
}
