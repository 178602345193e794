use std::fmt;

use crate::error::{out_of_range, Error, Result};

/// An `N x t` binary incidence matrix stored column-major as packed bit words.
///
/// Row `i` of column `j` is bit `i % 64` of word `j * words + i / 64`.
/// Padding bits past the last row are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryCode {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
    weight: Option<usize>,
}

impl BinaryCode {
    /// All-zero `rows x cols` matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = rows.div_ceil(64).max(1);
        BinaryCode {
            rows,
            cols,
            words,
            data: vec![0; words * cols],
            weight: None,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut code = Self::zeros(rows, cols);
        for j in 0..cols {
            for i in 0..rows {
                if f(i, j) {
                    code.set(i, j, true);
                }
            }
        }
        code
    }

    /// Builds a matrix from row vectors; all rows must have equal length.
    pub fn from_rows<R: AsRef<[bool]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        if rows.iter().any(|r| r.as_ref().len() != cols) {
            return Err(out_of_range("rows have unequal lengths"));
        }
        Ok(Self::from_fn(rows.len(), cols, |i, j| rows[i].as_ref()[j]))
    }

    pub fn identity(t: usize) -> Self {
        Self::from_fn(t, t, |i, j| i == j)
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| true)
    }

    /// Number of rows `N`.
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns `t`.
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Words per packed column.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        debug_assert!(row < self.rows && col < self.cols);
        self.data[col * self.words + row / 64] >> (row % 64) & 1 == 1
    }

    pub fn set(&mut self, row: usize, col: usize, bit: bool) {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        let w = &mut self.data[col * self.words + row / 64];
        if bit {
            *w |= 1 << (row % 64);
        } else {
            *w &= !(1 << (row % 64));
        }
        self.weight = None;
    }

    /// Packed bits of column `col`.
    #[inline]
    pub fn column(&self, col: usize) -> &[u64] {
        &self.data[col * self.words..(col + 1) * self.words]
    }

    /// Mask with a one at every valid row position.
    pub fn row_mask(&self) -> Vec<u64> {
        let mut mask = vec![u64::MAX; self.words];
        let tail = self.rows % 64;
        if tail != 0 {
            mask[self.words - 1] = (1u64 << tail) - 1;
        }
        if self.rows == 0 {
            mask.iter_mut().for_each(|w| *w = 0);
        }
        mask
    }

    pub fn column_weight(&self, col: usize) -> usize {
        self.column(col).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Binary dot product of two columns.
    pub fn dot(&self, a: usize, b: usize) -> usize {
        self.column(a)
            .iter()
            .zip(self.column(b))
            .map(|(x, y)| (x & y).count_ones() as usize)
            .sum()
    }

    /// The declared constant weight, if the code carries one.
    pub fn declared_weight(&self) -> Option<usize> {
        self.weight
    }

    /// Attaches a declared constant weight after checking every column.
    pub fn with_weight(mut self, w: usize) -> Result<Self> {
        if let Some(column) = (0..self.cols).find(|&j| self.column_weight(j) != w) {
            return Err(Error::NotConstantWeight {
                column,
                weight: self.column_weight(column),
                expected: w,
            });
        }
        self.weight = Some(w);
        Ok(self)
    }

    /// The common column weight, or the first column deviating from column 0.
    pub fn constant_weight(&self) -> Result<usize> {
        if let Some(w) = self.weight {
            return Ok(w);
        }
        let w = if self.cols == 0 { 0 } else { self.column_weight(0) };
        match (1..self.cols).find(|&j| self.column_weight(j) != w) {
            Some(column) => Err(Error::NotConstantWeight {
                column,
                weight: self.column_weight(column),
                expected: w,
            }),
            None => Ok(w),
        }
    }

    /// Bitwise complement.
    pub fn complement(&self) -> Self {
        let mask = self.row_mask();
        let mut data = self.data.clone();
        for col in data.chunks_mut(self.words) {
            for (w, m) in col.iter_mut().zip(&mask) {
                *w = !*w & m;
            }
        }
        BinaryCode {
            data,
            weight: None,
            ..*self
        }
    }

    pub fn has_distinct_columns(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.cols);
        (0..self.cols).all(|j| seen.insert(self.column(j)))
    }

    pub fn row_bits(&self, row: usize) -> impl Iterator<Item = bool> + '_ {
        (0..self.cols).map(move |j| self.get(row, j))
    }
}

impl fmt::Debug for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryCode {}x{} (w={:?})", self.rows, self.cols, self.weight)?;
        for i in 0..self.rows {
            let line: String = self.row_bits(i).map(|b| if b { '1' } else { '0' }).collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_and_weights() {
        let mut x = BinaryCode::zeros(70, 3);
        x.set(0, 0, true);
        x.set(69, 0, true);
        x.set(69, 2, true);
        assert!(x.get(69, 0) && !x.get(68, 0));
        assert_eq!(x.column_weight(0), 2);
        assert_eq!(x.dot(0, 2), 1);
        assert!(x.constant_weight().is_err());
    }

    #[test]
    fn complement_keeps_padding_clear() {
        let x = BinaryCode::zeros(70, 2).complement();
        assert_eq!(x.column_weight(0), 70);
        assert_eq!(x.complement(), BinaryCode::zeros(70, 2));
    }

    #[test]
    fn declared_weight_is_validated() {
        let x = BinaryCode::identity(4).with_weight(1).unwrap();
        assert_eq!(x.declared_weight(), Some(1));
        let err = BinaryCode::identity(4).with_weight(2).unwrap_err();
        assert!(matches!(err, Error::NotConstantWeight { column: 0, .. }));
    }
}
