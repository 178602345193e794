//! Extended and shortened Reed-Solomon codes and their binary expansion.

use serde::Serialize;

use super::binary::BinaryCode;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField};

/// Upper limit on materialized symbols (codewords times length).
pub const MAX_SYMBOLS: u128 = 1 << 27;

/// Reed-Solomon metadata carried by constructed codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RsMeta {
    /// Dimension of the parent extended code.
    pub k: usize,
    /// Number of leading positions removed by shortening.
    pub r: usize,
    /// Minimum Hamming distance `q - k + 2`.
    pub d: usize,
}

/// A q-ary code stored column-major: column `j` is codeword `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QaryCode {
    q: u32,
    n: usize,
    t: usize,
    symbols: Vec<u16>,
    meta: Option<RsMeta>,
}

impl QaryCode {
    /// Builds a code from explicit codewords (each of length `n`, symbols `< q`).
    pub fn from_codewords(q: u32, codewords: &[Vec<u16>]) -> Result<Self> {
        let n = codewords.first().map_or(0, Vec::len);
        if codewords.iter().any(|c| c.len() != n) {
            return Err(Error::ParameterOutOfRange("codewords have unequal lengths".into()));
        }
        if codewords.iter().flatten().any(|&s| s as u32 >= q) {
            return Err(Error::ParameterOutOfRange(format!("symbol outside alphabet of size {q}")));
        }
        Ok(QaryCode {
            q,
            n,
            t: codewords.len(),
            symbols: codewords.concat(),
            meta: None,
        })
    }

    pub fn alphabet(&self) -> u32 {
        self.q
    }

    /// Codeword length `n`.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.t == 0
    }

    /// Number of codewords `t`.
    pub fn size(&self) -> usize {
        self.t
    }

    pub fn meta(&self) -> Option<RsMeta> {
        self.meta
    }

    pub fn codeword(&self, j: usize) -> &[u16] {
        &self.symbols[j * self.n..(j + 1) * self.n]
    }

    pub fn codewords(&self) -> impl Iterator<Item = &[u16]> {
        self.symbols.chunks(self.n.max(1)).take(self.t)
    }

    /// Number of positions where codewords `a` and `b` agree.
    pub fn agreement(&self, a: usize, b: usize) -> usize {
        self.codeword(a)
            .iter()
            .zip(self.codeword(b))
            .filter(|(x, y)| x == y)
            .count()
    }

    /// Minimum pairwise Hamming distance (brute force).
    pub fn min_distance(&self) -> Option<usize> {
        (0..self.t)
            .flat_map(|a| (a + 1..self.t).map(move |b| (a, b)))
            .map(|(a, b)| self.n - self.agreement(a, b))
            .min()
    }
}

fn check_dimension(field: &FiniteField, k: usize) -> Result<()> {
    let q = field.order();
    if k < 2 || k > q as usize + 1 {
        return Err(Error::InvalidDimension { q, k });
    }
    Ok(())
}

fn check_size(q: u32, exponent: usize, n: usize) -> Result<usize> {
    let count = (q as u128)
        .checked_pow(exponent as u32)
        .ok_or(Error::CodeTooLarge(u128::MAX))?;
    if count.saturating_mul(n as u128) > MAX_SYMBOLS {
        return Err(Error::CodeTooLarge(count));
    }
    Ok(count as usize)
}

/// Message digits base `q`, least significant first.
fn message_digits(mut index: usize, q: usize, k: usize) -> Vec<FieldElement> {
    (0..k)
        .map(|_| {
            let d = index % q;
            index /= q;
            FieldElement(d as u32)
        })
        .collect()
}

/// Codeword of the message polynomial: evaluations at every field element in
/// index order, followed by the coefficient of `x^(k-1)`.
fn encode(field: &FiniteField, coeffs: &[FieldElement], out: &mut Vec<u16>) {
    out.extend(field.elements().map(|a| field.eval_poly(coeffs, a).0 as u16));
    out.push(coeffs.last().map_or(0, |c| c.0) as u16);
}

/// The singly extended Reed-Solomon code `[q+1, k, q-k+2]`.
///
/// Column `j` encodes the message whose base-`q` digits (least significant
/// first) are the coefficients `m_0, ..., m_{k-1}`.
pub fn rs_extended(field: &FiniteField, k: usize) -> Result<QaryCode> {
    check_dimension(field, k)?;
    let q = field.order();
    let n = q as usize + 1;
    let t = check_size(q, k, n)?;
    let mut symbols = Vec::with_capacity(t * n);
    for index in 0..t {
        encode(field, &message_digits(index, q as usize, k), &mut symbols);
    }
    Ok(QaryCode {
        q,
        n,
        t,
        symbols,
        meta: Some(RsMeta {
            k,
            r: 0,
            d: q as usize - k + 2,
        }),
    })
}

/// Keeps the codewords that vanish on the first `r` positions and deletes
/// those positions. Order of surviving codewords is preserved.
pub fn shorten(code: &QaryCode, r: usize) -> Result<QaryCode> {
    let meta = code.meta.ok_or(Error::MissingMetadata)?;
    let k_left = meta.k - meta.r;
    if r > k_left - 1 {
        return Err(Error::InvalidShortening { r, k: k_left });
    }
    let n = code.n - r;
    let mut symbols = Vec::new();
    let mut t = 0;
    for word in code.codewords() {
        if word[..r].iter().all(|&s| s == 0) {
            symbols.extend_from_slice(&word[r..]);
            t += 1;
        }
    }
    Ok(QaryCode {
        q: code.q,
        n,
        t,
        symbols,
        meta: Some(RsMeta {
            k: meta.k,
            r: meta.r + r,
            d: meta.d,
        }),
    })
}

/// Builds `shorten(rs_extended(field, k), r)` without materializing the
/// parent code.
///
/// Surviving messages are exactly the multiples of
/// `g(x) = prod_{i<r} (x - alpha_i)` of degree below `k`.
pub fn rs_shortened(field: &FiniteField, k: usize, r: usize) -> Result<QaryCode> {
    check_dimension(field, k)?;
    if r > k - 1 {
        return Err(Error::InvalidShortening { r, k });
    }
    let q = field.order();
    let n = q as usize + 1 - r;
    let t = check_size(q, k - r, n)?;

    let mut g = vec![FieldElement::ONE];
    for alpha in field.elements().take(r) {
        // g <- g * (x - alpha)
        let neg = field.neg(alpha);
        let mut next = vec![FieldElement::ZERO; g.len() + 1];
        for (i, &c) in g.iter().enumerate() {
            next[i + 1] = field.add(next[i + 1], c);
            next[i] = field.add(next[i], field.mul(c, neg));
        }
        g = next;
    }

    let mut words: Vec<(u128, Vec<u16>)> = Vec::with_capacity(t);
    let mut word = Vec::with_capacity(q as usize + 1);
    for index in 0..t {
        let m = message_digits(index, q as usize, k - r);
        let mut coeffs = vec![FieldElement::ZERO; k];
        for (i, &a) in m.iter().enumerate() {
            for (j, &b) in g.iter().enumerate() {
                coeffs[i + j] = field.add(coeffs[i + j], field.mul(a, b));
            }
        }
        let parent_index = coeffs
            .iter()
            .rev()
            .fold(0u128, |acc, c| acc * q as u128 + c.0 as u128);
        word.clear();
        encode(field, &coeffs, &mut word);
        words.push((parent_index, word[r..].to_vec()));
    }
    words.sort_unstable_by_key(|(idx, _)| *idx);
    Ok(QaryCode {
        q,
        n,
        t,
        symbols: words.into_iter().flat_map(|(_, w)| w).collect(),
        meta: Some(RsMeta {
            k,
            r,
            d: q as usize - k + 2,
        }),
    })
}

/// Replaces symbol `v` in row `i` by a one at binary row `i*q + v`.
///
/// The result has constant weight `n`, and the dot product of two binary
/// columns equals the agreement count of the corresponding codewords.
pub fn binary_expand(code: &QaryCode) -> BinaryCode {
    let q = code.q as usize;
    let mut x = BinaryCode::zeros(code.n * q, code.t);
    for (j, word) in code.codewords().enumerate() {
        for (i, &v) in word.iter().enumerate() {
            x.set(i * q + v as usize, j, true);
        }
    }
    x.with_weight(code.n).expect("expansion has constant weight n")
}
