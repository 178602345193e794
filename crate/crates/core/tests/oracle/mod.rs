//! Independent reference implementations used by the integration tests:
//! set-based brute-force checkers and a high-precision evaluator for the
//! closed-form bounds.

#![allow(dead_code)]

use dashu_float::round::mode::HalfAway;
use dashu_float::FBig;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sic_core::verify::{OutcomeFunction, VerificationReport};
use sic_core::{BinaryCode, FieldElement, FiniteField, Witness};

// ---------------------------------------------------------------- numerics

type F = FBig<HalfAway, 10>;
const DIGITS: usize = 60;

fn big(n: u64) -> F {
    F::from(n).with_precision(DIGITS).value()
}

fn pow(base: u64, e: u32) -> F {
    (0..e).fold(big(1), |acc, _| acc * big(base))
}

fn log2(x: F) -> F {
    x.ln() / big(2).ln()
}

fn to_f64(x: F) -> f64 {
    x.to_f64().value()
}

/// `-(z+u-1)^(-1) log2(1 - z^z u^u / (z+u)^(z+u))` to 60 digits.
pub fn lower_zu_hp(z: u64, u: u64) -> f64 {
    let ratio = pow(z, z as u32) * pow(u, u as u32) / pow(z + u, (z + u) as u32);
    to_f64(-log2(big(1) - ratio) / big(z + u - 1))
}

/// `-(1/s) log2(1 - (s-u+1)^(s-u+1) u^u / (s+1)^(s+1))` to 60 digits.
pub fn prop7_hp(u: u64, s: u64) -> f64 {
    let a = s - u + 1;
    let ratio = pow(a, a as u32) * pow(u, u as u32) / pow(s + 1, (s + 1) as u32);
    to_f64(-log2(big(1) - ratio) / big(s))
}

/// Binary entropy of `num/den` to 60 digits.
pub fn entropy_hp(num: u64, den: u64) -> F {
    let p = big(num) / big(den);
    let q = big(den - num) / big(den);
    -(p.clone() * log2(p) + q.clone() * log2(q))
}

/// Binary entropy of `num/den` as an `f64`.
pub fn h_hp(num: u64, den: u64) -> f64 {
    to_f64(entropy_hp(num, den))
}

/// `f_z(num/den) = h(num/(den z)) - (num/den) h(1/z)` to 60 digits.
pub fn f_z_hp(z: u64, num: u64, den: u64) -> f64 {
    let a = big(num) / big(den);
    to_f64(entropy_hp(num, den * z) - a * entropy_hp(1, z))
}

// ---------------------------------------------------------------- codes

/// Generator of the extended RS code: row `i` is `alpha^i` at each element,
/// then `[i == k-1]`.
pub fn generator(f: &FiniteField, k: usize) -> Vec<Vec<FieldElement>> {
    (0..k)
        .map(|i| {
            let mut row: Vec<_> = f.elements().map(|a| f.pow(a, i as u64)).collect();
            row.push(if i == k - 1 { FieldElement::ONE } else { FieldElement::ZERO });
            row
        })
        .collect()
}

/// Whether a square matrix over the field is invertible.
pub fn nonsingular(f: &FiniteField, mut m: Vec<Vec<FieldElement>>) -> bool {
    let n = m.len();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| m[r][col] != FieldElement::ZERO) else {
            return false;
        };
        m.swap(col, piv);
        let inv = f.inv(m[col][col]).unwrap();
        for r in col + 1..n {
            let factor = f.mul(m[r][col], inv);
            for c in col..n {
                let sub = f.mul(factor, m[col][c]);
                m[r][c] = f.sub(m[r][c], sub);
            }
        }
    }
    true
}

// ---------------------------------------------------------------- matrices

/// Row-major boolean copy of a code.
pub fn rows_of(x: &BinaryCode) -> Vec<Vec<bool>> {
    (0..x.rows()).map(|i| x.row_bits(i).collect()).collect()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> BinaryCode {
    let beta: f64 = rng.gen_range(0.15..0.85);
    BinaryCode::from_fn(rows, cols, |_, _| rng.gen_bool(beta))
}

/// `count` seeded matrices with `cols` drawn from `cols_range` and at most
/// 12 rows. Every fourth matrix is an identity padded with random rows, so
/// the strong properties hold on part of the corpus.
pub fn corpus(seed: u64, count: usize, cols_range: std::ops::RangeInclusive<usize>) -> Vec<BinaryCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let t = rng.gen_range(cols_range.clone());
            if i % 4 == 3 {
                let n = rng.gen_range(t..=12.max(t));
                let extra = random_matrix(&mut rng, n - t, t);
                BinaryCode::from_fn(n, t, |r, c| if r < t { r == c } else { extra.get(r - t, c) })
            } else {
                let n = rng.gen_range(3..=12);
                random_matrix(&mut rng, n, t)
            }
        })
        .collect()
}

fn combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if pool.len() < k {
        return vec![];
    }
    let mut out = Vec::new();
    for (i, &first) in pool.iter().enumerate() {
        for mut rest in combinations(&pool[i + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn by_size(t: usize, sizes: std::ops::RangeInclusive<usize>) -> Vec<Vec<usize>> {
    let pool: Vec<usize> = (0..t).collect();
    sizes.flat_map(|k| combinations(&pool, k)).collect()
}

fn without(t: usize, set: &[usize]) -> Vec<usize> {
    (0..t).filter(|c| !set.contains(c)).collect()
}

fn ones(row: &[bool], set: &[usize]) -> usize {
    set.iter().filter(|&&c| row[c]).count()
}

fn report(checked: u64, witness: Option<Witness>) -> VerificationReport {
    VerificationReport {
        satisfied: witness.is_none(),
        witness,
        tuples_checked: checked,
    }
}

// ---------------------------------------------------------------- checkers

pub fn cover_free(x: &BinaryCode, z: usize, u: usize) -> VerificationReport {
    let (rows, t) = (rows_of(x), x.cols());
    let mut checked = 0;
    for uset in combinations(&(0..t).collect::<Vec<_>>(), u) {
        for zset in combinations(&without(t, &uset), z) {
            checked += 1;
            let ok = rows.iter().any(|r| uset.iter().all(|&c| r[c]) && zset.iter().all(|&c| !r[c]));
            if !ok {
                return report(checked, Some(Witness::CoverFree { u: uset, z: zset }));
            }
        }
    }
    report(checked, None)
}

pub fn d_code(x: &BinaryCode, s: usize, l: usize) -> VerificationReport {
    let (rows, t) = (rows_of(x), x.cols());
    let mut checked = 0;
    for sset in combinations(&(0..t).collect::<Vec<_>>(), s) {
        for j in without(t, &sset) {
            checked += 1;
            if !rows.iter().any(|r| r[j] && ones(r, &sset) < l) {
                return report(checked, Some(Witness::DCode { s: sset, j }));
            }
        }
    }
    report(checked, None)
}

pub fn m_code(x: &BinaryCode, s: usize, u: usize) -> VerificationReport {
    let (rows, t) = (rows_of(x), x.cols());
    let mut checked = 0;
    for uset in by_size(t, u..=s) {
        let rest = without(t, &uset);
        for &j in &uset {
            for zsize in 0..=uset.len().min(rest.len()) {
                for zset in combinations(&rest, zsize) {
                    checked += 1;
                    let ok = rows
                        .iter()
                        .any(|r| r[j] && ones(r, &uset) == u && zset.iter().all(|&c| !r[c]));
                    if !ok {
                        return report(checked, Some(Witness::MCode { u: uset, j, z: zset }));
                    }
                }
            }
        }
    }
    report(checked, None)
}

pub fn design(x: &BinaryCode, f: &OutcomeFunction, s: usize, exactly: bool) -> VerificationReport {
    let (rows, t) = (rows_of(x), x.cols());
    let l = f.level();
    let sizes = if exactly {
        s..=s
    } else if f.is_threshold() {
        l..=s
    } else {
        0..=s
    };
    let mut seen: Vec<(Vec<i64>, Vec<usize>)> = Vec::new();
    let mut checked = 0;
    for p in by_size(t, sizes) {
        checked += 1;
        let y: Vec<i64> = rows.iter().map(|r| f.eval(ones(r, &p).min(l))).collect();
        if let Some((_, earlier)) = seen.iter().find(|(v, _)| *v == y) {
            return report(checked, Some(Witness::Pair { p: earlier.clone(), p_prime: p }));
        }
        seen.push((y, p));
    }
    report(checked, None)
}

fn separate(x: &BinaryCode, u: usize, s: usize, admissible: impl Fn(&[usize], &[usize]) -> bool) -> VerificationReport {
    let (rows, t) = (rows_of(x), x.cols());
    let sets = by_size(t, u..=s);
    let mut checked = 0;
    for p in &sets {
        for q in &sets {
            if p == q || !admissible(p, q) {
                continue;
            }
            checked += 1;
            if !rows.iter().any(|r| ones(r, p) >= u && ones(r, q) < u) {
                return report(checked, Some(Witness::Pair { p: p.clone(), p_prime: q.clone() }));
            }
        }
    }
    report(checked, None)
}

pub fn threshold_design(x: &BinaryCode, u: usize, s: usize) -> VerificationReport {
    separate(x, u, s, |p, q| q.len() <= p.len())
}

pub fn threshold_bar_design(x: &BinaryCode, u: usize, s: usize) -> VerificationReport {
    separate(x, u, s, |p, q| p.iter().any(|c| !q.contains(c)))
}
