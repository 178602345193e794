mod oracle;

use oracle::{generator, nonsingular};
use proptest::prelude::*;
use sic_core::codegen::{dcode_condition_check, ks_search, random_code};
use sic_core::field::is_prime_power;
use sic_core::verify::coincidence;
use sic_core::{binary_expand, rs_extended, rs_shortened, shorten, CodeParams, FieldElement, FiniteField};

fn gf(q: u32) -> FiniteField {
    FiniteField::new(q).unwrap()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

#[test]
fn encoder_matches_generator_matrix() {
    for (q, k) in [(2, 2), (3, 3), (4, 2), (4, 4), (5, 3), (7, 2), (8, 3)] {
        let f = gf(q);
        let g = generator(&f, k);
        let code = rs_extended(&f, k).unwrap();
        assert_eq!(code.size(), (q as usize).pow(k as u32));
        for (index, word) in code.codewords().enumerate() {
            let msg: Vec<u32> = (0..k).map(|i| (index / (q as usize).pow(i as u32)) as u32 % q).collect();
            for (col, &sym) in word.iter().enumerate() {
                let v = (0..k).fold(FieldElement::ZERO, |acc, i| f.add(acc, f.mul(FieldElement(msg[i]), g[i][col])));
                assert_eq!(sym as u32, v.0, "q={q} k={k} msg={msg:?} col={col}");
            }
        }
    }
}

#[test]
fn extended_rs_is_mds() {
    for q in [2u32, 3, 4, 5, 7, 8, 9] {
        let f = gf(q);
        for k in 2..=q as usize {
            let g = generator(&f, k);
            // Every k columns independent: distance at least q-k+2.
            for cols in subsets(q as usize + 1, k) {
                let sub: Vec<Vec<_>> = g.iter().map(|row| cols.iter().map(|&c| row[c]).collect()).collect();
                assert!(nonsingular(&f, sub), "q={q} k={k} cols={cols:?}");
            }
            // A codeword of weight exactly q-k+2: prod_{i<k-1} (x - alpha_i).
            let mut poly = vec![FieldElement::ONE];
            for a in f.elements().take(k - 1) {
                let mut next = vec![FieldElement::ZERO; poly.len() + 1];
                for (i, &c) in poly.iter().enumerate() {
                    next[i + 1] = f.add(next[i + 1], c);
                    next[i] = f.sub(next[i], f.mul(c, a));
                }
                poly = next;
            }
            let mut word: Vec<FieldElement> = f.elements().map(|a| f.eval_poly(&poly, a)).collect();
            word.push(poly[k - 1]);
            let weight = word.iter().filter(|&&s| s != FieldElement::ZERO).count();
            assert_eq!(weight, q as usize - k + 2);
            if (q as usize).pow(k as u32) <= 20_000 {
                let code = rs_extended(&f, k).unwrap();
                assert_eq!(code.min_distance(), Some(q as usize - k + 2), "q={q} k={k}");
                assert_eq!(code.meta().unwrap().d, q as usize - k + 2);
            }
        }
    }
}

#[test]
fn direct_shortening_matches_filtering() {
    for (q, k) in [(3, 3), (4, 3), (4, 4), (5, 4), (5, 5), (7, 4), (8, 4), (9, 3)] {
        let f = gf(q);
        let parent = rs_extended(&f, k).unwrap();
        for r in 0..k {
            let a = shorten(&parent, r).unwrap();
            let b = rs_shortened(&f, k, r).unwrap();
            assert_eq!(a, b, "q={q} k={k} r={r}");
            assert_eq!(a.size(), (q as usize).pow((k - r) as u32));
            assert_eq!(a.len(), q as usize + 1 - r);
            assert_eq!(coincidence(&a).unwrap(), k - r - 1);
        }
        assert!(shorten(&parent, k).is_err());
    }
}

#[test]
fn repeated_shortening_composes() {
    let f = gf(5);
    let parent = rs_extended(&f, 5).unwrap();
    let twice = shorten(&shorten(&parent, 1).unwrap(), 2).unwrap();
    assert_eq!(twice, rs_shortened(&f, 5, 3).unwrap());
}

#[test]
fn binary_expansion_preserves_agreement() {
    for (q, k, r) in [(4, 3, 1), (5, 5, 2), (7, 4, 1), (8, 3, 0)] {
        let code = rs_shortened(&gf(q), k, r).unwrap();
        let x = binary_expand(&code);
        assert_eq!(x.rows(), code.len() * q as usize);
        assert_eq!(x.cols(), code.size());
        assert_eq!(x.constant_weight().unwrap(), code.len());
        assert_eq!(x.declared_weight(), Some(code.len()));
        for a in 0..code.size().min(60) {
            for b in a + 1..code.size().min(60) {
                assert_eq!(x.dot(a, b), code.agreement(a, b));
            }
        }
        for (j, word) in code.codewords().enumerate().take(50) {
            for (i, &v) in word.iter().enumerate() {
                for sym in 0..q as usize {
                    assert_eq!(x.get(i * q as usize + sym, j), sym == v as usize);
                }
            }
        }
    }
}

#[test]
fn invalid_dimensions() {
    let f = gf(5);
    assert!(rs_extended(&f, 1).is_err());
    assert!(rs_extended(&f, 7).is_err());
    assert!(rs_shortened(&f, 4, 4).is_err());
    assert!(rs_extended(&gf(256), 4).is_err(), "too large to materialize");
}

/// Smallest-length certified `(s,1)`-code over every `(q, k, r)` whose size
/// lands in `[2^m, 2^(m+1))`, minimizing `(N, q, lambda)`. Coincidence zero
/// (disjoint supports, no better than the identity) is not a candidate.
fn search_oracle(s: u64, m: u32, q_max: u64) -> Option<(u64, u64, u64)> {
    let mut best: Option<(u64, u64, u64)> = None;
    for q in (2..=q_max).filter(|&q| is_prime_power(q).is_some()) {
        for k in 2..=q + 1 {
            for r in 0..k {
                let Ok(p) = CodeParams::new(q, k, r, s.max(2), 1) else { continue };
                if p.t < 1u128 << m || p.t >= 1u128 << (m + 1) {
                    continue;
                }
                if p.lambda == 0 || s * p.lambda + 1 > p.n {
                    continue;
                }
                let cand = (p.len, q, p.lambda);
                if best.map_or(true, |b| cand < b) {
                    best = Some(cand);
                }
            }
        }
    }
    best
}

#[test]
fn search_is_minimal() {
    for s in 2..=6 {
        for m in 5..=14 {
            let got = ks_search(s, m, 64).map(|p| (p.len, p.q, p.lambda));
            assert_eq!(got, search_oracle(s, m, 64), "s={s} m={m}");
        }
    }
}

#[test]
fn search_results_are_consistent() {
    for s in 2..=8 {
        for m in 5..=30 {
            let Some(p) = ks_search(s, m, 1024) else { continue };
            assert!(p.t >= 1 << m && p.t < 1 << (m + 1));
            assert_eq!(p.w, s * p.lambda + 1);
            assert_eq!(p.len, p.w * p.q);
            assert!(dcode_condition_check(p.q, p.k, p.r, s, 1).unwrap());
            // One fewer row of weight would break the certificate.
            assert!(s * p.lambda + 1 > p.w - 1);
        }
    }
    assert!(ks_search(1, 10, 64).is_none());
}

#[test]
fn certified_construction_is_a_superimposed_code() {
    use sic_core::verify::check_cover_free;
    // GF(5), k=2, r=0: lambda=1, w=6, certified for s=5.
    let x = binary_expand(&rs_shortened(&gf(5), 2, 0).unwrap());
    assert!(dcode_condition_check(5, 2, 0, 5, 1).unwrap());
    let report = check_cover_free(&x, 5, 1, &Default::default()).unwrap();
    assert!(report.satisfied);
}

#[test]
fn random_code_rejects_bad_beta() {
    assert!(random_code(4, 4, 0.0, 1).is_err());
    assert!(random_code(4, 4, 1.0, 1).is_err());
    assert!(random_code(4, 4, f64::NAN, 1).is_err());
    assert!(random_code(0, 4, 0.5, 1).is_err());
}

proptest! {
    #[test]
    fn random_code_is_reproducible(rows in 1usize..40, cols in 1usize..40, beta in 0.01f64..0.99, seed: u64) {
        let a = random_code(rows, cols, beta, seed).unwrap();
        prop_assert_eq!(&a, &random_code(rows, cols, beta, seed).unwrap());
        prop_assert_eq!((a.rows(), a.cols()), (rows, cols));
    }

    #[test]
    fn random_code_density(beta in 0.1f64..0.9, seed: u64) {
        let x = random_code(100, 100, beta, seed).unwrap();
        let ones: usize = (0..100).map(|c| x.column_weight(c)).sum();
        let mean = ones as f64 / 10_000.0;
        prop_assert!((mean - beta).abs() < 0.03, "mean {} beta {}", mean, beta);
    }
}
