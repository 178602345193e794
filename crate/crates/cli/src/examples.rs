use sic_core::codegen::{binary_expand, rs_shortened};
use sic_core::verify::{check_d_certificate, check_d_code, coincidence, CheckConfig};
use sic_core::{BinaryCode, Error, FiniteField};

use crate::exit;

struct Example {
    name: &'static str,
    q: u32,
    k: usize,
    r: usize,
    /// Expected `(t, N, w, lambda)`.
    expect: (usize, usize, usize, usize),
    /// `(s, l, holds)` certificate checks.
    certs: &'static [(usize, usize, bool)],
    /// `(s, l)` exhaustive checks, run when within budget.
    exhaustive: &'static [(usize, usize)],
}

const EXAMPLES: [Example; 3] = [
    Example {
        name: "example 1",
        q: 5,
        k: 5,
        r: 2,
        expect: (125, 20, 4, 2),
        certs: &[(3, 2, true)],
        exhaustive: &[(3, 2)],
    },
    Example {
        name: "example 2",
        q: 7,
        k: 6,
        r: 3,
        expect: (343, 35, 5, 2),
        certs: &[(4, 2, true)],
        exhaustive: &[(4, 2)],
    },
    Example {
        name: "example 3",
        q: 8,
        k: 5,
        r: 2,
        expect: (512, 56, 7, 2),
        certs: &[(6, 2, true), (10, 3, true), (11, 3, false)],
        exhaustive: &[],
    },
];

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn build(e: &Example) -> anyhow::Result<(BinaryCode, usize)> {
    let field = FiniteField::new(e.q)?;
    let code = rs_shortened(&field, e.k, e.r)?;
    let lambda = coincidence(&code)?;
    Ok((binary_expand(&code), lambda))
}

pub fn run(cfg: &CheckConfig) -> anyhow::Result<u8> {
    let mut all_ok = true;
    for e in &EXAMPLES {
        let (x, q_lambda) = build(e)?;
        let w = x.constant_weight()?;
        let lambda = coincidence(&x)?;
        let got = (x.cols(), x.rows(), w, lambda);
        let ok = got == e.expect && q_lambda == lambda;
        all_ok &= ok;
        println!(
            "{}: GF({}) k={} r={}: t={} N={} w={} lambda={} [{}]",
            e.name,
            e.q,
            e.k,
            e.r,
            got.0,
            got.1,
            got.2,
            got.3,
            mark(ok)
        );
        for &(s, l, expected) in e.certs {
            let holds = check_d_certificate(&x, s, l)?;
            let ok = holds == expected;
            all_ok &= ok;
            let verdict = if holds { "holds" } else { "fails" };
            println!(
                "  certificate D_{s}^{l}: {s}*{lambda}+1 = {} vs {l}*{w} = {}: {verdict} [{}]",
                s * lambda + 1,
                l * w,
                mark(ok)
            );
            if holds && ok {
                println!("  t({}, D_{s}^{l}) >= {} confirmed", x.rows(), x.cols());
            }
        }
        for &(s, l) in e.exhaustive {
            match check_d_code(&x, s, l, cfg) {
                Ok(r) => {
                    all_ok &= r.satisfied;
                    match &r.witness {
                        None => println!(
                            "  exhaustive D_{s}^{l}: satisfied, {} tuples [ok]",
                            r.tuples_checked
                        ),
                        Some(wit) => println!("  exhaustive D_{s}^{l}: violated at {wit} [FAIL]"),
                    }
                }
                Err(Error::BudgetExceeded { required, budget }) => {
                    println!("  exhaustive D_{s}^{l}: skipped, needs {required} row scans (budget {budget})");
                }
                Err(err) => return Err(err.into()),
            }
        }
    }
    println!("{}", if all_ok { "all examples passed" } else { "some examples FAILED" });
    Ok(if all_ok { exit::PASS } else { exit::FAIL })
}
