use anyhow::{anyhow, bail};
use clap::{Args, ValueEnum};

use sic_core::bounds::{
    asymptotic_rate, lower_z1, lower_zu, nonrecurrent_upper, prop7_lower, recurrent_upper, reference,
    threshold_lower, universal_upper, AsymptoticKind, BoundKind, BoundParams, Optimizer, Provenance,
    RateBound, UpperZuTable,
};
use sic_core::{RateBoundF64, UpperZuTableF64};

use crate::exit;
use crate::range::Range;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Table1,
    Table2,
    RecurrentUpper,
    NonrecurrentUpper,
    UpperZu,
    LowerZu,
    LowerZ1,
    UniversalUpper,
    Prop7Lower,
    ThresholdLower,
    Asymptotic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Args)]
pub struct BoundsArgs {
    kind: Kind,
    #[arg(long)]
    z: Option<Range>,
    #[arg(long)]
    u: Option<Range>,
    #[arg(long)]
    s: Option<Range>,
    #[arg(long)]
    l: Option<Range>,
    /// Leading-order formula for `asymptotic`.
    #[arg(long)]
    formula: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

fn need<'a>(r: &'a Option<Range>, name: &str) -> anyhow::Result<&'a [usize]> {
    r.as_ref().map(|r| r.0.as_slice()).ok_or_else(|| anyhow!("--{name} is required for this kind"))
}

fn pairs(a: &[usize], b: &[usize]) -> Vec<(usize, usize)> {
    a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).collect()
}

fn plain(kind: BoundKind, params: BoundParams, value: f64) -> RateBoundF64 {
    RateBound::computed(kind, params, value)
}

fn table2_rows() -> anyhow::Result<Vec<(&'static str, Vec<Option<RateBoundF64>>)>> {
    let upper = UpperZuTableF64::build(8)?;
    let s_values = 2..=8usize;
    let row = |f: &dyn Fn(usize) -> anyhow::Result<Option<RateBoundF64>>| -> anyhow::Result<Vec<_>> {
        s_values.clone().map(f).collect()
    };
    let lower_cell = |z: usize, u: usize| lower_zu::<f64>(z, u).map(|v| plain(BoundKind::LowerZu, BoundParams::zu(z, u), v));
    Ok(vec![
        ("lower R(s,1)", row(&|s| Ok(Some(lower_z1::<f64>(s)?)))?),
        ("upper R(s,1)", row(&|s| Ok(upper.get(s, 1).copied()))?),
        ("lower R(s-1,2)", row(&|s| if s >= 3 { Ok(Some(lower_cell(s - 1, 2)?)) } else { Ok(None) })?),
        ("upper R(s-1,2)", row(&|s| Ok(if s >= 3 { zu_cell(&upper, s - 1, 2) } else { None }))?),
        ("lower R(s-2,3)", row(&|s| if s >= 4 { Ok(Some(lower_cell(s - 2, 3)?)) } else { Ok(None) })?),
        ("upper R(s-2,3)", row(&|s| Ok(if s >= 4 { zu_cell(&upper, s - 2, 3) } else { None }))?),
    ])
}

fn zu_cell(table: &UpperZuTableF64, z: usize, u: usize) -> Option<RateBoundF64> {
    table.get(z, u).map(|b| RateBound {
        params: BoundParams::zu(z, u),
        ..*b
    })
}

fn compute(args: &BoundsArgs) -> anyhow::Result<Vec<RateBoundF64>> {
    let mut out = Vec::new();
    match args.kind {
        Kind::Table1 => {
            out.extend(recurrent_upper::<f64>(17)?.into_iter().skip(1));
        }
        Kind::Table2 => {
            for (_, row) in table2_rows()? {
                out.extend(row.into_iter().flatten());
            }
        }
        Kind::RecurrentUpper => {
            let zs = need(&args.z, "z")?;
            let all = recurrent_upper::<f64>(zs.iter().copied().max().unwrap_or(1))?;
            for &z in zs {
                out.push(*all.get(z.wrapping_sub(1)).ok_or_else(|| anyhow!("z must be at least 1"))?);
            }
        }
        Kind::NonrecurrentUpper => {
            for &z in need(&args.z, "z")? {
                out.push(plain(BoundKind::NonrecurrentUpper, BoundParams::z(z), nonrecurrent_upper(z)?));
            }
        }
        Kind::UpperZu => {
            let ps = pairs(need(&args.z, "z")?, need(&args.u, "u")?);
            if ps.iter().any(|&(z, u)| z == 0 || u == 0) {
                bail!("z and u must be at least 1");
            }
            let size = ps.iter().map(|&(z, u)| z.max(u)).max().unwrap_or(1);
            let table = UpperZuTable::<f64>::build(size)?;
            for (z, u) in ps {
                out.push(zu_cell(&table, z, u).expect("inside table"));
            }
        }
        Kind::LowerZu => {
            for (z, u) in pairs(need(&args.z, "z")?, need(&args.u, "u")?) {
                out.push(plain(BoundKind::LowerZu, BoundParams::zu(z, u), lower_zu(z, u)?));
            }
        }
        Kind::LowerZ1 => {
            for &z in need(&args.z, "z")? {
                out.push(lower_z1(z)?);
            }
        }
        Kind::UniversalUpper => {
            for (l, s) in pairs(need(&args.l, "l")?, need(&args.s, "s")?) {
                out.push(plain(BoundKind::UniversalUpper, BoundParams::ls(l, s), universal_upper(l, s)?));
            }
        }
        Kind::Prop7Lower => {
            for (u, s) in pairs(need(&args.u, "u")?, need(&args.s, "s")?) {
                out.push(plain(BoundKind::Prop7Lower, BoundParams::us(u, s), prop7_lower(u, s)?));
            }
        }
        Kind::ThresholdLower => {
            for (u, s) in pairs(need(&args.u, "u")?, need(&args.s, "s")?) {
                out.push(threshold_lower(u, s)?);
            }
        }
        Kind::Asymptotic => {
            let name = args.formula.as_deref().ok_or_else(|| anyhow!("--formula is required for asymptotic"))?;
            let kind: AsymptoticKind = name.parse()?;
            let opt = |r: &Option<Range>| r.as_ref().map_or(vec![None], |r| r.0.iter().map(|&v| Some(v)).collect());
            for z in opt(&args.z) {
                for u in opt(&args.u) {
                    for s in opt(&args.s) {
                        for l in opt(&args.l) {
                            let params = BoundParams { z, u, s, l };
                            out.push(plain(BoundKind::Asymptotic, params, asymptotic_rate(kind, &params)?));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn witness(b: &RateBoundF64) -> String {
    if b.provenance == Provenance::ExternalSeed {
        return "seed".into();
    }
    match b.optimizer {
        None => String::new(),
        Some(Optimizer::Alpha { alpha }) => format!("alpha={alpha:.9}"),
        Some(Optimizer::AlphaQ { alpha, q }) => format!("alpha={alpha:.9};q={q:.9}"),
        Some(Optimizer::Split { i, j }) => format!("i={i};j={j}"),
        Some(Optimizer::Beta { beta, argmin_u }) => format!("beta={beta:.9};u={argmin_u}"),
    }
}

fn cell(v: Option<usize>) -> String {
    v.map_or(String::new(), |v| v.to_string())
}

fn params_label(p: &BoundParams) -> String {
    [("z", p.z), ("u", p.u), ("s", p.s), ("l", p.l)]
        .iter()
        .filter_map(|(n, v)| v.map(|v| format!("{n}={v}")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn print_csv(bounds: &[RateBoundF64]) {
    println!("kind,z,u,s,l,value,witness");
    for b in bounds {
        let p = &b.params;
        println!(
            "{},{},{},{},{},{},{}",
            b.kind.name(),
            cell(p.z),
            cell(p.u),
            cell(p.s),
            cell(p.l),
            b.value,
            witness(b)
        );
    }
}

fn print_table(bounds: &[RateBoundF64]) {
    for b in bounds {
        println!("{:<18} {:<12} {:.6}  {}", b.kind.name(), params_label(&b.params), b.value, witness(b));
    }
}

fn print_table1(bounds: &[RateBoundF64]) {
    println!("{:>3}  {:>8}  {:>10}", "z", "1/R", "R");
    for b in bounds {
        println!("{:>3}  {:>8.4}  {:>10.8}", b.params.z.unwrap_or(0), 1.0 / b.value, b.value);
    }
}

fn print_table2() -> anyhow::Result<()> {
    let fmt = |b: &Option<RateBoundF64>| b.map_or("-".to_string(), |b| format!("{:.4}", b.value));
    print!("{:<16}", "s");
    for s in 2..=8 {
        print!(" {s:>7}");
    }
    println!();
    for (label, row) in table2_rows()? {
        print!("{label:<16}");
        for b in &row {
            print!(" {:>7}", fmt(b));
        }
        println!();
    }
    print!("{:<16}", "lower F(=s) ref");
    for (_, v) in reference::DESIGN_EQ_LOWER {
        print!(" {:>7}", format!("{v:.3}"));
    }
    println!();
    println!("upper R(2,2) is a published seed value; the last row is reference data.");
    Ok(())
}

pub fn run(args: &BoundsArgs) -> anyhow::Result<u8> {
    if (args.format, args.kind) == (Format::Table, Kind::Table2) {
        print_table2()?;
        return Ok(exit::PASS);
    }
    let bounds = compute(args)?;
    match (args.format, args.kind) {
        (Format::Json, _) => println!("{}", serde_json::to_string_pretty(&bounds)?),
        (Format::Csv, _) => print_csv(&bounds),
        (Format::Table, Kind::Table1) => print_table1(&bounds),
        (Format::Table, _) => print_table(&bounds),
    }
    Ok(exit::PASS)
}
