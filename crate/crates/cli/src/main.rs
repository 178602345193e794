use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use sic_core::codegen::{binary_expand, ks_search, rs_shortened};
use sic_core::io::{read_matrix, write_matrix};
use sic_core::verify::{self, CheckConfig, DesignMode, OutcomeFunction, DEFAULT_BUDGET};
use sic_core::{Error, FiniteField, VerificationReport};

mod bounds;
mod examples;
mod range;

#[derive(Parser)]
#[command(name = "sic", version, about = "Superimposed codes, group-testing designs and rate bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute rate bounds.
    Bounds(bounds::BoundsArgs),
    /// Build the binary expansion of a shortened Reed-Solomon code.
    Construct {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a property of a matrix file.
    Verify {
        file: PathBuf,
        #[command(subcommand)]
        property: Property,
        /// Maximum number of row scans for exhaustive checks.
        #[arg(long, env = "SIC_BUDGET", default_value_t = DEFAULT_BUDGET, global = true)]
        budget: u64,
        #[arg(long, global = true)]
        sequential: bool,
    },
    /// Cheapest shortened-RS superimposed code with size in [2^m, 2^(m+1)).
    Search {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1024)]
        q_max: u64,
    },
    /// Build and check the three worked example codes.
    Examples {
        #[arg(long, env = "SIC_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

#[derive(Subcommand)]
enum Property {
    /// (z,u) cover-free code.
    CoverFree { z: usize, u: usize },
    /// D_s^l code, exhaustively.
    DCode { s: usize, l: usize },
    /// D_s^l code, from column weight and coincidence.
    DCert { s: usize, l: usize },
    /// M_s^u code.
    MCode { s: usize, u: usize },
    /// Design for a saturating outcome map; labels default to the threshold map.
    Design {
        l: usize,
        s: usize,
        mode: Mode,
        /// Outcome labels for 0..=l positives.
        #[arg(allow_negative_numbers = true)]
        labels: Vec<i64>,
    },
    /// Threshold (u, <= s) design.
    Threshold { u: usize, s: usize },
    /// Strong threshold (u, <= s) design.
    ThresholdBar { u: usize, s: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    AtMost,
    Exactly,
}

/// Exit codes shared by every command.
pub(crate) mod exit {
    pub const PASS: u8 = 0;
    pub const FAIL: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const BUDGET: u8 = 3;
}

fn main() -> ExitCode {
    // Exit quietly when stdout is a closed pipe (`sic bounds ... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { exit::PASS });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let budget = e
                .chain()
                .any(|c| matches!(c.downcast_ref::<Error>(), Some(Error::BudgetExceeded { .. })));
            ExitCode::from(if budget { exit::BUDGET } else { exit::USAGE })
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Bounds(args) => bounds::run(&args),
        Command::Construct { q, k, r, out } => construct(q, k, r, &out),
        Command::Verify {
            file,
            property,
            budget,
            sequential,
        } => {
            let cfg = CheckConfig {
                budget,
                parallel: !sequential,
            };
            verify_file(&file, &property, &cfg)
        }
        Command::Search { s, m, q_max } => Ok(search(s, m, q_max)),
        Command::Examples { budget } => examples::run(&CheckConfig::with_budget(budget)),
    }
}

fn construct(q: u32, k: usize, r: usize, out: &PathBuf) -> anyhow::Result<u8> {
    let field = FiniteField::new(q)?;
    let code = rs_shortened(&field, k, r)?;
    let x = binary_expand(&code);
    write_matrix(&x, out)?;
    let lambda = k - r - 1;
    println!("t={} N={} w={} λ={}", x.cols(), x.rows(), code.len(), lambda);
    Ok(exit::PASS)
}

fn search(s: u64, m: u32, q_max: u64) -> u8 {
    match ks_search(s, m, q_max) {
        Some(p) => {
            println!("q={} λ={} N={} w={} k={} r={} t={}", p.q, p.lambda, p.len, p.w, p.k, p.r, p.t);
            exit::PASS
        }
        None => {
            println!("infeasible: no q <= {q_max} gives a size in [2^{m}, 2^{})", m + 1);
            exit::FAIL
        }
    }
}

fn report(r: &VerificationReport) -> u8 {
    match &r.witness {
        None => {
            println!("satisfied ({} tuples checked)", r.tuples_checked);
            exit::PASS
        }
        Some(w) => {
            println!("violated: {w} ({} tuples checked)", r.tuples_checked);
            exit::FAIL
        }
    }
}

fn verify_file(path: &PathBuf, property: &Property, cfg: &CheckConfig) -> anyhow::Result<u8> {
    let x = read_matrix(path).with_context(|| format!("reading {}", path.display()))?;
    let r = match *property {
        Property::CoverFree { z, u } => verify::check_cover_free(&x, z, u, cfg)?,
        Property::DCode { s, l } => verify::check_d_code(&x, s, l, cfg)?,
        Property::DCert { s, l } => {
            let w = x.constant_weight()?;
            let lambda = verify::coincidence(&x)?;
            let ok = verify::check_d_certificate(&x, s, l)?;
            let rel = if ok { "<=" } else { ">" };
            println!(
                "{}: s*lambda+1 = {} {rel} l*w = {} (w={w}, lambda={lambda})",
                if ok { "certificate holds" } else { "certificate fails" },
                s * lambda + 1,
                l * w
            );
            return Ok(if ok { exit::PASS } else { exit::FAIL });
        }
        Property::MCode { s, u } => verify::check_m_code(&x, s, u, cfg)?,
        Property::Design { l, s, mode, ref labels } => {
            let f = if labels.is_empty() {
                OutcomeFunction::threshold(l)?
            } else {
                if labels.len() != l + 1 {
                    bail!("expected {} labels for l={l}, got {}", l + 1, labels.len());
                }
                OutcomeFunction::new(labels.clone())?
            };
            let mode = match mode {
                Mode::AtMost => DesignMode::AtMost,
                Mode::Exactly => DesignMode::Exactly,
            };
            verify::check_design(&x, &f, s, mode, cfg)?
        }
        Property::Threshold { u, s } => verify::check_threshold_design(&x, u, s, cfg)?,
        Property::ThresholdBar { u, s } => verify::check_threshold_bar_design(&x, u, s, cfg)?,
    };
    Ok(report(&r))
}
