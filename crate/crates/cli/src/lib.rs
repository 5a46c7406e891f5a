//! `coeffbounds` command-line front end.
//!
//! Every command produces a list of [`OutputRecord`]s that is rendered as an
//! aligned text table, JSON (`{"version":1,"records":[...]}`) or CSV.

pub mod output;
pub mod verify;

use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use coeffbounds::bounds::{breakpoint_table, mu_nu, BreakpointStatus};
use coeffbounds::{Alpha, Functional, MuNuSource};

pub use output::{Format, OutputRecord, Provenance, Report};
pub use verify::Suite;

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Parser)]
#[command(name = "coeffbounds", version, about = "Sharp coefficient bounds for W(alpha): evaluate, sweep, verify")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true, ignore_case = true)]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every proved bound at one alpha.
    Bounds {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
    },
    /// Bounds on a uniform alpha grid, with breakpoints inserted.
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        alpha_min: f64,
        #[arg(long, allow_negative_numbers = true)]
        alpha_max: f64,
        #[arg(long, default_value_t = 101)]
        steps: usize,
        /// Comma-separated quantity names; all non-Hankel bounds by default.
        #[arg(long, value_delimiter = ',')]
        quantities: Vec<String>,
    },
    /// Case boundaries recomputed from their equations, with the published decimals.
    Breakpoints,
    /// Run a verification suite over the standard alpha sample.
    Verify {
        #[arg(long, value_enum, ignore_case = true)]
        suite: Suite,
        #[arg(long, env = "COEFFBOUNDS_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// (mu, nu) of the third-coefficient functional and its region.
    Region {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        /// GAMMA3 or GAMMA3_INVERSE.
        #[arg(long, default_value = "GAMMA3")]
        source: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    VerificationFailure = 1,
    Usage = 2,
}

/// Bad arguments or an output failure; reported with exit code 2.
#[derive(Debug, Clone, PartialEq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

impl From<coeffbounds::Error> for UsageError {
    fn from(e: coeffbounds::Error) -> Self {
        UsageError(e.to_string())
    }
}

pub struct Outcome {
    pub report: Report,
    pub status: ExitStatus,
    /// One-line verdict for commands that can fail verification.
    pub summary: Option<String>,
}

/// Bound quantities by name.
pub const QUANTITIES: [(&str, Functional); 12] = [
    ("gamma1_bound", Functional::AbsG1),
    ("gamma2_bound", Functional::AbsG2),
    ("gamma3_bound", Functional::AbsG3),
    ("Gamma1_bound", Functional::AbsGg1),
    ("Gamma2_bound", Functional::AbsGg2),
    ("Gamma3_bound", Functional::AbsGg3),
    ("gamma_diff_upper", Functional::GammaDiffMax),
    ("gamma_diff_lower", Functional::GammaDiffMin),
    ("Gamma_diff_upper", Functional::GgDiffMax),
    ("Gamma_diff_lower", Functional::GgDiffMin),
    ("H_log_bound", Functional::AbsHLog),
    ("H_log_inverse_bound", Functional::AbsHLogInv),
];

fn quantity(name: &str) -> Result<(&'static str, Functional), UsageError> {
    QUANTITIES.iter().find(|(n, _)| *n == name).copied().ok_or_else(|| {
        let names: Vec<&str> = QUANTITIES.iter().map(|q| q.0).collect();
        UsageError(format!("unknown quantity {name:?}; expected one of {}", names.join(", ")))
    })
}

fn alpha(a: f64) -> Result<Alpha, UsageError> {
    Ok(Alpha::new(a)?)
}

fn bound_record(name: &str, f: Functional, a: Alpha) -> Result<OutputRecord, UsageError> {
    let value = f.bound(a)?;
    Ok(OutputRecord::new(a.get(), name, value, Provenance::Theorem).with("extremal", format!("{:?}", f.extremal(a)?)))
}

pub fn run(cmd: &Command) -> Result<Outcome, UsageError> {
    let records = match cmd {
        Command::Bounds { alpha: a } => cmd_bounds(*a)?,
        Command::Sweep { alpha_min, alpha_max, steps, quantities } => {
            cmd_sweep(*alpha_min, *alpha_max, *steps, quantities)?
        }
        Command::Breakpoints => cmd_breakpoints(),
        Command::Verify { suite, seed } => verify::run_suite(*suite, *seed)?,
        Command::Region { alpha: a, source } => cmd_region(*a, source)?,
    };
    let failed = records.iter().filter(|r| !r.passed()).count();
    let status = if failed == 0 { ExitStatus::Success } else { ExitStatus::VerificationFailure };
    let summary = match cmd {
        Command::Verify { suite, seed } => Some(format!(
            "{} suite {} (seed {seed}): {} checks, {failed} failed",
            if failed == 0 { "PASS" } else { "FAIL" },
            suite.to_possible_value().expect("no skipped variants").get_name(),
            records.len()
        )),
        Command::Breakpoints if failed > 0 => Some(format!("FAIL: {failed} breakpoints differ from the published decimals")),
        _ => None,
    };
    Ok(Outcome { report: Report::new(records), status, summary })
}

pub fn cmd_bounds(a: f64) -> Result<Vec<OutputRecord>, UsageError> {
    let a = alpha(a)?;
    QUANTITIES.iter().filter(|(_, f)| f.supports(a)).map(|&(name, f)| bound_record(name, f, a)).collect()
}

pub fn cmd_sweep(lo: f64, hi: f64, steps: usize, names: &[String]) -> Result<Vec<OutputRecord>, UsageError> {
    if !(lo.is_finite() && hi.is_finite() && 0.0 <= lo && lo < hi) {
        return Err(UsageError(format!("need 0 <= alpha-min < alpha-max, got [{lo}, {hi}]")));
    }
    if steps < 2 {
        return Err(UsageError(format!("steps must be >= 2, got {steps}")));
    }
    let selected: Vec<(&str, Functional)> = if names.is_empty() {
        QUANTITIES.iter().copied().filter(|(_, f)| !f.is_hankel()).collect()
    } else {
        names.iter().map(|n| quantity(n)).collect::<Result<_, _>>()?
    };
    if let Some((name, _)) = selected.iter().find(|(_, f)| f.is_hankel()) {
        return Err(UsageError(format!("{name} is proved only at alpha = 1; use `bounds --alpha 1`")));
    }

    let mut grid: Vec<(f64, Option<&str>)> =
        (0..steps).map(|i| (lo + (hi - lo) * i as f64 / (steps - 1) as f64, None)).collect();
    grid[steps - 1].0 = hi;
    for b in breakpoint_table() {
        if !(lo..=hi).contains(&b.alpha) {
            continue;
        }
        match grid.iter_mut().find(|(a, _)| (a - b.alpha).abs() <= 1e-12) {
            Some(row) => row.1 = Some(b.name),
            None => grid.push((b.alpha, Some(b.name))),
        }
    }
    grid.sort_by(|x, y| x.0.total_cmp(&y.0));

    let mut out = Vec::with_capacity(grid.len() * selected.len());
    for (a, mark) in grid {
        for &(name, f) in &selected {
            let value = f.bound(alpha(a)?)?;
            let mut r = OutputRecord::new(a, name, value, Provenance::Theorem);
            if let Some(bp) = mark {
                r = r.with("breakpoint", bp);
            }
            out.push(r);
        }
    }
    Ok(out)
}

pub fn cmd_breakpoints() -> Vec<OutputRecord> {
    breakpoint_table()
        .iter()
        .map(|b| {
            let mut r = OutputRecord::new(b.alpha, b.name, b.alpha, Provenance::Theorem)
                .with("equation", b.equation)
                .with("published", b.published)
                .with("difference", b.published_difference())
                .with("status", b.status.to_string())
                .with("pass", b.status != BreakpointStatus::Fail);
            if let (Some(v), Some(label)) = (b.closed_form, b.closed_form_label) {
                r = r.with("closed_form", label).with("closed_form_value", v);
            }
            if let Some(note) = b.note {
                r = r.with("note", note);
            }
            r
        })
        .collect()
}

pub fn cmd_region(a: f64, source: &str) -> Result<Vec<OutputRecord>, UsageError> {
    let source: MuNuSource = source.parse()?;
    let p = mu_nu(source, alpha(a)?);
    let label = p.region();
    let tag = |r: OutputRecord| r.with("source", source.to_string()).with("regions", label.to_string());
    let mut out = vec![
        tag(OutputRecord::new(a, "mu", p.mu, Provenance::Theorem)),
        tag(OutputRecord::new(a, "nu", p.nu, Provenance::Theorem)),
    ];
    if let Some(bound) = label.bound {
        out.push(tag(OutputRecord::new(a, "lemma_bound", bound, Provenance::Theorem)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(records: &[OutputRecord], q: &str) -> f64 {
        records.iter().find(|r| r.quantity == q).unwrap().value
    }

    #[test]
    fn bounds_at_one_include_hankel() {
        let r = cmd_bounds(1.0).unwrap();
        assert_eq!(r.len(), 12);
        assert!((value(&r, "gamma2_bound") - 1.0 / 9.0).abs() < 1e-15);
        assert!((value(&r, "H_log_bound") - 1.0 / 81.0).abs() < 1e-15);
        assert_eq!(cmd_bounds(0.0).unwrap().len(), 10);
        assert!(cmd_bounds(-1.0).is_err());
    }

    #[test]
    fn sweep_inserts_breakpoints_and_checks_ranges() {
        let r = cmd_sweep(0.0, 5.0, 501, &["gamma_diff_lower".into()]).unwrap();
        let kink = r.iter().find(|r| r.extra.get("breakpoint").and_then(|v| v.as_str()) == Some("gamma_diff_switch"));
        assert!((kink.unwrap().alpha - 2.232).abs() < 5e-3);
        assert!(r.windows(2).all(|w| w[0].alpha < w[1].alpha));
        assert!(cmd_sweep(0.0, 1.0, 1, &[]).is_err());
        assert!(cmd_sweep(1.0, 1.0, 5, &[]).is_err());
        assert!(cmd_sweep(0.0, 1.0, 5, &["nope".into()]).is_err());
        assert!(cmd_sweep(0.0, 2.0, 5, &["H_log_bound".into()]).is_err());
    }

    #[test]
    fn region_examples() {
        let r = cmd_region(1.0, "GAMMA3").unwrap();
        assert!((value(&r, "mu") - 10.0 / 9.0).abs() < 1e-12 && (value(&r, "nu") - 4.0 / 9.0).abs() < 1e-12);
        assert_eq!(r[0].extra["regions"], "D2");
        assert_eq!(value(&r, "lemma_bound"), 1.0);
        assert_eq!(cmd_region(3.0, "GAMMA3_INVERSE").unwrap()[0].extra["regions"], "D1");
        let r = cmd_region(0.3, "gamma3_inverse").unwrap();
        assert_eq!(r[0].extra["regions"], "D6");
        assert_eq!(value(&r, "lemma_bound"), value(&r, "nu").abs());
        assert!(cmd_region(1.0, "GAMMA4").is_err());
    }

    #[test]
    fn breakpoint_table_warns_once() {
        let r = cmd_breakpoints();
        let warns: Vec<&str> =
            r.iter().filter(|r| r.extra["status"] == "WARN").map(|r| r.quantity.as_str()).collect();
        assert_eq!(warns, ["D5_D6_boundary"]);
        assert!(r.iter().all(OutputRecord::passed));
        let g2 = r.iter().find(|r| r.quantity == "Gamma2_case").unwrap();
        assert_eq!(g2.value, 0.5);
    }
}
