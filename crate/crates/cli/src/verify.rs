//! Verification suites over the standard `alpha` sample.

use coeffbounds::bounds::{mu_nu, psi_inputs_gamma_diff, psi_inputs_gamma_inv_diff, HankelKind, MuNuSource};
use coeffbounds::lemmas::{ps_bound, psi_minus_bound, psi_plus_bound, PsiInputs};
use coeffbounds::oracle::{
    certify_no_violation, maximize_f_xy, maximize_functional, ps_bruteforce, psi_bruteforce, sharpness_report,
    LemmaEstimate,
};
use coeffbounds::{Alpha, Functional, SearchConfig, STANDARD_ALPHAS};

use crate::output::{OutputRecord, Provenance};
use crate::UsageError;

pub const SHARPNESS_TOL: f64 = 1e-9;
pub const ORACLE_TOL: f64 = 1e-4;
pub const LEMMA_TOL: f64 = 1e-4;
pub const HANKEL_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
#[value(rename_all = "UPPER")]
pub enum Suite {
    Bounds,
    Sharpness,
    Lemmas,
    Hankel,
    All,
}

pub fn run_suite(suite: Suite, seed: u64) -> Result<Vec<OutputRecord>, UsageError> {
    let cfg = SearchConfig::default().with_seed(seed);
    Ok(match suite {
        Suite::Bounds => bounds(&cfg)?,
        Suite::Sharpness => sharpness(&cfg)?,
        Suite::Lemmas => lemmas(&cfg),
        Suite::Hankel => hankel(&cfg)?,
        Suite::All => {
            let mut out = bounds(&cfg)?;
            out.extend(sharpness(&cfg)?);
            out.extend(lemmas(&cfg));
            out.extend(hankel(&cfg)?);
            out
        }
    })
}

fn alpha(a: f64) -> Alpha {
    Alpha::new(a).expect("sample alphas are non-negative")
}

fn proved_pairs() -> impl Iterator<Item = (Functional, Alpha)> {
    Functional::ALL
        .into_iter()
        .flat_map(|f| STANDARD_ALPHAS.into_iter().map(move |a| (f, alpha(a))))
        .filter(|(f, a)| f.supports(*a))
}

fn bounds(cfg: &SearchConfig) -> Result<Vec<OutputRecord>, UsageError> {
    proved_pairs()
        .map(|(f, a)| {
            let r = certify_no_violation(f, a, cfg)?;
            Ok(OutputRecord::new(r.alpha, f.id(), r.best_value, Provenance::Oracle)
                .with("suite", "BOUNDS")
                .with("bound", r.bound)
                .with("gap", r.gap)
                .with("violations", r.violation_count)
                .with("pass", r.violation_count == 0))
        })
        .collect()
}

fn sharpness(cfg: &SearchConfig) -> Result<Vec<OutputRecord>, UsageError> {
    let mut out = Vec::new();
    for (f, a) in proved_pairs() {
        let s = sharpness_report(f, a)?;
        out.push(
            OutputRecord::new(s.alpha, f.id(), s.attained, Provenance::Extremal)
                .with("suite", "SHARPNESS")
                .with("extremal", format!("{:?}", s.extremal))
                .with("bound", s.bound)
                .with("gap", s.gap)
                .with("pass", s.gap.abs() <= SHARPNESS_TOL),
        );
        let r = maximize_functional(f, a, cfg)?;
        out.push(
            OutputRecord::new(r.alpha, f.id(), r.best_value, Provenance::Oracle)
                .with("suite", "SHARPNESS")
                .with("bound", r.bound)
                .with("gap", r.gap)
                .with("seed", r.seed)
                .with("pass", r.gap.abs() <= ORACLE_TOL),
        );
    }
    Ok(out)
}

fn lemma_record(a: f64, quantity: &str, bound: f64, e: LemmaEstimate) -> OutputRecord {
    let worst = if (e.measure - bound).abs() >= (e.schur - bound).abs() { e.measure } else { e.schur };
    let deviation = e.deviation(bound);
    OutputRecord::new(a, quantity, worst, Provenance::Oracle)
        .with("suite", "LEMMAS")
        .with("bound", bound)
        .with("measure", e.measure)
        .with("schur", e.schur)
        .with("deviation", deviation)
        .with("pass", deviation <= LEMMA_TOL)
}

fn psi_records(a: f64, prefix: &str, b: &PsiInputs, cfg: &SearchConfig, out: &mut Vec<OutputRecord>) {
    let e = psi_bruteforce(b, cfg);
    out.push(lemma_record(a, &format!("{prefix}_psi_plus"), psi_plus_bound(b), e.max));
    if let Ok(m) = psi_minus_bound(b) {
        out.push(lemma_record(a, &format!("{prefix}_psi_minus"), -m, e.min));
    }
}

/// The lemma inputs behind each bound at each sample `alpha`,
/// checked against both brute-force searches.
fn lemmas(cfg: &SearchConfig) -> Vec<OutputRecord> {
    let cfg = SearchConfig { starts: 24, ..*cfg };
    let mut out = Vec::new();
    for a in STANDARD_ALPHAS {
        psi_records(a, "gamma_diff", &psi_inputs_gamma_diff(a), &cfg, &mut out);
        psi_records(a, "Gamma_diff", &psi_inputs_gamma_inv_diff(a), &cfg, &mut out);
        for (source, name) in [(MuNuSource::Gamma3, "gamma3_ps"), (MuNuSource::Gamma3Inverse, "Gamma3_ps")] {
            let p = mu_nu(source, alpha(a));
            if let Some(bound) = ps_bound(p.mu, p.nu) {
                let rec = lemma_record(a, name, bound, ps_bruteforce(p.mu, p.nu, &cfg))
                    .with("mu", p.mu)
                    .with("nu", p.nu)
                    .with("regions", p.region().to_string());
                out.push(rec);
            }
        }
    }
    out
}

fn hankel(cfg: &SearchConfig) -> Result<Vec<OutputRecord>, UsageError> {
    let target = 1.0 / 81.0;
    let one = alpha(1.0);
    let mut out = Vec::new();
    for f in [Functional::AbsHLog, Functional::AbsHLogInv] {
        let r = maximize_functional(f, one, cfg)?;
        out.push(
            OutputRecord::new(1.0, f.id(), r.best_value, Provenance::Oracle)
                .with("suite", "HANKEL")
                .with("bound", r.bound)
                .with("seed", r.seed)
                .with("pass", (r.best_value - target).abs() <= HANKEL_TOL),
        );
        let s = sharpness_report(f, one)?;
        out.push(
            OutputRecord::new(1.0, f.id(), s.attained, Provenance::Extremal)
                .with("suite", "HANKEL")
                .with("extremal", format!("{:?}", s.extremal))
                .with("bound", s.bound)
                .with("pass", s.gap.abs() <= SHARPNESS_TOL),
        );
    }
    for (kind, name) in [(HankelKind::Log, "F_log_max"), (HankelKind::LogInverse, "F_log_inverse_max")] {
        let r = maximize_f_xy(kind);
        out.push(
            OutputRecord::new(1.0, name, r.max_value, Provenance::Oracle)
                .with("suite", "HANKEL")
                .with("x", r.argmax.0)
                .with("y", r.argmax.1)
                .with("boundary", format!("{:?}", r.endpoint_case))
                .with("y0_max", r.y0_max)
                .with("convexity_min", r.convexity_min)
                .with("pass", (r.max_value - target).abs() <= HANKEL_TOL && r.convexity_holds),
        );
    }
    Ok(out)
}
