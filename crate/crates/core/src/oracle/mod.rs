//! Independent numerical checks of the bounds.
//!
//! Class members are generated from Schur parameters `(t1, t2, t3)` in the
//! closed polydisk, pushed through Schwarz, Carathéodory and `W(alpha)`
//! coefficients, and fed to a functional. Searches are seeded and
//! deterministic: start `i` draws from its own ChaCha stream.

mod fxy;
mod lemma_check;
pub mod simplex;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use fxy::{convexity_coefficient, f_xy, maximize_f_xy, EndpointCase, FxyReport, CONVEXITY_FLOOR};
pub use lemma_check::{
    fekete_szego_bruteforce, lemma_suite, ps_bruteforce, psi_bruteforce, psi_test_points, LemmaCheck, LemmaEstimate,
    PsiExtrema,
};

use crate::bounds::{self, HankelKind};
use crate::caratheodory::{schur_to_schwarz_unchecked, schwarz_to_caratheodory};
use crate::error::{Error, Result};
use crate::functionals;
use crate::walpha::{extremal_taylor, taylor_from_caratheodory, Alpha, ExtremalFamily, TaylorPrefix};
use simplex::{minimize, SimplexOptions};

/// The `alpha` sample used for attainment and certification runs.
pub const STANDARD_ALPHAS: [f64; 13] = [0.0, 0.25, 0.5, 0.809, 1.0, 1.5, 2.0, 2.232, 2.927, 3.21836, 5.0, 5.842, 8.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Functional {
    AbsG1,
    AbsG2,
    AbsG3,
    #[serde(rename = "ABS_GG1")]
    AbsGg1,
    #[serde(rename = "ABS_GG2")]
    AbsGg2,
    #[serde(rename = "ABS_GG3")]
    AbsGg3,
    GammaDiffMax,
    GammaDiffMin,
    GgDiffMax,
    GgDiffMin,
    AbsHLog,
    AbsHLogInv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Sense {
    Max,
    Min,
}

impl Sense {
    fn sign(self) -> f64 {
        match self {
            Sense::Max => 1.0,
            Sense::Min => -1.0,
        }
    }
}

impl Functional {
    pub const ALL: [Functional; 12] = [
        Functional::AbsG1,
        Functional::AbsG2,
        Functional::AbsG3,
        Functional::AbsGg1,
        Functional::AbsGg2,
        Functional::AbsGg3,
        Functional::GammaDiffMax,
        Functional::GammaDiffMin,
        Functional::GgDiffMax,
        Functional::GgDiffMin,
        Functional::AbsHLog,
        Functional::AbsHLogInv,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Functional::AbsG1 => "ABS_G1",
            Functional::AbsG2 => "ABS_G2",
            Functional::AbsG3 => "ABS_G3",
            Functional::AbsGg1 => "ABS_GG1",
            Functional::AbsGg2 => "ABS_GG2",
            Functional::AbsGg3 => "ABS_GG3",
            Functional::GammaDiffMax => "GAMMA_DIFF_MAX",
            Functional::GammaDiffMin => "GAMMA_DIFF_MIN",
            Functional::GgDiffMax => "GG_DIFF_MAX",
            Functional::GgDiffMin => "GG_DIFF_MIN",
            Functional::AbsHLog => "ABS_H_LOG",
            Functional::AbsHLogInv => "ABS_H_LOG_INV",
        }
    }

    pub fn sense(self) -> Sense {
        match self {
            Functional::GammaDiffMin | Functional::GgDiffMin => Sense::Min,
            _ => Sense::Max,
        }
    }

    pub fn is_hankel(self) -> bool {
        matches!(self, Functional::AbsHLog | Functional::AbsHLogInv)
    }

    /// Whether a bound is proved at `alpha`.
    pub fn supports(self, alpha: Alpha) -> bool {
        !self.is_hankel() || alpha.get() == 1.0
    }

    pub fn evaluate(self, a: &TaylorPrefix) -> f64 {
        match self {
            Functional::AbsG1 => functionals::log_coeffs(a).g1.norm(),
            Functional::AbsG2 => functionals::log_coeffs(a).g2.norm(),
            Functional::AbsG3 => functionals::log_coeffs(a).g3.norm(),
            Functional::AbsGg1 => functionals::log_inverse_coeffs(a).g1.norm(),
            Functional::AbsGg2 => functionals::log_inverse_coeffs(a).g2.norm(),
            Functional::AbsGg3 => functionals::log_inverse_coeffs(a).g3.norm(),
            Functional::GammaDiffMax | Functional::GammaDiffMin => functionals::gamma_diff(a),
            Functional::GgDiffMax | Functional::GgDiffMin => functionals::gamma_inv_diff(a),
            Functional::AbsHLog => functionals::hankel_log(a).norm(),
            Functional::AbsHLogInv => functionals::hankel_log_inverse(a).norm(),
        }
    }

    /// The proved bound: an upper bound for `Max` functionals, a lower
    /// bound for `Min` ones.
    pub fn bound(self, alpha: Alpha) -> Result<f64> {
        match self {
            Functional::AbsG1 => bounds::bound_gamma(1, alpha),
            Functional::AbsG2 => bounds::bound_gamma(2, alpha),
            Functional::AbsG3 => bounds::bound_gamma(3, alpha),
            Functional::AbsGg1 => bounds::bound_gamma_inv(1, alpha),
            Functional::AbsGg2 => bounds::bound_gamma_inv(2, alpha),
            Functional::AbsGg3 => bounds::bound_gamma_inv(3, alpha),
            Functional::GammaDiffMax => Ok(bounds::bound_gamma_diff(alpha).0),
            Functional::GammaDiffMin => Ok(bounds::bound_gamma_diff(alpha).1),
            Functional::GgDiffMax => Ok(bounds::bound_gamma_inv_diff(alpha).0),
            Functional::GgDiffMin => Ok(bounds::bound_gamma_inv_diff(alpha).1),
            Functional::AbsHLog => bounds::bound_hankel(HankelKind::Log, alpha),
            Functional::AbsHLogInv => bounds::bound_hankel(HankelKind::LogInverse, alpha),
        }
    }

    /// The extremal function that attains the bound.
    pub fn extremal(self, alpha: Alpha) -> Result<ExtremalFamily> {
        let a = alpha.get();
        Ok(match self {
            Functional::AbsG1 | Functional::AbsGg1 => ExtremalFamily::F1,
            Functional::AbsG2 | Functional::GammaDiffMax | Functional::GgDiffMax => ExtremalFamily::F2,
            Functional::AbsG3 => ExtremalFamily::F3,
            Functional::AbsGg2 => {
                if a < bounds::breakpoint(bounds::BreakpointId::GammaInv2Case) {
                    ExtremalFamily::F1
                } else {
                    ExtremalFamily::F2
                }
            }
            Functional::AbsGg3 => {
                if a <= bounds::breakpoint(bounds::BreakpointId::GammaInv3Case) {
                    ExtremalFamily::F1
                } else {
                    ExtremalFamily::F3
                }
            }
            Functional::GammaDiffMin => ExtremalFamily::gamma_diff_lower(alpha)?,
            Functional::GgDiffMin => ExtremalFamily::gamma_inv_diff_lower(alpha)?,
            Functional::AbsHLog | Functional::AbsHLogInv => {
                self.bound(alpha)?;
                ExtremalFamily::F6
            }
        })
    }

    fn check_alpha(self, alpha: Alpha) -> Result<()> {
        self.bound(alpha).map(|_| ())
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Functional {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        Functional::ALL
            .into_iter()
            .find(|f| f.id() == key)
            .ok_or_else(|| Error::InvalidInput(format!("unknown functional {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub starts: usize,
    /// Points per axis of the real Schur grid used by certification.
    pub grid_resolution: usize,
    pub max_iterations: usize,
    pub tolerance: f64,
    /// Random complex probes used by certification.
    pub probes: usize,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self { starts: 64, grid_resolution: 51, max_iterations: 200, tolerance: 1e-9, probes: 100_000, seed: 42 }
    }
}

impl SearchConfig {
    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    fn validate(&self) -> Result<()> {
        if self.starts == 0 {
            return Err(Error::InvalidInput("starts must be >= 1".into()));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::InvalidInput("tolerance must be > 0".into()));
        }
        Ok(())
    }

    fn stream(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }
}

/// A class member that beats a proved bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub schur: [Complex64; 3],
    pub value: f64,
    pub excess: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub functional: Functional,
    pub alpha: f64,
    pub sense: Sense,
    /// Best value of the functional found (largest for `Max`, smallest for `Min`).
    pub best_value: f64,
    /// Schur parameters `(t1, t2, t3)` of the best point.
    pub best_params: [Complex64; 3],
    pub bound: f64,
    /// Slack `bound - best` for `Max`, `best - bound` for `Min`; negative
    /// only when the bound is beaten.
    pub gap: f64,
    /// Probes that beat the bound by more than the tolerance (at most 100 kept).
    pub violations: Vec<Violation>,
    pub violation_count: usize,
    /// Best value after each start, in start order.
    pub history: Vec<f64>,
    pub evaluations: usize,
    pub seed: u64,
}

/// Functional value of the member with Schur parameters `t`.
pub fn evaluate_schur(functional: Functional, alpha: Alpha, t: &[Complex64; 3]) -> f64 {
    functional.evaluate(&prefix_from_schur(alpha, t))
}

pub fn prefix_from_schur(alpha: Alpha, t: &[Complex64; 3]) -> TaylorPrefix {
    let c = schur_to_schwarz_unchecked(t[0], t[1], t[2]);
    taylor_from_caratheodory(alpha, &schwarz_to_caratheodory(&c))
}

/// `sin(u) e^{i phi}`: covers the closed disk and reaches the circle smoothly,
/// so the simplex never stalls on a projection plateau.
fn polar(u: f64, phi: f64) -> Complex64 {
    Complex64::from_polar(u.sin(), phi)
}

/// Search coordinates `(u_k, phi_k)` to Schur parameters. The rotation-reduced
/// search drops `phi_1` and keeps `t1 = |sin u_1|` real.
fn decode(x: &[f64]) -> [Complex64; 3] {
    if x.len() == 6 {
        [polar(x[0], x[1]), polar(x[2], x[3]), polar(x[4], x[5])]
    } else {
        [Complex64::new(x[0].sin().abs(), 0.0), polar(x[1], x[2]), polar(x[3], x[4])]
    }
}

fn random_disk<R: Rng>(rng: &mut R) -> Complex64 {
    let r: f64 = rng.gen::<f64>().sqrt();
    Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
}

fn random_polar<R: Rng>(rng: &mut R) -> (f64, f64) {
    (rng.gen_range(0.0..std::f64::consts::FRAC_PI_2), rng.gen_range(0.0..std::f64::consts::TAU))
}

fn random_start<R: Rng>(rng: &mut R, reduced: bool) -> Vec<f64> {
    let mut x = Vec::with_capacity(6);
    for k in 0..3 {
        let (u, phi) = random_polar(rng);
        x.push(u);
        if !(reduced && k == 0) {
            x.push(phi);
        }
    }
    x
}

/// Multi-start simplex search over the full complex Schur polydisk.
pub fn maximize_functional(functional: Functional, alpha: Alpha, cfg: &SearchConfig) -> Result<SearchReport> {
    search(functional, alpha, cfg, false)
}

/// The same search with `t1` restricted to `[0, 1]`; every functional here is
/// invariant under rotations, so nothing is lost.
pub fn maximize_functional_reduced(functional: Functional, alpha: Alpha, cfg: &SearchConfig) -> Result<SearchReport> {
    search(functional, alpha, cfg, true)
}

fn search(functional: Functional, alpha: Alpha, cfg: &SearchConfig, reduced: bool) -> Result<SearchReport> {
    cfg.validate()?;
    functional.check_alpha(alpha)?;
    let bound = functional.bound(alpha)?;
    let sign = functional.sense().sign();
    let objective = |x: &[f64]| -sign * evaluate_schur(functional, alpha, &decode(x));
    let opts = SimplexOptions { max_iterations: cfg.max_iterations, tolerance: cfg.tolerance, ..Default::default() };

    let runs: Vec<(f64, [Complex64; 3], usize)> = (0..cfg.starts)
        .into_par_iter()
        .map(|i| {
            let mut rng = cfg.stream(i as u64);
            let x0 = random_start(&mut rng, reduced);
            let m = minimize(objective, &x0, opts);
            let t = decode(&m.x);
            (evaluate_schur(functional, alpha, &t), t, m.evaluations)
        })
        .collect();

    // Sequential best-of keeps the earliest start on ties.
    let mut best = runs[0];
    let mut history = Vec::with_capacity(runs.len());
    let mut evaluations = 0;
    for run in &runs {
        if sign * run.0 > sign * best.0 {
            best = *run;
        }
        history.push(best.0);
        evaluations += run.2;
    }
    Ok(finish(functional, alpha, cfg, bound, best.0, best.1, Vec::new(), 0, history, evaluations))
}

#[allow(clippy::too_many_arguments)]
fn finish(
    functional: Functional,
    alpha: Alpha,
    cfg: &SearchConfig,
    bound: f64,
    best_value: f64,
    best_params: [Complex64; 3],
    violations: Vec<Violation>,
    violation_count: usize,
    history: Vec<f64>,
    evaluations: usize,
) -> SearchReport {
    let sense = functional.sense();
    SearchReport {
        functional,
        alpha: alpha.get(),
        sense,
        best_value,
        best_params,
        bound,
        gap: sense.sign() * (bound - best_value),
        violations,
        violation_count,
        history,
        evaluations,
        seed: cfg.seed,
    }
}

const KEPT_VIOLATIONS: usize = 100;

/// Checks the bound on the real grid `[-1, 1]^3` and on `cfg.probes` random
/// complex parameter triples (a quarter of them with one parameter on the
/// unit circle, where extremals live).
pub fn certify_no_violation(functional: Functional, alpha: Alpha, cfg: &SearchConfig) -> Result<SearchReport> {
    cfg.validate()?;
    functional.check_alpha(alpha)?;
    let bound = functional.bound(alpha)?;
    let sign = functional.sense().sign();
    let tol = cfg.tolerance;

    let res = cfg.grid_resolution.max(2);
    let axis: Vec<f64> = (0..res).map(|i| -1.0 + 2.0 * i as f64 / (res - 1) as f64).collect();
    let real = |v: f64| Complex64::new(v, 0.0);

    let grid_chunks: Vec<Chunk> = (0..res)
        .into_par_iter()
        .map(|i| {
            let mut chunk = Chunk::new(sign);
            for &y in &axis {
                for &z in &axis {
                    let t = [real(axis[i]), real(y), real(z)];
                    chunk.push(t, evaluate_schur(functional, alpha, &t), bound, tol);
                }
            }
            chunk
        })
        .collect();

    const BLOCK: usize = 4096;
    let blocks = cfg.probes.div_ceil(BLOCK);
    let probe_chunks: Vec<Chunk> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut rng = cfg.stream(1 << 32 | b as u64);
            let mut chunk = Chunk::new(sign);
            let count = BLOCK.min(cfg.probes - b * BLOCK);
            for k in 0..count {
                let mut t = [random_disk(&mut rng), random_disk(&mut rng), random_disk(&mut rng)];
                let on_circle = (b * BLOCK + k) % 4;
                if on_circle < 3 {
                    t[on_circle] = to_unit(t[on_circle]);
                }
                chunk.push(t, evaluate_schur(functional, alpha, &t), bound, tol);
            }
            chunk
        })
        .collect();

    let mut total = Chunk::new(sign);
    for c in grid_chunks.into_iter().chain(probe_chunks) {
        total.merge(c);
    }
    let evaluations = res * res * res + cfg.probes;
    Ok(finish(
        functional,
        alpha,
        cfg,
        bound,
        total.best.0,
        total.best.1,
        total.violations,
        total.violation_count,
        Vec::new(),
        evaluations,
    ))
}

fn to_unit(z: Complex64) -> Complex64 {
    if z.norm() == 0.0 {
        Complex64::new(1.0, 0.0)
    } else {
        z / z.norm()
    }
}

struct Chunk {
    sign: f64,
    best: (f64, [Complex64; 3]),
    violations: Vec<Violation>,
    violation_count: usize,
}

impl Chunk {
    fn new(sign: f64) -> Self {
        Self {
            sign,
            best: (-sign * f64::INFINITY, [Complex64::new(0.0, 0.0); 3]),
            violations: Vec::new(),
            violation_count: 0,
        }
    }

    fn push(&mut self, t: [Complex64; 3], value: f64, bound: f64, tol: f64) {
        if self.sign * value > self.sign * self.best.0 {
            self.best = (value, t);
        }
        let excess = self.sign * (value - bound);
        if excess > tol || !value.is_finite() {
            self.violation_count += 1;
            if self.violations.len() < KEPT_VIOLATIONS {
                self.violations.push(Violation { schur: t, value, excess });
            }
        }
    }

    fn merge(&mut self, other: Chunk) {
        if self.sign * other.best.0 > self.sign * self.best.0 {
            self.best = other.best;
        }
        self.violation_count += other.violation_count;
        let room = KEPT_VIOLATIONS.saturating_sub(self.violations.len());
        self.violations.extend(other.violations.into_iter().take(room));
    }
}

/// Bound versus the value of the named extremal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SharpnessReport {
    pub functional: Functional,
    pub alpha: f64,
    pub extremal: ExtremalFamily,
    pub bound: f64,
    pub attained: f64,
    /// `bound - attained` for `Max`, `attained - bound` for `Min`.
    pub gap: f64,
}

pub fn sharpness_report(functional: Functional, alpha: Alpha) -> Result<SharpnessReport> {
    let bound = functional.bound(alpha)?;
    let extremal = functional.extremal(alpha)?;
    let attained = functional.evaluate(&extremal_taylor(&extremal, alpha)?);
    Ok(SharpnessReport {
        functional,
        alpha: alpha.get(),
        extremal,
        bound,
        attained,
        gap: functional.sense().sign() * (bound - attained),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn al(a: f64) -> Alpha {
        Alpha::new(a).unwrap()
    }

    #[test]
    fn ids_round_trip() {
        for f in Functional::ALL {
            assert_eq!(f.id().parse::<Functional>().unwrap(), f);
        }
        assert_eq!("gg-diff-min".parse::<Functional>().unwrap(), Functional::GgDiffMin);
        assert!("ABS_G4".parse::<Functional>().is_err());
    }

    #[test]
    fn hankel_needs_alpha_one() {
        let cfg = SearchConfig { starts: 2, ..Default::default() };
        assert!(maximize_functional(Functional::AbsHLog, al(0.5), &cfg).is_err());
        assert!(sharpness_report(Functional::AbsHLogInv, al(2.0)).is_err());
    }

    #[test]
    fn search_examples() {
        let cfg = SearchConfig::default();
        let r = maximize_functional(Functional::AbsG2, al(1.0), &cfg).unwrap();
        assert!((r.best_value - 1.0 / 9.0).abs() < 1e-6, "{r:?}");
        let p = schwarz_to_caratheodory(&schur_to_schwarz_unchecked(r.best_params[0], r.best_params[1], r.best_params[2]));
        assert!(p.p1.norm() < 1e-3 && (p.p2.norm() - 2.0).abs() < 1e-3);

        let r = maximize_functional(Functional::GammaDiffMin, al(0.0), &cfg).unwrap();
        assert!((r.best_value + 1.0 / 5f64.sqrt()).abs() < 1e-5, "{r:?}");

        let r = maximize_functional(Functional::AbsHLog, al(1.0), &cfg).unwrap();
        assert!((r.best_value - 1.0 / 81.0).abs() < 1e-6, "{r:?}");
    }

    #[test]
    fn search_is_deterministic_and_monotone() {
        let cfg = SearchConfig { starts: 16, ..Default::default() };
        let a = maximize_functional(Functional::AbsGg3, al(0.3), &cfg).unwrap();
        let b = maximize_functional(Functional::AbsGg3, al(0.3), &cfg).unwrap();
        assert_eq!(a, b);
        assert!(a.history.windows(2).all(|w| w[1] >= w[0]));
        let c = maximize_functional(Functional::GgDiffMin, al(0.3), &cfg).unwrap();
        assert!(c.history.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn certification_examples() {
        let cfg = SearchConfig { grid_resolution: 101, probes: 20_000, ..Default::default() };
        let r = certify_no_violation(Functional::AbsG1, al(0.0), &cfg).unwrap();
        assert_eq!(r.violation_count, 0);
        assert!((r.bound - 0.5).abs() < 1e-15);

        let cfg = SearchConfig { grid_resolution: 51, probes: 20_000, ..Default::default() };
        let r = certify_no_violation(Functional::GgDiffMax, al(2.0), &cfg).unwrap();
        assert_eq!(r.violation_count, 0);
        assert!((r.bound - 1.0 / 15.0).abs() < 1e-15);

        let r = certify_no_violation(Functional::AbsGg3, al(0.0), &cfg).unwrap();
        assert_eq!(r.violation_count, 0);
        assert!((r.bound - 7.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn certification_reports_the_extreme_point() {
        // the real grid contains t1 = 1, where |gamma1| = 1/2 is attained
        let cfg = SearchConfig { grid_resolution: 11, probes: 0, ..Default::default() };
        let r = certify_no_violation(Functional::AbsG1, al(0.0), &cfg).unwrap();
        assert!((r.best_value - 0.5).abs() < 1e-15 && r.gap.abs() < 1e-15);
    }

    #[test]
    fn sharpness_examples() {
        let r = sharpness_report(Functional::AbsG2, al(1.0)).unwrap();
        assert_eq!(r.extremal, ExtremalFamily::F2);
        assert!(r.gap.abs() < 1e-15);
        let r = sharpness_report(Functional::AbsHLog, al(1.0)).unwrap();
        assert!((r.attained - 1.0 / 81.0).abs() < 1e-15);
        let r = sharpness_report(Functional::GammaDiffMin, al(0.0)).unwrap();
        assert_eq!(r.extremal, ExtremalFamily::Kernel { zeta: 2.0 / 5f64.sqrt() });
        assert!(r.gap.abs() <= 1e-9);
    }
}
