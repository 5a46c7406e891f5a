//! Shared fixtures for the benchmarks.

use coeffbounds::oracle::prefix_from_schur;
use coeffbounds::{Alpha, Complex64, TaylorPrefix};

/// `n` class members at `alpha` with Schur parameters spread over the disk
/// by a golden-angle spiral, so every run sees the same inputs.
pub fn members(alpha: f64, n: usize) -> Vec<TaylorPrefix> {
    let alpha = Alpha::new(alpha).expect("non-negative alpha");
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|k| {
            let t = |j: usize| {
                let i = (3 * k + j) as f64;
                Complex64::from_polar(((i + 0.5) / (3 * n) as f64).sqrt(), i * golden)
            };
            prefix_from_schur(alpha, &[t(0), t(1), t(2)])
        })
        .collect()
}
