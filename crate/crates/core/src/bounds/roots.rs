//! Sign-scan bracketing and bisection.

use crate::error::{Error, Result};

/// Step of the initial sign scan.
pub const SCAN_STEP: f64 = 0.01;

/// Width at which bisection stops.
pub const ROOT_TOL: f64 = 1e-10;

/// Brackets `[a, b]` with a sign change of `f` (or `a == b` on an exact zero)
/// found by sampling `[lo, hi]` at `step`.
pub fn scan_brackets<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, step: f64) -> Vec<(f64, f64)> {
    let n = ((hi - lo) / step).ceil() as usize;
    let xs: Vec<f64> = (0..=n).map(|i| (lo + i as f64 * step).min(hi)).collect();
    let fs: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let mut out = Vec::new();
    for i in 0..xs.len() {
        if fs[i] == 0.0 {
            out.push((xs[i], xs[i]));
        } else if i + 1 < xs.len() && fs[i + 1] != 0.0 && fs[i].signum() != fs[i + 1].signum() {
            out.push((xs[i], xs[i + 1]));
        }
    }
    out
}

/// Bisection on a sign-changing bracket until its width drops below `tol`.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> Result<f64> {
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() || !fa.is_finite() || !fb.is_finite() {
        return Err(Error::Bracket(format!("no sign change on [{a}, {b}]")));
    }
    for _ in 0..200 {
        if b - a < tol {
            break;
        }
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

/// The unique root of `f` in `[lo, hi]`; errors when the scan finds none or several.
pub fn unique_root<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> Result<f64> {
    let brackets = scan_brackets(&f, lo, hi, SCAN_STEP);
    match brackets.as_slice() {
        [(a, b)] => bisect(&f, *a, *b, ROOT_TOL),
        [] => Err(Error::Bracket(format!("no root in [{lo}, {hi}]"))),
        many => Err(Error::Bracket(format!("{} roots in [{lo}, {hi}]", many.len()))),
    }
}
