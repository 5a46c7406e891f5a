//! The two-variable majorant of the Hankel determinants at `alpha = 1`.
//!
//! With `x = |c1|`, `y = |c2|` the triangle inequality gives
//! `|H| <= F(x, y) = A(x) + B(x) y + C(x) y^2` on
//! `Omega = {0 <= x <= 1, 0 <= y <= 1 - x^2}`.

use serde::{Deserialize, Serialize};

use super::simplex::{minimize, SimplexOptions};
use crate::bounds::HankelKind;

/// Lower bound `1/81 - 1/128` of `C` on `[0, 1]`.
pub const CONVEXITY_FLOOR: f64 = 47.0 / 10368.0;

fn quartic_and_cross(kind: HankelKind) -> (f64, f64) {
    match kind {
        HankelKind::Log => (95.0 / 20736.0, 17.0 / 2592.0),
        HankelKind::LogInverse => (131.0 / 20736.0, 19.0 / 2592.0),
    }
}

pub fn f_xy(kind: HankelKind, x: f64, y: f64) -> f64 {
    let (q, b) = quartic_and_cross(kind);
    q * x.powi(4) + b * x * x * y + x / 64.0 * (1.0 - x * x - y * y / (1.0 + x)) + y * y / 81.0
}

/// `C(x) = 1/81 - x/(64(1+x))`, the coefficient of `y^2`.
pub fn convexity_coefficient(x: f64) -> f64 {
    1.0 / 81.0 - x / (64.0 * (1.0 + x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EndpointCase {
    Y0,
    Y1MinusX2,
    Interior,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FxyReport {
    pub kind: HankelKind,
    pub max_value: f64,
    pub argmax: (f64, f64),
    pub endpoint_case: EndpointCase,
    /// Maximum over the segment `y = 0`.
    pub y0_max: f64,
    pub y0_argmax: f64,
    /// Maximum over the arc `y = 1 - x^2`.
    pub upper_max: f64,
    pub upper_argmax: f64,
    /// `min C(x)` over `[0, 1]`.
    pub convexity_min: f64,
    pub convexity_holds: bool,
}

const GRID: usize = 2000;

/// Dense grid over `Omega` followed by simplex refinement in the coordinates
/// `(x, s)` with `y = s (1 - x^2)`.
pub fn maximize_f_xy(kind: HankelKind) -> FxyReport {
    let f = |x: f64, s: f64| f_xy(kind, x, s * (1.0 - x * x));
    let mut best = (f64::NEG_INFINITY, 0.0, 0.0);
    for i in 0..=GRID {
        let x = i as f64 / GRID as f64;
        for j in 0..=GRID {
            let s = j as f64 / GRID as f64;
            let v = f(x, s);
            if v > best.0 {
                best = (v, x, s);
            }
        }
    }
    let clamp = |v: f64| v.clamp(0.0, 1.0);
    let opts = SimplexOptions { initial_step: 1.0 / GRID as f64, max_iterations: 500, tolerance: 1e-14, restarts: 4 };
    let m = minimize(|p| -f(clamp(p[0]), clamp(p[1])), &[best.1, best.2], opts);
    let (x, s) = (clamp(m.x[0]), clamp(m.x[1]));
    let (x, s) = if f(x, s) > best.0 { (x, s) } else { (best.1, best.2) };
    let y = s * (1.0 - x * x);

    let (y0_argmax, y0_max) = max_on_unit_interval(|x| f_xy(kind, x, 0.0));
    let (upper_argmax, upper_max) = max_on_unit_interval(|x| f_xy(kind, x, 1.0 - x * x));
    let (_, neg_c) = max_on_unit_interval(|x| -convexity_coefficient(x));
    let convexity_min = -neg_c;

    let endpoint_case = if s >= 1.0 - 1e-9 {
        EndpointCase::Y1MinusX2
    } else if s <= 1e-9 {
        EndpointCase::Y0
    } else {
        EndpointCase::Interior
    };

    FxyReport {
        kind,
        max_value: f(x, s),
        argmax: (x, y),
        endpoint_case,
        y0_max,
        y0_argmax,
        upper_max,
        upper_argmax,
        convexity_min,
        convexity_holds: convexity_min >= CONVEXITY_FLOOR - 1e-15,
    }
}

/// Grid scan then golden-section refinement around the best grid cell.
fn max_on_unit_interval<F: Fn(f64) -> f64>(f: F) -> (f64, f64) {
    const N: usize = 10_000;
    let h = 1.0 / N as f64;
    let i = (0..=N).max_by(|&a, &b| f(a as f64 * h).total_cmp(&f(b as f64 * h))).unwrap_or(0);
    let (mut a, mut b) = (((i as f64) - 1.0).max(0.0) * h, ((i as f64) + 1.0).min(N as f64) * h);
    let g = (5f64.sqrt() - 1.0) / 2.0;
    while b - a > 1e-13 {
        let c = b - g * (b - a);
        let d = a + g * (b - a);
        if f(c) >= f(d) {
            b = d;
        } else {
            a = c;
        }
    }
    let mid = 0.5 * (a + b);
    let x = [0.0, 1.0, mid].into_iter().max_by(|&p, &q| f(p).total_cmp(&f(q))).unwrap_or(mid);
    (x, f(x))
}
