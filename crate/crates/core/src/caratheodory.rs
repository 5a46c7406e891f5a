//! Coefficient bodies of the Carathéodory class `P` and the Schwarz class `B`.
//!
//! A member `p(z) = 1 + p1 z + p2 z^2 + ...` of `P` is represented through a
//! finite probability measure on the unit circle (Herglotz form), which yields
//! every attainable `(p1, p2, p3)`. Schwarz coefficients `(c1, c2, c3)` are
//! parameterized exactly by three Schur parameters in the closed unit disk.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute slack used by every feasibility test.
pub const FEASIBILITY_TOL: f64 = 1e-12;

/// Weight sums closer than this to one are renormalized; others are rejected.
const RENORMALIZE_TOL: f64 = 1e-9;

/// A finite positive probability measure on the unit circle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AtomicMeasure {
    atoms: Vec<(f64, f64)>,
}

impl AtomicMeasure {
    /// Builds a measure from `(weight, angle)` pairs.
    ///
    /// Angles are reduced to `[0, 2pi)`. Weights must be non-negative and sum
    /// to one within `1e-9`; small deviations are renormalized away.
    pub fn new(atoms: Vec<(f64, f64)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidInput("measure needs at least one atom".into()));
        }
        for &(w, theta) in &atoms {
            if !w.is_finite() || !theta.is_finite() {
                return Err(Error::InvalidInput("non-finite atom".into()));
            }
            if w < 0.0 {
                return Err(Error::InvalidInput(format!("negative weight {w}")));
            }
        }
        let total: f64 = atoms.iter().map(|a| a.0).sum();
        if (total - 1.0).abs() > RENORMALIZE_TOL {
            return Err(Error::InvalidInput(format!("weights sum to {total}, expected 1")));
        }
        let atoms = atoms
            .into_iter()
            .map(|(w, theta)| (w / total, theta.rem_euclid(TAU)))
            .collect();
        Ok(Self { atoms })
    }

    /// Point mass at `e^{i theta}`; the function `(1 + e^{-i theta} z) / (1 - e^{-i theta} z)`.
    pub fn point(theta: f64) -> Self {
        Self::new(vec![(1.0, theta)]).expect("point mass is a valid measure")
    }

    /// Two atoms at `0` and `pi` with weights `(1 + lambda)/2`, `(1 - lambda)/2`.
    ///
    /// Gives `p1 = 2 lambda`, `p2 = 2`, `p3 = 2 lambda`.
    pub fn bipolar(lambda: f64) -> Result<Self> {
        if !(-1.0..=1.0).contains(&lambda) {
            return Err(Error::InvalidInput(format!("bipolar weight {lambda} outside [-1, 1]")));
        }
        Self::new(vec![(0.5 + lambda / 2.0, 0.0), (0.5 - lambda / 2.0, std::f64::consts::PI)])
    }

    /// Two atoms at `±arccos(zeta)`, each of weight one half.
    ///
    /// Represents `(1 - z^2) / (1 - 2 zeta z + z^2)`, whose coefficients are
    /// `2 T_n(zeta)`.
    pub fn chebyshev_kernel(zeta: f64) -> Result<Self> {
        if !(-1.0..=1.0).contains(&zeta) {
            return Err(Error::InvalidInput(format!("kernel parameter {zeta} outside [-1, 1]")));
        }
        let theta = zeta.acos();
        Self::new(vec![(0.5, theta), (0.5, -theta)])
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }
}

/// First three coefficients of a Carathéodory function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CarCoeffs {
    pub p1: Complex64,
    pub p2: Complex64,
    pub p3: Complex64,
}

impl CarCoeffs {
    pub fn new(p1: Complex64, p2: Complex64, p3: Complex64) -> Self {
        Self { p1, p2, p3 }
    }

    pub fn real(p1: f64, p2: f64, p3: f64) -> Self {
        Self::new(p1.into(), p2.into(), p3.into())
    }

    /// `|p_n| <= 2` for n = 1, 2, 3 (necessary, not sufficient).
    pub fn within_caratheodory_bound(&self) -> bool {
        [self.p1, self.p2, self.p3].iter().all(|p| p.norm() <= 2.0 + FEASIBILITY_TOL)
    }
}

/// First three coefficients of a Schwarz function `phi(z) = c1 z + c2 z^2 + c3 z^3 + ...`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SchwarzCoeffs {
    pub c1: Complex64,
    pub c2: Complex64,
    pub c3: Complex64,
}

impl SchwarzCoeffs {
    pub fn new(c1: Complex64, c2: Complex64, c3: Complex64) -> Self {
        Self { c1, c2, c3 }
    }

    pub fn real(c1: f64, c2: f64, c3: f64) -> Self {
        Self::new(c1.into(), c2.into(), c3.into())
    }
}

/// Schur parameters `(t1, t2, t3)` of a Schwarz function, each in the closed unit disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SchurParams {
    pub t1: Complex64,
    pub t2: Complex64,
    pub t3: Complex64,
}

impl SchurParams {
    pub fn new(t1: Complex64, t2: Complex64, t3: Complex64) -> Result<Self> {
        for (i, t) in [t1, t2, t3].iter().enumerate() {
            if !t.re.is_finite() || !t.im.is_finite() || t.norm() > 1.0 + FEASIBILITY_TOL {
                return Err(Error::InvalidInput(format!("Schur parameter t{} = {t} outside the closed disk", i + 1)));
            }
        }
        Ok(Self { t1, t2, t3 })
    }

    pub fn real(t1: f64, t2: f64, t3: f64) -> Result<Self> {
        Self::new(t1.into(), t2.into(), t3.into())
    }
}

/// Herglotz coefficients `p_n = 2 sum_k w_k exp(-i n theta_k)` for n = 1, 2, 3.
pub fn coeffs_from_measure(m: &AtomicMeasure) -> CarCoeffs {
    let mut p = [Complex64::new(0.0, 0.0); 3];
    for &(w, theta) in m.atoms() {
        for (n, pn) in p.iter_mut().enumerate() {
            *pn += Complex64::from_polar(2.0 * w, -((n + 1) as f64) * theta);
        }
    }
    CarCoeffs::new(p[0], p[1], p[2])
}

/// Coefficients of `p = (1 + phi) / (1 - phi)`.
pub fn schwarz_to_caratheodory(c: &SchwarzCoeffs) -> CarCoeffs {
    let SchwarzCoeffs { c1, c2, c3 } = *c;
    CarCoeffs::new(
        2.0 * c1,
        2.0 * (c2 + c1 * c1),
        2.0 * (c3 + 2.0 * c1 * c2 + c1 * c1 * c1),
    )
}

/// Inverse of [`schwarz_to_caratheodory`]: `phi = (p - 1) / (p + 1)`.
pub fn caratheodory_to_schwarz(p: &CarCoeffs) -> SchwarzCoeffs {
    let c1 = p.p1 / 2.0;
    let c2 = p.p2 / 2.0 - c1 * c1;
    let c3 = p.p3 / 2.0 - 2.0 * c1 * c2 - c1 * c1 * c1;
    SchwarzCoeffs::new(c1, c2, c3)
}

/// Schwarz coefficients generated by the Schur algorithm.
///
/// Sweeping the closed polydisk yields exactly the attainable `(c1, c2, c3)`.
pub fn schur_to_schwarz(s: &SchurParams) -> SchwarzCoeffs {
    schur_to_schwarz_unchecked(s.t1, s.t2, s.t3)
}

/// Same map as [`schur_to_schwarz`] for callers that already guarantee `|t_i| <= 1`.
#[inline]
pub fn schur_to_schwarz_unchecked(t1: Complex64, t2: Complex64, t3: Complex64) -> SchwarzCoeffs {
    let d1 = 1.0 - t1.norm_sqr();
    let d2 = 1.0 - t2.norm_sqr();
    let c2 = d1 * t2;
    let c3 = d1 * (d2 * t3 - t1.conj() * t2 * t2);
    SchwarzCoeffs::new(t1, c2, c3)
}

/// Carlson's necessary conditions on the first three Schwarz coefficients.
pub fn carlson_feasible(c: &SchwarzCoeffs) -> bool {
    let x = c.c1.norm();
    let y = c.c2.norm();
    let z = c.c3.norm();
    x <= 1.0 + FEASIBILITY_TOL
        && y <= 1.0 - x * x + FEASIBILITY_TOL
        && z <= 1.0 - x * x - y * y / (1.0 + x) + FEASIBILITY_TOL
}
