//! Coefficient functionals of a normalized Taylor prefix.
//!
//! All functionals take a raw [`TaylorPrefix`]; membership in `W(alpha)` is
//! the caller's business.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::walpha::TaylorPrefix;

/// Logarithmic coefficients: `log(f(z)/z) = 2 sum gamma_n z^n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogCoeffs {
    pub g1: Complex64,
    pub g2: Complex64,
    pub g3: Complex64,
}

/// Coefficients of the inverse map `F(w) = w + A2 w^2 + A3 w^3 + A4 w^4 + ...`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InvCoeffs {
    pub a2: Complex64,
    pub a3: Complex64,
    pub a4: Complex64,
}

impl InvCoeffs {
    /// The inverse prefix viewed as the Taylor prefix of `F`.
    pub fn as_prefix(&self) -> TaylorPrefix {
        TaylorPrefix::new(self.a2, self.a3, self.a4)
    }
}

/// Logarithmic inverse coefficients: `log(F(w)/w) = 2 sum Gamma_n w^n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogInvCoeffs {
    pub g1: Complex64,
    pub g2: Complex64,
    pub g3: Complex64,
}

pub fn log_coeffs(a: &TaylorPrefix) -> LogCoeffs {
    let TaylorPrefix { a2, a3, a4 } = *a;
    LogCoeffs {
        g1: a2 / 2.0,
        g2: (a3 - a2 * a2 / 2.0) / 2.0,
        g3: (a4 - a2 * a3 + a2 * a2 * a2 / 3.0) / 2.0,
    }
}

pub fn inverse_coeffs(a: &TaylorPrefix) -> InvCoeffs {
    let TaylorPrefix { a2, a3, a4 } = *a;
    InvCoeffs {
        a2: -a2,
        a3: -a3 + 2.0 * a2 * a2,
        a4: -a4 + 5.0 * a2 * a3 - 5.0 * a2 * a2 * a2,
    }
}

pub fn log_inverse_coeffs(a: &TaylorPrefix) -> LogInvCoeffs {
    let TaylorPrefix { a2, a3, a4 } = *a;
    LogInvCoeffs {
        g1: -a2 / 2.0,
        g2: -(a3 - 1.5 * a2 * a2) / 2.0,
        g3: -(a4 - 4.0 * a2 * a3 + 10.0 / 3.0 * a2 * a2 * a2) / 2.0,
    }
}

/// `|gamma2| - |gamma1|`.
pub fn gamma_diff(a: &TaylorPrefix) -> f64 {
    let g = log_coeffs(a);
    g.g2.norm() - g.g1.norm()
}

/// `|Gamma2| - |Gamma1|`.
pub fn gamma_inv_diff(a: &TaylorPrefix) -> f64 {
    let g = log_inverse_coeffs(a);
    g.g2.norm() - g.g1.norm()
}

/// `H_{2,1}(F_f / 2) = gamma1 gamma3 - gamma2^2`.
pub fn hankel_log(a: &TaylorPrefix) -> Complex64 {
    let g = log_coeffs(a);
    g.g1 * g.g3 - g.g2 * g.g2
}

/// The same determinant written directly in the Taylor coefficients:
/// `(a2 a4 - a3^2 + a2^4 / 12) / 4`.
pub fn hankel_log_poly(a: &TaylorPrefix) -> Complex64 {
    let TaylorPrefix { a2, a3, a4 } = *a;
    let a2_sq = a2 * a2;
    (a2 * a4 - a3 * a3 + a2_sq * a2_sq / 12.0) / 4.0
}

/// `H_{2,1}(F_{f^{-1}} / 2) = Gamma1 Gamma3 - Gamma2^2`.
pub fn hankel_log_inverse(a: &TaylorPrefix) -> Complex64 {
    let g = log_inverse_coeffs(a);
    g.g1 * g.g3 - g.g2 * g.g2
}

/// `(13 a2^4 / 12 + a2 a4 - a2^2 a3 - a3^2) / 4`.
pub fn hankel_log_inverse_poly(a: &TaylorPrefix) -> Complex64 {
    let TaylorPrefix { a2, a3, a4 } = *a;
    let a2_sq = a2 * a2;
    (13.0 / 12.0 * a2_sq * a2_sq + a2 * a4 - a2_sq * a3 - a3 * a3) / 4.0
}
