//! The class `W(alpha)`: `f' + alpha z f'' = p` with `p` Carathéodory.
//!
//! Comparing coefficients gives `(n + 1)(1 + n alpha) a_{n+1} = p_n`, so the
//! Taylor prefix `(a2, a3, a4)` is a diagonal rescaling of `(p1, p2, p3)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bounds::{self, BreakpointId};
use crate::caratheodory::{coeffs_from_measure, AtomicMeasure, CarCoeffs, FEASIBILITY_TOL};
use crate::error::{Error, Result};

/// The non-negative parameter `alpha` of `W(alpha)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Alpha(f64);

impl Alpha {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_finite() && alpha >= 0.0 {
            Ok(Self(alpha))
        } else {
            Err(Error::InvalidInput(format!("alpha must be a finite number >= 0, got {alpha}")))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Alpha {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(value)
    }
}

/// Taylor coefficients `(a2, a3, a4)` of `f(z) = z + a2 z^2 + a3 z^3 + a4 z^4 + ...`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TaylorPrefix {
    pub a2: Complex64,
    pub a3: Complex64,
    pub a4: Complex64,
}

impl TaylorPrefix {
    pub fn new(a2: Complex64, a3: Complex64, a4: Complex64) -> Self {
        Self { a2, a3, a4 }
    }

    pub fn real(a2: f64, a3: f64, a4: f64) -> Self {
        Self::new(a2.into(), a3.into(), a4.into())
    }

    /// Prefix of `e^{-i theta} f(e^{i theta} z)`: `a_n -> e^{i(n-1) theta} a_n`.
    pub fn rotated(&self, theta: f64) -> Self {
        Self::new(
            self.a2 * Complex64::from_polar(1.0, theta),
            self.a3 * Complex64::from_polar(1.0, 2.0 * theta),
            self.a4 * Complex64::from_polar(1.0, 3.0 * theta),
        )
    }
}

/// Extremal functions of `W(alpha)`, identified through their Carathéodory data.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ExtremalFamily {
    /// `a_n = 2 / (n (1 + (n - 1) alpha))`, driven by `(1 + z)/(1 - z)`.
    F1,
    /// Odd series `2 z^{2n+1} / ((2n + 1)(1 + 2n alpha))`, driven by `(1 + z^2)/(1 - z^2)`.
    F2,
    /// Series in `z^{3n+1}`, driven by `(1 + z^3)/(1 - z^3)`.
    F3,
    /// `z + sum 2 z^{2n+1} / (2n + 1)^2`; defined only for `alpha = 1`.
    F6,
    /// Driven by the kernel `(1 - z^2)/(1 - 2 zeta z + z^2)`.
    Kernel { zeta: f64 },
    /// Driven by `(1+lambda)/2 (1+z)/(1-z) + (1-lambda)/2 (1-z)/(1+z)`.
    Bipolar { lambda: f64 },
}

impl ExtremalFamily {
    /// Carathéodory coefficients of the driving function.
    pub fn caratheodory(&self) -> Result<CarCoeffs> {
        Ok(match *self {
            Self::F1 => CarCoeffs::real(2.0, 2.0, 2.0),
            Self::F2 | Self::F6 => CarCoeffs::real(0.0, 2.0, 0.0),
            Self::F3 => CarCoeffs::real(0.0, 0.0, 2.0),
            Self::Kernel { zeta } => coeffs_from_measure(&AtomicMeasure::chebyshev_kernel(zeta)?),
            Self::Bipolar { lambda } => coeffs_from_measure(&AtomicMeasure::bipolar(lambda)?),
        })
    }

    /// Extremal for the lower bound of `|gamma2| - |gamma1|`.
    pub fn gamma_diff_lower(alpha: Alpha) -> Result<Self> {
        Ok(Self::Kernel { zeta: kernel_parameter_gamma_lower(alpha)? })
    }

    /// Extremal for the lower bound of `|Gamma2| - |Gamma1|`.
    ///
    /// Only the last case is a Chebyshev kernel. On `[0, 3/2]` and `(3/2, 2)`
    /// the minimum needs `p2 = 2`, which the bipolar measure provides; on
    /// `[2, 5.84..]` the kernel degenerates to `(1 + z)/(1 - z)`.
    pub fn gamma_inv_diff_lower(alpha: Alpha) -> Result<Self> {
        let zeta = kernel_parameter_gamma_inv_lower(alpha)?;
        Ok(match gamma_inv_lower_case(alpha) {
            GammaInvLowerCase::First | GammaInvLowerCase::ThirdLow => Self::Bipolar { lambda: zeta },
            GammaInvLowerCase::Middle => Self::F1,
            GammaInvLowerCase::ThirdHigh => Self::Kernel { zeta },
        })
    }
}

/// `(a2, a3, a4) = (p1 / (2(1+alpha)), p2 / (3(1+2alpha)), p3 / (4(1+3alpha)))`.
pub fn taylor_from_caratheodory(alpha: Alpha, p: &CarCoeffs) -> TaylorPrefix {
    let a = alpha.get();
    TaylorPrefix::new(
        p.p1 / (2.0 * (1.0 + a)),
        p.p2 / (3.0 * (1.0 + 2.0 * a)),
        p.p3 / (4.0 * (1.0 + 3.0 * a)),
    )
}

/// Sharp bound `|a_{n+1}| <= 2 / ((n + 1)(1 + n alpha))`.
pub fn coefficient_bound(alpha: Alpha, n: u32) -> Result<f64> {
    if n < 1 {
        return Err(Error::InvalidInput("coefficient index n must be >= 1".into()));
    }
    let n = f64::from(n);
    Ok(2.0 / ((n + 1.0) * (1.0 + n * alpha.get())))
}

/// Taylor prefix of an extremal family.
pub fn extremal_taylor(family: &ExtremalFamily, alpha: Alpha) -> Result<TaylorPrefix> {
    let a = alpha.get();
    let f1_coeff = |n: f64| 2.0 / (n * (1.0 + (n - 1.0) * a));
    match family {
        ExtremalFamily::F1 => Ok(TaylorPrefix::real(f1_coeff(2.0), f1_coeff(3.0), f1_coeff(4.0))),
        ExtremalFamily::F2 => Ok(TaylorPrefix::real(0.0, f1_coeff(3.0), 0.0)),
        ExtremalFamily::F3 => Ok(TaylorPrefix::real(0.0, 0.0, f1_coeff(4.0))),
        ExtremalFamily::F6 => {
            if a != 1.0 {
                return Err(Error::InvalidInput(format!("F6 is defined only for alpha = 1, got {a}")));
            }
            Ok(TaylorPrefix::real(0.0, 2.0 / 9.0, 0.0))
        }
        ExtremalFamily::Kernel { .. } | ExtremalFamily::Bipolar { .. } => {
            Ok(taylor_from_caratheodory(alpha, &family.caratheodory()?))
        }
    }
}

/// Kernel parameter `zeta` attaining the lower bound of `|gamma2| - |gamma1|`.
///
/// `2(1+alpha)/sqrt(8alpha^2+10alpha+5)` up to the switch point near 2.232,
/// `3(1+2alpha)(1+alpha)/(8alpha^2+10alpha+5)` beyond it.
pub fn kernel_parameter_gamma_lower(alpha: Alpha) -> Result<f64> {
    let a = alpha.get();
    let q = 8.0 * a * a + 10.0 * a + 5.0;
    let zeta = if a <= bounds::breakpoint(BreakpointId::GammaDiffSwitch) {
        2.0 * (1.0 + a) / q.sqrt()
    } else {
        3.0 * (1.0 + 2.0 * a) * (1.0 + a) / q
    };
    check_unit_interval(zeta)
}

/// Parameter of the extremal for the lower bound of `|Gamma2| - |Gamma1|`.
///
/// First case `2(1+alpha)/(3 sqrt(1+2alpha))`, middle case `1`, otherwise
/// `zeta1 = B1 / (2|B3| + B4)` with the coefficients of `|Gamma2| - |Gamma1|`.
pub fn kernel_parameter_gamma_inv_lower(alpha: Alpha) -> Result<f64> {
    let a = alpha.get();
    let zeta = match gamma_inv_lower_case(alpha) {
        GammaInvLowerCase::First => 2.0 * (1.0 + a) / (3.0 * (1.0 + 2.0 * a).sqrt()),
        GammaInvLowerCase::Middle => 1.0,
        GammaInvLowerCase::ThirdLow | GammaInvLowerCase::ThirdHigh => {
            let b1 = 1.0 / (4.0 * (1.0 + a));
            let two_b3 = 1.0 / (3.0 * (1.0 + 2.0 * a));
            let b4 = (3.0 / (4.0 * (1.0 + a).powi(2)) - two_b3).abs();
            b1 / (two_b3 + b4)
        }
    };
    check_unit_interval(zeta)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum GammaInvLowerCase {
    First,
    ThirdLow,
    Middle,
    ThirdHigh,
}

pub(crate) fn gamma_inv_lower_case(alpha: Alpha) -> GammaInvLowerCase {
    let a = alpha.get();
    if a <= bounds::breakpoint(BreakpointId::GammaInvDiffFirst) {
        GammaInvLowerCase::First
    } else if a < bounds::breakpoint(BreakpointId::GammaInvDiffMiddleStart) {
        GammaInvLowerCase::ThirdLow
    } else if a <= bounds::breakpoint(BreakpointId::GammaInvDiffMiddleEnd) {
        GammaInvLowerCase::Middle
    } else {
        GammaInvLowerCase::ThirdHigh
    }
}

fn check_unit_interval(zeta: f64) -> Result<f64> {
    if zeta.is_finite() && zeta.abs() <= 1.0 + FEASIBILITY_TOL {
        Ok(zeta.clamp(-1.0, 1.0))
    } else {
        Err(Error::Consistency(format!("kernel parameter {zeta} outside [-1, 1]")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha(a: f64) -> Alpha {
        Alpha::new(a).unwrap()
    }

    fn assert_prefix(t: TaylorPrefix, expect: (f64, f64, f64)) {
        assert!((t.a2 - expect.0).norm() < 1e-15, "{t:?}");
        assert!((t.a3 - expect.1).norm() < 1e-15, "{t:?}");
        assert!((t.a4 - expect.2).norm() < 1e-15, "{t:?}");
    }

    #[test]
    fn rejects_negative_alpha() {
        assert!(Alpha::new(-0.1).is_err());
        assert!(Alpha::new(f64::NAN).is_err());
    }

    #[test]
    fn coefficient_map_examples() {
        let p = CarCoeffs::real(2.0, 2.0, 2.0);
        assert_prefix(taylor_from_caratheodory(alpha(0.0), &p), (1.0, 2.0 / 3.0, 0.5));
        // p3 / (4(1 + 3alpha)) = 2/16 at alpha = 1, the same value F1 gives
        assert_prefix(taylor_from_caratheodory(alpha(1.0), &p), (0.5, 2.0 / 9.0, 0.125));
        assert_prefix(taylor_from_caratheodory(alpha(3.7), &CarCoeffs::real(0.0, 0.0, 0.0)), (0.0, 0.0, 0.0));
    }

    #[test]
    fn coefficient_bound_examples() {
        assert_eq!(coefficient_bound(alpha(0.0), 1).unwrap(), 1.0);
        assert!((coefficient_bound(alpha(1.0), 2).unwrap() - 2.0 / 9.0).abs() < 1e-16);
        assert!((coefficient_bound(alpha(1.0), 3).unwrap() - 0.125).abs() < 1e-16);
        assert!(coefficient_bound(alpha(1.0), 0).is_err());
    }

    #[test]
    fn extremal_examples() {
        assert_prefix(extremal_taylor(&ExtremalFamily::F1, alpha(1.0)).unwrap(), (0.5, 2.0 / 9.0, 0.125));
        assert_prefix(extremal_taylor(&ExtremalFamily::F2, alpha(1.0)).unwrap(), (0.0, 2.0 / 9.0, 0.0));
        assert_prefix(extremal_taylor(&ExtremalFamily::F6, alpha(1.0)).unwrap(), (0.0, 2.0 / 9.0, 0.0));
        assert!(extremal_taylor(&ExtremalFamily::F6, alpha(0.5)).is_err());
        for a in [0.0, 0.7, 4.0] {
            let f1 = extremal_taylor(&ExtremalFamily::F1, alpha(a)).unwrap();
            let k = extremal_taylor(&ExtremalFamily::Kernel { zeta: 1.0 }, alpha(a)).unwrap();
            assert!((f1.a2 - k.a2).norm() < 1e-15 && (f1.a3 - k.a3).norm() < 1e-15 && (f1.a4 - k.a4).norm() < 1e-15);
        }
    }

    #[test]
    fn f1_attains_coefficient_bounds() {
        for a in [0.0, 0.25, 1.0, 6.0] {
            let t = extremal_taylor(&ExtremalFamily::F1, alpha(a)).unwrap();
            for (n, an) in [(1, t.a2), (2, t.a3), (3, t.a4)] {
                assert_eq!(an.norm(), coefficient_bound(alpha(a), n).unwrap());
            }
        }
    }

    #[test]
    fn kernel_parameter_examples() {
        assert!((kernel_parameter_gamma_lower(alpha(0.0)).unwrap() - 2.0 / 5f64.sqrt()).abs() < 1e-15);
        assert_eq!(kernel_parameter_gamma_inv_lower(alpha(3.0)).unwrap(), 1.0);
        assert!((kernel_parameter_gamma_inv_lower(alpha(0.0)).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        // (1.5, 2): zeta1 = (1 + alpha) / 3
        assert!((kernel_parameter_gamma_inv_lower(alpha(1.75)).unwrap() - 2.75 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn kernel_parameters_stay_in_unit_interval() {
        for i in 0..=2000 {
            let a = alpha(i as f64 * 0.01);
            let z = kernel_parameter_gamma_lower(a).unwrap();
            assert!((0.0..=1.0).contains(&z));
            let z = kernel_parameter_gamma_inv_lower(a).unwrap();
            assert!((0.0..=1.0).contains(&z));
        }
    }
}
