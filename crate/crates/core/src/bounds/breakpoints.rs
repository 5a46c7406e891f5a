//! Case boundaries of the piecewise bounds, recomputed from their defining
//! equations. Rounded published decimals are kept only as regression
//! checkpoints.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::roots::unique_root;
use super::{mu_nu_raw, psi_inputs_gamma_diff, psi_inputs_gamma_inv_diff, MuNuSource};
use crate::error::Result;

/// Agreement required between a recomputed root and its published decimal.
pub const REGRESSION_TOL: f64 = 5e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BreakpointId {
    /// `9(1+2a) = 8(1+a)^2`: Fekete–Szegő parameter of `Gamma2` crosses 1.
    GammaInv2Case,
    /// `nu(a) = 1` for the `Gamma3` point.
    GammaInv3Case,
    /// `|mu(a)| = 2` for the `Gamma3` point (entry from D6 into D5).
    D5D6Boundary,
    /// `mu(a) = -1/2`: entry into D1.
    D2D1Entry,
    /// `mu(a) = 1/2`: exit from D1.
    D1D2Exit,
    /// `B1^2 = 2|B3|(B4 + 2|B3|)` for `|gamma2| - |gamma1|`.
    GammaDiffSwitch,
    /// `4B2 + 2B3 = 0` for `|Gamma2| - |Gamma1|`, i.e. `4a^2 - 10a - 5 = 0`.
    B4Sign,
    /// Positive root of `12a^3 - 28a^2 - 32a - 7`, where `nu'` changes sign.
    NuPrimeSign,
    /// `B1^2 = 2|B3|(B4 + 2|B3|)` for `|Gamma2| - |Gamma1|`.
    GammaInvDiffFirst,
    /// First root of `B1 = B4 + 2|B3|` for `|Gamma2| - |Gamma1|`.
    GammaInvDiffMiddleStart,
    /// Second root of `B1 = B4 + 2|B3|` for `|Gamma2| - |Gamma1|`.
    GammaInvDiffMiddleEnd,
}

impl BreakpointId {
    pub const ALL: [BreakpointId; 11] = [
        BreakpointId::GammaInv2Case,
        BreakpointId::GammaInv3Case,
        BreakpointId::D5D6Boundary,
        BreakpointId::D2D1Entry,
        BreakpointId::D1D2Exit,
        BreakpointId::GammaDiffSwitch,
        BreakpointId::B4Sign,
        BreakpointId::NuPrimeSign,
        BreakpointId::GammaInvDiffFirst,
        BreakpointId::GammaInvDiffMiddleStart,
        BreakpointId::GammaInvDiffMiddleEnd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BreakpointId::GammaInv2Case => "Gamma2_case",
            BreakpointId::GammaInv3Case => "Gamma3_case",
            BreakpointId::D5D6Boundary => "D5_D6_boundary",
            BreakpointId::D2D1Entry => "D2_D1_entry",
            BreakpointId::D1D2Exit => "D1_D2_exit",
            BreakpointId::GammaDiffSwitch => "gamma_diff_switch",
            BreakpointId::B4Sign => "Gamma_diff_B4_sign",
            BreakpointId::NuPrimeSign => "nu_prime_sign",
            BreakpointId::GammaInvDiffFirst => "Gamma_diff_first_case",
            BreakpointId::GammaInvDiffMiddleStart => "Gamma_diff_middle_start",
            BreakpointId::GammaInvDiffMiddleEnd => "Gamma_diff_middle_end",
        }
    }

    pub fn equation(self) -> &'static str {
        match self {
            BreakpointId::GammaInv2Case => "9(1+2a) - 8(1+a)^2 = 0",
            BreakpointId::GammaInv3Case => "nu_inv(a) - 1 = 0",
            BreakpointId::D5D6Boundary => "mu_inv(a) + 2 = 0  (6a^2 - 3a - 1 = 0)",
            BreakpointId::D2D1Entry => "mu_inv(a) + 1/2 = 0  (30a^2 - 51a - 17 = 0)",
            BreakpointId::D1D2Exit => "mu_inv(a) - 1/2 = 0  (18a^2 - 69a - 23 = 0)",
            BreakpointId::GammaDiffSwitch => "B1^2 - 2|B3|(B4+2|B3|) = 0, gamma B's  (4a^2 - 4a - 11 = 0)",
            BreakpointId::B4Sign => "4B2 + 2B3 = 0, Gamma B's  (4a^2 - 10a - 5 = 0)",
            BreakpointId::NuPrimeSign => "12a^3 - 28a^2 - 32a - 7 = 0",
            BreakpointId::GammaInvDiffFirst => "B1^2 - 2|B3|(B4+2|B3|) = 0, Gamma B's  (1+2a = 4)",
            BreakpointId::GammaInvDiffMiddleStart => "B1 - (B4+2|B3|) = 0, Gamma B's  (2a^2 - 3a - 2 = 0)",
            BreakpointId::GammaInvDiffMiddleEnd => "B1 - (B4+2|B3|) = 0, Gamma B's  (2a^2 - 11a - 4 = 0)",
        }
    }

    /// Published rounded value.
    pub fn published(self) -> f64 {
        match self {
            BreakpointId::GammaInv2Case => 0.5,
            BreakpointId::GammaInv3Case => 0.809,
            BreakpointId::D5D6Boundary => 0.7207,
            BreakpointId::D2D1Entry => 1.9854,
            BreakpointId::D1D2Exit => 4.1418,
            BreakpointId::GammaDiffSwitch => 2.232,
            BreakpointId::B4Sign => 2.927,
            BreakpointId::NuPrimeSign => 3.21836,
            BreakpointId::GammaInvDiffFirst => 1.5,
            BreakpointId::GammaInvDiffMiddleStart => 2.0,
            BreakpointId::GammaInvDiffMiddleEnd => 5.84,
        }
    }

    /// Closed-form value of the root, where one exists.
    pub fn closed_form(self) -> Option<(f64, &'static str)> {
        Some(match self {
            BreakpointId::GammaInv2Case => (0.5, "1/2"),
            BreakpointId::GammaInv3Case => ((1.0 + 5f64.sqrt()) / 4.0, "(1+sqrt5)/4"),
            BreakpointId::D5D6Boundary => ((3.0 + 33f64.sqrt()) / 12.0, "(3+sqrt33)/12"),
            BreakpointId::D2D1Entry => ((51.0 + 4641f64.sqrt()) / 60.0, "(51+sqrt4641)/60"),
            BreakpointId::D1D2Exit => ((69.0 + 6417f64.sqrt()) / 36.0, "(69+sqrt6417)/36"),
            BreakpointId::GammaDiffSwitch => ((1.0 + 2.0 * 3f64.sqrt()) / 2.0, "(1+2sqrt3)/2"),
            BreakpointId::B4Sign => ((5.0 + 3.0 * 5f64.sqrt()) / 4.0, "(5+3sqrt5)/4"),
            BreakpointId::NuPrimeSign => return None,
            BreakpointId::GammaInvDiffFirst => (1.5, "3/2"),
            BreakpointId::GammaInvDiffMiddleStart => (2.0, "2"),
            BreakpointId::GammaInvDiffMiddleEnd => ((11.0 + 153f64.sqrt()) / 4.0, "(11+sqrt153)/4"),
        })
    }

    /// Published decimal that no defining equation reproduces.
    pub fn known_discrepancy(self) -> bool {
        self == BreakpointId::D5D6Boundary
    }

    fn defining_function(self) -> (fn(f64) -> f64, f64, f64) {
        match self {
            BreakpointId::GammaInv2Case => (|a| 9.0 * (1.0 + 2.0 * a) - 8.0 * (1.0 + a).powi(2), 0.0, 20.0),
            BreakpointId::GammaInv3Case => (|a| mu_nu_raw(MuNuSource::Gamma3Inverse, a).1 - 1.0, 0.0, 20.0),
            BreakpointId::D5D6Boundary => (|a| mu_nu_raw(MuNuSource::Gamma3Inverse, a).0 + 2.0, 0.0, 20.0),
            BreakpointId::D2D1Entry => (|a| mu_nu_raw(MuNuSource::Gamma3Inverse, a).0 + 0.5, 0.0, 20.0),
            BreakpointId::D1D2Exit => (|a| mu_nu_raw(MuNuSource::Gamma3Inverse, a).0 - 0.5, 0.0, 20.0),
            BreakpointId::GammaDiffSwitch => (|a| branch_two_margin(psi_inputs_gamma_diff(a)), 0.0, 20.0),
            BreakpointId::B4Sign => (
                |a| {
                    let b = psi_inputs_gamma_inv_diff(a);
                    4.0 * b.b2().re + 2.0 * b.b3()
                },
                0.0,
                20.0,
            ),
            BreakpointId::NuPrimeSign => (|a| ((12.0 * a - 28.0) * a - 32.0) * a - 7.0, 0.0, 20.0),
            BreakpointId::GammaInvDiffFirst => (|a| branch_two_margin(psi_inputs_gamma_inv_diff(a)), 0.0, 20.0),
            BreakpointId::GammaInvDiffMiddleStart => (|a| branch_one_margin(psi_inputs_gamma_inv_diff(a)), 0.0, 4.0),
            BreakpointId::GammaInvDiffMiddleEnd => (|a| branch_one_margin(psi_inputs_gamma_inv_diff(a)), 4.0, 20.0),
        }
    }
}

fn branch_one_margin(b: crate::lemmas::PsiInputs) -> f64 {
    b.b1() - (b.b4() + 2.0 * b.b3().abs())
}

fn branch_two_margin(b: crate::lemmas::PsiInputs) -> f64 {
    let b3 = b.b3().abs();
    b.b1() * b.b1() - 2.0 * b3 * (b.b4() + 2.0 * b3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BreakpointProvenance {
    /// A closed form of the root is known and matches the recomputation.
    Exact,
    /// Only the rounded published value is available for comparison.
    PaperRounded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BreakpointStatus {
    Ok,
    Warn,
    Fail,
}

impl fmt::Display for BreakpointStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BreakpointStatus::Ok => "OK",
            BreakpointStatus::Warn => "WARN",
            BreakpointStatus::Fail => "FAIL",
        })
    }
}

/// One recomputed case boundary.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Breakpoint {
    pub id: BreakpointId,
    pub name: &'static str,
    pub alpha: f64,
    pub equation: &'static str,
    pub published: f64,
    pub closed_form: Option<f64>,
    pub closed_form_label: Option<&'static str>,
    pub provenance: BreakpointProvenance,
    pub status: BreakpointStatus,
    pub note: Option<&'static str>,
}

impl Breakpoint {
    pub fn published_difference(&self) -> f64 {
        (self.alpha - self.published).abs()
    }
}

/// Solves every defining equation by sign scan and bisection.
pub fn compute_breakpoints() -> Result<Vec<Breakpoint>> {
    BreakpointId::ALL.iter().map(|&id| compute_one(id)).collect()
}

fn compute_one(id: BreakpointId) -> Result<Breakpoint> {
    let (f, lo, hi) = id.defining_function();
    let alpha = unique_root(f, lo, hi)?;
    let diff = (alpha - id.published()).abs();
    let status = if diff <= REGRESSION_TOL {
        BreakpointStatus::Ok
    } else if id.known_discrepancy() {
        BreakpointStatus::Warn
    } else {
        BreakpointStatus::Fail
    };
    let closed = id.closed_form();
    let provenance = match closed {
        Some((v, _)) if (v - alpha).abs() <= 1e-9 => BreakpointProvenance::Exact,
        _ => BreakpointProvenance::PaperRounded,
    };
    let note = match id {
        BreakpointId::D5D6Boundary => Some(
            "published 0.7207 is not reproduced: the switch from D6 to D5 is where |mu| = 2, at (3+sqrt33)/12",
        ),
        BreakpointId::NuPrimeSign => Some("published 3.21836; the cubic's root is 3.2182600 (digit slip)"),
        _ => None,
    };
    Ok(Breakpoint {
        id,
        name: id.name(),
        alpha,
        equation: id.equation(),
        published: id.published(),
        closed_form: closed.map(|c| c.0),
        closed_form_label: closed.map(|c| c.1),
        provenance,
        status,
        note,
    })
}

static TABLE: OnceLock<Vec<Breakpoint>> = OnceLock::new();

/// Breakpoint table computed once and shared.
pub fn breakpoint_table() -> &'static [Breakpoint] {
    TABLE.get_or_init(|| compute_breakpoints().expect("breakpoint defining equations must bracket their roots"))
}

/// Recomputed value of one breakpoint.
pub fn breakpoint(id: BreakpointId) -> f64 {
    breakpoint_table()
        .iter()
        .find(|b| b.id == id)
        .map(|b| b.alpha)
        .expect("every breakpoint id is in the table")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_defining_equation_has_one_root() {
        let table = compute_breakpoints().unwrap();
        assert_eq!(table.len(), BreakpointId::ALL.len());
    }

    #[test]
    fn exact_identities() {
        for b in breakpoint_table() {
            if let Some(v) = b.closed_form {
                assert!((b.alpha - v).abs() < 1e-9, "{} = {} vs {}", b.name, b.alpha, v);
                assert_eq!(b.provenance, BreakpointProvenance::Exact);
            }
        }
        assert!((breakpoint(BreakpointId::GammaInv2Case) - 0.5).abs() < 1e-10);
    }

    #[test]
    fn regression_against_published_decimals() {
        for b in breakpoint_table() {
            match b.id {
                BreakpointId::D5D6Boundary => {
                    assert_eq!(b.status, BreakpointStatus::Warn);
                    assert!((b.alpha - 0.728_713_553_878).abs() < 1e-9);
                }
                _ => assert_eq!(b.status, BreakpointStatus::Ok, "{}", b.name),
            }
        }
        assert!((breakpoint(BreakpointId::GammaDiffSwitch) - 2.232).abs() < 1e-3);
        // The published 3.21836 sits 1.0001e-4 from the cubic's root.
        assert!((breakpoint(BreakpointId::NuPrimeSign) - 3.218_259_985_387).abs() < 1e-9);
    }

    #[test]
    fn nu_prime_changes_sign_at_the_cubic_root() {
        let r = breakpoint(BreakpointId::NuPrimeSign);
        let nu = |a: f64| mu_nu_raw(MuNuSource::Gamma3Inverse, a).1;
        let h = 1e-6;
        let d = |a: f64| (nu(a + h) - nu(a - h)) / (2.0 * h);
        assert!(d(r - 1e-3) < 0.0 && d(r + 1e-3) > 0.0);
    }
}
