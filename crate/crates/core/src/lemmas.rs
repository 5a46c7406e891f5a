//! Closed-form coefficient lemmas for the classes `P` and `B`.
//!
//! * [`fekete_szego_bound`]: `max |p2 - v p1^2|` over `P` for real `v`.
//! * [`psi_plus_bound`], [`psi_minus_bound`]: bounds on
//!   `Psi_+ = |B2 p1^2 + B3 p2| - |B1 p1|` and `Psi_- = -Psi_+`.
//! * [`ps_region_classify`], [`ps_bound`]: the Prokhorov–Szynal regions
//!   `D1..D7` for `|c3 + mu c1 c2 + nu c1^3|` over Schwarz functions.

use std::collections::BTreeSet;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `max |p2 - v p1^2|` over the Carathéodory class.
pub fn fekete_szego_bound(v: f64) -> f64 {
    if v <= 0.0 {
        2.0 - 4.0 * v
    } else if v <= 1.0 {
        2.0
    } else {
        4.0 * v - 2.0
    }
}

/// Coefficients of the `Psi_±` functionals: `B1 >= 0`, `B2` complex, `B3` real.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PsiInputs {
    b1: f64,
    b2: Complex64,
    b3: f64,
}

impl PsiInputs {
    pub fn new(b1: f64, b2: Complex64, b3: f64) -> Result<Self> {
        if !(b1.is_finite() && b2.re.is_finite() && b2.im.is_finite() && b3.is_finite()) {
            return Err(Error::InvalidInput("non-finite Psi coefficient".into()));
        }
        if b1 < 0.0 {
            return Err(Error::InvalidInput(format!("B1 must be >= 0, got {b1}")));
        }
        Ok(Self { b1, b2, b3 })
    }

    pub fn real(b1: f64, b2: f64, b3: f64) -> Result<Self> {
        Self::new(b1, b2.into(), b3)
    }

    pub fn b1(&self) -> f64 {
        self.b1
    }

    pub fn b2(&self) -> Complex64 {
        self.b2
    }

    pub fn b3(&self) -> f64 {
        self.b3
    }

    /// `B4 = |4 B2 + 2 B3|`, always recomputed.
    pub fn b4(&self) -> f64 {
        (4.0 * self.b2 + 2.0 * self.b3).norm()
    }

    /// `Psi_+(p1, p2)` evaluated at concrete coefficients.
    pub fn psi_plus(&self, p1: Complex64, p2: Complex64) -> f64 {
        (self.b2 * p1 * p1 + self.b3 * p2).norm() - self.b1 * p1.norm()
    }
}

/// Sharp upper bound of `Psi_+` over `P`.
pub fn psi_plus_bound(b: &PsiInputs) -> f64 {
    let b3 = b.b3.abs();
    if (2.0 * b.b2 + b.b3).norm() >= b3 + b.b1 {
        b.b4() - 2.0 * b.b1
    } else {
        2.0 * b3
    }
}

/// Sharp upper bound of `Psi_- = -Psi_+` over `P`.
///
/// Branches are taken in order: `2B1 - B4` when `B1 >= B4 + 2|B3|`, then
/// `2 B1 sqrt(2|B3|) / sqrt(B4 + 2|B3|)` when `B1^2 <= 2|B3| (B4 + 2|B3|)`,
/// otherwise `2|B3| + B1^2 / (B4 + 2|B3|)`.
pub fn psi_minus_bound(b: &PsiInputs) -> Result<f64> {
    let b1 = b.b1;
    let b3 = b.b3.abs();
    let b4 = b.b4();
    let denom = b4 + 2.0 * b3;

    let first = b1 >= denom;
    let second = b1 * b1 <= 2.0 * b3 * denom;
    if first {
        let value = 2.0 * b1 - b4;
        if second && denom > 0.0 {
            let other = 2.0 * b1 * (2.0 * b3).sqrt() / denom.sqrt();
            debug_assert!((value - other).abs() <= 1e-9 * (1.0 + value.abs()), "Psi_- branches disagree");
        }
        return Ok(value);
    }
    // first branch failing implies denom > b1 >= 0
    if denom <= 0.0 {
        return Err(Error::Degenerate("B4 + 2|B3| vanishes".into()));
    }
    if second {
        Ok(2.0 * b1 * (2.0 * b3).sqrt() / denom.sqrt())
    } else {
        Ok(2.0 * b3 + b1 * b1 / denom)
    }
}

/// A Prokhorov–Szynal region, or the isolated point `(2, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Region {
    D1,
    D2,
    D3,
    D4,
    D5,
    D6,
    D7,
    Point21,
}

impl Region {
    /// Regions whose bound is `1` rather than `|nu|`.
    pub fn has_unit_bound(self) -> bool {
        matches!(self, Region::D1 | Region::D2 | Region::Point21)
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Region::D1 => "D1",
            Region::D2 => "D2",
            Region::D3 => "D3",
            Region::D4 => "D4",
            Region::D5 => "D5",
            Region::D6 => "D6",
            Region::D7 => "D7",
            Region::Point21 => "POINT_2_1",
        };
        f.write_str(s)
    }
}

/// All regions containing a point, with the resulting bound on
/// `|c3 + mu c1 c2 + nu c1^3|` (absent outside every region).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionLabel {
    pub members: BTreeSet<Region>,
    pub bound: Option<f64>,
}

impl RegionLabel {
    pub fn contains(&self, r: Region) -> bool {
        self.members.contains(&r)
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.members.is_empty() {
            return f.write_str("none");
        }
        let names: Vec<String> = self.members.iter().map(ToString::to_string).collect();
        f.write_str(&names.join("+"))
    }
}

/// Closed-region membership; boundaries may belong to several regions.
///
/// `nu` enters `D2` and `D5..D7` with its sign and the `D6` threshold is
/// `(mu^2 + 8)/12`. Reading these with `|nu|`, or with `sqrt(mu^2 + 8)/12`,
/// admits points where the bound fails, e.g. `(1, -1)` and `(3, 0.35)`.
pub fn ps_region_classify(mu: f64, nu: f64) -> RegionLabel {
    let m = mu.abs();
    let n = nu.abs();
    let mut members = BTreeSet::new();

    if m <= 0.5 && n <= 1.0 {
        members.insert(Region::D1);
    }
    if (0.5..=2.0).contains(&m) && 4.0 / 27.0 * (m + 1.0).powi(3) - (m + 1.0) <= nu && nu <= 1.0 {
        members.insert(Region::D2);
    }
    if m <= 0.5 && nu <= -1.0 {
        members.insert(Region::D3);
    }
    if m >= 0.5 && nu <= -2.0 / 3.0 * (m + 1.0) {
        members.insert(Region::D4);
    }
    if m <= 2.0 && nu >= 1.0 {
        members.insert(Region::D5);
    }
    if (2.0..=4.0).contains(&m) && nu >= (mu * mu + 8.0) / 12.0 {
        members.insert(Region::D6);
    }
    if m >= 4.0 && nu >= 2.0 / 3.0 * (m - 1.0) {
        members.insert(Region::D7);
    }
    if mu == 2.0 && nu == 1.0 {
        members.insert(Region::Point21);
    }

    let bound = members
        .iter()
        .map(|r| if r.has_unit_bound() { 1.0 } else { n })
        .min_by(f64::total_cmp);
    RegionLabel { members, bound }
}

/// `ps_region_classify(mu, nu).bound`.
pub fn ps_bound(mu: f64, nu: f64) -> Option<f64> {
    ps_region_classify(mu, nu).bound
}
