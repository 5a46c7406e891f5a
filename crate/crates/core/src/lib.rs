//! Numerical laboratory for sharp coefficient functionals of the class
//! `W(alpha) = { f : Re(f' + alpha z f'') > 0 }`.
//!
//! The crate is organised bottom-up:
//!
//! * [`caratheodory`] – coefficient bodies of the Carathéodory class and of
//!   Schwarz functions (atomic measures, Schur parameters).
//! * [`walpha`] – the coefficient map into `W(alpha)` and the extremal
//!   families.
//! * [`functionals`] – logarithmic, inverse and logarithmic-inverse
//!   coefficients, moduli differences and second Hankel determinants.
//! * [`lemmas`] – closed-form coefficient lemmas (Fekete–Szegő type bound,
//!   `Psi_±` bounds, Prokhorov–Szynal regions).
//! * [`bounds`] – the sharp bounds as piecewise functions of `alpha`, with
//!   every breakpoint recomputed from its defining equation.
//! * [`oracle`] – independent multi-start search and grid certification.

pub mod bounds;
pub mod caratheodory;
pub mod error;
pub mod functionals;
pub mod lemmas;
pub mod oracle;
pub mod walpha;

pub use num_complex::Complex64;

pub use bounds::{
    bound_gamma, bound_gamma_diff, bound_gamma_inv, bound_gamma_inv_diff, bound_hankel,
    breakpoint_table, mu_nu, Breakpoint, BreakpointStatus, HankelKind, MuNuPoint, MuNuSource,
    PiecewiseBound,
};
pub use caratheodory::{AtomicMeasure, CarCoeffs, SchurParams, SchwarzCoeffs};
pub use error::{Error, Result};
pub use functionals::{InvCoeffs, LogCoeffs, LogInvCoeffs};
pub use lemmas::{PsiInputs, Region, RegionLabel};
pub use oracle::{Functional, SearchConfig, SearchReport, STANDARD_ALPHAS};
pub use walpha::{Alpha, ExtremalFamily, TaylorPrefix};
