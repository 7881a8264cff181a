//! Exact q-series arithmetic and Bailey-pair machinery.
//!
//! Everything here computes with truncated formal power series in `q` over
//! the integers, on a fractional exponent grid `q^{1/D}`. There is no
//! floating point anywhere: an identity either holds coefficient-for-
//! coefficient up to the truncation order or it does not.
//!
//! The crate is organised in three layers:
//!
//! - series kernels: [`QSeries`] with add/mul/invert, q-Pochhammer symbols
//!   ([`pochhammer()`]), Gaussian binomials ([`gaussian()`]) and the Jacobi
//!   triple product ([`triple_product`]);
//! - Bailey machinery: [`BaileyPair`], the transform pair
//!   [`beta_from_alpha`]/[`gamma_from_delta`], the unit pair, the Bailey
//!   chain, and the classic and two-parameter (delta, gamma) families;
//! - level-N machinery: A_{N-1} Cartan data, the (m,n)- and (mu,eta)-systems,
//!   the level-N (delta, gamma) sequences, and the identity assemblies
//!   (generalized Euler, Andrews-Gordon and their level-N forms).
//!
//! Identity checks produce an [`IdentityReport`] carrying the comparison
//! outcome and a coefficient sample, suitable for machine-readable output.
//!
//! ```
//! use qbailey_core::{ag_identity_sides, Grid};
//!
//! // Both sides of the first Rogers-Ramanujan identity, exactly, to q^40.
//! let grid = Grid::classic(40);
//! let (lhs, rhs) = ag_identity_sides(1, 0, grid).unwrap();
//! assert!(lhs.eq_up_to(&rhs, grid.cutoff()));
//! ```

pub mod bailey;
pub mod cartan;
pub mod error;
pub mod gaussian;
pub mod grid;
pub mod identities;
pub mod lattice;
pub mod level;
pub mod pochhammer;
pub mod products;
pub mod qpower;
pub mod report;
pub mod series;

pub use bailey::{
    beta_from_alpha, bilinear_check, chain_step, classic_delta_gamma, gamma_from_delta, inf_sides,
    rho_delta_gamma, unit_pair, verify_pair, BaileyPair, DeltaGammaFamily, FamilyVariant, RhoParam,
};
pub use cartan::{cartan, CartanData};
pub use error::{Error, Result};
pub use gaussian::gaussian;
pub use grid::{Grid, GridExponent};
pub use identities::ag_identity_sides;
pub use lattice::{
    enumerate_admissible, solve_system, suspect_rejection_count, EnumerationStats, LinearSystem,
    MnSolution, SolveOutcome,
};
pub use level::{
    agn_sides, corollary_sides, delta_level_n, euler_level_n, gamma_level_n, level_delta_gamma,
};
pub use pochhammer::{pochhammer, pochhammer_step, Order};
pub use products::triple_product;
pub use qpower::QPower;
pub use report::{IdentityId, IdentityReport, Mismatch, ReportParams, ReportStatus};
pub use series::QSeries;
