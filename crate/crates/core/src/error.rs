//! Error type shared by all modules.

use thiserror::Error;

/// Errors raised by series arithmetic and identity builders.
///
/// All arithmetic is exact, so there are no tolerance or rounding errors;
/// everything here signals a structural misuse (incompatible grids, an
/// exponent that does not land on the grid, division that would leave the
/// integers) or an out-of-domain parameter.
#[derive(Debug, Error)]
pub enum Error {
    /// Two series with different grid denominators and no workable common
    /// refinement (the least common denominator would overflow the grid).
    #[error("incompatible exponent grids: 1/{0} vs 1/{1}")]
    GridMismatch(i64, i64),

    /// An exponent whose exact value does not lie on the 1/D grid.
    #[error("exponent {num}/{den} does not land on the 1/{grid_denom} grid")]
    OffGrid { num: i64, den: i64, grid_denom: i64 },

    /// Inversion of a series whose lowest nonzero coefficient is not +1/-1.
    /// Inverting it would require rational coefficients.
    #[error("series is non-invertible over the integers (leading coefficient {0})")]
    NonUnitLeading(String),

    /// Inversion of the zero series.
    #[error("cannot invert the zero series")]
    ZeroInverse,

    /// An infinite Pochhammer product containing the factor (1 - q^0) = 0.
    #[error("infinite Pochhammer product vanishes identically (argument {0})")]
    VanishingProduct(String),

    /// Mismatched relative parameter between a Bailey pair and a
    /// (delta, gamma) family.
    #[error("parameter mismatch: pair is relative to q^{pair_ell}, family to q^{family_ell}")]
    EllMismatch { pair_ell: i64, family_ell: i64 },

    /// A parameter outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
