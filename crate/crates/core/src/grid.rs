//! The fractional exponent grid.
//!
//! Every computation fixes a grid denominator `D` and a truncation order up
//! front; exponents are then integers in units of `1/D`. Classic Bailey work
//! runs on `D = 2`, level-N work on `D = 2N`, which covers both the `1/N`
//! denominators of the level-N quadratic forms and the halves arising from
//! `q^{j(j-1)/2}`-style factors. Producing an exponent that does not land on
//! the grid is always a hard error, never a silent rounding.

use num_integer::Integer;

use crate::error::{Error, Result};

/// Exponent grid: denominator `D` plus the truncation order of the run.
///
/// `cutoff` is measured in grid units, i.e. a series on this grid is compared
/// for exponents `<= cutoff / denom`. Use [`Grid::new`] with the truncation
/// order in plain q-exponent units.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    denom: i64,
    cutoff: i64,
}

impl Grid {
    /// Grid with denominator `denom`, truncated at q-exponent `trunc`
    /// (so at `trunc * denom` grid units).
    pub fn new(denom: i64, trunc: i64) -> Grid {
        assert!(denom > 0, "grid denominator must be positive");
        assert!(trunc >= 0, "truncation order must be non-negative");
        Grid { denom, cutoff: trunc.checked_mul(denom).expect("grid cutoff overflow") }
    }

    /// Integer-exponent grid (D = 1) truncated at `trunc`.
    pub fn integer(trunc: i64) -> Grid {
        Grid::new(1, trunc)
    }

    /// Default grid for level-N work: D = 2N.
    pub fn for_level(n: i64, trunc: i64) -> Grid {
        assert!(n >= 1);
        Grid::new(2 * n, trunc)
    }

    /// Default grid for classic (N = 1) work: D = 2.
    pub fn classic(trunc: i64) -> Grid {
        Grid::for_level(1, trunc)
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    /// Truncation order in grid units.
    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    /// Truncation order in q-exponent units (rounded down).
    pub fn trunc(&self) -> i64 {
        self.cutoff.div_euclid(self.denom)
    }

    /// Same denominator, truncation raised by `extra` grid units.
    ///
    /// Used internally as a guard band: coefficients of a product below the
    /// nominal cutoff depend on denominator coefficients up to the cutoff
    /// plus the (negative) depth of the Laurent factors involved.
    pub fn with_extra_units(&self, extra: i64) -> Grid {
        assert!(extra >= 0);
        Grid { denom: self.denom, cutoff: self.cutoff + extra }
    }

    /// Convert an exact rational exponent `num/den` into grid units.
    pub fn units(&self, num: i64, den: i64) -> Result<i64> {
        assert!(den != 0);
        let scaled = (num as i128) * (self.denom as i128);
        let den = den as i128;
        if scaled % den != 0 {
            return Err(Error::OffGrid { num, den: den as i64, grid_denom: self.denom });
        }
        Ok((scaled / den) as i64)
    }

    /// The exact exponent represented by `units` grid units.
    pub fn exponent(&self, units: i64) -> GridExponent {
        GridExponent::new(units, self.denom)
    }
}

/// An exact rational exponent `numer / denom` on the grid.
///
/// Ordering and equality are by exact rational value, so exponents from
/// grids with different denominators compare correctly.
#[derive(Clone, Copy, Debug)]
pub struct GridExponent {
    numer: i64,
    denom: i64,
}

impl GridExponent {
    pub fn new(numer: i64, denom: i64) -> GridExponent {
        assert!(denom > 0, "grid denominator must be positive");
        GridExponent { numer, denom }
    }

    pub fn numer(&self) -> i64 {
        self.numer
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn is_integer(&self) -> bool {
        self.numer % self.denom == 0
    }

    /// Reduced-fraction rendering: `"7"` when integral, `"7/2"` otherwise.
    pub fn reduced(&self) -> String {
        let g = self.numer.gcd(&self.denom);
        let (n, d) = if g == 0 { (0, 1) } else { (self.numer / g, self.denom / g) };
        if d == 1 {
            format!("{n}")
        } else {
            format!("{n}/{d}")
        }
    }
}

impl PartialEq for GridExponent {
    fn eq(&self, other: &Self) -> bool {
        (self.numer as i128) * (other.denom as i128) == (other.numer as i128) * (self.denom as i128)
    }
}

impl Eq for GridExponent {}

impl PartialOrd for GridExponent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GridExponent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let lhs = (self.numer as i128) * (other.denom as i128);
        let rhs = (other.numer as i128) * (self.denom as i128);
        lhs.cmp(&rhs)
    }
}

impl std::fmt::Display for GridExponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.reduced())
    }
}
