//! Signed q-powers: the parameter values `+/- q^r` with r an exact rational.
//!
//! These are the only values the engine ever substitutes for the Pochhammer
//! parameter `a` and for the two continuous parameters rho_1, rho_2; keeping
//! them as signed monomials keeps every computation exact.

use num_bigint::BigInt;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::series::QSeries;

/// A signed monomial `sign * q^(num/den)` with `sign` +1 or -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QPower {
    sign: i8,
    num: i64,
    den: i64,
}

impl QPower {
    pub fn new(sign: i8, num: i64, den: i64) -> QPower {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        assert!(den != 0);
        let r = Ratio::new(num, den);
        QPower { sign, num: *r.numer(), den: *r.denom() }
    }

    /// `q^k` for integer k.
    #[allow(clippy::self_named_constructors)]
    pub fn q_power(k: i64) -> QPower {
        QPower::new(1, k, 1)
    }

    /// The constant 1 (= `+q^0`).
    pub fn one() -> QPower {
        QPower::q_power(0)
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// The exponent as an exact rational.
    pub fn exponent(&self) -> Ratio<i64> {
        Ratio::new(self.num, self.den)
    }

    pub fn neg(&self) -> QPower {
        QPower { sign: -self.sign, ..*self }
    }

    pub fn mul(&self, other: &QPower) -> QPower {
        let e = self.exponent() + other.exponent();
        QPower::new(self.sign * other.sign, *e.numer(), *e.denom())
    }

    pub fn div(&self, other: &QPower) -> QPower {
        let e = self.exponent() - other.exponent();
        QPower::new(self.sign * other.sign, *e.numer(), *e.denom())
    }

    /// `self^k` for non-negative k.
    pub fn pow(&self, k: u32) -> QPower {
        let sign = if k % 2 == 0 { 1 } else { self.sign };
        let e = self.exponent() * Ratio::from_integer(k as i64);
        QPower::new(sign, *e.numer(), *e.denom())
    }

    /// Exponent in grid units; errors if it does not land on the grid.
    pub fn units(&self, grid: Grid) -> Result<i64> {
        grid.units(self.num, self.den)
    }

    /// Lossless conversion to a one-term series on `grid`.
    pub fn to_series(&self, grid: Grid) -> Result<QSeries> {
        let units = self.units(grid)?;
        Ok(QSeries::monomial(grid, BigInt::from(self.sign), units))
    }

    /// Parse `1`, `-1`, `q`, `-q`, `q^3`, `-q^2`, `q^1/2`, `-q^-1` forms.
    pub fn parse(text: &str) -> Result<QPower> {
        let t = text.trim();
        let (sign, rest) = match t.strip_prefix('-') {
            Some(r) => (-1i8, r.trim()),
            None => (1i8, t.strip_prefix('+').unwrap_or(t).trim()),
        };
        let bad = || Error::InvalidParameter(format!("cannot parse q-power '{text}'"));
        if rest == "1" {
            return Ok(QPower::new(sign, 0, 1));
        }
        if rest == "q" {
            return Ok(QPower::new(sign, 1, 1));
        }
        let expo = rest.strip_prefix("q^").ok_or_else(bad)?;
        let expo = expo.trim_start_matches(['(', '{']).trim_end_matches([')', '}']);
        let (num, den) = match expo.split_once('/') {
            Some((n, d)) => (n.parse::<i64>().map_err(|_| bad())?, d.parse::<i64>().map_err(|_| bad())?),
            None => (expo.parse::<i64>().map_err(|_| bad())?, 1),
        };
        if den == 0 {
            return Err(bad());
        }
        Ok(QPower::new(sign, num, den))
    }
}

impl std::fmt::Display for QPower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = if self.sign < 0 { "-" } else { "" };
        if self.num == 0 {
            write!(f, "{s}1")
        } else if self.num == 1 && self.den == 1 {
            write!(f, "{s}q")
        } else if self.den == 1 {
            write!(f, "{s}q^{}", self.num)
        } else {
            write!(f, "{s}q^{}/{}", self.num, self.den)
        }
    }
}
