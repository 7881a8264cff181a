//! q-Pochhammer symbols (a; q^s)_n for signed q-power arguments.
//!
//! (a)_n = (1 - a)(1 - aq)...(1 - aq^{n-1}), with (a)_0 = 1 and
//! (a)_inf the formal infinite product. The step variant (a; q^s)_n
//! advances the factor exponent by s instead of 1 and is what the Jacobi
//! triple product is built from.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::qpower::QPower;
use crate::series::QSeries;

/// Order of a Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    /// (a)_n, a product of n factors.
    Finite(u32),
    /// (a)_inf, truncated so that omitted factors cannot affect
    /// coefficients at or below the grid cutoff.
    Infinite,
}

/// (a; q)_order on `grid`.
///
/// Finite orders produce exact Laurent polynomials. The infinite product
/// requires the factor exponents a*q^k to be eventually positive and never
/// exactly zero; `(1; q)_inf` and its shifts vanish identically and are
/// rejected, since every use in the transform machinery divides by the
/// result.
pub fn pochhammer(a: &QPower, order: Order, grid: Grid) -> Result<QSeries> {
    pochhammer_step(a, 1, order, grid)
}

/// (a; q^s)_order on `grid`, for step s >= 1.
pub fn pochhammer_step(a: &QPower, step: i64, order: Order, grid: Grid) -> Result<QSeries> {
    assert!(step >= 1, "Pochhammer step must be >= 1");
    let step_units = grid.units(step, 1)?;
    let a_units = a.units(grid)?;
    match order {
        Order::Finite(n) => {
            let mut acc = QSeries::one(grid);
            for k in 0..n as i64 {
                let factor = linear_factor(grid, a, a_units + k * step_units);
                acc = acc.mul(&factor);
                if acc.is_zero() {
                    break;
                }
            }
            Ok(acc)
        }
        Order::Infinite => {
            // A factor with exponent exactly zero is (1 - 1) = 0 and makes
            // the whole infinite product vanish.
            if a.sign() > 0 && a_units <= 0 && a_units.rem_euclid(step_units) == 0 {
                return Err(Error::VanishingProduct(a.to_string()));
            }
            // Head: the finitely many factors with non-positive exponent
            // (Laurent factors). Multiplying by them lowers the exponent
            // floor, so the tail must extend past the cutoff by that depth.
            let mut head = QSeries::one(grid);
            let mut k = 0i64;
            while a_units + k * step_units <= 0 {
                head = head.mul(&linear_factor(grid, a, a_units + k * step_units));
                k += 1;
            }
            let depth = (-head.offset()).max(0);
            let bound = grid.cutoff() + depth;
            let mut acc = head;
            while a_units + k * step_units <= bound {
                acc = acc.mul(&linear_factor(grid, a, a_units + k * step_units));
                k += 1;
            }
            // Coefficients above the cutoff are contaminated by the omitted
            // factors; mark the honest validity bound.
            acc.truncate_units(grid.cutoff());
            Ok(acc)
        }
    }
}

/// The factor `1 - sign(a) * q^(units/D)` as an exact polynomial.
fn linear_factor(grid: Grid, a: &QPower, units: i64) -> QSeries {
    QSeries::one_minus(grid, BigInt::from(a.sign()), units)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_product_is_one() {
        let grid = Grid::integer(10);
        let p = pochhammer(&QPower::q_power(1), Order::Finite(0), grid).unwrap();
        assert_eq!(p, QSeries::one(grid));
    }

    #[test]
    fn q_pochhammer_three_factors() {
        // (q)_3 = (1-q)(1-q^2)(1-q^3) = 1 - q - q^2 + q^4 + q^5 - q^6
        let grid = Grid::integer(10);
        let p = pochhammer(&QPower::q_power(1), Order::Finite(3), grid).unwrap();
        let expect: &[(i64, i64)] = &[(0, 1), (1, -1), (2, -1), (4, 1), (5, 1), (6, -1)];
        for &(e, c) in expect {
            assert_eq!(p.coeff_at_units(e).unwrap(), BigInt::from(c), "coefficient of q^{e}");
        }
        assert_eq!(p.coeff_at_units(3).unwrap(), BigInt::from(0));
        assert!(p.is_exact());
    }

    #[test]
    fn vanishing_factor_gives_zero() {
        let grid = Grid::integer(10);
        let p = pochhammer(&QPower::one(), Order::Finite(4), grid).unwrap();
        assert!(p.is_zero());
        assert!(p.is_exact());
    }

    #[test]
    fn infinite_product_of_one_rejected() {
        let grid = Grid::integer(10);
        assert!(matches!(
            pochhammer(&QPower::one(), Order::Infinite, grid),
            Err(Error::VanishingProduct(_))
        ));
        // q^-2 with step 1 also hits the zero factor at k = 2.
        assert!(matches!(
            pochhammer(&QPower::new(1, -2, 1), Order::Infinite, grid),
            Err(Error::VanishingProduct(_))
        ));
    }

    #[test]
    fn laurent_head_keeps_low_coefficients_right() {
        // (-q^-1; q)_inf = (1 + q^-1) * (1 + 1) * (1 + q) * ...
        let grid = Grid::integer(8);
        let p = pochhammer(&QPower::new(-1, -1, 1), Order::Infinite, grid).unwrap();
        assert_eq!(p.offset(), -1);
        // (1 + q^-1)*2*prod_{k>=1}(1+q^k): coefficient of q^-1 is 2.
        assert_eq!(p.coeff_at_units(-1).unwrap(), BigInt::from(2));
    }
}
