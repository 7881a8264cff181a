//! Jacobi triple product: theta sum against infinite-product form.
//!
//! For integers r and s >= 1,
//!
//!   sum_{j in Z} (-1)^j q^{s j(j-1)/2 + r j}
//!     = (q^r; q^s)_inf (q^{s-r}; q^s)_inf (q^s; q^s)_inf.
//!
//! Both sides are computed independently and returned for comparison; the
//! degenerate cases (r or s-r a multiple of s landing on exponent zero)
//! collapse both sides to the zero series.

use num_bigint::BigInt;

use crate::error::Result;
use crate::grid::Grid;
use crate::pochhammer::{pochhammer_step, Order};
use crate::qpower::QPower;
use crate::series::QSeries;

/// Both sides of the triple product identity, truncated at the grid cutoff.
pub fn triple_product(r: i64, s: i64, grid: Grid) -> Result<(QSeries, QSeries)> {
    assert!(s >= 1, "triple product requires s >= 1");
    let sum = theta_sum(r, s, grid)?;
    let product = product_form(r, s, grid)?;
    Ok((sum, product))
}

fn theta_sum(r: i64, s: i64, grid: Grid) -> Result<QSeries> {
    let cutoff = grid.cutoff();
    let mut acc = QSeries::zero(grid);
    for j in bilateral_window(|j| exponent_units(r, s, j, grid), cutoff) {
        let units = exponent_units(r, s, j, grid)?;
        let coeff = if j.rem_euclid(2) == 0 { BigInt::from(1) } else { BigInt::from(-1) };
        acc = acc.add(&QSeries::monomial(grid, coeff, units));
    }
    Ok(acc)
}

fn exponent_units(r: i64, s: i64, j: i64, grid: Grid) -> Result<i64> {
    // s*j(j-1)/2 + r*j; j(j-1) is even so this is an integer.
    let e = s * j * (j - 1) / 2 + r * j;
    grid.units(e, 1)
}

fn product_form(r: i64, s: i64, grid: Grid) -> Result<QSeries> {
    // A factor exponent hitting zero makes the whole product vanish.
    for e in [r, s - r, s] {
        if e <= 0 && e.rem_euclid(s) == 0 {
            return Ok(QSeries::zero(grid));
        }
    }
    let mut acc = QSeries::one(grid);
    for e in [r, s - r, s] {
        acc = acc.mul(&pochhammer_step(&QPower::q_power(e), s, Order::Infinite, grid)?);
    }
    acc.truncate_units(grid.cutoff());
    Ok(acc)
}

/// All j in Z whose exponent (in grid units) stays at or below `cutoff`.
///
/// The exponent maps used here are convex quadratics in j with integer
/// second difference >= 1, so marching outward from 0 and stopping once the
/// value exceeds the cutoff while increasing is exhaustive.
pub(crate) fn bilateral_window(
    mut exp: impl FnMut(i64) -> Result<i64>,
    cutoff: i64,
) -> Vec<i64> {
    let mut out = Vec::new();
    let mut probe = |j: i64, out: &mut Vec<i64>| -> i64 {
        let e = exp(j).expect("off-grid exponent in bilateral sum");
        if e <= cutoff {
            out.push(j);
        }
        e
    };
    let e0 = probe(0, &mut out);
    // March each direction; by convexity, once the value exceeds the cutoff
    // without having decreased on the last step it never comes back down.
    let mut prev = e0;
    let mut j = 1;
    loop {
        let e = probe(j, &mut out);
        if e > cutoff && e >= prev {
            break;
        }
        prev = e;
        j += 1;
    }
    prev = e0;
    j = -1;
    loop {
        let e = probe(j, &mut out);
        if e > cutoff && e >= prev {
            break;
        }
        prev = e;
        j -= 1;
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_r_equals_s_cancels() {
        // r = s = 1: exponent j(j+1)/2 is symmetric under j -> -j-1 with
        // opposite signs, so every term cancels.
        let grid = Grid::integer(40);
        let (sum, product) = triple_product(1, 1, grid).unwrap();
        assert!(sum.is_zero());
        assert!(product.is_zero());
    }

    #[test]
    fn window_is_exhaustive() {
        // Quadratic 3j(j-1)/2 + 2j on an integer grid; brute force the range.
        let grid = Grid::integer(100);
        let got = bilateral_window(|j| exponent_units(2, 3, j, grid), 100);
        let want: Vec<i64> =
            (-60..=60).filter(|&j| 3 * j * (j - 1) / 2 + 2 * j <= 100).collect();
        assert_eq!(got, want);
    }
}
