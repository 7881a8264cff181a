//! Gaussian polynomials (q-binomial coefficients).
//!
//! [A choose B]_q = (q)_A / ((q)_B (q)_{A-B}) for 0 <= B <= A, and 0
//! otherwise. Always an exact polynomial of degree B(A-B) with positive
//! integer coefficients.
//!
//! The level-N sums evaluate the same small binomials over and over, so the
//! full coefficient tables are memoised process-wide behind a mutex (values
//! are shared immutably once computed).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::grid::Grid;
use crate::series::QSeries;

/// The Gaussian polynomial [A choose B]_q on `grid`.
///
/// Returns the exactly-zero series outside 0 <= B <= A.
pub fn gaussian(a: i64, b: i64, grid: Grid) -> QSeries {
    if b < 0 || b > a {
        return QSeries::zero_exact(grid);
    }
    let coeffs = table(a as u32, b as u32);
    let d = grid.denom();
    // Re-grid the integer-exponent table onto D; build the dense vector
    // directly instead of summing monomials.
    if d == 1 {
        return QSeries::from_coeffs(grid, 0, coeffs.as_ref().clone(), true);
    }
    let mut spread = vec![BigInt::zero(); (coeffs.len() - 1) * d as usize + 1];
    for (i, c) in coeffs.iter().enumerate() {
        spread[i * d as usize] = c.clone();
    }
    QSeries::from_coeffs(grid, 0, spread, true)
}

type Cache = Mutex<HashMap<(u32, u32), Arc<Vec<BigInt>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Full coefficient table of [a choose b]_q at integer exponents 0..=b(a-b).
fn table(a: u32, b: u32) -> Arc<Vec<BigInt>> {
    debug_assert!(b <= a);
    let b = b.min(a - b); // symmetry: smaller side has the same table
    if let Some(hit) = cache().lock().unwrap().get(&(a, b)) {
        return hit.clone();
    }
    let value = if b == 0 {
        Arc::new(vec![BigInt::one()])
    } else {
        // [A choose B] = [A-1 choose B] + q^{A-B} [A-1 choose B-1]
        let low = table(a - 1, b);
        let high = table(a - 1, b - 1);
        let shift = (a - b) as usize;
        let len = (b * (a - b)) as usize + 1;
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in low.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in high.iter().enumerate() {
            out[i + shift] += c;
        }
        Arc::new(out)
    };
    cache().lock().unwrap().insert((a, b), value.clone());
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn base_cases() {
        let grid = Grid::integer(30);
        assert_eq!(gaussian(1, 0, grid), QSeries::one(grid));
        assert_eq!(gaussian(0, 0, grid), QSeries::one(grid));
        assert!(gaussian(3, 5, grid).is_zero());
        assert!(gaussian(4, -1, grid).is_zero());
    }

    #[test]
    fn four_choose_two() {
        // [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4
        let grid = Grid::integer(30);
        let g = gaussian(4, 2, grid);
        let expect = [1, 1, 2, 1, 1];
        for (e, c) in expect.iter().enumerate() {
            assert_eq!(g.coeff_at_units(e as i64).unwrap().to_i64().unwrap(), *c);
        }
        assert_eq!(g.coeff_at_units(5).unwrap(), BigInt::zero());
    }

    #[test]
    fn degree_is_b_times_a_minus_b() {
        let grid = Grid::integer(200);
        for a in 0..=12i64 {
            for b in 0..=a {
                let g = gaussian(a, b, grid);
                let deg = g.iter_nonzero().last().map(|(u, _)| u).unwrap();
                assert_eq!(deg, b * (a - b));
            }
        }
    }
}
