//! Classic identity assemblies: the Andrews-Gordon family.
//!
//! The Andrews-Gordon identity at depth k, relative to a = q^ell
//! (ell in {0, 1}):
//!
//!   (1/(q)_inf) sum_{j in Z} (-1)^j q^{((2k+3)j+1)j/2} a^{jk}
//!     = sum_{n_1 >= ... >= n_k >= 0}
//!         q^{n_1^2+...+n_k^2} a^{n_1+...+n_k} / [(q)_{n_1-n_2}...(q)_{n_k}],
//!
//! which at k = 1 is the Rogers-Ramanujan pair of identities. Both sides are
//! evaluated independently: the left side as a bilateral theta sum, the
//! right side by exhaustive enumeration of the tuple sum with a provable
//! exponent bound (each term's minimal exponent is the explicit quadratic,
//! so truncation never depends on scan order).

use num_bigint::BigInt;

use crate::bailey::InversePochhammer;
use crate::error::Result;
use crate::grid::Grid;
use crate::pochhammer::{pochhammer, Order};
use crate::products::bilateral_window;
use crate::qpower::QPower;
use crate::series::QSeries;

/// Both sides of the Andrews-Gordon identity for depth `k >= 1` and
/// `ell in {0, 1}`, truncated at the grid cutoff.
pub fn ag_identity_sides(k: i64, ell: i64, grid: Grid) -> Result<(QSeries, QSeries)> {
    if k < 1 {
        return Err(crate::error::Error::InvalidParameter(format!(
            "Andrews-Gordon depth must be >= 1, got {k}"
        )));
    }
    if ell != 0 && ell != 1 {
        return Err(crate::error::Error::InvalidParameter(format!(
            "the identity holds for a = 1 or a = q (ell 0 or 1), got ell = {ell}"
        )));
    }
    let cutoff = grid.cutoff();

    // Left side: (1/(q)_inf) * sum_j (-1)^j q^{((2k+3)j+1)j/2 + ell*k*j}.
    let exponent = |j: i64| -> Result<i64> {
        grid.units(((2 * k + 3) * j + 1) * j / 2 + ell * k * j, 1)
    };
    let mut theta = QSeries::zero(grid);
    for j in bilateral_window(exponent, cutoff) {
        let sign = if j.rem_euclid(2) == 0 { 1 } else { -1 };
        theta = theta.add(&QSeries::monomial(grid, BigInt::from(sign), exponent(j)?));
    }
    let q_inf = pochhammer(&QPower::q_power(1), Order::Infinite, grid)?;
    let lhs = theta.mul(&q_inf.invert()?);

    // Right side: multisum over n_1 >= ... >= n_k >= 0 with term exponent
    // floor n_1^2 + ... + n_k^2 + ell*(n_1 + ... + n_k).
    let n1_bound = isqrt(cutoff / grid.denom()) + 1;
    let inv_q = InversePochhammer::new(0, n1_bound, grid);
    let mut rhs = QSeries::zero(grid);
    let mut tuple = vec![0i64; k as usize];
    sum_tuples(&mut tuple, 0, i64::MAX, 0, ell, grid, &inv_q, &mut rhs);

    let mut lhs = lhs;
    lhs.truncate_units(cutoff);
    rhs.truncate_units(cutoff);
    debug_assert!(lhs.integer_exponents_only() && rhs.integer_exponents_only());
    Ok((lhs, rhs))
}

/// Recursive tuple enumeration: position `pos` ranges over 0..=prev with the
/// exponent floor accumulated so far; a branch is pruned as soon as its
/// floor exceeds the cutoff.
#[allow(clippy::too_many_arguments)]
fn sum_tuples(
    tuple: &mut Vec<i64>,
    pos: usize,
    prev: i64,
    floor_units: i64,
    ell: i64,
    grid: Grid,
    inv_q: &InversePochhammer,
    acc: &mut QSeries,
) {
    let k = tuple.len();
    if pos == k {
        // Term: q^{sum n_i^2 + ell sum n_i} / [(q)_{n_1-n_2}...(q)_{n_k}].
        let mut term = QSeries::one(grid);
        for i in 0..k {
            let diff = if i + 1 < k { tuple[i] - tuple[i + 1] } else { tuple[i] };
            term = term.mul(inv_q.get(diff));
        }
        *acc = acc.add_shifted(&term, floor_units);
        return;
    }
    for n in 0..=prev {
        let add = grid.units(n * n + ell * n, 1).expect("integer exponent");
        let floor = floor_units + add;
        if floor > grid.cutoff() {
            break;
        }
        tuple[pos] = n;
        sum_tuples(tuple, pos + 1, n, floor, ell, grid, inv_q, acc);
    }
    // Restore so siblings see a clean slate (cosmetic; every entry is
    // overwritten before use).
    tuple[pos] = 0;
}

pub(crate) fn isqrt(v: i64) -> i64 {
    debug_assert!(v >= 0);
    let mut r = (v as f64).sqrt() as i64;
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    while r > 0 && r * r > v {
        r -= 1;
    }
    r
}
