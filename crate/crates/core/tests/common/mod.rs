//! Independent oracles shared by the integration and acceptance tests.
//!
//! Everything here is deliberately primitive (dynamic programming, direct
//! expansion, long division) and shares no code path with the series
//! engine it checks.
//!
//! Not every test binary uses every oracle.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// p(n) for n = 0..=bound: unrestricted partition counts by the classic
/// coin-style DP over part sizes.
pub fn partition_counts(bound: usize) -> Vec<BigInt> {
    partition_counts_with_parts(bound, &(1..=bound.max(1)).collect::<Vec<_>>())
}

/// Partition counts where parts are restricted to the given sizes.
pub fn partition_counts_with_parts(bound: usize, parts: &[usize]) -> Vec<BigInt> {
    let mut table = vec![BigInt::zero(); bound + 1];
    table[0] = BigInt::one();
    for &p in parts {
        if p == 0 || p > bound {
            continue;
        }
        for n in p..=bound {
            let add = table[n - p].clone();
            table[n] += add;
        }
    }
    table
}

/// Partition counts with parts congruent to one of `residues` mod `modulus`.
pub fn partition_counts_residues(bound: usize, modulus: usize, residues: &[usize]) -> Vec<BigInt> {
    let parts: Vec<usize> =
        (1..=bound).filter(|p| residues.contains(&(p % modulus))).collect();
    partition_counts_with_parts(bound, &parts)
}

/// Coefficients of prod_{k>=1} (1 - q^k) up to `bound`, by Euler's
/// pentagonal recurrence run as a direct sieve: coefficient is (-1)^j at
/// the generalized pentagonal numbers j(3j-1)/2 (j in Z), else 0.
pub fn pentagonal_coeffs(bound: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); bound + 1];
    let mut j: i64 = 0;
    loop {
        let mut hit = false;
        for jj in [j, -j] {
            let e = jj * (3 * jj - 1) / 2;
            if e >= 0 && (e as usize) <= bound {
                let sign = if jj.rem_euclid(2) == 0 { 1 } else { -1 };
                out[e as usize] = BigInt::from(sign);
                hit = true;
            }
            if jj == 0 {
                break;
            }
        }
        if !hit && j > 0 {
            break;
        }
        j += 1;
    }
    out
}

/// Dense integer-coefficient polynomial with index = exponent.
pub type Poly = Vec<BigInt>;

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Exact long division; panics if the division leaves a remainder.
pub fn poly_div_exact(num: &Poly, den: &Poly) -> Poly {
    let ddeg = den.iter().rposition(|c| !c.is_zero()).expect("division by zero polynomial");
    let ndeg = match num.iter().rposition(|c| !c.is_zero()) {
        Some(d) => d,
        None => return Vec::new(),
    };
    assert!(ndeg >= ddeg, "degree too small for exact division");
    let lead = den[ddeg].clone();
    let mut rem = num.clone();
    let mut quot = vec![BigInt::zero(); ndeg - ddeg + 1];
    for k in (0..=ndeg - ddeg).rev() {
        let c = rem[k + ddeg].clone();
        if c.is_zero() {
            continue;
        }
        let (q, r) = num_integer::Integer::div_rem(&c, &lead);
        assert!(r.is_zero(), "non-exact polynomial division");
        quot[k] = q.clone();
        for (i, d) in den.iter().enumerate() {
            if !d.is_zero() {
                let sub = &q * d;
                rem[k + i] -= sub;
            }
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division (remainder)");
    quot
}

/// (q)_n as a dense polynomial.
pub fn q_factorial_poly(n: usize) -> Poly {
    let mut acc = vec![BigInt::one()];
    for k in 1..=n {
        let mut factor = vec![BigInt::zero(); k + 1];
        factor[0] = BigInt::one();
        factor[k] = -BigInt::one();
        acc = poly_mul(&acc, &factor);
    }
    acc
}
