//! Series kernel tests against independent oracles, plus algebraic
//! property tests.

mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use qbailey_core::*;

fn poly_series(grid: Grid, coeffs: &[i64]) -> QSeries {
    let mut s = QSeries::zero_exact(grid);
    for (e, &c) in coeffs.iter().enumerate() {
        s = s.add(&QSeries::monomial(grid, BigInt::from(c), grid.units(e as i64, 1).unwrap()));
    }
    s
}

fn oracle_series(grid: Grid, coeffs: &[BigInt]) -> QSeries {
    let mut s = QSeries::zero(grid);
    for (e, c) in coeffs.iter().enumerate() {
        s = s.add(&QSeries::monomial(grid, c.clone(), grid.units(e as i64, 1).unwrap()));
    }
    s
}

fn q_inf(grid: Grid) -> QSeries {
    pochhammer(&QPower::q_power(1), Order::Infinite, grid).unwrap()
}

// ---------------------------------------------------------------------------
// add / mul / invert against the oracles
// ---------------------------------------------------------------------------

#[test]
fn add_pentagonal_plus_partition_gf() {
    let t = 5usize;
    let grid = Grid::integer(t as i64);
    let pent = q_inf(grid);
    let partition_gf = q_inf(grid).invert().unwrap();
    let sum = pent.add(&partition_gf);
    // Term-wise addition of the two oracle tables.
    let pent_oracle = pentagonal_coeffs(t);
    let part_oracle = partition_counts(t);
    for e in 0..=t {
        let want = &pent_oracle[e] + &part_oracle[e];
        assert_eq!(sum.coeff_at_units(e as i64).unwrap(), want, "coefficient of q^{e}");
    }
}

#[test]
fn mul_three_factor_expansion() {
    // (1-q)(1-q^2)(1-q^3) = 1 - q - q^2 + q^4 + q^5 - q^6.
    let grid = Grid::integer(10);
    let p = poly_series(grid, &[1, -1])
        .mul(&poly_series(grid, &[1, 0, -1]))
        .mul(&poly_series(grid, &[1, 0, 0, -1]));
    assert_eq!(p, poly_series(grid, &[1, -1, -1, 0, 1, 1, -1]));
}

#[test]
fn invert_euler_product_gives_partition_numbers() {
    let t = 40usize;
    let grid = Grid::integer(t as i64);
    let inv = q_inf(grid).invert().unwrap();
    let oracle = partition_counts(t);
    for (e, want) in oracle.iter().enumerate() {
        assert_eq!(inv.coeff_at_units(e as i64).unwrap(), *want, "p({e})");
    }
}

#[test]
fn pochhammer_infinite_is_pentagonal_series() {
    let t = 200usize;
    let grid = Grid::integer(t as i64);
    let p = q_inf(grid);
    let oracle = pentagonal_coeffs(t);
    for (e, want) in oracle.iter().enumerate() {
        assert_eq!(p.coeff_at_units(e as i64).unwrap(), *want, "coefficient of q^{e}");
    }
}

#[test]
fn pochhammer_finite_at_twelve() {
    // (q)_inf and (q)_12 agree up to q^12.
    let grid = Grid::integer(12);
    let fin = pochhammer(&QPower::q_power(1), Order::Finite(12), grid).unwrap();
    assert!(fin.eq_up_to(&q_inf(grid), grid.cutoff()));
}

// ---------------------------------------------------------------------------
// Gaussian polynomials against the long-division oracle
// ---------------------------------------------------------------------------

#[test]
fn gaussian_matches_exact_division() {
    let grid = Grid::integer(500);
    for a in 0..=10i64 {
        for b in 0..=a {
            let oracle = poly_div_exact(
                &q_factorial_poly(a as usize),
                &poly_mul(&q_factorial_poly(b as usize), &q_factorial_poly((a - b) as usize)),
            );
            let got = gaussian(a, b, grid);
            assert_eq!(got, oracle_series(grid, &oracle), "[{a} choose {b}]");
        }
    }
}

#[test]
fn gaussian_symmetry_and_recurrence() {
    let grid = Grid::integer(500);
    for a in 1..=20i64 {
        for b in 0..=a {
            assert_eq!(gaussian(a, b, grid), gaussian(a, a - b, grid), "symmetry {a},{b}");
            if b >= 1 {
                let rec = gaussian(a - 1, b, grid).add_shifted(
                    &gaussian(a - 1, b - 1, grid),
                    grid.units(a - b, 1).unwrap(),
                );
                assert_eq!(gaussian(a, b, grid), rec, "recurrence {a},{b}");
            }
        }
    }
}

#[test]
fn gaussian_at_one_is_binomial() {
    let grid = Grid::integer(500);
    for a in 0..=20i64 {
        let mut binom = BigInt::from(1);
        for b in 0..=a {
            assert_eq!(gaussian(a, b, grid).eval_at_one(), binom, "C({a},{b})");
            // C(a, b+1) = C(a, b) * (a-b) / (b+1)
            binom = binom * BigInt::from(a - b) / BigInt::from(b + 1);
        }
    }
}

// ---------------------------------------------------------------------------
// Triple product
// ---------------------------------------------------------------------------

#[test]
fn triple_product_two_three_is_euler_product() {
    let grid = Grid::integer(40);
    let (sum, product) = triple_product(2, 3, grid).unwrap();
    let oracle = oracle_series(grid, &pentagonal_coeffs(40));
    assert!(sum.eq_up_to(&oracle, grid.cutoff()));
    assert!(product.eq_up_to(&oracle, grid.cutoff()));
}

#[test]
fn triple_product_two_five_to_forty() {
    let grid = Grid::integer(40);
    let (sum, product) = triple_product(2, 5, grid).unwrap();
    assert!(sum.eq_up_to(&product, grid.cutoff()));
}

#[test]
fn triple_product_grid_to_sixty() {
    let grid = Grid::integer(60);
    for s in 1..=6i64 {
        for r in 1..s {
            let (sum, product) = triple_product(r, s, grid).unwrap();
            assert!(sum.eq_up_to(&product, grid.cutoff()), "r={r} s={s}");
        }
    }
}

// ---------------------------------------------------------------------------
// Algebraic properties
// ---------------------------------------------------------------------------

/// Random exact polynomial with unit lowest coefficient.
fn unit_series_strategy(grid: Grid) -> impl Strategy<Value = QSeries> {
    (
        prop::collection::vec(-9i64..=9, 0..12),
        prop::bool::ANY,
        0i64..4,
    )
        .prop_map(move |(tail, neg, shift)| {
            let mut coeffs = vec![if neg { -1i64 } else { 1 }];
            coeffs.extend(tail);
            let mut s = QSeries::zero_exact(grid);
            for (e, &c) in coeffs.iter().enumerate() {
                s = s.add(&QSeries::monomial(grid, BigInt::from(c), shift + e as i64));
            }
            s
        })
}

fn arbitrary_series(grid: Grid) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(-9i64..=9, 0..12).prop_map(move |coeffs| {
        let mut s = QSeries::zero(grid);
        for (e, &c) in coeffs.iter().enumerate() {
            s = s.add(&QSeries::monomial(grid, BigInt::from(c), e as i64));
        }
        s
    })
}

proptest! {
    #[test]
    fn mul_commutes(a in arbitrary_series(Grid::integer(24)), b in arbitrary_series(Grid::integer(24))) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn add_commutes(a in arbitrary_series(Grid::integer(24)), b in arbitrary_series(Grid::integer(24))) {
        prop_assert_eq!(a.add(&b), b.add(&a));
    }

    #[test]
    fn mul_associates(
        a in arbitrary_series(Grid::integer(24)),
        b in arbitrary_series(Grid::integer(24)),
        c in arbitrary_series(Grid::integer(24)),
    ) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn add_associates(
        a in arbitrary_series(Grid::integer(24)),
        b in arbitrary_series(Grid::integer(24)),
        c in arbitrary_series(Grid::integer(24)),
    ) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn mul_distributes(
        a in arbitrary_series(Grid::integer(24)),
        b in arbitrary_series(Grid::integer(24)),
        c in arbitrary_series(Grid::integer(24)),
    ) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn invert_round_trips(s in unit_series_strategy(Grid::integer(48))) {
        let inv = s.invert().unwrap();
        let back = s.mul(&inv);
        let through = back.validity().unwrap_or(48);
        prop_assert!(back.eq_up_to(&QSeries::one(Grid::integer(48)), through));
    }
}
