//! Bailey pairs, the Bailey transform, the chain, and (delta, gamma) pairs.
//!
//! A pair of sequences (alpha, beta) forms a Bailey pair relative to
//! a = q^ell when
//!
//!   beta_L = sum_{k=0}^{L} alpha_k / [(q)_{L-k} (aq)_{L+k}],          (pair relation)
//!
//! and a pair (gamma, delta) is conjugate when
//!
//!   gamma_L = sum_{k=L}^{M} delta_k / [(q)_{k-L} (aq)_{k+L}].         (conjugate relation)
//!
//! Whenever both relations hold, the bilinear identity
//!
//!   sum_L alpha_L gamma_L = sum_L beta_L delta_L
//!
//! follows, and choosing explicit families for (gamma, delta) turns known
//! pairs into q-series identities. This module carries the classic family
//! (from the q-Saalschuetz sum), its two-parameter (rho_1, rho_2) extension,
//! the unit pair, and one step of the Bailey chain.
//!
//! Pairs and families store fully evaluated coefficient tables, so every
//! verification is a reproducible snapshot of series data rather than a
//! re-evaluation of closures.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::pochhammer::{pochhammer, Order};
use crate::qpower::QPower;
use crate::report::{IdentityId, IdentityReport, ReportParams};
use crate::series::QSeries;

/// A Bailey pair relative to `a = q^ell`, tabulated for 0 <= L <= l_max.
#[derive(Clone, Debug)]
pub struct BaileyPair {
    pub ell: i64,
    pub alpha: Vec<QSeries>,
    pub beta: Vec<QSeries>,
    /// Provenance label, e.g. "unit" or "unit-chained-2".
    pub label: String,
}

impl BaileyPair {
    pub fn l_max(&self) -> i64 {
        self.alpha.len() as i64 - 1
    }
}

/// Which construction produced a (delta, gamma) family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyVariant {
    Classic,
    Rho,
    LevelN,
}

/// A conjugate (delta, gamma) family, tabulated for 0 <= L <= m
/// (both sequences vanish for L > m).
#[derive(Clone, Debug)]
pub struct DeltaGammaFamily {
    pub variant: FamilyVariant,
    pub m: i64,
    pub ell: i64,
    /// Level parameter; 1 for the classic and rho families.
    pub level: i64,
    pub rho: Option<(RhoParam, RhoParam)>,
    pub delta: Vec<QSeries>,
    pub gamma: Vec<QSeries>,
}

/// One of the two continuous parameters of the two-parameter family:
/// either a signed q-power or the infinite limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhoParam {
    Finite(QPower),
    Infinite,
}

impl std::fmt::Display for RhoParam {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RhoParam::Finite(p) => write!(f, "{p}"),
            RhoParam::Infinite => write!(f, "inf"),
        }
    }
}

// ---------------------------------------------------------------------------
// Shared Pochhammer caches
// ---------------------------------------------------------------------------

/// Inverses 1/(q^{shift+1}; q)_n for n = 0..=n_max, all at cutoff
/// `grid.cutoff()`. The transform sums reuse these constantly.
pub(crate) struct InversePochhammer {
    inv: Vec<QSeries>,
}

impl InversePochhammer {
    pub(crate) fn new(shift: i64, n_max: i64, grid: Grid) -> InversePochhammer {
        let mut inv = Vec::with_capacity(n_max.max(0) as usize + 1);
        let mut product = QSeries::one(grid);
        inv.push(product.invert().expect("unit product"));
        for k in 1..=n_max {
            let factor = QSeries::one_minus(
                grid,
                BigInt::from(1),
                grid.units(shift + k, 1).expect("integer exponent"),
            );
            product = product.mul(&factor);
            let mut p = product.clone();
            p.truncate_units(grid.cutoff());
            inv.push(p.invert().expect("unit product"));
        }
        InversePochhammer { inv }
    }

    pub(crate) fn get(&self, n: i64) -> &QSeries {
        &self.inv[n as usize]
    }
}

// ---------------------------------------------------------------------------
// The transform in both directions
// ---------------------------------------------------------------------------

/// beta_L = sum_{k=0}^{L} alpha_k / [(q)_{L-k} (q^{ell+1})_{L+k}]
/// for L = 0..alpha.len().
pub fn beta_from_alpha(alpha: &[QSeries], ell: i64, grid: Grid) -> Vec<QSeries> {
    let l_max = alpha.len() as i64 - 1;
    let inv_q = InversePochhammer::new(0, l_max, grid);
    let inv_aq = InversePochhammer::new(ell, 2 * l_max, grid);
    let mut beta = Vec::with_capacity(alpha.len());
    for l in 0..=l_max {
        let mut acc = QSeries::zero(grid);
        for k in 0..=l {
            let term = alpha[k as usize].mul(inv_q.get(l - k)).mul(inv_aq.get(l + k));
            acc = acc.add(&term);
        }
        beta.push(acc);
    }
    beta
}

/// gamma_L = sum_{k=L}^{M} delta_k / [(q)_{k-L} (q^{ell+1})_{k+L}]
/// for L = 0..delta.len(); the sum is finite because delta vanishes
/// beyond M = delta.len() - 1.
///
/// Denominator inverses are taken on a guard grid deep enough to absorb any
/// negative exponents in the delta table, so every returned gamma_L is valid
/// through the full grid cutoff.
pub fn gamma_from_delta(delta: &[QSeries], ell: i64, grid: Grid) -> Vec<QSeries> {
    let m = delta.len() as i64 - 1;
    let depth = delta.iter().map(|d| (-d.offset()).max(0)).max().unwrap_or(0);
    let deep = grid.with_extra_units(depth);
    let inv_q = InversePochhammer::new(0, m, deep);
    let inv_aq = InversePochhammer::new(ell, 2 * m, deep);
    let mut gamma = Vec::with_capacity(delta.len());
    for l in 0..=m {
        let mut acc = QSeries::zero(grid);
        for k in l..=m {
            let term = delta[k as usize].mul(inv_q.get(k - l)).mul(inv_aq.get(k + l));
            acc = acc.add(&term.truncated(grid.cutoff()));
        }
        gamma.push(acc);
    }
    gamma
}

/// Check the defining pair relation for every L in the table.
///
/// Returns the first failing index with the mismatch exponent, or Ok(()).
pub fn verify_pair(pair: &BaileyPair, grid: Grid) -> std::result::Result<(), String> {
    let recomputed = beta_from_alpha(&pair.alpha, pair.ell, grid);
    for (l, (got, want)) in recomputed.iter().zip(&pair.beta).enumerate() {
        let through = bounded_through(got, want, grid);
        if let Some((e, a, b)) = want.first_mismatch_up_to(got, through) {
            return Err(format!(
                "pair relation fails at L = {l}: coefficient of q^{} is {a} in beta, {b} from alpha",
                e.reduced()
            ));
        }
    }
    Ok(())
}

fn bounded_through(a: &QSeries, b: &QSeries, grid: Grid) -> i64 {
    let mut t = grid.cutoff();
    if let Some(v) = a.validity() {
        t = t.min(v);
    }
    if let Some(v) = b.validity() {
        t = t.min(v);
    }
    t
}

/// Evaluate both sides of the bilinear identity
/// `sum alpha_L gamma_L = sum beta_L delta_L` and report the comparison.
pub fn bilinear_check(pair: &BaileyPair, family: &DeltaGammaFamily, grid: Grid) -> Result<IdentityReport> {
    if pair.ell != family.ell {
        return Err(Error::EllMismatch { pair_ell: pair.ell, family_ell: family.ell });
    }
    if pair.l_max() < family.m {
        return Err(Error::InvalidParameter(format!(
            "pair table stops at L = {} but the family needs L = {}",
            pair.l_max(),
            family.m
        )));
    }
    let mut lhs = QSeries::zero(grid);
    let mut rhs = QSeries::zero(grid);
    for l in 0..=family.m as usize {
        lhs = lhs.add(&pair.alpha[l].mul(&family.gamma[l]));
        rhs = rhs.add(&pair.beta[l].mul(&family.delta[l]));
    }
    let through = bounded_through(&lhs, &rhs, grid);
    let params = ReportParams {
        n: Some(family.level),
        ell: Some(family.ell),
        m: Some(family.m),
        l_max: Some(pair.l_max()),
        detail: Some(format!("bilinear:{}:{:?}", pair.label, family.variant)),
        ..ReportParams::default()
    };
    Ok(IdentityReport::from_comparison(IdentityId::PairCheck, params, grid, &lhs, &rhs, through))
}

// ---------------------------------------------------------------------------
// The unit pair and the chain
// ---------------------------------------------------------------------------

/// The unit Bailey pair relative to a = q^ell:
///
///   alpha_0 = 1,
///   alpha_L = (-1)^L (1 - q^{ell+2L}) (q^{ell+1})_{L-1} q^{L(L-1)/2} / (q)_L,
///   beta_L  = delta_{L,0}.
///
/// The factor (q^{ell+1})_{L-1} is the singular ratio (a)_L / (1 - a)
/// resolved by cancellation, which is what makes the ell = 0 case (a = 1)
/// well defined.
pub fn unit_pair(ell: i64, l_max: i64, grid: Grid) -> BaileyPair {
    assert!(ell >= 0, "unit pair requires ell >= 0");
    assert!(l_max >= 0);
    let inv_q = InversePochhammer::new(0, l_max, grid);
    let mut alpha = Vec::with_capacity(l_max as usize + 1);
    let mut beta = Vec::with_capacity(l_max as usize + 1);
    alpha.push(QSeries::one(grid));
    beta.push(QSeries::one(grid));
    for l in 1..=l_max {
        let sign = if l % 2 == 0 { 1 } else { -1 };
        let head = QSeries::monomial(
            grid,
            BigInt::from(sign),
            grid.units(l * (l - 1) / 2, 1).expect("integer exponent"),
        );
        let bracket = QSeries::one_minus(grid, BigInt::from(1), grid.units(ell + 2 * l, 1).expect("integer exponent"));
        let aq_poch = pochhammer(&QPower::q_power(ell + 1), Order::Finite(l as u32 - 1), grid)
            .expect("finite product");
        let a_l = head.mul(&bracket).mul(&aq_poch).mul(inv_q.get(l));
        alpha.push(a_l);
        beta.push(QSeries::zero(grid));
    }
    BaileyPair { ell, alpha, beta, label: "unit".into() }
}

/// One step of the Bailey chain:
///
///   alpha'_L = q^{L^2} a^L alpha_L,
///   beta'_L  = sum_{k=0}^{L} q^{k^2} a^k beta_k / (q)_{L-k},
///
/// with a = q^ell. The result is again a Bailey pair relative to the same a.
pub fn chain_step(pair: &BaileyPair, grid: Grid) -> BaileyPair {
    let l_max = pair.l_max();
    let inv_q = InversePochhammer::new(0, l_max, grid);
    let mut alpha = Vec::with_capacity(pair.alpha.len());
    let mut beta = Vec::with_capacity(pair.beta.len());
    for l in 0..=l_max {
        let w = weight_units(l, pair.ell, grid);
        alpha.push(QSeries::zero(grid).add_shifted(&pair.alpha[l as usize], w));
        let mut acc = QSeries::zero(grid);
        for k in 0..=l {
            let term = pair.beta[k as usize].mul(inv_q.get(l - k));
            acc = acc.add_shifted(&term, weight_units(k, pair.ell, grid));
        }
        beta.push(acc);
    }
    BaileyPair {
        ell: pair.ell,
        alpha,
        beta,
        label: chained_label(&pair.label),
    }
}

/// Grid units of q^{L^2} a^L = q^{L^2 + ell*L}.
fn weight_units(l: i64, ell: i64, grid: Grid) -> i64 {
    grid.units(l * l + ell * l, 1).expect("integer exponent")
}

fn chained_label(label: &str) -> String {
    match label.rsplit_once("-chained-") {
        Some((base, n)) => match n.parse::<u32>() {
            Ok(k) => format!("{base}-chained-{}", k + 1),
            Err(_) => format!("{label}-chained-1"),
        },
        None => format!("{label}-chained-1"),
    }
}

// ---------------------------------------------------------------------------
// The classic (delta, gamma) family
// ---------------------------------------------------------------------------

/// The q-Saalschuetz family relative to a = q^ell:
///
///   delta_L = q^{L^2} a^L / (q)_{M-L},
///   gamma_L = q^{L^2} a^L / [(q)_{M-L} (aq)_{M+L}],
///
/// for 0 <= L <= M (zero beyond).
pub fn classic_delta_gamma(m: i64, ell: i64, grid: Grid) -> DeltaGammaFamily {
    assert!(m >= 0);
    assert!(ell >= 0);
    let inv_q = InversePochhammer::new(0, m, grid);
    let inv_aq = InversePochhammer::new(ell, 2 * m, grid);
    let mut delta = Vec::with_capacity(m as usize + 1);
    let mut gamma = Vec::with_capacity(m as usize + 1);
    for l in 0..=m {
        let w = weight_units(l, ell, grid);
        delta.push(QSeries::zero(grid).add_shifted(inv_q.get(m - l), w));
        gamma.push(QSeries::zero(grid).add_shifted(&inv_q.get(m - l).mul(inv_aq.get(m + l)), w));
    }
    DeltaGammaFamily { variant: FamilyVariant::Classic, m, ell, level: 1, rho: None, delta, gamma }
}

// ---------------------------------------------------------------------------
// The two-parameter (rho_1, rho_2) family
// ---------------------------------------------------------------------------

/// The two-parameter conjugate family relative to a = q^ell, normalised by
/// the L-independent factor (aq/rho_1)_M (aq/rho_2)_M so that every
/// coefficient stays an integer:
///
///   delta_L = (rho_1)_L (rho_2)_L (aq/rho_1 rho_2)^L
///             * (aq/rho_1 rho_2)_{M-L} / (q)_{M-L},
///
///   gamma_L = (rho_1)_L (rho_2)_L (aq/rho_1 rho_2)^L
///             * (a q^{L+1}/rho_1)_{M-L} (a q^{L+1}/rho_2)_{M-L}
///             / [(q)_{M-L} (aq)_{M+L}].
///
/// The conjugate relation is invariant under scaling both sequences by the
/// same L-independent series, so this family satisfies it exactly; unlike
/// the unnormalised form it stays finite at specialisations where
/// (aq/rho_i)_M has a vanishing or non-unit factor. Passing
/// [`RhoParam::Infinite`] for a parameter applies the limit
/// (rho)_L (1/rho)^L -> (-1)^L q^{L(L-1)/2}; both parameters infinite
/// reproduces [`classic_delta_gamma`].
pub fn rho_delta_gamma(
    m: i64,
    ell: i64,
    rho1: RhoParam,
    rho2: RhoParam,
    grid: Grid,
) -> Result<DeltaGammaFamily> {
    assert!(m >= 0);
    assert!(ell >= 0);
    let aq = QPower::q_power(ell + 1);

    // a*q / (product of the finite rhos): the base of the L-th power factor
    // and of the (aq/rho1 rho2)_{M-L} tail.
    let mut x = aq;
    for r in [rho1, rho2] {
        if let RhoParam::Finite(p) = r {
            x = x.div(&p);
        }
    }
    let any_infinite = matches!(rho1, RhoParam::Infinite) || matches!(rho2, RhoParam::Infinite);

    // Laurent depth of the exact polynomial parts, used to size the guard
    // grid for the unit-series inversions.
    let depth = family_depth(m, ell, rho1, rho2, &x, any_infinite, grid)?;
    let deep = grid.with_extra_units(depth);
    let inv_q = InversePochhammer::new(0, m, deep);
    let inv_aq = InversePochhammer::new(ell, 2 * m, deep);

    let mut delta = Vec::with_capacity(m as usize + 1);
    let mut gamma = Vec::with_capacity(m as usize + 1);
    for l in 0..=m {
        // (rho_1)_L (rho_2)_L (aq/rho_1 rho_2)^L, with infinite parameters
        // contributing their limit factor (-1)^L q^{L(L-1)/2}.
        let mut prefactor = QSeries::one(deep);
        let mut power_exponent = x.exponent() * num_rational::Ratio::from_integer(l);
        let mut power_sign: i8 = if l % 2 == 0 { 1 } else { x.sign() };
        for r in [rho1, rho2] {
            match r {
                RhoParam::Finite(p) => {
                    prefactor = prefactor.mul(&pochhammer(&p, Order::Finite(l as u32), deep)?);
                }
                RhoParam::Infinite => {
                    power_exponent += num_rational::Ratio::from_integer(l * (l - 1) / 2);
                    if l % 2 != 0 {
                        power_sign = -power_sign;
                    }
                }
            }
        }
        let power_units = deep.units(*power_exponent.numer(), *power_exponent.denom())?;
        let power = QSeries::monomial(deep, BigInt::from(power_sign), power_units);
        prefactor = prefactor.mul(&power);

        // delta tail: (aq/rho1 rho2)_{M-L}, degenerating to 1 when either
        // parameter is infinite.
        let delta_tail = if any_infinite {
            QSeries::one(deep)
        } else {
            pochhammer(&x, Order::Finite((m - l) as u32), deep)?
        };
        let d = prefactor.mul(&delta_tail).mul(inv_q.get(m - l));
        delta.push(d.truncated(grid.cutoff()));

        // gamma tail: (a q^{L+1}/rho_i)_{M-L} for each finite parameter.
        let mut gamma_tail = QSeries::one(deep);
        for r in [rho1, rho2] {
            if let RhoParam::Finite(p) = r {
                let base = QPower::q_power(ell + l + 1).div(&p);
                gamma_tail = gamma_tail.mul(&pochhammer(&base, Order::Finite((m - l) as u32), deep)?);
            }
        }
        let g = prefactor.mul(&gamma_tail).mul(inv_q.get(m - l)).mul(inv_aq.get(m + l));
        gamma.push(g.truncated(grid.cutoff()));
    }
    Ok(DeltaGammaFamily {
        variant: FamilyVariant::Rho,
        m,
        ell,
        level: 1,
        rho: Some((rho1, rho2)),
        delta,
        gamma,
    })
}

/// Upper bound on the negative exponent depth of any product term of the
/// family: factor depths are summed, since minimal exponents of a product
/// add.
fn family_depth(
    m: i64,
    ell: i64,
    rho1: RhoParam,
    rho2: RhoParam,
    x: &QPower,
    any_infinite: bool,
    grid: Grid,
) -> Result<i64> {
    // Minimal exponent of a Pochhammer factor (y; q)_n is
    // sum_{i < n, e_y + i < 0} (e_y + i); return its depth (>= 0).
    let poch_depth = |base: QPower, n: i64| -> Result<i64> {
        let e = base.units(grid)?;
        let step = grid.denom();
        let mut low = 0i64;
        for i in 0..n {
            let f = e + i * step;
            if f < 0 {
                low += f;
            }
        }
        Ok(-low)
    };
    // Shared prefactor: (rho_1)_L (rho_2)_L and the L-th power of x.
    let mut prefactor = (-(x.units(grid)? * m).min(0)).max(0);
    for r in [rho1, rho2] {
        if let RhoParam::Finite(p) = r {
            prefactor += poch_depth(p, m)?;
        }
    }
    // Tails specific to delta and to gamma; take the worse.
    let delta_tail = if any_infinite { 0 } else { poch_depth(*x, m)? };
    let mut gamma_tail = 0i64;
    for r in [rho1, rho2] {
        if let RhoParam::Finite(p) = r {
            let mut worst = 0i64;
            for l in 0..=m {
                worst = worst.max(poch_depth(QPower::q_power(ell + l + 1).div(&p), m - l)?);
            }
            gamma_tail += worst;
        }
    }
    Ok(prefactor + delta_tail.max(gamma_tail))
}

// ---------------------------------------------------------------------------
// The M -> infinity form
// ---------------------------------------------------------------------------

/// Both sides of the limiting identity
///
///   (1/(aq)_inf) sum_L q^{L^2} a^L alpha_L  =  sum_L q^{L^2} a^L beta_L,
///
/// with a = q^ell, using the pair's stored tables. Terms beyond the table
/// are provably above the cutoff when l_max(l_max + ell) exceeds it.
pub fn inf_sides(pair: &BaileyPair, grid: Grid) -> Result<(QSeries, QSeries)> {
    let cutoff = grid.cutoff();
    let depth = pair
        .alpha
        .iter()
        .chain(&pair.beta)
        .map(|s| (-s.offset()).max(0))
        .max()
        .unwrap_or(0);
    if weight_units(pair.l_max() + 1, pair.ell, grid) <= cutoff + depth {
        return Err(Error::InvalidParameter(format!(
            "pair table (L <= {}) is too short for cutoff {}: term L = {} still lands below it",
            pair.l_max(),
            grid.trunc(),
            pair.l_max() + 1
        )));
    }
    let mut alpha_sum = QSeries::zero(grid);
    let mut beta_sum = QSeries::zero(grid);
    for l in 0..=pair.l_max() {
        let w = weight_units(l, pair.ell, grid);
        // A term's exponent floor is the weight plus the table entry's
        // offset; past the cutoff it contributes nothing.
        if w > cutoff + depth {
            break;
        }
        alpha_sum = alpha_sum.add_shifted(&pair.alpha[l as usize], w);
        beta_sum = beta_sum.add_shifted(&pair.beta[l as usize], w);
    }
    let aq_inf = pochhammer(&QPower::q_power(pair.ell + 1), Order::Infinite, grid)?;
    let lhs = alpha_sum.mul(&aq_inf.invert()?);
    Ok((lhs.truncated(cutoff), beta_sum.truncated(cutoff)))
}
