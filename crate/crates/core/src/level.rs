//! Level-N conjugate families and the identities they generate.
//!
//! The level-N generalisation of the classic conjugate pair, relative to
//! a = q^ell with 0 <= ell <= N:
//!
//!   delta_L = q^{L(L+ell)/N} / (q)_{M-L}
//!             * sum_n q^{n Cinv (n - e_ell)} prod_j [m_j + n_j choose n_j]_q,
//!
//!   gamma_L = q^{L(L+ell)/N} / [(q)_{M-L} (q^{ell+1})_{M+L}]
//!             * sum_eta q^{eta Cinv (eta - e_ell)} prod_j [mu_j + eta_j choose eta_j]_q,
//!
//! where the sums run over non-negative integer vectors passing the
//! congruence constraint, with companion vectors fixed by the linear
//! systems in [`crate::lattice`]. At N = 1 both collapse to the classic
//! family. Feeding the pair into the bilinear identity produces, with the
//! unit Bailey pair and its chain iterates, the generalized Euler identity
//! and the level-N Andrews-Gordon family, both assembled here with
//! independently computed left and right sides.

use num_rational::Ratio;

use crate::bailey::{BaileyPair, DeltaGammaFamily, FamilyVariant, InversePochhammer};
use crate::cartan::{cartan, CartanData, Rat};
use crate::error::{Error, Result};
use crate::gaussian::gaussian;
use crate::grid::Grid;
use crate::identities::isqrt;
use crate::lattice::{enumerate_admissible, LinearSystem};
use crate::pochhammer::{pochhammer, Order};
use crate::products::bilateral_window;
use crate::qpower::QPower;
use crate::series::QSeries;

// ---------------------------------------------------------------------------
// Constrained theta sums
// ---------------------------------------------------------------------------

/// sum over admissible n of q^{n Cinv (n - e_ell)} prod_j [m_j+n_j choose n_j]_q.
///
/// Exact: every admissible term is a monomial times Gaussian polynomials.
fn theta_system_sum(cd: &CartanData, system: LinearSystem, ell: i64, grid: Grid) -> Result<QSeries> {
    let (solutions, _) = enumerate_admissible(cd, system)?;
    let mut acc = QSeries::zero_exact(grid);
    for sol in &solutions {
        let q = cd.quad_form_shifted(&sol.n, ell)?;
        let units = grid.units(*q.numer(), *q.denom())?;
        let mut term = QSeries::one(grid);
        for j in 0..cd.dim() {
            term = term.mul(&gaussian(sol.m[j] + sol.n[j], sol.n[j], grid));
        }
        acc = acc.add_shifted(&term, units);
    }
    Ok(acc)
}

/// delta_L of the level-N family (zero series for L > M).
pub fn delta_level_n(n: i64, m: i64, ell: i64, l: i64, grid: Grid) -> Result<QSeries> {
    let cd = cartan(n)?;
    check_level_params(&cd, m, ell, l)?;
    if l > m {
        return Ok(QSeries::zero(grid));
    }
    let inv_q = InversePochhammer::new(0, m, grid);
    delta_entry(&cd, m, ell, l, &inv_q, grid)
}

/// gamma_L of the level-N family (zero series for L > M).
pub fn gamma_level_n(n: i64, m: i64, ell: i64, l: i64, grid: Grid) -> Result<QSeries> {
    let cd = cartan(n)?;
    check_level_params(&cd, m, ell, l)?;
    if l > m {
        return Ok(QSeries::zero(grid));
    }
    let inv_q = InversePochhammer::new(0, m, grid);
    let inv_aq = InversePochhammer::new(ell, 2 * m, grid);
    gamma_entry(&cd, m, ell, l, &inv_q, &inv_aq, grid)
}

/// The full level-N family with both tables, sharing Pochhammer caches.
pub fn level_delta_gamma(n: i64, m: i64, ell: i64, grid: Grid) -> Result<DeltaGammaFamily> {
    let cd = cartan(n)?;
    check_level_params(&cd, m, ell, 0)?;
    let inv_q = InversePochhammer::new(0, m, grid);
    let inv_aq = InversePochhammer::new(ell, 2 * m, grid);
    let mut delta = Vec::with_capacity(m as usize + 1);
    let mut gamma = Vec::with_capacity(m as usize + 1);
    for l in 0..=m {
        delta.push(delta_entry(&cd, m, ell, l, &inv_q, grid)?);
        gamma.push(gamma_entry(&cd, m, ell, l, &inv_q, &inv_aq, grid)?);
    }
    Ok(DeltaGammaFamily {
        variant: FamilyVariant::LevelN,
        m,
        ell,
        level: n,
        rho: None,
        delta,
        gamma,
    })
}

fn check_level_params(cd: &CartanData, m: i64, ell: i64, l: i64) -> Result<()> {
    if m < 0 {
        return Err(Error::InvalidParameter(format!("M must be >= 0, got {m}")));
    }
    if l < 0 {
        return Err(Error::InvalidParameter(format!("L must be >= 0, got {l}")));
    }
    if ell < 0 || ell > cd.level() {
        return Err(Error::InvalidParameter(format!(
            "ell must satisfy 0 <= ell <= {}, got {ell}",
            cd.level()
        )));
    }
    Ok(())
}

/// Grid units of the prefactor q^{L(L+ell)/N}.
fn level_weight_units(cd: &CartanData, l: i64, ell: i64, grid: Grid) -> Result<i64> {
    grid.units(l * (l + ell), cd.level())
}

fn delta_entry(
    cd: &CartanData,
    m: i64,
    ell: i64,
    l: i64,
    inv_q: &InversePochhammer,
    grid: Grid,
) -> Result<QSeries> {
    let theta = theta_system_sum(cd, LinearSystem::Mn { l, ell }, ell, grid)?;
    let w = level_weight_units(cd, l, ell, grid)?;
    let d = theta.mul(inv_q.get(m - l));
    Ok(QSeries::zero(grid).add_shifted(&d, w))
}

fn gamma_entry(
    cd: &CartanData,
    m: i64,
    ell: i64,
    l: i64,
    inv_q: &InversePochhammer,
    inv_aq: &InversePochhammer,
    grid: Grid,
) -> Result<QSeries> {
    let theta = theta_system_sum(cd, LinearSystem::Em { l, m, ell }, ell, grid)?;
    let w = level_weight_units(cd, l, ell, grid)?;
    let g = theta.mul(inv_q.get(m - l)).mul(inv_aq.get(m + l));
    Ok(QSeries::zero(grid).add_shifted(&g, w))
}

// ---------------------------------------------------------------------------
// Unconstrained eta sums, grouped by congruence class
// ---------------------------------------------------------------------------

/// The partition-weighted theta sums
///
///   S_c = sum_{eta >= 0, sum_k k eta_k = c (mod N), minexp <= budget}
///           q^{eta Cinv (eta - e_ell)} / [(q)_{eta_1} ... (q)_{eta_{N-1}}],
///
/// indexed by residue class c = 0..N-1. These are shared by every j (or L)
/// with the same residue, which keeps the bilateral assemblies cheap.
///
/// Truncation is by the provable term floor: the quadratic form bounds each
/// coordinate through its diagonal, so the scan box provably contains every
/// term with floor at or below the budget.
struct EtaClassSums {
    sums: Vec<QSeries>,
}

impl EtaClassSums {
    fn new(cd: &CartanData, ell: i64, grid: Grid) -> Result<EtaClassSums> {
        let n = cd.level();
        let dim = cd.dim();
        if dim == 0 {
            // Single empty eta; only class 0 is populated.
            return Ok(EtaClassSums { sums: vec![QSeries::one(grid)] });
        }
        let budget = Rat::from_integer(grid.cutoff()) / Rat::from_integer(grid.denom());
        let e = cd.unit_vector(ell)?;
        // Per-coordinate floors g_j(t) = Cinv[j][j] t^2 - Cinv[j][ell-1] t and
        // their real minima; coordinate k is bounded by
        // g_k(t) <= budget - sum_{j != k} min_j.
        let quarter = Rat::new(1, 4);
        let minima: Vec<Rat> = (0..dim)
            .map(|j| {
                let lin = row_dot(cd, j, &e);
                -(lin * lin) / cd.cinv()[j][j] * quarter
            })
            .collect();
        let total_min: Rat = minima.iter().cloned().sum();
        let mut bounds = Vec::with_capacity(dim);
        for (k, min_k) in minima.iter().enumerate() {
            let room = budget - (total_min - min_k);
            let lin = row_dot(cd, k, &e);
            let a = cd.cinv()[k][k];
            // Solve a t^2 - lin t <= room over t >= 0; conservative f64 root
            // plus slack, later filtered exactly.
            let af = rat_f64(a);
            let lf = rat_f64(lin);
            let rf = rat_f64(room).max(0.0);
            let root = (lf + (lf * lf + 4.0 * af * rf).sqrt()) / (2.0 * af);
            bounds.push(root.ceil() as i64 + 2);
        }
        let mut sums = vec![QSeries::zero(grid); n as usize];
        let inv_q = InversePochhammer::new(0, bounds.iter().copied().max().unwrap_or(0), grid);
        // Depth-first over coordinates so partial denominator products are
        // shared across the subtree.
        let mut eta = vec![0i64; dim];
        #[allow(clippy::too_many_arguments)]
        fn descend(
            cd: &CartanData,
            ell: i64,
            grid: Grid,
            bounds: &[i64],
            inv_q: &InversePochhammer,
            eta: &mut Vec<i64>,
            partial: &QSeries,
            pos: usize,
            budget: Rat,
            sums: &mut [QSeries],
        ) -> Result<()> {
            if pos == eta.len() {
                let q = cd.quad_form_shifted(eta, ell)?;
                if q > budget {
                    return Ok(());
                }
                let units = grid.units(*q.numer(), *q.denom())?;
                let weighted: i64 =
                    eta.iter().enumerate().map(|(k, &v)| (k as i64 + 1) * v).sum();
                let class = weighted.rem_euclid(cd.level()) as usize;
                sums[class] = sums[class].add_shifted(partial, units);
                return Ok(());
            }
            for t in 0..=bounds[pos] {
                eta[pos] = t;
                let next = partial.mul(inv_q.get(t));
                descend(cd, ell, grid, bounds, inv_q, eta, &next, pos + 1, budget, sums)?;
            }
            eta[pos] = 0;
            Ok(())
        }
        let partial = QSeries::one(grid);
        descend(cd, ell, grid, &bounds, &inv_q, &mut eta, &partial, 0, budget, &mut sums)?;
        Ok(EtaClassSums { sums })
    }

    /// The sum whose terms satisfy sum_k k eta_k = -source (mod N).
    fn for_source(&self, source: i64, n: i64) -> &QSeries {
        if self.sums.len() == 1 {
            // N = 1: the empty sum sits in class 0 and every source maps there.
            return &self.sums[0];
        }
        &self.sums[(-source).rem_euclid(n) as usize]
    }
}

fn row_dot(cd: &CartanData, row: usize, v: &[Rat]) -> Rat {
    cd.cinv()[row].iter().zip(v).map(|(c, x)| *c * *x).sum()
}

fn rat_f64(r: Rat) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

// ---------------------------------------------------------------------------
// The level-N corollary: pair + level-N family, M -> infinity
// ---------------------------------------------------------------------------

/// Both sides of the level-N limiting identity for a Bailey pair relative
/// to q^ell, 0 <= ell <= N:
///
///   lhs = (1/(q^{ell+1})_inf) sum_L q^{L(L+ell)/N} alpha_L
///           * sum_eta q^{eta Cinv (eta - e_ell)} / [(q)_{eta_1}...(q)_{eta_{N-1}}]
///   rhs = sum_L q^{L(L+ell)/N} beta_L
///           * sum_n q^{n Cinv (n - e_ell)} prod_j [m_j+n_j choose n_j]_q
///
/// with both inner sums congruence-constrained by L; the eta sum is
/// unconstrained by any companion-positivity condition and truncated purely
/// by its exponent floor.
pub fn corollary_sides(pair: &BaileyPair, n: i64, grid: Grid) -> Result<(QSeries, QSeries)> {
    let cd = cartan(n)?;
    let ell = pair.ell;
    if ell > n {
        return Err(Error::InvalidParameter(format!(
            "pair is relative to q^{ell} but the corollary needs 0 <= ell <= {n}"
        )));
    }
    // The shifted quadratic form can dip slightly below zero (never past
    // -e Cinv e / 4); widen the working grid by that depth.
    let slack = eta_floor_slack(&cd, ell, grid)?;
    let deep = grid.with_extra_units(slack);
    let class_sums = EtaClassSums::new(&cd, ell, deep)?;

    let table_depth = pair
        .alpha
        .iter()
        .chain(&pair.beta)
        .map(|s| (-s.offset()).max(0))
        .max()
        .unwrap_or(0);
    let break_bound = deep.cutoff() + table_depth;
    if level_weight_units(&cd, pair.l_max() + 1, ell, deep)? <= break_bound {
        return Err(Error::InvalidParameter(format!(
            "pair table (L <= {}) is too short for cutoff {} at level {n}",
            pair.l_max(),
            grid.trunc()
        )));
    }

    let mut lhs_sum = QSeries::zero(deep);
    let mut rhs_sum = QSeries::zero(deep);
    for l in 0..=pair.l_max() {
        let w = level_weight_units(&cd, l, ell, deep)?;
        if w > break_bound {
            break;
        }
        let eta_part = class_sums.for_source(l, n);
        lhs_sum = lhs_sum.add(&pair.alpha[l as usize].mul(eta_part).shifted(w));
        let mn_part = theta_system_sum(&cd, LinearSystem::Mn { l, ell }, ell, deep)?;
        rhs_sum = rhs_sum.add(&pair.beta[l as usize].mul(&mn_part).shifted(w));
    }
    let aq_inf = pochhammer(&QPower::q_power(ell + 1), Order::Infinite, deep)?;
    let lhs = lhs_sum.mul(&aq_inf.invert()?);
    Ok((lhs.truncated(grid.cutoff()), rhs_sum.truncated(grid.cutoff())))
}

/// Depth allowance for the shifted eta quadratic form, in grid units:
/// its real minimum is -(e_ell Cinv e_ell)/4 = -ell(N-ell)/(4N).
fn eta_floor_slack(cd: &CartanData, ell: i64, grid: Grid) -> Result<i64> {
    let q = if ell >= 1 && ell < cd.level() {
        cd.cinv()[(ell - 1) as usize][(ell - 1) as usize]
    } else {
        Rat::from_integer(0)
    };
    let units = (q / Rat::from_integer(4) * Rat::from_integer(grid.denom())).ceil().to_integer();
    Ok(units + 1)
}

// ---------------------------------------------------------------------------
// Generalized Euler identity
// ---------------------------------------------------------------------------

/// The generalized Euler series
///
///   (1/(q)_inf) sum_{j in Z} (-1)^j q^{((1+2/N)j+1)j/2}
///     * sum_{eta: j/N - (Cinv eta)_1 in Z} q^{eta Cinv eta} / [(q)_eta...],
///
/// expected to be the constant 1. Exponents are asserted to land on the
/// 1/(2N) grid and, after assembly, on the integers.
pub fn euler_level_n(n: i64, grid: Grid) -> Result<QSeries> {
    let cd = cartan(n)?;
    let class_sums = EtaClassSums::new(&cd, 0, grid)?;
    let exponent = |j: i64| -> Result<i64> {
        // ((1+2/N)j+1)j/2 = (j^2+j)/2 + j^2/N.
        let e = Ratio::new(j * j + j, 2) + Ratio::new(j * j, n);
        grid.units(*e.numer(), *e.denom())
    };
    let mut acc = QSeries::zero(grid);
    for j in bilateral_window(exponent, grid.cutoff()) {
        let sign = if j.rem_euclid(2) == 0 { 1 } else { -1 };
        let term = class_sums.for_source(j, n);
        let scaled = match sign {
            1 => term.clone(),
            _ => term.neg(),
        };
        acc = acc.add_shifted(&scaled, exponent(j)?);
    }
    let q_inf = pochhammer(&QPower::q_power(1), Order::Infinite, grid)?;
    let out = acc.mul(&q_inf.invert()?).truncated(grid.cutoff());
    assert!(out.integer_exponents_only(), "generalized Euler series left the integer grid");
    Ok(out)
}

// ---------------------------------------------------------------------------
// Level-N Andrews-Gordon identities
// ---------------------------------------------------------------------------

/// Both sides of the level-N Andrews-Gordon identity at depth k (a = 1):
///
///   lhs = (1/(q)_inf) sum_j (-1)^j q^{((2k+1+2/N)j+1)j/2}
///           * (congruence-constrained eta sum),
///   rhs = sum_{r_1 >= ... >= r_k >= 0}
///           q^{r_1^2/N + r_2^2 + ... + r_k^2} / [(q)_{r_1-r_2}...(q)_{r_k}]
///           * sum_n q^{n Cinv n} prod_j [m_j+n_j choose n_j]_q,
///
/// with the depth-k system C m = 2 r_1 e_{N-1} - 2n fixing the companions.
pub fn agn_sides(n: i64, k: i64, grid: Grid) -> Result<(QSeries, QSeries)> {
    if k < 1 {
        return Err(Error::InvalidParameter(format!("depth must be >= 1, got {k}")));
    }
    let cd = cartan(n)?;
    let class_sums = EtaClassSums::new(&cd, 0, grid)?;

    let exponent = |j: i64| -> Result<i64> {
        let e = Ratio::new((2 * k + 1) * j * j + j, 2) + Ratio::new(j * j, n);
        grid.units(*e.numer(), *e.denom())
    };
    let mut theta = QSeries::zero(grid);
    for j in bilateral_window(exponent, grid.cutoff()) {
        let sign = if j.rem_euclid(2) == 0 { 1 } else { -1 };
        let term = if sign == 1 { class_sums.for_source(j, n).clone() } else { class_sums.for_source(j, n).neg() };
        theta = theta.add_shifted(&term, exponent(j)?);
    }
    let q_inf = pochhammer(&QPower::q_power(1), Order::Infinite, grid)?;
    let lhs = theta.mul(&q_inf.invert()?).truncated(grid.cutoff());

    // Right side: tuple sum with cached r_1 theta factors.
    let r1_bound = isqrt(grid.trunc() * n) + 1;
    let inv_q = InversePochhammer::new(0, r1_bound, grid);
    let mut r1_theta: Vec<Option<QSeries>> = vec![None; r1_bound as usize + 2];
    let mut rhs = QSeries::zero(grid);
    let mut tuple = vec![0i64; k as usize];
    agn_tuples(
        &cd,
        grid,
        &inv_q,
        &mut r1_theta,
        &mut tuple,
        0,
        i64::MAX,
        Rat::from_integer(0),
        &mut rhs,
    )?;
    let rhs = rhs.truncated(grid.cutoff());
    assert!(
        lhs.integer_exponents_only() && rhs.integer_exponents_only(),
        "level-N Andrews-Gordon series left the integer grid"
    );
    Ok((lhs, rhs))
}

#[allow(clippy::too_many_arguments)]
fn agn_tuples(
    cd: &CartanData,
    grid: Grid,
    inv_q: &InversePochhammer,
    r1_theta: &mut Vec<Option<QSeries>>,
    tuple: &mut Vec<i64>,
    pos: usize,
    prev: i64,
    floor: Rat,
    acc: &mut QSeries,
) -> Result<()> {
    let k = tuple.len();
    let budget = Rat::new(grid.cutoff(), grid.denom());
    if pos == k {
        let r1 = tuple[0];
        if r1_theta[r1 as usize].is_none() {
            r1_theta[r1 as usize] =
                Some(theta_system_sum(cd, LinearSystem::Tuple { r1 }, 0, grid)?);
        }
        let mut term = r1_theta[r1 as usize].clone().unwrap();
        for i in 0..k {
            let diff = if i + 1 < k { tuple[i] - tuple[i + 1] } else { tuple[i] };
            term = term.mul(inv_q.get(diff));
        }
        let units = grid.units(*floor.numer(), *floor.denom())?;
        *acc = acc.add_shifted(&term, units);
        return Ok(());
    }
    for r in 0..=prev {
        let add = if pos == 0 { Rat::new(r * r, cd.level()) } else { Rat::from_integer(r * r) };
        let next_floor = floor + add;
        if next_floor > budget {
            break;
        }
        tuple[pos] = r;
        agn_tuples(cd, grid, inv_q, r1_theta, tuple, pos + 1, r, next_floor, acc)?;
    }
    tuple[pos] = 0;
    Ok(())
}
