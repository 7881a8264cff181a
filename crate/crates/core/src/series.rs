//! Truncated formal power series in q with exact integer coefficients.
//!
//! A [`QSeries`] stores a contiguous run of arbitrary-precision integer
//! coefficients on a `1/D` exponent grid, starting at a (possibly negative)
//! offset. Two kinds of series coexist:
//!
//! - *exact* series (finite Laurent polynomials with every coefficient
//!   known), produced by the monomial/Pochhammer/Gaussian constructors;
//! - *truncated* series, whose coefficients are known exactly up to a
//!   per-series cutoff and unknown beyond it.
//!
//! Arithmetic tracks the cutoff honestly. For a product the result is valid
//! up to `min(T1 + offset2, T2 + offset1)`: with non-negative offsets this is
//! the usual `min(T1, T2)` rule, while Laurent factors with negative offset
//! shrink the window instead of silently corrupting high coefficients.
//! Builders that need full depth (the two-parameter Bailey family, inverse
//! shifts) therefore compute denominators on a widened guard grid first.
//!
//! Coefficients stay integers throughout: division is only defined against
//! series with lowest coefficient +1 or -1, which is the only kind of
//! division the identity machinery ever performs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::grid::{Grid, GridExponent};

/// A truncated formal power series (or exact Laurent polynomial) in q.
#[derive(Clone, Debug)]
pub struct QSeries {
    /// Grid denominator D; exponent of `coeffs[i]` is `(offset + i) / denom`.
    denom: i64,
    /// Grid-unit exponent of the first stored coefficient.
    offset: i64,
    /// Coefficients, trimmed of leading and trailing zeros.
    coeffs: Vec<BigInt>,
    /// Validity bound in grid units: coefficients with exponent `<= cutoff`
    /// are correct. Ignored when `exact` is set.
    cutoff: i64,
    /// All coefficients outside the stored run are zero (complete knowledge).
    exact: bool,
}

impl QSeries {
    // -----------------------------------------------------------------
    // Constructors
    // -----------------------------------------------------------------

    /// The zero series, known to the grid cutoff.
    pub fn zero(grid: Grid) -> QSeries {
        QSeries { denom: grid.denom(), offset: 0, coeffs: Vec::new(), cutoff: grid.cutoff(), exact: false }
    }

    /// The exactly-zero series (zero to all orders).
    pub fn zero_exact(grid: Grid) -> QSeries {
        QSeries { denom: grid.denom(), offset: 0, coeffs: Vec::new(), cutoff: grid.cutoff(), exact: true }
    }

    /// The constant series 1.
    pub fn one(grid: Grid) -> QSeries {
        QSeries::monomial(grid, BigInt::one(), 0)
    }

    /// The single term `coeff * q^(units/D)`. Exact.
    pub fn monomial(grid: Grid, coeff: BigInt, units: i64) -> QSeries {
        if coeff.is_zero() {
            return QSeries::zero_exact(grid);
        }
        QSeries { denom: grid.denom(), offset: units, coeffs: vec![coeff], cutoff: grid.cutoff(), exact: true }
    }

    /// `1 - coeff * q^(units/D)` as an exact two-term polynomial
    /// (collapsing to a constant when `units == 0`).
    pub fn one_minus(grid: Grid, coeff: BigInt, units: i64) -> QSeries {
        let one = QSeries::one(grid);
        one.sub(&QSeries::monomial(grid, coeff, units))
    }

    /// Build from raw parts; trims and normalises. `cutoff` in grid units.
    pub fn from_coeffs(grid: Grid, offset: i64, coeffs: Vec<BigInt>, exact: bool) -> QSeries {
        let mut s = QSeries { denom: grid.denom(), offset, coeffs, cutoff: grid.cutoff(), exact };
        if !exact {
            s.truncate_units(grid.cutoff());
        }
        s.normalize();
        s
    }

    // -----------------------------------------------------------------
    // Accessors
    // -----------------------------------------------------------------

    pub fn denom(&self) -> i64 {
        self.denom
    }

    /// Grid-unit exponent of the lowest stored (nonzero) coefficient.
    /// Zero for an empty series.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Validity bound in grid units; `None` means valid to all orders.
    pub fn validity(&self) -> Option<i64> {
        if self.exact {
            None
        } else {
            Some(self.cutoff)
        }
    }

    /// Validity bound in grid units, with exact series reporting their
    /// construction-time cutoff. Used when a finite order must be picked.
    pub fn cutoff_units(&self) -> i64 {
        self.cutoff
    }

    /// Coefficient of `q^(units/D)`. `None` when the exponent lies beyond
    /// the validity bound (i.e. the coefficient is unknown).
    pub fn coeff_at_units(&self, units: i64) -> Option<BigInt> {
        if !self.exact && units > self.cutoff {
            return None;
        }
        let idx = units - self.offset;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            Some(BigInt::zero())
        } else {
            Some(self.coeffs[idx as usize].clone())
        }
    }

    /// Iterate stored `(units, coeff)` pairs with nonzero coefficient.
    pub fn iter_nonzero(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let offset = self.offset;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (offset + i as i64, c))
    }

    fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// True when every nonzero coefficient sits at an integer q-exponent.
    pub fn integer_exponents_only(&self) -> bool {
        self.iter_nonzero().all(|(u, _)| u.rem_euclid(self.denom) == 0)
    }

    /// Exponent of the lowest nonzero term, if any.
    pub fn lowest_exponent(&self) -> Option<GridExponent> {
        if self.is_zero() {
            None
        } else {
            Some(GridExponent::new(self.offset, self.denom))
        }
    }

    /// Sum of all stored coefficients, i.e. the value at q = 1.
    /// Only meaningful for exact polynomials.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    // -----------------------------------------------------------------
    // Normalisation
    // -----------------------------------------------------------------

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.offset = 0;
            }
            Some(k) => {
                let last = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
                self.coeffs.truncate(last + 1);
                if k > 0 {
                    self.coeffs.drain(..k);
                    self.offset += k as i64;
                }
            }
        }
    }

    /// Drop coefficients above `units` and lower the validity bound to it.
    pub fn truncate_units(&mut self, units: i64) {
        let keep = units - self.offset + 1;
        if keep < 0 {
            self.coeffs.clear();
            self.offset = 0;
        } else if (keep as usize) < self.coeffs.len() {
            self.coeffs.truncate(keep as usize);
        }
        if self.exact || units < self.cutoff {
            self.cutoff = units;
        }
        self.exact = false;
        self.normalize();
    }

    /// Copy truncated at `units` grid units.
    pub fn truncated(&self, units: i64) -> QSeries {
        let mut s = self.clone();
        s.truncate_units(units);
        s
    }

    // -----------------------------------------------------------------
    // Grid alignment
    // -----------------------------------------------------------------

    /// Rescale onto denominator `new_denom` (a multiple of the current one).
    fn refined(&self, new_denom: i64) -> QSeries {
        debug_assert!(new_denom % self.denom == 0);
        let f = new_denom / self.denom;
        if f == 1 {
            return self.clone();
        }
        if self.coeffs.is_empty() {
            let mut s = self.clone();
            s.denom = new_denom;
            s.offset *= f;
            s.cutoff = s.cutoff.saturating_mul(f);
            return s;
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() * f as usize);
        for c in &self.coeffs {
            coeffs.push(c.clone());
            for _ in 1..f {
                coeffs.push(BigInt::zero());
            }
        }
        coeffs.truncate(self.coeffs.len() * f as usize - (f as usize - 1));
        QSeries {
            denom: new_denom,
            offset: self.offset * f,
            coeffs,
            cutoff: self.cutoff.saturating_mul(f),
            exact: self.exact,
        }
    }

    fn aligned<'a>(&'a self, other: &'a QSeries) -> Result<(QSeries, QSeries)> {
        if self.denom == other.denom {
            return Ok((self.clone(), other.clone()));
        }
        let l = self.denom.lcm(&other.denom);
        if l > (1 << 24) {
            return Err(Error::GridMismatch(self.denom, other.denom));
        }
        Ok((self.refined(l), other.refined(l)))
    }

    // -----------------------------------------------------------------
    // Ring operations
    // -----------------------------------------------------------------

    pub fn neg(&self) -> QSeries {
        let mut s = self.clone();
        for c in &mut s.coeffs {
            *c = -std::mem::take(c);
        }
        s
    }

    /// Coefficient-wise sum. The result is valid up to the smaller of the
    /// two validity bounds (exact when both operands are exact).
    pub fn add(&self, other: &QSeries) -> QSeries {
        self.try_add(other).expect("grid mismatch in add")
    }

    pub fn try_add(&self, other: &QSeries) -> Result<QSeries> {
        let (a, b) = self.aligned(other)?;
        let exact = a.exact && b.exact;
        let validity = match (a.validity(), b.validity()) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (Some(x), None) | (None, Some(x)) => Some(x),
            (None, None) => None,
        };
        if a.is_zero() && b.is_zero() {
            let mut z = a;
            z.exact = exact;
            if let Some(v) = validity {
                z.cutoff = v;
            }
            return Ok(z);
        }
        let lo = match (a.is_zero(), b.is_zero()) {
            (true, false) => b.offset,
            (false, true) => a.offset,
            _ => a.offset.min(b.offset),
        };
        let mut hi = (a.offset + a.coeffs.len() as i64).max(b.offset + b.coeffs.len() as i64) - 1;
        if let Some(v) = validity {
            hi = hi.min(v);
        }
        if hi < lo {
            return Ok(QSeries {
                denom: a.denom,
                offset: 0,
                coeffs: Vec::new(),
                cutoff: validity.unwrap_or(a.cutoff),
                exact,
            });
        }
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (u, c) in a.iter_nonzero().chain(b.iter_nonzero()) {
            if u <= hi {
                coeffs[(u - lo) as usize] += c;
            }
        }
        let mut s = QSeries {
            denom: a.denom,
            offset: lo,
            coeffs,
            cutoff: validity.unwrap_or_else(|| a.cutoff.max(b.cutoff)),
            exact,
        };
        s.normalize();
        Ok(s)
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.neg())
    }

    /// The series multiplied by `q^(units/D)` (an exact shift).
    pub fn shifted(&self, units: i64) -> QSeries {
        let mut s = self.clone();
        s.offset += units;
        if !s.exact {
            s.cutoff = s.cutoff.saturating_add(units);
        }
        s
    }

    /// Add `other` shifted by `q^(units/D)` in place of building the
    /// intermediate monomial product.
    pub fn add_shifted(&self, other: &QSeries, units: i64) -> QSeries {
        self.add(&other.shifted(units))
    }

    /// Convolution product.
    ///
    /// Validity: `min(T1 + offset2, T2 + offset1)` over the finite bounds
    /// (a product against an exact polynomial keeps the full window shifted
    /// by the polynomial's offset; two exact operands stay exact).
    pub fn mul(&self, other: &QSeries) -> QSeries {
        self.try_mul(other).expect("grid mismatch in mul")
    }

    pub fn try_mul(&self, other: &QSeries) -> Result<QSeries> {
        let (a, b) = self.aligned(other)?;
        let exact = a.exact && b.exact;
        let validity = match (a.validity(), b.validity()) {
            (None, None) => None,
            (va, vb) => {
                let mut v = i64::MAX;
                if let Some(x) = va {
                    v = v.min(x.saturating_add(b.offset));
                }
                if let Some(x) = vb {
                    v = v.min(x.saturating_add(a.offset));
                }
                Some(v)
            }
        };
        if a.is_zero() || b.is_zero() {
            return Ok(QSeries {
                denom: a.denom,
                offset: 0,
                coeffs: Vec::new(),
                cutoff: validity.unwrap_or(a.cutoff.min(b.cutoff)),
                exact,
            });
        }
        let lo = a.offset + b.offset;
        let full_hi = lo + (a.coeffs.len() + b.coeffs.len()) as i64 - 2;
        let hi = match validity {
            Some(v) => full_hi.min(v),
            None => full_hi,
        };
        if hi < lo {
            return Ok(QSeries {
                denom: a.denom,
                offset: 0,
                coeffs: Vec::new(),
                cutoff: validity.unwrap_or(a.cutoff),
                exact,
            });
        }
        let len = (hi - lo + 1) as usize;
        // Put the operand with fewer nonzero terms on the outside; series on
        // a 2N grid are typically zero on most slots.
        let (outer, inner) = if a.nonzero_count() <= b.nonzero_count() { (&a, &b) } else { (&b, &a) };
        let coeffs = convolve(outer, inner, lo, len);
        let mut s = QSeries {
            denom: a.denom,
            offset: lo,
            coeffs,
            cutoff: validity.unwrap_or_else(|| a.cutoff.max(b.cutoff)),
            exact,
        };
        s.normalize();
        Ok(s)
    }

    /// Multiplicative inverse.
    ///
    /// Requires a lowest nonzero coefficient of +1 or -1; anything else
    /// would need rational coefficients. For a series with lowest term at
    /// grid offset `m > 0`, the result starts at `-m` and is valid up to
    /// `cutoff - 2m`; callers needing full depth invert on a guard grid.
    pub fn invert(&self) -> Result<QSeries> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let lead = &self.coeffs[0];
        if !lead.is_one() && !(-lead).is_one() {
            return Err(Error::NonUnitLeading(lead.to_string()));
        }
        let m = self.offset;
        // Single exact monomial: the inverse is the exact reciprocal monomial.
        if self.exact && self.coeffs.len() == 1 {
            return Ok(QSeries {
                denom: self.denom,
                offset: -m,
                coeffs: vec![lead.clone()],
                cutoff: self.cutoff,
                exact: true,
            });
        }
        let result_cutoff = if self.exact { self.cutoff } else { self.cutoff - 2 * m.max(0) };
        let order = result_cutoff + m; // highest index of the unit-part inverse
        if order < 0 {
            // Every term of the inverse lies above the validity bound.
            return Ok(QSeries {
                denom: self.denom,
                offset: 0,
                coeffs: Vec::new(),
                cutoff: result_cutoff,
                exact: false,
            });
        }
        let u = &self.coeffs; // unit part, u[0] = +/-1
        let sign_flip = !lead.is_one();
        let mut w = vec![BigInt::zero(); order as usize + 1];
        w[0] = lead.clone(); // 1/u0 = u0 for u0 = +/-1
        for e in 1..=order as usize {
            let top = e.min(u.len() - 1);
            let mut acc = BigInt::zero();
            for i in 1..=top {
                if !u[i].is_zero() && !w[e - i].is_zero() {
                    acc += &u[i] * &w[e - i];
                }
            }
            if sign_flip {
                // u0 = -1: w_e = +acc
                w[e] = acc;
            } else {
                w[e] = -acc;
            }
        }
        let mut s = QSeries { denom: self.denom, offset: -m, coeffs: w, cutoff: result_cutoff, exact: false };
        s.normalize();
        Ok(s)
    }

    /// `self * other.invert()`, with `other` inverted on a grid deep enough
    /// that the quotient stays valid to `self`'s bound.
    pub fn div(&self, other: &QSeries) -> Result<QSeries> {
        self.try_mul(&other.invert()?)
    }

    // -----------------------------------------------------------------
    // Comparison
    // -----------------------------------------------------------------

    /// First exponent `<= through` grid units at which the two series
    /// differ, together with both coefficients. Panics if either series is
    /// not valid through the requested bound.
    pub fn first_mismatch_up_to(&self, other: &QSeries, through: i64) -> Option<(GridExponent, BigInt, BigInt)> {
        let (a, b) = self.aligned(other).expect("grid mismatch in comparison");
        let f = a.denom / self.denom;
        let through = through * f;
        for s in [&a, &b] {
            if let Some(v) = s.validity() {
                assert!(
                    v >= through,
                    "comparison through {} exceeds validity bound {} (grid 1/{})",
                    through,
                    v,
                    s.denom
                );
            }
        }
        if a.is_zero() && b.is_zero() {
            return None;
        }
        let lo = a.offset.min(b.offset).min(0).min(through);
        for u in lo..=through {
            let ca = a.coeff_at_units(u).unwrap();
            let cb = b.coeff_at_units(u).unwrap();
            if ca != cb {
                return Some((GridExponent::new(u, a.denom), ca, cb));
            }
        }
        None
    }

    /// Coefficient-wise equality for exponents `<= through` grid units.
    pub fn eq_up_to(&self, other: &QSeries, through: i64) -> bool {
        self.first_mismatch_up_to(other, through).is_none()
    }

    // -----------------------------------------------------------------
    // Rendering
    // -----------------------------------------------------------------

    /// The first `count` nonzero coefficients from the bottom, as
    /// (reduced exponent string, decimal coefficient string) pairs.
    pub fn sample(&self, count: usize) -> Vec<(String, String)> {
        self.iter_nonzero()
            .take(count)
            .map(|(u, c)| (GridExponent::new(u, self.denom).reduced(), c.to_string()))
            .collect()
    }
}

/// Schoolbook convolution of `outer * inner` for result indices
/// `lo .. lo + len`, skipping zero coefficients of the outer operand.
/// Falls back from an i128 fast path to big-integer arithmetic when any
/// coefficient is too large for overflow-free accumulation.
fn convolve(outer: &QSeries, inner: &QSeries, lo: i64, len: usize) -> Vec<BigInt> {
    if let Some(v) = convolve_i128(outer, inner, lo, len) {
        return v;
    }
    let mut acc = vec![BigInt::zero(); len];
    for (u, a) in outer.iter_nonzero() {
        let base = u + inner.offset - lo;
        if base >= len as i64 {
            continue;
        }
        let jmax = (len as i64 - base).min(inner.coeffs.len() as i64);
        for j in 0..jmax.max(0) {
            let b = &inner.coeffs[j as usize];
            if !b.is_zero() {
                acc[(base + j) as usize] += a * b;
            }
        }
    }
    acc
}

/// Magnitude bound under which i128 accumulation cannot overflow for any
/// realistic series length (|a*b| < 2^110, summed < 2^127 for < 2^17 terms).
const FAST_COEFF_BOUND: i64 = 1 << 55;

fn small_coeffs(s: &QSeries) -> Option<Vec<i64>> {
    if s.coeffs.len() > (1 << 17) {
        return None;
    }
    s.coeffs
        .iter()
        .map(|c| {
            let v = c.to_i64()?;
            if v.abs() < FAST_COEFF_BOUND {
                Some(v)
            } else {
                None
            }
        })
        .collect()
}

fn convolve_i128(outer: &QSeries, inner: &QSeries, lo: i64, len: usize) -> Option<Vec<BigInt>> {
    let a = small_coeffs(outer)?;
    let b = small_coeffs(inner)?;
    let mut acc = vec![0i128; len];
    for (i, &av) in a.iter().enumerate() {
        if av == 0 {
            continue;
        }
        let base = outer.offset + i as i64 + inner.offset - lo;
        if base >= len as i64 {
            continue;
        }
        let jmax = ((len as i64 - base).min(b.len() as i64)).max(0) as usize;
        let av = av as i128;
        let row = &b[..jmax];
        let dst = &mut acc[base as usize..base as usize + jmax];
        for (d, &bv) in dst.iter_mut().zip(row) {
            *d += av * bv as i128;
        }
    }
    Some(acc.into_iter().map(BigInt::from).collect())
}

impl PartialEq for QSeries {
    /// Equality up to the smaller of the two validity bounds, after
    /// aligning grids (full support comparison when both are exact).
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = match self.aligned(other) {
            Ok(p) => p,
            Err(_) => return false,
        };
        let through = match (a.validity(), b.validity()) {
            (Some(x), Some(y)) => x.min(y),
            (Some(x), None) | (None, Some(x)) => x,
            (None, None) => {
                let ea = a.offset + a.coeffs.len() as i64;
                let eb = b.offset + b.coeffs.len() as i64;
                ea.max(eb)
            }
        };
        a.eq_up_to(&b, through)
    }
}

impl std::fmt::Display for QSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            write!(f, "0")?;
        } else {
            let mut first = true;
            for (u, c) in self.iter_nonzero().take(24) {
                let (sign, mag) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
                if first {
                    if sign == "-" {
                        write!(f, "-")?;
                    }
                    first = false;
                } else {
                    write!(f, " {sign} ")?;
                }
                let e = GridExponent::new(u, self.denom);
                if u == 0 {
                    write!(f, "{mag}")?;
                } else if mag.is_one() {
                    write!(f, "q^({})", e.reduced())?;
                } else {
                    write!(f, "{mag}*q^({})", e.reduced())?;
                }
            }
            if self.nonzero_count() > 24 {
                write!(f, " + ...")?;
            }
        }
        if let Some(v) = self.validity() {
            write!(f, " + O(q^({}))", GridExponent::new(v + 1, self.denom).reduced())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g() -> Grid {
        Grid::integer(10)
    }

    fn poly(grid: Grid, terms: &[(i64, i64)]) -> QSeries {
        let mut s = QSeries::zero_exact(grid);
        for &(c, e) in terms {
            s = s.add(&QSeries::monomial(grid, BigInt::from(c), e));
        }
        s
    }

    #[test]
    fn add_zero_is_identity() {
        let s = poly(g(), &[(1, 0), (-1, 1)]);
        assert_eq!(s.add(&QSeries::zero(g())), s);
    }

    #[test]
    fn add_cancellation() {
        let a = poly(g(), &[(1, 0), (-1, 1)]);
        let b = poly(g(), &[(1, 0), (1, 1)]);
        assert_eq!(a.add(&b), poly(g(), &[(2, 0)]));
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = poly(g(), &[(1, 0), (-1, 1)]);
        let b = poly(g(), &[(1, 0), (1, 1)]);
        assert_eq!(a.mul(&b), poly(g(), &[(1, 0), (-1, 2)]));
    }

    #[test]
    fn mul_one_is_identity() {
        let s = poly(g(), &[(3, 0), (5, 2), (-7, 9)]);
        assert_eq!(s.mul(&QSeries::one(g())), s);
    }

    #[test]
    fn invert_geometric() {
        let s = poly(g(), &[(1, 0), (-1, 1)]);
        let inv = s.invert().unwrap();
        for e in 0..=10 {
            assert_eq!(inv.coeff_at_units(e).unwrap(), BigInt::one());
        }
        assert_eq!(s.mul(&inv), QSeries::one(g()));
    }

    #[test]
    fn invert_rejects_non_unit() {
        let s = poly(g(), &[(2, 0), (1, 1)]);
        assert!(matches!(s.invert(), Err(Error::NonUnitLeading(_))));
        assert!(matches!(QSeries::zero(g()).invert(), Err(Error::ZeroInverse)));
    }

    #[test]
    fn invert_shifted_unit() {
        // invert(q + q^2) = q^-1 - 1 + q - q^2 + ... , valid to T - 2.
        let grid = Grid::integer(12);
        let s = poly(grid, &[(1, 1), (1, 2)]);
        let inv = s.invert().unwrap();
        assert_eq!(inv.offset(), -1);
        assert_eq!(inv.coeff_at_units(-1).unwrap(), BigInt::from(1));
        assert_eq!(inv.coeff_at_units(0).unwrap(), BigInt::from(-1));
        assert_eq!(inv.coeff_at_units(1).unwrap(), BigInt::from(1));
        assert_eq!(inv.coeff_at_units(2).unwrap(), BigInt::from(-1));
        let back = s.mul(&inv);
        assert!(back.eq_up_to(&QSeries::one(grid), back.validity().unwrap()));
    }

    #[test]
    fn negative_offset_product_validity_shrinks() {
        let grid = Grid::integer(10);
        let inv_one_minus_q = poly(grid, &[(1, 0), (-1, 1)]).invert().unwrap(); // truncated at 10
        let qinv = QSeries::monomial(grid, BigInt::one(), -3);
        let shifted = inv_one_minus_q.mul(&qinv);
        assert_eq!(shifted.validity(), Some(7));
    }

    #[test]
    fn grid_refinement_in_mixed_ops() {
        let a = poly(Grid::integer(10), &[(1, 0), (1, 1)]);
        let b = poly(Grid::new(2, 10), &[(1, 1)]); // q^(1/2)
        let p = a.mul(&b);
        assert_eq!(p.denom(), 2);
        assert_eq!(p.coeff_at_units(1).unwrap(), BigInt::one()); // q^(1/2)
        assert_eq!(p.coeff_at_units(3).unwrap(), BigInt::one()); // q^(3/2)
    }

    #[test]
    fn sample_renders_reduced_fractions() {
        let grid = Grid::new(2, 10);
        let s = poly(grid, &[(1, -1), (-3, 4)]);
        assert_eq!(
            s.sample(4),
            vec![("-1/2".to_string(), "1".to_string()), ("2".to_string(), "-3".to_string())]
        );
    }
}
