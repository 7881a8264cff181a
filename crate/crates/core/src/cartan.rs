//! A_{N-1} Cartan data with exact rational inverse.
//!
//! For N >= 1: the incidence matrix I_{j,k} = delta_{j,k-1} + delta_{j,k+1}
//! (path-graph adjacency on N-1 nodes), the Cartan matrix C = 2*Id - I, and
//! its exact inverse with entries `Cinv[j][k] = min(j,k) - jk/N` (1-based).
//! N = 1 yields empty matrices; quadratic forms over the empty space are 0
//! and vector sums have exactly one empty term.

use num_rational::Ratio;

use crate::error::{Error, Result};

pub type Rat = Ratio<i64>;

/// Cartan/incidence data of A_{N-1} with the exact inverse Cartan matrix.
#[derive(Clone, Debug)]
pub struct CartanData {
    n: i64,
    cartan: Vec<Vec<i64>>,
    incidence: Vec<Vec<i64>>,
    cinv: Vec<Vec<Rat>>,
}

/// Build the A_{N-1} data for `n >= 1`.
pub fn cartan(n: i64) -> Result<CartanData> {
    if n < 1 {
        return Err(Error::InvalidParameter(format!("level N must be >= 1, got {n}")));
    }
    let dim = (n - 1) as usize;
    let mut cartan = vec![vec![0i64; dim]; dim];
    let mut incidence = vec![vec![0i64; dim]; dim];
    let mut cinv = vec![vec![Rat::from_integer(0); dim]; dim];
    for j in 0..dim {
        for k in 0..dim {
            let adjacent = j.abs_diff(k) == 1;
            incidence[j][k] = i64::from(adjacent);
            cartan[j][k] = if j == k { 2 } else { -i64::from(adjacent) };
            // 1-based closed form min(j,k) - jk/N.
            let (ja, ka) = (j as i64 + 1, k as i64 + 1);
            cinv[j][k] = Rat::from_integer(ja.min(ka)) - Rat::new(ja * ka, n);
        }
    }
    let data = CartanData { n, cartan, incidence, cinv };
    debug_assert!(data.inverse_checks_out());
    Ok(data)
}

impl CartanData {
    pub fn level(&self) -> i64 {
        self.n
    }

    /// Dimension N-1 of the vectors.
    pub fn dim(&self) -> usize {
        (self.n - 1) as usize
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn incidence_matrix(&self) -> &[Vec<i64>] {
        &self.incidence
    }

    pub fn cinv(&self) -> &[Vec<Rat>] {
        &self.cinv
    }

    /// C * Cinv == identity, exactly.
    pub fn inverse_checks_out(&self) -> bool {
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                let mut acc = Rat::from_integer(0);
                for k in 0..dim {
                    acc += Rat::from_integer(self.cartan[i][k]) * self.cinv[k][j];
                }
                if acc != Rat::from_integer(i64::from(i == j)) {
                    return false;
                }
            }
        }
        true
    }

    /// The unit vector e_ell (1-based); e_0 and e_N are the zero vector,
    /// which is what makes 0 <= ell <= N line up with the (N-1)-dimensional
    /// vector space.
    pub fn unit_vector(&self, ell: i64) -> Result<Vec<Rat>> {
        if ell < 0 || ell > self.n {
            return Err(Error::InvalidParameter(format!(
                "ell must satisfy 0 <= ell <= {}, got {ell}",
                self.n
            )));
        }
        let mut e = vec![Rat::from_integer(0); self.dim()];
        if ell >= 1 && ell < self.n {
            e[(ell - 1) as usize] = Rat::from_integer(1);
        }
        Ok(e)
    }

    /// Cinv * v for an integer vector v.
    pub fn cinv_apply(&self, v: &[i64]) -> Vec<Rat> {
        self.cinv
            .iter()
            .map(|row| row.iter().zip(v).map(|(c, &x)| *c * Rat::from_integer(x)).sum())
            .collect()
    }

    /// Cinv * v for a rational vector v.
    pub fn cinv_apply_rat(&self, v: &[Rat]) -> Vec<Rat> {
        self.cinv
            .iter()
            .map(|row| row.iter().zip(v).map(|(c, x)| *c * *x).sum())
            .collect()
    }

    /// The exact quadratic-with-shift exponent x * Cinv * (x - e_ell).
    pub fn quad_form_shifted(&self, x: &[i64], ell: i64) -> Result<Rat> {
        let e = self.unit_vector(ell)?;
        let shifted: Vec<Rat> =
            x.iter().zip(&e).map(|(&xi, ei)| Rat::from_integer(xi) - ei).collect();
        let cx = self.cinv_apply_rat(&shifted);
        Ok(x.iter().zip(&cx).map(|(&xi, ci)| Rat::from_integer(xi) * ci).sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_equals_one_is_empty() {
        let cd = cartan(1).unwrap();
        assert_eq!(cd.dim(), 0);
        assert!(cd.inverse_checks_out());
        assert_eq!(cd.quad_form_shifted(&[], 0).unwrap(), Rat::from_integer(0));
        assert_eq!(cd.quad_form_shifted(&[], 1).unwrap(), Rat::from_integer(0));
    }

    #[test]
    fn n_equals_two() {
        let cd = cartan(2).unwrap();
        assert_eq!(cd.cartan_matrix(), &[vec![2]]);
        assert_eq!(cd.incidence_matrix(), &[vec![0]]);
        assert_eq!(cd.cinv(), &[vec![Rat::new(1, 2)]]);
    }

    #[test]
    fn n_equals_three_inverse_by_hand() {
        // C = [[2,-1],[-1,2]], Cinv = [[2/3,1/3],[1/3,2/3]].
        let cd = cartan(3).unwrap();
        assert_eq!(cd.cinv()[0], vec![Rat::new(2, 3), Rat::new(1, 3)]);
        assert_eq!(cd.cinv()[1], vec![Rat::new(1, 3), Rat::new(2, 3)]);
    }

    #[test]
    fn rejects_non_positive_n() {
        assert!(cartan(0).is_err());
        assert!(cartan(-2).is_err());
    }

    #[test]
    fn unit_vector_edges_are_zero() {
        let cd = cartan(4).unwrap();
        assert_eq!(cd.unit_vector(0).unwrap(), vec![Rat::from_integer(0); 3]);
        assert_eq!(cd.unit_vector(4).unwrap(), vec![Rat::from_integer(0); 3]);
        let e2 = cd.unit_vector(2).unwrap();
        assert_eq!(e2[1], Rat::from_integer(1));
        assert!(cd.unit_vector(5).is_err());
    }
}
