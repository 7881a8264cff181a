//! Verification jobs: one job = one identity check = one report.

use num_bigint::BigInt;
use qbailey_core::*;

/// Everything needed to run one check. Grids are derived from the job so
/// runs are reproducible from the parameter record alone.
#[derive(Clone, Debug)]
pub struct Job {
    pub id: IdentityId,
    pub n: i64,
    pub k: i64,
    pub ell: i64,
    pub m: i64,
    pub l_max: i64,
    pub r: i64,
    pub s: i64,
    pub rho1: RhoParam,
    pub rho2: RhoParam,
    pub trunc: i64,
    /// Test hook: bump the right side's coefficient at this q-exponent
    /// before comparing.
    pub perturb_exponent: Option<i64>,
}

impl Job {
    pub fn new(id: IdentityId, trunc: i64) -> Job {
        Job {
            id,
            n: 1,
            k: 1,
            ell: 0,
            m: 6,
            l_max: 10,
            r: 2,
            s: 3,
            rho1: RhoParam::Finite(QPower::parse("-q").unwrap()),
            rho2: RhoParam::Finite(QPower::parse("q^2").unwrap()),
            trunc,
            perturb_exponent: None,
        }
    }

    fn grid(&self) -> Grid {
        Grid::for_level(self.n.max(1), self.trunc)
    }

    fn params(&self) -> ReportParams {
        let mut p = ReportParams::default();
        match self.id {
            IdentityId::Euler => {
                p.ell = Some(self.ell);
            }
            IdentityId::EulerLevelN => {
                p.n = Some(self.n);
            }
            IdentityId::Ag => {
                p.k = Some(self.k);
                p.ell = Some(self.ell);
            }
            IdentityId::Agn => {
                p.n = Some(self.n);
                p.k = Some(self.k);
            }
            IdentityId::Lemma3 => {
                p.n = Some(self.n);
                p.ell = Some(self.ell);
                p.m = Some(self.m);
            }
            IdentityId::PairCheck => {
                p.ell = Some(self.ell);
                p.l_max = Some(self.l_max);
            }
            IdentityId::RhoCheck => {
                p.ell = Some(self.ell);
                p.m = Some(self.m);
                p.rho1 = Some(self.rho1.to_string());
                p.rho2 = Some(self.rho2.to_string());
            }
            IdentityId::TripleProduct => {
                p.r = Some(self.r);
                p.s = Some(self.s);
            }
        }
        p
    }

    /// Run the check; never panics on bad parameters, reporting them as
    /// error status instead.
    pub fn run(&self) -> IdentityReport {
        let started = std::time::Instant::now();
        let mut report = match self.dispatch() {
            Ok(report) => report,
            Err(e) => IdentityReport::from_error(self.id, self.params(), self.grid(), e.to_string()),
        };
        report.timing_ms = Some(started.elapsed().as_millis() as u64);
        report
    }

    fn dispatch(&self) -> Result<IdentityReport> {
        let grid = self.grid();
        match self.id {
            IdentityId::Euler => {
                let pair = unit_pair(self.ell, table_bound(self.ell, 1, grid), grid);
                let (lhs, rhs) = inf_sides(&pair, grid)?;
                Ok(self.compare(grid, lhs, rhs))
            }
            IdentityId::EulerLevelN => {
                let series = euler_level_n(self.n, grid)?;
                Ok(self.compare(grid, series, QSeries::one(grid)))
            }
            IdentityId::Ag => {
                let (lhs, rhs) = ag_identity_sides(self.k, self.ell, grid)?;
                Ok(self.compare(grid, lhs, rhs))
            }
            IdentityId::Agn => {
                let (lhs, rhs) = agn_sides(self.n, self.k, grid)?;
                Ok(self.compare(grid, lhs, rhs))
            }
            IdentityId::Lemma3 => {
                let family = level_delta_gamma(self.n, self.m, self.ell, grid)?;
                let summed = gamma_from_delta(&family.delta, self.ell, grid);
                Ok(self.compare_tables(grid, &family.gamma, &summed))
            }
            IdentityId::PairCheck => {
                let pair = unit_pair(self.ell, self.l_max, grid);
                let recomputed = beta_from_alpha(&pair.alpha, self.ell, grid);
                Ok(self.compare_tables(grid, &pair.beta, &recomputed))
            }
            IdentityId::RhoCheck => {
                let family = rho_delta_gamma(self.m, self.ell, self.rho1, self.rho2, grid)?;
                let summed = gamma_from_delta(&family.delta, self.ell, grid);
                Ok(self.compare_tables(grid, &family.gamma, &summed))
            }
            IdentityId::TripleProduct => {
                let (sum_form, product_form) = triple_product(self.r, self.s, grid)?;
                Ok(self.compare(grid, sum_form, product_form))
            }
        }
    }

    fn compare(&self, grid: Grid, lhs: QSeries, rhs: QSeries) -> IdentityReport {
        let rhs = self.perturbed(grid, rhs);
        let through = comparison_bound(grid, &lhs, &rhs);
        IdentityReport::from_comparison(self.id, self.params(), grid, &lhs, &rhs, through)
    }

    /// Table comparison: the report carries the first mismatching entry,
    /// with the table index recorded in the detail field.
    fn compare_tables(&self, grid: Grid, lhs: &[QSeries], rhs: &[QSeries]) -> IdentityReport {
        let rhs: Vec<QSeries> = rhs
            .iter()
            .enumerate()
            .map(|(l, s)| if l == 0 { self.perturbed(grid, s.clone()) } else { s.clone() })
            .collect();
        for (l, (a, b)) in lhs.iter().zip(&rhs).enumerate() {
            let through = comparison_bound(grid, a, b);
            if a.first_mismatch_up_to(b, through).is_some() {
                let mut params = self.params();
                params.detail = Some(format!("first failing entry L={l}"));
                return IdentityReport::from_comparison(self.id, params, grid, a, b, through);
            }
        }
        // All entries agree; sample the highest entry that is not
        // identically zero (the top of a pair table is all zeros).
        let pick = (0..lhs.len()).rev().find(|&l| !lhs[l].is_zero() || !rhs[l].is_zero()).unwrap_or(0);
        IdentityReport::from_comparison(
            self.id,
            self.params(),
            grid,
            &lhs[pick],
            &rhs[pick],
            comparison_bound(grid, &lhs[pick], &rhs[pick]),
        )
    }

    fn perturbed(&self, grid: Grid, series: QSeries) -> QSeries {
        match self.perturb_exponent {
            None => series,
            Some(e) => {
                let units = grid.units(e, 1).expect("perturbation exponent lands on the grid");
                series.add(&QSeries::monomial(grid, BigInt::from(1), units))
            }
        }
    }
}

/// Smallest table length whose next term provably exceeds the cutoff.
fn table_bound(ell: i64, level: i64, grid: Grid) -> i64 {
    let mut l = 1;
    while l * (l + ell) <= level * grid.trunc() + 1 {
        l += 1;
    }
    l
}

fn comparison_bound(grid: Grid, a: &QSeries, b: &QSeries) -> i64 {
    let mut t = grid.cutoff();
    if let Some(v) = a.validity() {
        t = t.min(v);
    }
    if let Some(v) = b.validity() {
        t = t.min(v);
    }
    t
}

/// The acceptance matrix run by `qbailey suite`.
pub fn suite_jobs(profile: &str) -> Vec<Job> {
    let mut jobs = Vec::new();
    let full = profile == "full";
    let with = |jobs: &mut Vec<Job>, job: Job| jobs.push(job);

    // Unit pair relation.
    for ell in 0..=if full { 2 } else { 0 } {
        let mut j = Job::new(IdentityId::PairCheck, if full { 120 } else { 60 });
        j.ell = ell;
        j.l_max = if full { 15 } else { 8 };
        with(&mut jobs, j);
    }
    // Classic conjugate family via the level-1 reduction.
    for ell in 0..=1 {
        for m in 0..=if full { 8 } else { 4 } {
            let mut j = Job::new(IdentityId::Lemma3, if full { 80 } else { 40 });
            j.n = 1;
            j.ell = ell;
            j.m = m;
            with(&mut jobs, j);
        }
    }
    // Euler from the unit pair.
    for ell in 0..=if full { 2 } else { 0 } {
        let mut j = Job::new(IdentityId::Euler, if full { 200 } else { 80 });
        j.ell = ell;
        with(&mut jobs, j);
    }
    // Andrews-Gordon.
    for k in 1..=if full { 3 } else { 1 } {
        for ell in 0..=1 {
            let mut j = Job::new(IdentityId::Ag, if full { 80 } else { 60 });
            j.k = k;
            j.ell = ell;
            with(&mut jobs, j);
        }
    }
    // Level-N transform grid.
    for n in 1..=if full { 4 } else { 2 } {
        for ell in 0..=n {
            for m in 0..=if full { 8 } else { 4 } {
                let mut j = Job::new(IdentityId::Lemma3, 60);
                j.n = n;
                j.ell = ell;
                j.m = m;
                with(&mut jobs, j);
            }
        }
    }
    // Generalized Euler.
    for n in 1..=if full { 4 } else { 2 } {
        let mut j = Job::new(IdentityId::EulerLevelN, if full { 100 } else { 60 });
        j.n = n;
        with(&mut jobs, j);
    }
    // Level-N Andrews-Gordon.
    let agn_pairs: &[(i64, i64)] =
        if full { &[(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)] } else { &[(1, 1), (2, 1)] };
    for &(n, k) in agn_pairs {
        let mut j = Job::new(IdentityId::Agn, 60);
        j.n = n;
        j.k = k;
        with(&mut jobs, j);
    }
    // Two-parameter family, including the infinite limit.
    let rho_pairs: &[(&str, &str)] =
        if full { &[("-q", "q^2"), ("-1", "q^3"), ("inf", "inf")] } else { &[("-q", "q^2")] };
    for &(r1, r2) in rho_pairs {
        for ell in 0..=1 {
            let mut j = Job::new(IdentityId::RhoCheck, 60);
            j.ell = ell;
            j.m = 6;
            j.rho1 = parse_rho(r1).unwrap();
            j.rho2 = parse_rho(r2).unwrap();
            with(&mut jobs, j);
        }
    }
    // Triple product.
    if full {
        for s in 1..=6 {
            for r in 1..s {
                let mut j = Job::new(IdentityId::TripleProduct, 60);
                j.r = r;
                j.s = s;
                with(&mut jobs, j);
            }
        }
    } else {
        with(&mut jobs, Job::new(IdentityId::TripleProduct, 60));
    }
    jobs
}

pub fn parse_rho(text: &str) -> Result<RhoParam> {
    match text.trim() {
        "inf" | "infinity" | "oo" => Ok(RhoParam::Infinite),
        other => Ok(RhoParam::Finite(QPower::parse(other)?)),
    }
}
