//! `qbailey`: exact verification of Bailey-pair q-series identities.
//!
//! Exit codes: 0 when every report passes, 1 when any comparison fails or
//! errors, 2 on usage or parameter errors.

mod emit;
mod jobs;

use std::fs::File;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qbailey_core::{suspect_rejection_count, IdentityId};

use emit::Format;
use jobs::Job;

#[derive(Parser)]
#[command(name = "qbailey", version, about = "Exact q-series identity verification", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a single identity at the given parameters.
    Verify(VerifyArgs),
    /// Run the full verification matrix.
    Suite(SuiteArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum IdentityArg {
    /// Euler's identity from the unit pair (or level-N when --N is given).
    Euler,
    /// The generalized Euler identity at level N.
    #[value(name = "euler-levelN", alias = "euler-leveln")]
    EulerLevelN,
    /// The Andrews-Gordon identity at depth k.
    Ag,
    /// The level-N Andrews-Gordon identity.
    Agn,
    /// Level-N conjugate-family consistency (delta determines gamma).
    Lemma3,
    /// The unit Bailey pair relation.
    PairCheck,
    /// The two-parameter conjugate family.
    RhoCheck,
    /// Jacobi triple product: theta sum vs infinite product.
    TripleProduct,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Truncation order (q-exponent units); 0 means the default of 60.
    #[arg(long, default_value_t = 0)]
    trunc: i64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Evaluate reports on this many threads (emission order is always
    /// deterministic parameter order).
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write reports to a file instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which identity to verify.
    #[arg(value_enum)]
    identity: IdentityArg,
    /// Level parameter N.
    #[arg(long = "N", visible_alias = "level")]
    n: Option<i64>,
    /// Chain depth k.
    #[arg(long)]
    k: Option<i64>,
    /// Exponent of the relative parameter a = q^ell.
    #[arg(long)]
    ell: Option<i64>,
    /// Family truncation M.
    #[arg(long = "M")]
    m: Option<i64>,
    /// Bailey-pair table length.
    #[arg(long)]
    lmax: Option<i64>,
    /// First continuous parameter: a signed q-power like '-q', 'q^2',
    /// 'q^1/2', or 'inf'.
    #[arg(long)]
    rho1: Option<String>,
    /// Second continuous parameter.
    #[arg(long)]
    rho2: Option<String>,
    /// Theta characteristic r of the triple product.
    #[arg(long)]
    r: Option<i64>,
    /// Theta modulus s of the triple product.
    #[arg(long)]
    s: Option<i64>,
    /// Test hook: corrupt the right side before comparison,
    /// e.g. --perturb exponent=3.
    #[arg(long)]
    perturb: Option<String>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct SuiteArgs {
    /// quick: reduced grid for smoke runs; full: the complete matrix.
    #[arg(long, default_value = "full", value_parser = ["quick", "full"])]
    profile: String,
    #[command(flatten)]
    common: CommonArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let (jobs, common) = match cli.command {
        Command::Verify(args) => {
            let job = build_job(&args)?;
            (vec![job], args.common)
        }
        Command::Suite(args) => {
            let mut jobs = jobs::suite_jobs(&args.profile);
            if args.common.trunc != 0 {
                anyhow::bail!("the suite pins its own truncation orders; drop --trunc");
            }
            for job in &mut jobs {
                let _ = job; // truncations are pinned per entry
            }
            (jobs, args.common)
        }
    };

    let reports = run_jobs(&jobs, common.jobs)?;

    let mut sink: Box<dyn Write> = match &common.out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(std::io::stdout().lock()),
    };
    emit::emit(&reports, common.format.into(), &mut sink)?;
    sink.flush()?;

    if suspect_rejection_count() > 0 {
        eprintln!(
            "warning: {} congruence-passing lattice points were rejected for non-integral \
             companion vectors despite being non-negative; this contradicts the summation \
             convention and deserves investigation",
            suspect_rejection_count()
        );
    }

    let failures = reports.iter().filter(|r| !r.passed()).count();
    if failures > 0 {
        eprintln!("{failures} of {} checks did not pass", reports.len());
    }
    Ok(failures == 0)
}

fn run_jobs(jobs: &[Job], threads: usize) -> anyhow::Result<Vec<qbailey_core::IdentityReport>> {
    if threads <= 1 {
        return Ok(jobs.iter().map(Job::run).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
    Ok(pool.install(|| {
        use rayon::prelude::*;
        jobs.par_iter().map(Job::run).collect()
    }))
}

fn build_job(args: &VerifyArgs) -> anyhow::Result<Job> {
    let trunc = match args.common.trunc {
        0 => 60,
        t if t > 0 => t,
        t => anyhow::bail!("truncation order must be non-negative, got {t}"),
    };
    let id = match args.identity {
        // `verify euler --N n` runs the level-N generalization; plain
        // `verify euler [--ell l]` runs the unit-pair assembly.
        IdentityArg::Euler => match args.n {
            Some(_) => IdentityId::EulerLevelN,
            None => IdentityId::Euler,
        },
        IdentityArg::EulerLevelN => IdentityId::EulerLevelN,
        IdentityArg::Ag => IdentityId::Ag,
        IdentityArg::Agn => IdentityId::Agn,
        IdentityArg::Lemma3 => IdentityId::Lemma3,
        IdentityArg::PairCheck => IdentityId::PairCheck,
        IdentityArg::RhoCheck => IdentityId::RhoCheck,
        IdentityArg::TripleProduct => IdentityId::TripleProduct,
    };
    let mut job = Job::new(id, trunc);
    if let Some(n) = args.n {
        anyhow::ensure!(n >= 1, "N must be >= 1");
        job.n = n;
    }
    if let Some(k) = args.k {
        anyhow::ensure!(k >= 1, "k must be >= 1");
        job.k = k;
    }
    if let Some(ell) = args.ell {
        anyhow::ensure!(ell >= 0, "ell must be >= 0");
        job.ell = ell;
    }
    if let Some(m) = args.m {
        anyhow::ensure!(m >= 0, "M must be >= 0");
        job.m = m;
    }
    if let Some(lmax) = args.lmax {
        anyhow::ensure!(lmax >= 0, "lmax must be >= 0");
        job.l_max = lmax;
    }
    if let Some(rho) = &args.rho1 {
        job.rho1 = jobs::parse_rho(rho).map_err(|e| anyhow::anyhow!("--rho1: {e}"))?;
    }
    if let Some(rho) = &args.rho2 {
        job.rho2 = jobs::parse_rho(rho).map_err(|e| anyhow::anyhow!("--rho2: {e}"))?;
    }
    if let Some(r) = args.r {
        job.r = r;
    }
    if let Some(s) = args.s {
        anyhow::ensure!(s >= 1, "s must be >= 1");
        job.s = s;
    }
    // Domain constraints that are usage errors, not runtime failures.
    if id == IdentityId::Ag {
        anyhow::ensure!(job.ell == 0 || job.ell == 1, "ag holds for --ell 0 or 1");
    }
    if id == IdentityId::Lemma3 {
        anyhow::ensure!(job.ell <= job.n, "lemma3 needs 0 <= ell <= N");
    }
    if let Some(directive) = &args.perturb {
        let exponent = directive
            .strip_prefix("exponent=")
            .and_then(|v| v.parse::<i64>().ok())
            .ok_or_else(|| anyhow::anyhow!("--perturb expects exponent=<integer>, got '{directive}'"))?;
        job.perturb_exponent = Some(exponent);
    }
    // Grid sanity: Euler at ell needs the unit-pair table deep enough; all
    // other bounds are derived inside the job.
    Ok(job)
}
