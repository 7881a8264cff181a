//! Verification reports: the machine-readable outcome of one identity check.
//!
//! Reports are deterministic for fixed inputs. Wall-clock timing is kept out
//! of the canonical payload (it is marked `serde(skip)`), so serialised
//! reports are byte-identical across runs of the same command.

use serde::Serialize;

use crate::grid::Grid;
use crate::series::QSeries;

/// Which identity a report refers to. Serialised with the CLI's spelling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IdentityId {
    #[serde(rename = "euler")]
    Euler,
    #[serde(rename = "euler-levelN")]
    EulerLevelN,
    #[serde(rename = "ag")]
    Ag,
    #[serde(rename = "agn")]
    Agn,
    #[serde(rename = "lemma3")]
    Lemma3,
    #[serde(rename = "pair-check")]
    PairCheck,
    #[serde(rename = "rho-check")]
    RhoCheck,
    #[serde(rename = "triple-product")]
    TripleProduct,
}

impl IdentityId {
    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityId::Euler => "euler",
            IdentityId::EulerLevelN => "euler-levelN",
            IdentityId::Ag => "ag",
            IdentityId::Agn => "agn",
            IdentityId::Lemma3 => "lemma3",
            IdentityId::PairCheck => "pair-check",
            IdentityId::RhoCheck => "rho-check",
            IdentityId::TripleProduct => "triple-product",
        }
    }
}

/// Parameter record attached to a report. Unused entries stay `None` and
/// are omitted from the serialised form.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ReportParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_max: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<i64>,
    /// rho exponents rendered as signed q-powers with reduced fractions.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho1: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho2: Option<String>,
    /// Free-form qualifier (e.g. which family a bilinear check used).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl ReportParams {
    /// Stable short rendering for text output and ordering.
    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        let mut push = |k: &str, v: &Option<i64>| {
            if let Some(v) = v {
                parts.push(format!("{k}={v}"));
            }
        };
        push("N", &self.n);
        push("k", &self.k);
        push("ell", &self.ell);
        push("M", &self.m);
        push("Lmax", &self.l_max);
        push("r", &self.r);
        push("s", &self.s);
        if let Some(r) = &self.rho1 {
            parts.push(format!("rho1={r}"));
        }
        if let Some(r) = &self.rho2 {
            parts.push(format!("rho2={r}"));
        }
        if let Some(d) = &self.detail {
            parts.push(d.clone());
        }
        parts.join(" ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportStatus {
    Pass,
    Fail,
    Error,
}

/// First differing coefficient between the two sides.
#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    /// Exponent as a reduced fraction ("7/2") or plain integer ("7").
    pub exponent: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one identity verification.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params: ReportParams,
    pub grid_denom: i64,
    /// Truncation order in q-exponent units.
    pub trunc: i64,
    pub status: ReportStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// First 16 nonzero coefficients of each side as
    /// (reduced exponent, decimal coefficient) pairs.
    pub lhs_sample: Vec<(String, String)>,
    pub rhs_sample: Vec<(String, String)>,
    /// Wall-clock time; outside the canonical payload.
    #[serde(skip)]
    pub timing_ms: Option<u64>,
}

pub const SAMPLE_LEN: usize = 16;

impl IdentityReport {
    /// Compare two series through `through` grid units and build a report.
    pub fn from_comparison(
        id: IdentityId,
        params: ReportParams,
        grid: Grid,
        lhs: &QSeries,
        rhs: &QSeries,
        through: i64,
    ) -> IdentityReport {
        let mismatch = lhs.first_mismatch_up_to(rhs, through);
        IdentityReport {
            id,
            params,
            grid_denom: grid.denom(),
            trunc: grid.trunc(),
            status: if mismatch.is_some() { ReportStatus::Fail } else { ReportStatus::Pass },
            first_mismatch: mismatch.map(|(e, a, b)| Mismatch {
                exponent: e.reduced(),
                lhs: a.to_string(),
                rhs: b.to_string(),
            }),
            error: None,
            lhs_sample: lhs.sample(SAMPLE_LEN),
            rhs_sample: rhs.sample(SAMPLE_LEN),
            timing_ms: None,
        }
    }

    /// A report for a check that could not run at all.
    pub fn from_error(id: IdentityId, params: ReportParams, grid: Grid, message: String) -> IdentityReport {
        IdentityReport {
            id,
            params,
            grid_denom: grid.denom(),
            trunc: grid.trunc(),
            status: ReportStatus::Error,
            first_mismatch: None,
            error: Some(message),
            lhs_sample: Vec::new(),
            rhs_sample: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == ReportStatus::Pass
    }
}
