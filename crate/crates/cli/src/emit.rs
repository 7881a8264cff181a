//! Report emission: JSON lines, CSV, or an aligned text table.
//!
//! JSON and CSV are canonical: stable key/column order, no timing, so the
//! bytes are identical across runs of the same command line. The text table
//! is for humans and includes wall-clock times.

use std::io::Write;

use qbailey_core::{IdentityReport, ReportStatus};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn emit(reports: &[IdentityReport], format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for r in reports {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
        }
        Format::Csv => {
            writeln!(
                out,
                "id,N,k,ell,M,Lmax,r,s,rho1,rho2,grid_denom,trunc,status,\
                 mismatch_exponent,mismatch_lhs,mismatch_rhs,error,lhs_sample,rhs_sample"
            )?;
            for r in reports {
                writeln!(out, "{}", csv_row(r))?;
            }
        }
        Format::Text => {
            let rows: Vec<[String; 6]> = reports.iter().map(text_row).collect();
            let mut width = [0usize; 6];
            for row in &rows {
                for (w, cell) in width.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            for row in &rows {
                let mut line = String::new();
                for (w, cell) in width.iter().zip(row) {
                    line.push_str(&format!("{cell:<w$}  "));
                }
                writeln!(out, "{}", line.trim_end())?;
            }
        }
    }
    Ok(())
}

fn opt(v: &Option<i64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn sample_cell(sample: &[(String, String)]) -> String {
    let joined: Vec<String> = sample.iter().map(|(e, c)| format!("q^{e}:{c}")).collect();
    joined.join(";")
}

fn csv_row(r: &IdentityReport) -> String {
    let status = match r.status {
        ReportStatus::Pass => "pass",
        ReportStatus::Fail => "fail",
        ReportStatus::Error => "error",
    };
    let (me, ml, mr) = match &r.first_mismatch {
        Some(m) => (m.exponent.clone(), m.lhs.clone(), m.rhs.clone()),
        None => (String::new(), String::new(), String::new()),
    };
    [
        r.id.as_str().to_string(),
        opt(&r.params.n),
        opt(&r.params.k),
        opt(&r.params.ell),
        opt(&r.params.m),
        opt(&r.params.l_max),
        opt(&r.params.r),
        opt(&r.params.s),
        r.params.rho1.clone().unwrap_or_default(),
        r.params.rho2.clone().unwrap_or_default(),
        r.grid_denom.to_string(),
        r.trunc.to_string(),
        status.to_string(),
        me,
        ml,
        mr,
        r.error.clone().unwrap_or_default(),
        sample_cell(&r.lhs_sample),
        sample_cell(&r.rhs_sample),
    ]
    .iter()
    .map(|cell| csv_quote(cell))
    .collect::<Vec<_>>()
    .join(",")
}

fn text_row(r: &IdentityReport) -> [String; 6] {
    let status = match r.status {
        ReportStatus::Pass => "pass",
        ReportStatus::Fail => "FAIL",
        ReportStatus::Error => "ERROR",
    };
    let outcome = match (&r.first_mismatch, &r.error) {
        (Some(m), _) => format!("first mismatch at q^{}: {} vs {}", m.exponent, m.lhs, m.rhs),
        (None, Some(e)) => e.clone(),
        (None, None) => String::new(),
    };
    [
        r.id.as_str().to_string(),
        r.params.summary(),
        format!("D={}", r.grid_denom),
        format!("T={}", r.trunc),
        status.to_string(),
        match r.timing_ms {
            Some(ms) => format!("{ms} ms  {outcome}"),
            None => outcome,
        },
    ]
}
