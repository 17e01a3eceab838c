//! Command implementations behind the `cgint` binary.
//!
//! Each command writes its report to a caller-supplied writer and returns
//! the process exit code, so the binary stays a thin argument parser.

use std::io::{self, Write};
use std::time::Instant;

use cgint_core::catalog::{
    arctan_classifier, family_closed_form, family_integral, list_identities, nearest_rational,
    verify, FamilyParameter, VerificationResult, VerifyConfig,
};
use cgint_core::quadrature::QuadratureConfig;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Accepted range for a user supplied verification tolerance.
pub const TOL_RANGE: (f64, f64) = (1e-12, 1e-2);

/// Largest denominator tried when naming `value / pi` as a fraction.
pub const MAX_DENOMINATOR: u64 = 200;
/// Default match tolerance for the fraction search.
pub const RATIONAL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub not_converged: usize,
}

impl Summary {
    pub fn tally(entries: &[VerificationResult]) -> Self {
        let mut s = Summary::default();
        for e in entries {
            if e.pass {
                s.pass += 1;
            } else if !e.converged {
                s.not_converged += 1;
            } else {
                s.fail += 1;
            }
        }
        s
    }

    pub fn exit_code(&self) -> i32 {
        if self.fail + self.not_converged == 0 {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub entries: Vec<VerificationResult>,
    pub summary: Summary,
    /// Seconds spent on the whole run.
    pub wall_time: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

/// A rejected command line, reported with exit code 2.
#[derive(Debug, Clone, PartialEq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn check_tolerance(tol: f64) -> Result<f64, UsageError> {
    if tol >= TOL_RANGE.0 && tol <= TOL_RANGE.1 {
        Ok(tol)
    } else {
        Err(UsageError(format!(
            "--tol {tol} outside [{:e}, {:e}]",
            TOL_RANGE.0, TOL_RANGE.1
        )))
    }
}

pub fn cmd_list(tag: Option<&str>, out: &mut impl Write) -> io::Result<i32> {
    for r in list_identities() {
        if tag.map_or(true, |t| r.has_tag(t)) {
            writeln!(out, "{}\t{}\t{}", r.id, r.anchor, r.description)?;
        }
    }
    Ok(EXIT_PASS)
}

/// Verify every record whose id matches `id_glob` (all records when
/// `None`). Records run in parallel; the report keeps catalog order.
pub fn run_verify(
    id_glob: Option<&str>,
    tol: Option<f64>,
    quad_levels: Option<u32>,
) -> Result<RunReport, UsageError> {
    let tolerance = tol.map(check_tolerance).transpose()?;
    let quadrature = match quad_levels {
        Some(n) => QuadratureConfig::new(n, QuadratureConfig::default().target_eps())
            .map_err(|e| UsageError(format!("--quad-levels: {e}")))?,
        None => QuadratureConfig::default(),
    };
    let pattern = glob::Pattern::new(id_glob.unwrap_or("*"))
        .map_err(|e| UsageError(format!("--id: {e}")))?;
    let ids: Vec<&str> = list_identities()
        .iter()
        .map(|r| r.id)
        .filter(|id| pattern.matches(id))
        .collect();
    if ids.is_empty() {
        return Err(UsageError(format!(
            "no catalog entry matches `{}`",
            pattern.as_str()
        )));
    }

    let cfg = VerifyConfig {
        quadrature,
        tolerance,
    };
    let start = Instant::now();
    let entries: Vec<VerificationResult> = ids
        .par_iter()
        .map(|id| verify(id, &cfg).expect("id comes from the catalog"))
        .collect();
    let wall_time = start.elapsed().as_secs_f64();
    let summary = Summary::tally(&entries);
    Ok(RunReport {
        entries,
        summary,
        wall_time,
    })
}

pub fn write_report(report: &RunReport, format: Format, out: &mut impl Write) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)
        }
        Format::Table => write_table(report, out),
    }
}

fn write_table(report: &RunReport, out: &mut impl Write) -> io::Result<()> {
    writeln!(
        out,
        "{:<8} {:>22} {:>22} {:>9} {:>7} {:>9} {:>8}  status",
        "id", "reference", "computed", "rel_err", "tol", "evals", "seconds"
    )?;
    for e in &report.entries {
        let status = if e.pass {
            "pass"
        } else if !e.converged {
            "not-converged"
        } else {
            "FAIL"
        };
        writeln!(
            out,
            "{:<8} {:>22.14e} {:>22.14e} {:>9.2e} {:>7.0e} {:>9} {:>8.3}  {}",
            e.id, e.reference, e.computed, e.rel_err, e.tolerance, e.evals, e.seconds, status
        )?;
        if let Some(d) = &e.detail {
            writeln!(out, "         {d}")?;
        }
    }
    let s = report.summary;
    writeln!(
        out,
        "{} passed, {} failed, {} not converged in {:.3} s",
        s.pass, s.fail, s.not_converged, report.wall_time
    )
}

pub fn cmd_verify(
    id_glob: Option<&str>,
    tol: Option<f64>,
    format: Format,
    quad_levels: Option<u32>,
    out: &mut impl Write,
) -> Result<i32, Box<dyn std::error::Error>> {
    let report = run_verify(id_glob, tol, quad_levels)?;
    write_report(&report, format, out)?;
    Ok(report.summary.exit_code())
}

/// The `alpha` recorded in a family anchor such as `sibp-mixed:alpha=3/4`.
fn anchor_alpha(anchor: &str) -> Option<f64> {
    let text = anchor.split("alpha=").nth(1)?;
    match text.split_once('/') {
        Some((p, q)) => Some(p.parse::<f64>().ok()? / q.parse::<f64>().ok()?),
        None => text.parse().ok(),
    }
}

/// Explore one member of the parametric family.
///
/// For `0 < alpha <= 1` the closed form is compared with quadrature and the
/// exit code reflects `rel_err <= tol` (default 1e-8). For `alpha < 0` the
/// arctangent value is printed with the nearest fraction for `value / pi`
/// (denominator at most 200, match tolerance `tol`, default 1e-10).
pub fn cmd_family(
    alpha: f64,
    tol: Option<f64>,
    out: &mut impl Write,
) -> Result<i32, Box<dyn std::error::Error>> {
    let tol = tol.map(check_tolerance).transpose()?;
    if alpha < 0.0 {
        let alpha = FamilyParameter::classifier_branch(alpha)
            .map_err(|e| UsageError(e.to_string()))?
            .alpha();
        let value = arctan_classifier(alpha)?;
        let ratio = value / std::f64::consts::PI;
        let q = nearest_rational(ratio, MAX_DENOMINATOR, tol.unwrap_or(RATIONAL_TOL));
        writeln!(out, "alpha          {alpha:.15e}")?;
        writeln!(out, "arctan value   {value:.15e}")?;
        writeln!(out, "value/pi       {ratio:.15e}")?;
        writeln!(
            out,
            "nearest p/q    {}/{} (|diff| = {:.2e})",
            q.numerator, q.denominator, q.error
        )?;
        return Ok(EXIT_PASS);
    }
    let alpha = FamilyParameter::closed_form_branch(alpha)
        .map_err(|_| UsageError(format!("--alpha {alpha}: expected alpha in (0, 1] or alpha < 0")))?
        .alpha();
    let tol = tol.unwrap_or(cgint_core::catalog::DEFAULT_TOLERANCE);
    let closed = family_closed_form(alpha)?;
    let quad = family_integral(alpha, &QuadratureConfig::default())?;
    let rel_err = ((quad.value - closed) / closed).abs();
    writeln!(out, "alpha          {alpha:.15e}")?;
    writeln!(out, "closed form    {closed:.15e}")?;
    writeln!(out, "quadrature     {:.15e}", quad.value)?;
    writeln!(out, "rel_err        {rel_err:.2e}")?;
    writeln!(out, "evals          {}", quad.evaluations)?;
    if let Some(r) = list_identities()
        .iter()
        .filter(|r| r.has_tag("family"))
        .find(|r| anchor_alpha(r.anchor).is_some_and(|a| (a - alpha).abs() <= 1e-12))
    {
        let entry = r.closed_form();
        writeln!(
            out,
            "catalog        {} = {:.15e} (closed form / entry = {:.12})",
            r.id,
            entry,
            closed / entry
        )?;
    }
    Ok(if quad.converged && rel_err <= tol {
        EXIT_PASS
    } else {
        EXIT_FAIL
    })
}
