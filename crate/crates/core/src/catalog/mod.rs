//! Closed-form evaluations of elliptic-integral identities, each paired
//! with an independent way to compute its numeric side.
//!
//! Every record carries a closed form built only from constants and
//! elementary functions, and a numeric side (an integral on `(0, 1)`, a
//! pointwise function identity, or a truncated double sum) that shares
//! nothing with the closed form except the special-function primitives.

mod entries;
mod family;

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature::{integrate_01_split, QuadratureConfig, UnitPoint};

pub use family::{
    arctan_classifier, dilog_combo, family_closed_form, family_integral, nearest_rational,
    FamilyParameter, Rational,
};

/// Tolerance used when a record does not override it.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

/// How the numeric side of a record is computed.
#[derive(Clone, Copy)]
pub enum Evaluation {
    /// `closed_form() = int_0^1 integrand`.
    Integral {
        closed_form: fn() -> f64,
        integrand: fn(UnitPoint) -> f64,
    },
    /// `closed_form(t) = int_0^1 integrand(t, .)` at each listed `t`.
    Pointwise {
        points: &'static [f64],
        closed_form: fn(f64) -> f64,
        integrand: fn(f64, UnitPoint) -> f64,
    },
    /// `sum_{i,j < terms} r_i^2 r_j^2 / (i + j + 1)`, `r_i = C(2i,i) 4^-i`.
    DoubleSum {
        closed_form: fn() -> f64,
        terms: usize,
    },
}

/// One catalog identity.
#[derive(Clone, Copy)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub description: &'static str,
    /// Literature or method label.
    pub anchor: &'static str,
    /// Singular behaviour of the numeric side.
    pub validity: &'static str,
    pub tags: &'static [&'static str],
    pub tolerance: f64,
    pub evaluation: Evaluation,
}

impl IdentityRecord {
    /// The closed form; for pointwise identities, its value at the first
    /// sample point.
    pub fn closed_form(&self) -> f64 {
        match self.evaluation {
            Evaluation::Integral { closed_form, .. } | Evaluation::DoubleSum { closed_form, .. } => {
                closed_form()
            }
            Evaluation::Pointwise {
                points,
                closed_form,
                ..
            } => closed_form(points[0]),
        }
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.contains(&tag)
    }
}

impl std::fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("anchor", &self.anchor)
            .field("tags", &self.tags)
            .field("tolerance", &self.tolerance)
            .finish_non_exhaustive()
    }
}

/// Every record, in catalog order.
pub fn list_identities() -> &'static [IdentityRecord] {
    entries::RECORDS
}

pub fn lookup(id: &str) -> Result<&'static IdentityRecord> {
    entries::RECORDS
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

/// Settings for [`verify`].
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct VerifyConfig {
    pub quadrature: QuadratureConfig,
    /// Replaces every record's own tolerance when set.
    pub tolerance: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationResult {
    pub id: String,
    pub anchor: String,
    pub reference: f64,
    pub computed: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub evals: usize,
    pub seconds: f64,
    pub tolerance: f64,
    pub converged: bool,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

struct Outcome {
    reference: f64,
    computed: f64,
    evals: usize,
    converged: bool,
}

fn run_integral(
    closed: f64,
    integrand: impl Fn(UnitPoint) -> f64,
    cfg: &QuadratureConfig,
) -> Result<Outcome> {
    let r = integrate_01_split(integrand, cfg)?;
    Ok(Outcome {
        reference: closed,
        computed: r.value,
        evals: r.evaluations,
        converged: r.converged,
    })
}

fn relative_error(reference: f64, computed: f64) -> f64 {
    (computed - reference).abs() / reference.abs()
}

fn double_sum(terms: usize) -> f64 {
    let mut r2 = Vec::with_capacity(terms);
    let mut r = 1.0f64;
    for i in 0..terms {
        r2.push(r * r);
        r *= (2 * i + 1) as f64 / (2 * i + 2) as f64;
    }
    // group by d = i + j
    let mut total = crate::specfun::CompensatedSum::default();
    for d in 0..2 * terms - 1 {
        let lo = d.saturating_sub(terms - 1);
        let hi = d.min(terms - 1);
        let inner: f64 = (lo..=hi).map(|i| r2[i] * r2[d - i]).sum();
        total.add(inner / (d + 1) as f64);
    }
    total.value()
}

fn evaluate(record: &IdentityRecord, cfg: &QuadratureConfig) -> Result<Outcome> {
    match record.evaluation {
        Evaluation::Integral {
            closed_form,
            integrand,
        } => run_integral(closed_form(), integrand, cfg),
        Evaluation::Pointwise {
            points,
            closed_form,
            integrand,
        } => {
            let mut worst: Option<Outcome> = None;
            let (mut evals, mut converged) = (0, true);
            for &t in points {
                let o = run_integral(closed_form(t), |p| integrand(t, p), cfg)?;
                evals += o.evals;
                converged &= o.converged;
                let err = relative_error(o.reference, o.computed);
                if worst
                    .as_ref()
                    .map_or(true, |w| err > relative_error(w.reference, w.computed))
                {
                    worst = Some(o);
                }
            }
            let worst = worst.expect("pointwise records list at least one point");
            Ok(Outcome {
                evals,
                converged,
                ..worst
            })
        }
        Evaluation::DoubleSum { closed_form, terms } => Ok(Outcome {
            reference: closed_form(),
            computed: double_sum(terms),
            evals: terms * terms,
            converged: true,
        }),
    }
}

/// Compare a record's numeric side with its closed form.
///
/// Quadrature trouble (non-convergence, a non-finite node) is reported in
/// the result with `pass = false`; only an unknown id is an error.
pub fn verify(id: &str, cfg: &VerifyConfig) -> Result<VerificationResult> {
    let record = lookup(id)?;
    let tolerance = cfg.tolerance.unwrap_or(record.tolerance);
    let start = Instant::now();
    let outcome = evaluate(record, &cfg.quadrature);
    let seconds = start.elapsed().as_secs_f64();
    let mut result = VerificationResult {
        id: record.id.to_string(),
        anchor: record.anchor.to_string(),
        reference: record.closed_form(),
        computed: f64::NAN,
        abs_err: f64::NAN,
        rel_err: f64::NAN,
        evals: 0,
        seconds,
        tolerance,
        converged: false,
        pass: false,
        detail: None,
    };
    match outcome {
        Ok(o) => {
            result.reference = o.reference;
            result.computed = o.computed;
            result.abs_err = (o.computed - o.reference).abs();
            result.rel_err = relative_error(o.reference, o.computed);
            result.evals = o.evals;
            result.converged = o.converged;
            result.pass = o.converged && result.rel_err <= tolerance;
            if !o.converged {
                result.detail = Some("quadrature did not converge".into());
            }
        }
        Err(e) => result.detail = Some(e.to_string()),
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::constants::ZETA3;

    #[test]
    fn double_sum_grouping_matches_naive() {
        let n = 40;
        let r: Vec<f64> = (0..n as u64).map(crate::specfun::binom_ratio_2n_n).collect();
        let mut naive = 0.0;
        for i in 0..n {
            for j in 0..n {
                naive += r[i] * r[i] * r[j] * r[j] / (i + j + 1) as f64;
            }
        }
        assert!((double_sum(n) - naive).abs() < 1e-14);
        assert_eq!(double_sum(1), 1.0);
        let full = double_sum(4000);
        let target = 14.0 * ZETA3 / (std::f64::consts::PI * std::f64::consts::PI);
        assert!(((full - target) / target).abs() < 1e-3);
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(verify("nosuch", &VerifyConfig::default()), Err(Error::UnknownId(_))));
        assert!(lookup("m3").is_ok());
    }

    #[test]
    fn tolerance_override() {
        let cfg = VerifyConfig {
            tolerance: Some(1e-30),
            ..Default::default()
        };
        let r = verify("cg2", &cfg).unwrap();
        assert_eq!(r.tolerance, 1e-30);
        assert!(!r.pass || r.rel_err == 0.0);
    }
}
