//! The one-parameter family of integrals and its two closed-form regimes.
//!
//! For `alpha` in `(0, 1]` the family integral has an elementary closed
//! form involving `arccoth`. For `alpha < 0` it reduces to the arctangent
//! returned by [`arctan_classifier`], and whether the integral has a closed
//! form hinges on that single value.

use std::f64::consts::{PI, SQRT_2};

use crate::elliptic::{e_comp, ke_with};
use crate::error::{domain, Result};
use crate::quadrature::{integrate_01_split, QuadratureConfig, QuadratureResult, UnitPoint};
use crate::specfun::dilog;

/// A family parameter checked against the regime it is used in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyParameter {
    alpha: f64,
}

impl FamilyParameter {
    /// `alpha` in `(0, 1]`, where the arccoth closed form applies.
    pub fn closed_form_branch(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(domain("family", format!("alpha = {alpha} outside (0, 1]")));
        }
        Ok(Self { alpha })
    }

    /// `alpha < 0`, where the integral reduces to an arctangent.
    pub fn classifier_branch(alpha: f64) -> Result<Self> {
        if !(alpha < 0.0) || !alpha.is_finite() {
            return Err(domain("arctan_classifier", format!("alpha = {alpha} must be negative")));
        }
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

/// The family integrand
/// `E(1-x) K^2(m) / (2 + 2s - alpha x)^{1/4}`, `s = sqrt(1 - alpha x)`,
/// `m = 1/2 - 1/sqrt(2 + 2s)`, evaluated as
/// `m = -alpha x / ((1+s) r (r+2))` with `r = sqrt(2 + 2s)`.
pub(crate) fn family_integrand(alpha: f64, p: UnitPoint) -> f64 {
    let s = ((1.0 - alpha) + alpha * p.one_minus_x).sqrt();
    let r = (2.0 + 2.0 * s).sqrt();
    let m = -alpha * p.x / ((1.0 + s) * r * (r + 2.0));
    let k = ke_with(m, 1.0 - m).k;
    e_comp(p.x) * k * k / (2.0 + 2.0 * s - alpha * p.x).powf(0.25)
}

/// Closed form of the family integral for `0 < alpha <= 1`.
pub fn family_closed_form(alpha: f64) -> Result<f64> {
    let alpha = FamilyParameter::closed_form_branch(alpha)?.alpha;
    let root = (1.0 - alpha).sqrt();
    let y = SQRT_2 * (root + 1.0).sqrt() / alpha.sqrt();
    let arccoth = 0.5 * ((y + 1.0) / (y - 1.0)).ln();
    let inner = 36.0 * alpha + 2.0 * root
        - 15.0 * SQRT_2 * ((root + 1.0) / alpha).sqrt() * alpha * arccoth
        - 2.0;
    Ok(PI * PI * inner / (60.0 * (root + 1.0).sqrt() * alpha))
}

/// Quadrature of the family integral for `0 < alpha <= 1`.
pub fn family_integral(alpha: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult> {
    let alpha = FamilyParameter::closed_form_branch(alpha)?.alpha;
    integrate_01_split(|p| family_integrand(alpha, p), cfg)
}

/// `Li2(-sqrt(1-a) - sqrt(-a)) - Li2(1 - sqrt(1-a) - sqrt(-a))` for `a <= 0`.
pub fn dilog_combo(alpha: f64) -> Result<f64> {
    if !(alpha <= 0.0) || !alpha.is_finite() {
        return Err(domain("dilog_combo", format!("alpha = {alpha}: arguments are complex for alpha > 0")));
    }
    let u = (1.0 - alpha).sqrt() + (-alpha).sqrt();
    Ok(dilog(-u)? - dilog(1.0 - u)?)
}

/// `arctan((sqrt(1-a) + sqrt(-a) + 1) / (sqrt 2 sqrt(sqrt(1-a) + 1)))` for
/// `a < 0`.
pub fn arctan_classifier(alpha: f64) -> Result<f64> {
    let alpha = FamilyParameter::classifier_branch(alpha)?.alpha;
    let root = (1.0 - alpha).sqrt();
    Ok(((root + (-alpha).sqrt() + 1.0) / (SQRT_2 * (root + 1.0).sqrt())).atan())
}

/// A fraction `numerator / denominator` with its distance to a target.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rational {
    pub numerator: i64,
    pub denominator: u64,
    pub error: f64,
}

/// The fraction with the smallest denominator `<= max_denominator` whose
/// distance to `x` is at most `tol`, or else the closest one overall.
pub fn nearest_rational(x: f64, max_denominator: u64, tol: f64) -> Rational {
    let mut best = Rational {
        numerator: x.round() as i64,
        denominator: 1,
        error: (x - x.round()).abs(),
    };
    for q in 1..=max_denominator.max(1) {
        let p = (x * q as f64).round();
        let error = (x - p / q as f64).abs();
        if error <= tol {
            return Rational {
                numerator: p as i64,
                denominator: q,
                error,
            };
        }
        if error < best.error {
            best = Rational {
                numerator: p as i64,
                denominator: q,
                error,
            };
        }
    }
    best
}
