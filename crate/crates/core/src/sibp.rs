//! Half-order Caputo operators and semi-integration by parts.
//!
//! On monomials the operators act as
//!
//! ```text
//! D^{1/2}  x^a = Gamma(a+1)/Gamma(a+1/2) x^{a-1/2}
//! D^{-1/2} x^a = Gamma(a+1)/Gamma(a+3/2) x^{a+1/2}
//! ```
//!
//! and semi-integration by parts states that, with `(tau f)(x) = f(1-x)`,
//! `int_0^1 f g = int_0^1 [D^{1/2} tau f](x) [D^{-1/2} g](1-x) dx`.
//! The analytic variant moves the operators onto coefficient sequences:
//! for `f = sum a_n x^{n+1/2}` and `g = sum b_n (1-x)^{n+1/2}` the right side
//! carries the weights `Gamma(n+3/2)/Gamma(n+1)` and `Gamma(n+3/2)/Gamma(n+2)`.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::quadrature::{integrate_01, integrate_01_split, QuadratureConfig};
use crate::specfun::gamma_ratio;
use crate::specfun::CompensatedSum;

/// Exponents closer than this are merged into one term.
pub const EXPONENT_TOL: f64 = 1e-12;

/// A finite sum `sum c_i x^{a_i}` with strictly increasing exponents
/// `a_i > -1`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GeneralizedSeries {
    terms: Vec<(f64, f64)>,
}

impl GeneralizedSeries {
    /// Build from `(coefficient, exponent)` pairs in any order. Terms whose
    /// exponents agree to [`EXPONENT_TOL`] are added together.
    pub fn new<I: IntoIterator<Item = (f64, f64)>>(terms: I) -> Result<Self> {
        let mut terms: Vec<(f64, f64)> = terms.into_iter().collect();
        if let Some(&(c, a)) = terms.iter().find(|(c, a)| !c.is_finite() || !a.is_finite() || *a <= -1.0) {
            return Err(domain(
                "GeneralizedSeries",
                format!("term {c} x^{a} is not finite or not integrable on (0, 1)"),
            ));
        }
        terms.sort_by(|l, r| l.1.total_cmp(&r.1));
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(terms.len());
        for (c, a) in terms {
            match merged.last_mut() {
                Some(last) if (a - last.1).abs() <= EXPONENT_TOL => last.0 += c,
                _ => merged.push((c, a)),
            }
        }
        Ok(Self { terms: merged })
    }

    pub fn monomial(coefficient: f64, exponent: f64) -> Result<Self> {
        Self::new([(coefficient, exponent)])
    }

    /// A polynomial from its coefficients in increasing degree.
    pub fn polynomial(coefficients: &[f64]) -> Result<Self> {
        Self::new(coefficients.iter().enumerate().map(|(k, &c)| (c, k as f64)))
    }

    pub fn terms(&self) -> &[(f64, f64)] {
        &self.terms
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.terms.iter().map(|&(c, a)| c * x.powf(a)).sum()
    }

    /// `int_0^1` of the series, exactly.
    pub fn integral(&self) -> f64 {
        self.terms.iter().map(|&(c, a)| c / (a + 1.0)).sum()
    }

    /// The reflection `f(1 - x)` of a series with nonnegative integer
    /// exponents, expanded binomially.
    pub fn reflect_polynomial(&self) -> Result<Self> {
        let mut out = Vec::new();
        for &(c, a) in &self.terms {
            let k = a.round();
            if (a - k).abs() > EXPONENT_TOL || k < 0.0 {
                return Err(domain("reflect_polynomial", format!("exponent {a} is not a nonnegative integer")));
            }
            let k = k as u32;
            let mut binom = 1.0;
            for j in 0..=k {
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                out.push((c * sign * binom, j as f64));
                binom = binom * (k - j) as f64 / (j + 1) as f64;
            }
        }
        Self::new(out)
    }
}

/// `D^{1/2}` applied termwise. Exponents must be nonnegative.
pub fn semi_derivative(s: &GeneralizedSeries) -> Result<GeneralizedSeries> {
    if let Some(&(_, a)) = s.terms.iter().find(|t| t.1 < 0.0) {
        return Err(domain("semi_derivative", format!("exponent {a} < 0")));
    }
    let mut out = Vec::with_capacity(s.terms.len());
    for &(c, a) in &s.terms {
        out.push((c * gamma_ratio(a + 1.0, a + 0.5)?, a - 0.5));
    }
    GeneralizedSeries::new(out)
}

/// `D^{-1/2}` applied termwise.
pub fn semi_primitive(s: &GeneralizedSeries) -> Result<GeneralizedSeries> {
    let mut out = Vec::with_capacity(s.terms.len());
    for &(c, a) in &s.terms {
        out.push((c * gamma_ratio(a + 1.0, a + 1.5)?, a + 0.5));
    }
    GeneralizedSeries::new(out)
}

/// The two sides of an integration-by-parts identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sides {
    pub lhs: f64,
    pub rhs: f64,
}

impl Sides {
    pub fn relative_gap(&self) -> f64 {
        (self.lhs - self.rhs).abs() / self.lhs.abs().max(1.0)
    }
}

fn value_of(r: crate::quadrature::QuadratureResult, op: &'static str) -> Result<f64> {
    if !r.converged {
        return Err(Error::NoConvergence {
            op,
            terms: r.evaluations,
        });
    }
    Ok(r.value)
}

/// Both sides of `int f g = int [D^{1/2} tau f](x) [D^{-1/2} g](1-x) dx`
/// by quadrature. `f` must be a polynomial.
pub fn sibp_classic_check(
    f: &GeneralizedSeries,
    g: &GeneralizedSeries,
    cfg: &QuadratureConfig,
) -> Result<Sides> {
    let left = semi_derivative(&f.reflect_polynomial()?)?;
    let right = semi_primitive(g)?;
    let lhs = integrate_01(|x| f.eval(x) * g.eval(x), cfg)?;
    let rhs = integrate_01_split(|p| left.eval(p.x) * right.eval(p.one_minus_x), cfg)?;
    Ok(Sides {
        lhs: value_of(lhs, "sibp_classic_check")?,
        rhs: value_of(rhs, "sibp_classic_check")?,
    })
}

/// A truncated coefficient sequence with a declared geometric decay bound
/// `limsup |c_{n+1}/c_n| <= decay_ratio`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSequence {
    coeffs: Vec<f64>,
    decay_ratio: f64,
}

impl CoefficientSequence {
    pub fn new(coeffs: Vec<f64>, decay_ratio: f64) -> Result<Self> {
        if !(decay_ratio > 0.0 && decay_ratio <= 1.0) {
            return Err(Error::InvalidConfig(format!("decay_ratio = {decay_ratio} outside (0, 1]")));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(domain("CoefficientSequence", "non-finite coefficient"));
        }
        Ok(Self { coeffs, decay_ratio })
    }

    /// Kronecker delta at `index`.
    pub fn delta(index: usize) -> Self {
        let mut coeffs = vec![0.0; index + 1];
        coeffs[index] = 1.0;
        Self {
            coeffs,
            decay_ratio: 0.5,
        }
    }

    /// Sample `f` up to the smallest `N` with `C r^N (N+1) < eps/10`, where
    /// `r` is the declared ratio and `C` bounds `|f(n)| / r^n` over the
    /// first terms. The extra factor `N + 1` absorbs the Gamma weights.
    ///
    /// With `decay_ratio = 1` no such `N` exists; `fallback_terms` are kept
    /// so the sequence can still be inspected, but
    /// [`sibp_variant_sides`] will reject it.
    pub fn from_fn<F: Fn(usize) -> f64>(
        f: F,
        decay_ratio: f64,
        target_eps: f64,
        fallback_terms: usize,
    ) -> Result<Self> {
        if decay_ratio >= 1.0 {
            return Self::new((0..fallback_terms).map(&f).collect(), decay_ratio);
        }
        let bound = (0..16)
            .map(|n| f(n).abs() / decay_ratio.powi(n as i32))
            .fold(0.0, f64::max);
        let mut n = 0usize;
        while bound * decay_ratio.powi(n as i32) * (n + 1) as f64 >= target_eps / 10.0 {
            n += 1;
        }
        Self::new((0..=n.max(1)).map(f).collect(), decay_ratio)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn decay_ratio(&self) -> f64 {
        self.decay_ratio
    }
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// `Gamma(n+3/2)/Gamma(n+1)` and `Gamma(n+3/2)/Gamma(n+2)` for `n < len`.
fn variant_weights(len: usize) -> (Vec<f64>, Vec<f64>) {
    let mut first = Vec::with_capacity(len);
    let mut second = Vec::with_capacity(len);
    let (mut w, mut v) = (0.5 * PI.sqrt(), 0.5 * PI.sqrt());
    for n in 0..len {
        first.push(w);
        second.push(v);
        let nf = n as f64;
        w *= (nf + 1.5) / (nf + 1.0);
        v *= (nf + 1.5) / (nf + 2.0);
    }
    (first, second)
}

/// Both sides of the analytic semi-integration-by-parts identity:
///
/// ```text
/// int_0^1 [sum a_n x^{n+1/2}] [sum b_n (1-x)^{n+1/2}] dx
///   = int_0^1 [sum Gamma(n+3/2)/Gamma(n+1) a_n (1-x)^n]
///             [sum Gamma(n+3/2)/Gamma(n+2) b_n x^{n+1}] dx
/// ```
pub fn sibp_variant_sides(
    a: &CoefficientSequence,
    b: &CoefficientSequence,
    cfg: &QuadratureConfig,
) -> Result<Sides> {
    for s in [a, b] {
        if s.decay_ratio >= 1.0 {
            return Err(domain(
                "sibp_variant_sides",
                "decay ratio 1: the Gamma-weighted series is not certified summable at the endpoint",
            ));
        }
    }
    let (wa, _) = variant_weights(a.coeffs.len());
    let (_, wb) = variant_weights(b.coeffs.len());
    let a_weighted: Vec<f64> = a.coeffs.iter().zip(&wa).map(|(c, w)| c * w).collect();
    let b_weighted: Vec<f64> = b.coeffs.iter().zip(&wb).map(|(c, w)| c * w).collect();

    let lhs = integrate_01_split(
        |p| {
            p.x.sqrt() * horner(&a.coeffs, p.x) * p.one_minus_x.sqrt() * horner(&b.coeffs, p.one_minus_x)
        },
        cfg,
    )?;
    let rhs = integrate_01_split(
        |p| horner(&a_weighted, p.one_minus_x) * p.x * horner(&b_weighted, p.x),
        cfg,
    )?;
    Ok(Sides {
        lhs: value_of(lhs, "sibp_variant_sides")?,
        rhs: value_of(rhs, "sibp_variant_sides")?,
    })
}

/// Outcome of summing a slowly convergent series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub value: f64,
    pub terms: usize,
    pub converged: bool,
}

/// Absolute tail target for the reduced series.
pub const REDUCED_SERIES_EPS: f64 = 1e-10;
const REDUCED_SERIES_MAX_TERMS: usize = 100_000_000;

/// Sum `bracket(n) * weight(n)` with `weight(n+1) = weight(n) * step(n)`.
///
/// Terms decay like `n^{-5/2} rho^n`; the tail after `N` is estimated as
/// `|t_N| N / (3/2)`, or `|t_N| rho / (1 - rho)` when that is smaller.
fn sum_bracket_series<B, S>(bracket: B, step: S, rho: f64) -> SeriesSum
where
    B: Fn(f64) -> f64,
    S: Fn(f64) -> f64,
{
    let mut sum = CompensatedSum::default();
    let mut weight = 1.0;
    for n in 0..REDUCED_SERIES_MAX_TERMS {
        let nf = n as f64;
        let term = bracket(nf) * weight;
        sum.add(term);
        let geometric = if rho < 1.0 { rho / (1.0 - rho) } else { f64::INFINITY };
        let tail = term.abs() * (nf / 1.5).min(geometric);
        if n >= 16 && tail < REDUCED_SERIES_EPS {
            return SeriesSum {
                value: sum.value(),
                terms: n + 1,
                converged: true,
            };
        }
        weight *= step(nf);
    }
    SeriesSum {
        value: sum.value(),
        terms: REDUCED_SERIES_MAX_TERMS,
        converged: false,
    }
}

/// `C(2n+2, n+1) / C(2n, n) / 4`.
fn step_2n_n(n: f64) -> f64 {
    (2.0 * n + 1.0) / (2.0 * n + 2.0)
}

/// `C(4n+4, 2n+2) / C(4n, 2n) / 16`.
fn step_4n_2n(n: f64) -> f64 {
    (4.0 * n + 1.0) * (4.0 * n + 3.0) / (4.0 * (2.0 * n + 1.0) * (2.0 * n + 2.0))
}

/// `sum (1/(2n+1)^2 - 1/(2(2n+1)) - 1/(2n+3)^2 + 3/(2(2n+3)) - 1/(2n+5))
/// C(2n,n) 4^-n`, equal to `pi (1 + 4 ln 2) / 16`.
pub fn reduced_series_m1() -> SeriesSum {
    sum_bracket_series(
        |n| {
            let (p, q, r) = (2.0 * n + 1.0, 2.0 * n + 3.0, 2.0 * n + 5.0);
            1.0 / (p * p) - 0.5 / p - 1.0 / (q * q) + 1.5 / q - 1.0 / r
        },
        step_2n_n,
        1.0,
    )
}

/// The `alpha = 1` member of [`reduced_series_family`].
pub fn reduced_series_c2() -> SeriesSum {
    sum_bracket_series(
        |n| {
            let (p, q, r) = (2.0 * n + 1.0, 2.0 * n + 3.0, 2.0 * n + 5.0);
            (4.0 / (p * p) - 33.0 / (16.0 * p) - 15.0 / (4.0 * q * q) + 6.0 / q - 63.0 / (16.0 * r)) / 4.0
        },
        step_4n_2n,
        1.0,
    )
}

/// `sum (-1/(8(2n+1)^2) - 1/(32(2n+1)) + 1/(8(2n+3)^2) + 3/(32(2n+3))
/// - 11/(32(2n+5)) + 9/(32(2n+7))) C(2n,n) 2^{1-2n}`, equal to
/// `-(29 + 32 ln 2) pi / 512`.
pub fn reduced_series_l1() -> SeriesSum {
    sum_bracket_series(
        |n| {
            let (p, q, r, s) = (2.0 * n + 1.0, 2.0 * n + 3.0, 2.0 * n + 5.0, 2.0 * n + 7.0);
            2.0 * (-1.0 / (8.0 * p * p) - 1.0 / (32.0 * p) + 1.0 / (8.0 * q * q) + 3.0 / (32.0 * q)
                - 11.0 / (32.0 * r)
                + 9.0 / (32.0 * s))
        },
        step_2n_n,
        1.0,
    )
}

/// `sum (4/(2n+1)^2 - (32+a)/(16(2n+1)) - 15a/(4(2n+3)^2) + 2(1+2a)/(2n+3)
/// - 63a/(16(2n+5))) C(4n,2n) 2^{-2-4n} a^n` for `|a| <= 1`.
pub fn reduced_series_family(alpha: f64) -> Result<SeriesSum> {
    if !(alpha.abs() <= 1.0) {
        return Err(domain("reduced_series_family", format!("|alpha| = {} > 1", alpha.abs())));
    }
    Ok(sum_bracket_series(
        |n| {
            let (p, q, r) = (2.0 * n + 1.0, 2.0 * n + 3.0, 2.0 * n + 5.0);
            (4.0 / (p * p) - (32.0 + alpha) / (16.0 * p) - 15.0 * alpha / (4.0 * q * q)
                + 2.0 * (1.0 + 2.0 * alpha) / q
                - 63.0 * alpha / (16.0 * r))
                / 4.0
        },
        |n| alpha * step_4n_2n(n),
        alpha.abs(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::binom_ratio_4n_2n;
    use std::f64::consts::LN_2;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn merges_and_sorts() {
        let s = GeneralizedSeries::new([(1.0, 2.0), (2.0, 0.5), (3.0, 2.0 + 1e-13)]).unwrap();
        assert_eq!(s.terms(), &[(2.0, 0.5), (4.0, 2.0)]);
        assert!(GeneralizedSeries::monomial(1.0, -1.0).is_err());
        assert!(GeneralizedSeries::monomial(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn operator_examples() {
        let one = GeneralizedSeries::monomial(1.0, 0.0).unwrap();
        let d = semi_derivative(&one).unwrap();
        assert_eq!(d.terms().len(), 1);
        assert!(rel(d.terms()[0].0, 1.0 / PI.sqrt()) < 1e-14 && d.terms()[0].1 == -0.5);

        let half = GeneralizedSeries::monomial(1.0, 0.5).unwrap();
        let d = semi_derivative(&half).unwrap();
        assert!(rel(d.terms()[0].0, PI.sqrt() / 2.0) < 1e-14 && d.terms()[0].1 == 0.0);

        let x = GeneralizedSeries::monomial(1.0, 1.0).unwrap();
        let d = semi_derivative(&x).unwrap();
        assert!(rel(d.terms()[0].0, 2.0 / PI.sqrt()) < 1e-14 && d.terms()[0].1 == 0.5);

        let p = semi_primitive(&one).unwrap();
        assert!(rel(p.terms()[0].0, 2.0 / PI.sqrt()) < 1e-14 && p.terms()[0].1 == 0.5);
        let p = semi_primitive(&half).unwrap();
        assert!(rel(p.terms()[0].0, PI.sqrt() / 2.0) < 1e-14 && p.terms()[0].1 == 1.0);

        let s = GeneralizedSeries::monomial(3.7, 2.25).unwrap();
        let back = semi_primitive(&semi_derivative(&s).unwrap()).unwrap();
        assert!(rel(back.terms()[0].0, 3.7) < 1e-13 && back.terms()[0].1 == 2.25);

        assert!(semi_derivative(&GeneralizedSeries::monomial(1.0, -0.5).unwrap()).is_err());
    }

    #[test]
    fn reflection_expands_binomially() {
        let f = GeneralizedSeries::polynomial(&[0.0, 0.0, 1.0]).unwrap();
        let r = f.reflect_polynomial().unwrap();
        assert_eq!(r.terms(), &[(1.0, 0.0), (-2.0, 1.0), (1.0, 2.0)]);
        assert!(GeneralizedSeries::monomial(1.0, 0.5).unwrap().reflect_polynomial().is_err());
    }

    #[test]
    fn classic_examples() {
        let cfg = QuadratureConfig::default();
        let one = GeneralizedSeries::polynomial(&[1.0]).unwrap();
        let s = sibp_classic_check(&one, &one, &cfg).unwrap();
        assert!((s.lhs - 1.0).abs() < 1e-12 && (s.rhs - 1.0).abs() < 1e-12, "{s:?}");

        let f = GeneralizedSeries::polynomial(&[0.0, 1.0]).unwrap();
        let g = GeneralizedSeries::monomial(1.0, 0.5).unwrap();
        let s = sibp_classic_check(&f, &g, &cfg).unwrap();
        assert!(rel(s.lhs, 0.4) < 1e-12 && rel(s.rhs, 0.4) < 1e-12, "{s:?}");

        let f = GeneralizedSeries::polynomial(&[1.0, -1.0]).unwrap();
        let g = GeneralizedSeries::monomial(1.0, 1.5).unwrap();
        let s = sibp_classic_check(&f, &g, &cfg).unwrap();
        let exact = 2.0 / 5.0 - 2.0 / 7.0;
        assert!(rel(s.lhs, exact) < 1e-12 && rel(s.rhs, exact) < 1e-12, "{s:?}");
    }

    #[test]
    fn variant_weights_match_gamma() {
        let (w, v) = variant_weights(30);
        for n in 0..30 {
            let nf = n as f64;
            assert!(rel(w[n], gamma_ratio(nf + 1.5, nf + 1.0).unwrap()) < 1e-14);
            assert!(rel(v[n], gamma_ratio(nf + 1.5, nf + 2.0).unwrap()) < 1e-14);
        }
    }

    #[test]
    fn variant_delta_examples() {
        let cfg = QuadratureConfig::default();
        let s = sibp_variant_sides(&CoefficientSequence::delta(0), &CoefficientSequence::delta(0), &cfg).unwrap();
        assert!(rel(s.lhs, PI / 8.0) < 1e-12 && rel(s.rhs, PI / 8.0) < 1e-12, "{s:?}");
        let s = sibp_variant_sides(&CoefficientSequence::delta(2), &CoefficientSequence::delta(1), &cfg).unwrap();
        // B(7/2, 5/2) = Gamma(7/2) Gamma(5/2) / Gamma(6) = 3 pi / 256
        let beta = 3.0 * PI / 256.0;
        assert!(rel(s.lhs, beta) < 1e-12 && rel(s.rhs, beta) < 1e-12, "{s:?}");
    }

    #[test]
    fn decay_ratio_one_is_rejected() {
        let a = CoefficientSequence::from_fn(|n| crate::specfun::binom_ratio_2n_n(n as u64), 1.0, 1e-12, 64).unwrap();
        let b = CoefficientSequence::from_fn(
            |n| {
                let r = crate::specfun::binom_ratio_2n_n(n as u64);
                (n + 1) as f64 * r * r / (2 * n + 1) as f64
            },
            1.0,
            1e-12,
            64,
        )
        .unwrap();
        assert!(matches!(
            sibp_variant_sides(&a, &b, &QuadratureConfig::default()),
            Err(Error::Domain { .. })
        ));
        assert!(CoefficientSequence::new(vec![1.0], 1.5).is_err());
        assert!(CoefficientSequence::new(vec![1.0], 0.0).is_err());
    }

    #[test]
    fn geometric_truncation() {
        let s = CoefficientSequence::from_fn(|n| 0.5f64.powi(n as i32), 0.5, 1e-12, 0).unwrap();
        let n = s.coeffs().len() - 1;
        assert!(0.5f64.powi(n as i32) * ((n + 1) as f64) < 1e-13);
        assert!(0.5f64.powi(n as i32 - 1) * n as f64 >= 1e-13);
    }

    #[test]
    fn reduced_series_values() {
        let m1 = reduced_series_m1();
        assert!(m1.converged);
        assert!(rel(m1.value, PI * (1.0 + 4.0 * LN_2) / 16.0) < 1e-9, "{m1:?}");

        let l1 = reduced_series_l1();
        assert!(l1.converged);
        assert!(rel(l1.value, -(29.0 + 32.0 * LN_2) * PI / 512.0) < 1e-9, "{l1:?}");

        let c2 = reduced_series_c2();
        let expected = 2.0 * std::f64::consts::SQRT_2 * 17.0 / 30.0 - std::f64::consts::SQRT_2.ln_1p();
        assert!(c2.converged && rel(c2.value, expected) < 1e-9, "{c2:?}");
        let fam = reduced_series_family(1.0).unwrap();
        assert!(rel(fam.value, c2.value) < 1e-14);
        assert!(reduced_series_family(1.5).is_err());
    }

    #[test]
    fn family_series_weights() {
        // the recurrence reproduces C(4n,2n) 16^-n
        let mut w = 1.0;
        for n in 0..200u64 {
            assert!(rel(w, binom_ratio_4n_2n(n)) < 1e-13);
            w *= step_4n_2n(n as f64);
        }
    }
}
