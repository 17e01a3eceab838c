use crate::error::{domain, Error, Result};

const EPS: f64 = 1e-15;
const MIN_TERMS: usize = 16;
const MAX_TERMS: usize = 10_000_000;

/// Neumaier-compensated running sum.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

fn nonpositive_integer(a: f64) -> bool {
    a <= 0.0 && a == a.floor()
}

/// Ratio `t_{n+1} / t_n` of consecutive hypergeometric terms.
fn term_ratio(num: &[f64], den: &[f64], x: f64, n: usize) -> f64 {
    let nf = n as f64;
    let mut r = x / (nf + 1.0);
    for &a in num {
        r *= a + nf;
    }
    for &b in den {
        r /= b + nf;
    }
    r
}

/// Generalized hypergeometric series `pFq(num; den; x)` summed directly.
///
/// For `|x| < 1` (or any `x` when `p <= q`) terms are added until
/// `n >= 16`, the term ratio is at most `max(0.999, |x|)` and the geometric
/// tail bound `|t_n| rho / (1 - rho)` drops below `1e-15 |S|`.
///
/// On the unit circle (`p = q + 1`, `|x| = 1`, parameter excess
/// `s = sum(den) - sum(num) > 0`) the terms decay only like `n^-(s+1)`;
/// there the partial sums at `N, 2N, ..., 16N` are Richardson-extrapolated
/// in the known powers `N^-s, N^-(s+1), ...`.
pub fn pfq_unit(num: &[f64], den: &[f64], x: f64) -> Result<f64> {
    if !x.is_finite() || num.iter().chain(den).any(|v| !v.is_finite()) {
        return Err(domain("pfq_unit", "non-finite parameter or argument"));
    }
    let terminate_at = num
        .iter()
        .filter(|&&a| nonpositive_integer(a))
        .map(|&a| (-a) as usize)
        .min();
    if let Some(&b) = den.iter().find(|&&b| nonpositive_integer(b)) {
        let pole = (-b) as usize;
        if terminate_at.map_or(true, |m| m > pole) {
            return Err(domain("pfq_unit", format!("denominator parameter {b} is a pole")));
        }
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    if let Some(m) = terminate_at {
        let mut sum = CompensatedSum::default();
        let mut term = 1.0;
        for n in 0..=m {
            sum.add(term);
            term *= term_ratio(num, den, x, n);
        }
        return Ok(sum.value());
    }

    let (p, q) = (num.len(), den.len());
    if p > q + 1 {
        return Err(domain("pfq_unit", format!("{p}F{q} diverges for x != 0")));
    }
    if p == q + 1 {
        if x.abs() > 1.0 {
            return Err(domain("pfq_unit", format!("|x| = {} > 1", x.abs())));
        }
        if x.abs() == 1.0 {
            let excess: f64 = den.iter().sum::<f64>() - num.iter().sum::<f64>();
            if excess <= 0.0 {
                return Err(domain(
                    "pfq_unit",
                    format!("parameter excess {excess} <= 0 on the unit circle"),
                ));
            }
            return Ok(unit_circle(num, den, x, excess));
        }
    }
    geometric(num, den, x)
}

fn geometric(num: &[f64], den: &[f64], x: f64) -> Result<f64> {
    let guard = x.abs().max(0.999);
    // future ratios approach |x| from below when p = q + 1 and fall to 0 when p <= q
    let limit = if num.len() == den.len() + 1 { x.abs() } else { 0.0 };
    let mut sum = CompensatedSum::default();
    let mut term = 1.0;
    for n in 0..MAX_TERMS {
        sum.add(term);
        let ratio = term_ratio(num, den, x, n);
        let r = ratio.abs();
        if n >= MIN_TERMS && r <= guard && r < 1.0 {
            let rho = r.max(limit);
            let tail = term.abs() * rho / (1.0 - rho);
            if tail <= EPS * sum.value().abs() {
                return Ok(sum.value());
            }
        }
        term *= ratio;
        if term == 0.0 {
            return Ok(sum.value());
        }
    }
    Err(Error::NoConvergence {
        op: "pfq_unit",
        terms: MAX_TERMS,
    })
}

const RICHARDSON_BASE: usize = 2048;
const RICHARDSON_LEVELS: usize = 5;

fn unit_circle(num: &[f64], den: &[f64], x: f64, excess: f64) -> f64 {
    let mut partial = Vec::with_capacity(RICHARDSON_LEVELS);
    let mut sum = CompensatedSum::default();
    let mut term = 1.0;
    let mut checkpoint = RICHARDSON_BASE;
    let mut n = 0;
    while partial.len() < RICHARDSON_LEVELS {
        sum.add(term);
        term *= term_ratio(num, den, x, n);
        n += 1;
        if n == checkpoint {
            partial.push(sum.value());
            checkpoint *= 2;
        }
    }
    // error of S_N expands in N^-(s), N^-(s+1), ... for x = 1 and in
    // N^-(s+1), N^-(s+2), ... for x = -1 at even N
    let first = if x > 0.0 { excess } else { excess + 1.0 };
    richardson(&mut partial, first);
    partial[0]
}

/// In-place Richardson table for step ratio 2 and exponents `e, e+1, ...`.
pub(crate) fn richardson(values: &mut [f64], first_exponent: f64) {
    let len = values.len();
    for k in 0..len.saturating_sub(1) {
        let factor = 2f64.powf(first_exponent + k as f64);
        for i in 0..len - 1 - k {
            values[i] = (factor * values[i + 1] - values[i]) / (factor - 1.0);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    // AGM oracle for K(m), independent of the elliptic module
    fn agm_k(m: f64) -> f64 {
        let (mut a, mut b) = (1.0f64, (1.0 - m).sqrt());
        for _ in 0..20 {
            let next = 0.5 * (a + b);
            b = (a * b).sqrt();
            a = next;
        }
        PI / (2.0 * a)
    }

    #[test]
    fn empty_tail_at_zero() {
        assert_eq!(pfq_unit(&[0.5, 0.5], &[1.0], 0.0).unwrap(), 1.0);
    }

    #[test]
    fn gauss_series_is_complete_elliptic_k() {
        for &m in &[0.25, 0.6, -0.7, 0.95] {
            let got = pfq_unit(&[0.5, 0.5], &[1.0], m).unwrap();
            assert!(rel(got, 2.0 / PI * agm_k(m)) < 1e-14, "m = {m}");
        }
    }

    #[test]
    fn three_f_two_at_one() {
        // 3F2(1/4,1/2,3/4; 3/2,3/2; 1) = 1.0656799507071040471 (mpmath hyp3f2
        // and the 2-D integral representation, 20 digits)
        let v = pfq_unit(&[0.25, 0.5, 0.75], &[1.5, 1.5], 1.0).unwrap();
        assert!(rel(v, 1.065_679_950_707_104) < 1e-13, "{v}");
    }

    #[test]
    fn gauss_summation_at_one() {
        // 2F1(a,b;c;1) = Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)); a=b=1/2,c=2 -> 4/pi
        let v = pfq_unit(&[0.5, 0.5], &[2.0], 1.0).unwrap();
        assert!(rel(v, 4.0 / PI) < 1e-12, "{v}");
        // excess 0.1: slow decay n^-1.1
        let v = pfq_unit(&[0.45, 0.45], &[1.0], 1.0).unwrap();
        let g = crate::specfun::gamma;
        let exact = g(1.0).unwrap() * g(0.1).unwrap() / (g(0.55).unwrap() * g(0.55).unwrap());
        assert!(rel(v, exact) < 1e-9, "{v} vs {exact}");
    }

    #[test]
    fn alternating_unit_argument() {
        // sum (-1)^n 2/((n+1)(n+2)) = 4 ln 2 - 2
        let v = pfq_unit(&[1.0, 1.0], &[3.0], -1.0).unwrap();
        assert!(rel(v, 4.0 * LN_2 - 2.0) < 1e-13, "{v}");
        assert!(pfq_unit(&[1.0, 1.0], &[2.0], -1.0).is_err());
    }

    #[test]
    fn terminating_series() {
        // 2F1(-2, b; c; x) = 1 - 2bx/c + b(b+1)x^2/(c(c+1))
        let (b, c, x) = (1.5, 2.5, 3.0);
        let expected = 1.0 - 2.0 * b * x / c + b * (b + 1.0) * x * x / (c * (c + 1.0));
        assert!(rel(pfq_unit(&[-2.0, b], &[c], x).unwrap(), expected) < 1e-15);
    }

    #[test]
    fn entire_series_any_argument() {
        // 0F0(x) = e^x
        assert!(rel(pfq_unit(&[], &[], 3.0).unwrap(), 3f64.exp()) < 1e-14);
        assert!(rel(pfq_unit(&[], &[], -2.0).unwrap(), (-2f64).exp()) < 1e-13);
    }

    #[test]
    fn divergent_inputs() {
        assert!(pfq_unit(&[0.5, 0.5], &[1.0], 1.0).is_err());
        assert!(pfq_unit(&[0.5, 0.5], &[1.0], 1.2).is_err());
        assert!(pfq_unit(&[1.0, 1.0, 1.0], &[1.0], 0.1).is_err());
        assert!(pfq_unit(&[0.5], &[-3.0], 0.2).is_err());
    }
}
