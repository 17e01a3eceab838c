//! Complete elliptic integrals in the parameter convention.
//!
//! `K(m) = int_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt` and
//! `E(m) = int_0^{pi/2} (1 - m sin^2 t)^{1/2} dt`, so the modulus form
//! `K(k)` is `K(m = k^2)`. Negative parameters are real and allowed; they
//! are reduced to `(0, 1)` by the imaginary-modulus transformation.
//!
//! Most entry points come in two flavours: one taking `m` and one taking
//! the complementary parameter `1 - m`. Integrands that approach the
//! logarithmic singularity at `m = 1` should pass the complement, which is
//! usually available to full relative precision when `m` itself is not.

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::specfun::pfq_unit;

const AGM_MAX_ITER: usize = 40;

/// A parameter `m < 1`, stored together with its complement `1 - m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticParameter {
    m: f64,
    complement: f64,
}

impl EllipticParameter {
    pub fn new(m: f64) -> Result<Self> {
        if !(m < 1.0) || !m.is_finite() {
            return Err(domain("EllipticParameter", format!("m = {m} must be finite and < 1")));
        }
        Ok(Self {
            m,
            complement: 1.0 - m,
        })
    }

    /// Build from `1 - m`, keeping the complement exact.
    pub fn from_complement(complement: f64) -> Result<Self> {
        if !(complement > 0.0) || !complement.is_finite() {
            return Err(domain(
                "EllipticParameter",
                format!("complement 1 - m = {complement} must be finite and > 0"),
            ));
        }
        Ok(Self {
            m: 1.0 - complement,
            complement,
        })
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn complement(&self) -> f64 {
        self.complement
    }

    pub fn k(&self) -> f64 {
        ke_pair(self.m, self.complement).k
    }

    pub fn e(&self) -> f64 {
        ke_pair(self.m, self.complement).e
    }

    pub fn ke(&self) -> EllipticPair {
        ke_pair(self.m, self.complement)
    }
}

/// `K(m)`, `E(m)` and the difference `K(m) - E(m)`, the latter computed
/// without cancellation for small `|m|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticPair {
    pub k: f64,
    pub e: f64,
    pub k_minus_e: f64,
}

/// AGM on `(1, root)` with `root = sqrt(1 - m)`, for `0 <= m < 1`.
///
/// Returns `K` and `S = sum_n 2^{n-1} c_n^2` with `c_0^2 = m`, so that
/// `K - E = K S`. The `c_n` follow `c_{n+1} = c_n^2 / (4 a_{n+1})`, which
/// never subtracts nearly equal numbers.
fn agm(m: f64, root: f64) -> (f64, f64) {
    let mut a = 1.0f64;
    let mut b = root;
    let mut c = m.sqrt();
    let mut sum = 0.5 * m;
    let mut weight = 0.5;
    for _ in 0..AGM_MAX_ITER {
        if c <= f64::EPSILON * a {
            break;
        }
        let a_next = 0.5 * (a + b);
        b = (a * b).sqrt();
        c = c * c / (4.0 * a_next);
        a = a_next;
        weight *= 2.0;
        sum += weight * c * c;
    }
    (PI / (2.0 * a), sum)
}

/// `K`, `E` and `K - E` at parameter `m`, given `root = sqrt(1 - m)`.
fn ke_root(m: f64, root: f64) -> EllipticPair {
    if m >= 0.0 {
        let (k, s) = agm(m, root);
        let k_minus_e = k * s;
        EllipticPair {
            k,
            e: k - k_minus_e,
            k_minus_e,
        }
    } else {
        // K(m) = K(m')/sqrt(1-m), E(m) = sqrt(1-m) E(m'), m' = -m/(1-m)
        let mp = -m / (root * root);
        let (kp, s) = agm(mp, 1.0 / root);
        let ep = kp * (1.0 - s);
        // K - E = ((K' - E') + m E') / sqrt(1-m)
        EllipticPair {
            k: kp / root,
            e: root * ep,
            k_minus_e: (kp * s + m * ep) / root,
        }
    }
}

fn ke_pair(m: f64, mc: f64) -> EllipticPair {
    ke_root(m, mc.sqrt())
}

const NAN_PAIR: EllipticPair = EllipticPair {
    k: f64::NAN,
    e: f64::NAN,
    k_minus_e: f64::NAN,
};

// Unchecked evaluators for integrands. Invalid input yields NaN, which the
// quadrature reports as a non-finite node.

/// Pair at `m` with its complement `mc = 1 - m` supplied by the caller.
pub(crate) fn ke_with(m: f64, mc: f64) -> EllipticPair {
    if !(mc > 0.0) || !m.is_finite() {
        return NAN_PAIR;
    }
    ke_pair(m, mc)
}

/// `K(m)` for `m < 1`.
pub(crate) fn k_at(m: f64) -> f64 {
    ke_with(m, 1.0 - m).k
}

/// Pair at `1 - mc`.
pub(crate) fn ke_comp(mc: f64) -> EllipticPair {
    ke_with(1.0 - mc, mc)
}

/// `K(1 - mc)`.
pub(crate) fn k_comp(mc: f64) -> f64 {
    ke_comp(mc).k
}

/// `E(1 - mc)`, including `E(1) = 1`.
pub(crate) fn e_comp(mc: f64) -> f64 {
    if mc == 0.0 {
        return 1.0;
    }
    ke_comp(mc).e
}

/// Pair at `1 - r^2`, i.e. the modulus-convention `K(sqrt(1 - r^2))`, for
/// `0 < r <= 1`. Works where `r^2` would underflow.
pub(crate) fn ke_comp_root(r: f64) -> EllipticPair {
    if !(r > 0.0 && r <= 1.0) {
        return NAN_PAIR;
    }
    ke_root((1.0 - r) * (1.0 + r), r)
}

/// Complete elliptic integral of the first kind, `m < 1`.
pub fn ellint_k(m: f64) -> Result<f64> {
    Ok(EllipticParameter::new(m)?.k())
}

/// Complete elliptic integral of the second kind, `m <= 1`.
pub fn ellint_e(m: f64) -> Result<f64> {
    if m == 1.0 {
        return Ok(1.0);
    }
    Ok(EllipticParameter::new(m)
        .map_err(|_| domain("ellint_e", format!("m = {m} must be <= 1")))?
        .e())
}

/// `K(1 - mc)` for `mc > 0`.
pub fn ellint_k_comp(mc: f64) -> Result<f64> {
    Ok(EllipticParameter::from_complement(mc)?.k())
}

/// `E(1 - mc)` for `mc >= 0`.
pub fn ellint_e_comp(mc: f64) -> Result<f64> {
    if mc == 0.0 {
        return Ok(1.0);
    }
    Ok(EllipticParameter::from_complement(mc)?.e())
}

/// `dE/dk = (E(k^2) - K(k^2)) / k` in the modulus convention, `0 < k < 1`.
pub fn de_dk(k: f64) -> Result<f64> {
    if !(k > 0.0 && k < 1.0) {
        return Err(domain("de_dk", format!("k = {k} must lie in (0, 1)")));
    }
    let mc = (1.0 - k) * (1.0 + k);
    let pair = ke_pair(k * k, mc);
    Ok(-pair.k_minus_e / k)
}

/// Both sides of a generating-function identity evaluated at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesIdentity {
    /// The power series summed term by term.
    pub lhs: f64,
    /// The closed form in terms of `K`.
    pub rhs: f64,
}

/// `sum C(2n,n)^3 x^n = 4 K^2(m) / pi^2`, `m = (1 - sqrt(1 - 64x)) / 2`,
/// for `0 <= x < 1/64`.
pub fn gf_cubed(x: f64) -> Result<SeriesIdentity> {
    if !(0.0..1.0 / 64.0).contains(&x) {
        return Err(domain("gf_cubed", format!("x = {x} outside [0, 1/64)")));
    }
    let lhs = pfq_unit(&[0.5, 0.5, 0.5], &[1.0, 1.0], 64.0 * x)?;
    let s = (1.0 - 64.0 * x).sqrt();
    let m = 32.0 * x / (1.0 + s);
    let mc = 0.5 * (1.0 + s);
    let k = ke_pair(m, mc).k;
    Ok(SeriesIdentity {
        lhs,
        rhs: 4.0 * k * k / (PI * PI),
    })
}

/// `sum C(2n,n)^2 C(4n,2n) x^n` against its `K^2` closed form,
/// `0 <= x < 1/256`.
///
/// The parameter of `K` is `1/2 - sqrt((1 - s)/x) / (16 sqrt 2)` with
/// `s = sqrt(1 - 256x)`; it is negative for `x > 0` and is evaluated as
/// `-256x / ((1+s) r (r+2))`, `r = sqrt(2 + 2s)`.
pub fn gf_mixed(x: f64) -> Result<SeriesIdentity> {
    if !(0.0..1.0 / 256.0).contains(&x) {
        return Err(domain("gf_mixed", format!("x = {x} outside [0, 1/256)")));
    }
    let lhs = pfq_unit(&[0.25, 0.5, 0.75], &[1.0, 1.0], 256.0 * x)?;
    let s = (1.0 - 256.0 * x).sqrt();
    let r = (2.0 + 2.0 * s).sqrt();
    let m = -256.0 * x / ((1.0 + s) * r * (r + 2.0));
    let k = ke_pair(m, 1.0 - m).k;
    let denom = (2.0 + 2.0 * s - 256.0 * x).powf(0.25);
    Ok(SeriesIdentity {
        lhs,
        rhs: 4.0 * std::f64::consts::SQRT_2 * k * k / (PI * PI * denom),
    })
}

/// Partial sum `sum_{n=0}^{N} 2/(2n+1) P_n(2x - 1)` of the Fourier-Legendre
/// expansion of `K(x)`.
pub fn fl_truncation_k(x: f64, n_max: usize) -> f64 {
    crate::specfun::legendre_all_sum(n_max, 2.0 * x - 1.0)
}
