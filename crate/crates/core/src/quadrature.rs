//! Tanh-sinh quadrature on `(0, 1)`.
//!
//! The substitution `x = (1 + tanh(pi/2 sinh t)) / 2` pushes both endpoints
//! to infinity in `t`, where the weights decay double-exponentially. This
//! absorbs logarithmic and algebraic endpoint singularities without any
//! special handling by the caller.
//!
//! Every node is stored as its distance from the nearer endpoint, so an
//! integrand can receive both `x` and `1 - x` at full relative precision
//! through [`UnitPoint`]. Use [`integrate_01_split`] whenever the integrand
//! is singular at `x = 1`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest `t` in the node table. Here the endpoint distance is about
/// `1e-275`, comfortably above the subnormal range.
const T_MAX: f64 = 6.0;
const MAX_LEVEL: u32 = 16;
const MIN_CHECK_LEVEL: u32 = 2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    max_level: u32,
    target_eps: f64,
}

impl QuadratureConfig {
    pub fn new(max_level: u32, target_eps: f64) -> Result<Self> {
        if !(3..=MAX_LEVEL).contains(&max_level) {
            return Err(Error::InvalidConfig(format!(
                "max_level = {max_level} outside [3, {MAX_LEVEL}]"
            )));
        }
        if !(1e-15..=1e-6).contains(&target_eps) {
            return Err(Error::InvalidConfig(format!(
                "target_eps = {target_eps:e} outside [1e-15, 1e-6]"
            )));
        }
        Ok(Self {
            max_level,
            target_eps,
        })
    }

    pub fn max_level(&self) -> u32 {
        self.max_level
    }

    pub fn target_eps(&self) -> f64 {
        self.target_eps
    }

    /// Tolerance for the inner integral of an iterated rule.
    fn inner(&self) -> Self {
        Self {
            max_level: self.max_level,
            target_eps: self.target_eps / 10.0,
        }
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            max_level: 12,
            target_eps: 1e-12,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    /// `|I_l - I_{l-1}|` for the last two levels computed.
    pub error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

/// An abscissa in `(0, 1)` together with its distance to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitPoint {
    pub x: f64,
    pub one_minus_x: f64,
}

impl UnitPoint {
    pub fn reflect(self) -> Self {
        Self {
            x: self.one_minus_x,
            one_minus_x: self.x,
        }
    }
}

/// A node with `t > 0`: distance to the endpoint and weight without `h`.
#[derive(Debug, Clone, Copy)]
struct Node {
    delta: f64,
    weight: f64,
}

fn node(t: f64) -> Node {
    let u = 0.5 * PI * t.sinh();
    let cosh_u = u.cosh();
    Node {
        delta: 1.0 / (1.0 + (2.0 * u).exp()),
        weight: 0.25 * PI * t.cosh() / (cosh_u * cosh_u),
    }
}

/// Nodes first used at `level`: `t = k 2^-level` for odd `k` (every
/// positive integer `k` at level 0), `0 < t <= T_MAX`.
fn level_nodes(level: u32) -> &'static [Node] {
    static TABLES: OnceLock<Vec<OnceLock<Vec<Node>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| (0..=MAX_LEVEL).map(|_| OnceLock::new()).collect());
    tables[level as usize].get_or_init(|| {
        let h = (-(level as f64)).exp2();
        let (start, step) = if level == 0 { (1, 1) } else { (1, 2) };
        let count = (T_MAX / h) as usize;
        (start..=count).step_by(step).map(|k| node(k as f64 * h)).collect()
    })
}

fn integrate_core<F>(mut f: F, cfg: &QuadratureConfig) -> Result<QuadratureResult>
where
    F: FnMut(UnitPoint) -> Result<f64>,
{
    let mut evaluations = 0usize;
    let mut eval = |p: UnitPoint, w: f64, evaluations: &mut usize| -> Result<f64> {
        *evaluations += 1;
        let v = f(p)?;
        if !v.is_finite() {
            return Err(Error::NonFinite {
                abscissa: p.x,
                value: v,
            });
        }
        Ok(w * v)
    };

    let mut sum = eval(UnitPoint { x: 0.5, one_minus_x: 0.5 }, 0.25 * PI, &mut evaluations)?;
    let mut previous = f64::NAN;
    let mut error_estimate = f64::INFINITY;
    let mut value = f64::NAN;
    for level in 0..=cfg.max_level {
        for n in level_nodes(level) {
            let near_one = UnitPoint {
                x: 1.0 - n.delta,
                one_minus_x: n.delta,
            };
            sum += eval(near_one, n.weight, &mut evaluations)?;
            sum += eval(near_one.reflect(), n.weight, &mut evaluations)?;
        }
        value = sum * (-(level as f64)).exp2();
        if level > 0 {
            error_estimate = (value - previous).abs();
            if level >= MIN_CHECK_LEVEL && error_estimate <= cfg.target_eps * value.abs().max(1.0) {
                return Ok(QuadratureResult {
                    value,
                    error_estimate,
                    evaluations,
                    converged: true,
                });
            }
        }
        previous = value;
    }
    Ok(QuadratureResult {
        value,
        error_estimate,
        evaluations,
        converged: false,
    })
}

/// Integrate `f(x)` over `(0, 1)`.
///
/// Nodes so close to 1 that `x` rounds to 1 are skipped; their weight is
/// below `1e-16` of the total. Use [`integrate_01_split`] if `f` needs
/// those nodes.
pub fn integrate_01<F>(mut f: F, cfg: &QuadratureConfig) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> f64,
{
    integrate_core(
        |p| Ok(if p.x < 1.0 { f(p.x) } else { 0.0 }),
        cfg,
    )
}

/// Integrate a function of `(x, 1 - x)` over `(0, 1)`.
pub fn integrate_01_split<F>(mut f: F, cfg: &QuadratureConfig) -> Result<QuadratureResult>
where
    F: FnMut(UnitPoint) -> f64,
{
    integrate_core(|p| Ok(f(p)), cfg)
}

/// Iterated integral of `f(x, y)` over the unit square.
pub fn integrate_01_2d<F>(mut f: F, cfg: &QuadratureConfig) -> Result<QuadratureResult>
where
    F: FnMut(f64, f64) -> f64,
{
    integrate_01_2d_split(
        |x, y| {
            if x.x < 1.0 && y.x < 1.0 {
                f(x.x, y.x)
            } else {
                0.0
            }
        },
        cfg,
    )
}

/// Iterated integral of a function of two [`UnitPoint`]s. The inner
/// integral runs with a tolerance ten times tighter than `cfg`.
pub fn integrate_01_2d_split<F>(mut f: F, cfg: &QuadratureConfig) -> Result<QuadratureResult>
where
    F: FnMut(UnitPoint, UnitPoint) -> f64,
{
    let inner_cfg = cfg.inner();
    let mut inner_evaluations = 0usize;
    let mut inner_converged = true;
    let outer = integrate_core(
        |x| {
            let r = integrate_core(|y| Ok(f(x, y)), &inner_cfg)?;
            inner_evaluations += r.evaluations;
            inner_converged &= r.converged;
            Ok(r.value)
        },
        cfg,
    )?;
    Ok(QuadratureResult {
        evaluations: inner_evaluations,
        converged: outer.converged && inner_converged,
        ..outer
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::ellint_k_comp;
    use crate::specfun::constants::ZETA3;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn config_bounds() {
        assert!(QuadratureConfig::new(2, 1e-12).is_err());
        assert!(QuadratureConfig::new(17, 1e-12).is_err());
        assert!(QuadratureConfig::new(12, 1e-16).is_err());
        assert!(QuadratureConfig::new(12, 1e-5).is_err());
        assert!(QuadratureConfig::new(3, 1e-15).is_ok());
        assert_eq!(QuadratureConfig::default(), QuadratureConfig::new(12, 1e-12).unwrap());
    }

    #[test]
    fn node_table_shape() {
        assert_eq!(level_nodes(0).len(), 6);
        assert_eq!(level_nodes(1).len(), 6);
        assert_eq!(level_nodes(3).len(), 24);
        let last = level_nodes(0)[5];
        assert!(last.delta > 1e-290 && last.delta < 1e-250);
        assert!(level_nodes(4).iter().all(|n| n.delta > 0.0 && n.delta < 0.5));
    }

    #[test]
    fn spec_examples() {
        let cfg = QuadratureConfig::default();
        let r = integrate_01(|x| x.powf(-0.5), &cfg).unwrap();
        assert!(r.converged && rel(r.value, 2.0) < 1e-12, "{r:?}");
        let r = integrate_01(|x| -x.ln(), &cfg).unwrap();
        assert!(r.converged && rel(r.value, 1.0) < 1e-12, "{r:?}");
        let r = integrate_01_split(|p| ellint_k_comp(p.one_minus_x).unwrap().powi(2), &cfg).unwrap();
        assert!(r.converged && rel(r.value, 3.5 * ZETA3) < 1e-12, "{r:?}");
    }

    #[test]
    fn endpoint_singularities() {
        let cfg = QuadratureConfig::default();
        let r = integrate_01(|x| (-x.ln()).powi(3), &cfg).unwrap();
        assert!(rel(r.value, 6.0) < 1e-10, "{r:?}");
        let r = integrate_01(|x| x.powf(-0.75), &cfg).unwrap();
        assert!(rel(r.value, 4.0) < 1e-10, "{r:?}");
        let r = integrate_01_split(|p| p.one_minus_x.powf(-0.75), &cfg).unwrap();
        assert!(rel(r.value, 4.0) < 1e-10, "{r:?}");
    }

    #[test]
    fn non_finite_is_reported() {
        let err = integrate_01(|x| if x > 0.25 && x < 0.5 { f64::NAN } else { 1.0 }, &Default::default());
        match err {
            Err(Error::NonFinite { abscissa, .. }) => assert!(abscissa > 0.25 && abscissa < 0.5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn non_convergence_is_a_flag() {
        let cfg = QuadratureConfig::new(3, 1e-15).unwrap();
        let r = integrate_01(|x| (50.0 * x).sin(), &cfg).unwrap();
        assert!(!r.converged);
        assert!(r.evaluations > 0);
    }

    #[test]
    fn converged_respects_target() {
        let cfg = QuadratureConfig::new(12, 1e-10).unwrap();
        let r = integrate_01(|x| x.exp(), &cfg).unwrap();
        assert!(r.converged);
        assert!(r.error_estimate <= 1e-10 * r.value.abs().max(1.0));
    }

    #[test]
    fn two_dimensional_examples() {
        let cfg = QuadratureConfig::default();
        let r = integrate_01_2d(|_, _| 1.0, &cfg).unwrap();
        assert!(r.converged && (r.value - 1.0).abs() < 1e-14);
        let r = integrate_01_2d(|t, u| 0.25 / (t.sqrt() * u.sqrt()), &cfg).unwrap();
        assert!(rel(r.value, 1.0) < 1e-12, "{r:?}");
    }
}
