//! The catalog records. Elliptic integrals are in the parameter
//! convention: a modulus-form `K(k)` appears here as `K(k^2)`.

use std::f64::consts::{LN_2, PI, SQRT_2};

use super::family::family_integrand;
use super::{Evaluation, IdentityRecord, DEFAULT_TOLERANCE};
use crate::elliptic::{e_comp, k_at, k_comp, ke_comp, ke_comp_root, ke_with};
use crate::quadrature::UnitPoint;
use crate::specfun::constants::{CATALAN, GAMMA_1_4, GAMMA_1_8, GAMMA_3_8, GOLDEN_RATIO, ZETA3};

const SINGULAR_TOLERANCE: f64 = 1e-7;
const DOUBLE_SUM_TOLERANCE: f64 = 1e-3;
const DOUBLE_SUM_TERMS: usize = 4000;
const TRANSFORM_POINTS: &[f64] = &[0.2, 0.5, 0.8];

const THREEFOLD: &[&str] = &["threefold"];
const THREEFOLD_FAMILY: &[&str] = &["threefold", "family"];
const THREEFOLD_DE: &[&str] = &["threefold", "de-form"];
const THREEFOLD_LATTICE: &[&str] = &["threefold", "lattice"];
const TWOFOLD: &[&str] = &["twofold"];
const TWOFOLD_TRANSFORM: &[&str] = &["twofold", "transform"];

fn sq(x: f64) -> f64 {
    x * x
}

fn k_sq(m: f64) -> f64 {
    sq(k_at(m))
}

/// `K^2(m)` with an exact complement.
fn k_sq_with(m: f64, mc: f64) -> f64 {
    sq(ke_with(m, mc).k)
}

/// `1 - x^2` from a unit point.
fn one_minus_sq(p: UnitPoint) -> f64 {
    p.one_minus_x * (1.0 + p.x)
}

/// `(E(x) - K(x)) / 2`, the factor produced by `dE(sqrt x)` with `x dx`.
fn half_e_minus_k(p: UnitPoint) -> f64 {
    -0.5 * ke_comp(p.one_minus_x).k_minus_e
}

/// `2E(y^2) - K(y^2)`.
fn two_e_minus_k(p: UnitPoint) -> f64 {
    let pair = ke_with(p.x * p.x, one_minus_sq(p));
    pair.e - pair.k_minus_e
}

fn gamma_quarter_8() -> f64 {
    GAMMA_1_4.powi(8)
}

macro_rules! integral {
    ($closed:expr, $integrand:expr) => {
        Evaluation::Integral {
            closed_form: $closed,
            integrand: $integrand,
        }
    };
}

pub(super) static RECORDS: &[IdentityRecord] = &[
    IdentityRecord {
        id: "cg2",
        description: "2 int K(x) K(1-x) dx = pi^3/4",
        anchor: "zhou-2014:cg-twofold",
        validity: "log singularities at both endpoints",
        tags: TWOFOLD,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(|| PI.powi(3) / 4.0, |p| 2.0 * k_comp(p.one_minus_x) * k_comp(p.x)),
    },
    IdentityRecord {
        id: "wan-a",
        description: "int_0^1 K^3(1-k^2) dk = Gamma(1/4)^8 / (128 pi^2)",
        anchor: "wan-2012:k-cubed",
        validity: "log^3 singularity at k = 0",
        tags: THREEFOLD,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || gamma_quarter_8() / (128.0 * PI * PI),
            |p| ke_comp_root(p.x).k.powi(3)
        ),
    },
    IdentityRecord {
        id: "wan-b",
        description: "6 int_0^1 K^2(k^2) K(1-k^2) k dk = Gamma(1/4)^8 / (128 pi^2)",
        anchor: "wan-2012:k-squared-moment",
        validity: "log^2 singularity at k = 1, log at k = 0",
        tags: THREEFOLD,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || gamma_quarter_8() / (128.0 * PI * PI),
            |p| 6.0 * sq(k_comp(one_minus_sq(p))) * ke_comp_root(p.x).k * p.x
        ),
    },
    IdentityRecord {
        id: "m1",
        description: "int E(1-x) K^2((1 - sqrt(1-x))/2) dx = pi^3 (1 + 4 ln 2) / 32",
        anchor: "sibp-cubed:beta=1",
        validity: "E(1-x) has a log-derivative singularity at x = 0",
        tags: THREEFOLD,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || PI.powi(3) * (1.0 + 4.0 * LN_2) / 32.0,
            |p| {
                let s = p.one_minus_x.sqrt();
                e_comp(p.x) * k_sq_with(p.x / (2.0 * (1.0 + s)), 0.5 * (1.0 + s))
            }
        ),
    },
    IdentityRecord {
        id: "m2",
        description: "int E(1-x) K^2(1/2 - sqrt(1 - x/2)/2) dx = pi^2 (4G + 2 + pi ln 2) / (16 sqrt 2)",
        anchor: "sibp-cubed:beta=1/2",
        validity: "smooth apart from E(1-x) at x = 0",
        tags: THREEFOLD,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || PI * PI * (4.0 * CATALAN + 2.0 + PI * LN_2) / (16.0 * SQRT_2),
            |p| {
                let s = (0.5 * (1.0 + p.one_minus_x)).sqrt();
                e_comp(p.x) * k_sq(p.x / (4.0 * (1.0 + s)))
            }
        ),
    },
    IdentityRecord {
        id: "m3",
        description: "int E(1-x) K^2(1/2 - sqrt(4+x)/4) dx = pi^2/2 (pi^2/20 + 3 ln(phi)/2 - sqrt 5/4)",
        anchor: "sibp-cubed:beta=-1/4",
        validity: "negative parameter throughout (0, 1]",
        tags: THREEFOLD,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || PI * PI / 2.0 * (PI * PI / 20.0 + 1.5 * GOLDEN_RATIO.ln() - 5f64.sqrt() / 4.0),
            |p| e_comp(p.x) * k_sq(-p.x / (4.0 * (2.0 + (4.0 + p.x).sqrt())))
        ),
    },
    IdentityRecord {
        id: "m4",
        description: "family integral at alpha = 1 = pi^2 (17/30 - ln(1 + sqrt 2) / (2 sqrt 2))",
        anchor: "sibp-mixed:alpha=1",
        validity: "negative parameter; sqrt(1-x) branch point at x = 1",
        tags: THREEFOLD_FAMILY,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || PI * PI * (17.0 / 30.0 - SQRT_2.ln_1p() / (2.0 * SQRT_2)),
            |p| family_integrand(1.0, p)
        ),
    },
    IdentityRecord {
        id: "m5",
        description: "alpha = -16/9 member = 2^(-1/4) (47 pi^2/160 - pi^3/(16 sqrt 3))",
        anchor: "sibp-mixed:alpha=-16/9",
        validity: "smooth apart from E(1-x) at x = 0",
        tags: THREEFOLD_FAMILY,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || 2f64.powf(-0.25) * (47.0 * PI * PI / 160.0 - PI.powi(3) / (16.0 * 3f64.sqrt())),
            |p| {
                let x = p.x;
                let t = (16.0 * x + 9.0).sqrt();
                let m = (4.0 - 6f64.sqrt() * (16.0 / (t + 3.0)).sqrt()) / 8.0;
                e_comp(x) * k_sq(m) / (8.0 * x + 3.0 * t + 9.0).powf(0.25)
            }
        ),
    },
    IdentityRecord {
        id: "m6",
        description: "alpha = -8 member = 2^(-7/4) (71 pi^2/60 - pi^3/8)",
        anchor: "sibp-mixed:alpha=-8",
        validity: "smooth apart from E(1-x) at x = 0",
        tags: THREEFOLD_FAMILY,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || 2f64.powf(-1.75) * (71.0 * PI * PI / 60.0 - PI.powi(3) / 8.0),
            |p| {
                let x = p.x;
                let v = (8.0 * x + 1.0).sqrt();
                let m = 0.5 - 0.25 * (8.0 / (v + 1.0)).sqrt();
                e_comp(x) * k_sq(m) / (4.0 * x + v + 1.0).powf(0.25)
            }
        ),
    },
    IdentityRecord {
        id: "m7",
        description: "alpha = -48 member = pi^2 (143 - 20 pi/sqrt 3) / (480 2^(1/4))",
        anchor: "sibp-mixed:alpha=-48",
        validity: "smooth apart from E(1-x) at x = 0",
        tags: THREEFOLD_FAMILY,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || PI * PI * (143.0 - 20.0 * PI / 3f64.sqrt()) / (480.0 * 2f64.powf(0.25)),
            |p| {
                let x = p.x;
                let w = (48.0 * x + 1.0).sqrt();
                let m = 0.5 - (48.0 / (w + 1.0)).sqrt() / (4.0 * 6f64.sqrt());
                e_comp(x) * k_sq(m) / (24.0 * x + w + 1.0).powf(0.25)
            }
        ),
    },
    IdentityRecord {
        id: "m8",
        description: "alpha = 3/4 member = pi^2 (104 - 45 ln 3) / (180 sqrt 3)",
        anchor: "sibp-mixed:alpha=3/4",
        validity: "smooth apart from E(1-x) at x = 0",
        tags: THREEFOLD_FAMILY,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || PI * PI * (104.0 - 45.0 * 3f64.ln()) / (180.0 * 3f64.sqrt()),
            |p| {
                let x = p.x;
                let q = (4.0 - 3.0 * x).sqrt();
                let m = (3.0 - 2.0 * (9.0 / (2.0 + q)).sqrt()) / 6.0;
                e_comp(x) * k_sq(m) / (4.0 * q - 3.0 * x + 8.0).powf(0.25)
            }
        ),
    },
    IdentityRecord {
        id: "de1",
        description: "int x K^2((1 - sqrt x)/2) dE(sqrt x) = pi^3 (1 - 4 ln 2) / 64",
        anchor: "sibp-dE:sqrt",
        validity: "dE(sqrt x) = (E(x) - K(x)) / (2x) dx; log singularity at x = 1",
        tags: THREEFOLD_DE,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || PI.powi(3) * (1.0 - 4.0 * LN_2) / 64.0,
            |p| {
                let s = p.x.sqrt();
                k_sq_with(0.5 * (1.0 - s), 0.5 * (1.0 + s)) * half_e_minus_k(p)
            }
        ),
    },
    IdentityRecord {
        id: "de2",
        description: "int x K^2((1 - sqrt((1-x)/4 + 1))/2) dE(sqrt x) = pi^2/8 (3 ln phi - sqrt 5/2 - pi^2/10)",
        anchor: "sibp-dE:shifted",
        validity: "negative parameter; log singularity at x = 1",
        tags: THREEFOLD_DE,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || PI * PI / 8.0 * (3.0 * GOLDEN_RATIO.ln() - 5f64.sqrt() / 2.0 - PI * PI / 10.0),
            |p| {
                let u = 0.25 * p.one_minus_x;
                k_sq(-u / (2.0 * (1.0 + (1.0 + u).sqrt()))) * half_e_minus_k(p)
            }
        ),
    },
    IdentityRecord {
        id: "de3",
        description: "int x K^2(1/2 - 1/(sqrt 2 sqrt(sqrt x + 1))) / sqrt(sqrt x + 1) dE(sqrt x) = pi^2/4 (ln(1 + sqrt 2)/sqrt 2 - 13/15)",
        anchor: "sibp-dE:mixed",
        validity: "log singularity at x = 1",
        tags: THREEFOLD_DE,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || PI * PI / 4.0 * (SQRT_2.ln_1p() / SQRT_2 - 13.0 / 15.0),
            |p| {
                let v = p.x.sqrt() + 1.0;
                let m = 0.5 - 1.0 / (SQRT_2 * v.sqrt());
                k_sq(m) / v.sqrt() * half_e_minus_k(p)
            }
        ),
    },
    IdentityRecord {
        id: "de4",
        description: "int x K^2(1/2 - sqrt(3/(sqrt(3x+1)+2))/sqrt 3) / (3x + 4 sqrt(3x+1) + 5)^(1/4) dE(sqrt x) = pi^2 (2 ln 3 - 152/45) / (16 sqrt 3)",
        anchor: "sibp-dE:cubic",
        validity: "log singularity at x = 1",
        tags: THREEFOLD_DE,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || PI * PI * (2.0 * 3f64.ln() - 152.0 / 45.0) / (16.0 * 3f64.sqrt()),
            |p| {
                let w = (3.0 * p.x + 1.0).sqrt();
                let m = 0.5 - (3.0 / (w + 2.0)).sqrt() / 3f64.sqrt();
                k_sq(m) / (3.0 * p.x + 4.0 * w + 5.0).powf(0.25) * half_e_minus_k(p)
            }
        ),
    },
    IdentityRecord {
        id: "z1",
        description: "4 int (1-t) K^2(1-t) K(t) / (1+t)^(3/2) dt = Gamma(1/8)^2 Gamma(3/8)^2 / 24",
        anchor: "zhou-2014:cg-threefold-1",
        validity: "log^2 singularity at t = 0, log at t = 1",
        tags: THREEFOLD,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || sq(GAMMA_1_8 * GAMMA_3_8) / 24.0,
            |p| 4.0 * p.one_minus_x * sq(k_comp(p.x)) * k_comp(p.one_minus_x) / (1.0 + p.x).powf(1.5)
        ),
    },
    IdentityRecord {
        id: "z2",
        description: "27/4 int t(1-t) K^2(1-t) K(t) / (1 - t + t^2)^(7/4) dt = Gamma(1/4)^4 / (8 sqrt(2 sqrt 3))",
        anchor: "zhou-2014:cg-threefold-2",
        validity: "log singularities at both endpoints",
        tags: THREEFOLD,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || GAMMA_1_4.powi(4) / (8.0 * (2.0 * 3f64.sqrt()).sqrt()),
            |p| {
                let (t, u) = (p.x, p.one_minus_x);
                6.75 * t * u * sq(k_comp(t)) * k_comp(u) / (u + t * t).powf(1.75)
            }
        ),
    },
    IdentityRecord {
        id: "z3",
        description: "int K^2(1-k^2) K(k^2) / (sqrt k (1-k^2)^(3/4)) dk = Gamma(1/4)^8 / (32 sqrt 2 pi^2)",
        anchor: "rogers-wan-zucker-2015:k2k",
        validity: "k^(-1/2) log^2 at k = 0, (1-k)^(-3/4) log at k = 1",
        tags: THREEFOLD,
        tolerance: SINGULAR_TOLERANCE,
        evaluation: integral!(
            || gamma_quarter_8() / (32.0 * SQRT_2 * PI * PI),
            |p| {
                let c = one_minus_sq(p);
                sq(ke_comp_root(p.x).k) * k_comp(c) / (p.x.sqrt() * c.powf(0.75))
            }
        ),
    },
    IdentityRecord {
        id: "z4",
        description: "int K^3(1-k^2) / (sqrt k (1-k^2)^(3/4)) dk = 3 Gamma(1/4)^8 / (32 sqrt 2 pi^2)",
        anchor: "rogers-wan-zucker-2015:k-cubed",
        validity: "k^(-1/2) log^3 at k = 0, (1-k)^(-3/4) at k = 1",
        tags: THREEFOLD,
        tolerance: SINGULAR_TOLERANCE,
        evaluation: integral!(
            || 3.0 * gamma_quarter_8() / (32.0 * SQRT_2 * PI * PI),
            |p| ke_comp_root(p.x).k.powi(3) / (p.x.sqrt() * one_minus_sq(p).powf(0.75))
        ),
    },
    IdentityRecord {
        id: "wz1",
        description: "int sqrt(k / sqrt(1-k^2)) K^2(1-k^2) (2E(k^2) - K(k^2)) dk = pi^3 / (6 sqrt 2)",
        anchor: "wan-zucker-2016:lattice-1",
        validity: "(1-k)^(-1/4) log at k = 1, log^2 at k = 0",
        tags: THREEFOLD_LATTICE,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || PI.powi(3) / (6.0 * SQRT_2),
            |p| (p.x / one_minus_sq(p).sqrt()).sqrt() * sq(ke_comp_root(p.x).k) * two_e_minus_k(p)
        ),
    },
    IdentityRecord {
        id: "wz2",
        description: "int (2 + 3k - k^2) K^3(k^2) / sqrt(k+1) dk = Gamma(1/8)^4 Gamma(3/8)^4 / (384 sqrt 2 pi^2)",
        anchor: "wan-zucker-2016:lattice-2",
        validity: "log^3 singularity at k = 1",
        tags: THREEFOLD_LATTICE,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || (GAMMA_1_8 * GAMMA_3_8).powi(4) / (384.0 * SQRT_2 * PI * PI),
            |p| {
                let k = p.x;
                (2.0 + 3.0 * k - k * k) * k_comp(one_minus_sq(p)).powi(3) / (k + 1.0).sqrt()
            }
        ),
    },
    IdentityRecord {
        id: "wz3",
        description: "int k^(1/4) (1-k^2)^(1/4) K^3(k^2) dk = (sqrt 2 - 1)^(3/2) Gamma(1/4)^8 / (128 sqrt 2 pi^2)",
        anchor: "wan-zucker-2016:lattice-3",
        validity: "k^(1/4) branch point at 0, (1-k)^(1/4) log^3 at k = 1",
        tags: THREEFOLD_LATTICE,
        tolerance: SINGULAR_TOLERANCE,
        evaluation: integral!(
            || (SQRT_2 - 1.0).powf(1.5) * gamma_quarter_8() / (128.0 * SQRT_2 * PI * PI),
            |p| {
                let c = one_minus_sq(p);
                p.x.powf(0.25) * c.powf(0.25) * k_comp(c).powi(3)
            }
        ),
    },
    IdentityRecord {
        id: "l1",
        description: "int y(1-y^2) K^2((1-y)/2) (2E(y^2) - K(y^2)) dy = pi^3 (29 + 32 ln 2) / 2048",
        anchor: "sibp-lattice:1",
        validity: "log singularity at y = 1 damped by 1 - y^2",
        tags: THREEFOLD_LATTICE,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || PI.powi(3) * (29.0 + 32.0 * LN_2) / 2048.0,
            |p| {
                let y = p.x;
                y * one_minus_sq(p) * k_sq_with(0.5 * p.one_minus_x, 0.5 * (1.0 + y)) * two_e_minus_k(p)
            }
        ),
    },
    IdentityRecord {
        id: "l2",
        description: "int y(1-y^2) K^2((2 - sqrt 2 sqrt(y^2+1))/4) (2E(y^2) - K(y^2)) dy",
        anchor: "sibp-lattice:2",
        validity: "log singularity at y = 1 damped by 1 - y^2",
        tags: THREEFOLD_LATTICE,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || {
                let (pi2, pi3) = (PI * PI, PI.powi(3));
                (pi2 * CATALAN / 32.0 + 7.0 * pi2 / 64.0 - 9.0 * pi3 / 512.0 + pi3 * LN_2 / 128.0) / SQRT_2
            },
            |p| {
                let y = p.x;
                let m = (2.0 - SQRT_2 * (y * y + 1.0).sqrt()) / 4.0;
                y * one_minus_sq(p) * k_sq(m) * two_e_minus_k(p)
            }
        ),
    },
    IdentityRecord {
        id: "l3",
        description: "int y(1-y^2) K^2((2 - sqrt(5 - y^2))/4) (2E(y^2) - K(y^2)) dy",
        anchor: "sibp-lattice:3",
        validity: "negative parameter; log singularity at y = 1 damped by 1 - y^2",
        tags: THREEFOLD_LATTICE,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || {
                let pi2 = PI * PI;
                -57.0 / 64.0 * pi2 * GOLDEN_RATIO.ln() + pi2 * pi2 / 320.0 + 53.0 * 5f64.sqrt() * pi2 / 256.0
            },
            |p| {
                let y = p.x;
                let m = (2.0 - (5.0 - y * y).sqrt()) / 4.0;
                y * one_minus_sq(p) * k_sq(m) * two_e_minus_k(p)
            }
        ),
    },
    IdentityRecord {
        id: "ex1",
        description: "alpha = 576/625 member = pi^2 (551 - 400 ln 2) / (3840 sqrt 2)",
        anchor: "sibp-mixed:alpha=576/625",
        validity: "smooth apart from E(1-x) at x = 0",
        tags: THREEFOLD_FAMILY,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || PI * PI * (551.0 - 400.0 * LN_2) / (3840.0 * SQRT_2),
            |p| {
                let x = p.x;
                let q = (625.0 - 576.0 * x).sqrt();
                let m = (24.0 - 5.0 * (1152.0 / (25.0 + q)).sqrt()) / 48.0;
                e_comp(x) * k_sq(m) / (50.0 * (q + 25.0) - 576.0 * x).powf(0.25)
            }
        ),
    },
    IdentityRecord {
        id: "ex2",
        description: "alpha = 32/81 member = pi^2 (93/640 - 3 ln 2 / 32)",
        anchor: "sibp-mixed:alpha=32/81",
        validity: "smooth apart from E(1-x) at x = 0",
        tags: THREEFOLD_FAMILY,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || PI * PI * (93.0 / 640.0 - 3.0 * LN_2 / 32.0),
            |p| {
                let x = p.x;
                let q = (81.0 - 32.0 * x).sqrt();
                let m = 0.5 - 0.375 * (32.0 / (9.0 + q)).sqrt();
                e_comp(x) * k_sq(m) / (18.0 * (q + 9.0) - 32.0 * x).powf(0.25)
            }
        ),
    },
    IdentityRecord {
        id: "ram1",
        description: "K^2(t) = (2/pi) int K(u) K(1-u) / (1 - u t) du at t = 0.2, 0.5, 0.8",
        anchor: "ramanujan-transform:first",
        validity: "log singularities at both endpoints",
        tags: TWOFOLD_TRANSFORM,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: Evaluation::Pointwise {
            points: TRANSFORM_POINTS,
            closed_form: k_sq,
            integrand: |t, p| 2.0 / PI * k_comp(p.one_minus_x) * k_comp(p.x) / (1.0 - p.x * t),
        },
    },
    IdentityRecord {
        id: "ram2",
        description: "K^2(1-t) = (8/pi) int K(u) K(1-u) / ((1 + sqrt t)^2 - u (1 - sqrt t)^2) du at t = 0.2, 0.5, 0.8",
        anchor: "ramanujan-transform:second",
        validity: "log singularities at both endpoints",
        tags: TWOFOLD_TRANSFORM,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: Evaluation::Pointwise {
            points: TRANSFORM_POINTS,
            closed_form: |t| sq(k_comp(t)),
            integrand: |t, p| {
                let r = t.sqrt();
                8.0 / PI * k_comp(p.one_minus_x) * k_comp(p.x) / (sq(1.0 + r) - p.x * sq(1.0 - r))
            },
        },
    },
    IdentityRecord {
        id: "k2mom",
        description: "int K^2(t) dt = 7 zeta(3) / 2",
        anchor: "fl-moment:k-squared",
        validity: "log^2 singularity at t = 1",
        tags: TWOFOLD,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(|| 3.5 * ZETA3, |p| sq(k_comp(p.one_minus_x))),
    },
    IdentityRecord {
        id: "dblsum",
        description: "sum_{i,j} C(2i,i)^2 C(2j,j)^2 / (16^(i+j) (i+j+1)) = 14 zeta(3) / pi^2",
        anchor: "fl-moment:double-sum",
        validity: "terms decay like 1/(ij(i+j)); truncated at 4000 per index",
        tags: TWOFOLD,
        tolerance: DOUBLE_SUM_TOLERANCE,
        evaluation: Evaluation::DoubleSum {
            closed_form: || 14.0 * ZETA3 / (PI * PI),
            terms: DOUBLE_SUM_TERMS,
        },
    },
    IdentityRecord {
        id: "logkk",
        description: "int ln(1-u)/u K(u) K(1-u) du = -7 pi zeta(3) / 4",
        anchor: "wan-2012:log-kernel",
        validity: "log^2 singularity at u = 1, log at u = 0",
        tags: TWOFOLD,
        tolerance: DEFAULT_TOLERANCE,
        evaluation: integral!(
            || -7.0 * PI * ZETA3 / 4.0,
            |p| {
                let log = if p.x < 0.5 { (-p.x).ln_1p() } else { p.one_minus_x.ln() };
                log / p.x * k_comp(p.one_minus_x) * k_comp(p.x)
            }
        ),
    },
];
