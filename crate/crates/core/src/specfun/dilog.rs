use std::f64::consts::PI;

use crate::error::{domain, Result};

const PI2_6: f64 = PI * PI / 6.0;

/// Power series `sum x^k / k^2` for `|x| <= 1/2`.
fn series(x: f64) -> f64 {
    let mut sum = 0.0;
    let mut power = x;
    for k in 1..200 {
        let kf = k as f64;
        let term = power / (kf * kf);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
        power *= x;
    }
    sum
}

/// The real dilogarithm `Li2(x)` for `x <= 1`.
///
/// Functional equations map the argument into `[-1/2, 1/2]`:
/// inversion for `x < -1`, Landen's identity on `[-1, -1/2)` and
/// Euler's reflection on `(1/2, 1]`.
pub fn dilog(x: f64) -> Result<f64> {
    if x.is_nan() || x > 1.0 {
        return Err(domain("dilog", format!("x = {x} > 1 needs the complex branch")));
    }
    Ok(dilog_unchecked(x))
}

fn dilog_unchecked(x: f64) -> f64 {
    if x == 1.0 {
        PI2_6
    } else if x == f64::NEG_INFINITY {
        f64::NEG_INFINITY
    } else if x < -1.0 {
        let l = (-x).ln();
        -PI2_6 - 0.5 * l * l - dilog_unchecked(1.0 / x)
    } else if x < -0.5 {
        // Landen: Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2, with x/(x-1) in (1/3, 1/2]
        let l = (-x).ln_1p();
        -series(x / (x - 1.0)) - 0.5 * l * l
    } else if x <= 0.5 {
        series(x)
    } else {
        // Euler: Li2(x) = pi^2/6 - ln x ln(1-x) - Li2(1-x)
        let y = 1.0 - x;
        PI2_6 - x.ln() * y.ln() - series(y)
    }
}
