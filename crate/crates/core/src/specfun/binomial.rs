use std::f64::consts::PI;

// Gamma(n + 1/2) / Gamma(n + 1) = n^{-1/2} sum_k c_k n^{-k}
const ASYMPTOTIC: [f64; 10] = [
    1.0,
    -1.0 / 8.0,
    1.0 / 128.0,
    5.0 / 1024.0,
    -21.0 / 32768.0,
    -399.0 / 262_144.0,
    869.0 / 4_194_304.0,
    39325.0 / 33_554_432.0,
    -334_477.0 / 2_147_483_648.0,
    -28_717_403.0 / 17_179_869_184.0,
];

const RECURRENCE_LIMIT: u64 = 128;

/// `C(2n, n) / 4^n`.
///
/// Small `n` use the product `prod (2k-1)/(2k)`; from `n = 128` on the
/// asymptotic expansion keeps the relative error near one ulp instead of
/// letting rounding accumulate over the product.
pub fn binom_ratio_2n_n(n: u64) -> f64 {
    if n < RECURRENCE_LIMIT {
        (1..=n).fold(1.0, |acc, k| acc * (2 * k - 1) as f64 / (2 * k) as f64)
    } else {
        let nf = n as f64;
        let inv = 1.0 / nf;
        let poly = ASYMPTOTIC.iter().rev().fold(0.0, |acc, &c| acc * inv + c);
        poly / (PI * nf).sqrt()
    }
}

/// `C(4n, 2n) / 16^n`, which equals `binom_ratio_2n_n(2n)`.
pub fn binom_ratio_4n_2n(n: u64) -> f64 {
    binom_ratio_2n_n(2 * n)
}
