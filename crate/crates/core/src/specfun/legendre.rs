/// Legendre polynomial `P_n(x)` by the three-term recurrence
/// `(k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}`.
pub fn legendre_p(n: usize, x: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => x,
        _ => {
            let (mut prev, mut cur) = (1.0, x);
            for k in 1..n {
                let kf = k as f64;
                let next = ((2.0 * kf + 1.0) * x * cur - kf * prev) / (kf + 1.0);
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// All of `P_0(x), ..., P_n(x)` in one pass.
pub(crate) fn legendre_all(n: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(1.0);
    if n >= 1 {
        out.push(x);
    }
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * out[k] - kf * out[k - 1]) / (kf + 1.0);
        out.push(next);
    }
    out
}

/// `sum_{n=0}^{N} 2/(2n+1) P_n(y)` accumulated alongside the recurrence.
pub(crate) fn legendre_all_sum(n_max: usize, y: f64) -> f64 {
    legendre_all(n_max, y)
        .iter()
        .enumerate()
        .map(|(n, p)| 2.0 / (2 * n + 1) as f64 * p)
        .sum()
}
