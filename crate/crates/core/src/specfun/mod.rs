//! Scalar special functions and constants.
//!
//! Everything here is a pure function of its arguments. The elliptic,
//! quadrature and catalog modules are built on top of these primitives.

mod binomial;
pub mod constants;
mod dilog;
mod gamma;
mod hypergeometric;
mod legendre;

pub use binomial::{binom_ratio_2n_n, binom_ratio_4n_2n};
pub use dilog::dilog;
pub use gamma::{gamma, gamma_ratio, ln_gamma};
pub use hypergeometric::pfq_unit;
pub use legendre::legendre_p;
pub(crate) use legendre::legendre_all_sum;
pub(crate) use hypergeometric::CompensatedSum;
