//! Numerical machinery for definite integrals of products of complete
//! elliptic integrals.
//!
//! The crate evaluates `K` and `E` in the parameter convention, integrates
//! singular integrands on `(0, 1)` with tanh-sinh quadrature, applies the
//! Caputo half-order operators to generalized power series, and ships a
//! catalog of closed-form evaluations that can be checked numerically.
//!
//! ```
//! use cgint_core::elliptic::ellint_k;
//! use cgint_core::quadrature::{integrate_01, QuadratureConfig};
//!
//! let r = integrate_01(|x| ellint_k(x).unwrap().powi(2), &QuadratureConfig::default()).unwrap();
//! let zeta3 = cgint_core::specfun::constants::ZETA3;
//! assert!((r.value - 3.5 * zeta3).abs() < 1e-10);
//! ```

pub mod catalog;
pub mod elliptic;
pub mod error;
pub mod quadrature;
pub mod sibp;
pub mod specfun;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    struct Readme;
    #[doc = include_str!("../../../book/src/elliptic.md")]
    struct Elliptic;
    #[doc = include_str!("../../../book/src/quadrature.md")]
    struct Quadrature;
    #[doc = include_str!("../../../book/src/sibp.md")]
    struct Sibp;
    #[doc = include_str!("../../../book/src/catalog.md")]
    struct Catalog;
    #[doc = include_str!("../../../book/src/special-functions.md")]
    struct SpecialFunctions;
}
