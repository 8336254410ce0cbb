//! Working precision, expressed in decimal digits.
//!
//! Every routine that produces floating-point values takes a [`Precision`]
//! argument; there is no global precision state.

use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};

/// Decimal working precision. Always at least [`Precision::MIN_DIGITS`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Precision(u32);

impl Precision {
    pub const MIN_DIGITS: u32 = 20;
    pub const DEFAULT_DIGITS: u32 = 50;

    /// Guard bits carried on top of the requested decimal digits.
    const GUARD_BITS: u32 = 16;

    pub fn new(digits: u32) -> Result<Self> {
        if digits < Self::MIN_DIGITS {
            return Err(Error::InvalidInput(format!(
                "precision must be at least {} digits, got {digits}",
                Self::MIN_DIGITS
            )));
        }
        Ok(Precision(digits))
    }

    pub fn digits(self) -> u32 {
        self.0
    }

    /// Binary precision used for MPFR values, including guard bits.
    pub fn bits(self) -> u32 {
        (f64::from(self.0) * std::f64::consts::LOG2_10).ceil() as u32 + Self::GUARD_BITS
    }

    /// `10^-(digits - 10)`: the agreement demanded of quantities computed at
    /// this precision (quadrature targets, root residuals, matching checks).
    pub fn tolerance(self) -> Float {
        Float::with_val(self.bits(), 10).pow(-(self.0 as i32 - 10))
    }

    pub fn tolerance_f64(self) -> f64 {
        10f64.powi(-(self.0 as i32 - 10))
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision(Self::DEFAULT_DIGITS)
    }
}
