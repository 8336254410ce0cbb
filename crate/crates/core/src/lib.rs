//! Φ-Padé summation of divergent power series.
//!
//! A series `Σ d_k g^k` whose coefficients grow like `f_k = (a)_k (b)_k / k!`
//! is divided term by term by `f_k`, the quotient is continued by a
//! `[n-1, n]` Padé approximant, and each pole of that approximant is traded
//! for a scaled copy of a function Φ whose asymptotic series has exactly the
//! coefficients `f_k`. With `a = b = 1` this is Borel-Padé summation.
//!
//! ```
//! use phipade::phi::PhiSpec;
//! use phipade::series::quartic_rspt_series;
//! use phipade::sum::build;
//! use phipade::{BigValue, Precision};
//!
//! let series = quartic_rspt_series(3)?.once_subtracted()?;
//! let spec = PhiSpec::simple(BigValue::ratio(2, 3), BigValue::one())?;
//! let approx = build(&series, &spec, 1, Precision::default())?;
//! assert_eq!(approx.pf.poles[0].re, BigValue::ratio(-4, 21));
//! # Ok::<(), phipade::Error>(())
//! ```

pub mod cli;
pub mod error;
pub mod oracles;
pub mod pade;
pub mod phi;
pub mod precision;
pub mod quadrature;
pub mod scalar;
pub mod series;
pub mod special;
pub mod sum;

pub use error::{Error, Result};
pub use precision::Precision;
pub use scalar::{BigComplex, BigValue};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/matching-functions.md")]
    mod matching_functions {}
    #[doc = include_str!("../../../book/src/approximants.md")]
    mod approximants {}
    #[doc = include_str!("../../../book/src/large-coupling.md")]
    mod large_coupling {}
    #[doc = include_str!("../../../book/src/examples.md")]
    mod examples {}
    #[doc = include_str!("../../../book/src/precision.md")]
    mod precision {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
