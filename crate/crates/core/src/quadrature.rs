//! Double-exponential quadrature on the half line.
//!
//! The substitution `t = exp(x - e^{-x})` makes integrands that behave like a
//! power of `t` at the origin and decay like `e^{-t}` at infinity fall off
//! double-exponentially in `x`. The trapezoidal rule in `x` is then refined by
//! halving the step until two successive levels agree.

use std::cmp::Ordering;

use rug::Float;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{BigComplex, BigValue, CFloat};

/// Outcome of a converged quadrature.
#[derive(Clone, Debug, Serialize)]
pub struct QuadratureResult {
    pub value: BigComplex,
    /// Change between the last two refinement levels.
    pub error_estimate: BigValue,
    pub levels_used: u32,
}

pub const MAX_LEVELS: u32 = 12;
const H0: f64 = 0.5;
const MAX_ABSCISSA: f64 = 60.0;

/// Integrates `f(t)` over `(0, inf)`. The callback receives `t` and `ln t`
/// (the latter is exact even where `t` underflows).
///
/// Convergence means `|S_l - S_{l-1}| <= tol * max(1, |S_l|)`.
pub(crate) fn integrate_half_line<F>(bits: u32, tol: &Float, mut f: F) -> Result<QuadratureResult>
where
    F: FnMut(&Float, &Float) -> Result<CFloat>,
{
    let eps = Float::with_val(bits, Float::u_exp(1, -(bits as i32)));
    let mut node = |x: f64| -> Result<CFloat> {
        let x = Float::with_val(bits, x);
        let emx = Float::with_val(bits, -&x).exp();
        let ln_t = Float::with_val(bits, &x - &emx);
        let t = Float::with_val(bits, ln_t.exp_ref());
        let jac = Float::with_val(bits, &t * (emx + 1u32));
        let v = f(&t, &ln_t)?;
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::Quadrature {
                levels: 0,
                error_estimate: f64::INFINITY,
            });
        }
        Ok(if jac.is_zero() {
            CFloat::zero(bits)
        } else {
            v.scale(&jac)
        })
    };

    // Level 0 fixes the truncation window used by every later level.
    let mut raw = node(0.0)?;
    let mut bounds = [0i64; 2];
    for (side, dir) in [(0usize, -1.0f64), (1, 1.0)] {
        let mut k = 0i64;
        let mut quiet = 0;
        loop {
            k += 1;
            let x = dir * H0 * k as f64;
            if x.abs() > MAX_ABSCISSA {
                break;
            }
            let term = node(x)?;
            let small = term.abs() <= Float::with_val(bits, &eps * raw.abs());
            raw = &raw + &term;
            if small && x.abs() >= 1.0 {
                quiet += 1;
                if quiet >= 2 {
                    break;
                }
            } else {
                quiet = 0;
            }
        }
        bounds[side] = k;
    }
    let (lo, hi) = (-(bounds[0] as f64) * H0, bounds[1] as f64 * H0);

    let mut h = H0;
    let mut prev = raw.scale(&Float::with_val(bits, h));
    let mut last_diff = Float::with_val(bits, f64::INFINITY);
    for level in 1..=MAX_LEVELS {
        h /= 2.0;
        let steps = ((hi - lo) / h).round() as i64;
        let mut added = CFloat::zero(bits);
        for i in (1..steps).step_by(2) {
            added = &added + &node(lo + h * i as f64)?;
        }
        raw = &raw + &added;
        let cur = raw.scale(&Float::with_val(bits, h));
        let diff = (&cur - &prev).abs();
        let scale = cur.abs().max(&Float::with_val(bits, 1));
        let target = Float::with_val(bits, tol * &scale);
        if level >= 2 && diff.partial_cmp(&target) != Some(Ordering::Greater) {
            return Ok(QuadratureResult {
                value: BigComplex::from_cfloat(cur),
                error_estimate: BigValue::Float(diff),
                levels_used: level,
            });
        }
        last_diff = diff;
        prev = cur;
    }
    Err(Error::Quadrature {
        levels: MAX_LEVELS,
        error_estimate: last_diff.to_f64(),
    })
}
