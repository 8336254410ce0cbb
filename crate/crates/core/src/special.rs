//! Gamma, digamma, Euler's constant and Pochhammer symbols.

use rug::float::Constant;
use rug::{Float, Integer, Rational};

use crate::scalar::BigValue;

/// Γ(x) at `bits` of precision. Positive integers give the exact factorial.
pub fn gamma(x: &BigValue, bits: u32) -> Float {
    if let Some(r) = x.as_rational() {
        if r.is_integer() && *r > 0 {
            if let Some(n) = r.numer().to_u32() {
                if n <= 10_000 {
                    return Float::with_val(bits, &Integer::from(Integer::factorial(n - 1)));
                }
            }
        }
    }
    x.to_float(bits).gamma()
}

/// ψ⁽⁰⁾(x), the logarithmic derivative of Γ.
pub fn digamma(x: &BigValue, bits: u32) -> Float {
    x.to_float(bits).digamma()
}

/// Euler's constant γ.
pub fn euler_gamma(bits: u32) -> Float {
    Float::with_val(bits, Constant::Euler)
}

/// Rising factorial (c)_k = c (c+1) ... (c+k-1), as an exact product when
/// `c` is rational.
pub fn pochhammer(c: &BigValue, k: usize) -> BigValue {
    match c {
        BigValue::Exact(r) => {
            let mut acc = Rational::from(1);
            let mut term = r.clone();
            for _ in 0..k {
                acc *= &term;
                term += 1;
            }
            BigValue::Exact(acc)
        }
        BigValue::Float(f) => {
            let p = f.prec();
            let mut acc = Float::with_val(p, 1);
            let mut term = f.clone();
            for _ in 0..k {
                acc *= &term;
                term += 1;
            }
            BigValue::Float(acc)
        }
    }
}
