//! Power-series container and generators for the worked examples.

mod bernoulli;
mod rspt;

use std::path::Path;

use rug::Rational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::BigValue;
use crate::special::pochhammer;
use crate::sum::{TransformSpec, VariableMap};

/// Coefficients `d_k` of an asymptotic series in the variable `w`, together
/// with the map back to the physical quantity:
/// `F(g) = subtract + g^divide_power * Σ d_k w^k` with `w = scale * g^power`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PowerSeries {
    pub coeffs: Vec<BigValue>,
    #[serde(default)]
    pub transform: TransformSpec,
    #[serde(default)]
    pub label: String,
}

impl PowerSeries {
    pub fn new(
        coeffs: Vec<BigValue>,
        transform: TransformSpec,
        label: impl Into<String>,
    ) -> Result<Self> {
        let s = PowerSeries {
            coeffs,
            transform,
            label: label.into(),
        };
        s.validate()?;
        Ok(s)
    }

    pub fn from_rationals(coeffs: Vec<Rational>, label: impl Into<String>) -> Self {
        PowerSeries {
            coeffs: coeffs.into_iter().map(BigValue::Exact).collect(),
            transform: TransformSpec::default(),
            label: label.into(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.coeffs.is_empty() {
            return Err(Error::InvalidInput("series has no coefficients".into()));
        }
        self.transform.validate()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.coeffs.iter().all(BigValue::is_exact)
    }

    /// First `k` coefficients (all of them if fewer are stored).
    pub fn truncated(&self, k: usize) -> PowerSeries {
        let mut s = self.clone();
        s.coeffs.truncate(k.max(1));
        s
    }

    /// Moves `d_0` into the additive constant and divides the rest by one
    /// power of the series variable, e.g. `E(g) = 1/2 + g (3/4 - 21/8 g + ...)`.
    pub fn once_subtracted(&self) -> Result<PowerSeries> {
        if self.coeffs.len() < 2 {
            return Err(Error::InvalidInput(
                "need at least two coefficients to subtract".into(),
            ));
        }
        let t = &self.transform;
        if t.divide_power != 0 {
            return Err(Error::InvalidInput(
                "series already carries a power prefactor".into(),
            ));
        }
        let transform = TransformSpec {
            subtract: &t.subtract + &self.coeffs[0],
            divide_power: t.variable_map.power,
            variable_map: t.variable_map.clone(),
        };
        let coeffs = self.coeffs[1..]
            .iter()
            .map(|c| c * &t.variable_map.scale)
            .collect();
        PowerSeries::new(coeffs, transform, format!("{} (subtracted)", self.label))
    }

    /// Coefficients of `F(g) - subtract` as a plain power series in `g`, up to
    /// `g^max_power`.
    pub fn g_coefficients(&self, max_power: usize) -> Vec<BigValue> {
        let t = &self.transform;
        let mut out = vec![BigValue::zero(); max_power + 1];
        let q = t.variable_map.power as usize;
        let p = t.divide_power as usize;
        for (k, d) in self.coeffs.iter().enumerate() {
            let e = p + q * k;
            if e > max_power {
                break;
            }
            out[e] = d * &t.variable_map.scale.powi(k as i32);
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let series: PowerSeries = serde_json::from_str(s)?;
        series.validate()?;
        Ok(series)
    }

    pub fn read_json(path: &Path) -> Result<Self> {
        PowerSeries::from_json(&std::fs::read_to_string(path)?)
    }
}

/// B_n with the convention B_1 = -1/2.
pub fn bernoulli(n: usize) -> Rational {
    bernoulli::bernoulli_table(n)
        .pop()
        .expect("table has n+1 entries")
}

/// Weak-field expansion of the one-loop Euler-Heisenberg Lagrangian
/// `L(g) = Σ_k d_k g^{2k+2}`, stored as a series in `w = g²` with a `g²`
/// prefactor: `d_k = 2^{2k+4} B_{2k+4} / ((2k+4)(2k+3)(2k+2))`.
pub fn euler_heisenberg_series(count: usize) -> Result<PowerSeries> {
    require_count(count)?;
    let b = bernoulli::bernoulli_table(2 * count + 2);
    let coeffs = (0..count)
        .map(|k| {
            let n = 2 * k + 4;
            let two_pow = rug::Integer::from(1) << (n as u32);
            let denom = (n * (n - 1) * (n - 2)) as u64;
            BigValue::Exact(Rational::from(&b[n] * two_pow) / denom)
        })
        .collect();
    let transform = TransformSpec {
        subtract: BigValue::zero(),
        divide_power: 2,
        variable_map: VariableMap {
            scale: BigValue::one(),
            power: 2,
        },
    };
    PowerSeries::new(coeffs, transform, "euler-heisenberg")
}

/// Expansion of the zero-dimensional partition function
/// `Z(g) = (2π)^{-1/2} ∫ exp(-x²/2 - g x⁴/24) dx`:
/// `c_k = (3/4)_k (1/4)_k / k! · (-2/3)^k`.
pub fn zero_dim_partition_series(count: usize) -> Result<PowerSeries> {
    require_count(count)?;
    let a = BigValue::ratio(3, 4);
    let b = BigValue::ratio(1, 4);
    let x = BigValue::ratio(-2, 3);
    let coeffs = (0..count)
        .map(|k| {
            let fact = pochhammer(&BigValue::one(), k);
            &(&pochhammer(&a, k) * &pochhammer(&b, k)) / &fact * x.powi(k as i32)
        })
        .collect();
    PowerSeries::new(coeffs, TransformSpec::default(), "zero-dim")
}

/// Ground-state energy of `-½ψ'' + ½x²ψ + g x⁴ψ`, `E = 1/2 + 3/4 g - 21/8 g² + ...`.
pub fn quartic_rspt_series(count: usize) -> Result<PowerSeries> {
    require_count(count)?;
    Ok(PowerSeries::from_rationals(
        rspt::ground_state(4, count),
        "quartic",
    ))
}

/// Ground-state energy with a `g x⁶` perturbation, `E = 1/2 + 15/8 g - 3495/64 g² + ...`.
pub fn sextic_rspt_series(count: usize) -> Result<PowerSeries> {
    require_count(count)?;
    Ok(PowerSeries::from_rationals(
        rspt::ground_state(6, count),
        "sextic",
    ))
}

/// Eight known terms of the φ⁴ β-function in the rescaled coupling.
pub fn beta_function_series() -> PowerSeries {
    let coeffs = [
        "0",
        "-1",
        "1",
        "-308/729",
        "0.3510695977",
        "-0.3765268283",
        "0.49554751",
        "-0.749689",
    ]
    .iter()
    .map(|s| BigValue::parse(s).expect("valid literal"))
    .collect();
    PowerSeries {
        coeffs,
        transform: TransformSpec::default(),
        label: "beta".into(),
    }
}

fn require_count(count: usize) -> Result<()> {
    if count == 0 {
        return Err(Error::InvalidInput(
            "coefficient count must be at least 1".into(),
        ));
    }
    Ok(())
}
