//! The matching function `Φ(z) = z^{-a} U(a, 1+a-b, 1/z)`, its asymptotic
//! coefficients and its Gevrey-1/m averages.
//!
//! `Φ(z) = Γ(a)^{-1} ∫₀^∞ e^{-t} t^{a-1} (1+zt)^{-b} dt ~ Σ f_k (-z)^k` with
//! `f_k = (a)_k (b)_k / k!`.

use std::cmp::Ordering;

use rug::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::precision::Precision;
use crate::quadrature::{integrate_half_line, QuadratureResult};
use crate::scalar::{BigComplex, BigValue, CFloat};
use crate::special::{digamma, euler_gamma, gamma, pochhammer};

/// Parameters of Φ and of its Gevrey average: `Φ_μ^{(1/m)}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhiSpec {
    pub a: BigValue,
    pub b: BigValue,
    #[serde(default = "one")]
    pub m: u32,
    #[serde(default)]
    pub mu: u32,
}

fn one() -> u32 {
    1
}

impl PhiSpec {
    pub fn new(a: BigValue, b: BigValue, m: u32, mu: u32) -> Result<Self> {
        let s = PhiSpec { a, b, m, mu };
        s.validate()?;
        Ok(s)
    }

    /// `m = 1, μ = 0`.
    pub fn simple(a: BigValue, b: BigValue) -> Result<Self> {
        PhiSpec::new(a, b, 1, 0)
    }

    /// The Borel case `a = b = 1`.
    pub fn borel() -> Self {
        PhiSpec {
            a: BigValue::one(),
            b: BigValue::one(),
            m: 1,
            mu: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.a.signum() != Ordering::Greater || self.b.signum() != Ordering::Greater {
            return Err(Error::InvalidInput(format!(
                "Φ parameters must be positive (a = {}, b = {})",
                self.a, self.b
            )));
        }
        if self.m == 0 {
            return Err(Error::InvalidInput("m must be at least 1".into()));
        }
        if self.mu >= self.m {
            return Err(Error::InvalidInput(format!(
                "mu = {} must be below m = {}",
                self.mu, self.m
            )));
        }
        Ok(())
    }

    pub fn is_simple(&self) -> bool {
        self.m == 1 && self.mu == 0
    }
}

/// Large-argument form of Φ for `m = 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AsymptoteForm {
    /// `Φ ~ c_0 z^{e_0} + c_1 z^{e_1}` with `e = (-b, -a)`.
    PowerPair {
        exponents: [BigValue; 2],
        coefficients: [BigValue; 2],
    },
    /// `Φ ~ z^{e} (log_coefficient · log z + constant)` with `e = -a`.
    LogCase {
        exponent: BigValue,
        log_coefficient: BigValue,
        constant: BigValue,
    },
}

/// One term `coefficient · z^{-s} (log z)^{log_power}` of the large-argument
/// expansion of Φ.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MellinTerm {
    pub s: BigValue,
    pub log_power: u32,
    pub coefficient: BigValue,
}

/// `f_{μ+mk} = (a)_j (b)_j / j!` with `j = μ + m k`.
pub fn phi_fk(spec: &PhiSpec, k: usize) -> BigValue {
    let j = spec.mu as usize + spec.m as usize * k;
    let num = &pochhammer(&spec.a, j) * &pochhammer(&spec.b, j);
    &num / &pochhammer(&BigValue::one(), j)
}

fn on_cut(z: &CFloat) -> bool {
    z.im.is_zero() && z.re.cmp0() == Some(Ordering::Less)
}

/// Kernel shared by every Φ evaluation.
pub(crate) struct PhiKernel {
    a: Float,
    b: Float,
    inv_gamma_a: Float,
    bits: u32,
    tol: Float,
}

impl PhiKernel {
    pub fn new(a: &BigValue, b: &BigValue, prec: Precision) -> Self {
        let bits = prec.bits();
        PhiKernel {
            a: a.to_float(bits),
            b: b.to_float(bits),
            inv_gamma_a: gamma(a, bits).recip(),
            bits,
            tol: prec.tolerance(),
        }
    }

    pub fn quadrature(&self, z: &CFloat) -> Result<QuadratureResult> {
        let bits = self.bits;
        let a1 = Float::with_val(bits, &self.a - 1u32);
        integrate_half_line(bits, &self.tol, |t, ln_t| {
            let zt = z.scale(t);
            let w = CFloat::new(Float::with_val(bits, &zt.re + 1u32), zt.im).ln();
            let re = Float::with_val(bits, &a1 * ln_t) - t - Float::with_val(bits, &self.b * &w.re);
            let im = -Float::with_val(bits, &self.b * &w.im);
            Ok(CFloat::new(re, im).exp().scale(&self.inv_gamma_a))
        })
    }

    pub fn eval(&self, z: &CFloat) -> Result<CFloat> {
        if z.is_zero() {
            return Ok(CFloat::one(self.bits));
        }
        if on_cut(z) {
            return Err(Error::BranchCut {
                index: None,
                detail: format!("Φ evaluated at {}", z.re.to_f64()),
            });
        }
        Ok(self.quadrature(z)?.value.to_cfloat(self.bits))
    }

    /// Gevrey average over the m-th roots of unity.
    pub fn eval_gevrey(&self, m: u32, mu: u32, f_mu: &BigValue, z: &CFloat) -> Result<CFloat> {
        if m == 1 && mu == 0 {
            return self.eval(z);
        }
        let bits = self.bits;
        if z.is_zero() {
            return Ok(CFloat::from_real(f_mu.to_float(bits)));
        }
        if on_cut(z) {
            return Err(Error::BranchCut {
                index: None,
                detail: format!("Gevrey average at {}", z.re.to_f64()),
            });
        }
        let (m, mu) = (m as i64, mu as i64);
        let root = z.pow_real(&(Float::with_val(bits, 1) / Float::with_val(bits, m)));
        let u = &CFloat::unit(1, m, bits) * &root;
        let mut acc = CFloat::zero(bits);
        for j in 1..=m {
            let arg = -&(&CFloat::unit(2 * j, m, bits) * &u);
            if on_cut(&arg) {
                return Err(Error::BranchCut {
                    index: Some(j as usize),
                    detail: format!("rotated argument {} on the cut", arg.re.to_f64()),
                });
            }
            let v = self.eval(&arg)?;
            acc = &acc + &(&CFloat::unit(-2 * mu * j, m, bits) * &v);
        }
        let acc = acc.scale(&(Float::with_val(bits, 1) / Float::with_val(bits, m)));
        Ok(&acc / &u.powi(mu as i32))
    }
}

/// `Φ(z)` for `m = 1`, by double-exponential quadrature.
pub fn phi_eval(spec: &PhiSpec, z: &BigComplex, prec: Precision) -> Result<BigComplex> {
    spec.validate()?;
    if !spec.is_simple() {
        return Err(Error::InvalidInput(
            "phi_eval needs m = 1 and mu = 0".into(),
        ));
    }
    let k = PhiKernel::new(&spec.a, &spec.b, prec);
    if z.is_zero() {
        return Ok(BigComplex::real(BigValue::one()));
    }
    k.eval(&z.to_cfloat(prec.bits()))
        .map(BigComplex::from_cfloat)
}

/// Quadrature of Φ with its error estimate.
pub fn phi_quadrature(spec: &PhiSpec, z: &BigComplex, prec: Precision) -> Result<QuadratureResult> {
    spec.validate()?;
    let zc = z.to_cfloat(prec.bits());
    if on_cut(&zc) {
        return Err(Error::BranchCut {
            index: None,
            detail: format!("Φ evaluated at {z}"),
        });
    }
    PhiKernel::new(&spec.a, &spec.b, prec).quadrature(&zc)
}

/// `Φ_μ^{(1/m)}(z) = (1/m) Σ_{j=1..m} ω^{-μj} Φ(-ω^j e^{iπ/m} z^{1/m}) / (e^{iπ/m} z^{1/m})^μ`
/// with `ω = e^{2πi/m}` and the principal m-th root.
pub fn phi_gevrey_eval(spec: &PhiSpec, z: &BigComplex, prec: Precision) -> Result<BigComplex> {
    spec.validate()?;
    let f_mu = phi_fk(spec, 0);
    if z.is_zero() {
        return Ok(BigComplex::real(f_mu));
    }
    let k = PhiKernel::new(&spec.a, &spec.b, prec);
    k.eval_gevrey(spec.m, spec.mu, &f_mu, &z.to_cfloat(prec.bits()))
        .map(BigComplex::from_cfloat)
}

/// Leading large-argument behavior of Φ (`m = 1`).
pub fn phi_asymptote(spec: &PhiSpec, prec: Precision) -> Result<AsymptoteForm> {
    spec.validate()?;
    if !spec.is_simple() {
        return Err(Error::InvalidInput(
            "phi_asymptote needs m = 1 and mu = 0".into(),
        ));
    }
    let bits = prec.bits();
    let (a, b) = (&spec.a, &spec.b);
    let diff = a - b;
    if diff.is_zero() {
        let ga = gamma(a, bits);
        let c = Float::with_val(bits, euler_gamma(bits) * 2u32) + digamma(a, bits);
        return Ok(AsymptoteForm::LogCase {
            exponent: -a,
            log_coefficient: BigValue::Float(Float::with_val(bits, ga.recip_ref())),
            constant: BigValue::Float(-c / ga),
        });
    }
    if diff.is_integer() {
        return Err(Error::UnsupportedDegenerateCase(format!(
            "a - b = {diff} is a nonzero integer"
        )));
    }
    let c_b = gamma(&diff, bits) / gamma(a, bits);
    let c_a = gamma(&-&diff, bits) / gamma(b, bits);
    Ok(AsymptoteForm::PowerPair {
        exponents: [-b, -a],
        coefficients: [BigValue::Float(c_b), BigValue::Float(c_a)],
    })
}

/// The first `count` pole positions of the Mellin representation
/// `Φ(z) = (Γ(a)Γ(b))^{-1} (2πi)^{-1} ∫ Γ(s) Γ(a-s) Γ(b-s) z^{-s} ds`, each
/// giving one power (simple pole) or a power times `log z` plus a power
/// (double pole, when `a - b` is an integer).
pub fn large_z_expansion(a: &BigValue, b: &BigValue, count: usize, bits: u32) -> Vec<MellinTerm> {
    let diff = a - b;
    let integer_gap = diff.is_integer();
    let norm = Float::with_val(bits, gamma(a, bits) * gamma(b, bits));
    let fact = |k: usize| gamma(&BigValue::from_int(k as i64 + 1), bits);
    let mut out = Vec::new();
    let mut poles: Vec<(BigValue, Option<usize>, Option<usize>)> = Vec::new();
    // (s0, k with s0 = b + k, k' with s0 = a + k')
    for k in 0..count {
        let kb = BigValue::from_int(k as i64);
        for (base, from_b) in [(b, true), (a, false)] {
            let s0 = base + &kb;
            match poles.iter_mut().find(|p| p.0 == s0) {
                Some(p) => {
                    if from_b {
                        p.1 = Some(k)
                    } else {
                        p.2 = Some(k)
                    }
                }
                None => poles.push(if from_b {
                    (s0, Some(k), None)
                } else {
                    (s0, None, Some(k))
                }),
            }
        }
    }
    if integer_gap {
        // Fill in the partner index so coinciding positions are seen as double.
        for p in poles.iter_mut() {
            let kb = &p.0 - b;
            let ka = &p.0 - a;
            if kb.signum() != Ordering::Less {
                p.1 = Some(kb.to_f64().round() as usize);
            }
            if ka.signum() != Ordering::Less {
                p.2 = Some(ka.to_f64().round() as usize);
            }
        }
    }
    poles.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap_or(Ordering::Equal));
    poles.truncate(count);
    for (s0, kb, ka) in poles {
        match (kb, ka) {
            (Some(k), Some(kp)) => {
                let sign = if (k + kp) % 2 == 0 { 1 } else { -1 };
                let f =
                    Float::with_val(bits, gamma(&s0, bits) * sign) / (fact(k) * fact(kp)) / &norm;
                let c = -digamma(&s0, bits)
                    + digamma(&BigValue::from_int(k as i64 + 1), bits)
                    + digamma(&BigValue::from_int(kp as i64 + 1), bits);
                out.push(MellinTerm {
                    s: s0.clone(),
                    log_power: 1,
                    coefficient: BigValue::Float(f.clone()),
                });
                out.push(MellinTerm {
                    s: s0,
                    log_power: 0,
                    coefficient: BigValue::Float(f * c),
                });
            }
            (Some(k), None) => {
                out.push(simple_term(&s0, k, &(a - b), b, &norm, bits));
            }
            (None, Some(k)) => {
                out.push(simple_term(&s0, k, &(b - a), a, &norm, bits));
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Residue at `s0 = c + k` of the pole from `Γ(c - s)`, where the other
/// parameter differs from `c` by `gap`.
fn simple_term(
    s0: &BigValue,
    k: usize,
    gap: &BigValue,
    c: &BigValue,
    norm: &Float,
    bits: u32,
) -> MellinTerm {
    let sign: i32 = if k.is_multiple_of(2) { 1 } else { -1 };
    let kb = BigValue::from_int(k as i64);
    let num = gamma(&(c + &kb), bits) * gamma(&(gap - &kb), bits);
    let den = gamma(&BigValue::from_int(k as i64 + 1), bits);
    MellinTerm {
        s: s0.clone(),
        log_power: 0,
        coefficient: BigValue::Float(num / den / norm * sign),
    }
}
