//! Reference computations that do not go through the Padé pipeline: direct
//! integrals, the inverse confluent hypergeometric transform, the
//! exponential integral, and oscillator energies by diagonalization.

use nalgebra::{DMatrix, SymmetricEigen};
use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::pade::pade_n1n;
use crate::phi::{PhiKernel, PhiSpec};
use crate::precision::Precision;
use crate::quadrature::{integrate_half_line, QuadratureResult};
use crate::scalar::{BigComplex, BigValue, CFloat};
use crate::series::{bernoulli, PowerSeries};
use crate::special::{euler_gamma, gamma};
use crate::sum::phi_transform;

fn oracle_precision(prec: Precision) -> Precision {
    Precision::new(prec.digits().max(40)).expect("above minimum")
}

/// `Z(g) = (2π)^{-1/2} ∫ exp(-x²/2 - g x⁴/24) dx`, to at least 25 digits.
pub fn zero_dim_z(g: &BigValue, prec: Precision) -> Result<BigValue> {
    if g.signum() == std::cmp::Ordering::Less {
        return Err(Error::InvalidInput("coupling must be nonnegative".into()));
    }
    if g.is_zero() {
        return Ok(BigValue::one());
    }
    let p = oracle_precision(prec);
    let bits = p.bits();
    let gf = g.to_float(bits) / 24u32;
    let r = integrate_half_line(bits, &p.tolerance(), |t, _| {
        let t2 = Float::with_val(bits, t.square_ref());
        let e = -(Float::with_val(bits, &t2 / 2u32) + Float::with_val(bits, t2.square_ref()) * &gf);
        Ok(CFloat::from_real(e.exp()))
    })?;
    let two_pi = Float::with_val(bits, Constant::Pi) * 2u32;
    let norm = Float::with_val(bits, 2u32) / two_pi.sqrt();
    Ok(BigValue::Float(r.value.re.to_float(bits) * norm))
}

/// `L(g) = ∫₀^∞ e^{-s/g} (coth s - 1/s - s/3) s^{-2} ds`.
pub fn eh_lagrangian(g: &BigValue, prec: Precision) -> Result<BigValue> {
    if g.signum() != std::cmp::Ordering::Greater {
        return Err(Error::InvalidInput("coupling must be positive".into()));
    }
    let p = oracle_precision(prec);
    let bits = p.bits();
    let work = bits + 64;
    let inv_g = g.to_float(work).recip();
    // Taylor form of (coth s - 1/s - s/3)/s² = Σ_{n≥2} 2^{2n} B_{2n} s^{2n-3} / (2n)!
    let taylor: Vec<Float> = (2..20)
        .map(|n| {
            let b = bernoulli(2 * n);
            let c = b * (Integer::from(1) << (2 * n as u32));
            let fact = Integer::from(Integer::factorial(2 * n as u32));
            Float::with_val(work, c / fact)
        })
        .collect();
    let cutoff = Float::with_val(work, 1e-2);
    let r = integrate_half_line(bits, &p.tolerance(), |t, _| {
        let s = Float::with_val(work, t);
        let h = if s < cutoff {
            let s2 = Float::with_val(work, s.square_ref());
            let mut acc = Float::new(work);
            for c in taylor.iter().rev() {
                acc = acc * &s2 + c;
            }
            acc * &s
        } else {
            let e2 = Float::with_val(work, &s * 2u32).exp_m1();
            let coth = Float::with_val(work, 2u32) / e2 + 1u32;
            let v = coth - Float::with_val(work, s.recip_ref()) - Float::with_val(work, &s / 3u32);
            v / Float::with_val(work, s.square_ref())
        };
        let damp = (-Float::with_val(work, &s * &inv_g)).exp();
        Ok(CFloat::from_real(Float::with_val(bits, h * damp)))
    })?;
    Ok(r.value.re)
}

/// `E₁(w)` for complex `w` off the negative real axis, by its convergent
/// power series with enough guard bits to absorb the cancellation.
pub fn e1(w: &BigComplex, prec: Precision) -> Result<BigComplex> {
    let bits = prec.bits();
    let wf = w.to_cfloat(bits);
    if wf.is_zero() || (wf.im.is_zero() && wf.re < 0) {
        return Err(Error::BranchCut {
            index: None,
            detail: format!("E₁ at {w}"),
        });
    }
    let guard = (2.0 * wf.abs().to_f64()).ceil() as u32 + 64;
    let work = bits + guard;
    let w = w.to_cfloat(work);
    let neg_w = -&w;
    let eps = Float::with_val(work, Float::with_val(work, 2).pow(-(work as i32)));
    let mut term = CFloat::one(work);
    let mut sum = CFloat::zero(work);
    let mut k = 1u32;
    loop {
        term = (&term * &neg_w).scale(&Float::with_val(work, k).recip());
        let contrib = term.scale(&Float::with_val(work, k).recip());
        sum = &sum + &contrib;
        if contrib.abs() <= Float::with_val(work, &eps * sum.abs()) && k as f64 > wf.abs().to_f64()
        {
            break;
        }
        k += 1;
        if k > 100_000 {
            return Err(Error::InvalidInput("E₁ series did not converge".into()));
        }
    }
    let gamma_e = CFloat::from_real(euler_gamma(work));
    let v = -&(&(&gamma_e + &w.ln()) + &sum);
    Ok(BigComplex::from_cfloat(CFloat::new(
        Float::with_val(bits, &v.re),
        Float::with_val(bits, &v.im),
    )))
}

/// The Euler function `z^{-1} e^{1/z} E₁(1/z)`, which equals Φ for `a = b = 1`.
pub fn euler_identity(z: &BigComplex, prec: Precision) -> Result<BigComplex> {
    let bits = prec.bits();
    let zc = z.to_cfloat(bits + 64);
    let w = zc.recip();
    let e = e1(
        &BigComplex::from_cfloat(w.clone()),
        Precision::new(prec.digits() + 20)?,
    )?;
    let v = &(&w * &w.exp()) * &e.to_cfloat(bits + 64);
    Ok(BigComplex::from_cfloat(CFloat::new(
        Float::with_val(bits, &v.re),
        Float::with_val(bits, &v.im),
    )))
}

/// Classical Borel-Padé sum: the `[n-1, n]` Padé approximant `P/Q` of the
/// Borel transform `d_k / k!`, integrated against `e^{-t}` directly.
pub fn borel_pade_laplace(
    series: &PowerSeries,
    n: usize,
    g: &BigComplex,
    prec: Precision,
) -> Result<BigComplex> {
    let bits = prec.bits();
    let borel = phi_transform(series, &PhiSpec::borel())?;
    let pade = pade_n1n(&borel, n, prec)?;
    let gc = g.to_cfloat(bits);
    let w = series.transform.w_of(&gc);
    let r = integrate_half_line(bits, &prec.tolerance(), |t, _| {
        let x = w.scale(t);
        let num = pade.numerator.eval_cfloat(&x);
        let den = pade.denominator.eval_cfloat(&x);
        if den.is_zero() {
            return Err(Error::BranchCut {
                index: None,
                detail: "Padé pole on the integration path".into(),
            });
        }
        let e = Float::with_val(bits, -t).exp();
        Ok((&num / &den).scale(&e))
    })?;
    let v = series.transform.undo(&gc, &r.value.to_cfloat(bits));
    Ok(BigComplex::from_cfloat(v))
}

/// `ψ(z) = (Γ(a)Γ(b))^{-1} ∫₀^∞ f̂(zs) e^{-s} s^{a-1} U(1-b, a-b+1, s) ds`,
/// which inverts the transform `d_k → d_k / f_k`.
pub struct InverseTransform<F> {
    spec: PhiSpec,
    fhat: F,
    prec: Precision,
}

/// Builds the inverse transform of `fhat` for `spec` (`m = 1`).
pub fn inverse_transform<F>(fhat: F, spec: &PhiSpec, prec: Precision) -> Result<InverseTransform<F>>
where
    F: Fn(&BigComplex) -> Result<BigComplex>,
{
    spec.validate()?;
    if !spec.is_simple() {
        return Err(Error::InvalidInput(
            "inverse transform needs m = 1 and mu = 0".into(),
        ));
    }
    Ok(InverseTransform {
        spec: spec.clone(),
        fhat,
        prec,
    })
}

impl<F> InverseTransform<F>
where
    F: Fn(&BigComplex) -> Result<BigComplex>,
{
    pub fn eval(&self, z: &BigComplex) -> Result<QuadratureResult> {
        let bits = self.prec.bits();
        let (a, b) = (&self.spec.a, &self.spec.b);
        let kernel = UKernel::new(
            &(&BigValue::one() - b),
            &(&(a - b) + &BigValue::one()),
            self.prec,
        );
        let norm = Float::with_val(bits, gamma(a, bits) * gamma(b, bits)).recip();
        let a1 = Float::with_val(bits, a.to_float(bits) - 1u32);
        let zc = z.to_cfloat(bits);
        integrate_half_line(bits, &self.prec.tolerance(), |s, ln_s| {
            let arg = BigComplex::from_cfloat(zc.scale(s));
            let f = (self.fhat)(&arg)?.to_cfloat(bits);
            let u = kernel.eval(s)?;
            let w = Float::with_val(bits, &a1 * ln_s) - s;
            let weight = w.exp() * u * &norm;
            Ok(f.scale(&weight))
        })
    }
}

/// `U(α, β, s)` for real `s > 0`.
struct UKernel {
    alpha: BigValue,
    beta: BigValue,
    prec: Precision,
    form: UForm,
}

enum UForm {
    One,
    Polynomial(Vec<Float>),
    Integral,
    Recurrence(usize),
}

impl UKernel {
    fn new(alpha: &BigValue, beta: &BigValue, prec: Precision) -> Self {
        let bits = prec.bits();
        let form = if alpha.is_zero() {
            UForm::One
        } else if alpha.signum() == std::cmp::Ordering::Greater {
            UForm::Integral
        } else if alpha.is_integer() {
            // U(-M, β, s) = (-1)^M Σ_k C(M,k) (β+k)_{M-k} (-s)^k
            let m = (-alpha).to_f64().round() as usize;
            let coeffs = (0..=m)
                .map(|k| {
                    let binom = Integer::from(Integer::binomial_u(m as u32, k as u32));
                    let poch =
                        crate::special::pochhammer(&(beta + &BigValue::from_int(k as i64)), m - k);
                    let sign = if (m + k).is_multiple_of(2) { 1 } else { -1 };
                    Float::with_val(bits, poch.to_float(bits) * binom) * sign
                })
                .collect();
            UForm::Polynomial(coeffs)
        } else {
            let steps = (-alpha).to_f64().floor() as usize + 1;
            UForm::Recurrence(steps)
        };
        UKernel {
            alpha: alpha.clone(),
            beta: beta.clone(),
            prec,
            form,
        }
    }

    fn eval(&self, s: &Float) -> Result<Float> {
        let bits = self.prec.bits();
        match &self.form {
            UForm::One => Ok(Float::with_val(bits, 1)),
            UForm::Polynomial(c) => {
                let mut acc = Float::new(bits);
                for v in c.iter().rev() {
                    acc = acc * s + v;
                }
                Ok(acc)
            }
            UForm::Integral => integral_u(&self.alpha, &self.beta, s, self.prec),
            UForm::Recurrence(steps) => {
                // U(a-1) = -(β - 2a - s) U(a) - a(a - β + 1) U(a+1), from a > 0 downward
                let top = &self.alpha + &BigValue::from_int(*steps as i64);
                let mut hi = integral_u(&(&top + &BigValue::one()), &self.beta, s, self.prec)?;
                let mut cur = integral_u(&top, &self.beta, s, self.prec)?;
                let beta = self.beta.to_float(bits);
                let mut a = top.to_float(bits);
                for _ in 0..*steps {
                    let c1 = Float::with_val(bits, &beta - Float::with_val(bits, &a * 2u32)) - s;
                    let c2 = Float::with_val(bits, &a - &beta) + 1u32;
                    let c2 = c2 * &a;
                    let next = -(c1 * &cur) - c2 * &hi;
                    hi = cur;
                    cur = next;
                    a -= 1u32;
                }
                Ok(cur)
            }
        }
    }
}

/// `U(α, β, s) = s^{-α} Γ(α)^{-1} ∫ e^{-t} t^{α-1} (1 + t/s)^{β-α-1} dt` for `α > 0`.
fn integral_u(alpha: &BigValue, beta: &BigValue, s: &Float, prec: Precision) -> Result<Float> {
    let bits = prec.bits();
    let b_prime = &(alpha + &BigValue::one()) - beta;
    let kernel = PhiKernel::new(alpha, &b_prime, prec);
    let z = CFloat::from_real(Float::with_val(bits, s.recip_ref()));
    let v = kernel.eval(&z)?;
    let scale = Float::with_val(bits, s).pow(&(-alpha).to_float(bits));
    Ok(v.re * scale)
}

/// Which anharmonic term is added to the harmonic oscillator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Anharmonicity {
    Quartic,
    Sextic,
}

impl Anharmonicity {
    pub fn from_power(power: u32) -> Result<Self> {
        match power {
            4 => Ok(Anharmonicity::Quartic),
            6 => Ok(Anharmonicity::Sextic),
            _ => Err(Error::InvalidInput(format!("unsupported power {power}"))),
        }
    }

    fn power(self) -> usize {
        match self {
            Anharmonicity::Quartic => 4,
            Anharmonicity::Sextic => 6,
        }
    }
}

const START_BASIS: usize = 64;
const MAX_BASIS: usize = 1024;
const BASIS_TOLERANCE: f64 = 1e-10;

/// Ground state of `-½ψ'' + ½x²ψ + g x^P ψ = Eψ`.
pub fn oscillator_energy(power: u32, g: f64) -> Result<f64> {
    if g < 0.0 {
        return Err(Error::InvalidInput("coupling must be nonnegative".into()));
    }
    let kind = Anharmonicity::from_power(power)?;
    if g == 0.0 {
        return Ok(0.5);
    }
    ground_state(kind, 1.0, g)
}

/// Ground state of `-½ψ'' + x^P ψ = εψ`; the strong-coupling limit is
/// `E(g) ~ ε g^{2/(P+2)}`.
pub fn pure_anharmonic_energy(power: u32) -> Result<f64> {
    ground_state(Anharmonicity::from_power(power)?, 0.0, 1.0)
}

fn ground_state(kind: Anharmonicity, harmonic: f64, g: f64) -> Result<f64> {
    let omega = variational_frequency(kind, harmonic, g);
    let mut n = START_BASIS;
    let mut prev = lowest_even_eigenvalue(kind, harmonic, g, omega, n);
    loop {
        n *= 2;
        let cur = lowest_even_eigenvalue(kind, harmonic, g, omega, n);
        if (cur - prev).abs() < BASIS_TOLERANCE * cur.abs().max(1.0) {
            return Ok(cur);
        }
        if n >= MAX_BASIS {
            return Err(Error::InvalidInput(format!(
                "basis did not converge: {prev} vs {cur} at size {n}"
            )));
        }
        prev = cur;
    }
}

/// Frequency minimizing the Gaussian trial energy `Ω/4 + h/(4Ω) + g⟨x^P⟩`.
fn variational_frequency(kind: Anharmonicity, harmonic: f64, g: f64) -> f64 {
    let trial = |ln_w: f64| {
        let w = ln_w.exp();
        let moment = match kind {
            Anharmonicity::Quartic => 3.0 / (4.0 * w * w),
            Anharmonicity::Sextic => 15.0 / (8.0 * w * w * w),
        };
        w / 4.0 + harmonic / (4.0 * w) + g * moment
    };
    let (mut lo, mut hi) = (-12.0f64, 12.0f64);
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    for _ in 0..200 {
        let x1 = hi - phi * (hi - lo);
        let x2 = lo + phi * (hi - lo);
        if trial(x1) < trial(x2) {
            hi = x2;
        } else {
            lo = x1;
        }
    }
    (0.5 * (lo + hi)).exp()
}

fn lowest_even_eigenvalue(kind: Anharmonicity, harmonic: f64, g: f64, omega: f64, n: usize) -> f64 {
    let power = kind.power();
    let big = n + power + 2;
    // a + a† and a† - a in the oscillator basis of frequency Ω
    let mut sum = DMatrix::<f64>::zeros(big, big);
    let mut diff = DMatrix::<f64>::zeros(big, big);
    for k in 0..big - 1 {
        let s = ((k + 1) as f64).sqrt();
        sum[(k, k + 1)] = s;
        sum[(k + 1, k)] = s;
        diff[(k + 1, k)] = s;
        diff[(k, k + 1)] = -s;
    }
    let x = sum / (2.0 * omega).sqrt();
    let x2 = &x * &x;
    let p2 = (&diff * &diff) * (-omega / 2.0);
    let xp = match kind {
        Anharmonicity::Quartic => &x2 * &x2,
        Anharmonicity::Sextic => &x2 * &x2 * &x2,
    };
    let h = p2 * 0.5 + &x2 * (0.5 * harmonic) + xp * g;
    let even: Vec<usize> = (0..n).step_by(2).collect();
    let m = even.len();
    let hs = DMatrix::from_fn(m, m, |i, j| h[(even[i], even[j])]);
    let eig = SymmetricEigen::new(hs);
    eig.eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phi::phi_eval;

    fn q(n: i64, d: i64) -> BigValue {
        BigValue::ratio(n, d)
    }

    fn p30() -> Precision {
        Precision::new(30).unwrap()
    }

    #[test]
    fn zero_dim_values() {
        assert_eq!(
            zero_dim_z(&BigValue::zero(), p30()).unwrap(),
            BigValue::one()
        );
        let z1 = zero_dim_z(&BigValue::one(), p30()).unwrap();
        let expect = BigValue::parse("0.91891890592324176403748630154").unwrap();
        assert!((z1 - expect).abs().to_f64() < 1e-27);
    }

    #[test]
    fn zero_dim_matches_phi() {
        let spec = PhiSpec::simple(q(3, 4), q(1, 4)).unwrap();
        for g in [q(1, 1), q(10, 1)] {
            let z = zero_dim_z(&g, p30()).unwrap();
            let arg = BigComplex::real(&g * &q(2, 3));
            let v = phi_eval(&spec, &arg, p30()).unwrap();
            assert!((z - v.re).abs().to_f64() < 1e-20);
        }
    }

    #[test]
    fn euler_heisenberg_weak_and_strong_field() {
        let g = BigValue::parse("0.01").unwrap();
        let l = eh_lagrangian(&g, p30()).unwrap().to_f64();
        let series = -1e-4 / 45.0 + 4e-8 / 315.0 - 8e-12 / 315.0;
        assert!((l - series).abs() < 1e-14);
        // L(g) + log(g)/3 approaches a constant
        let c = |g: i64| {
            eh_lagrangian(&BigValue::from_int(g), p30())
                .unwrap()
                .to_f64()
                + (g as f64).ln() / 3.0
        };
        assert!((c(1000) - c(10000)).abs() < 0.01);
    }

    #[test]
    fn e1_at_one() {
        let v = euler_identity(&BigComplex::real(BigValue::one()), p30()).unwrap();
        let expect = BigValue::parse("0.59634736232319407434107849937").unwrap();
        assert!((v.re - expect).abs().to_f64() < 1e-28);
    }

    #[test]
    fn euler_identity_matches_phi() {
        let prec = p30();
        let zs = [
            BigComplex::real(q(1, 10)),
            BigComplex::real(q(10, 1)),
            BigComplex::new(BigValue::zero(), BigValue::one()),
        ];
        for z in zs {
            let a = euler_identity(&z, prec).unwrap();
            let b = phi_eval(&PhiSpec::borel(), &z, prec).unwrap();
            assert!((&a - &b).abs(128).to_f64() < 1e-20, "{z}");
        }
    }

    #[test]
    fn inverse_of_constant_is_one() {
        let spec = PhiSpec::simple(q(2, 3), q(1, 2)).unwrap();
        let inv = inverse_transform(
            |_: &BigComplex| Ok(BigComplex::real(BigValue::one())),
            &spec,
            Precision::new(20).unwrap(),
        )
        .unwrap();
        let v = inv.eval(&BigComplex::real(q(1, 2))).unwrap();
        assert!((v.value.re.to_f64() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn inverse_of_geometric_is_phi() {
        let prec = Precision::new(20).unwrap();
        let geometric = |u: &BigComplex| {
            let one = BigComplex::real(BigValue::one());
            Ok(&one / &(&one + u))
        };
        for (a, b) in [(q(2, 1), q(1, 1)), (q(3, 2), q(5, 2)), (q(2, 1), q(1, 2))] {
            let spec = PhiSpec::simple(a, b).unwrap();
            let inv = inverse_transform(geometric, &spec, prec).unwrap();
            for z in [q(1, 2), q(2, 1)] {
                let zc = BigComplex::real(z);
                let v = inv.eval(&zc).unwrap().value;
                let phi = phi_eval(&spec, &zc, prec).unwrap();
                assert!((&v - &phi).abs(96).to_f64() < 1e-9, "{spec:?}");
            }
        }
    }

    #[test]
    fn oscillator_small_coupling() {
        assert_eq!(oscillator_energy(4, 0.0).unwrap(), 0.5);
        let g = 1e-3;
        let e = oscillator_energy(4, g).unwrap();
        let pt = 0.5 + 0.75 * g - 21.0 / 8.0 * g * g;
        assert!((e - pt).abs() < 25.0 * g * g * g);
        assert!(oscillator_energy(5, 1.0).is_err());
    }

    #[test]
    fn pure_quartic() {
        let eps = pure_anharmonic_energy(4).unwrap();
        assert!((eps - 0.667986).abs() < 5e-7, "{eps}");
    }

    #[test]
    fn monotone_in_coupling() {
        for power in [4, 6] {
            let mut last = 0.0;
            for i in 0..10 {
                let g = 0.1 * (i + 1) as f64;
                let e = oscillator_energy(power, g).unwrap();
                assert!(e > last);
                last = e;
            }
        }
    }
}
