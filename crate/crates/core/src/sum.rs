//! The Φ-Padé pipeline.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;
use rug::ops::Pow;
use rug::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pade::{pade_n1n, partial_fractions, PartialFraction};
use crate::phi::{large_z_expansion, phi_fk, PhiKernel, PhiSpec};
use crate::precision::Precision;
use crate::scalar::{BigComplex, BigValue, CFloat};
use crate::series::PowerSeries;

/// Map from the coupling `g` to the series variable and back:
/// `F(g) = subtract + g^divide_power * S(w)` with `w = scale * g^power`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct TransformSpec {
    pub subtract: BigValue,
    pub divide_power: u32,
    pub variable_map: VariableMap,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct VariableMap {
    pub scale: BigValue,
    pub power: u32,
}

impl Default for VariableMap {
    fn default() -> Self {
        VariableMap {
            scale: BigValue::one(),
            power: 1,
        }
    }
}

impl Default for TransformSpec {
    fn default() -> Self {
        TransformSpec {
            subtract: BigValue::zero(),
            divide_power: 0,
            variable_map: VariableMap::default(),
        }
    }
}

impl TransformSpec {
    pub fn validate(&self) -> Result<()> {
        if self.variable_map.power == 0 {
            return Err(Error::InvalidInput(
                "variable map power must be at least 1".into(),
            ));
        }
        if self.variable_map.scale.is_zero() {
            return Err(Error::InvalidInput(
                "variable map scale must be nonzero".into(),
            ));
        }
        Ok(())
    }

    pub(crate) fn w_of(&self, g: &CFloat) -> CFloat {
        let bits = g.prec();
        g.powi(self.variable_map.power as i32)
            .scale(&self.variable_map.scale.to_float(bits))
    }

    pub(crate) fn undo(&self, g: &CFloat, inner: &CFloat) -> CFloat {
        let bits = g.prec();
        let c0 = CFloat::from_real(self.subtract.to_float(bits));
        &c0 + &(&g.powi(self.divide_power as i32) * inner)
    }
}

/// A pole inside the angular sector around the positive real axis, where it
/// obstructs the evaluation ray.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummabilityWarning {
    pub index: usize,
    pub pole: BigComplex,
    pub angle: f64,
}

impl fmt::Display for SummabilityWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pole {} at {} lies {:.4} rad from the positive axis",
            self.index, self.pole, self.angle
        )
    }
}

/// Default half-width of the obstructing sector.
pub const DEFAULT_SECTOR: f64 = std::f64::consts::PI / 12.0;

/// `F(g) = subtract + g^p Σ_j (r_j/(-z_j)) Φ_μ^{(1/m)}(-w/z_j)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhiPadeApproximant {
    pub spec: PhiSpec,
    pub pf: PartialFraction,
    pub transform: TransformSpec,
    pub n: usize,
    #[serde(default)]
    pub exact_termination: bool,
    #[serde(default)]
    pub warnings: Vec<SummabilityWarning>,
}

/// One term `coefficient · g^exponent (log g)^log_power` of a large-g expansion.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticTerm {
    pub exponent: BigValue,
    pub log_power: u32,
    pub coefficient: BigComplex,
}

/// Large-g behavior of an approximant, leading term first.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Asymptote {
    pub terms: Vec<AsymptoticTerm>,
}

impl Asymptote {
    pub fn leading(&self) -> Option<&AsymptoticTerm> {
        self.terms.first()
    }

    pub fn term(&self, exponent: &BigValue, log_power: u32) -> Option<&AsymptoticTerm> {
        self.terms
            .iter()
            .find(|t| t.log_power == log_power && &t.exponent == exponent)
    }
}

/// `d_k / f_{μ+mk}`.
pub fn phi_transform(series: &PowerSeries, spec: &PhiSpec) -> Result<PowerSeries> {
    spec.validate()?;
    let coeffs = series
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, d)| {
            let f = phi_fk(spec, k);
            if f.is_zero() {
                return Err(Error::InvalidInput(format!("f_{k} vanishes")));
            }
            Ok(d / &f)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PowerSeries {
        coeffs,
        transform: series.transform.clone(),
        label: series.label.clone(),
    })
}

/// Transform, `[n-1, n]` Padé, roots, partial fractions.
pub fn build(
    series: &PowerSeries,
    spec: &PhiSpec,
    n: usize,
    prec: Precision,
) -> Result<PhiPadeApproximant> {
    series.validate()?;
    let transformed = phi_transform(series, spec)?;
    let pade = pade_n1n(&transformed, n, prec)?;
    let pf = partial_fractions(&pade.numerator, &pade.denominator, prec)?;
    let warnings = check_summability(&pf, DEFAULT_SECTOR);
    Ok(PhiPadeApproximant {
        spec: spec.clone(),
        pf,
        transform: series.transform.clone(),
        n,
        exact_termination: pade.exact_termination,
        warnings,
    })
}

impl PhiPadeApproximant {
    /// Weights `r_j / (-z_j)` of the Φ terms.
    pub fn weights(&self) -> Vec<BigComplex> {
        self.pf
            .poles
            .iter()
            .zip(&self.pf.residues)
            .map(|(z, r)| &(-r) / z)
            .collect()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let a: PhiPadeApproximant = serde_json::from_str(s)?;
        a.spec.validate()?;
        a.transform.validate()?;
        if a.pf.poles.len() != a.pf.residues.len() {
            return Err(Error::InvalidInput(
                "poles and residues differ in length".into(),
            ));
        }
        Ok(a)
    }
}

/// Value of the approximant at coupling `g`.
pub fn evaluate(
    approx: &PhiPadeApproximant,
    g: &BigComplex,
    prec: Precision,
) -> Result<BigComplex> {
    let kernel = PhiKernel::new(&approx.spec.a, &approx.spec.b, prec);
    evaluate_with(approx, &kernel, g, prec)
}

fn evaluate_with(
    approx: &PhiPadeApproximant,
    kernel: &PhiKernel,
    g: &BigComplex,
    prec: Precision,
) -> Result<BigComplex> {
    let bits = prec.bits();
    let spec = &approx.spec;
    let gc = g.to_cfloat(bits);
    let w = approx.transform.w_of(&gc);
    let f_mu = phi_fk(spec, 0);
    let mut inner = CFloat::zero(bits);
    for (j, (z, c)) in approx.pf.poles.iter().zip(approx.weights()).enumerate() {
        let arg = &w / &(-&z.to_cfloat(bits));
        let v = kernel
            .eval_gevrey(spec.m, spec.mu, &f_mu, &arg)
            .map_err(|e| match e {
                Error::BranchCut { detail, .. } => Error::BranchCut {
                    index: Some(j),
                    detail,
                },
                other => other,
            })?;
        inner = &inner + &(&c.to_cfloat(bits) * &v);
    }
    let mut wk = CFloat::one(bits);
    for (k, c) in approx.pf.polynomial.iter().enumerate() {
        let f = phi_fk(spec, k).to_float(bits);
        inner = &inner + &wk.scale(&Float::with_val(bits, c.to_float(bits) * f));
        wk = &wk * &w;
    }
    let mut out = approx.transform.undo(&gc, &inner);
    let real_g = gc.im.is_zero() && gc.re.cmp0() != Some(Ordering::Less);
    if real_g {
        let guard = 10f64.powf(-(prec.digits() as f64) / 2.0);
        let scale = out.re.to_f64().abs().max(1.0);
        if out.im.to_f64().abs() <= guard * scale {
            out.im = Float::new(bits);
        }
    }
    Ok(BigComplex::from_cfloat(out))
}

/// Evaluates on many couplings in parallel; results are in input order.
pub fn evaluate_grid(
    approx: &PhiPadeApproximant,
    gs: &[BigComplex],
    prec: Precision,
) -> Vec<Result<BigComplex>> {
    let kernel = PhiKernel::new(&approx.spec.a, &approx.spec.b, prec);
    gs.par_iter()
        .map(|g| evaluate_with(approx, &kernel, g, prec))
        .collect()
}

/// Series coefficients of the approximant in the series variable:
/// `Σ_j (r_j/(-z_j)) f_{μ+mk} z_j^{-k}`.
pub fn reexpand(approx: &PhiPadeApproximant, count: usize) -> PowerSeries {
    let taylor = approx.pf.taylor_coefficients(count);
    let coeffs = taylor
        .into_iter()
        .enumerate()
        .map(|(k, c)| &c.re * &phi_fk(&approx.spec, k))
        .collect();
    PowerSeries {
        coeffs,
        transform: approx.transform.clone(),
        label: "reexpansion".into(),
    }
}

const MELLIN_TERMS: usize = 8;

/// Large-g expansion of the approximant, built from the large-argument
/// expansion of Φ term by term. Contributions that cancel between poles or
/// between the rotated arguments of a Gevrey average are dropped.
pub fn asymptote(approx: &PhiPadeApproximant, prec: Precision) -> Result<Asymptote> {
    let bits = prec.bits();
    let spec = &approx.spec;
    let t = &approx.transform;
    let alpha = &t.variable_map.scale;
    if alpha.signum() != Ordering::Greater {
        return Err(Error::InvalidInput(
            "asymptote needs a positive variable scale".into(),
        ));
    }
    let (m, mu) = (spec.m as i64, spec.mu as i64);
    let q = BigValue::from_int(t.variable_map.power as i64);
    let p = BigValue::from_int(t.divide_power as i64);
    let mb = BigValue::from_int(m);
    let mub = BigValue::from_int(mu);
    let alpha_f = alpha.to_float(bits);
    let ln_alpha = Float::with_val(bits, alpha_f.ln_ref());
    let inv_m = Float::with_val(bits, 1) / Float::with_val(bits, m);
    let terms = large_z_expansion(&spec.a, &spec.b, MELLIN_TERMS, bits);

    let mut groups: Vec<Group> = Vec::new();
    let mut add = |exponent: BigValue, log_power: u32, v: CFloat| {
        let mag = v.abs();
        match groups
            .iter_mut()
            .find(|g| g.log_power == log_power && close(&g.exponent, &exponent, prec))
        {
            Some(g) => {
                g.sum = &g.sum + &v;
                g.magnitude += mag;
            }
            None => groups.push(Group {
                exponent,
                log_power,
                sum: v,
                magnitude: mag,
            }),
        }
    };

    for (z, c) in approx.pf.poles.iter().zip(approx.weights()) {
        let u = z.to_cfloat(bits).recip();
        let u = -&u;
        let u_root = u.pow_real(&inv_m);
        let c = c.to_cfloat(bits);
        for i in 1..=m {
            // argument of Φ is κ X with X = (α g^q)^{1/m} > 0
            let rho = -&(&CFloat::unit(2 * i, m, bits) * &CFloat::unit(1, m, bits));
            let kappa = &rho * &u_root;
            let ln_kappa = kappa.ln();
            let pref = &(&CFloat::unit(-2 * mu * i, m, bits) * &CFloat::unit(-mu, m, bits))
                * &u_root.powi(-(mu as i32));
            let pref = (&c * &pref).scale(&inv_m);
            for term in &terms {
                let e_alpha = &(&term.s + &mub) / &mb;
                let alpha_pow = Float::with_val(bits, &alpha_f).pow(&(-&e_alpha).to_float(bits));
                let k = (&pref * &kappa.pow_real(&(-&term.s).to_float(bits)))
                    .scale(&term.coefficient.to_float(bits))
                    .scale(&alpha_pow);
                let exponent = &p - &(&q * &e_alpha);
                if term.log_power == 0 {
                    add(exponent, 0, k);
                } else {
                    let qm = Float::with_val(bits, q.to_float(bits) * &inv_m);
                    add(exponent.clone(), 1, k.scale(&qm));
                    let shift =
                        &ln_kappa + &CFloat::from_real(Float::with_val(bits, &ln_alpha * &inv_m));
                    add(exponent, 0, &k * &shift);
                }
            }
        }
    }
    if !t.subtract.is_zero() {
        add(
            BigValue::zero(),
            0,
            CFloat::from_real(t.subtract.to_float(bits)),
        );
    }
    for (k, c) in approx.pf.polynomial.iter().enumerate() {
        let v = &(c * &phi_fk(spec, k)) * &alpha.powi(k as i32);
        let e = &p + &(&q * &BigValue::from_int(k as i64));
        add(e, 0, CFloat::from_real(v.to_float(bits)));
    }

    let guard = Float::with_val(bits, 10).pow(-(prec.digits() as i32) / 2);
    let mut out: Vec<AsymptoticTerm> = groups
        .into_iter()
        .filter(|g| g.sum.abs() > Float::with_val(bits, &guard * &g.magnitude))
        .map(|g| {
            let mut v = g.sum;
            if Float::with_val(bits, v.im.abs_ref())
                <= Float::with_val(bits, v.re.abs_ref()) * &guard
            {
                v.im = Float::new(bits);
            }
            AsymptoticTerm {
                exponent: g.exponent,
                log_power: g.log_power,
                coefficient: BigComplex::from_cfloat(v),
            }
        })
        .collect();
    out.sort_by(|x, y| {
        y.exponent
            .partial_cmp(&x.exponent)
            .unwrap_or(Ordering::Equal)
            .then(y.log_power.cmp(&x.log_power))
    });
    Ok(Asymptote { terms: out })
}

struct Group {
    exponent: BigValue,
    log_power: u32,
    sum: CFloat,
    magnitude: Float,
}

fn close(x: &BigValue, y: &BigValue, prec: Precision) -> bool {
    if x.is_exact() && y.is_exact() {
        return x == y;
    }
    (x - y).abs().to_f64() < 10f64.powf(-(prec.digits() as f64) / 2.0)
}

/// Options for [`fit_b`].
#[derive(Clone, Debug)]
pub struct FitOptions {
    pub lo: f64,
    pub hi: f64,
    pub tolerance: f64,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions {
            lo: 0.8,
            hi: 1.2,
            tolerance: 1e-10,
        }
    }
}

/// Leading large-g coefficient of the approximant built with `(a, b)`.
pub fn leading_coefficient(
    series: &PowerSeries,
    a: &BigValue,
    b: &BigValue,
    n: usize,
    prec: Precision,
) -> Result<f64> {
    let spec = PhiSpec::simple(a.clone(), b.clone())?;
    let approx = build(series, &spec, n, prec)?;
    let asy = asymptote(&approx, prec)?;
    let lead = asy
        .leading()
        .ok_or_else(|| Error::InvalidInput("approximant has no large-g terms".into()))?;
    Ok(lead.coefficient.re.to_f64())
}

/// Finds `b` such that the leading large-g coefficient of the `(a, b)`
/// approximant equals `target`, by bisection on `[opts.lo, opts.hi]`.
pub fn fit_b(
    series: &PowerSeries,
    a: &BigValue,
    n: usize,
    target: &BigValue,
    opts: &FitOptions,
    prec: Precision,
) -> Result<f64> {
    let bits = prec.bits();
    let target = target.to_f64();
    let f = |b: f64| -> Result<f64> {
        let b = BigValue::Float(Float::with_val(bits, b));
        Ok(leading_coefficient(series, a, &b, n, prec)? - target)
    };
    let (mut lo, mut hi) = (opts.lo, opts.hi);
    let (mut flo, fhi) = (f(lo)?, f(hi)?);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::FitBracket { lo, hi });
    }
    while hi - lo > opts.tolerance {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Parameters whose `f_k` grow like `k! k^p`: `a + b = p + 2` with `a = b`.
pub fn match_growth(p: &BigValue) -> Result<(BigValue, BigValue)> {
    let two = BigValue::from_int(2);
    if p.partial_cmp(&-&two) != Some(Ordering::Greater) {
        return Err(Error::InvalidInput(format!(
            "growth exponent {p} must exceed -2"
        )));
    }
    let a = &(p + &two) / &two;
    Ok((a.clone(), a))
}

/// Bisection root of the real-valued approximant on `[lo, hi]`, to width 1e-7.
pub fn find_root(
    approx: &PhiPadeApproximant,
    lo: f64,
    hi: f64,
    prec: Precision,
) -> Result<BigValue> {
    let bits = prec.bits();
    let kernel = PhiKernel::new(&approx.spec.a, &approx.spec.b, prec);
    let f = |g: &Float| -> Result<Float> {
        let v = evaluate_with(
            approx,
            &kernel,
            &BigComplex::real(BigValue::Float(g.clone())),
            prec,
        )?;
        Ok(v.re.to_float(bits))
    };
    let mut a = Float::with_val(bits, lo);
    let mut b = Float::with_val(bits, hi);
    let fa = f(&a)?;
    let fb = f(&b)?;
    if fa.is_zero() {
        return Ok(BigValue::Float(a));
    }
    if fb.is_zero() {
        return Ok(BigValue::Float(b));
    }
    if fa.cmp0() == fb.cmp0() {
        return Err(Error::RootBracket { lo, hi });
    }
    let sa = fa.cmp0();
    while Float::with_val(bits, &b - &a) > 1e-7 {
        let mid = Float::with_val(bits, &a + &b) / 2u32;
        let fm = f(&mid)?;
        if fm.is_zero() {
            return Ok(BigValue::Float(mid));
        }
        if fm.cmp0() == sa {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(BigValue::Float(Float::with_val(bits, &a + &b) / 2u32))
}

/// Poles within `sector` radians of the positive real axis.
pub fn check_summability(pf: &PartialFraction, sector: f64) -> Vec<SummabilityWarning> {
    pf.poles
        .iter()
        .enumerate()
        .filter_map(|(index, z)| {
            let angle = z.arg(64).to_f64().abs();
            (angle < sector).then(|| SummabilityWarning {
                index,
                pole: z.clone(),
                angle,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{euler_heisenberg_series, quartic_rspt_series, zero_dim_partition_series};

    fn q(n: i64, d: i64) -> BigValue {
        BigValue::ratio(n, d)
    }

    fn p30() -> Precision {
        Precision::new(30).unwrap()
    }

    fn quartic() -> PowerSeries {
        quartic_rspt_series(3).unwrap().once_subtracted().unwrap()
    }

    #[test]
    fn transform_divides_by_fk() {
        let s = phi_transform(&quartic(), &PhiSpec::simple(q(2, 3), q(1, 1)).unwrap()).unwrap();
        assert_eq!(s.coeffs, vec![q(3, 4), q(-63, 16)]);
        let b = phi_transform(&quartic_rspt_series(4).unwrap(), &PhiSpec::borel()).unwrap();
        assert_eq!(b.coeffs, vec![q(1, 2), q(3, 4), q(-21, 16), q(333, 96)]);
        let zero = PowerSeries::from_rationals(vec![rug::Rational::new(); 3], "0");
        let z = phi_transform(&zero, &PhiSpec::borel()).unwrap();
        assert!(z.coeffs.iter().all(BigValue::is_zero));
    }

    #[test]
    fn quartic_first_order() {
        let spec = PhiSpec::simple(q(2, 3), q(1, 1)).unwrap();
        let a = build(&quartic(), &spec, 1, p30()).unwrap();
        assert_eq!(a.pf.poles, vec![BigComplex::real(q(-4, 21))]);
        assert_eq!(a.pf.residues, vec![BigComplex::real(q(1, 7))]);
        assert!(a.warnings.is_empty());
        assert_eq!(reexpand(&a, 2).coeffs, vec![q(3, 4), q(-21, 8)]);
        let v = evaluate(&a, &BigComplex::zero(), p30()).unwrap();
        assert_eq!(v.re.to_f64(), 0.5);
    }

    #[test]
    fn quartic_asymptote() {
        let spec = PhiSpec::simple(q(2, 3), q(1, 1)).unwrap();
        let a = build(&quartic(), &spec, 1, p30()).unwrap();
        let asy = asymptote(&a, p30()).unwrap();
        let lead = asy.leading().unwrap();
        assert_eq!(lead.exponent, q(1, 3));
        assert_eq!(lead.log_power, 0);
        assert!((lead.coefficient.re.to_f64() - 0.665_147_266_189_799_6).abs() < 1e-15);
        let g: f64 = 1.0e6;
        let v = evaluate(&a, &BigComplex::real(BigValue::from_int(1_000_000)), p30()).unwrap();
        let approx: f64 = asy
            .terms
            .iter()
            .map(|t| t.coefficient.re.to_f64() * g.powf(t.exponent.to_f64()))
            .sum();
        // next omitted term is O(g^{-1/3})
        assert!((v.re.to_f64() - approx).abs() < 0.1 * g.powf(-1.0 / 3.0));
    }

    #[test]
    fn zero_dim_is_exact() {
        let spec = PhiSpec::simple(q(3, 4), q(1, 4)).unwrap();
        let a = build(&zero_dim_partition_series(2).unwrap(), &spec, 1, p30()).unwrap();
        assert_eq!(a.pf.poles, vec![BigComplex::real(q(-3, 2))]);
        assert_eq!(a.pf.residues, vec![BigComplex::real(q(3, 2))]);
        let a2 = build(&zero_dim_partition_series(6).unwrap(), &spec, 3, p30()).unwrap();
        assert!(a2.exact_termination);
        assert_eq!(a2.pf.poles, a.pf.poles);
    }

    #[test]
    fn euler_heisenberg_first_order() {
        let spec = PhiSpec::new(q(2, 1), q(1, 1), 2, 0).unwrap();
        let a = build(&euler_heisenberg_series(2).unwrap(), &spec, 1, p30()).unwrap();
        assert_eq!(a.pf.poles, vec![BigComplex::real(q(-21, 2))]);
        let re = reexpand(&a, 2);
        let g = re.g_coefficients(4);
        assert_eq!(g[2], q(-1, 45));
        assert_eq!(g[4], q(4, 315));
        let asy = asymptote(&a, p30()).unwrap();
        let lead = asy.leading().unwrap();
        assert!(lead.exponent.is_zero());
        assert_eq!(lead.log_power, 1);
        assert!((lead.coefficient.re.to_f64() + 7.0 / 30.0).abs() < 1e-25);
        assert!(lead.coefficient.im.is_zero());
    }

    #[test]
    fn synthetic_two_terms_reproduced() {
        let s = PowerSeries::from_rationals(
            vec![rug::Rational::from((5, 3)), rug::Rational::from((-7, 2))],
            "synthetic",
        );
        for spec in [
            PhiSpec::borel(),
            PhiSpec::new(q(3, 2), q(1, 2), 2, 1).unwrap(),
        ] {
            let a = build(&s, &spec, 1, p30()).unwrap();
            assert_eq!(reexpand(&a, 2).coeffs, s.coeffs);
        }
    }

    #[test]
    fn growth_matching() {
        assert_eq!(match_growth(&q(7, 2)).unwrap(), (q(11, 4), q(11, 4)));
        assert_eq!(match_growth(&q(0, 1)).unwrap(), (q(1, 1), q(1, 1)));
        let (a, b) = match_growth(&q(1, 1)).unwrap();
        assert_eq!((a.clone(), b.clone()), (q(3, 2), q(3, 2)));
        // f_k / (k! k^{a+b-2}) -> 1/(Γ(a)Γ(b))
        let spec = PhiSpec::simple(a.clone(), b.clone()).unwrap();
        let k = 50;
        let fk = phi_fk(&spec, k).to_f64();
        let fact = crate::special::gamma(&BigValue::from_int(k as i64 + 1), 64).to_f64();
        let ratio = fk / (fact * k as f64);
        let expect =
            1.0 / (crate::special::gamma(&a, 64).to_f64() * crate::special::gamma(&b, 64).to_f64());
        assert!((ratio / expect - 1.0).abs() < 0.02);
        assert!(match_growth(&q(-2, 1)).is_err());
    }

    #[test]
    fn synthetic_root() {
        // 1 - g as a series; Borel [0,1] of (1, -1) gives Φ-weights reproducing 1 - g exactly
        let s = PowerSeries::from_rationals(
            vec![
                rug::Rational::from(1),
                rug::Rational::from(-1),
                rug::Rational::new(),
                rug::Rational::new(),
            ],
            "1-g",
        );
        let a = build(&s, &PhiSpec::borel(), 2, p30()).unwrap();
        assert!(a.exact_termination);
        let r = find_root(&a, 0.5, 2.0, p30()).unwrap();
        assert!((r.to_f64() - 1.0).abs() < 1e-6);
        assert!(matches!(
            find_root(&a, 2.0, 3.0, p30()),
            Err(Error::RootBracket { .. })
        ));
    }

    #[test]
    fn summability_sector() {
        assert!(check_summability(&PartialFraction::empty(), DEFAULT_SECTOR).is_empty());
        let pf = PartialFraction {
            poles: vec![BigComplex::real(q(3, 1)), BigComplex::real(q(-3, 1))],
            residues: vec![BigComplex::real(q(1, 1)); 2],
            n: 2,
            polynomial: vec![],
        };
        let w = check_summability(&pf, DEFAULT_SECTOR);
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].index, 0);
    }

    #[test]
    fn fit_b_fixed_point() {
        let target = BigValue::parse("0.66514726618979957").unwrap();
        let b = fit_b(
            &quartic(),
            &q(2, 3),
            1,
            &target,
            &FitOptions::default(),
            p30(),
        )
        .unwrap();
        assert!((b - 1.0).abs() < 1e-8, "{b}");
        let opts = FitOptions {
            lo: 1.1,
            hi: 1.2,
            ..FitOptions::default()
        };
        assert!(matches!(
            fit_b(&quartic(), &q(2, 3), 1, &target, &opts, p30()),
            Err(Error::FitBracket { .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let spec = PhiSpec::simple(q(2, 3), q(1, 1)).unwrap();
        let a = build(&quartic(), &spec, 1, p30()).unwrap();
        let back = PhiPadeApproximant::from_json(&a.to_json().unwrap()).unwrap();
        assert_eq!(back, a);
    }
}
