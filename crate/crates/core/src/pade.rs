//! Diagonal-minus-one Padé approximants and their partial fractions.

use std::cmp::Ordering;

use rug::ops::Pow;
use rug::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::precision::Precision;
use crate::scalar::{BigComplex, BigValue, CFloat};
use crate::series::PowerSeries;

/// Polynomial with ascending coefficients; trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Polynomial {
    pub coeffs: Vec<BigValue>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigValue>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(BigValue::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigValue::zero());
        }
        Polynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_exact(&self) -> bool {
        self.coeffs.iter().all(BigValue::is_exact)
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() == 1 {
            return Polynomial::new(vec![BigValue::zero()]);
        }
        Polynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * &BigValue::from_int(i as i64 + 1))
                .collect(),
        )
    }

    pub fn eval(&self, z: &BigComplex) -> BigComplex {
        let mut acc = BigComplex::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + &BigComplex::real(c.clone());
        }
        acc
    }

    pub(crate) fn eval_cfloat(&self, z: &CFloat) -> CFloat {
        let bits = z.prec();
        let mut acc = CFloat::zero(bits);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + &CFloat::from_real(c.to_float(bits));
        }
        acc
    }

    /// Quotient and remainder of `self / d`.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = d.degree();
        if self.degree() < dd || self.is_zero() {
            return (Polynomial::new(vec![BigValue::zero()]), self.clone());
        }
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigValue::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lead;
            for (i, di) in d.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&c * di);
            }
            quot[k] = c;
        }
        rem.truncate(dd.max(1));
        (Polynomial::new(quot), Polynomial::new(rem))
    }
}

/// `P / Q` with `Q(0) = 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PadeApproximant {
    pub numerator: Polynomial,
    pub denominator: Polynomial,
    /// Requested order.
    pub order: usize,
    /// The input is reproduced by a lower-order rational function.
    pub exact_termination: bool,
}

impl PadeApproximant {
    /// First `count` Taylor coefficients of `P / Q`.
    pub fn taylor_coefficients(&self, count: usize) -> Vec<BigValue> {
        let q = &self.denominator.coeffs;
        let mut out: Vec<BigValue> = Vec::with_capacity(count);
        for k in 0..count {
            let mut s = self
                .numerator
                .coeffs
                .get(k)
                .cloned()
                .unwrap_or_else(BigValue::zero);
            for i in 1..q.len().min(k + 1) {
                s = &s - &(&q[i] * &out[k - i]);
            }
            out.push(s);
        }
        out
    }
}

/// The `[n-1, n]` Padé approximant of `series` (coefficients taken as given,
/// no transform applied).
///
/// A denominator of degree below `n` is flagged as exact termination. A
/// singular linear system falls back to the highest lower order whose
/// approximant reproduces all `2n` coefficients, flagged as exact termination.
pub fn pade_n1n(series: &PowerSeries, n: usize, prec: Precision) -> Result<PadeApproximant> {
    if n == 0 {
        return Err(Error::InvalidInput("Padé order must be at least 1".into()));
    }
    if series.len() < 2 * n {
        return Err(Error::InvalidInput(format!(
            "order {n} needs {} coefficients, series has {}",
            2 * n,
            series.len()
        )));
    }
    let c = &series.coeffs[..2 * n];
    if let Some(mut p) = solve_order(c, n, prec)? {
        p.exact_termination = p.denominator.degree() < n;
        return Ok(p);
    }
    for m in (0..n).rev() {
        let candidate = match m {
            0 => Some(PadeApproximant {
                numerator: Polynomial::new(vec![BigValue::zero()]),
                denominator: Polynomial::new(vec![BigValue::one()]),
                order: 0,
                exact_termination: true,
            }),
            _ => solve_order(&c[..2 * m], m, prec)?,
        };
        if let Some(mut p) = candidate {
            if reproduces(&p, c, prec) {
                p.order = n;
                p.exact_termination = true;
                return Ok(p);
            }
        }
    }
    Err(Error::DegeneratePade { order: n })
}

fn reproduces(p: &PadeApproximant, c: &[BigValue], prec: Precision) -> bool {
    let t = p.taylor_coefficients(c.len());
    let tol = prec.tolerance_f64();
    let scale = c.iter().map(|x| x.to_f64().abs()).fold(1.0, f64::max);
    t.iter().zip(c).all(|(a, b)| {
        let d = a - b;
        if d.is_exact() {
            d.is_zero()
        } else {
            d.to_f64().abs() <= tol * scale
        }
    })
}

/// Solves the Toeplitz system at order `n`; `None` when it is singular.
fn solve_order(c: &[BigValue], n: usize, prec: Precision) -> Result<Option<PadeApproximant>> {
    let get = |k: isize| -> BigValue {
        if k < 0 {
            BigValue::zero()
        } else {
            c[k as usize].clone()
        }
    };
    // Σ_{i=1..n} q_i c_{k-i} = -c_k for k = n..2n-1
    let mut a = vec![vec![BigValue::zero(); n]; n];
    let mut rhs = vec![BigValue::zero(); n];
    for r in 0..n {
        let k = (n + r) as isize;
        for i in 1..=n {
            a[r][i - 1] = get(k - i as isize);
        }
        rhs[r] = -get(k);
    }
    let exact = c.iter().all(BigValue::is_exact);
    let q = if exact {
        solve_exact(a, rhs)
    } else {
        solve_full_pivot(a, rhs, prec)
    };
    let Some(q) = q else { return Ok(None) };
    let mut qc = vec![BigValue::one()];
    qc.extend(q);
    let mut pc = Vec::with_capacity(n);
    for j in 0..n {
        let mut s = BigValue::zero();
        for i in 0..=j {
            s = &s + &(&qc[i] * &c[j - i]);
        }
        pc.push(s);
    }
    Ok(Some(PadeApproximant {
        numerator: Polynomial::new(pc),
        denominator: Polynomial::new(qc),
        order: n,
        exact_termination: false,
    }))
}

fn solve_exact(mut a: Vec<Vec<BigValue>>, mut b: Vec<BigValue>) -> Option<Vec<BigValue>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &a[col][col];
            for k in col..n {
                a[r][k] = &a[r][k] - &(&f * &a[col][k]);
            }
            b[r] = &b[r] - &(&f * &b[col]);
        }
    }
    Some(back_substitute(&a, &b))
}

fn back_substitute(a: &[Vec<BigValue>], b: &[BigValue]) -> Vec<BigValue> {
    let n = b.len();
    let mut x = vec![BigValue::zero(); n];
    for r in (0..n).rev() {
        let mut s = b[r].clone();
        for k in r + 1..n {
            s = &s - &(&a[r][k] * &x[k]);
        }
        x[r] = &s / &a[r][r];
    }
    x
}

fn solve_full_pivot(
    a: Vec<Vec<BigValue>>,
    b: Vec<BigValue>,
    prec: Precision,
) -> Option<Vec<BigValue>> {
    let n = b.len();
    let bits = prec.bits();
    let mut a: Vec<Vec<Float>> = a
        .iter()
        .map(|row| row.iter().map(|v| v.to_float(bits)).collect())
        .collect();
    let mut b: Vec<Float> = b.iter().map(|v| v.to_float(bits)).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let scale = a
        .iter()
        .flatten()
        .map(|v| Float::with_val(bits, v.abs_ref()))
        .fold(Float::new(bits), |m, v| if v > m { v } else { m });
    if scale.is_zero() {
        return None;
    }
    let tiny = Float::with_val(bits, &scale * prec.tolerance());
    for col in 0..n {
        let (mut pr, mut pc) = (col, col);
        let mut best = Float::new(bits);
        for r in col..n {
            for k in col..n {
                let v = Float::with_val(bits, a[r][k].abs_ref());
                if v > best {
                    best = v;
                    pr = r;
                    pc = k;
                }
            }
        }
        if best <= tiny {
            return None;
        }
        a.swap(col, pr);
        b.swap(col, pr);
        for row in a.iter_mut() {
            row.swap(col, pc);
        }
        perm.swap(col, pc);
        for r in col + 1..n {
            let f = Float::with_val(bits, &a[r][col] / &a[col][col]);
            for k in col..n {
                let t = Float::with_val(bits, &f * &a[col][k]);
                a[r][k] -= t;
            }
            let t = Float::with_val(bits, &f * &b[col]);
            b[r] -= t;
        }
    }
    let a: Vec<Vec<BigValue>> = a
        .into_iter()
        .map(|row| row.into_iter().map(BigValue::Float).collect())
        .collect();
    let b: Vec<BigValue> = b.into_iter().map(BigValue::Float).collect();
    let y = back_substitute(&a, &b);
    let mut x = vec![BigValue::zero(); n];
    for (i, v) in y.into_iter().enumerate() {
        x[perm[i]] = v;
    }
    Some(x)
}

const MAX_ITERATIONS: usize = 1000;

/// All complex roots of `q`, sorted by modulus.
///
/// Degree one is solved exactly. Higher degrees use Aberth-Ehrlich iteration
/// at working precision; for real coefficients, nearly real roots are snapped
/// onto the axis and complex roots are paired as exact conjugates.
pub fn poly_roots(q: &Polynomial, prec: Precision) -> Result<Vec<BigComplex>> {
    let deg = q.degree();
    if deg == 0 {
        return Err(Error::InvalidInput(
            "constant polynomial has no roots".into(),
        ));
    }
    if deg == 1 {
        let z = -(&q.coeffs[0] / &q.coeffs[1]);
        return Ok(vec![BigComplex::real(z)]);
    }
    let bits = prec.bits() + 32;
    let coeffs: Vec<Float> = q.coeffs.iter().map(|c| c.to_float(bits)).collect();
    let poly = |z: &CFloat| -> (CFloat, CFloat) {
        let mut p = CFloat::zero(bits);
        let mut dp = CFloat::zero(bits);
        for c in coeffs.iter().rev() {
            dp = &(&dp * z) + &p;
            p = &(&p * z) + &CFloat::from_real(c.clone());
        }
        (p, dp)
    };
    let abs_poly = |r: &Float| -> Float {
        let mut acc = Float::new(bits);
        for c in coeffs.iter().rev() {
            acc = acc * r + Float::with_val(bits, c.abs_ref());
        }
        acc
    };

    // Fujiwara bound on the root moduli.
    let lead = Float::with_val(bits, coeffs[deg].abs_ref());
    let mut radius = Float::new(bits);
    for (k, c) in coeffs[..deg].iter().enumerate() {
        let ratio = Float::with_val(bits, c.abs_ref()) / &lead;
        let root = ratio.root((deg - k) as u32);
        if root > radius {
            radius = root;
        }
    }
    radius *= 2;
    if radius.is_zero() {
        radius = Float::with_val(bits, 1);
    }
    let radius = radius / 2u32;
    let mut z: Vec<CFloat> = (0..deg)
        .map(|k| {
            let angle = CFloat::unit(4 * k as i64 + 1, 2 * deg as i64, bits);
            angle.scale(&radius)
        })
        .collect();

    let tol = Float::with_val(bits, prec.tolerance());
    let step_tol = Float::with_val(bits, Float::with_val(bits, 10).pow(-(prec.digits() as i32)));
    let mut converged = vec![false; deg];
    for _ in 0..MAX_ITERATIONS {
        for i in 0..deg {
            if converged[i] {
                continue;
            }
            let (p, dp) = poly(&z[i]);
            if p.is_zero() {
                converged[i] = true;
                continue;
            }
            let ratio = &p / &dp;
            let mut s = CFloat::zero(bits);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    s = &s + &(&z[i] - zj).recip();
                }
            }
            let denom = &CFloat::one(bits) - &(&ratio * &s);
            let w = &ratio / &denom;
            z[i] = &z[i] - &w;
            let mag = z[i].abs().max(&Float::with_val(bits, 1));
            if w.abs() <= Float::with_val(bits, &step_tol * &mag) {
                converged[i] = true;
            }
        }
        if converged.iter().all(|&c| c) {
            break;
        }
    }

    let residuals: Vec<Float> = z
        .iter()
        .map(|zi| {
            let (p, _) = poly(zi);
            p.abs() / abs_poly(&zi.abs()).max(&Float::with_val(bits, 1))
        })
        .collect();
    if residuals.iter().any(|r| r.is_nan() || *r > tol) {
        return Err(Error::RootFindingFailure {
            iterations: MAX_ITERATIONS,
            residuals: residuals.iter().map(Float::to_f64).collect(),
        });
    }

    let out_bits = prec.bits();
    let mut roots: Vec<CFloat> = z
        .into_iter()
        .map(|zi| {
            CFloat::new(
                Float::with_val(out_bits, &zi.re),
                Float::with_val(out_bits, &zi.im),
            )
        })
        .collect();
    pair_conjugates(&mut roots, &tol);
    roots.sort_by(|a, b| {
        let ma = a.abs();
        let mb = b.abs();
        ma.partial_cmp(&mb)
            .unwrap_or(Ordering::Equal)
            .then(a.re.partial_cmp(&b.re).unwrap_or(Ordering::Equal))
            .then(a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal))
    });
    Ok(roots.into_iter().map(BigComplex::from_cfloat).collect())
}

fn pair_conjugates(roots: &mut [CFloat], tol: &Float) {
    let n = roots.len();
    let bits = roots[0].prec();
    let snap = Float::with_val(bits, tol.sqrt_ref());
    let mut done = vec![false; n];
    for i in 0..n {
        if done[i] {
            continue;
        }
        let mag = roots[i].abs().max(&Float::with_val(bits, 1));
        let thresh = Float::with_val(bits, &snap * &mag);
        let im = Float::with_val(bits, roots[i].im.abs_ref());
        // The partner of a complex root is the closest remaining root to its conjugate.
        let conj = roots[i].conj();
        let partner = (0..n)
            .filter(|&j| j != i && !done[j])
            .map(|j| (j, (&roots[j] - &conj).abs()))
            .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(Ordering::Equal));
        match partner {
            Some((j, d)) if im > thresh && d <= thresh => {
                let re = Float::with_val(bits, &roots[i].re + &roots[j].re) / 2u32;
                let im = Float::with_val(bits, &roots[i].im - &roots[j].im) / 2u32;
                let im = im.abs();
                roots[i] = CFloat::new(re.clone(), im.clone());
                roots[j] = CFloat::new(re, -im);
                done[i] = true;
                done[j] = true;
            }
            _ => {
                if im <= thresh {
                    roots[i].im = Float::new(bits);
                }
                done[i] = true;
            }
        }
    }
}

/// Poles and residues of a rational function: `Σ_j r_j / (z - z_j)` plus an
/// optional polynomial part (nonempty only after exact termination).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartialFraction {
    pub poles: Vec<BigComplex>,
    pub residues: Vec<BigComplex>,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub polynomial: Vec<BigValue>,
}

impl PartialFraction {
    pub fn empty() -> Self {
        PartialFraction {
            poles: Vec::new(),
            residues: Vec::new(),
            n: 0,
            polynomial: Vec::new(),
        }
    }

    pub fn eval(&self, z: &BigComplex, bits: u32) -> BigComplex {
        let zc = z.to_cfloat(bits);
        let mut acc = CFloat::zero(bits);
        for (p, r) in self.poles.iter().zip(&self.residues) {
            let d = &zc - &p.to_cfloat(bits);
            acc = &acc + &(&r.to_cfloat(bits) / &d);
        }
        let poly = Polynomial::new(if self.polynomial.is_empty() {
            vec![BigValue::zero()]
        } else {
            self.polynomial.clone()
        });
        acc = &acc + &poly.eval_cfloat(&zc);
        BigComplex::from_cfloat(acc)
    }

    /// Taylor coefficients at the origin: `-Σ_j r_j z_j^{-k-1}` plus the
    /// polynomial part.
    pub fn taylor_coefficients(&self, count: usize) -> Vec<BigComplex> {
        (0..count)
            .map(|k| {
                let mut s = self
                    .polynomial
                    .get(k)
                    .map(|c| BigComplex::real(c.clone()))
                    .unwrap_or_else(BigComplex::zero);
                for (p, r) in self.poles.iter().zip(&self.residues) {
                    s = &s - &(r * &p.powi(-(k as i32) - 1));
                }
                s
            })
            .collect()
    }
}

/// Decomposes `p / q`. Roots of `q` closer than `10^{-d/2} max(1, |z|)` are
/// rejected as a multiple pole.
pub fn partial_fractions(
    p: &Polynomial,
    q: &Polynomial,
    prec: Precision,
) -> Result<PartialFraction> {
    let (quot, rem) = p.div_rem(q);
    let polynomial = if quot.is_zero() {
        Vec::new()
    } else {
        quot.coeffs
    };
    if q.degree() == 0 {
        return Ok(PartialFraction {
            poles: Vec::new(),
            residues: Vec::new(),
            n: 0,
            polynomial,
        });
    }
    let poles = poly_roots(q, prec)?;
    let bits = prec.bits();
    let sep = 10f64.powf(-(prec.digits() as f64) / 2.0);
    for i in 0..poles.len() {
        for j in i + 1..poles.len() {
            let zi = poles[i].to_cfloat(bits);
            let d = (&zi - &poles[j].to_cfloat(bits)).abs().to_f64();
            if d < sep * zi.abs().to_f64().max(1.0) {
                return Err(Error::MultiplePole {
                    first: i,
                    second: j,
                    separation: d,
                });
            }
        }
    }
    let dq = q.derivative();
    let mut residues: Vec<BigComplex> = poles.iter().map(|z| &rem.eval(z) / &dq.eval(z)).collect();
    // Conjugate poles carry conjugate residues.
    for i in 0..poles.len() {
        if poles[i].is_real() {
            residues[i].im = BigValue::zero();
            continue;
        }
        if poles[i].im.signum() == Ordering::Greater {
            if let Some(j) = (0..poles.len()).find(|&j| poles[j] == poles[i].conj()) {
                residues[j] = residues[i].conj();
            }
        }
    }
    Ok(PartialFraction {
        n: poles.len(),
        poles,
        residues,
        polynomial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sum::TransformSpec;

    fn q(n: i64, d: i64) -> BigValue {
        BigValue::ratio(n, d)
    }

    fn series(c: Vec<BigValue>) -> PowerSeries {
        PowerSeries::new(c, TransformSpec::default(), "t").unwrap()
    }

    fn prec() -> Precision {
        Precision::default()
    }

    #[test]
    fn quartic_first_order() {
        let p = pade_n1n(&series(vec![q(3, 4), q(-63, 16)]), 1, prec()).unwrap();
        assert_eq!(p.numerator.coeffs, vec![q(3, 4)]);
        assert_eq!(p.denominator.coeffs, vec![q(1, 1), q(21, 4)]);
        let roots = poly_roots(&p.denominator, prec()).unwrap();
        assert_eq!(roots, vec![BigComplex::real(q(-4, 21))]);
        let pf = partial_fractions(&p.numerator, &p.denominator, prec()).unwrap();
        assert_eq!(pf.poles, vec![BigComplex::real(q(-4, 21))]);
        assert_eq!(pf.residues, vec![BigComplex::real(q(1, 7))]);
    }

    #[test]
    fn geometric_series() {
        let p = pade_n1n(&series(vec![q(1, 1); 2]), 1, prec()).unwrap();
        assert_eq!(p.numerator.coeffs, vec![q(1, 1)]);
        assert_eq!(p.denominator.coeffs, vec![q(1, 1), q(-1, 1)]);
    }

    #[test]
    fn constant_series_terminates() {
        let c = vec![q(5, 2), q(0, 1), q(0, 1), q(0, 1)];
        let p = pade_n1n(&series(c.clone()), 1, prec()).unwrap();
        assert_eq!(p.denominator.coeffs, vec![q(1, 1)]);
        let p2 = pade_n1n(&series(c), 2, prec()).unwrap();
        assert!(p2.exact_termination);
        let pf = partial_fractions(&p2.numerator, &p2.denominator, prec()).unwrap();
        assert!(pf.poles.is_empty());
        assert_eq!(pf.polynomial, vec![q(5, 2)]);
    }

    #[test]
    fn zero_dim_higher_order_terminates() {
        let c: Vec<BigValue> = (0..6).map(|k| q(-2, 3).powi(k)).collect();
        let p = pade_n1n(&series(c), 3, prec()).unwrap();
        assert!(p.exact_termination);
        let pf = partial_fractions(&p.numerator, &p.denominator, prec()).unwrap();
        assert_eq!(pf.poles, vec![BigComplex::real(q(-3, 2))]);
        assert_eq!(pf.residues, vec![BigComplex::real(q(3, 2))]);
    }

    #[test]
    fn degenerate_system_reports_order() {
        // [0,1] needs c0 != 0; zero leading coefficient with nonzero tail is not rational of that type
        let err = pade_n1n(&series(vec![q(0, 1), q(1, 1)]), 1, prec()).unwrap_err();
        assert!(matches!(err, Error::DegeneratePade { order: 1 }));
    }

    #[test]
    fn unit_circle_roots() {
        let poly = Polynomial::new(vec![q(1, 1), q(0, 1), q(-1, 1)]);
        let roots = poly_roots(&poly, prec()).unwrap();
        let vals: Vec<(f64, f64)> = roots.iter().map(BigComplex::to_f64).collect();
        assert!(vals.iter().all(|(_, im)| *im == 0.0));
        let mut re: Vec<f64> = vals.iter().map(|v| v.0).collect();
        re.sort_by(f64::total_cmp);
        assert!((re[0] + 1.0).abs() < 1e-40 && (re[1] - 1.0).abs() < 1e-40);
        let pf = partial_fractions(&Polynomial::new(vec![q(1, 1)]), &poly, prec()).unwrap();
        for (z, r) in pf.poles.iter().zip(&pf.residues) {
            // 1/(1-z²) = -1/2 · 1/(z-1) + 1/2 · 1/(z+1)
            let expect = if z.re.to_f64() > 0.0 { -0.5 } else { 0.5 };
            assert!((r.re.to_f64() - expect).abs() < 1e-30);
        }
    }

    #[test]
    fn complex_roots_pair_exactly() {
        // 1 + z + z² + z³
        let poly = Polynomial::new(vec![q(1, 1); 4]);
        let roots = poly_roots(&poly, prec()).unwrap();
        let complex: Vec<&BigComplex> = roots.iter().filter(|z| !z.is_real()).collect();
        assert_eq!(complex.len(), 2);
        assert_eq!(*complex[0], complex[1].conj());
        assert_eq!(roots.iter().filter(|z| z.is_real()).count(), 1);
    }

    #[test]
    fn multiple_pole_rejected() {
        let poly = Polynomial::new(vec![q(1, 1), q(-2, 1), q(1, 1)]);
        let err = partial_fractions(&Polynomial::new(vec![q(1, 1)]), &poly, prec()).unwrap_err();
        assert!(matches!(err, Error::MultiplePole { .. }));
    }

    #[test]
    fn float_path_matches_exact_path() {
        let c = vec![q(3, 4), q(-63, 16), q(1, 3), q(-7, 5)];
        let bits = prec().bits();
        let cf: Vec<BigValue> = c
            .iter()
            .map(|v| BigValue::Float(v.to_float(bits)))
            .collect();
        let pe = pade_n1n(&series(c), 2, prec()).unwrap();
        let pf = pade_n1n(&series(cf), 2, prec()).unwrap();
        for (a, b) in pe.denominator.coeffs.iter().zip(&pf.denominator.coeffs) {
            assert!((a - b).abs().to_f64() < 1e-38);
        }
    }

    #[test]
    fn reconstruction_at_probes() {
        let c = vec![q(1, 1), q(-1, 2), q(1, 3), q(-1, 4), q(1, 5), q(-1, 6)];
        let p = pade_n1n(&series(c), 3, prec()).unwrap();
        let pf = partial_fractions(&p.numerator, &p.denominator, prec()).unwrap();
        let bits = prec().bits();
        for (re, im) in [(0.3, 0.1), (-2.0, 0.5), (1.5, -1.0), (0.0, 2.0), (4.0, 0.0)] {
            let z = BigComplex::new(BigValue::from_f64(re, bits), BigValue::from_f64(im, bits));
            let direct = &p.numerator.eval(&z) / &p.denominator.eval(&z);
            let sum = pf.eval(&z, bits);
            let err = (&direct - &sum).abs(bits) / direct.abs(bits);
            assert!(err < 1e-40);
        }
    }
}
