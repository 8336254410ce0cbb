//! `phipade verify`: oracle cross-checks with a pass/fail table.

use crate::error::Result;
use crate::oracles::{borel_pade_laplace, euler_identity, inverse_transform, zero_dim_z};
use crate::phi::{phi_eval, PhiSpec};
use crate::series::zero_dim_partition_series;
use crate::sum::{build, evaluate, reexpand};
use crate::{BigComplex, BigValue, Precision};

use super::{builtin_series, Builtin, Manifest, VerifyArgs};

struct Check {
    name: String,
    error: f64,
    threshold: f64,
    pass: bool,
}

impl Check {
    fn new(name: impl Into<String>, error: f64, threshold: f64) -> Self {
        Check {
            name: name.into(),
            error,
            threshold,
            pass: error <= threshold,
        }
    }
}

/// `10^-max(15, digits - 10)`.
fn threshold(prec: Precision) -> f64 {
    10f64.powi(-(15.max(prec.digits() as i32 - 10)))
}

fn real(v: BigValue) -> BigComplex {
    BigComplex::real(v)
}

fn diff(a: &BigComplex, b: &BigComplex, bits: u32) -> f64 {
    (a - b).abs(bits).to_f64()
}

fn euler_check(prec: Precision) -> Result<Check> {
    let bits = prec.bits();
    let mut worst = 0.0f64;
    let points = [
        real(BigValue::ratio(1, 10)),
        real(BigValue::one()),
        real(BigValue::from_int(5)),
        BigComplex::new(BigValue::one(), BigValue::one()),
    ];
    for z in &points {
        let phi = phi_eval(&PhiSpec::borel(), z, prec)?;
        let e = euler_identity(z, prec)?;
        worst = worst.max(diff(&phi, &e, bits) / e.abs(bits).to_f64());
    }
    Ok(Check::new(
        "phi(a=b=1) vs z^-1 e^(1/z) E1(1/z)",
        worst,
        threshold(prec),
    ))
}

fn zero_dim_check(prec: Precision) -> Result<Check> {
    let spec = PhiSpec::simple(BigValue::ratio(3, 4), BigValue::ratio(1, 4))?;
    let approx = build(&zero_dim_partition_series(2)?, &spec, 1, prec)?;
    let exact_pf = approx.pf.poles == vec![real(BigValue::ratio(-3, 2))]
        && approx.pf.residues == vec![real(BigValue::ratio(3, 2))];
    let mut worst = 0.0f64;
    for g in [
        BigValue::ratio(1, 10),
        BigValue::one(),
        BigValue::from_int(10),
    ] {
        let v = evaluate(&approx, &real(g.clone()), prec)?;
        let z = real(zero_dim_z(&g, prec)?);
        worst = worst.max(diff(&v, &z, prec.bits()));
    }
    let mut c = Check::new("zero-dim [0,1] vs Z(g)", worst, threshold(prec));
    c.pass &= exact_pf;
    Ok(c)
}

/// Runs at no fewer than 30 digits so the quadrature resolves the fixed 1e-15 target.
fn inverse_check(prec: Precision) -> Result<Check> {
    let prec = Precision::new(prec.digits().max(30))?;
    let spec = PhiSpec::simple(BigValue::ratio(3, 4), BigValue::ratio(1, 4))?;
    let transformed = |u: &BigComplex| {
        let one = real(BigValue::one());
        Ok(&one / &(&one + &(u * &real(BigValue::ratio(2, 3)))))
    };
    let inv = inverse_transform(transformed, &spec, prec)?;
    let mut worst = 0.0f64;
    for g in [BigValue::ratio(1, 2), BigValue::from_int(2)] {
        let v = inv.eval(&real(g.clone()))?.value;
        worst = worst.max(diff(&v, &real(zero_dim_z(&g, prec)?), prec.bits()));
    }
    Ok(Check::new("inverse transform on zero-dim", worst, 1e-15))
}

fn borel_check(prec: Precision) -> Result<Check> {
    let manifest = Manifest::load()?;
    let series = builtin_series(Builtin::Quartic, manifest.example(Builtin::Quartic)?, 2)?;
    let approx = build(&series, &PhiSpec::borel(), 1, prec)?;
    let mut worst = 0.0f64;
    for g in [BigValue::ratio(1, 10), BigValue::one()] {
        let g = real(g);
        let a = evaluate(&approx, &g, prec)?;
        let b = borel_pade_laplace(&series, 1, &g, prec)?;
        worst = worst.max(diff(&a, &b, prec.bits()));
    }
    Ok(Check::new(
        "quartic Borel-Pade vs Laplace quadrature",
        worst,
        threshold(prec),
    ))
}

fn matching_checks(prec: Precision, corruption: Option<(Builtin, usize)>) -> Result<Vec<Check>> {
    let manifest = Manifest::load()?;
    let tol = prec.tolerance_f64();
    let mut checks = Vec::new();
    for b in Builtin::all() {
        let ex = manifest.example(b)?;
        let spec = ex.phi_spec()?;
        let n = ex.orders.iter().copied().max().unwrap_or(1);
        let series = builtin_series(b, ex, 2 * n)?;
        let approx = build(&series, &spec, n, prec)?;
        let mut reference = series.coeffs.clone();
        if let Some((target, k)) = corruption {
            if target == b && k < reference.len() {
                reference[k] = &reference[k] + &BigValue::one();
            }
        }
        let re = reexpand(&approx, 2 * n);
        let mut worst = 0.0f64;
        let mut exact_mismatch = false;
        for (a, d) in re.coeffs.iter().zip(&reference) {
            if a.is_exact() && d.is_exact() {
                exact_mismatch |= a != d;
            }
            worst = worst.max((a - d).abs().to_f64() / d.abs().to_f64().max(1.0));
        }
        let mut c = Check::new(
            format!("matching property, {} [{},{n}]", b.name(), n - 1),
            worst,
            tol,
        );
        c.pass &= !exact_mismatch;
        checks.push(c);
    }
    Ok(checks)
}

pub(super) fn cmd_verify(args: &VerifyArgs) -> Result<i32> {
    let prec = args.precision.get()?;
    let mut checks = vec![
        euler_check(prec)?,
        zero_dim_check(prec)?,
        inverse_check(prec)?,
        borel_check(prec)?,
    ];
    checks.extend(matching_checks(prec, args.inject_corruption)?);
    println!("precision {} digits", prec.digits());
    println!(
        "{:<44} {:>10} {:>10}  result",
        "check", "error", "threshold"
    );
    for c in &checks {
        println!(
            "{:<44} {:>10.2e} {:>10.0e}  {}",
            c.name,
            c.error,
            c.threshold,
            if c.pass { "PASS" } else { "FAIL" }
        );
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    println!(
        "{} of {} checks passed",
        checks.len() - failed,
        checks.len()
    );
    Ok(if failed == 0 { 0 } else { 1 })
}
