//! One line per acceptance criterion; exits nonzero if any criterion fails.

use std::time::Instant;

use phipade::oracles::{
    borel_pade_laplace, inverse_transform, oscillator_energy, pure_anharmonic_energy, zero_dim_z,
};
use phipade::pade::{pade_n1n, partial_fractions};
use phipade::phi::PhiSpec;
use phipade::series::{
    beta_function_series, euler_heisenberg_series, quartic_rspt_series, sextic_rspt_series,
    zero_dim_partition_series, PowerSeries,
};
use phipade::sum::{
    asymptote, build, check_summability, evaluate, evaluate_grid, find_root, fit_b, match_growth,
    phi_transform, reexpand, FitOptions, DEFAULT_SECTOR,
};
use phipade::{BigComplex, BigValue, Precision};
use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn q(n: i64, d: i64) -> BigValue {
    BigValue::ratio(n, d)
}

fn real(v: BigValue) -> BigComplex {
    BigComplex::real(v)
}

fn check(cond: bool, msg: String) -> Outcome {
    if cond {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn zero_dim_exactness() -> Outcome {
    let prec = Precision::default();
    let spec = PhiSpec::simple(q(3, 4), q(1, 4)).map_err(err)?;
    let approx = build(&zero_dim_partition_series(2).map_err(err)?, &spec, 1, prec).map_err(err)?;
    let pole = &approx.pf.poles[0];
    let residue = &approx.pf.residues[0];
    if !(pole.is_exact()
        && *pole == real(q(-3, 2))
        && residue.is_exact()
        && *residue == real(q(3, 2)))
    {
        return Err(format!("pole {pole}, residue {residue}"));
    }
    let mut worst = 0.0f64;
    for g in ["0.1", "1", "10"] {
        let g = BigValue::parse(g).map_err(err)?;
        let v = evaluate(&approx, &real(g.clone()), prec).map_err(err)?;
        let z = zero_dim_z(&g, prec).map_err(err)?;
        worst = worst.max((v.re - z).abs().to_f64());
    }
    check(
        worst < 1e-20,
        format!("pole -3/2, residue 3/2 exact; max |approx - Z| = {worst:.3e}"),
    )
}

fn quartic_first_order() -> Outcome {
    let prec = Precision::default();
    let bits = prec.bits();
    let series = quartic_rspt_series(3)
        .map_err(err)?
        .once_subtracted()
        .map_err(err)?;
    let spec = PhiSpec::simple(q(2, 3), q(1, 1)).map_err(err)?;
    let approx = build(&series, &spec, 1, prec).map_err(err)?;
    if approx.pf.poles != vec![real(q(-4, 21))] || approx.pf.residues != vec![real(q(1, 7))] {
        return Err(format!("poles {:?}", approx.pf.poles));
    }
    let asy = asymptote(&approx, prec).map_err(err)?;
    let lead = asy.leading().ok_or("no asymptote")?;
    if lead.exponent != q(1, 3) {
        return Err(format!("leading power {}", lead.exponent));
    }
    let c = lead.coefficient.re.to_float(bits);
    let ratio = Float::with_val(bits, 4) / 21u32;
    let exact = Float::with_val(bits, 3) / 4u32
        * ratio.pow(&(Float::with_val(bits, 2) / 3u32))
        * (Float::with_val(bits, 1) / 3u32).gamma();
    let six_digits = (Float::with_val(bits, &c - &exact).abs() / &exact).to_f64() < 1e-6
        && (c.to_f64() - 0.665147).abs() < 5e-7;
    let eps = pure_anharmonic_energy(4).map_err(err)?;
    let rel = (c.to_f64() - eps).abs() / eps;
    check(
        six_digits && rel < 0.005,
        format!(
            "z1 = -4/21, r1 = 1/7; coefficient {:.7} vs oracle eps {eps:.7} ({:.3}%)",
            c.to_f64(),
            100.0 * rel
        ),
    )
}

fn fit_b_quartic() -> Outcome {
    let prec = Precision::new(30).map_err(err)?;
    let series = quartic_rspt_series(3)
        .map_err(err)?
        .once_subtracted()
        .map_err(err)?;
    let target = BigValue::parse("0.667986").map_err(err)?;
    let b = fit_b(&series, &q(2, 3), 1, &target, &FitOptions::default(), prec).map_err(err)?;
    check((b - 0.9977547).abs() < 1e-6, format!("b = {b:.9}"))
}

fn euler_heisenberg() -> Outcome {
    let prec = Precision::default();
    let bits = prec.bits();
    let spec = PhiSpec::new(q(2, 1), q(1, 1), 2, 0).map_err(err)?;
    let first = build(&euler_heisenberg_series(2).map_err(err)?, &spec, 1, prec).map_err(err)?;
    if first.pf.poles != vec![real(q(-21, 2))] {
        return Err(format!("[0,1] pole {:?}", first.pf.poles));
    }
    let transformed =
        phi_transform(&euler_heisenberg_series(8).map_err(err)?, &spec).map_err(err)?;
    let pade = pade_n1n(&transformed, 4, prec).map_err(err)?;
    let pf = partial_fractions(&pade.numerator, &pade.denominator, prec).map_err(err)?;
    let pi2 = Float::with_val(bits, Constant::Pi).square();
    let z = pf.poles[0].to_f64();
    let r = pf.residues[0].to_f64();
    let pole_err = ((pf.poles[0].re.to_float(bits) + &pi2) / &pi2)
        .abs()
        .to_f64();
    let res_exact = -(Float::with_val(bits, 2) / &pi2);
    let res_err = ((pf.residues[0].re.to_float(bits) - &res_exact) / &res_exact)
        .abs()
        .to_f64();
    let asy = asymptote(&first, prec).map_err(err)?;
    let lead = asy.leading().ok_or("no asymptote")?;
    let log_coef = &lead.coefficient.re;
    let log_err = (log_coef + &q(7, 30)).abs().to_f64();
    let ok = pole_err < 1e-6
        && res_err < 1e-4
        && z.1 == 0.0
        && r.1 == 0.0
        && lead.log_power == 1
        && lead.exponent.is_zero()
        && log_err <= prec.tolerance_f64();
    check(
        ok,
        format!(
            "[0,1] pole -21/2; [3,4] pole {:.10} (rel {pole_err:.1e}), residue {:.10} (rel {res_err:.1e}); \
             log coefficient {:.12} (exact -1/3 for the full function)",
            z.0,
            r.0,
            log_coef.to_f64()
        ),
    )
}

fn beta_function() -> Outcome {
    let prec = Precision::default();
    let series = beta_function_series();
    let borel = build(&series, &PhiSpec::borel(), 4, prec).map_err(err)?;
    let warnings = check_summability(&borel.pf, DEFAULT_SECTOR);
    let pole = warnings
        .iter()
        .map(|w| w.pole.re.to_f64())
        .find(|z| (z - 17.34418).abs() < 0.001)
        .ok_or_else(|| format!("no positive-axis pole near 17.34418: {warnings:?}"))?;
    let (a, b) = match_growth(&q(7, 2)).map_err(err)?;
    if (a.clone(), b.clone()) != (q(11, 4), q(11, 4)) {
        return Err(format!("match_growth gave ({a}, {b})"));
    }
    let spec = PhiSpec::simple(a, b).map_err(err)?;
    let approx = build(&series, &spec, 4, prec).map_err(err)?;
    let root = find_root(&approx, 1.0, 2.0, prec).map_err(err)?.to_f64();
    check(
        (root - 1.4192).abs() < 5e-4 && approx.warnings.is_empty(),
        format!("Borel pole {pole:.6}; root {root:.6} with a = b = 11/4"),
    )
}

fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    let (l, h) = (lo.log10(), hi.log10());
    (0..points)
        .map(|i| 10f64.powf(l + (h - l) * i as f64 / (points - 1) as f64))
        .collect()
}

fn sextic() -> Outcome {
    let prec = Precision::new(30).map_err(err)?;
    // 18 coefficients of the once-subtracted series (E_0 is the subtracted constant)
    let series = sextic_rspt_series(19)
        .map_err(err)?
        .once_subtracted()
        .map_err(err)?;
    let spec = PhiSpec::new(q(3, 2), q(1, 1), 2, 0).map_err(err)?;
    let approx = build(&series, &spec, 9, prec).map_err(err)?;
    let grid = log_grid(1e-2, 1e2, 50);
    let gs: Vec<BigComplex> = grid
        .iter()
        .map(|g| real(BigValue::from_f64(*g, prec.bits())))
        .collect();
    let values = evaluate_grid(&approx, &gs, prec);
    let mut worst = (0.0f64, 0.0f64);
    let exact: Vec<f64> = {
        use rayon::prelude::*;
        grid.par_iter()
            .map(|g| oscillator_energy(6, *g))
            .collect::<phipade::Result<Vec<f64>>>()
            .map_err(err)?
    };
    for ((g, v), e) in grid.iter().zip(values).zip(exact) {
        let v = v.map_err(err)?.re.to_f64();
        let rel = (v - e).abs() / e;
        if rel > worst.0 {
            worst = (rel, *g);
        }
    }
    check(
        worst.0 < 0.007,
        format!("max relative error {:.5} at g = {:.4}", worst.0, worst.1),
    )
}

fn matching_suite() -> Outcome {
    let prec = Precision::default();
    let tol = prec.tolerance_f64();
    let quartic = quartic_rspt_series(13).map_err(err)?;
    let cases: Vec<(PowerSeries, PhiSpec)> = vec![
        (
            zero_dim_partition_series(10).map_err(err)?,
            PhiSpec::simple(q(3, 4), q(1, 4)).map_err(err)?,
        ),
        (
            euler_heisenberg_series(8).map_err(err)?,
            PhiSpec::new(q(2, 1), q(1, 1), 2, 0).map_err(err)?,
        ),
        (
            quartic.once_subtracted().map_err(err)?,
            PhiSpec::simple(q(2, 3), q(1, 1)).map_err(err)?,
        ),
        (quartic.clone(), PhiSpec::borel()),
        (
            sextic_rspt_series(19)
                .map_err(err)?
                .once_subtracted()
                .map_err(err)?,
            PhiSpec::new(q(3, 2), q(1, 1), 2, 0).map_err(err)?,
        ),
        (
            sextic_rspt_series(18).map_err(err)?,
            PhiSpec::new(q(3, 2), q(1, 1), 2, 0).map_err(err)?,
        ),
        (beta_function_series(), PhiSpec::borel()),
        (
            beta_function_series(),
            PhiSpec::simple(q(11, 4), q(11, 4)).map_err(err)?,
        ),
        (
            quartic.once_subtracted().map_err(err)?,
            PhiSpec::simple(q(2, 3), BigValue::from_f64(0.9977547, prec.bits())).map_err(err)?,
        ),
    ];
    let (mut checked, mut degenerate) = (0, Vec::new());
    for (series, spec) in &cases {
        for n in 1..=series.len() / 2 {
            let approx = match build(series, spec, n, prec) {
                Ok(a) => a,
                // no [n-1, n] approximant exists, e.g. d_0 = 0 at n = 1
                Err(phipade::Error::DegeneratePade { .. }) => {
                    degenerate.push(format!("{} n={n}", series.label));
                    continue;
                }
                Err(e) => return Err(format!("{} n={n}: {e}", series.label)),
            };
            let re = reexpand(&approx, 2 * n);
            for (k, (a, b)) in re.coeffs.iter().zip(&series.coeffs).enumerate() {
                let ok = if a.is_exact() && b.is_exact() {
                    a == b
                } else {
                    let d = (a - b).abs().to_f64();
                    d <= tol * b.abs().to_f64().max(1.0)
                };
                if !ok {
                    return Err(format!("{} n={n} k={k}: {a} vs {b}", series.label));
                }
            }
            checked += 1;
        }
    }
    check(
        checked > 0,
        format!(
            "{checked} approximants reproduce d_0..d_(2n-1); no approximant exists for [{}]",
            degenerate.join(", ")
        ),
    )
}

fn borel_pade_equivalence() -> Outcome {
    let prec = Precision::default();
    let series = quartic_rspt_series(7)
        .map_err(err)?
        .once_subtracted()
        .map_err(err)?;
    let mut worst = 0.0f64;
    // n = 2 has a pole on the positive axis, where the Laplace integral is undefined
    for n in [1, 3] {
        let approx = build(&series, &PhiSpec::borel(), n, prec).map_err(err)?;
        for g in ["0.1", "1"] {
            let g = real(BigValue::parse(g).map_err(err)?);
            let a = evaluate(&approx, &g, prec).map_err(err)?;
            let b = borel_pade_laplace(&series, n, &g, prec).map_err(err)?;
            worst = worst.max((&a - &b).abs(prec.bits()).to_f64());
        }
    }
    check(
        worst < 1e-20,
        format!("max difference {worst:.3e} over n = 1, 3"),
    )
}

fn inverse_transform_identity() -> Outcome {
    let prec = Precision::new(30).map_err(err)?;
    let spec = PhiSpec::simple(q(3, 4), q(1, 4)).map_err(err)?;
    // Φ-transform of the zero-dimensional series: Σ (-2u/3)^k = 1/(1 + 2u/3)
    let transformed = |u: &BigComplex| {
        let one = real(BigValue::one());
        let scaled = u * &real(q(2, 3));
        Ok(&one / &(&one + &scaled))
    };
    let inv = inverse_transform(transformed, &spec, prec).map_err(err)?;
    let mut worst = 0.0f64;
    for g in [q(1, 2), q(2, 1)] {
        let v = inv.eval(&real(g.clone())).map_err(err)?.value;
        let z = zero_dim_z(&g, prec).map_err(err)?;
        worst = worst.max((v.re - z).abs().to_f64());
    }
    check(worst < 1e-15, format!("max |inverse - Z| = {worst:.3e}"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("AC1 zero-dim exactness", zero_dim_exactness),
        ("AC2 quartic [0,1]", quartic_first_order),
        ("AC3 fit_b", fit_b_quartic),
        ("AC4 Euler-Heisenberg", euler_heisenberg),
        ("AC5 beta function", beta_function),
        ("AC6 sextic [8,9]", sextic),
        ("AC7 matching property", matching_suite),
        ("AC8 Borel-Pade equivalence", borel_pade_equivalence),
        ("AC9 inverse transform", inverse_transform_identity),
    ];
    let results: Vec<(Outcome, f64)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|(_, f)| {
                s.spawn(move || {
                    let t = Instant::now();
                    let r = f();
                    (r, t.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| (Err("panicked".into()), 0.0)))
            .collect()
    });
    let mut failed = 0;
    for ((name, _), (r, secs)) in criteria.iter().zip(results) {
        match r {
            Ok(msg) => println!("PASS  {name}: {msg} [{secs:.1}s]"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name}: {msg} [{secs:.1}s]");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
