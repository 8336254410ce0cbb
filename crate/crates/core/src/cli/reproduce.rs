//! `phipade reproduce`: comparison tables for the builtin examples.

use std::fs;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::oracles::{eh_lagrangian, oscillator_energy, zero_dim_z};
use crate::phi::PhiSpec;
use crate::series::PowerSeries;
use crate::sum::{build, check_summability, evaluate_grid, find_root, DEFAULT_SECTOR};
use crate::{BigComplex, BigValue, Precision};

use super::{complex_string, float_string, Builtin, Manifest, ReproduceArgs};

#[derive(Serialize)]
struct ColumnSummary {
    column: String,
    max_relative_error: Option<f64>,
    at_g: Option<f64>,
}

#[derive(Serialize)]
struct Summary {
    example: String,
    manifest_version: u32,
    precision: u32,
    phi: PhiSpec,
    borel: PhiSpec,
    columns: Vec<ColumnSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    root: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    borel_positive_axis_poles: Vec<String>,
}

fn oracle(example: Builtin, g: &BigValue, prec: Precision) -> Result<Option<BigValue>> {
    Ok(match example {
        Builtin::ZeroDim => Some(zero_dim_z(g, prec)?),
        Builtin::EulerHeisenberg => Some(eh_lagrangian(g, prec)?),
        Builtin::Quartic => Some(BigValue::from_f64(oscillator_energy(4, g.to_f64())?, 53)),
        Builtin::Sextic => Some(BigValue::from_f64(oscillator_energy(6, g.to_f64())?, 53)),
        Builtin::Beta => None,
    })
}

fn column(
    name: &str,
    series: &PowerSeries,
    spec: &PhiSpec,
    n: usize,
    points: &[BigComplex],
    prec: Precision,
) -> Result<(String, Vec<BigValue>)> {
    let approx = build(series, spec, n, prec)?;
    for w in &approx.warnings {
        eprintln!("warning: {name}[{},{n}]: {w}", n - 1);
    }
    let values = evaluate_grid(&approx, points, prec)
        .into_iter()
        .map(|v| v.map(|v| v.re))
        .collect::<Result<Vec<_>>>()?;
    Ok((format!("{name}[{},{n}]", n - 1), values))
}

pub(super) fn cmd_reproduce(args: &ReproduceArgs) -> Result<i32> {
    let prec = args.precision.get()?;
    let digits = prec.digits() as usize;
    let manifest = Manifest::load()?;
    let name = args.example.name();
    let ex = manifest.example(args.example)?;
    let spec = ex.phi_spec()?;
    let borel = ex.borel.to_spec()?;
    let max_n = ex
        .orders
        .iter()
        .chain(&ex.borel_orders)
        .chain(&ex.summability_orders)
        .copied()
        .max()
        .unwrap_or(1);
    let series = super::builtin_series(args.example, ex, 2 * max_n)?;
    let gs = ex.grid()?.values(prec.bits());
    let points: Vec<BigComplex> = gs.iter().cloned().map(BigComplex::real).collect();

    let exact: Vec<Option<BigValue>> = gs
        .par_iter()
        .map(|g| oracle(args.example, g, prec))
        .collect::<Result<_>>()?;
    let has_exact = exact.iter().all(Option::is_some);

    let mut columns = Vec::new();
    for &n in &ex.borel_orders {
        columns.push(column("borel-pade", &series, &borel, n, &points, prec)?);
    }
    for &n in &ex.orders {
        columns.push(column("phi-pade", &series, &spec, n, &points, prec)?);
    }

    let mut csv = String::from("g");
    if has_exact {
        csv.push_str(",exact");
    }
    for (c, _) in &columns {
        csv.push(',');
        csv.push_str(c);
    }
    csv.push('\n');
    for (i, g) in gs.iter().enumerate() {
        csv.push_str(&g.to_decimal_string(digits));
        if let Some(e) = &exact[i] {
            csv.push(',');
            csv.push_str(&match e {
                BigValue::Float(f) if f.prec() == 53 => float_string(e.to_f64(), digits),
                _ => e.to_decimal_string(digits),
            });
        }
        for (_, values) in &columns {
            csv.push(',');
            csv.push_str(&values[i].to_decimal_string(digits));
        }
        csv.push('\n');
    }

    let summaries: Vec<ColumnSummary> = columns
        .iter()
        .map(|(c, values)| {
            let worst = has_exact.then(|| {
                gs.iter()
                    .zip(values)
                    .zip(&exact)
                    .filter_map(|((g, v), e)| {
                        let e = e.as_ref()?;
                        (!e.is_zero()).then(|| (((v - e) / e.abs()).abs().to_f64(), g.to_f64()))
                    })
                    .fold((0.0f64, 0.0f64), |acc, x| if x.0 > acc.0 { x } else { acc })
            });
            ColumnSummary {
                column: c.clone(),
                max_relative_error: worst.map(|w| w.0),
                at_g: worst.map(|w| w.1),
            }
        })
        .collect();

    let mut root = None;
    if let (Some([lo, hi]), Some(&n)) = (ex.root_bracket, ex.orders.iter().max()) {
        let approx = build(&series, &spec, n, prec)?;
        // bisection stops at width 1e-7
        root = Some(find_root(&approx, lo, hi, prec)?.to_decimal_string(8));
    }
    let mut poles = Vec::new();
    for &n in &ex.summability_orders {
        let approx = build(&series, &borel, n, prec)?;
        for w in check_summability(&approx.pf, DEFAULT_SECTOR) {
            poles.push(complex_string(&w.pole, digits));
        }
    }

    let summary = Summary {
        example: name.to_string(),
        manifest_version: manifest.version,
        precision: prec.digits(),
        phi: spec,
        borel,
        columns: summaries,
        root,
        borel_positive_axis_poles: poles,
    };
    fs::create_dir_all(&args.out)?;
    let csv_path = args.out.join(format!("{name}.csv"));
    let summary_path = args.out.join(format!("{name}-summary.json"));
    fs::write(&csv_path, csv)?;
    fs::write(
        &summary_path,
        serde_json::to_string_pretty(&summary)? + "\n",
    )?;

    println!("{name}: {}", ex.description);
    for c in &summary.columns {
        if let (Some(e), Some(g)) = (c.max_relative_error, c.at_g) {
            println!(
                "  {}: max relative error {e:.3e} at g = {}",
                c.column,
                float_string(g, 6)
            );
        }
    }
    if let Some(r) = &summary.root {
        println!("  root of the Φ-Padé approximant: {r}");
    }
    for p in &summary.borel_positive_axis_poles {
        println!("  Borel-Padé pole near the positive axis: {p}");
    }
    println!("wrote {}", csv_path.display());
    println!("wrote {}", summary_path.display());
    Ok(0)
}
