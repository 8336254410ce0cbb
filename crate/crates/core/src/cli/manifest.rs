//! The versioned manifest of builtin example configurations.

use std::collections::BTreeMap;

use clap::ValueEnum;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::phi::PhiSpec;
use crate::series::{
    beta_function_series, euler_heisenberg_series, quartic_rspt_series, sextic_rspt_series,
    zero_dim_partition_series, PowerSeries,
};
use crate::sum::match_growth;
use crate::BigValue;

use super::grid::{Grid, Scale};

const MANIFEST: &str = include_str!("../../data/examples.toml");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Builtin {
    ZeroDim,
    EulerHeisenberg,
    Quartic,
    Sextic,
    Beta,
}

impl Builtin {
    pub fn name(self) -> &'static str {
        match self {
            Builtin::ZeroDim => "zero-dim",
            Builtin::EulerHeisenberg => "euler-heisenberg",
            Builtin::Quartic => "quartic",
            Builtin::Sextic => "sextic",
            Builtin::Beta => "beta",
        }
    }

    pub fn all() -> [Builtin; 5] {
        [
            Builtin::ZeroDim,
            Builtin::EulerHeisenberg,
            Builtin::Quartic,
            Builtin::Sextic,
            Builtin::Beta,
        ]
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct PhiParams {
    pub a: String,
    pub b: String,
    #[serde(default = "one")]
    pub m: u32,
    #[serde(default)]
    pub mu: u32,
}

fn one() -> u32 {
    1
}

impl PhiParams {
    pub fn to_spec(&self) -> Result<PhiSpec> {
        PhiSpec::new(
            BigValue::parse(&self.a)?,
            BigValue::parse(&self.b)?,
            self.m,
            self.mu,
        )
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct GridParams {
    pub min: String,
    pub max: String,
    pub points: usize,
    pub scale: Scale,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Example {
    pub description: String,
    pub subtracted: bool,
    pub phi: Option<PhiParams>,
    pub growth: Option<String>,
    pub borel: PhiParams,
    pub orders: Vec<usize>,
    pub borel_orders: Vec<usize>,
    #[serde(default)]
    pub summability_orders: Vec<usize>,
    pub root_bracket: Option<[f64; 2]>,
    pub grid: GridParams,
}

impl Example {
    pub fn phi_spec(&self) -> Result<PhiSpec> {
        match (&self.phi, &self.growth) {
            (Some(p), _) => p.to_spec(),
            (None, Some(growth)) => {
                let (a, b) = match_growth(&BigValue::parse(growth)?)?;
                PhiSpec::simple(a, b)
            }
            (None, None) => Err(Error::InvalidInput(
                "example has neither phi nor growth".into(),
            )),
        }
    }

    pub fn grid(&self) -> Result<Grid> {
        let g = Grid {
            min: BigValue::parse(&self.grid.min)?,
            max: BigValue::parse(&self.grid.max)?,
            points: self.grid.points,
            scale: self.grid.scale,
        };
        g.validate()?;
        Ok(g)
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct Manifest {
    pub version: u32,
    pub examples: BTreeMap<String, Example>,
}

impl Manifest {
    pub fn load() -> Result<Self> {
        toml::from_str(MANIFEST).map_err(|e| Error::Parse(format!("example manifest: {e}")))
    }

    pub fn example(&self, b: Builtin) -> Result<&Example> {
        self.examples
            .get(b.name())
            .ok_or_else(|| Error::InvalidInput(format!("manifest has no entry for {}", b.name())))
    }
}

/// The builtin series with `count` coefficients after any subtraction.
pub fn builtin_series(b: Builtin, example: &Example, count: usize) -> Result<PowerSeries> {
    let raw = count + usize::from(example.subtracted);
    let series = match b {
        Builtin::ZeroDim => zero_dim_partition_series(raw)?,
        Builtin::EulerHeisenberg => euler_heisenberg_series(raw)?,
        Builtin::Quartic => quartic_rspt_series(raw)?,
        Builtin::Sextic => sextic_rspt_series(raw)?,
        Builtin::Beta => beta_function_series(),
    };
    if example.subtracted {
        series.once_subtracted()
    } else {
        Ok(series)
    }
}
