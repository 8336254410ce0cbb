//! Evaluation grids given as `min:max:points[:log|linear]`.

use std::str::FromStr;

use rug::Float;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::BigValue;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    Log,
    Linear,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    pub min: BigValue,
    pub max: BigValue,
    pub points: usize,
    pub scale: Scale,
}

impl Grid {
    pub fn validate(&self) -> Result<()> {
        if self.points == 0 {
            return Err(Error::InvalidInput("grid needs at least one point".into()));
        }
        if self.points == 1 {
            if self.min != self.max {
                return Err(Error::InvalidInput(
                    "a one-point grid needs min = max".into(),
                ));
            }
        } else if self.min >= self.max {
            return Err(Error::InvalidInput(format!(
                "grid min {} must be below max {}",
                self.min, self.max
            )));
        }
        if self.scale == Scale::Log && self.min.signum() != std::cmp::Ordering::Greater {
            return Err(Error::InvalidInput("a log grid needs min > 0".into()));
        }
        if self.min.signum() == std::cmp::Ordering::Less {
            return Err(Error::InvalidInput(
                "grid points must be nonnegative".into(),
            ));
        }
        Ok(())
    }

    /// Grid points; linear grids with rational ends stay exact, and the end
    /// points are always reproduced exactly.
    pub fn values(&self, bits: u32) -> Vec<BigValue> {
        if self.points == 1 {
            return vec![self.min.clone()];
        }
        let last = self.points - 1;
        (0..self.points)
            .map(|i| {
                if i == 0 {
                    return self.min.clone();
                }
                if i == last {
                    return self.max.clone();
                }
                let t = BigValue::ratio(i as i64, last as i64);
                match self.scale {
                    Scale::Linear => &self.min + &(&(&self.max - &self.min) * &t),
                    Scale::Log => {
                        let lo = self.min.to_float(bits).ln();
                        let hi = self.max.to_float(bits).ln();
                        let x = Float::with_val(bits, &hi - &lo) * t.to_float(bits) + lo;
                        BigValue::Float(x.exp())
                    }
                }
            })
            .collect()
    }
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if !(3..=4).contains(&parts.len()) {
            return Err(Error::Parse(format!(
                "grid '{s}' is not min:max:points[:log|linear]"
            )));
        }
        let points = parts[2]
            .parse()
            .map_err(|_| Error::Parse(format!("grid point count '{}'", parts[2])))?;
        let scale = match parts.get(3).copied().unwrap_or("log") {
            "log" => Scale::Log,
            "linear" => Scale::Linear,
            other => return Err(Error::Parse(format!("grid scale '{other}'"))),
        };
        let grid = Grid {
            min: BigValue::parse(parts[0])?,
            max: BigValue::parse(parts[1])?,
            points,
            scale,
        };
        grid.validate()?;
        Ok(grid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_grid_is_exact() {
        let g: Grid = "0:1:5:linear".parse().unwrap();
        let v = g.values(128);
        assert_eq!(v[1], BigValue::ratio(1, 4));
        assert!(v.iter().all(BigValue::is_exact));
    }

    #[test]
    fn log_grid_hits_decades() {
        let g: Grid = "0.01:100:5".parse().unwrap();
        let v = g.values(128);
        assert_eq!(v[0], BigValue::ratio(1, 100));
        assert!((v[2].to_f64() - 1.0).abs() < 1e-30);
        assert_eq!(v[4], BigValue::from_int(100));
    }

    #[test]
    fn single_point_grid() {
        let g: Grid = "0:0:1:linear".parse().unwrap();
        assert_eq!(g.values(64), vec![BigValue::zero()]);
    }

    #[test]
    fn rejects_bad_grids() {
        for s in [
            "1:0:5",
            "0:1:0",
            "0:1:5:log",
            "1:2",
            "1:2:3:cubic",
            "-1:1:3:linear",
        ] {
            assert!(s.parse::<Grid>().is_err(), "{s}");
        }
    }
}
