//! Parameter sweeps: evaluate a quantity over a grid of rapidities, mixture
//! weights or orientation angles and emit byte-stable CSV with the exact
//! column set `param,convention,quantity,value,residual`.

use std::fmt::Write as _;

use bispinor::*;
use std::result::Result;

use crate::state::{build_density, concurrence_for, Family, StateSpec};

/// What gets evaluated at each grid point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    Concurrence,
    Purity,
    TracePower,
    BlochNorms,
}

impl Quantity {
    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "concurrence" => Ok(Quantity::Concurrence),
            "purity" => Ok(Quantity::Purity),
            "trace_power" => Ok(Quantity::TracePower),
            "bloch_norms" => Ok(Quantity::BlochNorms),
            other => Err(format!(
                "unknown quantity '{other}' (expected concurrence, purity, trace_power or bloch_norms)"
            )),
        }
    }
}

/// Which spec field the grid drives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridParam {
    Eta,
    Q,
    Angle,
}

impl GridParam {
    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "eta" => Ok(GridParam::Eta),
            "q" => Ok(GridParam::Q),
            "angle" => Ok(GridParam::Angle),
            other => Err(format!("unknown sweep parameter '{other}' (expected eta, q or angle)")),
        }
    }

    /// Natural default per family: mixtures sweep q only when asked; the
    /// Bell mixture has no momentum, so q is its only parameter.
    pub fn default_for(family: Family) -> GridParam {
        match family {
            Family::BellMix => GridParam::Q,
            _ => GridParam::Eta,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub base: StateSpec,
    pub quantity: Quantity,
    pub param: GridParam,
    pub grid: Vec<f64>,
    /// Exponent for `trace_power`.
    pub power: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub param: f64,
    pub convention: &'static str,
    pub quantity: String,
    pub value: f64,
    pub residual: f64,
}

fn validate(spec: &SweepSpec) -> Result<(), String> {
    if spec.grid.is_empty() {
        return Err("sweep grid must not be empty".into());
    }
    if spec.base.family == Family::BellMix && spec.param != GridParam::Q {
        return Err("bell_mix has no momentum; only a q sweep is defined".into());
    }
    if matches!(spec.base.family, Family::Free | Family::Magnetic) && spec.param == GridParam::Q {
        return Err(format!(
            "family {} is a pure state; it has no mixture weight q",
            spec.base.family.name()
        ));
    }
    if spec.quantity == Quantity::Purity && spec.base.convention == Convention::Covariant {
        return Err(
            "purity is not defined for the covariant convention; sweep trace_power instead".into(),
        );
    }
    if spec.quantity == Quantity::TracePower && !(1..=8).contains(&spec.power) {
        return Err(format!("trace power must satisfy 1 ≤ n ≤ 8, got {}", spec.power));
    }
    Ok(())
}

/// Evaluate the sweep; rows come out in grid order (two per point for
/// `bloch_norms`: the a then the b square).
pub fn run(spec: &SweepSpec) -> Result<Vec<SweepRow>, String> {
    validate(spec)?;
    let mut rows = Vec::new();
    for &value in &spec.grid {
        let mut point = spec.base;
        match spec.param {
            GridParam::Eta => point.eta = value,
            GridParam::Q => point.q = value,
            GridParam::Angle => point.angle = value,
        }
        let rho = build_density(&point)?;
        let convention = point.convention.name();
        match spec.quantity {
            Quantity::Concurrence => {
                let c = concurrence_for(point.family, &rho)?;
                rows.push(SweepRow {
                    param: value,
                    convention,
                    quantity: "concurrence".into(),
                    value: c.value,
                    residual: c.residual,
                });
            }
            Quantity::Purity => {
                let t = rho.matrix().pow(2).trace();
                rows.push(SweepRow {
                    param: value,
                    convention,
                    quantity: "purity".into(),
                    value: t.re,
                    residual: t.im.abs(),
                });
            }
            Quantity::TracePower => {
                let t = rho.matrix().pow(spec.power).trace();
                rows.push(SweepRow {
                    param: value,
                    convention,
                    quantity: format!("trace_power_{}", spec.power),
                    value: t.re,
                    residual: t.im.abs(),
                });
            }
            Quantity::BlochNorms => {
                let d = bloch_decompose(&rho);
                let a2 = d.a_square();
                let b2 = d.b_square();
                rows.push(SweepRow {
                    param: value,
                    convention,
                    quantity: "bloch_a_sq".into(),
                    value: a2.re,
                    residual: a2.im.abs(),
                });
                rows.push(SweepRow {
                    param: value,
                    convention,
                    quantity: "bloch_b_sq".into(),
                    value: b2.re,
                    residual: b2.im.abs(),
                });
            }
        }
    }
    Ok(rows)
}

/// Render rows as CSV. Fixed-precision scientific mantissas keep the output
/// byte-stable across runs.
pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("param,convention,quantity,value,residual\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{:.12e},{},{},{:.12e},{:.3e}",
            r.param, r.convention, r.quantity, r.value, r.residual
        );
    }
    out
}
