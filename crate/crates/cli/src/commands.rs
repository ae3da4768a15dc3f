//! The data-emitting subcommands: transmission grids, resonance tables,
//! bound-state tables/sweeps and waveguide maps.

use std::io::Write;

use junction_core::junction::{self, transmission_closed_form};
use junction_core::potential::{build_barrier_well, Strength};
use junction_core::spectrum::{bound_state_residual, bound_states, count_bound_states};
use junction_core::transfer::{find_bound_states_numeric, scatter};
use junction_core::waveguide::{
    cutoff_points, dispersion_curve, map_parameters, transverse_transmission, ModePoint, Regime,
    WaveguideConfig,
};
use junction_core::Error as CoreError;

use crate::output::{Cell, Table};
use crate::sweep::SweepSpec;
use crate::{CliError, Model, TransmissionPreset};

fn barrier_well(sigma: f64) -> Result<junction_core::potential::PiecewisePotential, CoreError> {
    build_barrier_well(Strength::new(sigma)?)
}

pub struct TransmissionPlan {
    pub eta_values: Vec<f64>,
    pub sigma_values: Vec<f64>,
    /// extra (eta, sigma) pairs appended after the grid (fig2 diagonal)
    pub extra_pairs: Vec<(f64, f64)>,
    pub log_column: bool,
}

impl TransmissionPlan {
    pub fn resolve(
        preset: Option<TransmissionPreset>,
        eta: Option<&SweepSpec>,
        sigma: Option<&SweepSpec>,
    ) -> Result<Self, CliError> {
        match preset {
            Some(TransmissionPreset::Fig2) => {
                let sigma_values = SweepSpec::linear(0.0, 20.0, 200).values();
                let extra_pairs = sigma_values
                    .iter()
                    .filter(|&&s| s > 0.0)
                    .map(|&s| (s, s))
                    .collect();
                Ok(TransmissionPlan {
                    eta_values: SweepSpec::linear(0.1, 20.0, 200).values(),
                    sigma_values,
                    extra_pairs,
                    log_column: false,
                })
            }
            Some(TransmissionPreset::Fig3) => Ok(TransmissionPlan {
                eta_values: vec![0.0005, 0.05, 0.5],
                sigma_values: SweepSpec::linear(0.01, 12.0, 1200).values(),
                extra_pairs: Vec::new(),
                log_column: true,
            }),
            None => {
                let (eta, sigma) = match (eta, sigma) {
                    (Some(e), Some(s)) => (e, s),
                    _ => {
                        return Err(CliError::Usage(
                            "transmission needs --eta and --sigma sweeps (or a --preset)".into(),
                        ))
                    }
                };
                if eta.min <= 0.0 {
                    return Err(CliError::Usage(format!(
                        "eta sweep must stay positive, got minimum {}",
                        eta.min
                    )));
                }
                Ok(TransmissionPlan {
                    eta_values: eta.values(),
                    sigma_values: sigma.values(),
                    extra_pairs: Vec::new(),
                    log_column: false,
                })
            }
        }
    }
}

pub fn cmd_transmission(
    plan: &TransmissionPlan,
    model: Model,
    tol: f64,
    out: impl Write,
    json: bool,
    precision: usize,
) -> Result<(), CliError> {
    static CLOSED: &[&str] = &["eta", "sigma", "T"];
    static CLOSED_LOG: &[&str] = &["eta", "sigma", "T", "log10_T"];
    static BOTH: &[&str] = &["eta", "sigma", "T", "T_oracle", "abs_diff"];
    static BOTH_LOG: &[&str] = &["eta", "sigma", "T", "T_oracle", "abs_diff", "log10_T"];
    let headers: &'static [&'static str] = match (model, plan.log_column) {
        (Model::Both, false) => BOTH,
        (Model::Both, true) => BOTH_LOG,
        (_, false) => CLOSED,
        (_, true) => CLOSED_LOG,
    };

    let mut table = Table::new(out, headers, json, precision)?;
    let mut max_diff: f64 = 0.0;

    let mut emit = |table: &mut Table<_>, eta: f64, sigma: f64| -> Result<(), CliError> {
        let closed = transmission_closed_form(eta, sigma)?;
        let value = match model {
            Model::Oracle => scatter(&barrier_well(sigma)?, eta)?.transmission,
            _ => closed,
        };
        let mut cells = vec![Cell::Float(eta), Cell::Float(sigma), Cell::Float(value)];
        if model == Model::Both {
            let oracle = scatter(&barrier_well(sigma)?, eta)?.transmission;
            let diff = (closed - oracle).abs();
            max_diff = max_diff.max(diff);
            cells.push(Cell::Float(oracle));
            cells.push(Cell::Float(diff));
        }
        if plan.log_column {
            cells.push(Cell::Float(value.log10()));
        }
        table.row(&cells)?;
        Ok(())
    };

    for &eta in &plan.eta_values {
        for &sigma in &plan.sigma_values {
            emit(&mut table, eta, sigma)?;
        }
    }
    for &(eta, sigma) in &plan.extra_pairs {
        emit(&mut table, eta, sigma)?;
    }
    table.finish()?;

    if model == Model::Both && max_diff > tol {
        return Err(CliError::Tolerance { max_diff, tol });
    }
    Ok(())
}

pub fn cmd_resonances(
    count: usize,
    out: impl Write,
    json: bool,
    precision: usize,
) -> Result<(), CliError> {
    if count < 1 {
        return Err(CliError::Usage("--count must be at least 1".into()));
    }
    static HEADERS: &[&str] = &["n", "sigma_n", "residual", "T_n", "jump_ratio_sq"];
    let mut table = Table::new(out, HEADERS, json, precision)?;
    for level in junction::resonance_levels(count) {
        table.row(&[
            Cell::Int(level.n as i64),
            Cell::Float(level.sigma),
            Cell::Float(level.sigma.tan() - level.sigma.tanh()),
            Cell::Float(level.transmission),
            Cell::Float(level.jump_ratio_sq),
        ])?;
    }
    table.finish()?;
    Ok(())
}

pub fn cmd_bound_states_single(
    sigma: f64,
    out: impl Write,
    json: bool,
    precision: usize,
) -> Result<(), CliError> {
    static HEADERS: &[&str] = &["sigma", "n", "zeta", "residual", "oracle_zeta", "diff"];
    let mut table = Table::new(out, HEADERS, json, precision)?;
    if let Err(CoreError::ThresholdProximity(_)) = count_bound_states(sigma) {
        table.warning(&format!(
            "sigma = {sigma} is within 1e-9 of a resonance threshold; a nascent state sits at zeta = 0"
        ))?;
    }
    let states = bound_states(sigma)?;
    let oracle = if states.is_empty() {
        Vec::new()
    } else {
        find_bound_states_numeric(&barrier_well(sigma)?, sigma)?
    };
    if oracle.len() != states.len() {
        table.warning(&format!(
            "oracle scan found {} roots vs {} closed-form roots",
            oracle.len(),
            states.len()
        ))?;
    }
    for (i, s) in states.iter().enumerate() {
        let (oracle_cell, diff_cell) = match oracle.get(i) {
            Some(o) => (
                Cell::Float(o.value()),
                Cell::Float((s.zeta - o.value()).abs()),
            ),
            None => (Cell::Empty, Cell::Empty),
        };
        table.row(&[
            Cell::Float(s.sigma),
            Cell::Int(s.n as i64),
            Cell::Float(s.zeta),
            Cell::Float(bound_state_residual(s.zeta, s.sigma)?),
            oracle_cell,
            diff_cell,
        ])?;
    }
    table.finish()?;
    Ok(())
}

pub fn cmd_bound_states_sweep(
    spec: &SweepSpec,
    out: impl Write,
    json: bool,
    precision: usize,
) -> Result<(), CliError> {
    static HEADERS: &[&str] = &["sigma", "n", "zeta"];
    let mut table = Table::new(out, HEADERS, json, precision)?;
    for sigma in spec.values() {
        let mut states = bound_states(sigma)?;
        states.sort_by_key(|s| s.n);
        for s in states {
            table.row(&[
                Cell::Float(s.sigma),
                Cell::Int(s.n as i64),
                Cell::Float(s.zeta),
            ])?;
        }
    }
    table.finish()?;
    Ok(())
}

pub fn cmd_waveguide_cutoffs(
    config: &WaveguideConfig,
    count: usize,
    out: impl Write,
    json: bool,
    precision: usize,
) -> Result<(), CliError> {
    static HEADERS: &[&str] = &["n", "k_n", "q_n0"];
    let mut table = Table::new(out, HEADERS, json, precision)?;
    for p in cutoff_points(config, count) {
        table.row(&[Cell::Int(p.n as i64), Cell::Float(p.k), Cell::Float(p.q)])?;
    }
    table.finish()?;
    Ok(())
}

pub fn cmd_waveguide_dispersion(
    config: &WaveguideConfig,
    branches: &[usize],
    k_spec: &SweepSpec,
    out: impl Write,
    json: bool,
    precision: usize,
) -> Result<(), CliError> {
    static HEADERS: &[&str] = &["n", "k", "q"];
    let mut table = Table::new(out, HEADERS, json, precision)?;
    let ks = k_spec.values();
    for &n in branches {
        match dispersion_curve(config, n, &ks) {
            Ok(samples) => {
                for s in samples {
                    let q = s.q.map(Cell::Float).unwrap_or(Cell::Empty);
                    table.row(&[Cell::Int(n as i64), Cell::Float(s.k), q])?;
                }
            }
            Err(CoreError::EmptyCurve(n)) => {
                table.warning(&format!(
                    "branch n = {n} has no samples above cutoff in the requested k range"
                ))?;
            }
            Err(e) => return Err(e.into()),
        }
    }
    table.finish()?;
    Ok(())
}

pub fn cmd_waveguide_sectors(
    config: &WaveguideConfig,
    k_spec: &SweepSpec,
    q_spec: &SweepSpec,
    out: impl Write,
    json: bool,
    precision: usize,
) -> Result<(), CliError> {
    static HEADERS: &[&str] = &["k", "q", "sector", "T"];
    let mut table = Table::new(out, HEADERS, json, precision)?;
    if !config.sector_ii_exists() {
        table.warning("eps_b <= eps_m: the low side does not propagate, sector II is absent")?;
    }
    for k in k_spec.values() {
        for q in q_spec.values() {
            let point = ModePoint::new(k, q)?;
            let mapped = map_parameters(config, &point);
            if !matches!(mapped.regime, Regime::Scattering { .. }) {
                continue; // the sector grid lives below line 1
            }
            let t = transverse_transmission(config, &point)?;
            let sector: &'static str = match t.sector {
                junction_core::waveguide::Sector::I => "I",
                junction_core::waveguide::Sector::II => "II",
                junction_core::waveguide::Sector::Boundary => "boundary",
            };
            table.row(&[
                Cell::Float(k),
                Cell::Float(q),
                Cell::Str(sector),
                Cell::Float(t.transmission),
            ])?;
        }
    }
    table.finish()?;
    Ok(())
}
