//! Derived metrics: enhancement over the all-OFF baseline, beam pointing,
//! and per-cell phase error.

use crate::error::{Error, Result};
use crate::geometry::{path_length, wrap_deg, ArrayGeometry};
use crate::solver::{frequency_sweep, PatternScan};
use crate::synthesis::{uniform_config, ColumnConfig, Scenario};
use crate::unitcell::{CellState, UnitCellResponse};
use crate::wavelength_m;

/// Received power of a configuration versus the all-OFF baseline at the
/// scenario receiver, per frequency. The headline figure is the band
/// minimum, since the claim of interest is a band-wide floor.
#[derive(Debug, Clone, PartialEq)]
pub struct EnhancementReport {
    pub freqs_ghz: Vec<f64>,
    pub configured_db: Vec<f64>,
    pub all_off_db: Vec<f64>,
    /// `configured_db − all_off_db`, exactly.
    pub enhancement_db: Vec<f64>,
    pub min_enhancement_db: f64,
}

/// Per-cell phase error of a quantized configuration against the ideal
/// continuous profile, plus row-level statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseErrorReport {
    pub freq_ghz: f64,
    pub n_rows: usize,
    pub n_cols: usize,
    /// Ideal continuous phase per cell, row-major, degrees in (−180, 180].
    pub ideal_deg: Vec<f64>,
    /// Phase the cell's column state actually applies, row-major.
    pub achieved_deg: Vec<f64>,
    /// Circular difference achieved − ideal, row-major, in (−180, 180].
    pub error_deg: Vec<f64>,
    pub rms_error_deg: f64,
    pub max_abs_error_deg: f64,
    /// RMS of the circular error over each row.
    pub row_rms_deg: Vec<f64>,
}

/// Sweep the configured lattice and the all-OFF baseline over `freqs_ghz`
/// at the scenario receiver and difference them in dB.
pub fn enhancement_db(
    scenario: &Scenario,
    geom: &ArrayGeometry,
    resp: &UnitCellResponse,
    config: &ColumnConfig,
    freqs_ghz: &[f64],
) -> Result<EnhancementReport> {
    if freqs_ghz.is_empty() {
        return Err(Error::validation("freqs", "frequency list is empty"));
    }
    let configured = frequency_sweep(scenario, geom, config, resp, freqs_ghz, scenario.rx_pos)?;
    let baseline_config = uniform_config(geom, CellState::Off);
    let baseline = frequency_sweep(
        scenario,
        geom,
        &baseline_config,
        resp,
        freqs_ghz,
        scenario.rx_pos,
    )?;
    let configured_db: Vec<f64> = configured.iter().map(|s| s.power_db).collect();
    let all_off_db: Vec<f64> = baseline.iter().map(|s| s.power_db).collect();
    let enhancement: Vec<f64> = configured_db
        .iter()
        .zip(&all_off_db)
        .map(|(c, o)| c - o)
        .collect();
    let min = enhancement.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(EnhancementReport {
        freqs_ghz: freqs_ghz.to_vec(),
        configured_db,
        all_off_db,
        enhancement_db: enhancement,
        min_enhancement_db: min,
    })
}

/// The scan angle carrying the most power. Ties go to the smallest absolute
/// angle so a symmetric flat top reports its center-most direction.
pub fn beam_direction(scan: &PatternScan) -> Result<f64> {
    if scan.samples.is_empty() {
        return Err(Error::validation("scan", "pattern scan is empty"));
    }
    let mut best_angle = scan.angles_deg[0];
    let mut best_power = scan.samples[0].power_db;
    for (angle, sample) in scan.angles_deg.iter().zip(&scan.samples).skip(1) {
        if sample.power_db > best_power
            || (sample.power_db == best_power && angle.abs() < best_angle.abs())
        {
            best_power = sample.power_db;
            best_angle = *angle;
        }
    }
    Ok(best_angle)
}

/// Compare each cell's applied state phase against the ideal continuous
/// profile for the true feed→cell→receiver round path.
///
/// The synthesis step collimates toward the target direction using the feed
/// leg only, evaluated at the column center; cells away from the column
/// center row travel a longer round path, which is exactly why end-of-column
/// cells err more. The phase reference is anchored so the cell nearest the
/// panel center (index `(n_rows/2, n_cols/2)`) has zero error.
pub fn phase_error_report(
    scenario: &Scenario,
    geom: &ArrayGeometry,
    resp: &UnitCellResponse,
    config: &ColumnConfig,
    f_ghz: f64,
) -> Result<PhaseErrorReport> {
    if config.len() != geom.n_cols() {
        return Err(Error::validation(
            "config",
            format!(
                "configuration has {} bits but the lattice has {} columns",
                config.len(),
                geom.n_cols()
            ),
        ));
    }
    let k_deg = 360.0 / wavelength_m(f_ghz);
    let mut state_phase = Vec::with_capacity(geom.n_cols());
    for j in 0..geom.n_cols() {
        state_phase.push(resp.state_phase(f_ghz, config.state(j))?);
    }

    let round_path = |row: usize, col: usize| {
        let cell = geom.cell_center(row, col);
        path_length(scenario.tx_pos, cell) + path_length(scenario.rx_pos, cell)
    };
    // arrival-phase deviation per cell, before anchoring
    let delta =
        |row: usize, col: usize| wrap_deg(state_phase[col] - k_deg * round_path(row, col));
    let ref_delta = delta(geom.n_rows() / 2, geom.n_cols() / 2);

    let n_cells = geom.n_rows() * geom.n_cols();
    let mut ideal = Vec::with_capacity(n_cells);
    let mut achieved = Vec::with_capacity(n_cells);
    let mut error = Vec::with_capacity(n_cells);
    let mut row_rms = Vec::with_capacity(geom.n_rows());
    let mut sum_sq = 0.0;
    let mut max_abs: f64 = 0.0;
    for i in 0..geom.n_rows() {
        let mut row_sum_sq = 0.0;
        for j in 0..geom.n_cols() {
            let e = wrap_deg(delta(i, j) - ref_delta);
            // the continuous profile the cell should apply to co-phase the
            // round path, anchored so the center cell has zero error
            ideal.push(wrap_deg(k_deg * round_path(i, j) + ref_delta));
            achieved.push(state_phase[j]);
            error.push(e);
            row_sum_sq += e * e;
            sum_sq += e * e;
            max_abs = max_abs.max(e.abs());
        }
        row_rms.push((row_sum_sq / geom.n_cols() as f64).sqrt());
    }
    Ok(PhaseErrorReport {
        freq_ghz: f_ghz,
        n_rows: geom.n_rows(),
        n_cols: geom.n_cols(),
        ideal_deg: ideal,
        achieved_deg: achieved,
        error_deg: error,
        rms_error_deg: (sum_sq / n_cells as f64).sqrt(),
        max_abs_error_deg: max_abs,
        row_rms_deg: row_rms,
    })
}
