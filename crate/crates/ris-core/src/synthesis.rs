//! Per-column phase synthesis and 1-bit quantization.
//!
//! The required reflection phase for a column is the standard near-field
//! reflectarray condition: the spherical feed path to the column minus the
//! projection of the column position onto the target direction, scaled by
//! 2π/λ at the design frequency. Each column is then assigned whichever
//! switch state sits closer (in circular phase distance) to that requirement.
//! Configuration happens once at the design frequency; band sweeps reuse the
//! same bits.

use crate::error::{Error, Result};
use crate::geometry::{circular_distance_deg, path_length, wrap_deg, ArrayGeometry, Vec3};
use crate::unitcell::{CellState, UnitCellResponse};
use crate::wavelength_m;

/// The scene around the panel: feed and receiver placement, target
/// reflection direction, frequencies, and the cosine-power pattern
/// exponents for the feed and the cell element factor.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub tx_pos: Vec3,
    pub rx_pos: Vec3,
    /// Unit target reflection direction.
    pub reflect_dir: Vec3,
    pub design_freq_ghz: f64,
    pub band_ghz: (f64, f64),
    /// Feed amplitude pattern exponent: cos(θ)^q_feed off the feed boresight.
    pub q_feed: f64,
    /// Element amplitude pattern exponent: cos(θ)^q_elem off the panel normal.
    pub q_elem: f64,
}

impl Scenario {
    pub fn new(
        tx_pos: Vec3,
        rx_pos: Vec3,
        reflect_dir: Vec3,
        design_freq_ghz: f64,
        band_ghz: (f64, f64),
        q_feed: f64,
        q_elem: f64,
    ) -> Result<Self> {
        if !(tx_pos.z > 0.0) {
            return Err(Error::validation(
                "tx_pos",
                format!("transmitter must sit in front of the panel (z > 0), got z = {}", tx_pos.z),
            ));
        }
        if !(rx_pos.z > 0.0) {
            return Err(Error::validation(
                "rx_pos",
                format!("receiver must sit in front of the panel (z > 0), got z = {}", rx_pos.z),
            ));
        }
        if (reflect_dir.norm() - 1.0).abs() > 1e-9 {
            return Err(Error::validation(
                "reflect_dir",
                format!("must be a unit vector, |v| = {}", reflect_dir.norm()),
            ));
        }
        let (f_lo, f_hi) = band_ghz;
        if !(f_lo.is_finite() && f_hi.is_finite() && f_lo > 0.0 && f_lo < f_hi) {
            return Err(Error::validation(
                "band_ghz",
                format!("band must satisfy 0 < f_lo < f_hi, got ({f_lo}, {f_hi})"),
            ));
        }
        if !(design_freq_ghz > f_lo && design_freq_ghz < f_hi) {
            return Err(Error::validation(
                "design_freq_ghz",
                format!("design frequency {design_freq_ghz} GHz must lie inside the band ({f_lo}, {f_hi})"),
            ));
        }
        if !(q_feed >= 0.0) || !q_feed.is_finite() {
            return Err(Error::validation("q_feed", "must be a finite value >= 0"));
        }
        if !(q_elem >= 0.0) || !q_elem.is_finite() {
            return Err(Error::validation("q_elem", "must be a finite value >= 0"));
        }
        Ok(Scenario {
            tx_pos,
            rx_pos,
            reflect_dir,
            design_freq_ghz,
            band_ghz,
            q_feed,
            q_elem,
        })
    }
}

/// One switch bit per column (the serial-bias control granularity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnConfig {
    bits: Vec<CellState>,
}

impl ColumnConfig {
    pub fn new(bits: Vec<CellState>) -> Self {
        ColumnConfig { bits }
    }

    /// Every column in the same state.
    pub fn uniform(n_cols: usize, state: CellState) -> Self {
        ColumnConfig {
            bits: vec![state; n_cols],
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn state(&self, col: usize) -> CellState {
        self.bits[col]
    }

    pub fn states(&self) -> &[CellState] {
        &self.bits
    }
}

impl std::fmt::Display for ColumnConfig {
    /// Bit string, `1` = On, `0` = Off, column 0 first.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for state in &self.bits {
            write!(f, "{}", state.bit_char())?;
        }
        Ok(())
    }
}

/// Required reflection phase at a column center, degrees in (−180, 180]:
///
/// Δφ = wrap( (360 / λ) · ( |tx − column| − reflect · column ) )
///
/// with λ the free-space wavelength at the design frequency. Only the feed
/// position and the target direction enter; the receiver does not.
pub fn required_phase(scenario: &Scenario, column_center: Vec3) -> f64 {
    let lambda = wavelength_m(scenario.design_freq_ghz);
    let feed_path = path_length(scenario.tx_pos, column_center);
    let progressive = scenario.reflect_dir.dot(column_center);
    wrap_deg(360.0 * (feed_path - progressive) / lambda)
}

/// The switch state whose phase sits closer (circular distance) to the
/// required phase at the design frequency. Ties go to Off.
pub fn quantize_column(
    required_deg: f64,
    resp: &UnitCellResponse,
    design_freq_ghz: f64,
) -> Result<CellState> {
    let d_off = circular_distance_deg(required_deg, resp.state_phase(design_freq_ghz, CellState::Off)?);
    let d_on = circular_distance_deg(required_deg, resp.state_phase(design_freq_ghz, CellState::On)?);
    Ok(if d_on < d_off {
        CellState::On
    } else {
        CellState::Off
    })
}

/// Quantize every column of the lattice at the scenario design frequency.
pub fn synthesize(
    scenario: &Scenario,
    geom: &ArrayGeometry,
    resp: &UnitCellResponse,
) -> Result<ColumnConfig> {
    let mut bits = Vec::with_capacity(geom.n_cols());
    for j in 0..geom.n_cols() {
        let required = required_phase(scenario, geom.column_center(j));
        bits.push(quantize_column(required, resp, scenario.design_freq_ghz)?);
    }
    Ok(ColumnConfig::new(bits))
}

/// Alias for [`ColumnConfig::uniform`] taking the lattice for its width.
pub fn uniform_config(geom: &ArrayGeometry, state: CellState) -> ColumnConfig {
    ColumnConfig::uniform(geom.n_cols(), state)
}
