//! Model-level simulator for a 1-bit, column-biased reconfigurable reflecting
//! surface (RIS).
//!
//! The model is a discrete physical-optics summation: a spherical-wave feed
//! illuminates a planar lattice of unit cells, each cell reflects with a
//! two-state complex coefficient interpolated from a tabulated response, and
//! the scattered field at an observation point is the coherent sum over all
//! cells. On top of that sit the per-column phase synthesis (nearest-state
//! quantization of the required reflectarray phase), angular pattern scans,
//! frequency sweeps, and derived metrics such as the configured-vs-all-OFF
//! signal enhancement.
//!
//! Modules follow the processing chain:
//!
//! * [`geometry`] — positions, directions, the cell lattice, angle helpers.
//! * [`unitcell`] — two-state reflection coefficient versus frequency.
//! * [`synthesis`] — required column phase and ON/OFF quantization.
//! * [`solver`] — scattered-field summation, scans, sweeps.
//! * [`analysis`] — enhancement, beam pointing, per-cell phase error.
//! * [`io`] — scenario files, CSV export, SVG layout rendering.

pub mod analysis;
pub mod error;
pub mod geometry;
pub mod io;
pub mod solver;
pub mod synthesis;
pub mod unitcell;

pub use analysis::{EnhancementReport, PhaseErrorReport};
pub use error::{Error, Result};
pub use geometry::{ArrayGeometry, Vec3};
pub use solver::{FieldSample, PatternScan};
pub use synthesis::{ColumnConfig, Scenario};
pub use unitcell::{CellState, UnitCellResponse};

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT_M_PER_S: f64 = 299_792_458.0;

/// Free-space wavelength in meters for a frequency in GHz.
pub fn wavelength_m(freq_ghz: f64) -> f64 {
    SPEED_OF_LIGHT_M_PER_S / (freq_ghz * 1e9)
}
