//! Scenario files, CSV export, and SVG layout rendering.
//!
//! One scenario file drives every operation, so a whole experiment is a
//! single reproducible artifact. The file is TOML with five sections and
//! strict (unknown-key-rejecting) parsing:
//!
//! ```toml
//! [geometry]
//! rows = 20
//! cols = 20
//! period_mm = 2.3
//!
//! [unitcell]
//! response = "default"        # or inline per-state tables:
//! # off = [[23.5, 0.94, 0.0], [29.5, 0.88, 0.0]]   # [GHz, magnitude, degrees]
//! # on  = [[23.5, 0.57, -215.0], [29.5, 0.74, -160.0]]
//!
//! [scenario]
//! tx_theta_deg = 45.0         # feed polar angle off +z, xz-plane
//! tx_distance_m = 0.2
//! rx_theta_deg = 0.0
//! rx_distance_m = 0.2
//! reflect_theta_deg = 0.0     # target reflection direction
//! design_freq_ghz = 27.5
//! band_ghz = [23.5, 29.5]
//! q_feed = 24.5               # optional; default matches a 20 dBi feed
//! q_elem = 1.0                # optional; default 1
//!
//! [sweep]
//! f_start = 23.5
//! f_stop = 29.5
//! n_points = 61
//!
//! [scan]
//! radius_m = 0.2
//! angle_start = -60.0
//! angle_stop = 60.0
//! step = 0.5
//! ```

mod csv;
mod layout;
mod scenario;

pub use csv::{export_csv, ToCsv};
pub use layout::{export_layout, layout_svg, CellDims};
pub use scenario::{load_scenario, parse_scenario_str, LoadedScenario, ScanSpec, SweepSpec};
