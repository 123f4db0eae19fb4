//! Shared fixtures for the benchmark targets.

use ris_core::geometry::{unit_direction, ArrayGeometry, Vec3};
use ris_core::synthesis::Scenario;
use ris_core::unitcell::UnitCellResponse;

/// The reference measurement scene: 20×20 lattice on 2.3 mm pitch, feed at
/// 45°/0.2 m, receiver on the normal at 0.2 m, configured at 27.5 GHz.
pub fn reference_scene() -> (Scenario, ArrayGeometry, UnitCellResponse) {
    let scenario = Scenario::new(
        unit_direction(45.0, 0.0) * 0.2,
        Vec3::new(0.0, 0.0, 0.2),
        Vec3::new(0.0, 0.0, 1.0),
        27.5,
        (23.5, 29.5),
        24.5,
        1.0,
    )
    .expect("reference scenario is valid");
    let geometry = ArrayGeometry::new(20, 20, 2.3e-3).expect("reference lattice is valid");
    (scenario, geometry, UnitCellResponse::default())
}

/// An inclusive frequency grid across the supported band.
pub fn band_grid(n_points: usize) -> Vec<f64> {
    if n_points == 1 {
        return vec![23.5];
    }
    let step = (29.5 - 23.5) / (n_points - 1) as f64;
    (0..n_points).map(|i| 23.5 + step * i as f64).collect()
}
