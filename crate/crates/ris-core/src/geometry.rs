//! Positions, directions, path lengths, and angles for the cell lattice,
//! feed, and observation points.
//!
//! Conventions: the array lies in the z = 0 plane centered on the origin,
//! +z is the panel normal (boresight), columns run along x and rows along y.
//! All lengths are meters, all angles degrees unless stated otherwise.

use crate::error::{Error, Result};

/// A position or direction in meters.
///
/// Components must be finite; construction asserts this.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 {
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    /// # Panics
    ///
    /// Panics if any component is NaN or infinite.
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        assert!(
            x.is_finite() && y.is_finite() && z.is_finite(),
            "Vec3 components must be finite, got ({x}, {y}, {z})"
        );
        Vec3 { x, y, z }
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Unit vector in the direction of `self`. Zero-length input is an error.
    pub fn normalized(self) -> Result<Vec3> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::DegenerateGeometry(
                "cannot normalize a zero-length vector".to_string(),
            ));
        }
        Ok(Vec3 {
            x: self.x / n,
            y: self.y / n,
            z: self.z / n,
        })
    }
}

impl std::ops::Add for Vec3 {
    type Output = Vec3;
    fn add(self, rhs: Vec3) -> Vec3 {
        Vec3 {
            x: self.x + rhs.x,
            y: self.y + rhs.y,
            z: self.z + rhs.z,
        }
    }
}

impl std::ops::Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: Vec3) -> Vec3 {
        Vec3 {
            x: self.x - rhs.x,
            y: self.y - rhs.y,
            z: self.z - rhs.z,
        }
    }
}

impl std::ops::Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3 {
            x: self.x * s,
            y: self.y * s,
            z: self.z * s,
        }
    }
}

impl std::ops::Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3 {
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }
}

/// Euclidean distance between two points in meters.
pub fn path_length(a: Vec3, b: Vec3) -> f64 {
    (a - b).norm()
}

/// Unit vector for a polar angle `theta_deg` measured from +z and an azimuth
/// `phi_deg` measured from +x toward +y. `phi_deg = 0` keeps the direction in
/// the xz-plane.
pub fn unit_direction(theta_deg: f64, phi_deg: f64) -> Vec3 {
    let theta = theta_deg.to_radians();
    let phi = phi_deg.to_radians();
    Vec3 {
        x: theta.sin() * phi.cos(),
        y: theta.sin() * phi.sin(),
        z: theta.cos(),
    }
}

/// Wrap an angle in degrees into (−180, 180].
pub fn wrap_deg(deg: f64) -> f64 {
    let r = deg.rem_euclid(360.0);
    if r > 180.0 {
        r - 360.0
    } else {
        r
    }
}

/// Circular (geodesic) distance between two angles in degrees, in [0, 180].
/// Folding |a − b| keeps the result bitwise symmetric in its arguments.
pub fn circular_distance_deg(a_deg: f64, b_deg: f64) -> f64 {
    let d = (a_deg - b_deg).abs().rem_euclid(360.0);
    if d > 180.0 {
        360.0 - d
    } else {
        d
    }
}

/// The rectangular cell lattice: `n_rows` × `n_cols` cells on a `period_m`
/// pitch, centered on the origin in the z = 0 plane.
///
/// Cell (i, j) sits at `((j − (n_cols−1)/2)·period, (i − (n_rows−1)/2)·period, 0)`,
/// so column index j selects an x position and row index i a y position. The
/// lattice carries no absolute offset; scene placement lives in the scenario.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArrayGeometry {
    n_rows: usize,
    n_cols: usize,
    period_m: f64,
}

impl ArrayGeometry {
    pub fn new(n_rows: usize, n_cols: usize, period_m: f64) -> Result<Self> {
        if n_rows == 0 {
            return Err(Error::validation("n_rows", "must be at least 1"));
        }
        if n_cols == 0 {
            return Err(Error::validation("n_cols", "must be at least 1"));
        }
        if !(period_m > 0.0) || !period_m.is_finite() {
            return Err(Error::validation(
                "period_m",
                format!("must be a positive finite length, got {period_m}"),
            ));
        }
        Ok(ArrayGeometry {
            n_rows,
            n_cols,
            period_m,
        })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn period_m(&self) -> f64 {
        self.period_m
    }

    /// Center of cell (row, col).
    pub fn cell_center(&self, row: usize, col: usize) -> Vec3 {
        debug_assert!(row < self.n_rows && col < self.n_cols);
        Vec3 {
            x: (col as f64 - (self.n_cols as f64 - 1.0) / 2.0) * self.period_m,
            y: (row as f64 - (self.n_rows as f64 - 1.0) / 2.0) * self.period_m,
            z: 0.0,
        }
    }

    /// Center of a column: the cell x position at y = 0.
    pub fn column_center(&self, col: usize) -> Vec3 {
        debug_assert!(col < self.n_cols);
        Vec3 {
            x: (col as f64 - (self.n_cols as f64 - 1.0) / 2.0) * self.period_m,
            y: 0.0,
            z: 0.0,
        }
    }

    /// All cell centers in row-major order (row 0 first, columns left to
    /// right within a row).
    pub fn cell_centers(&self) -> Vec<Vec3> {
        let mut centers = Vec::with_capacity(self.n_rows * self.n_cols);
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                centers.push(self.cell_center(i, j));
            }
        }
        centers
    }

    /// Full x extent of the lattice, `(n_cols − 1) · period`.
    pub fn extent_x_m(&self) -> f64 {
        (self.n_cols as f64 - 1.0) * self.period_m
    }

    /// Full y extent of the lattice, `(n_rows − 1) · period`.
    pub fn extent_y_m(&self) -> f64 {
        (self.n_rows as f64 - 1.0) * self.period_m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cell_sits_at_origin() {
        let geom = ArrayGeometry::new(1, 1, 2.3e-3).unwrap();
        assert_eq!(geom.cell_centers(), vec![Vec3::ZERO]);
    }

    #[test]
    fn two_cells_are_symmetric_about_origin() {
        let geom = ArrayGeometry::new(1, 2, 2.3e-3).unwrap();
        let centers = geom.cell_centers();
        assert_eq!(centers.len(), 2);
        assert!((centers[0].x + 1.15e-3).abs() < 1e-15);
        assert!((centers[1].x - 1.15e-3).abs() < 1e-15);
        assert_eq!(centers[0].y, 0.0);
        assert_eq!(centers[1].y, 0.0);
    }

    #[test]
    fn twenty_by_twenty_first_cell() {
        // (0 − 9.5) · 2.3 mm = −21.85 mm
        let geom = ArrayGeometry::new(20, 20, 2.3e-3).unwrap();
        let first = geom.cell_center(0, 0);
        assert!((first.x - (-21.85e-3)).abs() < 1e-12);
        assert!((first.y - (-21.85e-3)).abs() < 1e-12);
    }

    #[test]
    fn centroid_is_the_origin() {
        let geom = ArrayGeometry::new(7, 12, 1.7e-3).unwrap();
        let centers = geom.cell_centers();
        let n = centers.len() as f64;
        let cx: f64 = centers.iter().map(|c| c.x).sum::<f64>() / n;
        let cy: f64 = centers.iter().map(|c| c.y).sum::<f64>() / n;
        assert!(cx.abs() < 1e-15);
        assert!(cy.abs() < 1e-15);
    }

    #[test]
    fn x_extent_is_exact() {
        for (rows, cols, period) in [(20, 20, 2.3e-3), (3, 11, 1.0e-3), (1, 2, 0.7e-3)] {
            let geom = ArrayGeometry::new(rows, cols, period).unwrap();
            let centers = geom.cell_centers();
            let max = centers.iter().map(|c| c.x).fold(f64::MIN, f64::max);
            let min = centers.iter().map(|c| c.x).fold(f64::MAX, f64::min);
            assert_eq!(max - min, geom.extent_x_m());
        }
    }

    #[test]
    fn rejects_empty_or_flat_lattices() {
        assert!(ArrayGeometry::new(0, 5, 1e-3).is_err());
        assert!(ArrayGeometry::new(5, 0, 1e-3).is_err());
        assert!(ArrayGeometry::new(5, 5, 0.0).is_err());
        assert!(ArrayGeometry::new(5, 5, -1e-3).is_err());
    }

    #[test]
    fn path_length_examples() {
        let a = Vec3::new(0.0, 0.0, 0.0);
        let b = Vec3::new(0.0, 0.0, 0.2);
        assert!((path_length(a, b) - 0.2).abs() < 1e-15);
        assert_eq!(path_length(b, b), 0.0);
        // 0.2 · (sin 45°, 0, cos 45°) has magnitude 0.2
        let c = Vec3::new(-0.1414, 0.0, 0.1414);
        assert!((path_length(c, Vec3::ZERO) - 0.19997).abs() < 1e-4);
    }

    #[test]
    fn unit_direction_examples() {
        let boresight = unit_direction(0.0, 0.0);
        assert!((boresight.z - 1.0).abs() < 1e-15);
        assert!(boresight.x.abs() < 1e-15 && boresight.y.abs() < 1e-15);

        let d45 = unit_direction(45.0, 0.0);
        assert!((d45.x - 0.7071067811865476).abs() < 1e-12);
        assert!(d45.y.abs() < 1e-15);
        assert!((d45.z - 0.7071067811865476).abs() < 1e-12);

        let dy = unit_direction(90.0, 90.0);
        assert!(dy.x.abs() < 1e-15);
        assert!((dy.y - 1.0).abs() < 1e-12);
        assert!(dy.z.abs() < 1e-12);
    }

    #[test]
    fn wrap_deg_convention() {
        assert_eq!(wrap_deg(180.0), 180.0);
        assert_eq!(wrap_deg(-180.0), 180.0);
        assert_eq!(wrap_deg(0.0), 0.0);
        assert_eq!(wrap_deg(-215.0), 145.0);
        assert_eq!(wrap_deg(360.0), 0.0);
        assert_eq!(wrap_deg(540.0), 180.0);
        assert!((wrap_deg(190.0) - (-170.0)).abs() < 1e-12);
    }

    #[test]
    #[should_panic]
    fn vec3_rejects_nan() {
        let _ = Vec3::new(f64::NAN, 0.0, 0.0);
    }
}
