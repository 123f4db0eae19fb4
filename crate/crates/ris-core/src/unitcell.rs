//! Two-state complex reflection coefficient of one unit cell.
//!
//! The response is a per-state table of (frequency, magnitude, phase)
//! samples with piecewise-linear interpolation between knots. Magnitudes are
//! interpolated directly; phases are interpolated on their unwrapped table
//! values and only wrapped on output, so a table running from −215° to −160°
//! stays on that branch instead of jumping through ±180°. Out-of-band
//! queries are errors, not extrapolations.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::wrap_deg;

/// Switch condition of a unit cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellState {
    On,
    Off,
}

impl CellState {
    /// `'1'` for On, `'0'` for Off.
    pub fn bit_char(self) -> char {
        match self {
            CellState::On => '1',
            CellState::Off => '0',
        }
    }
}

/// One table knot: frequency in GHz, reflection magnitude (dimensionless,
/// in (0, 1]), and reflection phase in degrees (unwrapped).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResponseSample {
    pub freq_ghz: f64,
    pub magnitude: f64,
    pub phase_deg: f64,
}

impl ResponseSample {
    pub fn new(freq_ghz: f64, magnitude: f64, phase_deg: f64) -> Self {
        ResponseSample {
            freq_ghz,
            magnitude,
            phase_deg,
        }
    }
}

/// Per-state reflection coefficient versus frequency.
///
/// Both state tables must span the same frequency range; that common span is
/// the supported band. The bundled default table carries the printed-cell
/// band-edge data: at 23.5 GHz the Off state reflects at 0.94 and the On
/// state at 0.57 with a 215° phase contrast, and at 29.5 GHz the magnitudes
/// are 0.88 and 0.74 with a 160° contrast, linear in between.
///
/// Absolute phase is a free reference: the default table fixes the Off state
/// at 0° and places the On state at minus the contrast. A 1-bit array only
/// depends on the contrast and each state's distance to the required phase
/// modulo a common offset, and user-supplied tables can override the
/// reference.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitCellResponse {
    off: Vec<ResponseSample>,
    on: Vec<ResponseSample>,
    band_ghz: (f64, f64),
    metadata: String,
}

fn validate_table(name: &str, table: &[ResponseSample]) -> Result<()> {
    if table.is_empty() {
        return Err(Error::validation(name, "table must have at least one knot"));
    }
    for s in table {
        if !s.freq_ghz.is_finite() || s.freq_ghz <= 0.0 {
            return Err(Error::validation(
                name,
                format!("knot frequency must be positive and finite, got {}", s.freq_ghz),
            ));
        }
        if !(s.magnitude > 0.0 && s.magnitude <= 1.0) {
            return Err(Error::validation(
                name,
                format!(
                    "magnitude at {} GHz must lie in (0, 1], got {}",
                    s.freq_ghz, s.magnitude
                ),
            ));
        }
        if !s.phase_deg.is_finite() {
            return Err(Error::validation(
                name,
                format!("phase at {} GHz must be finite", s.freq_ghz),
            ));
        }
    }
    for pair in table.windows(2) {
        if pair[1].freq_ghz <= pair[0].freq_ghz {
            return Err(Error::validation(
                name,
                format!(
                    "knot frequencies must be strictly increasing ({} then {})",
                    pair[0].freq_ghz, pair[1].freq_ghz
                ),
            ));
        }
    }
    Ok(())
}

/// Linear interpolation over a validated table. Returns (magnitude,
/// unwrapped phase). The `(1−t)·a + t·b` form returns knot values exactly
/// when the query lands on a knot.
fn interpolate(table: &[ResponseSample], f_ghz: f64) -> (f64, f64) {
    if table.len() == 1 {
        return (table[0].magnitude, table[0].phase_deg);
    }
    let seg = table
        .windows(2)
        .position(|pair| f_ghz <= pair[1].freq_ghz)
        .unwrap_or(table.len() - 2);
    let (a, b) = (&table[seg], &table[seg + 1]);
    let t = (f_ghz - a.freq_ghz) / (b.freq_ghz - a.freq_ghz);
    (
        (1.0 - t) * a.magnitude + t * b.magnitude,
        (1.0 - t) * a.phase_deg + t * b.phase_deg,
    )
}

impl UnitCellResponse {
    /// Build a response from per-state tables.
    ///
    /// Both tables must be non-empty, strictly increasing in frequency, with
    /// magnitudes in (0, 1], and must start and end at the same frequencies;
    /// that shared span becomes the supported band.
    pub fn new(off: Vec<ResponseSample>, on: Vec<ResponseSample>) -> Result<Self> {
        validate_table("unitcell.off", &off)?;
        validate_table("unitcell.on", &on)?;
        let off_span = (off[0].freq_ghz, off[off.len() - 1].freq_ghz);
        let on_span = (on[0].freq_ghz, on[on.len() - 1].freq_ghz);
        if off_span != on_span {
            return Err(Error::validation(
                "unitcell",
                format!(
                    "state tables must span the same frequency range, got off {:?} and on {:?} GHz",
                    off_span, on_span
                ),
            ));
        }
        if off.len() == 1 && off_span.0 == off_span.1 {
            return Err(Error::validation(
                "unitcell",
                "a single-knot table has a zero-width band; provide two knots",
            ));
        }
        Ok(UnitCellResponse {
            off,
            on,
            band_ghz: off_span,
            metadata: String::new(),
        })
    }

    /// Attach a free-text descriptor (substrate, switch, provenance).
    pub fn with_metadata(mut self, metadata: impl Into<String>) -> Self {
        self.metadata = metadata.into();
        self
    }

    /// A lossless, frequency-flat two-state cell: |Γ| = 1 for both states at
    /// every frequency, constant phases. Supported from 1 GHz to 1 THz.
    pub fn ideal(phase_on_deg: f64, phase_off_deg: f64) -> Self {
        let flat = |phase: f64| {
            vec![
                ResponseSample::new(1.0, 1.0, phase),
                ResponseSample::new(1000.0, 1.0, phase),
            ]
        };
        UnitCellResponse {
            off: flat(phase_off_deg),
            on: flat(phase_on_deg),
            band_ghz: (1.0, 1000.0),
            metadata: "ideal lossless cell".to_string(),
        }
    }

    /// Supported band (f_lo, f_hi) in GHz.
    pub fn band_ghz(&self) -> (f64, f64) {
        self.band_ghz
    }

    pub fn metadata(&self) -> &str {
        &self.metadata
    }

    fn table(&self, state: CellState) -> &[ResponseSample] {
        match state {
            CellState::On => &self.on,
            CellState::Off => &self.off,
        }
    }

    fn check_band(&self, f_ghz: f64) -> Result<()> {
        let (lo, hi) = self.band_ghz;
        if !(f_ghz >= lo && f_ghz <= hi) {
            return Err(Error::OutOfBand {
                f_ghz,
                f_lo_ghz: lo,
                f_hi_ghz: hi,
            });
        }
        Ok(())
    }

    /// Interpolated reflection magnitude at an in-band frequency. Knot
    /// queries return the tabulated value exactly.
    pub fn magnitude(&self, f_ghz: f64, state: CellState) -> Result<f64> {
        self.check_band(f_ghz)?;
        Ok(interpolate(self.table(state), f_ghz).0)
    }

    /// Interpolated reflection phase at an in-band frequency, wrapped to
    /// (−180, 180]. Interpolation happens on the unwrapped table values.
    pub fn state_phase(&self, f_ghz: f64, state: CellState) -> Result<f64> {
        self.check_band(f_ghz)?;
        Ok(wrap_deg(interpolate(self.table(state), f_ghz).1))
    }

    /// Complex reflection coefficient Γ at an in-band frequency.
    pub fn reflection(&self, f_ghz: f64, state: CellState) -> Result<Complex64> {
        self.check_band(f_ghz)?;
        let (mag, phase_deg) = interpolate(self.table(state), f_ghz);
        Ok(Complex64::from_polar(mag, phase_deg.to_radians()))
    }
}

impl Default for UnitCellResponse {
    /// The bundled two-knot table for the printed cell (see the type-level
    /// docs for the knot values).
    fn default() -> Self {
        UnitCellResponse {
            off: vec![
                ResponseSample::new(23.5, 0.94, 0.0),
                ResponseSample::new(29.5, 0.88, 0.0),
            ],
            on: vec![
                ResponseSample::new(23.5, 0.57, -215.0),
                ResponseSample::new(29.5, 0.74, -160.0),
            ],
            band_ghz: (23.5, 29.5),
            metadata: "printed cell, AF32 glass substrate, VO2 switch (4 ohm on, 1 kohm off)"
                .to_string(),
        }
    }
}

/// Phase contrast `wrap[0,360)(phase_off − phase_on)` at an in-band
/// frequency, the quantity usually quoted for a 1-bit cell.
pub fn phase_contrast_deg(resp: &UnitCellResponse, f_ghz: f64) -> Result<f64> {
    let d = resp.state_phase(f_ghz, CellState::Off)? - resp.state_phase(f_ghz, CellState::On)?;
    Ok(d.rem_euclid(360.0))
}
