//! Strict scenario-file loading.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::geometry::{unit_direction, ArrayGeometry};
use crate::solver::feed_exponent_for_gain_dbi;
use crate::synthesis::Scenario;
use crate::unitcell::{ResponseSample, UnitCellResponse};

/// Frequency-sweep request: `n_points` frequencies from `f_start` to
/// `f_stop` GHz inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub f_start_ghz: f64,
    pub f_stop_ghz: f64,
    pub n_points: usize,
}

impl SweepSpec {
    pub fn frequencies(&self) -> Vec<f64> {
        if self.n_points == 1 {
            return vec![self.f_start_ghz];
        }
        let step = (self.f_stop_ghz - self.f_start_ghz) / (self.n_points - 1) as f64;
        (0..self.n_points)
            .map(|i| {
                if i == self.n_points - 1 {
                    self.f_stop_ghz
                } else {
                    self.f_start_ghz + step * i as f64
                }
            })
            .collect()
    }
}

/// Angular-scan request: angles from `angle_start` to `angle_stop` degrees
/// on a `step` grid, observed at `radius_m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanSpec {
    pub radius_m: f64,
    pub angle_start_deg: f64,
    pub angle_stop_deg: f64,
    pub step_deg: f64,
}

impl ScanSpec {
    pub fn angles(&self) -> Vec<f64> {
        let count =
            ((self.angle_stop_deg - self.angle_start_deg) / self.step_deg + 1e-9).floor() as usize + 1;
        (0..count)
            .map(|i| self.angle_start_deg + self.step_deg * i as f64)
            .collect()
    }
}

/// Everything a scenario file describes.
#[derive(Debug, Clone)]
pub struct LoadedScenario {
    pub scenario: Scenario,
    pub geometry: ArrayGeometry,
    pub response: UnitCellResponse,
    pub sweep: SweepSpec,
    pub scan: ScanSpec,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    geometry: GeometrySection,
    unitcell: UnitCellSection,
    scenario: ScenarioSection,
    sweep: SweepSection,
    scan: ScanSection,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeometrySection {
    rows: i64,
    cols: i64,
    period_mm: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct UnitCellSection {
    response: Option<String>,
    off: Option<Vec<[f64; 3]>>,
    on: Option<Vec<[f64; 3]>>,
    metadata: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioSection {
    tx_theta_deg: f64,
    tx_distance_m: f64,
    rx_theta_deg: f64,
    rx_distance_m: f64,
    reflect_theta_deg: f64,
    design_freq_ghz: f64,
    band_ghz: [f64; 2],
    q_feed: Option<f64>,
    q_elem: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepSection {
    f_start: f64,
    f_stop: f64,
    n_points: i64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScanSection {
    radius_m: f64,
    angle_start: f64,
    angle_stop: f64,
    step: f64,
}

fn check(cond: bool, field: &str, message: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::validation(field, message))
    }
}

/// Parse scenario text. `origin` labels parse errors (usually the path).
pub fn parse_scenario_str(text: &str, origin: &str) -> Result<LoadedScenario> {
    let file: ScenarioFile = toml::from_str(text).map_err(|e| Error::Parse {
        path: origin.to_string(),
        message: e.to_string(),
    })?;

    let g = &file.geometry;
    check(g.rows >= 1, "rows", format!("must be at least 1, got {}", g.rows))?;
    check(g.cols >= 1, "cols", format!("must be at least 1, got {}", g.cols))?;
    check(
        g.period_mm.is_finite() && g.period_mm > 0.0,
        "period_mm",
        format!("must be a positive length, got {}", g.period_mm),
    )?;
    let geometry = ArrayGeometry::new(g.rows as usize, g.cols as usize, g.period_mm * 1e-3)?;

    let response = build_response(&file.unitcell)?;

    let s = &file.scenario;
    check(
        s.tx_distance_m > 0.0,
        "tx_distance_m",
        format!("must be positive, got {}", s.tx_distance_m),
    )?;
    check(
        s.rx_distance_m > 0.0,
        "rx_distance_m",
        format!("must be positive, got {}", s.rx_distance_m),
    )?;
    check(
        s.tx_theta_deg.abs() < 90.0,
        "tx_theta_deg",
        "the feed must sit in front of the panel (|theta| < 90)",
    )?;
    check(
        s.rx_theta_deg.abs() < 90.0,
        "rx_theta_deg",
        "the receiver must sit in front of the panel (|theta| < 90)",
    )?;
    let [f_lo, f_hi] = s.band_ghz;
    check(
        f_lo.is_finite() && f_hi.is_finite() && f_lo > 0.0 && f_lo < f_hi,
        "band_ghz",
        format!("band must satisfy 0 < f_lo < f_hi, got [{f_lo}, {f_hi}]"),
    )?;
    check(
        s.design_freq_ghz > f_lo && s.design_freq_ghz < f_hi,
        "design_freq_ghz",
        format!(
            "design frequency {} GHz must lie inside the band [{f_lo}, {f_hi}]",
            s.design_freq_ghz
        ),
    )?;
    let (resp_lo, resp_hi) = response.band_ghz();
    check(
        f_lo >= resp_lo && f_hi <= resp_hi,
        "band_ghz",
        format!(
            "band [{f_lo}, {f_hi}] GHz exceeds the unit-cell response support [{resp_lo}, {resp_hi}] GHz"
        ),
    )?;
    let q_feed = s.q_feed.unwrap_or_else(|| feed_exponent_for_gain_dbi(20.0));
    let q_elem = s.q_elem.unwrap_or(1.0);
    check(q_feed.is_finite() && q_feed >= 0.0, "q_feed", "must be >= 0")?;
    check(q_elem.is_finite() && q_elem >= 0.0, "q_elem", "must be >= 0")?;

    let scenario = Scenario::new(
        unit_direction(s.tx_theta_deg, 0.0) * s.tx_distance_m,
        unit_direction(s.rx_theta_deg, 0.0) * s.rx_distance_m,
        unit_direction(s.reflect_theta_deg, 0.0),
        s.design_freq_ghz,
        (f_lo, f_hi),
        q_feed,
        q_elem,
    )?;

    let sw = &file.sweep;
    check(
        sw.n_points >= 1,
        "n_points",
        format!("must be at least 1, got {}", sw.n_points),
    )?;
    check(
        sw.f_start <= sw.f_stop,
        "f_start",
        format!("sweep start {} GHz exceeds stop {} GHz", sw.f_start, sw.f_stop),
    )?;
    check(
        sw.f_start >= f_lo,
        "f_start",
        format!("sweep start {} GHz is below the band floor {f_lo} GHz", sw.f_start),
    )?;
    check(
        sw.f_stop <= f_hi,
        "f_stop",
        format!("sweep stop {} GHz is above the band ceiling {f_hi} GHz", sw.f_stop),
    )?;
    let sweep = SweepSpec {
        f_start_ghz: sw.f_start,
        f_stop_ghz: sw.f_stop,
        n_points: sw.n_points as usize,
    };

    let sc = &file.scan;
    check(
        sc.radius_m > 0.0,
        "radius_m",
        format!("must be positive, got {}", sc.radius_m),
    )?;
    check(sc.step > 0.0, "step", format!("must be positive, got {}", sc.step))?;
    check(
        sc.angle_start <= sc.angle_stop,
        "angle_start",
        format!("scan start {} exceeds stop {}", sc.angle_start, sc.angle_stop),
    )?;
    let scan = ScanSpec {
        radius_m: sc.radius_m,
        angle_start_deg: sc.angle_start,
        angle_stop_deg: sc.angle_stop,
        step_deg: sc.step,
    };

    Ok(LoadedScenario {
        scenario,
        geometry,
        response,
        sweep,
        scan,
    })
}

fn build_response(section: &UnitCellSection) -> Result<UnitCellResponse> {
    match (&section.response, &section.off, &section.on) {
        (Some(name), None, None) => {
            check(
                name == "default",
                "unitcell.response",
                format!("the only named response is \"default\", got \"{name}\""),
            )?;
            let mut resp = UnitCellResponse::default();
            if let Some(meta) = &section.metadata {
                resp = resp.with_metadata(meta.clone());
            }
            Ok(resp)
        }
        (None, Some(off), Some(on)) => {
            let to_samples = |rows: &Vec<[f64; 3]>| {
                rows.iter()
                    .map(|&[f, m, p]| ResponseSample::new(f, m, p))
                    .collect::<Vec<_>>()
            };
            let mut resp = UnitCellResponse::new(to_samples(off), to_samples(on))?;
            if let Some(meta) = &section.metadata {
                resp = resp.with_metadata(meta.clone());
            }
            Ok(resp)
        }
        _ => Err(Error::validation(
            "unitcell",
            "provide either `response = \"default\"` or both `off` and `on` tables",
        )),
    }
}

/// Load and validate a scenario file.
pub fn load_scenario(path: &Path) -> Result<LoadedScenario> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        context: format!("reading scenario file {}", path.display()),
        source: e,
    })?;
    parse_scenario_str(&text, &path.display().to_string())
}
