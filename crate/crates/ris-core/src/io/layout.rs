//! SVG rendering of the printed-array layout.
//!
//! Documentation-grade, not fabrication-grade: each cell is drawn as an
//! H-shaped resonator (wide main dipole branch along x, narrow arms along y)
//! with thin bias segments joining the arms of neighboring cells in a
//! column. The switch region in the middle of the main branch is filled for
//! On columns and left as an open slot for Off columns. User units are
//! millimeters and the drawn cell pitch equals the lattice period.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::geometry::ArrayGeometry;
use crate::synthesis::ColumnConfig;
use crate::unitcell::CellState;

/// Parametric resonator dimensions in millimeters. The defaults are
/// placeholder values shaped like the printed cell (wide main branch,
/// narrow arms); override them when exact artwork dimensions are known.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellDims {
    /// Main dipole branch length along x.
    pub main_len_mm: f64,
    /// Main branch width along y.
    pub main_w_mm: f64,
    /// Arm extent along y at each end of the main branch.
    pub arm_len_mm: f64,
    /// Arm width along x.
    pub arm_w_mm: f64,
    /// Switch slot length in the middle of the main branch.
    pub switch_gap_mm: f64,
}

impl Default for CellDims {
    fn default() -> Self {
        CellDims {
            main_len_mm: 2.0,
            main_w_mm: 0.55,
            arm_len_mm: 1.9,
            arm_w_mm: 0.18,
            switch_gap_mm: 0.3,
        }
    }
}

impl CellDims {
    fn validate(&self, period_mm: f64) -> Result<()> {
        let all = [
            ("cell_dims.main_len_mm", self.main_len_mm),
            ("cell_dims.main_w_mm", self.main_w_mm),
            ("cell_dims.arm_len_mm", self.arm_len_mm),
            ("cell_dims.arm_w_mm", self.arm_w_mm),
            ("cell_dims.switch_gap_mm", self.switch_gap_mm),
        ];
        for (field, value) in all {
            if !(value > 0.0) || !value.is_finite() {
                return Err(Error::validation(field, format!("must be positive, got {value}")));
            }
        }
        for (field, value) in [
            ("cell_dims.main_len_mm", self.main_len_mm),
            ("cell_dims.main_w_mm", self.main_w_mm),
            ("cell_dims.arm_len_mm", self.arm_len_mm),
        ] {
            if value > period_mm {
                return Err(Error::validation(
                    field,
                    format!("{value} mm exceeds the {period_mm} mm cell period"),
                ));
            }
        }
        if self.switch_gap_mm + 2.0 * self.arm_w_mm >= self.main_len_mm {
            return Err(Error::validation(
                "cell_dims.switch_gap_mm",
                "switch slot leaves no main branch between the arms",
            ));
        }
        Ok(())
    }
}

fn rect(out: &mut String, class: &str, x: f64, y: f64, w: f64, h: f64) {
    let _ = writeln!(
        out,
        r#"    <rect class="{class}" x="{x}" y="{y}" width="{w}" height="{h}"/>"#
    );
}

/// Render the configured lattice as an SVG document string.
pub fn layout_svg(geom: &ArrayGeometry, config: &ColumnConfig, dims: &CellDims) -> Result<String> {
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
    let period = geom.period_m() * 1e3;
    dims.validate(period)?;

    let margin = period;
    let width = geom.n_cols() as f64 * period + 2.0 * margin;
    let height = geom.n_rows() as f64 * period + 2.0 * margin;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}mm" height="{height}mm" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        "  <desc>{} x {} cell array, {period} mm pitch, column states {}</desc>",
        geom.n_rows(),
        geom.n_cols(),
        config
    );
    let _ = writeln!(
        out,
        r#"  <style>.metal{{fill:#1a1a1a}}.switch{{fill:#3a7d44}}.bias{{fill:#1a1a1a}}.panel{{fill:none;stroke:#888;stroke-width:0.05}}</style>"#
    );

    // shared cell artwork, centered on (0, 0)
    let half_len = dims.main_len_mm / 2.0;
    let branch_w = dims.main_w_mm;
    let arm_h = dims.arm_len_mm;
    let gap = dims.switch_gap_mm;
    let _ = writeln!(out, "  <defs>");
    for (id, with_switch) in [("cell-off", false), ("cell-on", true)] {
        let _ = writeln!(out, r#"    <g id="{id}">"#);
        let mut body = String::new();
        // arms at both ends of the main branch
        rect(&mut body, "metal", -half_len, -arm_h / 2.0, dims.arm_w_mm, arm_h);
        rect(&mut body, "metal", half_len - dims.arm_w_mm, -arm_h / 2.0, dims.arm_w_mm, arm_h);
        // main branch halves on either side of the switch slot
        rect(&mut body, "metal", -half_len, -branch_w / 2.0, half_len - gap / 2.0, branch_w);
        rect(&mut body, "metal", gap / 2.0, -branch_w / 2.0, half_len - gap / 2.0, branch_w);
        if with_switch {
            rect(&mut body, "switch", -gap / 2.0, -branch_w / 2.0, gap, branch_w);
        }
        out.push_str(&body.replace("    <rect", "      <rect"));
        let _ = writeln!(out, "    </g>");
    }
    let _ = writeln!(out, "  </defs>");

    let _ = writeln!(
        out,
        r#"  <rect class="panel" x="{margin}" y="{margin}" width="{}" height="{}"/>"#,
        geom.n_cols() as f64 * period,
        geom.n_rows() as f64 * period
    );

    for j in 0..geom.n_cols() {
        let state = config.state(j);
        let class = match state {
            CellState::On => "on",
            CellState::Off => "off",
        };
        let href = match state {
            CellState::On => "#cell-on",
            CellState::Off => "#cell-off",
        };
        let cx = margin + (j as f64 + 0.5) * period;
        let _ = writeln!(out, r#"  <g class="{class}" id="col-{j}">"#);
        for i in 0..geom.n_rows() {
            let cy = margin + (i as f64 + 0.5) * period;
            let _ = writeln!(out, r#"    <use href="{href}" x="{cx}" y="{cy}"/>"#);
        }
        // bias segments joining the arms of neighboring cells in the column
        for i in 0..geom.n_rows().saturating_sub(1) {
            let top = margin + (i as f64 + 0.5) * period + arm_h / 2.0;
            let len = period - arm_h;
            if len > 0.0 {
                rect(&mut out, "bias", cx - half_len, top, dims.arm_w_mm, len);
                rect(&mut out, "bias", cx + half_len - dims.arm_w_mm, top, dims.arm_w_mm, len);
            }
        }
        let _ = writeln!(out, "  </g>");
    }
    let _ = writeln!(out, "</svg>");
    Ok(out)
}

/// Render and write the layout SVG.
pub fn export_layout(
    geom: &ArrayGeometry,
    config: &ColumnConfig,
    dims: &CellDims,
    path: &Path,
) -> Result<()> {
    let svg = layout_svg(geom, config, dims)?;
    std::fs::write(path, svg).map_err(|e| Error::Io {
        context: format!("writing SVG to {}", path.display()),
        source: e,
    })
}
