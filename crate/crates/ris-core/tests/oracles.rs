//! Independent-oracle checks of the field solver: a naive summation coded
//! from scratch, reciprocity and translation invariance, and the triangle
//! inequality power bound.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ris_core::geometry::{ArrayGeometry, Vec3};
use ris_core::solver::{cell_gammas, scattered_field, scattered_sum};
use ris_core::synthesis::{ColumnConfig, Scenario};
use ris_core::unitcell::{CellState, ResponseSample, UnitCellResponse};

/// Naive reference sum, written independently of the solver: raw component
/// math, manual complex multiply, phases collapsed into one exponential.
fn naive_sum(
    tx: Vec3,
    aim: Vec3,
    obs: Vec3,
    cells: &[Vec3],
    gammas: &[Complex64],
    f_ghz: f64,
    q_feed: f64,
    q_elem: f64,
) -> Complex64 {
    let lambda = 299_792_458.0 / (f_ghz * 1e9);
    let k = 2.0 * std::f64::consts::PI / lambda;
    let (bx, by, bz) = (aim.x - tx.x, aim.y - tx.y, aim.z - tx.z);
    let bn = (bx * bx + by * by + bz * bz).sqrt();
    let mut re = 0.0;
    let mut im = 0.0;
    for (c, g) in cells.iter().zip(gammas) {
        let (dx, dy, dz) = (c.x - tx.x, c.y - tx.y, c.z - tx.z);
        let r1 = (dx * dx + dy * dy + dz * dz).sqrt();
        let cos_feed = (bx * dx + by * dy + bz * dz) / (bn * r1);
        let a_feed = if q_feed == 0.0 {
            1.0
        } else if cos_feed > 0.0 {
            cos_feed.powf(q_feed)
        } else {
            0.0
        };
        let (ox, oy, oz) = (obs.x - c.x, obs.y - c.y, obs.z - c.z);
        let r2 = (ox * ox + oy * oy + oz * oz).sqrt();
        let cos_obs = oz / r2;
        let a_elem = if q_elem == 0.0 {
            1.0
        } else if cos_obs > 0.0 {
            cos_obs.powf(q_elem)
        } else {
            0.0
        };
        let amp = a_feed * a_elem / (r1 * r2);
        let phase = -k * (r1 + r2);
        let (s, c_) = phase.sin_cos();
        re += amp * (c_ * g.re - s * g.im);
        im += amp * (c_ * g.im + s * g.re);
    }
    Complex64::new(re, im)
}

fn random_response(rng: &mut ChaCha8Rng) -> UnitCellResponse {
    let mag = |rng: &mut ChaCha8Rng| rng.gen_range(0.05..=1.0);
    let ph = |rng: &mut ChaCha8Rng| rng.gen_range(-360.0..360.0);
    UnitCellResponse::new(
        vec![
            ResponseSample::new(23.5, mag(rng), ph(rng)),
            ResponseSample::new(29.5, mag(rng), ph(rng)),
        ],
        vec![
            ResponseSample::new(23.5, mag(rng), ph(rng)),
            ResponseSample::new(29.5, mag(rng), ph(rng)),
        ],
    )
    .unwrap()
}

fn random_config(rng: &mut ChaCha8Rng, n_cols: usize) -> ColumnConfig {
    ColumnConfig::new(
        (0..n_cols)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    CellState::On
                } else {
                    CellState::Off
                }
            })
            .collect(),
    )
}

#[test]
fn solver_matches_naive_summation_on_small_arrays() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for case in 0..50 {
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=4);
        let period = rng.gen_range(1.0e-3..5.0e-3);
        let geom = ArrayGeometry::new(rows, cols, period).unwrap();
        let resp = random_response(&mut rng);
        let config = random_config(&mut rng, cols);
        let f = rng.gen_range(23.5..=29.5);
        let q_feed = if rng.gen_bool(0.3) { 0.0 } else { rng.gen_range(0.5..30.0) };
        let q_elem = if rng.gen_bool(0.3) { 0.0 } else { rng.gen_range(0.5..4.0) };
        let tx = Vec3::new(
            rng.gen_range(-0.1..0.1),
            rng.gen_range(-0.1..0.1),
            rng.gen_range(0.05..0.5),
        );
        let obs = Vec3::new(
            rng.gen_range(-0.2..0.2),
            rng.gen_range(-0.2..0.2),
            rng.gen_range(0.05..0.5),
        );
        let scenario = Scenario::new(
            tx,
            Vec3::new(0.0, 0.0, 0.2),
            Vec3::new(0.0, 0.0, 1.0),
            27.5,
            (23.5, 29.5),
            q_feed,
            q_elem,
        )
        .unwrap();

        let sample = scattered_field(&scenario, &geom, &config, &resp, obs, f).unwrap();
        let gammas = cell_gammas(&geom, &config, &resp, f).unwrap();
        let expected = naive_sum(tx, Vec3::ZERO, obs, &geom.cell_centers(), &gammas, f, q_feed, q_elem);
        let err = (sample.complex_field - expected).norm();
        assert!(
            err <= 1e-12 * expected.norm().max(1e-300),
            "case {case}: relative error {}",
            err / expected.norm()
        );
    }
}

#[test]
fn two_by_two_matches_a_hand_rolled_four_term_sum() {
    let geom = ArrayGeometry::new(2, 2, 2.3e-3).unwrap();
    let resp = UnitCellResponse::default();
    let config = ColumnConfig::new(vec![CellState::On, CellState::Off]);
    let tx = Vec3::new(0.14, 0.0, 0.14);
    let obs = Vec3::new(-0.02, 0.01, 0.2);
    let scenario = Scenario::new(
        tx,
        Vec3::new(0.0, 0.0, 0.2),
        Vec3::new(0.0, 0.0, 1.0),
        27.5,
        (23.5, 29.5),
        24.5,
        1.0,
    )
    .unwrap();
    let sample = scattered_field(&scenario, &geom, &config, &resp, obs, 26.0).unwrap();
    let gammas = cell_gammas(&geom, &config, &resp, 26.0).unwrap();
    let expected = naive_sum(tx, Vec3::ZERO, obs, &geom.cell_centers(), &gammas, 26.0, 24.5, 1.0);
    assert!((sample.complex_field - expected).norm() < 1e-12 * expected.norm());
}

#[test]
fn reciprocity_on_the_panel_axis_with_matched_exponents() {
    // with both points on the +z axis, the feed-boresight angle at either
    // end equals the off-normal angle at the cell, so each summand is
    // symmetric under swapping the two ends when q_feed == q_elem
    let geom = ArrayGeometry::new(4, 4, 2.3e-3).unwrap();
    let resp = UnitCellResponse::default();
    let config = ColumnConfig::new(vec![
        CellState::On,
        CellState::Off,
        CellState::Off,
        CellState::On,
    ]);
    let a = Vec3::new(0.0, 0.0, 0.15);
    let b = Vec3::new(0.0, 0.0, 0.31);
    for q in [0.0, 1.0, 2.5, 24.5] {
        let fwd = Scenario::new(a, b, Vec3::new(0.0, 0.0, 1.0), 27.5, (23.5, 29.5), q, q).unwrap();
        let rev = Scenario::new(b, a, Vec3::new(0.0, 0.0, 1.0), 27.5, (23.5, 29.5), q, q).unwrap();
        let f_ab = scattered_field(&fwd, &geom, &config, &resp, b, 27.5).unwrap();
        let f_ba = scattered_field(&rev, &geom, &config, &resp, a, 27.5).unwrap();
        let rel = (f_ab.complex_field.norm() - f_ba.complex_field.norm()).abs()
            / f_ab.complex_field.norm();
        assert!(rel <= 1e-12, "q = {q}: relative mismatch {rel}");
    }
}

#[test]
fn reciprocity_off_axis_with_isotropic_patterns() {
    let geom = ArrayGeometry::new(3, 5, 2.3e-3).unwrap();
    let resp = UnitCellResponse::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let config = random_config(&mut rng, 5);
    let a = Vec3::new(0.12, -0.03, 0.14);
    let b = Vec3::new(-0.05, 0.08, 0.27);
    let fwd = Scenario::new(a, b, Vec3::new(0.0, 0.0, 1.0), 27.5, (23.5, 29.5), 0.0, 0.0).unwrap();
    let rev = Scenario::new(b, a, Vec3::new(0.0, 0.0, 1.0), 27.5, (23.5, 29.5), 0.0, 0.0).unwrap();
    let f_ab = scattered_field(&fwd, &geom, &config, &resp, b, 25.0).unwrap();
    let f_ba = scattered_field(&rev, &geom, &config, &resp, a, 25.0).unwrap();
    let rel =
        (f_ab.complex_field.norm() - f_ba.complex_field.norm()).abs() / f_ab.complex_field.norm();
    assert!(rel <= 1e-12, "relative mismatch {rel}");
}

#[test]
fn translation_of_the_whole_scene_is_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let geom = ArrayGeometry::new(4, 4, 2.3e-3).unwrap();
    let resp = UnitCellResponse::default();
    let config = random_config(&mut rng, 4);
    let gammas = cell_gammas(&geom, &config, &resp, 26.5).unwrap();
    let cells = geom.cell_centers();
    let tx = Vec3::new(0.1, 0.05, 0.2);
    let obs = Vec3::new(-0.04, 0.0, 0.3);
    let base = scattered_sum(tx, Vec3::ZERO, obs, &cells, &gammas, 26.5, 24.5, 1.0).unwrap();
    for shift in [
        Vec3::new(0.3, -0.2, 0.5),
        Vec3::new(-1.0, 2.0, 0.0),
        Vec3::new(0.0, 0.0, -0.05),
    ] {
        let moved: Vec<Vec3> = cells.iter().map(|&c| c + shift).collect();
        let shifted = scattered_sum(
            tx + shift,
            Vec3::ZERO + shift,
            obs + shift,
            &moved,
            &gammas,
            26.5,
            24.5,
            1.0,
        )
        .unwrap();
        let rel = (shifted - base).norm() / base.norm();
        assert!(rel <= 1e-12, "shift {shift:?}: relative error {rel}");
    }
}

#[test]
fn coherent_sum_respects_the_triangle_bound() {
    // the co-phased magnitude sum computed here term by term bounds any
    // coherent sum from above
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..20 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let geom = ArrayGeometry::new(rows, cols, 2.3e-3).unwrap();
        let resp = random_response(&mut rng);
        let config = random_config(&mut rng, cols);
        let f = rng.gen_range(23.5..=29.5);
        let tx = Vec3::new(rng.gen_range(-0.1..0.1), 0.0, rng.gen_range(0.1..0.3));
        let obs = Vec3::new(rng.gen_range(-0.1..0.1), 0.0, rng.gen_range(0.1..0.3));
        let scenario = Scenario::new(
            tx,
            Vec3::new(0.0, 0.0, 0.2),
            Vec3::new(0.0, 0.0, 1.0),
            27.5,
            (23.5, 29.5),
            24.5,
            1.0,
        )
        .unwrap();
        let sample = scattered_field(&scenario, &geom, &config, &resp, obs, f).unwrap();
        let gammas = cell_gammas(&geom, &config, &resp, f).unwrap();
        let boresight = (Vec3::ZERO - tx).normalized().unwrap();
        let mut bound = 0.0;
        for (cell, gamma) in geom.cell_centers().iter().zip(&gammas) {
            let to_cell = *cell - tx;
            let r1 = to_cell.norm();
            let cos_feed = boresight.dot(to_cell) / r1;
            let a_feed = if cos_feed > 0.0 { cos_feed.powf(24.5) } else { 0.0 };
            let to_obs = obs - *cell;
            let r2 = to_obs.norm();
            let a_elem = (to_obs.z / r2).max(0.0);
            bound += a_feed * a_elem * gamma.norm() / (r1 * r2);
        }
        assert!(
            sample.complex_field.norm() <= bound * (1.0 + 1e-12),
            "sum {} exceeds bound {bound}",
            sample.complex_field.norm()
        );
    }
}
