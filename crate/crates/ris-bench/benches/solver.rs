use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ris_bench::{band_grid, reference_scene};
use ris_core::analysis::enhancement_db;
use ris_core::geometry::{ArrayGeometry, Vec3};
use ris_core::solver::{frequency_sweep, pattern_scan, scattered_field};
use ris_core::synthesis::synthesize;

fn bench_synthesize(c: &mut Criterion) {
    let (scenario, geometry, response) = reference_scene();
    c.bench_function("synthesize 20 columns", |b| {
        b.iter(|| synthesize(&scenario, &geometry, &response).unwrap())
    });
}

fn bench_scattered_field(c: &mut Criterion) {
    let (scenario, _, response) = reference_scene();
    let mut group = c.benchmark_group("scattered_field");
    for n in [10usize, 20, 40] {
        let geometry = ArrayGeometry::new(n, n, 2.3e-3).unwrap();
        let config = synthesize(&scenario, &geometry, &response).unwrap();
        group.bench_with_input(BenchmarkId::new("cells", n * n), &n, |b, _| {
            b.iter(|| {
                scattered_field(
                    &scenario,
                    &geometry,
                    &config,
                    &response,
                    Vec3::new(0.0, 0.0, 0.2),
                    27.5,
                )
                .unwrap()
            })
        });
    }
    group.finish();
}

fn bench_frequency_sweep(c: &mut Criterion) {
    let (scenario, geometry, response) = reference_scene();
    let config = synthesize(&scenario, &geometry, &response).unwrap();
    let freqs = band_grid(61);
    c.bench_function("frequency_sweep 61 points", |b| {
        b.iter(|| {
            frequency_sweep(
                &scenario,
                &geometry,
                &config,
                &response,
                &freqs,
                scenario.rx_pos,
            )
            .unwrap()
        })
    });
    c.bench_function("enhancement_db 61 points", |b| {
        b.iter(|| enhancement_db(&scenario, &geometry, &response, &config, &freqs).unwrap())
    });
}

fn bench_pattern_scan(c: &mut Criterion) {
    let (scenario, geometry, response) = reference_scene();
    let config = synthesize(&scenario, &geometry, &response).unwrap();
    let angles: Vec<f64> = (0..=240).map(|i| -60.0 + 0.5 * i as f64).collect();
    c.bench_function("pattern_scan 241 angles", |b| {
        b.iter(|| {
            pattern_scan(&scenario, &geometry, &config, &response, 27.5, 0.2, &angles).unwrap()
        })
    });
}

criterion_group!(
    benches,
    bench_synthesize,
    bench_scattered_field,
    bench_frequency_sweep,
    bench_pattern_scan
);
criterion_main!(benches);
