use arrowalg_core::config::Config;
use arrowalg_core::cosmos::{breaking_chain, commutant, commutant_numeric, invariant_lattice};
use arrowalg_core::minimal::{numeric_mean_curvature, ProductSphereEmbedding};
use arrowalg_core::unitary::{orbit_rotation, random_unit_vector, random_unitary, realify};
use arrowalg_core::EndoF;
use criterion::{criterion_group, criterion_main, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

fn cosmos(c: &mut Criterion) {
    let f = EndoF::generic();
    c.bench_function("commutant_exact", |b| b.iter(|| commutant(black_box(&f))));
    c.bench_function("commutant_svd", |b| b.iter(|| commutant_numeric(black_box(&f), 1e-9)));
    c.bench_function("invariant_lattice", |b| b.iter(|| invariant_lattice(black_box(&f))));
    c.bench_function("breaking_chain", |b| b.iter(|| breaking_chain().unwrap()));
}

fn unitary(c: &mut Criterion) {
    let cfg = Config::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let u = random_unitary(5, true, &mut rng);
    c.bench_function("realify_su5", |b| {
        b.iter(|| realify(black_box(&u), true, &cfg).unwrap())
    });
    let x = random_unit_vector(10, &mut rng);
    let y = random_unit_vector(10, &mut rng);
    c.bench_function("orbit_rotation_s9", |b| {
        b.iter(|| orbit_rotation(black_box(&x), black_box(&y), 1e-10).unwrap())
    });
}

fn curvature(c: &mut Criterion) {
    let e = ProductSphereEmbedding::minimal(4, 4).unwrap();
    let x = e.sample(&mut ChaCha8Rng::seed_from_u64(1));
    c.bench_function("mean_curvature_s4xs4", |b| {
        b.iter(|| numeric_mean_curvature(black_box(&e), black_box(&x), 1e-3).unwrap())
    });
}

criterion_group!(benches, cosmos, unitary, curvature);
criterion_main!(benches);
