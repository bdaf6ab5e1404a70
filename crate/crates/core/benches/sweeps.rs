use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ixcode::bounds::mais_with;
use ixcode::codec::{build_clique_cover_code, verify_code, Trials};
use ixcode::generators;
use ixcode::ramsey::{verify_class_ramsey, GraphClass};
use ixcode::{Exec, Limits};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn enumeration(c: &mut Criterion) {
    let lim = Limits::default();
    let mut group = c.benchmark_group("planar_ramsey_order_6");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| verify_class_ramsey(GraphClass::Planar, 3, 3, 6, &lim, exec).unwrap())
        });
    }
    group.finish();
}

fn acyclic_subgraph(c: &mut Criterion) {
    let lim = Limits::default();
    let g = generators::random_digraph(18, 0.5, &mut ChaCha8Rng::seed_from_u64(3));
    let mut group = c.benchmark_group("mais_n18");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| mais_with(&g, &lim, exec).unwrap()));
    }
    group.finish();
}

fn code_verification(c: &mut Criterion) {
    let lim = Limits::default();
    let g = generators::random_digraph(16, 0.7, &mut ChaCha8Rng::seed_from_u64(5));
    let code = build_clique_cover_code(&g, &lim).unwrap();
    let mut group = c.benchmark_group("verify_code_n16_exhaustive");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| verify_code(&g, &code, Trials::Exhaustive, 42, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, acyclic_subgraph, code_verification);
criterion_main!(benches);
