//! Same workloads on a single-thread rayon pool and on the default pool.
//! Build with `--no-default-features` to measure the pure sequential path.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ltoracle::amplification::build_amplification;
use ltoracle::decompose::{depth_sweep, Method, SweepOptions};
use ltoracle::sim::{run, run_from, StateVector};
use ltoracle::build_less_than;
use rayon::{ThreadPool, ThreadPoolBuilder};

fn pools() -> Vec<(String, ThreadPool)> {
    let default = ThreadPoolBuilder::new().build().unwrap();
    let label = format!("{}_threads", default.current_num_threads());
    vec![
        ("1_thread".into(), ThreadPoolBuilder::new().num_threads(1).build().unwrap()),
        (label, default),
    ]
}

fn amplification(c: &mut Criterion) {
    let mut g = c.benchmark_group("amplify_statevector");
    g.sample_size(10);
    for n in [16usize, 20] {
        let m = (1u64 << n) / 3;
        let circuit = build_amplification(&build_less_than(n, m).unwrap(), m, Some(2)).unwrap();
        for (label, pool) in pools() {
            g.bench_with_input(BenchmarkId::new(label, n), &circuit, |b, circuit| {
                b.iter(|| pool.install(|| run(circuit).unwrap()))
            });
        }
    }
    g.finish();
}

fn sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("depth_sweep");
    g.sample_size(10);
    for (label, pool) in pools() {
        g.bench_function(BenchmarkId::new(label, "n2-9"), |b| {
            b.iter(|| {
                pool.install(|| {
                    depth_sweep(2..=9, Method::LessThanOracle, SweepOptions::default()).unwrap();
                    depth_sweep(2..=9, Method::DiagonalBaseline, SweepOptions::default()).unwrap()
                })
            })
        });
    }
    g.finish();
}

fn exhaustive_oracle(c: &mut Criterion) {
    use rayon::prelude::*;
    let n = 14;
    let probe = StateVector::uniform(n).unwrap();
    let thresholds: Vec<u64> = (1..1u64 << n).step_by(997).collect();
    let mut g = c.benchmark_group("exhaustive_oracle_check");
    g.sample_size(10);
    for (label, pool) in pools() {
        g.bench_function(BenchmarkId::new(label, n), |b| {
            b.iter(|| {
                pool.install(|| {
                    thresholds
                        .par_iter()
                        .filter(|&&m| {
                            let out = run_from(&build_less_than(n, m).unwrap(), probe.clone()).unwrap();
                            out.amplitudes()
                                .iter()
                                .enumerate()
                                .all(|(i, a)| (a.re < 0.0) == ((i as u64) < m))
                        })
                        .count()
                })
            })
        });
    }
    g.finish();
}

criterion_group!(benches, amplification, sweep, exhaustive_oracle);
criterion_main!(benches);
