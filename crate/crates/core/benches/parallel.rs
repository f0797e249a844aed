use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;

use braided_suq2::algebra::{confluence_check, suq2_presentation, uq2_presentation};
use braided_suq2::exec::Exec;
use braided_suq2::morphisms::{cancellation_witness, delta_su};
use braided_suq2::numeric::{oracle_batch, TruncatedRep};
use braided_suq2::scalars::Scalar;
use braided_suq2::verify::{run_all, VerifyOptions};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn confluence(c: &mut Criterion) {
    let mut g = c.benchmark_group("confluence trials");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                let p = uq2_presentation(&Scalar::q()).unwrap();
                confluence_check(&p, 3, 500, 1, exec)
            })
        });
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let p = suq2_presentation(&Scalar::q()).unwrap();
    let rep = TruncatedRep::build(Complex64::new(0.3, 0.4), 30, 8).unwrap();
    let mut g = c.benchmark_group("oracle compares");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| oracle_batch(&rep, &p, 200, 6, 1, exec).unwrap()));
    }
    g.finish();
}

fn verify_all(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify all");
    g.sample_size(10);
    for (name, exec) in MODES {
        let opts = VerifyOptions { exec, ..Default::default() };
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| run_all(&opts)));
    }
    g.finish();
}

fn closure(c: &mut Criterion) {
    let mut g = c.benchmark_group("closure enumeration");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                let a = suq2_presentation(&Scalar::q()).unwrap();
                let d = delta_su(&a).unwrap();
                cancellation_witness(&d, 3, exec).unwrap()
            })
        });
    }
    g.finish();
}

criterion_group!(benches, confluence, oracle, verify_all, closure);
criterion_main!(benches);
