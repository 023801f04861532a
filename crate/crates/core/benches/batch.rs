//! Sequential versus parallel batch verification and sampling.

use std::hint::black_box;

use cliffgen::batch::{self, Exec};
use cliffgen::Signature;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn verify_all(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_all");
    group.sample_size(10);
    for max_n in [6, 8] {
        let sigs = Signature::all_up_to(max_n).expect("within the cap");
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, max_n), &sigs, |b, sigs| {
                b.iter(|| batch::verify_all(black_box(sigs), exec))
            });
        }
    }
    group.finish();
}

fn sampling(c: &mut Criterion) {
    let mut group = c.benchmark_group("double_cover");
    group.sample_size(10);
    for (p, q) in [(0, 4), (3, 2), (0, 6)] {
        let sig = Signature::new(p, q).expect("small signature");
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, sig), &sig, |b, &sig| {
                b.iter(|| batch::double_cover(sig, 200, 0, exec))
            });
        }
    }
    group.finish();
    let mut group = c.benchmark_group("homomorphism");
    group.sample_size(10);
    let sig = Signature::new(2, 3).expect("small signature");
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| batch::homomorphism(sig, 200, 0, exec)));
    }
    group.finish();
}

criterion_group!(benches, verify_all, sampling);
criterion_main!(benches);
