use criterion::{black_box, criterion_group, criterion_main, Criterion};
use pkit::{build_arrows, up_set, verify_tl, Weight, Window};

fn arrows(c: &mut Criterion) {
    let w = Weight::new(vec![3, 1, 1, 0, -2]).unwrap();
    c.bench_function("build_arrows n=5", |b| b.iter(|| build_arrows(black_box(&w))));
    let z = Weight::zero(6);
    c.bench_function("up_set P(0) n=6", |b| b.iter(|| up_set(black_box(&z))));
}

fn translation(c: &mut Criterion) {
    let win = Window::new(-4, 4);
    c.bench_function("verify_tl n=2 -4..4", |b| b.iter(|| verify_tl(2, black_box(&win))));
}

criterion_group!(benches, arrows, translation);
criterion_main!(benches);
