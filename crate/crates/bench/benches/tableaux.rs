use criterion::{criterion_group, criterion_main, Criterion};
use ortaquin::{enumerate_tableaux, parse_tableau, push, unpush, weyl_dim, Shape};
use std::hint::black_box;

fn bench_push(c: &mut Criterion) {
    let t = parse_tableau("n 5\ncol 1 2 0 -2\ncol 1 3 -1\ncol 2 0\n").unwrap();
    c.bench_function("push rank-5 example", |b| {
        b.iter(|| push(black_box(&t)).unwrap())
    });
    let (u, _) = push(&t).unwrap();
    let shape = t.shape();
    c.bench_function("unpush rank-5 example", |b| {
        b.iter(|| unpush(black_box(&u), black_box(&shape)).unwrap())
    });
}

fn bench_enumeration(c: &mut Criterion) {
    let shape = Shape::parse("1,2").unwrap();
    c.bench_function("enumerate shape 1,2", |b| {
        b.iter(|| enumerate_tableaux(black_box(&shape)).unwrap())
    });
}

fn bench_dimension(c: &mut Criterion) {
    let shape = Shape::parse("2,1,2").unwrap();
    c.bench_function("weyl dim shape 2,1,2", |b| {
        b.iter(|| weyl_dim(black_box(&shape)))
    });
}

criterion_group!(benches, bench_push, bench_enumeration, bench_dimension);
criterion_main!(benches);
