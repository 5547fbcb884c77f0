use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use rkcodes::code::CyclicCode;
use rkcodes::gfp::{factor_xn_minus_1, fp_cyclic_min_weight};
use rkcodes::structure::{canonical_form, enumerate_coprime, DEFAULT_CHAIN_CAP};
use rkcodes::{FpPoly, PrimeParams, RkPoly};

fn factorization(c: &mut Criterion) {
    let params = PrimeParams::new(3, 1, 40).unwrap();
    c.bench_function("factor x^40 - 1 over F_3", |b| b.iter(|| factor_xn_minus_1(black_box(&params))));
}

fn enumeration(c: &mut Criterion) {
    let params = PrimeParams::new(3, 4, 5).unwrap();
    c.bench_function("enumerate p=3 k=4 n=5", |b| {
        b.iter(|| enumerate_coprime(black_box(params), DEFAULT_CHAIN_CAP).unwrap())
    });
}

fn structure(c: &mut Criterion) {
    let params = PrimeParams::new(2, 3, 12).unwrap();
    let gens = vec![
        RkPoly::from_layers(params, vec![FpPoly::new(2, vec![1, 1, 1]), FpPoly::new(2, vec![0, 1])]),
        RkPoly::u_times(params, 2, FpPoly::new(2, vec![1, 1])),
    ];
    let code = CyclicCode::from_generators(params, gens).unwrap();
    c.bench_function("canonical form p=2 k=3 n=12", |b| b.iter(|| canonical_form(black_box(&code))));
    c.bench_function("dual p=2 k=3 n=12", |b| b.iter(|| black_box(&code).dual().unwrap()));
}

fn distance(c: &mut Criterion) {
    let params = PrimeParams::new(3, 1, 27).unwrap();
    let g = FpPoly::x_minus_1(3).pow(15);
    c.bench_function("exhaustive distance (x-1)^15, n=27", |b| {
        b.iter(|| fp_cyclic_min_weight(black_box(&g), &params, 1 << 24).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = factorization, enumeration, structure, distance
}
criterion_main!(benches);
