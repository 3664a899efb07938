use criterion::{criterion_group, criterion_main, Criterion};
use skewgb_bench::{
    additive_weyl, completion_case, division_case, heisenberg, larger_completion_case, product_operands,
};
use skewgb_core::{buchberger, division, syz_module, Algebra};
use std::hint::black_box;

fn multiplication(c: &mut Criterion) {
    let cases: [(&str, Algebra, &str, &str); 2] = [
        ("h1", heisenberg(), "z^3 + x*z^2 + y", "x^3*y + x*y*z + 2*x"),
        ("A2", additive_weyl(), "y1^3*y2^2 + y1*x2", "x1^3*x2^2 + x1*y2"),
    ];
    let mut group = c.benchmark_group("multiplication");
    for (name, alg, left, right) in cases {
        let (f, g) = product_operands(&alg, left, right);
        group.bench_function(name, |b| {
            b.iter(|| {
                let fresh = Algebra::new(alg.spec().clone()).expect("valid spec");
                black_box(fresh.mul(&f, &g))
            })
        });
        group.bench_function(format!("{name}_cached"), |b| b.iter(|| black_box(alg.mul(&f, &g))));
    }
    group.finish();
}

fn dividing(c: &mut Criterion) {
    let case = division_case();
    c.bench_function("division_h1", |b| {
        b.iter(|| division(&case.alg, black_box(&case.f), &case.divisors, &case.order).expect("division runs"))
    });
}

fn completing(c: &mut Criterion) {
    let mut group = c.benchmark_group("buchberger");
    for (name, case) in [("o3_pair", completion_case()), ("o3_triple", larger_completion_case())] {
        group.bench_function(name, |b| {
            b.iter(|| buchberger(&case.alg, black_box(&case.family), &case.order).expect("completion runs"))
        });
    }
    group.finish();
}

fn syzygies(c: &mut Criterion) {
    let case = completion_case();
    c.bench_function("syzygy_o3_pair", |b| {
        b.iter(|| syz_module(&case.alg, black_box(&case.family), &case.order).expect("syzygies run"))
    });
}

criterion_group!(
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = multiplication, dividing, completing, syzygies
);
criterion_main!(benches);
