use criterion::{criterion_group, criterion_main, Criterion};
use tpqr_core::{
    build_diagram, delta_polynomial, hilbert_numerator, linkage_dual, orbit_poset,
    weight_multiplicities, GradedFormat, Variety, Weight,
};

fn bench_orbits(c: &mut Criterion) {
    c.bench_function("orbit_e6", |b| {
        let d = build_diagram(2, 3, 3).unwrap();
        b.iter(|| orbit_poset(&d, None).unwrap().len())
    });
    c.bench_function("orbit_e7", |b| {
        let d = build_diagram(2, 4, 3).unwrap();
        b.iter(|| orbit_poset(&d, None).unwrap().len())
    });
}

fn bench_generators(c: &mut Criterion) {
    c.bench_function("generators_e7_sigma3", |b| {
        let d = build_diagram(2, 4, 3).unwrap();
        b.iter(|| {
            let p = orbit_poset(&d, None).unwrap();
            let id = p.variety_id(Variety::Sigma3).unwrap();
            p.complement_filter(id, 5).len()
        })
    });
}

fn bench_rescalc(c: &mut Criterion) {
    let e8 = GradedFormat::new(vec![
        vec![0],
        vec![15, 15, 15, 15, 15, 15, 16],
        vec![21; 8],
        vec![31, 31],
    ])
    .unwrap();
    c.bench_function("numerator_e8", |b| {
        b.iter(|| hilbert_numerator(&e8, 3).unwrap())
    });
    c.bench_function("linkage_e8", |b| {
        b.iter(|| linkage_dual(&e8, (16, 15, 15)).unwrap())
    });
}

fn bench_weights(c: &mut Criterion) {
    c.bench_function("freudenthal_e6_adjoint", |b| {
        let d = build_diagram(2, 3, 3).unwrap();
        let lam = Weight::fundamental(&d, d.x1_node().unwrap());
        b.iter(|| weight_multiplicities(&d, &lam).unwrap().total_dimension())
    });
}

fn bench_invariant(c: &mut Criterion) {
    c.bench_function("delta_polynomial", |b| b.iter(delta_polynomial));
}

criterion_group!(
    benches,
    bench_orbits,
    bench_generators,
    bench_rescalc,
    bench_weights,
    bench_invariant
);
criterion_main!(benches);
