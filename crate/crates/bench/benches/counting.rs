use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use degtree::*;
use degtree_bench::{random_connected, wheels};

fn tau_methods(c: &mut Criterion) {
    let mut group = c.benchmark_group("tau");
    let mut inputs = wheels(&[4, 6, 8]);
    inputs.push(("random n=8 m=18".into(), random_connected(8, 18, 1)));
    for (name, g) in &inputs {
        let hub = g.vertex_count() - 1;
        group.bench_with_input(BenchmarkId::new("matrix-tree", name), g, |b, g| {
            b.iter(|| tau_matrix_tree(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("del-con", name), g, |b, g| {
            b.iter(|| tau_deletion_contraction(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("grouped", name), g, |b, g| {
            b.iter(|| tau_via_grouped_formula(black_box(g), hub).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("direct", name), g, |b, g| {
            b.iter(|| tau_via_direct_formula(black_box(g), hub).unwrap())
        });
    }
    group.finish();
}

fn large_determinant(c: &mut Criterion) {
    let q6 = generate_family(&FamilySpec::Hypercube(6)).unwrap();
    let k40 = generate_family(&FamilySpec::Complete(40)).unwrap();
    c.bench_function("matrix-tree hypercube 6", |b| b.iter(|| tau_matrix_tree(black_box(&q6)).unwrap()));
    c.bench_function("matrix-tree complete 40", |b| b.iter(|| tau_matrix_tree(black_box(&k40)).unwrap()));
}

fn identity(c: &mut Criterion) {
    let g = random_connected(7, 14, 2);
    let w = EdgeWeights::seeded(g.edge_count(), -1000, 1000, 3);
    c.bench_function("identity n=7 m=14", |b| b.iter(|| check_identity(black_box(&g), 0, &w).unwrap()));
}

fn expansion(c: &mut Criterion) {
    let mut group = c.benchmark_group("expand_f");
    for (name, g) in wheels(&[4, 6]).into_iter().chain([("random n=10 m=16".to_string(), random_connected(10, 16, 4))])
    {
        group.bench_function(name, |b| b.iter(|| expand_f(black_box(&g), ExpansionBudget::default()).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, tau_methods, large_determinant, identity, expansion);
criterion_main!(benches);
