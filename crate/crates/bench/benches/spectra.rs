use criterion::{black_box, criterion_group, criterion_main, Criterion};

use hyperspectra::closed_form::{double_hyperstar_seidel, hyperstar_seidel, sunflower_adjacency};
use hyperspectra::eigen::{char_poly_eval, eigen_symmetric, main_count_via_rank};
use hyperspectra::hypergraph::Hypergraph;
use hyperspectra::matrix::{adjacency_matrix, seidel_matrix, walk_table};

fn bench_jacobi(c: &mut Criterion) {
    let small = seidel_matrix(&Hypergraph::hyperstar(4, 3).unwrap());
    let medium = seidel_matrix(&Hypergraph::hyperstar(8, 6).unwrap());
    let large = seidel_matrix(&Hypergraph::sunflower(8).unwrap());
    c.bench_function("jacobi_seidel_hyperstar_4_3", |b| {
        b.iter(|| eigen_symmetric(black_box(&small)).unwrap())
    });
    c.bench_function("jacobi_seidel_hyperstar_8_6", |b| {
        b.iter(|| eigen_symmetric(black_box(&medium)).unwrap())
    });
    c.bench_function("jacobi_seidel_sunflower_8", |b| {
        b.iter(|| eigen_symmetric(black_box(&large)).unwrap())
    });
}

fn bench_walks(c: &mut Criterion) {
    let h = Hypergraph::complete_uniform(8, 4).unwrap();
    c.bench_function("walk_table_complete_8_4_len16", |b| {
        b.iter(|| walk_table(black_box(&h), 16))
    });
}

fn bench_krylov_rank(c: &mut Criterion) {
    let s = seidel_matrix(&Hypergraph::hyperstar(6, 4).unwrap());
    c.bench_function("krylov_rank_hyperstar_6_4", |b| {
        b.iter(|| main_count_via_rank(black_box(&s)))
    });
}

fn bench_char_poly(c: &mut Criterion) {
    let a = adjacency_matrix(&Hypergraph::sunflower(6).unwrap());
    c.bench_function("char_poly_eval_sunflower_6", |b| {
        b.iter(|| char_poly_eval(black_box(&a), black_box(2.37)))
    });
}

fn bench_closed_forms(c: &mut Criterion) {
    c.bench_function("closed_form_hyperstar_seidel_8_6", |b| {
        b.iter(|| hyperstar_seidel(8, 6).unwrap().values_descending())
    });
    c.bench_function("closed_form_double_hyperstar_5_5_5", |b| {
        b.iter(|| {
            double_hyperstar_seidel(5, 5, 5)
                .unwrap()
                .values_descending()
        })
    });
    c.bench_function("closed_form_sunflower_adjacency_8", |b| {
        b.iter(|| sunflower_adjacency(8).unwrap().values_descending())
    });
}

criterion_group!(
    benches,
    bench_jacobi,
    bench_walks,
    bench_krylov_rank,
    bench_char_poly,
    bench_closed_forms
);
criterion_main!(benches);
