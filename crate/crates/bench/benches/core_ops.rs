use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use weylcrest::faces::{is_weak_face, FaceQuery};
use weylcrest::hwmodule::{describe_module, module_weights, truncated_character, weight_formulas, wt_j, Family};
use weylcrest::oracle::{brute_weak_faces, freudenthal_mult};
use weylcrest::polyhedron::{enumerate_faces, hull_of_module};
use weylcrest::{CoefficientGroup, SubsetJ, Weight};
use weylcrest_bench::regular_cases;

fn weights(c: &mut Criterion) {
    let mut g = c.benchmark_group("module_weights_depth6");
    for (rs, lambda) in regular_cases() {
        let desc = describe_module(&rs, &lambda, Family::Simple).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(rs.label()), &desc, |b, d| {
            b.iter(|| module_weights(&rs, black_box(d), 6).unwrap())
        });
    }
    g.finish();

    let mut g = c.benchmark_group("weight_formulas_depth6");
    for (rs, lambda) in regular_cases() {
        let desc = describe_module(&rs, &lambda.scale(weylcrest::rational::q(-1)), Family::Verma).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(rs.label()), &desc, |b, d| {
            b.iter(|| weight_formulas(&rs, black_box(d), 6).unwrap())
        });
    }
    g.finish();
}

fn characters(c: &mut Criterion) {
    let mut g = c.benchmark_group("simple_character");
    for (rs, lambda) in regular_cases() {
        let desc = describe_module(&rs, &lambda, Family::Simple).unwrap();
        let low = rs.longest_element(rs.full()).act(&rs, &lambda);
        let depth = weylcrest::weightlat::depth_below(&rs, &lambda, &low).unwrap() as usize;
        g.bench_function(BenchmarkId::new("kostant", rs.label()), |b| {
            b.iter(|| truncated_character(&rs, black_box(&desc), depth).unwrap())
        });
        g.bench_function(BenchmarkId::new("freudenthal_zero", rs.label()), |b| {
            b.iter(|| freudenthal_mult(&rs, black_box(&lambda), &Weight::zero(rs.rank())).unwrap_or(0))
        });
    }
    g.finish();
}

fn hulls_and_faces(c: &mut Criterion) {
    let mut g = c.benchmark_group("faces");
    for (rs, lambda) in regular_cases() {
        let desc = describe_module(&rs, &lambda, Family::Simple).unwrap();
        g.bench_function(BenchmarkId::new("hull", rs.label()), |b| {
            b.iter(|| hull_of_module(&rs, black_box(&desc)).unwrap())
        });
        g.bench_function(BenchmarkId::new("enumerate", rs.label()), |b| {
            b.iter(|| enumerate_faces(&rs, black_box(&desc)).unwrap())
        });
        if rs.rank() == 2 {
            let x = module_weights(&rs, &desc, 3).unwrap();
            let y = wt_j(&rs, &desc, SubsetJ::singleton(0), 3).unwrap().filter(|w| x.contains(w));
            let query = FaceQuery::from_sets(&x, &y, CoefficientGroup::Int, 6).unwrap();
            g.bench_function(BenchmarkId::new("weak_face_bound6", rs.label()), |b| {
                b.iter(|| is_weak_face(black_box(&query)).unwrap())
            });
            if x.len() <= 12 {
                g.bench_function(BenchmarkId::new("brute_weak_faces", rs.label()), |b| {
                    b.iter(|| brute_weak_faces(black_box(x.weights()), 4).unwrap())
                });
            }
        }
    }
    g.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = weights, characters, hulls_and_faces
}
criterion_main!(benches);
