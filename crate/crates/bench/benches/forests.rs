use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use forestsym::forests::{c_coefficients, enumerate_forests, X_of, YBasis};
use forestsym::graphs::graph_of;
use forestsym::oracles::{csf_oracle, llt_oracle};
use forestsym::symfunc::{convert, monomial_expand, rho_to_h, Basis};
use forestsym_bench::{band, complete, path};

fn coefficients(c: &mut Criterion) {
    let mut group = c.benchmark_group("c_coefficients");
    for n in [5, 6, 7] {
        group.bench_with_input(BenchmarkId::new("complete", n), &complete(n), |b, m| {
            b.iter(|| c_coefficients(black_box(m)))
        });
        group.bench_with_input(BenchmarkId::new("band", n), &band(n), |b, m| {
            b.iter(|| c_coefficients(black_box(m)))
        });
    }
    group.finish();
}

fn forests(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_forests");
    for n in [5, 6, 7] {
        let g = graph_of(&complete(n));
        group.bench_with_input(BenchmarkId::new("complete", n), &g, |b, g| b.iter(|| enumerate_forests(black_box(g))));
    }
    group.finish();
}

fn oracles(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracles");
    group.sample_size(10);
    for n in [4, 5, 6] {
        let g = graph_of(&band(n));
        group.bench_with_input(BenchmarkId::new("csf", n), &g, |b, g| b.iter(|| csf_oracle(black_box(g))));
        group.bench_with_input(BenchmarkId::new("llt", n), &g, |b, g| b.iter(|| llt_oracle(black_box(g))));
    }
    group.finish();
}

fn identity_sides(c: &mut Criterion) {
    let mut group = c.benchmark_group("forest_side");
    for n in [5, 6] {
        let m = path(n);
        group.bench_with_input(BenchmarkId::new("omega_x_rho_monomial", n), &m, |b, m| {
            b.iter(|| {
                let x = rho_to_h(&X_of(black_box(m), YBasis::Rho)).unwrap();
                let p = convert(&x, Basis::P).unwrap();
                monomial_expand(&forestsym::symfunc::omega(&p).unwrap())
            })
        });
    }
    group.finish();
}

criterion_group!(benches, coefficients, forests, oracles, identity_sides);
criterion_main!(benches);
