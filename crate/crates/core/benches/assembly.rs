//! Matrix assembly and the coinvariant route, on the rayon pool versus one
//! thread. Build with `--no-default-features` for the plain sequential path.

use criterion::{criterion_group, criterion_main, Criterion};
use hopfhc_core::cocyclic::{ModuleCoalgebra, Ops};
use hopfhc_core::coefficients::CoefficientModule;
use hopfhc_core::homology::{assemble, build_cm_complex, ChainSpace, Route};
use hopfhc_core::{exec, HopfPreset};

fn bench(c: &mut Criterion) {
    let h = HopfPreset::sweedler4();
    let y = CoefficientModule::coalgebra_self(&h).unwrap();
    let x = ModuleCoalgebra::Regular;
    let ops = Ops::new(&h, &x, &y).unwrap();
    let dom = ChainSpace::new(h.basis(), 3, y.dim());
    let cod = ChainSpace::new(h.basis(), 4, y.dim());
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let label = if exec::is_parallel() { "parallel" } else { "sequential" };

    let mut g = c.benchmark_group("face assembly");
    g.bench_function(label, |b| b.iter(|| assemble(&h, &dom, &cod, |v| ops.face(0, v)).unwrap()));
    g.bench_function("one thread", |b| {
        b.iter(|| one.install(|| assemble(&h, &dom, &cod, |v| ops.face(0, v)).unwrap()))
    });
    g.finish();

    let mut g = c.benchmark_group("coinvariant route");
    g.sample_size(10);
    g.bench_function(label, |b| b.iter(|| build_cm_complex(&h, &y, 2, Route::CoinvariantQuotient).unwrap()));
    g.bench_function("one thread", |b| {
        b.iter(|| one.install(|| build_cm_complex(&h, &y, 2, Route::CoinvariantQuotient).unwrap()))
    });
    g.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
