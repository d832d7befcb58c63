use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use glw_core::corpus::corpus;
use glw_core::eval::eval_by_game;
use glw_core::exec::Execution;
use glw_core::glg::{compile_formula, equiv, extract_formula, EquivOptions, Side};
use glw_core::nbhd::{eval_standard, random_model, DEFAULT_DENSITY};
use glw_core::syntax::{parse_formula, to_dnnf};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn adequacy_batch(c: &mut Criterion) {
    let corpus = corpus();
    let models: Vec<_> =
        (0..20).map(|s| random_model(1 + s as usize % 4, &["p", "q"], &["g", "h"], DEFAULT_DENSITY, s).unwrap()).collect();
    let mut group = c.benchmark_group("adequacy");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| {
                mode.map_collect(0..corpus.len() * models.len(), |i| {
                    let (f, m) = (&corpus[i / models.len()], &models[i % models.len()]);
                    eval_by_game(m, f) == eval_standard(m, f)
                })
            })
        });
    }
    group.finish();
}

fn roundtrip_equiv(c: &mut Criterion) {
    let f = parse_formula("<(g^* n (p? ; p!))^x>e").unwrap();
    let back = extract_formula(&compile_formula(&to_dnnf(&f)).unwrap()).unwrap();
    let mut group = c.benchmark_group("equiv");
    group.sample_size(10);
    for (name, execution) in MODES {
        let options = EquivOptions { n_states: 6, samples: 400, execution, ..EquivOptions::default() };
        group.bench_with_input(BenchmarkId::from_parameter(name), &options, |b, o| {
            b.iter(|| equiv(Side::Formula(&back), Side::Formula(&f), o).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, adequacy_batch, roundtrip_equiv);
criterion_main!(benches);
