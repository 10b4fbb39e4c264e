use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use xyz_spectra::verify::{corpus_graph, run_corpus_on, CorpusGraph, DEFAULT_TOL};
use xyz_spectra::Execution;

fn graphs() -> Vec<CorpusGraph> {
    [
        "cycle:5",
        "cycle:6",
        "complete:4",
        "complete_bipartite:3:3",
        "hypercube:3",
    ]
    .iter()
    .map(|s| corpus_graph(s).unwrap())
    .collect()
}

fn sweep(c: &mut Criterion) {
    let graphs = graphs();
    let mut group = c.benchmark_group("corpus_sweep");
    group
        .sample_size(10)
        .measurement_time(std::time::Duration::from_secs(10));
    for (name, exec) in [
        ("sequential", Execution::Sequential),
        ("parallel", Execution::Parallel),
    ] {
        group.bench_function(name, |b| {
            b.iter(|| black_box(run_corpus_on(&graphs, DEFAULT_TOL, exec)))
        });
    }
    group.finish();
}

criterion_group!(benches, sweep);
criterion_main!(benches);
