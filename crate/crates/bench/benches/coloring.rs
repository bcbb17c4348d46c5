// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ivcolor::graph::{gen_random_outerplanar_subcubic, gen_triangle_graph, gen_triangular_fan};
use ivcolor::{color_fan, color_optimal_subcubic, color_subcubic_le4, width};

fn solver(c: &mut Criterion) {
    let mut group = c.benchmark_group("width");
    for n in [8, 10, 12] {
        let g = gen_random_outerplanar_subcubic(n, 1).unwrap();
        group.bench_with_input(BenchmarkId::new("random_subcubic", n), &g, |b, g| {
            b.iter(|| width(black_box(g)).unwrap())
        });
    }
    for n in [4, 5, 6] {
        let g = gen_triangular_fan(n).unwrap().graph;
        group.bench_with_input(BenchmarkId::new("fan", n), &g, |b, g| {
            b.iter(|| width(black_box(g)).unwrap())
        });
    }
    for (k, l, m) in [(1, 1, 1), (2, 2, 1)] {
        let g = gen_triangle_graph(k, l, m).unwrap().graph;
        group.bench_with_input(
            BenchmarkId::new("triangle_graph", format!("{k}{l}{m}")),
            &g,
            |b, g| b.iter(|| width(black_box(g)).unwrap()),
        );
    }
    group.finish();
}

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("subcubic");
    for n in [16, 64, 256] {
        let g = gen_random_outerplanar_subcubic(n, 7).unwrap();
        group.bench_with_input(BenchmarkId::new("le4", n), &g, |b, g| {
            b.iter(|| color_subcubic_le4(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("optimal", n), &g, |b, g| {
            b.iter(|| color_optimal_subcubic(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn fans(c: &mut Criterion) {
    let mut group = c.benchmark_group("color_fan");
    for n in [8, 32, 128] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| color_fan(black_box(n)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, solver, construction, fans);
criterion_main!(benches);
