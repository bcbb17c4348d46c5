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

#![allow(dead_code)]

use std::collections::BTreeSet;

use ivcolor::{Edge, Graph, OuterEmbedding};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn polygon(n: usize, chords: &[(usize, usize)]) -> Graph {
    Graph::new(
        n,
        (0..n)
            .map(|i| (i, (i + 1) % n))
            .chain(chords.iter().copied()),
    )
    .unwrap()
}

fn crossing(a: (usize, usize), b: (usize, usize)) -> bool {
    let inside = |x: usize| a.0 < x && x < a.1;
    a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1 && inside(b.0) != inside(b.1)
}

/// Every 2-connected outerplanar graph with maximum degree at most 3 and at
/// most `max_edges` edges, one per isomorphism class. Such a graph is its
/// unique Hamiltonian polygon plus non-crossing chords with at most one
/// chord per vertex, and two of them are isomorphic exactly when a
/// rotation or reflection of the polygon maps one chord set onto the other.
pub fn subcubic_outerplanar_upto(max_edges: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 3..=max_edges {
        let candidates: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 2..n).map(move |b| (a, b)))
            .filter(|&(a, b)| !(a == 0 && b == n - 1))
            .collect();
        let mut seen: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
        let budget = max_edges - n;
        let mut chosen = Vec::new();
        collect(n, &candidates, 0, budget, &mut chosen, &mut seen);
        for chords in seen {
            out.push(polygon(n, &chords));
        }
    }
    out
}

fn collect(
    n: usize,
    cands: &[(usize, usize)],
    from: usize,
    budget: usize,
    chosen: &mut Vec<(usize, usize)>,
    seen: &mut BTreeSet<Vec<(usize, usize)>>,
) {
    seen.insert(canonical(n, chosen));
    if budget == 0 {
        return;
    }
    for i in from..cands.len() {
        let c = cands[i];
        let clash = chosen
            .iter()
            .any(|&d| d.0 == c.0 || d.0 == c.1 || d.1 == c.0 || d.1 == c.1 || crossing(c, d));
        if !clash {
            chosen.push(c);
            collect(n, cands, i + 1, budget - 1, chosen, seen);
            chosen.pop();
        }
    }
}

fn canonical(n: usize, chords: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut best: Option<Vec<(usize, usize)>> = None;
    for r in 0..n {
        for flip in [false, true] {
            let map = |v: usize| if flip { (n + r - v) % n } else { (v + r) % n };
            let mut img: Vec<(usize, usize)> = chords
                .iter()
                .map(|&(a, b)| {
                    let (a, b) = (map(a), map(b));
                    (a.min(b), a.max(b))
                })
                .collect();
            img.sort_unstable();
            if best.as_ref().is_none_or(|b| img < *b) {
                best = Some(img);
            }
        }
    }
    best.unwrap_or_default()
}

/// Pairwise crossing test over all chord pairs, by positions on the outer
/// cycle.
pub fn chords_cross_quadratic(emb: &OuterEmbedding) -> Option<(Edge, Edge)> {
    let pos = |v: usize| emb.order().iter().position(|&w| w == v).unwrap();
    let span = |e: Edge| {
        let (a, b) = (pos(e.lo()), pos(e.hi()));
        (a.min(b), a.max(b))
    };
    let chords = emb.chords();
    for i in 0..chords.len() {
        for j in i + 1..chords.len() {
            if crossing(span(chords[i]), span(chords[j])) {
                return Some((chords[i], chords[j]));
            }
        }
    }
    None
}

pub fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
