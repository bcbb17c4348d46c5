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

//! Named graph families used throughout the test corpus.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError};

/// Human-readable role names for vertices (`"u"`, `"v3"`, `"w2"`, ...).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GraphLabels {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl GraphLabels {
    pub fn new(names: Vec<String>) -> Self {
        let index: HashMap<String, usize> = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        assert_eq!(index.len(), names.len(), "vertex labels must be unique");
        GraphLabels { names, index }
    }

    pub fn name(&self, v: usize) -> Option<&str> {
        self.names.get(v).map(String::as_str)
    }

    /// Vertex id carrying `name`.
    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Like [`GraphLabels::vertex`], panicking on unknown names. For use with
    /// names the generator is known to have produced.
    pub fn id(&self, name: &str) -> usize {
        self.vertex(name)
            .unwrap_or_else(|| panic!("no vertex labelled {name:?}"))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: GraphLabels,
}

/// The cycle `0 - 1 - ... - (n-1) - 0`.
pub fn gen_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadParameter {
            family: "cycle",
            what: "n >= 3",
        });
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Triangular fan on apex `u`, fan path `v1..v(n-1)` and ear vertices
/// `w1..w(n-2)`, where `wi` closes the triangle `vi wi v(i+1)`.
///
/// Ids: `u = 0`, `vi = i`, `wi = n - 1 + i`.
pub fn gen_triangular_fan(n: usize) -> Result<LabeledGraph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadParameter {
            family: "triangular fan",
            what: "n >= 3",
        });
    }
    let v = |i: usize| i;
    let w = |i: usize| n - 1 + i;
    let mut edges = Vec::with_capacity(4 * n);
    for i in 1..n {
        edges.push((0, v(i)));
    }
    for i in 1..=n - 2 {
        edges.push((v(i), w(i)));
        edges.push((w(i), v(i + 1)));
        edges.push((v(i), v(i + 1)));
    }
    let mut names = vec!["u".to_string()];
    names.extend((1..n).map(|i| format!("v{i}")));
    names.extend((1..=n - 2).map(|i| format!("w{i}")));
    Ok(LabeledGraph {
        graph: Graph::new(2 * n - 2, edges)?,
        labels: GraphLabels::new(names),
    })
}

/// Triangle `xyz` whose sides `xy`, `yz`, `xz` are paralleled by paths of
/// lengths `2k`, `2l` and `2m` through `u1..u(2k-1)`, `v1..v(2l-1)` and
/// `w1..w(2m-1)`.
///
/// Ids: `x, y, z = 0, 1, 2`, then the `u`, `v` and `w` path vertices in order.
pub fn gen_triangle_graph(k: usize, l: usize, m: usize) -> Result<LabeledGraph, GraphError> {
    if k < 1 || l < 1 || m < 1 {
        return Err(GraphError::BadParameter {
            family: "triangle graph",
            what: "k, l, m >= 1",
        });
    }
    let mut names: Vec<String> = vec!["x".into(), "y".into(), "z".into()];
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    // (path letter, half-length, start, end)
    for (letter, half, from, to) in [('u', k, 0, 1), ('v', l, 1, 2), ('w', m, 0, 2)] {
        let first = names.len();
        let inner = 2 * half - 1;
        names.extend((1..=inner).map(|i| format!("{letter}{i}")));
        edges.push((from, first));
        for i in 0..inner - 1 {
            edges.push((first + i, first + i + 1));
        }
        edges.push((first + inner - 1, to));
    }
    Ok(LabeledGraph {
        graph: Graph::new(names.len(), edges)?,
        labels: GraphLabels::new(names),
    })
}

/// Random 2-connected outerplanar graph with maximum degree 3: the cycle
/// `0..n` plus at least one chord, chords pairwise non-crossing and at most
/// one per vertex. Deterministic in `seed`.
pub fn gen_random_outerplanar_subcubic(n: usize, seed: u64) -> Result<Graph, GraphError> {
    if n < 4 {
        return Err(GraphError::BadParameter {
            family: "random outerplanar",
            what: "n >= 4",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 2..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !(a == 0 && b == n - 1))
        .collect();
    candidates.shuffle(&mut rng);
    let limit = rng.random_range(1..=n / 2);

    let mut used = vec![false; n];
    let mut chords: Vec<(usize, usize)> = Vec::new();
    for (a, b) in candidates {
        if chords.len() == limit {
            break;
        }
        if used[a] || used[b] || chords.iter().any(|&c| crosses(c, (a, b))) {
            continue;
        }
        used[a] = true;
        used[b] = true;
        chords.push((a, b));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).chain(chords))
}

/// Chords of the polygon `0..n` (ids are positions) with four distinct
/// endpoints cross when exactly one endpoint of one lies strictly inside the
/// other.
fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let inside = |x: usize| a < x && x < b;
    a != c && a != d && b != c && b != d && inside(c) != inside(d)
}
