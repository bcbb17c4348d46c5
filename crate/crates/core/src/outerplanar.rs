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

//! Recognition of 2-connected outerplanar graphs and the structures that
//! live on their outer face.
//!
//! Recognition peels degree-2 vertices (replacing `x - v - y` by the edge
//! `xy`) down to a triangle, replays the removals to rebuild the cyclic
//! order of the outer face, and then verifies that order from scratch. The
//! peeling alone is not trustworthy on arbitrary input; the final check is
//! what makes an accepted embedding sound.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph};

pub(crate) type Adjacency = BTreeMap<usize, BTreeSet<usize>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RejectReason {
    #[error("fewer than three vertices")]
    TooSmall,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{edges} edges exceed the outerplanar bound 2n-3 = {bound}")]
    TooManyEdges { edges: usize, bound: usize },
    #[error("{edges} edges are too few for a 2-connected graph on {n} vertices")]
    TooFewEdges { edges: usize, n: usize },
    #[error("no vertex of degree 2 left to peel")]
    NoDegreeTwoVertex,
    #[error("rebuilt vertex order is not a Hamiltonian cycle")]
    OrderNotHamiltonian,
    #[error("chords {0} and {1} cross")]
    CrossingChords(Edge, Edge),
}

impl RejectReason {
    /// Short stable tag for serialized verdicts.
    pub fn tag(&self) -> &'static str {
        match self {
            RejectReason::TooSmall => "too-small",
            RejectReason::Disconnected => "disconnected",
            RejectReason::TooManyEdges { .. } => "too-many-edges",
            RejectReason::TooFewEdges { .. } => "too-few-edges",
            RejectReason::NoDegreeTwoVertex => "no-degree-2-vertex",
            RejectReason::OrderNotHamiltonian => "order-not-hamiltonian",
            RejectReason::CrossingChords(..) => "crossing-chords",
        }
    }
}

/// Outer-face walk of a 2-connected outerplanar graph plus its chords.
///
/// The order is canonical: it starts at vertex 0 and runs in the direction
/// whose second vertex has the smaller id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OuterEmbedding {
    order: Vec<usize>,
    chords: Vec<Edge>,
}

impl OuterEmbedding {
    /// Builds an embedding from a cyclic vertex order, canonicalizing it and
    /// deriving the chords, then verifies it against `g`.
    pub fn from_order(g: &Graph, order: &[usize]) -> Result<Self, RejectReason> {
        let order = canonical_rotation(order);
        let cycle: BTreeSet<Edge> = cycle_edges(&order).collect();
        let chords = g
            .edges()
            .iter()
            .copied()
            .filter(|e| !cycle.contains(e))
            .collect();
        let emb = OuterEmbedding { order, chords };
        emb.verify(g)?;
        Ok(emb)
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Edges not on the outer cycle, ascending.
    pub fn chords(&self) -> &[Edge] {
        &self.chords
    }

    /// Outer-cycle edges in walk order, starting with `order[0] - order[1]`.
    pub fn cycle_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        cycle_edges(&self.order)
    }

    /// Checks every invariant of an outer embedding against `g`: the order is
    /// a Hamiltonian cycle of `g`, cycle edges and chords partition `E(g)`,
    /// and no two chords cross.
    pub fn verify(&self, g: &Graph) -> Result<(), RejectReason> {
        let n = g.vertex_count();
        let mut seen = vec![false; n];
        if self.order.len() != n || n < 3 {
            return Err(RejectReason::OrderNotHamiltonian);
        }
        for &v in &self.order {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(RejectReason::OrderNotHamiltonian);
            }
        }
        if self.cycle_edges().any(|e| !g.has_edge(e.lo(), e.hi())) {
            return Err(RejectReason::OrderNotHamiltonian);
        }
        let cycle: BTreeSet<Edge> = self.cycle_edges().collect();
        let chords: BTreeSet<Edge> = self.chords.iter().copied().collect();
        let partitions = cycle.is_disjoint(&chords)
            && cycle.len() + chords.len() == g.edge_count()
            && g.edges()
                .iter()
                .all(|e| cycle.contains(e) || chords.contains(e));
        if !partitions {
            return Err(RejectReason::OrderNotHamiltonian);
        }
        self.check_laminar()
    }

    /// Chords seen as position intervals on the outer cycle must be nested or
    /// disjoint; a sweep with a stack of open right ends finds any overlap.
    fn check_laminar(&self) -> Result<(), RejectReason> {
        let pos = self.positions();
        let mut spans: Vec<(usize, usize, Edge)> = self
            .chords
            .iter()
            .map(|&e| {
                let (a, b) = (pos[&e.lo()], pos[&e.hi()]);
                (a.min(b), a.max(b), e)
            })
            .collect();
        spans.sort_by(|p, q| p.0.cmp(&q.0).then(q.1.cmp(&p.1)));
        let mut open: Vec<(usize, Edge)> = Vec::new();
        for (l, r, e) in spans {
            while open.last().is_some_and(|&(end, _)| end <= l) {
                open.pop();
            }
            if let Some(&(end, outer)) = open.last() {
                if r > end {
                    return Err(RejectReason::CrossingChords(outer, e));
                }
            }
            open.push((r, e));
        }
        Ok(())
    }

    fn positions(&self) -> BTreeMap<usize, usize> {
        self.order
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect()
    }
}

fn cycle_edges(order: &[usize]) -> impl Iterator<Item = Edge> + '_ {
    (0..order.len()).map(move |i| Edge::new(order[i], order[(i + 1) % order.len()]))
}

fn canonical_rotation(order: &[usize]) -> Vec<usize> {
    let n = order.len();
    if n == 0 {
        return Vec::new();
    }
    let start = (0..n).min_by_key(|&i| order[i]).unwrap_or(0);
    let forward: Vec<usize> = (0..n).map(|i| order[(start + i) % n]).collect();
    if n >= 3 && forward[n - 1] < forward[1] {
        std::iter::once(forward[0])
            .chain(forward[1..].iter().rev().copied())
            .collect()
    } else {
        forward
    }
}

/// Accepts exactly the 2-connected outerplanar graphs, returning their
/// (unique) outer embedding.
pub fn recognize_outerplanar_2connected(g: &Graph) -> Result<OuterEmbedding, RejectReason> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n < 3 {
        return Err(RejectReason::TooSmall);
    }
    if !g.is_connected() {
        return Err(RejectReason::Disconnected);
    }
    if m > 2 * n - 3 {
        return Err(RejectReason::TooManyEdges {
            edges: m,
            bound: 2 * n - 3,
        });
    }
    if m < n {
        return Err(RejectReason::TooFewEdges { edges: m, n });
    }

    let mut adj = g.adjacency_map();
    let mut removals: Vec<(usize, usize, usize)> = Vec::with_capacity(n - 3);
    while adj.len() > 3 {
        let (v, x, y) = adj
            .iter()
            .find(|(_, nb)| nb.len() == 2)
            .map(|(&v, nb)| {
                let mut it = nb.iter().copied();
                (v, it.next().unwrap(), it.next().unwrap())
            })
            .ok_or(RejectReason::NoDegreeTwoVertex)?;
        adj.remove(&v);
        for (a, b) in [(x, y), (y, x)] {
            let nb = adj.get_mut(&a).expect("neighbor of a live vertex is live");
            nb.remove(&v);
            nb.insert(b);
        }
        removals.push((v, x, y));
    }

    let mut order: Vec<usize> = adj.keys().copied().collect();
    for &(v, x, y) in removals.iter().rev() {
        let len = order.len();
        let i = order
            .iter()
            .position(|&a| a == x)
            .ok_or(RejectReason::OrderNotHamiltonian)?;
        if order[(i + 1) % len] == y {
            order.insert(i + 1, v);
        } else if order[(i + len - 1) % len] == y {
            order.insert(i, v);
        } else {
            return Err(RejectReason::OrderNotHamiltonian);
        }
    }
    OuterEmbedding::from_order(g, &order)
}

/// The outer (Hamiltonian) cycle in canonical order.
pub fn outer_cycle(emb: &OuterEmbedding) -> Vec<usize> {
    emb.order.clone()
}

/// Edges not on the unbounded face: exactly the chords.
pub fn internal_edges(_g: &Graph, emb: &OuterEmbedding) -> Vec<Edge> {
    emb.chords.clone()
}

/// Bounded faces of the embedding, each as its cyclic vertex list. The
/// outer polygon is split recursively at chords.
pub fn bounded_faces(g: &Graph, emb: &OuterEmbedding) -> Vec<Vec<usize>> {
    let mut faces = Vec::new();
    let mut pending = vec![emb.order.clone()];
    while let Some(poly) = pending.pop() {
        match find_split(g, &poly) {
            Some((i, j)) => {
                let left: Vec<usize> = poly[i..=j].to_vec();
                let right: Vec<usize> = poly[j..].iter().chain(&poly[..=i]).copied().collect();
                pending.push(right);
                pending.push(left);
            }
            None => faces.push(poly),
        }
    }
    faces
}

fn find_split(g: &Graph, poly: &[usize]) -> Option<(usize, usize)> {
    let len = poly.len();
    for i in 0..len {
        for j in i + 2..len {
            if i == 0 && j == len - 1 {
                continue;
            }
            if g.has_edge(poly[i], poly[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Triangular bounded faces whose three edges are all chords, as sorted
/// triples in ascending order.
pub fn separating_triangles(g: &Graph, emb: &OuterEmbedding) -> Vec<[usize; 3]> {
    let chords: BTreeSet<Edge> = emb.chords.iter().copied().collect();
    let mut out: Vec<[usize; 3]> = bounded_faces(g, emb)
        .into_iter()
        .filter(|f| f.len() == 3)
        .filter(|f| cycle_edges(f).all(|e| chords.contains(&e)))
        .map(|f| {
            let mut t = [f[0], f[1], f[2]];
            t.sort_unstable();
            t
        })
        .collect();
    out.sort_unstable();
    out
}

/// Local structure guaranteed in every 2-connected outerplanar graph of
/// maximum degree 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Lemma1Config {
    /// Adjacent degree-2 vertices `u`, `v`; `x` is the other neighbor of `u`
    /// and `y` the other neighbor of `v`.
    Pair {
        u: usize,
        v: usize,
        x: usize,
        y: usize,
    },
    /// Triangle `uvw` with `d(u) = d(w) = 3` and `d(v) = 2`.
    Triangle { u: usize, v: usize, w: usize },
}

impl Lemma1Config {
    /// Checks the configuration's defining properties against `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let d = |v: usize| if v < g.vertex_count() { g.degree(v) } else { 0 };
        match *self {
            Lemma1Config::Pair { u, v, x, y } => {
                g.has_edge(u, v)
                    && d(u) == 2
                    && d(v) == 2
                    && x != y
                    && x != v
                    && y != u
                    && g.has_edge(u, x)
                    && g.has_edge(v, y)
            }
            Lemma1Config::Triangle { u, v, w } => {
                g.has_edge(u, v)
                    && g.has_edge(v, w)
                    && g.has_edge(u, w)
                    && d(u) == 3
                    && d(v) == 2
                    && d(w) == 3
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("no adjacent degree-2 pair and no 3-2-3 triangle; the input is not a 2-connected outerplanar graph with maximum degree 3")]
pub struct NoConfig;

/// Finds the configuration that drives the inductive coloring. A pair is
/// preferred over a triangle; ties go to the lexicographically smallest
/// vertex ids.
pub fn find_lemma1_config(g: &Graph) -> Result<Lemma1Config, NoConfig> {
    lemma1_in(&g.adjacency_map()).ok_or(NoConfig)
}

pub(crate) fn lemma1_in(adj: &Adjacency) -> Option<Lemma1Config> {
    let deg = |v: &usize| adj.get(v).map_or(0, BTreeSet::len);
    let other = |a: usize, not: usize| adj[&a].iter().copied().find(|&b| b != not);

    for (&u, nb) in adj.iter().filter(|(_, nb)| nb.len() == 2) {
        for &v in nb.iter().filter(|&&v| v > u && deg(&v) == 2) {
            let (x, y) = (other(u, v)?, other(v, u)?);
            if x != y {
                return Some(Lemma1Config::Pair { u, v, x, y });
            }
        }
    }

    let mut best: Option<(usize, usize, usize)> = None;
    for (&v, nb) in adj.iter().filter(|(_, nb)| nb.len() == 2) {
        let mut it = nb.iter().copied();
        let (a, b) = (it.next()?, it.next()?);
        if deg(&a) == 3 && deg(&b) == 3 && adj[&a].contains(&b) {
            let cand = (a, v, b);
            if best.is_none_or(|cur| cand < cur) {
                best = Some(cand);
            }
        }
    }
    best.map(|(u, v, w)| Lemma1Config::Triangle { u, v, w })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_cycle, gen_triangular_fan};

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }

    fn c6_chord() -> Graph {
        graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
    }

    fn diamond() -> Graph {
        graph(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn c5_accepted_without_chords() {
        let emb = recognize_outerplanar_2connected(&gen_cycle(5).unwrap()).unwrap();
        assert_eq!(emb.order(), &[0, 1, 2, 3, 4]);
        assert!(emb.chords().is_empty());
    }

    #[test]
    fn k4_rejected_by_edge_bound() {
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(
            recognize_outerplanar_2connected(&k4),
            Err(RejectReason::TooManyEdges { edges: 6, bound: 5 })
        );
    }

    #[test]
    fn k23_rejected() {
        let k23 = graph(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert!(recognize_outerplanar_2connected(&k23).is_err());
    }

    #[test]
    fn small_and_disconnected_rejected() {
        assert_eq!(
            recognize_outerplanar_2connected(&graph(2, &[(0, 1)])),
            Err(RejectReason::TooSmall)
        );
        let two_triangles = graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert_eq!(
            recognize_outerplanar_2connected(&two_triangles),
            Err(RejectReason::Disconnected)
        );
        let path = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(matches!(
            recognize_outerplanar_2connected(&path),
            Err(RejectReason::TooFewEdges { .. })
        ));
    }

    #[test]
    fn bowtie_rejected() {
        // two triangles sharing vertex 2: outerplanar but not 2-connected
        let bowtie = graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert!(recognize_outerplanar_2connected(&bowtie).is_err());
    }

    #[test]
    fn canonical_c4_orders() {
        let emb = recognize_outerplanar_2connected(&gen_cycle(4).unwrap()).unwrap();
        assert_eq!(outer_cycle(&emb), vec![0, 1, 2, 3]);
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        let emb = recognize_outerplanar_2connected(&g).unwrap();
        assert_eq!(outer_cycle(&emb), vec![0, 1, 2, 3]);
        assert_eq!(internal_edges(&g, &emb), vec![Edge::new(0, 2)]);
    }

    #[test]
    fn canonical_rotation_rule() {
        assert_eq!(canonical_rotation(&[2, 0, 3, 1]), vec![0, 2, 1, 3]);
        assert_eq!(canonical_rotation(&[3, 0, 1, 2]), vec![0, 1, 2, 3]);
        assert_eq!(canonical_rotation(&[0, 5, 2, 1]), vec![0, 1, 2, 5]);
    }

    #[test]
    fn verify_catches_bad_embeddings() {
        let g = c6_chord();
        let good = OuterEmbedding::from_order(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(good.verify(&g), Ok(()));
        assert_eq!(
            OuterEmbedding::from_order(&g, &[0, 2, 1, 3, 4, 5]),
            Err(RejectReason::OrderNotHamiltonian)
        );
        let crossing = graph(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 0),
                (0, 3),
                (1, 4),
            ],
        );
        assert!(matches!(
            OuterEmbedding::from_order(&crossing, &[0, 1, 2, 3, 4, 5]),
            Err(RejectReason::CrossingChords(..))
        ));
    }

    #[test]
    fn c6_has_no_internal_edges() {
        let g = gen_cycle(6).unwrap();
        let emb = recognize_outerplanar_2connected(&g).unwrap();
        assert!(internal_edges(&g, &emb).is_empty());
        assert_eq!(bounded_faces(&g, &emb).len(), 1);
    }

    #[test]
    fn fan_outer_cycle_and_chords() {
        let tf = gen_triangular_fan(5).unwrap();
        let emb = recognize_outerplanar_2connected(&tf.graph).unwrap();
        assert_eq!(emb.verify(&tf.graph), Ok(()));
        let id = |s: &str| tf.labels.id(s);
        let walk = ["u", "v1", "w1", "v2", "w2", "v3", "w3", "v4"];
        let expected = canonical_rotation(&walk.iter().map(|s| id(s)).collect::<Vec<_>>());
        assert_eq!(outer_cycle(&emb), expected);

        let mut chords: Vec<Edge> = vec![
            Edge::new(id("u"), id("v2")),
            Edge::new(id("u"), id("v3")),
            Edge::new(id("v1"), id("v2")),
            Edge::new(id("v2"), id("v3")),
            Edge::new(id("v3"), id("v4")),
        ];
        chords.sort_unstable();
        assert_eq!(internal_edges(&tf.graph, &emb), chords);
    }

    #[test]
    fn fan_separating_triangles() {
        for (n, count) in [(3, 0), (4, 0), (5, 1), (7, 3)] {
            let tf = gen_triangular_fan(n).unwrap();
            let emb = recognize_outerplanar_2connected(&tf.graph).unwrap();
            assert_eq!(separating_triangles(&tf.graph, &emb).len(), count, "TF_{n}");
        }
        let tf = gen_triangular_fan(5).unwrap();
        let emb = recognize_outerplanar_2connected(&tf.graph).unwrap();
        let l = |s: &str| tf.labels.id(s);
        let mut expected = [l("u"), l("v2"), l("v3")];
        expected.sort_unstable();
        assert_eq!(separating_triangles(&tf.graph, &emb), vec![expected]);
    }

    #[test]
    fn chord_on_c4_is_not_separating() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        let emb = recognize_outerplanar_2connected(&g).unwrap();
        assert!(separating_triangles(&g, &emb).is_empty());
        assert_eq!(bounded_faces(&g, &emb).len(), 2);
    }

    #[test]
    fn lemma1_pair_on_hexagon_with_chord() {
        let g = c6_chord();
        let cfg = find_lemma1_config(&g).unwrap();
        assert_eq!(
            cfg,
            Lemma1Config::Pair {
                u: 1,
                v: 2,
                x: 0,
                y: 3
            }
        );
        assert!(cfg.holds_in(&g));
    }

    #[test]
    fn lemma1_triangle_on_diamond() {
        let g = diamond();
        let cfg = find_lemma1_config(&g).unwrap();
        assert_eq!(cfg, Lemma1Config::Triangle { u: 1, v: 0, w: 2 });
        assert!(cfg.holds_in(&g));
    }

    #[test]
    fn lemma1_absent_without_degree_two_vertices() {
        // K4 has no degree-2 vertex at all.
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(find_lemma1_config(&k4), Err(NoConfig));
    }
}
