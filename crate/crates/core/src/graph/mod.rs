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

//! Undirected simple graphs with dense vertex ids.

mod generators;
mod io;

pub use generators::{
    gen_cycle, gen_random_outerplanar_subcubic, gen_triangle_graph, gen_triangular_fan,
    GraphLabels, LabeledGraph,
};
pub use io::{read_edge_list, write_dot, write_edge_list};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    Duplicate(usize, usize),
    #[error("{family} needs {what}")]
    BadParameter {
        family: &'static str,
        what: &'static str,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("header declares {expected} edges but {found} were given")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("coloring does not cover edge {0}")]
    UncoveredEdge(Edge),
}

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn has(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`.
    pub fn other(self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((u, v): (usize, usize)) -> Self {
        Edge::new(u, v)
    }
}

/// Immutable simple graph on vertices `0..n`.
///
/// Edges are kept sorted by `(min, max)` and adjacency lists are sorted, so
/// every traversal in the crate is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, out-of-range endpoints and duplicate
    /// edges (in either orientation).
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut list: Vec<Edge> = Vec::new();
        for e in edges {
            let e = e.into();
            if e.lo() == e.hi() {
                return Err(GraphError::Loop(e.lo()));
            }
            if e.hi() >= n {
                return Err(GraphError::OutOfRange {
                    u: e.lo(),
                    v: e.hi(),
                    n,
                });
            }
            list.push(e);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::Duplicate(w[0].lo(), w[0].hi()));
        }
        let mut adj = vec![Vec::new(); n];
        for e in &list {
            adj[e.lo()].push(e.hi());
            adj[e.hi()].push(e.lo());
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending `(min, max)` order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// True when the graph is a single cycle through all vertices.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3
            && self.edges.len() == self.n
            && self.adj.iter().all(|a| a.len() == 2)
            && self.is_connected()
    }

    pub fn is_odd_cycle(&self) -> bool {
        self.is_cycle() && self.n % 2 == 1
    }

    pub fn has_triangle(&self) -> bool {
        self.edges.iter().any(|e| {
            let (a, b) = (&self.adj[e.lo()], &self.adj[e.hi()]);
            a.iter().any(|w| b.binary_search(w).is_ok())
        })
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(
            perm.len(),
            self.n,
            "permutation length must equal vertex count"
        );
        Graph::new(
            self.n,
            self.edges.iter().map(|e| (perm[e.lo()], perm[e.hi()])),
        )
        .expect("relabeling a simple graph by a permutation keeps it simple")
    }

    /// Adjacency as an ordered map, the representation used by the
    /// reduction-based algorithms that delete and merge vertices.
    pub(crate) fn adjacency_map(&self) -> BTreeMap<usize, std::collections::BTreeSet<usize>> {
        (0..self.n)
            .map(|v| (v, self.adj[v].iter().copied().collect()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.max_degree(), 2);
        assert!(g.is_odd_cycle());
        assert!(g.has_triangle());
    }

    #[test]
    fn rejects_loop() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::Loop(0)));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::OutOfRange { .. })
        ));
    }

    #[test]
    fn rejects_duplicates_in_either_orientation() {
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::Duplicate(0, 1))
        );
    }

    #[test]
    fn four_cycle() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert!(g.is_cycle());
        assert!(!g.is_odd_cycle());
        assert!(!g.has_triangle());
        assert_eq!(g.edges()[1], Edge::new(0, 3));
    }

    #[test]
    fn disconnected_is_not_a_cycle() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!g.is_connected());
        assert!(!g.is_cycle());
    }
}
