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

//! Exhaustive search for interval colorings.
//!
//! The search assigns colors edge by edge in breadth-first order from vertex
//! 0, trying colors in ascending order. A partial assignment survives only
//! if, at every vertex, the colors placed so far are distinct and span at
//! most `d(v)` consecutive values, and the colors still unused can be
//! covered by the edges still uncolored. Only the color reversal
//! `c -> t + 1 - c` is used as a symmetry: the first edge takes a color in
//! the lower half.

mod parity;

pub use parity::{
    parity_obstruction, CertificateError, Justification, Parity, ParityBranch, ParityCertificate,
    ParityStep, TriangleRole,
};

use std::collections::VecDeque;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::coloring::EdgeColoring;
use crate::graph::{Edge, Graph};

/// Largest color count the search handles (palettes are 64-bit masks).
pub const MAX_COLORS: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("t = {t} exceeds the supported maximum of {MAX_COLORS} colors")]
    TooManyColors { t: usize },
    #[error("palette constraint at vertex {vertex} has {given} colors but the vertex has degree {degree}")]
    BadConstraint {
        vertex: usize,
        given: usize,
        degree: usize,
    },
}

/// Why a graph has no interval coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Odd cycles need `Δ + 1` colors in any proper edge coloring, while an
    /// interval coloring needs only `Δ`.
    OddCycle { length: usize },
    /// No interval `t`-coloring exists for any `t` in `t_min..=t_max`, and
    /// `soundness` explains why no `t` outside that range can work.
    ExhaustedAllT {
        t_min: usize,
        t_max: usize,
        soundness: String,
    },
    /// Parity contradiction on a triangle graph.
    Parity(ParityCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ColoringOutcome {
    Colored {
        t: usize,
        #[serde(serialize_with = "serialize_coloring")]
        coloring: EdgeColoring,
    },
    NotColorable {
        certificate: Certificate,
    },
    /// The time budget ran out while searching `t`.
    Inconclusive {
        t: usize,
    },
}

fn serialize_coloring<S: serde::Serializer>(c: &EdgeColoring, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&crate::coloring::RawColoring::from(c), s)
}

impl ColoringOutcome {
    pub fn width(&self) -> Option<usize> {
        match self {
            ColoringOutcome::Colored { t, .. } => Some(*t),
            _ => None,
        }
    }

    pub fn is_not_colorable(&self) -> bool {
        matches!(self, ColoringOutcome::NotColorable { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Precheck {
    Ok,
    NotColorable(Certificate),
}

/// Cheap necessary condition: odd cycles are the connected graphs here whose
/// chromatic index exceeds their maximum degree.
pub fn precheck(g: &Graph) -> Result<Precheck, SolverError> {
    check_input(g)?;
    if g.is_odd_cycle() {
        return Ok(Precheck::NotColorable(Certificate::OddCycle {
            length: g.vertex_count(),
        }));
    }
    Ok(Precheck::Ok)
}

fn check_input(g: &Graph) -> Result<(), SolverError> {
    if g.edge_count() == 0 {
        return Err(SolverError::NoEdges);
    }
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    Ok(())
}

/// Largest `t` for which an interval `t`-coloring could exist: `|E|` since
/// each color needs its own edge, tightened to `|V| - 1` for triangle-free
/// graphs.
pub fn color_bound(g: &Graph) -> usize {
    let m = g.edge_count();
    if g.has_triangle() {
        m
    } else {
        m.min(g.vertex_count().saturating_sub(1))
    }
}

fn bound_reason(g: &Graph) -> String {
    if g.has_triangle() {
        "t >= max degree; t <= |E| because every color is used on some edge".into()
    } else {
        "t >= max degree; t <= min(|E|, |V|-1) for triangle-free graphs".into()
    }
}

/// Searches for an interval `t`-coloring. Deterministic: the first coloring
/// in the search order is returned.
pub fn find_interval_coloring(g: &Graph, t: usize) -> Result<Option<EdgeColoring>, SolverError> {
    match Search::new(g, t)?.run(&mut |_| true) {
        SearchResult::Found(c) => Ok(Some(c)),
        _ => Ok(None),
    }
}

/// Exact width `w(G)`: scans `t` from `Δ(G)` up to [`color_bound`].
pub fn width(g: &Graph) -> Result<ColoringOutcome, SolverError> {
    width_with_budget(g, None)
}

/// [`width`] with a wall-clock budget; an overrun yields
/// [`ColoringOutcome::Inconclusive`] at the `t` being searched.
pub fn width_with_budget(
    g: &Graph,
    budget: Option<Duration>,
) -> Result<ColoringOutcome, SolverError> {
    if let Precheck::NotColorable(certificate) = precheck(g)? {
        return Ok(ColoringOutcome::NotColorable { certificate });
    }
    let deadline = budget.map(|b| Instant::now() + b);
    let t_min = g.max_degree();
    let t_max = color_bound(g);
    // interval colorability is not monotone in t, so every t gets a full search
    for t in t_min..=t_max {
        let mut search = Search::new(g, t)?;
        search.deadline = deadline;
        match search.run(&mut |_| true) {
            SearchResult::Found(coloring) => return Ok(ColoringOutcome::Colored { t, coloring }),
            SearchResult::TimedOut => return Ok(ColoringOutcome::Inconclusive { t }),
            SearchResult::Exhausted => {}
        }
    }
    Ok(ColoringOutcome::NotColorable {
        certificate: Certificate::ExhaustedAllT {
            t_min,
            t_max,
            soundness: bound_reason(g),
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchResult {
    Found(EdgeColoring),
    Exhausted,
    TimedOut,
}

/// A configurable interval-coloring search over a fixed graph and `t`.
pub struct Search<'g> {
    g: &'g Graph,
    t: usize,
    order: Vec<Edge>,
    /// Per vertex, the colors its palette may use.
    allowed: Vec<u64>,
    symmetry: bool,
    deadline: Option<Instant>,
}

impl<'g> Search<'g> {
    pub fn new(g: &'g Graph, t: usize) -> Result<Self, SolverError> {
        check_input(g)?;
        if t > MAX_COLORS {
            return Err(SolverError::TooManyColors { t });
        }
        let all = mask_range(1, t);
        Ok(Search {
            g,
            t,
            order: bfs_edge_order(g),
            allowed: vec![all; g.vertex_count()],
            symmetry: true,
            deadline: None,
        })
    }

    /// Requires the palette of `vertex` to be exactly `colors`.
    pub fn fix_palette(mut self, vertex: usize, colors: &[usize]) -> Result<Self, SolverError> {
        let mask = colors.iter().fold(0u64, |m, &c| m | (1 << c)) & mask_range(1, self.t);
        if mask.count_ones() as usize != self.g.degree(vertex) {
            return Err(SolverError::BadConstraint {
                vertex,
                given: colors.len(),
                degree: self.g.degree(vertex),
            });
        }
        self.allowed[vertex] = mask;
        // constraints are not invariant under color reversal
        self.symmetry = false;
        Ok(self)
    }

    pub fn with_budget(mut self, budget: Duration) -> Self {
        self.deadline = Some(Instant::now() + budget);
        self
    }

    /// Runs the search, handing each complete interval coloring to `accept`
    /// in search order until it returns `true`.
    pub fn run(&self, accept: &mut dyn FnMut(&EdgeColoring) -> bool) -> SearchResult {
        if self.t < self.g.max_degree() || self.t > self.g.edge_count() {
            return SearchResult::Exhausted;
        }
        let n = self.g.vertex_count();
        let mut st = State {
            colors: vec![0; self.order.len()],
            used: vec![0; n],
            count: vec![0; n],
            lo: vec![usize::MAX; n],
            hi: vec![0; n],
            color_uses: vec![0; self.t + 1],
            unused: self.t,
            nodes: 0,
        };
        match self.step(0, &mut st, accept) {
            Step::Done(c) => SearchResult::Found(c),
            Step::Continue => SearchResult::Exhausted,
            Step::Timeout => SearchResult::TimedOut,
        }
    }

    fn step(
        &self,
        i: usize,
        st: &mut State,
        accept: &mut dyn FnMut(&EdgeColoring) -> bool,
    ) -> Step {
        if i == self.order.len() {
            let c = EdgeColoring::from_pairs(
                self.t,
                self.order.iter().copied().zip(st.colors.iter().copied()),
            );
            return if accept(&c) {
                Step::Done(c)
            } else {
                Step::Continue
            };
        }
        st.nodes += 1;
        if st.nodes & 0xfff == 0 && self.deadline.is_some_and(|d| Instant::now() >= d) {
            return Step::Timeout;
        }
        let e = self.order[i];
        let (a, b) = (e.lo(), e.hi());
        let (lo_a, hi_a) = self.window(st, a);
        let (lo_b, hi_b) = self.window(st, b);
        let lo = lo_a.max(lo_b);
        let mut hi = hi_a.min(hi_b);
        if i == 0 && self.symmetry {
            hi = hi.min(self.t.div_ceil(2));
        }
        let remaining_after = self.order.len() - i - 1;
        let candidates =
            mask_range(lo, hi) & self.allowed[a] & self.allowed[b] & !st.used[a] & !st.used[b];
        for c in Bits(candidates) {
            let fresh = st.color_uses[c] == 0;
            if st.unused - usize::from(fresh) > remaining_after {
                continue;
            }
            st.assign(i, a, b, c);
            let r = self.step(i + 1, st, accept);
            if !matches!(r, Step::Continue) {
                return r;
            }
            st.unassign(i, a, b, c);
        }
        Step::Continue
    }

    /// Colors an edge at `v` may still take so that `v`'s palette can grow
    /// into an interval of length `d(v)`.
    fn window(&self, st: &State, v: usize) -> (usize, usize) {
        let d = self.g.degree(v);
        if st.count[v] == 0 {
            (1, self.t)
        } else {
            (
                (st.hi[v] + 1).saturating_sub(d).max(1),
                (st.lo[v] + d - 1).min(self.t),
            )
        }
    }
}

enum Step {
    Done(EdgeColoring),
    Continue,
    Timeout,
}

struct State {
    colors: Vec<usize>,
    used: Vec<u64>,
    count: Vec<usize>,
    lo: Vec<usize>,
    hi: Vec<usize>,
    color_uses: Vec<usize>,
    unused: usize,
    nodes: u64,
}

impl State {
    fn assign(&mut self, i: usize, a: usize, b: usize, c: usize) {
        self.colors[i] = c;
        if self.color_uses[c] == 0 {
            self.unused -= 1;
        }
        self.color_uses[c] += 1;
        for v in [a, b] {
            self.used[v] |= 1 << c;
            self.count[v] += 1;
            self.lo[v] = self.lo[v].min(c);
            self.hi[v] = self.hi[v].max(c);
        }
    }

    fn unassign(&mut self, i: usize, a: usize, b: usize, c: usize) {
        self.colors[i] = 0;
        self.color_uses[c] -= 1;
        if self.color_uses[c] == 0 {
            self.unused += 1;
        }
        for v in [a, b] {
            self.used[v] &= !(1 << c);
            self.count[v] -= 1;
            if self.count[v] == 0 {
                self.lo[v] = usize::MAX;
                self.hi[v] = 0;
            } else {
                self.lo[v] = self.used[v].trailing_zeros() as usize;
                self.hi[v] = 63 - self.used[v].leading_zeros() as usize;
            }
        }
    }
}

fn mask_range(lo: usize, hi: usize) -> u64 {
    if lo > hi || lo > MAX_COLORS {
        return 0;
    }
    let hi = hi.min(MAX_COLORS);
    let upto = if hi == 63 {
        u64::MAX
    } else {
        (1u64 << (hi + 1)) - 1
    };
    upto & !((1u64 << lo) - 1)
}

struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// Edges in the order vertices are reached by BFS from vertex 0: each
/// dequeued vertex contributes its not-yet-listed edges, neighbors ascending.
fn bfs_edge_order(g: &Graph) -> Vec<Edge> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut listed = vec![false; g.edge_count()];
    let mut order = Vec::with_capacity(g.edge_count());
    let mut queue = VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                let e = Edge::new(v, w);
                let idx = g.edge_index(e).expect("adjacency and edge list agree");
                if !listed[idx] {
                    listed[idx] = true;
                    order.push(e);
                }
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}
