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

//! Interval colorings of 2-connected outerplanar graphs with maximum
//! degree at most 3.
//!
//! [`color_subcubic_le4`] reduces the graph by induction on the number of
//! edges, using the local configuration from
//! [`find_lemma1_config`](crate::outerplanar::find_lemma1_config):
//!
//! * adjacent degree-2 vertices `u, v` between `x` and `y` with `xy` not an
//!   edge: replace the path `x u v y` by the edge `xy`;
//! * the same with `xy` an edge: delete `u` and `v`;
//! * a triangle `u v w` with `d(v) = 2`: contract it to one vertex.
//!
//! The smaller graph is colored recursively with at most four colors and
//! the removed edges are spliced back in. Reductions that leave an odd
//! cycle are colored directly. Graphs with at most five edges are handed to
//! the exact solver.
//!
//! [`color_optimal_subcubic`] adds the optimal count: three colors exactly
//! when the order is even.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{is_interval_coloring, EdgeColoring, Violation};
use crate::graph::{Edge, Graph};
use crate::outerplanar::{
    lemma1_in, recognize_outerplanar_2connected, Adjacency, Lemma1Config, OuterEmbedding,
    RejectReason,
};
use crate::solver::find_interval_coloring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubcubicError {
    #[error("not a 2-connected outerplanar graph: {0}")]
    NotOuterplanar(RejectReason),
    #[error("maximum degree {0} is above 3")]
    DegreeTooLarge(usize),
    #[error("maximum degree {0}, expected exactly 3")]
    NotMaxDegreeThree(usize),
    #[error("odd cycles have no interval coloring")]
    OddCycle,
    #[error("{0} vertices; the 3-color construction needs an even order")]
    OddOrder(usize),
    #[error("internal invariant broken: {0}")]
    Invariant(String),
}

/// One reduction performed while coloring, in the order applied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum ReductionStep {
    /// Even cycle colored alternately 1, 2.
    BaseEvenCycle { length: usize },
    /// At most five edges, colored by exhaustive search.
    BaseSmall { edges: usize },
    /// `x u v y` replaced by the edge `xy`.
    Case11 {
        u: usize,
        v: usize,
        x: usize,
        y: usize,
    },
    /// `u`, `v` deleted; `xy` already an edge.
    Case12 {
        u: usize,
        v: usize,
        x: usize,
        y: usize,
    },
    /// As [`ReductionStep::Case12`], leaving an odd cycle colored directly.
    Case12OddCycle {
        u: usize,
        v: usize,
        x: usize,
        y: usize,
    },
    /// Triangle `uvw` contracted into `super_vertex` (which reuses `u`'s id);
    /// `a` and `b` are the outside neighbors of `u` and `w`.
    Case2 {
        u: usize,
        v: usize,
        w: usize,
        a: usize,
        b: usize,
        super_vertex: usize,
    },
    /// As [`ReductionStep::Case2`], leaving an odd cycle colored directly.
    Case2OddCycle {
        u: usize,
        v: usize,
        w: usize,
        a: usize,
        b: usize,
        super_vertex: usize,
    },
}

/// Interval coloring with at most four colors of a 2-connected outerplanar
/// graph with maximum degree at most 3 that is not an odd cycle.
pub fn color_subcubic_le4(g: &Graph) -> Result<EdgeColoring, SubcubicError> {
    color_subcubic_le4_traced(g).map(|(c, _)| c)
}

/// [`color_subcubic_le4`] together with the reductions it applied.
pub fn color_subcubic_le4_traced(
    g: &Graph,
) -> Result<(EdgeColoring, Vec<ReductionStep>), SubcubicError> {
    recognize_outerplanar_2connected(g).map_err(SubcubicError::NotOuterplanar)?;
    if g.max_degree() > 3 {
        return Err(SubcubicError::DegreeTooLarge(g.max_degree()));
    }
    if g.is_odd_cycle() {
        return Err(SubcubicError::OddCycle);
    }
    let mut trace = Vec::new();
    let mut coloring = color_rec(&g.adjacency_map(), &mut trace)?;
    coloring.set_t(coloring.max_color());
    if coloring.t() > 4 {
        return Err(SubcubicError::Invariant(format!(
            "{} colors used",
            coloring.t()
        )));
    }
    is_interval_coloring(g, &coloring).map_err(broken)?;
    Ok((coloring, trace))
}

fn broken(v: Violation) -> SubcubicError {
    SubcubicError::Invariant(v.to_string())
}

fn invariant(msg: impl Into<String>) -> SubcubicError {
    SubcubicError::Invariant(msg.into())
}

fn edge_count(adj: &Adjacency) -> usize {
    adj.values().map(BTreeSet::len).sum::<usize>() / 2
}

fn max_degree(adj: &Adjacency) -> usize {
    adj.values().map(BTreeSet::len).max().unwrap_or(0)
}

fn is_cycle(adj: &Adjacency) -> bool {
    adj.len() >= 3
        && adj.values().all(|nb| nb.len() == 2)
        && cycle_walk(adj, *adj.keys().next().unwrap(), None).len() == adj.len()
}

fn is_odd_cycle(adj: &Adjacency) -> bool {
    is_cycle(adj) && adj.len() % 2 == 1
}

/// Walks a cycle from `start`, first to `towards` (or the smaller
/// neighbor), returning the vertices in walk order without repeating
/// `start`.
fn cycle_walk(adj: &Adjacency, start: usize, towards: Option<usize>) -> Vec<usize> {
    let mut walk = vec![start];
    let mut prev = start;
    let Some(mut cur) = towards.or_else(|| adj[&start].iter().next().copied()) else {
        return walk;
    };
    while cur != start && walk.len() <= adj.len() {
        walk.push(cur);
        let next = adj[&cur].iter().copied().find(|&w| w != prev);
        prev = cur;
        match next {
            Some(n) => cur = n,
            None => break,
        }
    }
    walk
}

fn remove_vertex(adj: &mut Adjacency, v: usize) {
    if let Some(nb) = adj.remove(&v) {
        for w in nb {
            if let Some(s) = adj.get_mut(&w) {
                s.remove(&v);
            }
        }
    }
}

fn add_edge(adj: &mut Adjacency, a: usize, b: usize) {
    adj.entry(a).or_default().insert(b);
    adj.entry(b).or_default().insert(a);
}

fn remove_edge(adj: &mut Adjacency, a: usize, b: usize) {
    if let Some(s) = adj.get_mut(&a) {
        s.remove(&b);
    }
    if let Some(s) = adj.get_mut(&b) {
        s.remove(&a);
    }
}

/// Sorted colors at `v`, over the edges of `adj` that are colored.
fn colors_at(adj: &Adjacency, c: &EdgeColoring, v: usize) -> Vec<usize> {
    let mut p: Vec<usize> = adj[&v].iter().filter_map(|&w| c.color((v, w))).collect();
    p.sort_unstable();
    p
}

fn is_interval(p: &[usize]) -> bool {
    p.windows(2).all(|w| w[1] == w[0] + 1)
}

/// Properness and the interval property at `vertices` after a splice.
fn check_splice(
    adj: &Adjacency,
    c: &EdgeColoring,
    vertices: &[usize],
) -> Result<(), SubcubicError> {
    for &v in vertices {
        let p = colors_at(adj, c, v);
        if p.len() != adj[&v].len()
            || !is_interval(&p)
            || p.first() == Some(&0)
            || p.last() > Some(&4)
        {
            return Err(invariant(format!(
                "splice left vertex {v} with palette {p:?}"
            )));
        }
    }
    Ok(())
}

fn color_rec(
    adj: &Adjacency,
    trace: &mut Vec<ReductionStep>,
) -> Result<EdgeColoring, SubcubicError> {
    let m = edge_count(adj);
    let delta = max_degree(adj);
    if delta > 3 {
        return Err(SubcubicError::DegreeTooLarge(delta));
    }
    if delta <= 2 {
        if !is_cycle(adj) {
            return Err(invariant("maximum degree 2 but not a cycle"));
        }
        if adj.len() % 2 == 1 {
            return Err(SubcubicError::OddCycle);
        }
        trace.push(ReductionStep::BaseEvenCycle { length: adj.len() });
        return Ok(color_even_cycle(adj));
    }
    if m <= 5 {
        trace.push(ReductionStep::BaseSmall { edges: m });
        return color_small(adj);
    }
    let config = lemma1_in(adj).ok_or_else(|| invariant("no reduction configuration"))?;
    match config {
        Lemma1Config::Pair { u, v, x, y } if !adj[&x].contains(&y) => {
            case_11(adj, trace, m, u, v, x, y)
        }
        Lemma1Config::Pair { u, v, x, y } => case_12(adj, trace, m, u, v, x, y),
        Lemma1Config::Triangle { u, v, w } => case_2(adj, trace, m, u, v, w),
    }
}

fn color_even_cycle(adj: &Adjacency) -> EdgeColoring {
    let walk = cycle_walk(adj, *adj.keys().next().unwrap(), None);
    let len = walk.len();
    EdgeColoring::from_pairs(
        2,
        (0..len).map(|i| (Edge::new(walk[i], walk[(i + 1) % len]), 1 + i % 2)),
    )
}

/// Exhaustive search on a compacted copy, for graphs of at most five edges.
fn color_small(adj: &Adjacency) -> Result<EdgeColoring, SubcubicError> {
    let ids: Vec<usize> = adj.keys().copied().collect();
    let local: BTreeMap<usize, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let local = &local;
    let edges = adj.iter().flat_map(|(&a, nb)| {
        nb.iter()
            .filter(move |&&b| a < b)
            .map(move |&b| (local[&a], local[&b]))
    });
    let g = Graph::new(ids.len(), edges).map_err(|e| invariant(e.to_string()))?;
    for t in g.max_degree()..=4 {
        if let Some(c) = find_interval_coloring(&g, t).map_err(|e| invariant(e.to_string()))? {
            return Ok(EdgeColoring::from_pairs(
                t,
                c.iter()
                    .map(|(e, col)| (Edge::new(ids[e.lo()], ids[e.hi()]), col)),
            ));
        }
    }
    Err(invariant(
        "small base graph has no interval coloring within 4 colors",
    ))
}

fn recurse_smaller(
    reduced: &Adjacency,
    m: usize,
    trace: &mut Vec<ReductionStep>,
) -> Result<EdgeColoring, SubcubicError> {
    if edge_count(reduced) >= m {
        return Err(invariant("reduction did not shrink the edge set"));
    }
    color_rec(reduced, trace)
}

fn case_11(
    adj: &Adjacency,
    trace: &mut Vec<ReductionStep>,
    m: usize,
    u: usize,
    v: usize,
    x: usize,
    y: usize,
) -> Result<EdgeColoring, SubcubicError> {
    trace.push(ReductionStep::Case11 { u, v, x, y });
    let mut reduced = adj.clone();
    remove_vertex(&mut reduced, u);
    remove_vertex(&mut reduced, v);
    add_edge(&mut reduced, x, y);
    // x and y keep their degrees and every degree-3 vertex survives
    if max_degree(&reduced) != 3 {
        return Err(invariant("case 1.1 reduction lost its degree-3 vertex"));
    }
    let mut c = recurse_smaller(&reduced, m, trace)?;
    let a = c.remove((x, y)).ok_or_else(|| invariant("xy uncolored"))?;
    let (outer, middle) = if a == 1 { (1, 2) } else { (a, a - 1) };
    c.set((u, x), outer);
    c.set((v, y), outer);
    c.set((u, v), middle);
    check_splice(adj, &c, &[u, v, x, y])?;
    Ok(c)
}

fn case_12(
    adj: &Adjacency,
    trace: &mut Vec<ReductionStep>,
    m: usize,
    u: usize,
    v: usize,
    x: usize,
    y: usize,
) -> Result<EdgeColoring, SubcubicError> {
    let mut reduced = adj.clone();
    remove_vertex(&mut reduced, u);
    remove_vertex(&mut reduced, v);

    if is_odd_cycle(&reduced) {
        trace.push(ReductionStep::Case12OddCycle { u, v, x, y });
        let mut c = EdgeColoring::new(4);
        c.set((x, y), 3);
        let away = reduced[&x]
            .iter()
            .copied()
            .find(|&w| w != y)
            .ok_or_else(|| invariant("x isolated"))?;
        let path = cycle_walk(&reduced, x, Some(away));
        if path.last() != Some(&y) {
            return Err(invariant("x,y-path does not end at y"));
        }
        for (i, w) in path.windows(2).enumerate() {
            c.set((w[0], w[1]), 1 + i % 2);
        }
        c.set((u, x), 2);
        c.set((u, v), 3);
        c.set((v, y), 4);
        check_splice(adj, &c, adj.keys().copied().collect::<Vec<_>>().as_slice())?;
        return Ok(c);
    }

    trace.push(ReductionStep::Case12 { u, v, x, y });
    if adj[&x].len() != 3 || adj[&y].len() != 3 {
        return Err(invariant("case 1.2 with x or y of degree 2"));
    }
    let mut c = recurse_smaller(&reduced, m, trace)?;
    let sx = colors_at(&reduced, &c, x);
    let sy = colors_at(&reduced, &c, y);
    if sx.len() != 2 || sy.len() != 2 || !sx.iter().any(|col| sy.contains(col)) {
        return Err(invariant(format!("case 1.2 palettes {sx:?} and {sy:?}")));
    }
    if sx == sy {
        let cmin = sx[0];
        let (outer, middle) = if cmin == 1 { (3, 2) } else { (cmin - 1, cmin) };
        c.set((u, x), outer);
        c.set((v, y), outer);
        c.set((u, v), middle);
    } else {
        // the palettes overlap in one color; the lower one gets the top color
        let cmin = sx[0].min(sy[0]);
        let (low_end, high_end) = if sx[0] == cmin {
            ((u, x), (v, y))
        } else {
            ((v, y), (u, x))
        };
        c.set(low_end, cmin + 2);
        c.set((u, v), cmin + 1);
        c.set(high_end, cmin);
    }
    check_splice(adj, &c, &[u, v, x, y])?;
    Ok(c)
}

fn case_2(
    adj: &Adjacency,
    trace: &mut Vec<ReductionStep>,
    m: usize,
    u: usize,
    v: usize,
    w: usize,
) -> Result<EdgeColoring, SubcubicError> {
    let outside = |p: usize| {
        adj[&p]
            .iter()
            .copied()
            .find(|&q| q != u && q != v && q != w)
    };
    let a = outside(u).ok_or_else(|| invariant("u has no outside neighbor"))?;
    let b = outside(w).ok_or_else(|| invariant("w has no outside neighbor"))?;
    if a == b {
        return Err(invariant("triangle contraction would create a multi-edge"));
    }
    let mut reduced = adj.clone();
    remove_vertex(&mut reduced, v);
    remove_vertex(&mut reduced, w);
    add_edge(&mut reduced, u, b);
    remove_edge(&mut reduced, u, w);

    if is_odd_cycle(&reduced) {
        trace.push(ReductionStep::Case2OddCycle {
            u,
            v,
            w,
            a,
            b,
            super_vertex: u,
        });
        let mut c = EdgeColoring::new(4);
        c.set((u, w), 3);
        let mut path = cycle_walk(&reduced, u, Some(a));
        if path.last() != Some(&b) {
            return Err(invariant("u,w-path does not reach b"));
        }
        path.push(w);
        for (i, p) in path.windows(2).enumerate() {
            let color = if i == 0 {
                4
            } else if i % 2 == 1 {
                3
            } else {
                2
            };
            c.set((p[0], p[1]), color);
        }
        c.set((u, v), 2);
        c.set((v, w), 1);
        check_splice(adj, &c, adj.keys().copied().collect::<Vec<_>>().as_slice())?;
        return Ok(c);
    }

    trace.push(ReductionStep::Case2 {
        u,
        v,
        w,
        a,
        b,
        super_vertex: u,
    });
    let mut c = recurse_smaller(&reduced, m, trace)?;
    let star = colors_at(&reduced, &c, u);
    if star.len() != 2 || star[1] != star[0] + 1 {
        return Err(invariant(format!("contracted vertex palette {star:?}")));
    }
    let moved = c.remove((u, b)).ok_or_else(|| invariant("ub uncolored"))?;
    c.set((w, b), moved);
    let cmin = star[0];
    let (base, pair) = if cmin == 1 {
        (3, (1, 2))
    } else {
        (cmin - 1, (cmin, cmin + 1))
    };
    c.set((u, w), base);
    for (cu, cw) in [pair, (pair.1, pair.0)] {
        c.set((u, v), cu);
        c.set((v, w), cw);
        if check_splice(adj, &c, &[u, v, w, a, b]).is_ok() {
            return Ok(c);
        }
    }
    Err(invariant("neither orientation of the triangle colors fits"))
}

/// Three-coloring for even order: the outer cycle alternates 1, 2 from its
/// canonical first edge and every chord gets 3. With maximum degree 3 the
/// chords form a matching, so each vertex sees `{1, 2}` or `{1, 2, 3}`.
pub fn color_even_hamiltonian(
    g: &Graph,
    emb: &OuterEmbedding,
) -> Result<EdgeColoring, SubcubicError> {
    emb.verify(g).map_err(SubcubicError::NotOuterplanar)?;
    if g.vertex_count() % 2 == 1 {
        return Err(SubcubicError::OddOrder(g.vertex_count()));
    }
    if g.max_degree() != 3 {
        return Err(SubcubicError::NotMaxDegreeThree(g.max_degree()));
    }
    let mut c = EdgeColoring::new(3);
    for (i, e) in emb.cycle_edges().enumerate() {
        c.set(e, 1 + i % 2);
    }
    for &e in emb.chords() {
        c.set(e, 3);
    }
    is_interval_coloring(g, &c).map_err(broken)?;
    Ok(c)
}

/// Minimum-width interval coloring for maximum degree exactly 3: width 3
/// for even order, 4 for odd order.
pub fn color_optimal_subcubic(g: &Graph) -> Result<(usize, EdgeColoring), SubcubicError> {
    let emb = recognize_outerplanar_2connected(g).map_err(SubcubicError::NotOuterplanar)?;
    if g.max_degree() != 3 {
        return Err(SubcubicError::NotMaxDegreeThree(g.max_degree()));
    }
    if g.vertex_count().is_multiple_of(2) {
        Ok((3, color_even_hamiltonian(g, &emb)?))
    } else {
        let c = color_subcubic_le4(g)?;
        // a 3-coloring would make color 2 a perfect matching
        if c.t() != 4 {
            return Err(invariant(format!(
                "odd order colored with {} colors",
                c.t()
            )));
        }
        Ok((4, c))
    }
}
