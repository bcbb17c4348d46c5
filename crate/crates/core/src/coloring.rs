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

//! Edge colorings and the interval-coloring validator.
//!
//! A coloring with colors `1..=t` is an interval `t`-coloring when it is
//! proper, every color in `1..=t` is used, and the colors at every vertex
//! form a block of consecutive integers. [`is_interval_coloring`] is the
//! single arbiter for that property; every coloring produced elsewhere in
//! the crate is checked against it in tests.

use std::collections::BTreeMap;
use std::fmt::{self, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph};

/// Assignment of positive colors to edges, with a declared color count `t`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeColoring {
    t: usize,
    colors: BTreeMap<Edge, usize>,
}

impl EdgeColoring {
    pub fn new(t: usize) -> Self {
        EdgeColoring {
            t,
            colors: BTreeMap::new(),
        }
    }

    pub fn from_pairs<I, E>(t: usize, pairs: I) -> Self
    where
        I: IntoIterator<Item = (E, usize)>,
        E: Into<Edge>,
    {
        EdgeColoring {
            t,
            colors: pairs.into_iter().map(|(e, c)| (e.into(), c)).collect(),
        }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn set_t(&mut self, t: usize) {
        self.t = t;
    }

    pub fn color(&self, e: impl Into<Edge>) -> Option<usize> {
        self.colors.get(&e.into()).copied()
    }

    pub fn set(&mut self, e: impl Into<Edge>, color: usize) {
        self.colors.insert(e.into(), color);
    }

    pub fn remove(&mut self, e: impl Into<Edge>) -> Option<usize> {
        self.colors.remove(&e.into())
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Edges with their colors, ascending by `(min, max)`.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, usize)> + '_ {
        self.colors.iter().map(|(&e, &c)| (e, c))
    }

    pub fn max_color(&self) -> usize {
        self.colors.values().copied().max().unwrap_or(0)
    }

    pub fn min_color(&self) -> usize {
        self.colors.values().copied().min().unwrap_or(0)
    }

    /// Applies `f` to every color, keeping `t`.
    pub fn map_colors(&self, mut f: impl FnMut(usize) -> usize) -> Self {
        EdgeColoring {
            t: self.t,
            colors: self.colors.iter().map(|(&e, &c)| (e, f(c))).collect(),
        }
    }

    /// Rebuilds the graph spanned by the colored edges on vertices
    /// `0..=max endpoint`.
    pub fn spanned_graph(&self) -> Result<Graph, crate::graph::GraphError> {
        let n = self.colors.keys().map(|e| e.hi() + 1).max().unwrap_or(0);
        Graph::new(n, self.colors.keys().copied())
    }

    /// Serializes as `{"t": .., "edges": [[u, v, color], ...]}` with edges in
    /// ascending `(min, max)` order, one edge per line.
    pub fn to_json(&self) -> String {
        let mut out = format!("{{\n  \"t\": {},\n  \"edges\": [", self.t);
        for (i, (e, c)) in self.iter().enumerate() {
            let sep = if i == 0 { "\n" } else { ",\n" };
            let _ = write!(out, "{sep}    [{}, {}, {}]", e.lo(), e.hi(), c);
        }
        if !self.colors.is_empty() {
            out.push_str("\n  ");
        }
        out.push_str("]\n}\n");
        out
    }

    pub fn from_json(text: &str) -> Result<Self, ColoringParseError> {
        let raw: RawColoring = serde_json::from_str(text)?;
        Self::try_from(raw)
    }
}

#[derive(Debug, Error)]
pub enum ColoringParseError {
    #[error("invalid coloring JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("edge {0} listed twice")]
    DuplicateEdge(Edge),
    #[error("loop at vertex {0}")]
    Loop(usize),
}

/// Wire form of [`EdgeColoring`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawColoring {
    pub t: usize,
    pub edges: Vec<[usize; 3]>,
}

impl TryFrom<RawColoring> for EdgeColoring {
    type Error = ColoringParseError;

    fn try_from(raw: RawColoring) -> Result<Self, Self::Error> {
        let mut c = EdgeColoring::new(raw.t);
        for [u, v, color] in raw.edges {
            if u == v {
                return Err(ColoringParseError::Loop(u));
            }
            let e = Edge::new(u, v);
            if c.colors.insert(e, color).is_some() {
                return Err(ColoringParseError::DuplicateEdge(e));
            }
        }
        Ok(c)
    }
}

impl From<&EdgeColoring> for RawColoring {
    fn from(c: &EdgeColoring) -> Self {
        RawColoring {
            t: c.t,
            edges: c.iter().map(|(e, col)| [e.lo(), e.hi(), col]).collect(),
        }
    }
}

/// The colors on edges at one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Palette {
    pub vertex: usize,
    /// Sorted; duplicates are kept so improper colorings remain visible.
    pub colors: Vec<usize>,
}

impl Palette {
    /// Consecutive and duplicate-free.
    pub fn is_interval(&self) -> bool {
        self.colors.windows(2).all(|w| w[1] == w[0] + 1)
    }
}

impl fmt::Display for Palette {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// Colors on the edges of `g` at `v`. Uncolored edges are skipped.
pub fn palette(g: &Graph, coloring: &EdgeColoring, v: usize) -> Palette {
    let mut colors: Vec<usize> = g
        .neighbors(v)
        .iter()
        .filter_map(|&w| coloring.color((v, w)))
        .collect();
    colors.sort_unstable();
    Palette { vertex: v, colors }
}

/// First reason a coloring fails to be an interval coloring.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    #[error("edge {edge} has no color")]
    Uncolored { edge: Edge },
    #[error("colored edge {edge} is not in the graph")]
    ForeignEdge { edge: Edge },
    #[error("edge {edge} has color {color} outside 1..={t}")]
    ColorOutOfRange { edge: Edge, color: usize, t: usize },
    #[error("color {color} repeats at vertex {vertex}")]
    NotProper { vertex: usize, color: usize },
    #[error("palette {palette} at vertex {vertex} is not an interval")]
    NotInterval { vertex: usize, palette: String },
    #[error("color {color} is never used")]
    ColorUnused { color: usize },
}

/// Checks that `coloring` is an interval `t`-coloring of `g`, with `t` the
/// coloring's declared count.
///
/// Scan order is fixed: edge coverage and color range (edges ascending),
/// then per vertex ascending properness and the interval property, then
/// unused colors ascending. Only the first violation is reported.
pub fn is_interval_coloring(g: &Graph, coloring: &EdgeColoring) -> Result<(), Violation> {
    for &edge in g.edges() {
        match coloring.color(edge) {
            None => return Err(Violation::Uncolored { edge }),
            Some(color) if color == 0 || color > coloring.t => {
                return Err(Violation::ColorOutOfRange {
                    edge,
                    color,
                    t: coloring.t,
                })
            }
            Some(_) => {}
        }
    }
    if let Some((edge, _)) = coloring.iter().find(|&(e, _)| g.edge_index(e).is_none()) {
        return Err(Violation::ForeignEdge { edge });
    }
    check_vertices(g, coloring, 0..g.vertex_count())?;
    let mut used = vec![false; coloring.t + 1];
    for (_, c) in coloring.iter() {
        used[c] = true;
    }
    match (1..=coloring.t).find(|&c| !used[c]) {
        Some(color) => Err(Violation::ColorUnused { color }),
        None => Ok(()),
    }
}

/// Properness and the interval property at the given vertices only,
/// ignoring uncolored edges. Used to check splices incrementally.
pub fn check_vertices(
    g: &Graph,
    coloring: &EdgeColoring,
    vertices: impl IntoIterator<Item = usize>,
) -> Result<(), Violation> {
    for v in vertices {
        let p = palette(g, coloring, v);
        if let Some(w) = p.colors.windows(2).find(|w| w[0] == w[1]) {
            return Err(Violation::NotProper {
                vertex: v,
                color: w[0],
            });
        }
        if !p.is_interval() {
            return Err(Violation::NotInterval {
                vertex: v,
                palette: p.to_string(),
            });
        }
    }
    Ok(())
}

/// Shifts colors so the smallest is 1 and sets `t` to the largest.
pub fn normalize(coloring: &EdgeColoring) -> EdgeColoring {
    if coloring.is_empty() {
        return coloring.clone();
    }
    let shift = coloring.min_color() - 1;
    let mut out = coloring.map_colors(|c| c - shift);
    out.t = out.max_color();
    out
}

/// Number of even and odd integers in `start..start + len`.
///
/// For even `len` both counts are `len / 2`; that balance is what forces
/// parities in the triangle-graph obstruction.
pub fn interval_parity_counts(start: usize, len: usize) -> (usize, usize) {
    let evens = (start..start + len).filter(|c| c % 2 == 0).count();
    (evens, len - evens)
}
