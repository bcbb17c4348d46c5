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

//! Interval `Δ`-colorings of triangular fans.
//!
//! Fans up to eight rim vertices come from a base table recovered by
//! exhaustive search. Larger fans grow from the seven- or eight-vertex entry
//! by repeatedly attaching two rim vertices and two ears with a fixed color
//! pattern; the table entries for `TF(7)` and `TF(8)` are searched under the
//! palette constraints that make the first attachment fit.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{is_interval_coloring, EdgeColoring, RawColoring, Violation};
use crate::graph::{gen_triangular_fan, Edge, LabeledGraph};
use crate::outerplanar::{recognize_outerplanar_2connected, separating_triangles};
use crate::solver::{find_interval_coloring, Search, SearchResult};

const GOLDEN_TABLE: &str = include_str!("../data/fan_base_table.json");

/// Largest fan stored in the base table.
pub const TABLE_MAX: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanError {
    #[error("triangular fans need n >= {min}, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("no admissible interval coloring of TF({0}) found")]
    BaseSearchFailed(usize),
    #[error("base table is malformed: {0}")]
    BadTable(String),
    #[error("coloring of TF({n}) is invalid: {violation}")]
    Invalid { n: usize, violation: Violation },
}

/// Interval `Δ`-colorings of `TF(3)` through `TF(8)`, keyed by `n`, in the
/// vertex numbering of [`gen_triangular_fan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanBaseTable {
    entries: BTreeMap<usize, EdgeColoring>,
}

impl FanBaseTable {
    pub fn get(&self, n: usize) -> Option<&EdgeColoring> {
        self.entries.get(&n)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &EdgeColoring)> {
        self.entries.iter().map(|(&n, c)| (n, c))
    }

    /// The checked-in table.
    pub fn golden() -> Result<Self, FanError> {
        Self::from_json(GOLDEN_TABLE)
    }

    pub fn from_json(text: &str) -> Result<Self, FanError> {
        let raw: BTreeMap<String, RawColoring> =
            serde_json::from_str(text).map_err(|e| FanError::BadTable(e.to_string()))?;
        let mut entries = BTreeMap::new();
        for (key, rc) in raw {
            let n: usize = key
                .parse()
                .map_err(|_| FanError::BadTable(format!("key {key:?}")))?;
            let c = EdgeColoring::try_from(rc).map_err(|e| FanError::BadTable(e.to_string()))?;
            entries.insert(n, c);
        }
        Ok(FanBaseTable { entries })
    }

    /// One entry per line, edges in ascending order.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        for (i, (n, c)) in self.entries.iter().enumerate() {
            let edges: Vec<String> = c
                .iter()
                .map(|(e, col)| format!("[{}, {}, {}]", e.lo(), e.hi(), col))
                .collect();
            let sep = if i + 1 == self.entries.len() { "" } else { "," };
            let _ = writeln!(
                out,
                "  \"{n}\": {{\"t\": {}, \"edges\": [{}]}}{sep}",
                c.t(),
                edges.join(", ")
            );
        }
        out.push_str("}\n");
        out
    }
}

fn fan(n: usize) -> Result<LabeledGraph, FanError> {
    gen_triangular_fan(n).map_err(|_| FanError::TooSmall { n, min: 3 })
}

/// Recovers the base table by search. `TF(7)` and `TF(8)` are constrained so
/// that the apex palette is `1..=Δ` and the last rim vertex's palette sits
/// right below the colors the first attachment gives it, and the accepted
/// coloring must extend validly by two attachments.
pub fn derive_base_table() -> Result<FanBaseTable, FanError> {
    let mut entries = BTreeMap::new();
    for n in 3..=TABLE_MAX {
        let tf = fan(n)?;
        let g = &tf.graph;
        let delta = g.max_degree();
        let found = if n < 7 {
            find_interval_coloring(g, delta).map_err(|_| FanError::BaseSearchFailed(n))?
        } else {
            let last = tf.labels.id(&format!("v{}", n - 1));
            // attaching at i = 3 adds colors 6, 7 (odd n) or 7, 8 (even n)
            // at the last rim vertex, whose palette must be the three colors
            // just below
            let below: Vec<usize> = if n % 2 == 1 {
                vec![3, 4, 5]
            } else {
                vec![4, 5, 6]
            };
            let apex: Vec<usize> = (1..=delta).collect();
            let search = Search::new(g, delta)
                .and_then(|s| s.fix_palette(tf.labels.id("u"), &apex))
                .and_then(|s| s.fix_palette(last, &below))
                .map_err(|_| FanError::BaseSearchFailed(n))?;
            let mut accept = |c: &EdgeColoring| {
                (1..=2).all(|steps| {
                    extend(&tf, c, n + 2 * steps)
                        .is_ok_and(|(big, ext)| is_interval_coloring(&big.graph, &ext).is_ok())
                })
            };
            match search.run(&mut accept) {
                SearchResult::Found(c) => Some(c),
                _ => None,
            }
        };
        entries.insert(n, found.ok_or(FanError::BaseSearchFailed(n))?);
    }
    Ok(FanBaseTable { entries })
}

/// Applies one attachment step `i` in place on a coloring of the fan that
/// `labels` describes (which must already contain the new vertices).
///
/// Odd fans (`TF(2i+1) -> TF(2i+3)`) and even fans (`TF(2i+2) -> TF(2i+4)`)
/// use different patterns; indices are the 1-based rim/ear numbers.
fn attach(c: &mut EdgeColoring, tf: &LabeledGraph, odd: bool, i: usize) {
    let id = |s: String| tf.labels.id(&s);
    let u = id("u".into());
    let v = |j: usize| id(format!("v{j}"));
    let w = |j: usize| id(format!("w{j}"));
    let mut set = |a: usize, b: usize, col: usize| c.set(Edge::new(a, b), col);
    if odd {
        set(u, v(2 * i + 1), 2 * i + 2);
        set(u, v(2 * i + 2), 2 * i + 1);
        set(v(2 * i + 1), w(2 * i), 2 * i - 1);
        set(w(2 * i + 1), v(2 * i + 2), 2 * i - 1);
        set(v(2 * i + 1), v(2 * i + 2), 2 * i);
        set(v(2 * i), w(2 * i), 2 * i);
        set(v(2 * i), v(2 * i + 1), 2 * i + 1);
        set(v(2 * i + 1), w(2 * i + 1), 2 * i - 2);
    } else {
        set(u, v(2 * i + 2), 2 * i + 3);
        set(u, v(2 * i + 3), 2 * i + 2);
        set(v(2 * i + 2), w(2 * i + 1), 2 * i);
        set(w(2 * i + 2), v(2 * i + 3), 2 * i);
        set(v(2 * i + 2), v(2 * i + 3), 2 * i + 1);
        set(v(2 * i + 1), w(2 * i + 1), 2 * i + 1);
        set(v(2 * i + 1), v(2 * i + 2), 2 * i + 2);
        set(v(2 * i + 2), w(2 * i + 2), 2 * i - 1);
    }
}

/// Re-indexes a coloring of `small` onto the fan `big` by vertex labels.
fn embed(small: &LabeledGraph, c: &EdgeColoring, big: &LabeledGraph) -> EdgeColoring {
    let map = |v: usize| {
        big.labels
            .id(small.labels.name(v).expect("labelled vertex"))
    };
    EdgeColoring::from_pairs(
        c.t(),
        c.iter()
            .map(|(e, col)| (Edge::new(map(e.lo()), map(e.hi())), col)),
    )
}

/// Grows `base` (a coloring of `small`, which is `TF(7)` or `TF(8)`) to
/// `TF(n)` for `n` of the same parity.
fn extend(
    small: &LabeledGraph,
    base: &EdgeColoring,
    n: usize,
) -> Result<(LabeledGraph, EdgeColoring), FanError> {
    let big = fan(n)?;
    let odd = n % 2 == 1;
    let mut c = embed(small, base, &big);
    let last_step = if odd { (n - 3) / 2 } else { (n - 4) / 2 };
    for i in 3..=last_step {
        attach(&mut c, &big, odd, i);
    }
    c.set_t(big.graph.max_degree());
    Ok((big, c))
}

/// Interval `Δ(TF(n))`-coloring of the triangular fan `TF(n)`, in the vertex
/// numbering of [`gen_triangular_fan`].
pub fn color_fan(n: usize) -> Result<EdgeColoring, FanError> {
    color_fan_with(&FanBaseTable::golden()?, n)
}

/// [`color_fan`] starting from the given table.
pub fn color_fan_with(table: &FanBaseTable, n: usize) -> Result<EdgeColoring, FanError> {
    let tf = fan(n)?;
    let c = if n <= TABLE_MAX {
        table.get(n).cloned().ok_or(FanError::BaseSearchFailed(n))?
    } else {
        let start = if n % 2 == 1 { 7 } else { 8 };
        let base = table.get(start).ok_or(FanError::BaseSearchFailed(start))?;
        extend(&fan(start)?, base, n)?.1
    };
    is_interval_coloring(&tf.graph, &c).map_err(|violation| FanError::Invalid { n, violation })?;
    Ok(c)
}

/// A fan with separating triangles that is nonetheless interval colorable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxenovichReport {
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub separating_triangles: Vec<[usize; 3]>,
    pub separating_triangle_count: usize,
    pub colors_used: usize,
    pub coloring_valid: bool,
    #[serde(serialize_with = "raw")]
    pub coloring: EdgeColoring,
    pub conclusion: String,
}

fn raw<S: serde::Serializer>(c: &EdgeColoring, s: S) -> Result<S::Ok, S::Error> {
    Serialize::serialize(&RawColoring::from(c), s)
}

/// Exhibits `TF(n)`, `n >= 5`: its separating triangles next to a validated
/// interval coloring with `Δ(TF(n))` colors.
pub fn axenovich_demo(n: usize) -> Result<AxenovichReport, FanError> {
    if n < 5 {
        return Err(FanError::TooSmall { n, min: 5 });
    }
    let tf = fan(n)?;
    let g = &tf.graph;
    let emb = recognize_outerplanar_2connected(g)
        .map_err(|e| FanError::BadTable(format!("TF({n}) not recognized: {e}")))?;
    let triangles = separating_triangles(g, &emb);
    let coloring = color_fan(n)?;
    let coloring_valid = is_interval_coloring(g, &coloring).is_ok();
    let conclusion = format!(
        "TF({n}) is an outerplanar triangulation with {} separating triangles and an interval {}-coloring, \
         so separating triangles do not rule out interval colorability",
        triangles.len(),
        coloring.t()
    );
    Ok(AxenovichReport {
        n,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        max_degree: g.max_degree(),
        separating_triangle_count: triangles.len(),
        separating_triangles: triangles,
        colors_used: coloring.t(),
        coloring_valid,
        coloring,
        conclusion,
    })
}
