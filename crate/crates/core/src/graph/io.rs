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

use std::fmt::Write;

use super::{Graph, GraphError};
use crate::coloring::EdgeColoring;

/// Parses the `n m` header followed by `m` lines of `u v`.
pub fn read_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        msg: "missing header".into(),
    })?;
    let [n, m] = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let [u, v] = parse_pair(line, l)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(GraphError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Graph::new(n, edges)
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2], GraphError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(GraphError::Parse {
            line,
            msg: format!("expected two integers, got {:?}", text),
        });
    }
    let parse = |s: &str| {
        s.parse::<usize>().map_err(|e| GraphError::Parse {
            line,
            msg: format!("{s:?}: {e}"),
        })
    };
    Ok([parse(fields[0])?, parse(fields[1])?])
}

/// Writes the canonical edge list: edges in ascending `(min, max)` order,
/// smaller endpoint first, LF line endings.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.lo(), e.hi());
    }
    out
}

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

/// Undirected DOT rendering. Vertices come out in ascending id order and
/// edges in ascending `(min, max)` order; with a coloring, each edge carries
/// its color as label plus a palette color.
pub fn write_dot(g: &Graph, coloring: Option<&EdgeColoring>) -> Result<String, GraphError> {
    let mut out = String::from("graph {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for &e in g.edges() {
        match coloring {
            None => {
                let _ = writeln!(out, "  {} -- {};", e.lo(), e.hi());
            }
            Some(c) => {
                let color = c.color(e).ok_or(GraphError::UncoveredEdge(e))?;
                let _ = writeln!(
                    out,
                    "  {} -- {} [label=\"{}\", color=\"{}\"];",
                    e.lo(),
                    e.hi(),
                    color,
                    PALETTE[(color.max(1) - 1) % PALETTE.len()]
                );
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
