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

//! Parity obstruction for triangle graphs `T(k, l, m)`.
//!
//! Every vertex of a triangle graph has even degree. An interval of even
//! length holds as many even colors as odd ones, so at each vertex exactly
//! half of the incident edges carry even colors. Two of the three triangle
//! edges always share a parity and a vertex; assuming that, the parities
//! propagate around the three even paths and collide at the far corner.
//!
//! A [`ParityCertificate`] records that propagation for each of the six
//! (corner, parity) starting points, and [`ParityCertificate::replay`]
//! re-checks every step against the graph.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::coloring::interval_parity_counts;
use crate::graph::{gen_triangle_graph, Edge, Graph, GraphLabels};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangleRole {
    X,
    Y,
    Z,
}

impl TriangleRole {
    pub const ALL: [TriangleRole; 3] = [TriangleRole::X, TriangleRole::Y, TriangleRole::Z];

    fn label(self) -> &'static str {
        match self {
            TriangleRole::X => "x",
            TriangleRole::Y => "y",
            TriangleRole::Z => "z",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Justification {
    /// Branch hypothesis on a triangle edge at the corner.
    Assumption,
    /// Half of the edges at `vertex` are even; the others already fill the
    /// opposite parity's half.
    Balance { vertex: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParityStep {
    pub edge: Edge,
    pub parity: Parity,
    pub because: Justification,
}

/// One branch: the two triangle edges at `corner` share parity `assumed`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityBranch {
    pub corner: TriangleRole,
    pub corner_vertex: usize,
    pub assumed: Parity,
    pub steps: Vec<ParityStep>,
    /// At `vertex`, `edge` was derived with parity `derived`, but the other
    /// edges there already use up that parity's half.
    pub contradiction: Contradiction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Contradiction {
    pub vertex: usize,
    pub edge: Edge,
    pub derived: Parity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityCertificate {
    pub k: usize,
    pub l: usize,
    pub m: usize,
    pub branches: Vec<ParityBranch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("parameters must be at least 1")]
    BadParameters,
    #[error("vertex {0} has odd degree")]
    OddDegree(usize),
    #[error("branch {branch}: assumptions do not match its corner")]
    BadAssumption { branch: usize },
    #[error("branch {branch}, step {step}: not justified by the known parities")]
    Unjustified { branch: usize, step: usize },
    #[error("branch {branch}: claimed contradiction does not follow")]
    NoContradiction { branch: usize },
    #[error("triangle parity pattern {0:?} is not covered by any branch")]
    Uncovered([Parity; 3]),
}

/// Vertex sequences of the three side paths, each including its end corners.
struct Sides {
    xy: Vec<usize>,
    yz: Vec<usize>,
    xz: Vec<usize>,
}

impl Sides {
    fn new(labels: &GraphLabels, k: usize, l: usize, m: usize) -> Self {
        let path = |from: &str, letter: char, half: usize, to: &str| {
            std::iter::once(labels.id(from))
                .chain((1..2 * half).map(|i| labels.id(&format!("{letter}{i}"))))
                .chain(std::iter::once(labels.id(to)))
                .collect::<Vec<_>>()
        };
        Sides {
            xy: path("x", 'u', k, "y"),
            yz: path("y", 'v', l, "z"),
            xz: path("x", 'w', m, "z"),
        }
    }

    /// Path between two corners, oriented from `from` to `to`.
    fn between(&self, from: TriangleRole, to: TriangleRole) -> Vec<usize> {
        use TriangleRole::*;
        let (p, forward) = match (from, to) {
            (X, Y) => (&self.xy, true),
            (Y, X) => (&self.xy, false),
            (Y, Z) => (&self.yz, true),
            (Z, Y) => (&self.yz, false),
            (X, Z) => (&self.xz, true),
            (Z, X) => (&self.xz, false),
            _ => unreachable!("paths join distinct corners"),
        };
        if forward {
            p.clone()
        } else {
            p.iter().rev().copied().collect()
        }
    }
}

fn path_edges(p: &[usize]) -> Vec<Edge> {
    p.windows(2).map(|w| Edge::new(w[0], w[1])).collect()
}

/// Derives the certificate that `T(k, l, m)` has no interval coloring.
pub fn parity_obstruction(
    k: usize,
    l: usize,
    m: usize,
) -> Result<ParityCertificate, CertificateError> {
    let t = gen_triangle_graph(k, l, m).map_err(|_| CertificateError::BadParameters)?;
    let sides = Sides::new(&t.labels, k, l, m);
    let corner = |r: TriangleRole| t.labels.id(r.label());

    let mut branches = Vec::with_capacity(6);
    for a in TriangleRole::ALL {
        let mut others = TriangleRole::ALL.into_iter().filter(|&r| r != a);
        let (b, c) = (others.next().unwrap(), others.next().unwrap());
        let (va, vb, vc) = (corner(a), corner(b), corner(c));
        for p in [Parity::Even, Parity::Odd] {
            let mut steps = vec![
                ParityStep {
                    edge: Edge::new(va, vb),
                    parity: p,
                    because: Justification::Assumption,
                },
                ParityStep {
                    edge: Edge::new(va, vc),
                    parity: p,
                    because: Justification::Assumption,
                },
            ];
            let ab = sides.between(a, b);
            let ac = sides.between(a, c);
            let bc = sides.between(b, c);
            // the corner's two path edges take the other parity
            steps.push(balance(Edge::new(ab[0], ab[1]), p.flip(), va));
            steps.push(balance(Edge::new(ac[0], ac[1]), p.flip(), va));
            let end_ab = walk(&ab, p.flip(), &mut steps);
            let end_ac = walk(&ac, p.flip(), &mut steps);
            debug_assert_eq!((end_ab, end_ac), (p, p));
            // at b: the triangle edge and the path end are both p
            steps.push(balance(Edge::new(vb, vc), p.flip(), vb));
            steps.push(balance(Edge::new(bc[0], bc[1]), p.flip(), vb));
            let end_bc = walk(&bc, p.flip(), &mut steps);
            let last = path_edges(&bc)
                .pop()
                .expect("side paths have at least two edges");
            branches.push(ParityBranch {
                corner: a,
                corner_vertex: va,
                assumed: p,
                steps,
                contradiction: Contradiction {
                    vertex: vc,
                    edge: last,
                    derived: end_bc,
                },
            });
        }
    }
    Ok(ParityCertificate { k, l, m, branches })
}

fn balance(edge: Edge, parity: Parity, vertex: usize) -> ParityStep {
    ParityStep {
        edge,
        parity,
        because: Justification::Balance { vertex },
    }
}

/// Propagates parity along a path whose first edge has parity `first`;
/// every inner vertex has degree 2 and so flips it. Returns the parity of
/// the last edge.
fn walk(path: &[usize], first: Parity, steps: &mut Vec<ParityStep>) -> Parity {
    let edges = path_edges(path);
    let mut p = first;
    for (i, &e) in edges.iter().enumerate().skip(1) {
        p = p.flip();
        steps.push(balance(e, p, path[i]));
    }
    p
}

impl ParityCertificate {
    /// Re-checks the certificate against a freshly generated `T(k, l, m)`:
    /// every step must follow from the parity balance at its vertex, every
    /// branch must end in a genuine contradiction, and the branches must
    /// cover every parity pattern of the three triangle edges.
    pub fn replay(&self) -> Result<(), CertificateError> {
        let t = gen_triangle_graph(self.k, self.l, self.m)
            .map_err(|_| CertificateError::BadParameters)?;
        let g = &t.graph;
        for v in 0..g.vertex_count() {
            let d = g.degree(v);
            if d % 2 == 1 {
                return Err(CertificateError::OddDegree(v));
            }
            // even-length intervals split evenly regardless of where they start
            debug_assert!((1..=2).all(|s| interval_parity_counts(s, d) == (d / 2, d / 2)));
        }
        let corner = |r: TriangleRole| t.labels.id(r.label());

        for (bi, br) in self.branches.iter().enumerate() {
            let mut known: HashMap<Edge, Parity> = HashMap::new();
            let va = corner(br.corner);
            if br.corner_vertex != va {
                return Err(CertificateError::BadAssumption { branch: bi });
            }
            let tri_at_corner: Vec<Edge> = TriangleRole::ALL
                .into_iter()
                .filter(|&r| r != br.corner)
                .map(|r| Edge::new(va, corner(r)))
                .collect();
            let assumptions: Vec<&ParityStep> = br
                .steps
                .iter()
                .filter(|s| s.because == Justification::Assumption)
                .collect();
            let assumed_ok = assumptions.len() == 2
                && br.steps[..2]
                    .iter()
                    .all(|s| s.because == Justification::Assumption)
                && assumptions.iter().all(|s| s.parity == br.assumed)
                && tri_at_corner
                    .iter()
                    .all(|e| assumptions.iter().any(|s| s.edge == *e));
            if !assumed_ok {
                return Err(CertificateError::BadAssumption { branch: bi });
            }

            for (si, step) in br.steps.iter().enumerate() {
                let justified = match step.because {
                    Justification::Assumption => true,
                    Justification::Balance { vertex } => {
                        step.edge.has(vertex)
                            && g.edge_index(step.edge).is_some()
                            && forced_parity(g, &known, vertex, step.edge) == Some(step.parity)
                    }
                };
                let consistent = known.get(&step.edge).is_none_or(|&p| p == step.parity);
                if !justified || !consistent {
                    return Err(CertificateError::Unjustified {
                        branch: bi,
                        step: si,
                    });
                }
                known.insert(step.edge, step.parity);
            }

            let c = br.contradiction;
            let holds = c.edge.has(c.vertex)
                && known.get(&c.edge) == Some(&c.derived)
                && forced_parity(g, &known, c.vertex, c.edge) == Some(c.derived.flip());
            if !holds {
                return Err(CertificateError::NoContradiction { branch: bi });
            }
        }

        let (x, y, z) = (
            corner(TriangleRole::X),
            corner(TriangleRole::Y),
            corner(TriangleRole::Z),
        );
        let tri = [Edge::new(x, y), Edge::new(y, z), Edge::new(x, z)];
        for bits in 0u8..8 {
            let pattern: [Parity; 3] = std::array::from_fn(|i| {
                if bits >> i & 1 == 0 {
                    Parity::Even
                } else {
                    Parity::Odd
                }
            });
            let parity_of = |e: Edge| pattern[tri.iter().position(|&f| f == e).unwrap()];
            let covered = self.branches.iter().any(|br| {
                let at_corner: Vec<Edge> = tri
                    .iter()
                    .copied()
                    .filter(|e| e.has(br.corner_vertex))
                    .collect();
                at_corner.iter().all(|&e| parity_of(e) == br.assumed)
            });
            if !covered {
                return Err(CertificateError::Uncovered(pattern));
            }
        }
        Ok(())
    }
}

/// Parity that the balance rule forces on `edge` at `vertex`, if the other
/// known edges there already fill one parity's half.
fn forced_parity(
    g: &Graph,
    known: &HashMap<Edge, Parity>,
    vertex: usize,
    edge: Edge,
) -> Option<Parity> {
    let half = g.degree(vertex) / 2;
    let others = g
        .neighbors(vertex)
        .iter()
        .map(|&w| Edge::new(vertex, w))
        .filter(|&e| e != edge);
    let (mut even, mut odd) = (0, 0);
    for e in others {
        match known.get(&e) {
            Some(Parity::Even) => even += 1,
            Some(Parity::Odd) => odd += 1,
            None => {}
        }
    }
    match (even >= half, odd >= half) {
        (true, false) => Some(Parity::Odd),
        (false, true) => Some(Parity::Even),
        _ => None,
    }
}
