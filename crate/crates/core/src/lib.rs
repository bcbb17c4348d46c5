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

//! Interval edge-colorings of outerplanar graphs.
//!
//! The crate builds, checks and optimizes interval colorings: proper edge
//! colorings with colors `1..=t`, all used, such that the colors at every
//! vertex are consecutive integers.
//!
//! * [`graph`]: simple graphs, family generators, edge-list and DOT I/O.
//! * [`outerplanar`]: recognition of 2-connected outerplanar graphs, outer
//!   cycles, chords, separating triangles and the local reduction
//!   configurations.
//! * [`coloring`]: colorings and the validator every other module answers to.
//! * [`solver`]: exhaustive search for exact widths, non-colorability
//!   certificates and the parity obstruction for triangle graphs.
//! * [`subcubic`]: the inductive construction for maximum degree 3.
//! * [`fan`]: explicit optimal colorings of triangular fans.

pub mod coloring;
pub mod fan;
pub mod graph;
pub mod outerplanar;
pub mod solver;
pub mod subcubic;

pub use coloring::{is_interval_coloring, normalize, palette, EdgeColoring, Palette, Violation};
pub use fan::{axenovich_demo, color_fan, AxenovichReport, FanBaseTable};
pub use graph::{Edge, Graph, GraphError, GraphLabels, LabeledGraph};
pub use outerplanar::{
    find_lemma1_config, recognize_outerplanar_2connected, Lemma1Config, OuterEmbedding,
    RejectReason,
};
pub use solver::{width, Certificate, ColoringOutcome, ParityCertificate};
pub use subcubic::{color_optimal_subcubic, color_subcubic_le4, ReductionStep};
