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

//! `ivcolor` command-line tool.
//!
//! Exit status is 0 on success, 1 when the answer is a valid but negative
//! verdict (rejected graph, no coloring, invalid coloring, budget exhausted)
//! and 2 when the invocation itself is wrong.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ivcolor::graph::{
    gen_cycle, gen_random_outerplanar_subcubic, gen_triangle_graph, gen_triangular_fan,
    read_edge_list, write_dot, write_edge_list,
};
use ivcolor::outerplanar::separating_triangles;
use ivcolor::solver::{find_interval_coloring, width_with_budget, Certificate, ColoringOutcome};
use ivcolor::subcubic::{color_optimal_subcubic, color_subcubic_le4_traced, SubcubicError};
use ivcolor::{
    axenovich_demo, color_fan, is_interval_coloring, recognize_outerplanar_2connected,
    EdgeColoring, Graph,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "ivcolor",
    version,
    about = "Interval edge-colorings of outerplanar graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph family member as an edge list.
    Gen(GenArgs),
    /// Test for 2-connected outerplanarity and print the outer embedding.
    Recognize(IoArgs),
    /// Color a graph by construction or by exact search.
    Color(ColorArgs),
    /// Compute the interval chromatic width by exact search.
    Width(WidthArgs),
    /// Check a coloring (JSON) for being an interval coloring.
    Verify(VerifyArgs),
    /// Color the triangular fan TF(n) with Δ colors.
    Fan(FanArgs),
    /// Show a fan with separating triangles and a valid interval coloring.
    DemoAxenovich(DemoArgs),
    /// Render a graph, optionally with a coloring, in DOT.
    ExportDot(ExportArgs),
}

#[derive(Args)]
struct IoArgs {
    /// Input file (default: stdin).
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Output file (default: stdout).
    #[arg(long = "out", value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cycle,
    Tf,
    Tklm,
    Random,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Dot,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Method {
    #[default]
    Construct,
    Exact,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// `dot` renders the graph instead of printing the edge list.
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long = "out", value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ColorArgs {
    #[command(flatten)]
    io: IoArgs,
    #[arg(long, value_enum, default_value = "construct")]
    method: Method,
    /// With `--method exact`, search for exactly this many colors.
    #[arg(long)]
    t: Option<usize>,
    #[arg(long = "budget-ms")]
    budget_ms: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the list of reductions applied by the construction here.
    #[arg(long, value_name = "FILE")]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct WidthArgs {
    #[command(flatten)]
    io: IoArgs,
    /// Only decide whether an interval t-coloring exists.
    #[arg(long)]
    t: Option<usize>,
    #[arg(long = "budget-ms")]
    budget_ms: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Coloring JSON (default: stdin).
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    #[arg(long = "out", value_name = "FILE")]
    out: Option<PathBuf>,
    /// Edge list of the graph; defaults to the graph spanned by the coloring.
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
}

#[derive(Args)]
struct FanArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long = "out", value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DemoArgs {
    #[arg(long)]
    n: usize,
    #[arg(long = "out", value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    io: IoArgs,
    /// Coloring JSON to draw on the edges.
    #[arg(long, value_name = "FILE")]
    coloring: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "dot")]
    format: Format,
}

/// How a command ended, short of an I/O or usage failure.
enum Status {
    Ok,
    Negative,
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<Status, UsageError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Recognize(a) => recognize(a),
        Command::Color(a) => color(a),
        Command::Width(a) => width(a),
        Command::Verify(a) => verify(a),
        Command::Fan(a) => fan(a),
        Command::DemoAxenovich(a) => demo(a),
        Command::ExportDot(a) => export_dot(a),
    };
    match result {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Negative) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<String, UsageError> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| UsageError(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), UsageError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| UsageError(format!("{}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn emit_json(path: Option<&Path>, value: &serde_json::Value) -> Result<(), UsageError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    write_output(path, &text)
}

fn read_graph(path: Option<&Path>) -> Result<Graph, UsageError> {
    Ok(read_edge_list(&read_input(path)?)?)
}

fn read_coloring(path: Option<&Path>) -> Result<EdgeColoring, UsageError> {
    Ok(EdgeColoring::from_json(&read_input(path)?)?)
}

fn require(value: Option<usize>, flag: &str, family: &str) -> Result<usize, UsageError> {
    value.ok_or_else(|| UsageError(format!("--family {family} needs --{flag}")))
}

fn budget(ms: Option<u64>) -> Option<Duration> {
    ms.map(Duration::from_millis)
}

fn gen(a: GenArgs) -> CmdResult {
    let g = match a.family {
        Family::Cycle => gen_cycle(require(a.n, "n", "cycle")?)?,
        Family::Tf => gen_triangular_fan(require(a.n, "n", "tf")?)?.graph,
        Family::Tklm => {
            let k = require(a.k, "k", "tklm")?;
            let l = require(a.l, "l", "tklm")?;
            let m = require(a.m, "m", "tklm")?;
            gen_triangle_graph(k, l, m)?.graph
        }
        Family::Random => gen_random_outerplanar_subcubic(require(a.n, "n", "random")?, a.seed)?,
    };
    let text = match a.format {
        Some(Format::Dot) => write_dot(&g, None)?,
        _ => write_edge_list(&g),
    };
    write_output(a.out.as_deref(), &text)?;
    Ok(Status::Ok)
}

fn recognize(a: IoArgs) -> CmdResult {
    let g = read_graph(a.input.as_deref())?;
    match recognize_outerplanar_2connected(&g) {
        Ok(emb) => {
            let triangles = separating_triangles(&g, &emb);
            emit_json(
                a.out.as_deref(),
                &json!({
                    "verdict": "accept",
                    "order": emb.order(),
                    "chords": emb.chords(),
                    "separating_triangles": triangles,
                }),
            )?;
            Ok(Status::Ok)
        }
        Err(reason) => {
            emit_json(
                a.out.as_deref(),
                &json!({ "verdict": "reject", "reason": reason.tag(), "detail": reason.to_string() }),
            )?;
            Ok(Status::Negative)
        }
    }
}

fn render_coloring(g: &Graph, c: &EdgeColoring, format: Format) -> Result<String, UsageError> {
    Ok(match format {
        Format::Json => c.to_json(),
        Format::Dot => write_dot(g, Some(c))?,
    })
}

fn emit_outcome(path: Option<&Path>, outcome: &ColoringOutcome) -> Result<(), UsageError> {
    emit_json(path, &serde_json::to_value(outcome)?)
}

fn color(a: ColorArgs) -> CmdResult {
    let g = read_graph(a.io.input.as_deref())?;
    let out = a.io.out.as_deref();
    match a.method {
        Method::Construct => {
            if a.t.is_some() {
                return Err(UsageError("--t only applies to --method exact".into()));
            }
            let built = if g.max_degree() == 3 {
                color_optimal_subcubic(&g).map(|(_, c)| (c, None))
            } else {
                color_subcubic_le4_traced(&g).map(|(c, trace)| (c, Some(trace)))
            };
            let (c, trace) = match built {
                Ok(x) => x,
                Err(SubcubicError::OddCycle) => {
                    let outcome = ColoringOutcome::NotColorable {
                        certificate: Certificate::OddCycle {
                            length: g.edge_count(),
                        },
                    };
                    emit_outcome(out, &outcome)?;
                    return Ok(Status::Negative);
                }
                Err(e) => return Err(UsageError(format!("construction does not apply: {e}"))),
            };
            if let Some(path) = &a.trace {
                let trace = match trace {
                    Some(t) => t,
                    None => color_subcubic_le4_traced(&g)?.1,
                };
                let mut text = serde_json::to_string_pretty(&trace)?;
                text.push('\n');
                write_output(Some(path), &text)?;
            }
            write_output(out, &render_coloring(&g, &c, a.format)?)?;
            Ok(Status::Ok)
        }
        Method::Exact => {
            if a.trace.is_some() {
                return Err(UsageError(
                    "--trace only applies to --method construct".into(),
                ));
            }
            let outcome = exact(&g, a.t, a.budget_ms)?;
            match outcome {
                ColoringOutcome::Colored { coloring, .. } => {
                    write_output(out, &render_coloring(&g, &coloring, a.format)?)?;
                    Ok(Status::Ok)
                }
                other => {
                    emit_outcome(out, &other)?;
                    Ok(Status::Negative)
                }
            }
        }
    }
}

/// Exact search: for a fixed `t` when given, otherwise the full width.
fn exact(
    g: &Graph,
    t: Option<usize>,
    budget_ms: Option<u64>,
) -> Result<ColoringOutcome, UsageError> {
    match t {
        None => Ok(width_with_budget(g, budget(budget_ms))?),
        Some(t) => {
            if budget_ms.is_some() {
                return Err(UsageError(
                    "--budget-ms applies to the width search only".into(),
                ));
            }
            Ok(match find_interval_coloring(g, t)? {
                Some(coloring) => ColoringOutcome::Colored { t, coloring },
                None => ColoringOutcome::NotColorable {
                    certificate: Certificate::ExhaustedAllT {
                        t_min: t,
                        t_max: t,
                        soundness: format!("exhaustive search found no interval {t}-coloring"),
                    },
                },
            })
        }
    }
}

fn width(a: WidthArgs) -> CmdResult {
    let g = read_graph(a.io.input.as_deref())?;
    let outcome = exact(&g, a.t, a.budget_ms)?;
    emit_outcome(a.io.out.as_deref(), &outcome)?;
    Ok(match outcome {
        ColoringOutcome::Colored { .. } => Status::Ok,
        _ => Status::Negative,
    })
}

fn verify(a: VerifyArgs) -> CmdResult {
    let c = read_coloring(a.input.as_deref())?;
    let g = match &a.graph {
        Some(p) => read_graph(Some(p))?,
        None => c.spanned_graph()?,
    };
    match is_interval_coloring(&g, &c) {
        Ok(()) => {
            emit_json(a.out.as_deref(), &json!({ "valid": true, "t": c.t() }))?;
            Ok(Status::Ok)
        }
        Err(v) => {
            emit_json(
                a.out.as_deref(),
                &json!({ "valid": false, "violation": v, "detail": v.to_string() }),
            )?;
            Ok(Status::Negative)
        }
    }
}

fn fan(a: FanArgs) -> CmdResult {
    let c = color_fan(a.n)?;
    let g = gen_triangular_fan(a.n)?.graph;
    write_output(a.out.as_deref(), &render_coloring(&g, &c, a.format)?)?;
    Ok(Status::Ok)
}

fn demo(a: DemoArgs) -> CmdResult {
    let report = axenovich_demo(a.n)?;
    emit_json(a.out.as_deref(), &serde_json::to_value(&report)?)?;
    Ok(Status::Ok)
}

fn export_dot(a: ExportArgs) -> CmdResult {
    if let Format::Json = a.format {
        return Err(UsageError("export-dot only writes --format dot".into()));
    }
    let g = read_graph(a.io.input.as_deref())?;
    let c = a
        .coloring
        .as_deref()
        .map(|p| read_coloring(Some(p)))
        .transpose()?;
    write_output(a.io.out.as_deref(), &write_dot(&g, c.as_ref())?)?;
    Ok(Status::Ok)
}
