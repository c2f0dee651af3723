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

//! File formats: graph and system JSON, routing and bounds CSV, DOT.
//!
//! JSON is written compactly with a trailing newline; the same value
//! always serializes to the same bytes.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::bounds::BoundsReport;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::routing::RoutingReport;
use crate::system::{CategorySystem, SystemFile};

/// Compact JSON plus newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut out = serde_json::to_string(value)?;
    out.push('\n');
    Ok(out)
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    Ok(serde_json::from_str(text)?)
}

pub fn system_from_json(text: &str, n: usize) -> Result<CategorySystem> {
    let file: SystemFile = serde_json::from_str(text)?;
    CategorySystem::from_file(file, n)
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    graph_from_json(&fs::read_to_string(path)?)
}

pub fn read_system(path: &Path, n: usize) -> Result<CategorySystem> {
    system_from_json(&fs::read_to_string(path)?, n)
}

fn csv_string<R: Serialize>(rows: impl IntoIterator<Item = R>, header: &[&str]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(header).map_err(csv_err)?;
    for row in rows {
        w.serialize(row).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

/// One row per delivered pair: `s,t,route_len,dist,stretch`.
pub fn routing_csv(report: &RoutingReport) -> Result<String> {
    let rows = report
        .pairs
        .iter()
        .map(|p| (p.s, p.t, p.route_len, p.dist, p.stretch()));
    csv_string(rows, &["s", "t", "route_len", "dist", "stretch"])
}

/// `bound_name,value` rows for certified then indicative bounds, followed
/// by `achieved` when a system was supplied.
pub fn bounds_csv(report: &BoundsReport) -> Result<String> {
    let mut rows: Vec<(String, f64)> = report
        .certified_bounds
        .iter()
        .chain(&report.indicative_bounds)
        .map(|b| (b.name.clone(), b.value))
        .collect();
    if let Some(a) = report.achieved {
        rows.push(("achieved".to_string(), a as f64));
    }
    csv_string(rows, &["bound_name", "value"])
}

/// Undirected DOT with vertex ids as labels. With `highlight = Some(i)` the
/// members of category `i` of `sys` are filled and edges inside it are bold.
pub fn to_dot(g: &Graph, sys: Option<&CategorySystem>, highlight: Option<usize>) -> Result<String> {
    let members: Vec<bool> = match (sys, highlight) {
        (_, None) => vec![false; g.n()],
        (Some(sys), Some(i)) if i < sys.len() => {
            let mut m = vec![false; g.n()];
            sys.category(i).iter().for_each(|&v| m[v] = true);
            m
        }
        (Some(sys), Some(i)) => {
            return Err(Error::Domain(format!(
                "category {i} out of range ({} categories)",
                sys.len()
            )))
        }
        (None, Some(_)) => return Err(Error::Domain("highlight needs a category system".into())),
    };
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for (v, &member) in members.iter().enumerate() {
        if member {
            let _ = writeln!(out, "  {v} [label=\"{v}\", style=filled, fillcolor=\"#f4a261\"];");
        } else {
            let _ = writeln!(out, "  {v} [label=\"{v}\"];");
        }
    }
    for (u, v) in g.edges() {
        if members[u] && members[v] {
            let _ = writeln!(out, "  {u} -- {v} [penwidth=3, color=\"#e76f51\"];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    Ok(out)
}
