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

//! Browser demo: build a graph and a category system, then inspect greedy
//! routes and the category distance field towards a chosen target.
//!
//! [`Demo`] is usable from native Rust too; only the constructor wrapper
//! touches JavaScript types.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use catroute::bounds::bounds_report;
use catroute::constructions::{
    clique_wand_system, cycle_system, general_system, grid_system, hypercube_system, long_star_system, path_system,
    star_antichain_system, torus_system, tree_system,
};
use catroute::{generate, greedy_route, is_good, CategorySystem, Family, Graph, GraphSpec, Route, Tree};

/// Largest graph the page will lay out and verify.
pub const MAX_VERTICES: usize = 1500;

#[wasm_bindgen]
pub struct Demo {
    graph: Graph,
    system: CategorySystem,
    positions: Vec<f64>,
}

#[derive(Serialize)]
struct RouteView<'a> {
    delivered: bool,
    path: &'a [usize],
    hops: usize,
    shortest: usize,
}

#[derive(Serialize)]
struct Summary {
    n: usize,
    edges: usize,
    categories: usize,
    memdim: usize,
    diameter: usize,
    good: bool,
    counterexamples: usize,
    certified_bound: f64,
    indicative_bound: f64,
}

fn natural_system(family: &Family, g: &Graph) -> catroute::Result<CategorySystem> {
    match *family {
        Family::Path { n } => path_system(n),
        Family::Cycle { k } => cycle_system(k),
        Family::Grid { a, b } => grid_system(a, b),
        Family::Torus { k, l } => torus_system(k, l),
        Family::Hypercube { d } => hypercube_system(d),
        Family::Star { l, d: 1 } if l >= 2 => star_antichain_system(l),
        Family::Star { l, d } if l >= 2 => long_star_system(l, d),
        Family::CliqueWand { n, delta, diam } => clique_wand_system(n, delta, diam),
        Family::Star { .. } | Family::RandomTree { .. } => Ok(tree_system(&Tree::new(g.clone())?)),
        Family::RandomConnected { .. } => Ok(general_system(g)),
    }
}

/// BFS layers around the eccentricity center, one ring per layer, each
/// vertex placed near the angle of its BFS parent. Coordinates lie in
/// `[-1, 1]`.
fn radial_layout(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let center = g.eccentricity_center();
    let dist = g.bfs_distances(center).expect("center is a vertex");
    let depth = dist.iter().copied().max().unwrap_or(0).max(1);
    let mut angle = vec![0.0f64; n];
    let mut layers: Vec<Vec<usize>> = vec![Vec::new(); depth + 1];
    for v in 0..n {
        layers[dist[v]].push(v);
    }
    for ring in &layers[1..] {
        let parent_angle = |v: usize| {
            g.neighbors(v)
                .iter()
                .filter(|&&u| dist[u] + 1 == dist[v])
                .map(|&u| angle[u])
                .fold(f64::INFINITY, f64::min)
        };
        let mut keyed: Vec<(f64, usize)> = ring.iter().map(|&v| (parent_angle(v), v)).collect();
        keyed.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let count = keyed.len() as f64;
        for (i, &(_, v)) in keyed.iter().enumerate() {
            angle[v] = std::f64::consts::TAU * (i as f64 + 0.5) / count;
        }
    }
    (0..n)
        .flat_map(|v| {
            let r = dist[v] as f64 / depth as f64;
            [r * angle[v].cos(), r * angle[v].sin()]
        })
        .collect()
}

impl Demo {
    /// `spec_json` is a generator spec such as
    /// `{"family":"star","l":4,"d":2}`. `construction` is `natural` (the
    /// family's own system), `tree` or `general`.
    pub fn build(spec_json: &str, construction: &str) -> Result<Demo, String> {
        let spec: GraphSpec = serde_json::from_str(spec_json).map_err(|e| e.to_string())?;
        let graph = generate(&spec).map_err(|e| e.to_string())?;
        if graph.n() > MAX_VERTICES {
            return Err(format!(
                "{} vertices exceeds the demo limit of {MAX_VERTICES}",
                graph.n()
            ));
        }
        let system = match construction {
            "natural" => natural_system(&spec.family, &graph),
            "tree" => Tree::new(graph.clone()).map(|t| tree_system(&t)),
            "general" => Ok(general_system(&graph)),
            other => return Err(format!("unknown construction `{other}`")),
        }
        .map_err(|e| e.to_string())?;
        let positions = radial_layout(&graph);
        Ok(Demo {
            graph,
            system,
            positions,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn system(&self) -> &CategorySystem {
        &self.system
    }
}

#[wasm_bindgen]
impl Demo {
    #[wasm_bindgen(constructor)]
    pub fn new(spec_json: &str, construction: &str) -> Result<Demo, JsError> {
        Demo::build(spec_json, construction).map_err(|e| JsError::new(&e))
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Interleaved `x, y` per vertex.
    pub fn positions(&self) -> Vec<f64> {
        self.positions.clone()
    }

    /// Flat `u, v` pairs.
    pub fn edges(&self) -> Vec<u32> {
        self.graph
            .edges()
            .into_iter()
            .flat_map(|(u, v)| [u as u32, v as u32])
            .collect()
    }

    pub fn category_count(&self) -> usize {
        self.system.len()
    }

    pub fn category(&self, index: usize) -> Vec<u32> {
        if index >= self.system.len() {
            return Vec::new();
        }
        self.system.category(index).iter().map(|&v| v as u32).collect()
    }

    /// Greedy route as JSON: `{delivered, path, hops, shortest}`.
    pub fn route(&self, s: usize, t: usize) -> String {
        let Ok(route) = greedy_route(&self.system, &self.graph, s, t) else {
            return "null".into();
        };
        let shortest = self.graph.bfs_distances(t).map(|d| d[s]).unwrap_or(0);
        let view = RouteView {
            delivered: matches!(route, Route::Delivered(_)),
            path: route.path(),
            hops: route.hops(),
            shortest,
        };
        serde_json::to_string(&view).unwrap_or_else(|_| "null".into())
    }

    /// Category distance from every vertex to `t`.
    pub fn cdist_field(&self, t: usize) -> Vec<u32> {
        if t >= self.graph.n() {
            return Vec::new();
        }
        self.system.cdist_to(t).into_iter().map(|d| d as u32).collect()
    }

    /// Membership dimension, goodness verdict and bounds as JSON.
    pub fn summary(&self) -> String {
        let report = is_good(&self.system, &self.graph).ok();
        let bounds = bounds_report(&self.graph, None).ok();
        let summary = Summary {
            n: self.graph.n(),
            edges: self.graph.edge_count(),
            categories: self.system.len(),
            memdim: self.system.memdim(),
            diameter: self.graph.diameter(),
            good: report.as_ref().is_some_and(|r| r.good),
            counterexamples: report.map_or(0, |r| r.counterexamples.len()),
            certified_bound: bounds.as_ref().map_or(0.0, |b| b.max_certified()),
            indicative_bound: bounds
                .and_then(|b| b.indicative_bounds.first().map(|x| x.value))
                .unwrap_or(0.0),
        };
        serde_json::to_string(&summary).unwrap_or_else(|_| "null".into())
    }
}
