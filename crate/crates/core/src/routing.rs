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

//! Goodness checking and the deterministic greedy router.

use std::collections::BTreeMap;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::system::CategorySystem;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodnessReport {
    pub good: bool,
    /// Ordered pairs `(s, t)` where no neighbor of `s` is strictly closer to
    /// `t`, sorted.
    pub counterexamples: Vec<(usize, usize)>,
    pub connectivity_violations: Vec<usize>,
}

fn check_compatible(sys: &CategorySystem, g: &Graph) -> Result<()> {
    if sys.n() != g.n() {
        return Err(Error::Domain(format!(
            "system is over {} vertices but the graph has {}",
            sys.n(),
            g.n()
        )));
    }
    Ok(())
}

/// The neighbor of `u` with the smallest distance in `dist_to_target`,
/// lowest id on ties, provided it is strictly smaller than `u`'s own.
fn next_hop(g: &Graph, dist_to_target: &[usize], u: usize) -> Option<usize> {
    let best = g.neighbors(u).iter().copied().min_by_key(|&v| (dist_to_target[v], v))?;
    (dist_to_target[best] < dist_to_target[u]).then_some(best)
}

fn stuck_sources(g: &Graph, sys: &CategorySystem, t: usize) -> Vec<(usize, usize)> {
    let dist = sys.cdist_to(t);
    (0..g.n())
        .filter(|&s| s != t && !g.neighbors(s).iter().any(|&v| dist[v] < dist[s]))
        .map(|s| (s, t))
        .collect()
}

/// Checks every ordered pair `s != t` for a neighbor of `s` strictly closer
/// to `t`, and every category for connectivity.
pub fn is_good(sys: &CategorySystem, g: &Graph) -> Result<GoodnessReport> {
    check_compatible(sys, g)?;
    let connectivity_violations = sys.validate_connected(g)?;

    #[cfg(feature = "parallel")]
    let per_target: Vec<Vec<(usize, usize)>> = (0..g.n()).into_par_iter().map(|t| stuck_sources(g, sys, t)).collect();
    #[cfg(not(feature = "parallel"))]
    let per_target: Vec<Vec<(usize, usize)>> = (0..g.n()).map(|t| stuck_sources(g, sys, t)).collect();

    let mut counterexamples: Vec<_> = per_target.into_iter().flatten().collect();
    counterexamples.sort_unstable();
    Ok(GoodnessReport {
        good: counterexamples.is_empty() && connectivity_violations.is_empty(),
        counterexamples,
        connectivity_violations,
    })
}

/// Outcome of a single greedy route.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Delivered(Vec<usize>),
    /// No neighbor of `at` decreases the distance; `path` ends at `at`.
    Stuck {
        path: Vec<usize>,
        at: usize,
    },
}

impl Route {
    pub fn path(&self) -> &[usize] {
        match self {
            Route::Delivered(p) => p,
            Route::Stuck { path, .. } => path,
        }
    }

    pub fn is_delivered(&self) -> bool {
        matches!(self, Route::Delivered(_))
    }

    /// Number of hops taken.
    pub fn hops(&self) -> usize {
        self.path().len() - 1
    }
}

fn walk(g: &Graph, dist_to_target: &[usize], s: usize, t: usize) -> Route {
    let mut path = vec![s];
    let mut u = s;
    while u != t {
        match next_hop(g, dist_to_target, u) {
            Some(v) => {
                path.push(v);
                u = v;
            }
            None => return Route::Stuck { path, at: u },
        }
    }
    Route::Delivered(path)
}

/// Routes from `s` to `t`, always stepping to the neighbor of minimum
/// `cdist(., t)` (lowest id on ties). Every step strictly decreases `cdist`,
/// so the walk terminates.
pub fn greedy_route(sys: &CategorySystem, g: &Graph, s: usize, t: usize) -> Result<Route> {
    check_compatible(sys, g)?;
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    Ok(walk(g, &sys.cdist_to(t), s, t))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRoute {
    pub s: usize,
    pub t: usize,
    pub route_len: usize,
    pub dist: usize,
}

impl PairRoute {
    pub fn stretch(&self) -> f64 {
        if self.dist == 0 {
            1.0
        } else {
            self.route_len as f64 / self.dist as f64
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteFailure {
    pub s: usize,
    pub t: usize,
    pub stuck: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RoutingReport {
    pub pairs: Vec<PairRoute>,
    pub failures: Vec<RouteFailure>,
    /// Both stretch statistics are 1.0 when no pair was delivered.
    pub max_stretch: f64,
    pub mean_stretch: f64,
}

/// Seeded sample of ordered pairs for [`route_all_pairs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sample {
    pub budget: usize,
    pub seed: u64,
}

fn route_target(
    g: &Graph,
    sys: &CategorySystem,
    t: usize,
    sources: &[usize],
) -> Vec<std::result::Result<PairRoute, RouteFailure>> {
    let dist_to_target = sys.cdist_to(t);
    let hops = g.bfs_distances(t).expect("target checked by caller");
    sources
        .iter()
        .map(|&s| match walk(g, &dist_to_target, s, t) {
            Route::Delivered(path) => Ok(PairRoute {
                s,
                t,
                route_len: path.len() - 1,
                dist: hops[s],
            }),
            Route::Stuck { at, .. } => Err(RouteFailure { s, t, stuck: at }),
        })
        .collect()
}

/// Routes the given ordered pairs and gathers stretch statistics against BFS
/// distances. Output is sorted by `(s, t)` regardless of input order.
pub fn route_pairs(sys: &CategorySystem, g: &Graph, pairs: &[(usize, usize)]) -> Result<RoutingReport> {
    check_compatible(sys, g)?;
    let mut by_target: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(s, t) in pairs {
        g.check_vertex(s)?;
        g.check_vertex(t)?;
        by_target.entry(t).or_default().push(s);
    }
    let jobs: Vec<(usize, Vec<usize>)> = by_target.into_iter().collect();

    #[cfg(feature = "parallel")]
    let results: Vec<_> = jobs
        .par_iter()
        .flat_map_iter(|(t, sources)| route_target(g, sys, *t, sources))
        .collect();
    #[cfg(not(feature = "parallel"))]
    let results: Vec<_> = jobs
        .iter()
        .flat_map(|(t, sources)| route_target(g, sys, *t, sources))
        .collect();

    let mut delivered = Vec::new();
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok(p) => delivered.push(p),
            Err(f) => failures.push(f),
        }
    }
    delivered.sort_unstable_by_key(|p| (p.s, p.t));
    failures.sort_unstable_by_key(|f| (f.s, f.t));

    let stretched: Vec<f64> = delivered
        .iter()
        .filter(|p| p.dist > 0)
        .map(PairRoute::stretch)
        .collect();
    let (max_stretch, mean_stretch) = if stretched.is_empty() {
        (1.0, 1.0)
    } else {
        (
            stretched.iter().copied().fold(f64::MIN, f64::max),
            stretched.iter().sum::<f64>() / stretched.len() as f64,
        )
    };
    Ok(RoutingReport {
        pairs: delivered,
        failures,
        max_stretch,
        mean_stretch,
    })
}

/// Routes every ordered pair `s != t`, or a seeded sample of at most
/// `budget` distinct ordered pairs.
pub fn route_all_pairs(sys: &CategorySystem, g: &Graph, sample: Option<Sample>) -> Result<RoutingReport> {
    let n = g.n();
    let total = n * n.saturating_sub(1);
    let decode = |i: usize| {
        let s = i / (n - 1);
        let r = i % (n - 1);
        (s, if r < s { r } else { r + 1 })
    };
    let pairs: Vec<(usize, usize)> = match sample {
        Some(Sample { budget, seed }) if budget < total => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picked: Vec<usize> = index::sample(&mut rng, total, budget).into_vec();
            picked.sort_unstable();
            picked.into_iter().map(decode).collect()
        }
        _ => (0..total).map(decode).collect(),
    };
    route_pairs(sys, g, &pairs)
}
