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

//! Generators for every graph family the constructions target.
//!
//! Vertex layouts are fixed so that constructions can address positions
//! directly:
//!
//! * `path(n)`: `0 - 1 - .. - n-1`.
//! * `cycle(k)`: the path plus the edge `{k-1, 0}`.
//! * `grid(a, b)` = `path(a) x path(b)`, `torus(k, l)` = `cycle(k) x cycle(l)`
//!   and `hypercube(d)` = `path(2)^d`, all using the product encoding
//!   `(u, x) -> u * |H| + x`.
//! * `star(l, d)`: center `0`; arm `i` (0-based) holds
//!   `1 + i*d, .., 1 + i*d + d - 1`, ordered outward, so its leaf is
//!   `(i + 1) * d`. See [`star_vertex`].
//! * `clique_wand(n, delta, diam)`: see [`CliqueWandLayout`].

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Tree};

/// A graph family together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Path { n: usize },
    Cycle { k: usize },
    Grid { a: usize, b: usize },
    Torus { k: usize, l: usize },
    Hypercube { d: usize },
    Star { l: usize, d: usize },
    CliqueWand { n: usize, delta: usize, diam: usize },
    RandomTree { n: usize },
    RandomConnected { n: usize, m: usize },
}

/// Declarative description of a generator instance. The seed is only read by
/// the random families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    #[serde(flatten)]
    pub family: Family,
    #[serde(default)]
    pub seed: u64,
}

impl GraphSpec {
    pub fn new(family: Family) -> Self {
        GraphSpec { family, seed: 0 }
    }

    pub fn with_seed(family: Family, seed: u64) -> Self {
        GraphSpec { family, seed }
    }
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::Grid { .. } => "grid",
            Family::Torus { .. } => "torus",
            Family::Hypercube { .. } => "hypercube",
            Family::Star { .. } => "star",
            Family::CliqueWand { .. } => "clique_wand",
            Family::RandomTree { .. } => "random_tree",
            Family::RandomConnected { .. } => "random_connected",
        }
    }
}

fn invalid(family: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        family,
        reason: reason.into(),
    }
}

fn require(ok: bool, family: &'static str, reason: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(invalid(family, reason))
    }
}

pub fn generate(spec: &GraphSpec) -> Result<Graph> {
    match spec.family {
        Family::Path { n } => path(n),
        Family::Cycle { k } => cycle(k),
        Family::Grid { a, b } => grid(a, b),
        Family::Torus { k, l } => torus(k, l),
        Family::Hypercube { d } => hypercube(d),
        Family::Star { l, d } => star(l, d),
        Family::CliqueWand { n, delta, diam } => clique_wand(n, delta, diam),
        Family::RandomTree { n } => random_tree(n, spec.seed).map(Tree::into_graph),
        Family::RandomConnected { n, m } => random_connected(n, m, spec.seed),
    }
}

pub fn path(n: usize) -> Result<Graph> {
    require(n >= 2, "path", "n must be at least 2")?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(k: usize) -> Result<Graph> {
    require(k >= 3, "cycle", "k must be at least 3")?;
    Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
}

pub fn grid(a: usize, b: usize) -> Result<Graph> {
    require(a >= 2 && b >= 2, "grid", "both sides must be at least 2")?;
    path(a)?.cross_product(&path(b)?)
}

pub fn torus(k: usize, l: usize) -> Result<Graph> {
    require(k >= 3 && l >= 3, "torus", "both sides must be at least 3")?;
    cycle(k)?.cross_product(&cycle(l)?)
}

pub fn hypercube(d: usize) -> Result<Graph> {
    require(
        (1..usize::BITS as usize - 1).contains(&d),
        "hypercube",
        "d must be in 1..63",
    )?;
    let edge = path(2)?;
    let mut g = edge.clone();
    for _ in 1..d {
        g = g.cross_product(&edge)?;
    }
    Ok(g)
}

/// Id of the vertex at `depth` (1-based, `1..=d`) on arm `arm` of `star(_, d)`.
pub fn star_vertex(d: usize, arm: usize, depth: usize) -> usize {
    debug_assert!((1..=d).contains(&depth));
    1 + arm * d + depth - 1
}

pub fn star(l: usize, d: usize) -> Result<Graph> {
    require(l >= 1 && d >= 1, "star", "l and d must be at least 1")?;
    let n = l
        .checked_mul(d)
        .and_then(|x| x.checked_add(1))
        .ok_or(Error::Overflow(l, d))?;
    let mut edges = Vec::with_capacity(n - 1);
    for arm in 0..l {
        edges.push((0, star_vertex(d, arm, 1)));
        for depth in 2..=d {
            edges.push((star_vertex(d, arm, depth - 1), star_vertex(d, arm, depth)));
        }
    }
    Graph::from_edges(n, edges)
}

/// Vertex layout of `clique_wand(n, delta, diam)`:
///
/// * clique vertices `u_0 .. u_{delta-1}` are ids `0 .. delta`;
/// * the `n` outer vertices are ids `delta .. delta + n`, each adjacent to
///   every clique vertex;
/// * the wand is a path of `diam` further vertices `delta + n ..`, the first
///   adjacent to `u_0`.
///
/// The diameter is `diam + 1`: the far end of the wand is `diam` hops from
/// `u_0` and one more from any outer vertex or other clique vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueWandLayout {
    pub outer: usize,
    pub delta: usize,
    pub diam: usize,
}

impl CliqueWandLayout {
    pub fn new(outer: usize, delta: usize, diam: usize) -> Result<Self> {
        require(outer >= 1, "clique_wand", "n must be at least 1")?;
        require(delta >= 2, "clique_wand", "delta must be at least 2")?;
        require(diam >= 1, "clique_wand", "diam must be at least 1")?;
        Ok(CliqueWandLayout { outer, delta, diam })
    }

    pub fn vertex_count(&self) -> usize {
        self.delta + self.outer + self.diam
    }

    pub fn clique(&self, j: usize) -> usize {
        j
    }

    pub fn outer_vertex(&self, i: usize) -> usize {
        self.delta + i
    }

    /// The `j`-th wand vertex, `1..=diam`, counted from the clique.
    pub fn wand(&self, j: usize) -> usize {
        self.delta + self.outer + j - 1
    }

    pub fn expected_diameter(&self) -> usize {
        self.diam + 1
    }
}

pub fn clique_wand(n: usize, delta: usize, diam: usize) -> Result<Graph> {
    let layout = CliqueWandLayout::new(n, delta, diam)?;
    let mut edges = Vec::new();
    for i in 0..delta {
        for j in i + 1..delta {
            edges.push((layout.clique(i), layout.clique(j)));
        }
        for o in 0..n {
            edges.push((layout.clique(i), layout.outer_vertex(o)));
        }
    }
    edges.push((layout.clique(0), layout.wand(1)));
    for j in 2..=diam {
        edges.push((layout.wand(j - 1), layout.wand(j)));
    }
    Graph::from_edges(layout.vertex_count(), edges)
}

/// Uniform random labelled tree on `n` vertices, decoded from a seeded Prüfer
/// sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Tree> {
    require(n >= 1, "random_tree", "n must be at least 1")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Tree::new(Graph::from_edges(n, prufer_tree_edges(n, &mut rng))?)
}

fn prufer_tree_edges(n: usize, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    match n {
        1 => return Vec::new(),
        2 => return vec![(0, 1)],
        _ => {}
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer decode always has a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    edges
}

/// Random connected graph with `n` vertices and `m` edges: a uniform random
/// spanning tree plus `m - (n - 1)` further distinct edges, all drawn from
/// one seeded stream.
pub fn random_connected(n: usize, m: usize, seed: u64) -> Result<Graph> {
    require(n >= 1, "random_connected", "n must be at least 1")?;
    let max_edges = n * (n - 1) / 2;
    if m + 1 < n || m > max_edges {
        return Err(invalid(
            "random_connected",
            format!("m must lie in {}..={max_edges}", n - 1),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree = prufer_tree_edges(n, &mut rng);
    let mut present: BTreeSet<(usize, usize)> = tree.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let extra = m - (n - 1);
    let free = max_edges - (n - 1);
    if extra * 2 <= free {
        while present.len() < m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                present.insert((u.min(v), u.max(v)));
            }
        }
    } else {
        let candidates: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|e| !present.contains(e))
            .collect();
        for i in index::sample(&mut rng, candidates.len(), extra) {
            present.insert(candidates[i]);
        }
    }
    Graph::from_edges(n, present)
}
