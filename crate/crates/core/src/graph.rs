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

//! Undirected connected graphs and the metrics the category model needs.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected, simple, connected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted so that every traversal visits neighbors
/// in ascending id order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphFile", into = "GraphFile")]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// On-disk shape of a graph: `{"n": .., "edges": [[u, v], ..]}` with `u < v`
/// and edges sorted lexicographically.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphFile> for Graph {
    type Error = Error;

    fn try_from(file: GraphFile) -> Result<Self> {
        Graph::from_edges(file.n, file.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl From<Graph> for GraphFile {
    fn from(g: Graph) -> Self {
        GraphFile {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges, out-of-range ids and disconnected inputs.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        let g = Graph { adj };
        if !g.is_connected_subset(&(0..n).collect::<Vec<_>>()) {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn average_degree(&self) -> f64 {
        2.0 * self.edge_count() as f64 / self.n() as f64
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n() })
        }
    }

    /// Whether the subgraph induced by `vertices` is connected. The empty set
    /// counts as disconnected. Ids must be in range.
    pub fn is_connected_subset(&self, vertices: &[usize]) -> bool {
        let Some(&start) = vertices.first() else {
            return false;
        };
        let mut inside = vec![false; self.n()];
        for &v in vertices {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if inside[v] && !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        let distinct = inside.iter().filter(|&&b| b).count();
        reached == distinct
    }

    /// Hop distances from `source` to every vertex.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<usize>> {
        self.check_vertex(source)?;
        Ok(self.bfs_with_parents(source).0)
    }

    /// BFS exploring neighbors in ascending order; returns distances and the
    /// BFS-tree parent of every vertex (`usize::MAX` for the source).
    fn bfs_with_parents(&self, source: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.n();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        (dist, parent)
    }

    pub fn eccentricity(&self, v: usize) -> Result<usize> {
        Ok(self.bfs_distances(v)?.into_iter().max().unwrap_or(0))
    }

    fn eccentricities(&self) -> Vec<usize> {
        (0..self.n())
            .map(|v| self.bfs_with_parents(v).0.into_iter().max().unwrap_or(0))
            .collect()
    }

    /// Length of a longest shortest path, by BFS from every vertex.
    pub fn diameter(&self) -> usize {
        self.eccentricities().into_iter().max().unwrap_or(0)
    }

    pub fn radius(&self) -> usize {
        self.eccentricities().into_iter().min().unwrap_or(0)
    }

    /// A vertex of minimum eccentricity, lowest id on ties.
    pub fn eccentricity_center(&self) -> usize {
        let ecc = self.eccentricities();
        let best = *ecc.iter().min().unwrap_or(&0);
        ecc.iter().position(|&e| e == best).unwrap_or(0)
    }

    /// BFS tree rooted at [`Graph::eccentricity_center`]. Its diameter is at
    /// most twice the radius, hence at most twice the diameter of `self`.
    pub fn spanning_tree(&self) -> Tree {
        let root = self.eccentricity_center();
        let (_, parent) = self.bfs_with_parents(root);
        let edges = parent
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p != usize::MAX)
            .map(|(v, &p)| (v, p));
        let graph = Graph::from_edges(self.n(), edges).expect("BFS tree of a connected graph");
        Tree {
            graph,
            root: Some(root),
        }
    }

    /// Cross product: vertex `(u, x)` is encoded as `u * h.n() + x`; `(u, x)`
    /// and `(v, y)` are adjacent iff `u ~ v` and `x = y`, or `u = v` and
    /// `x ~ y`.
    pub fn cross_product(&self, h: &Graph) -> Result<Graph> {
        let (ng, nh) = (self.n(), h.n());
        let n = ng.checked_mul(nh).ok_or(Error::Overflow(ng, nh))?;
        let mut edges = Vec::with_capacity(ng * h.edge_count() + nh * self.edge_count());
        for (u, v) in self.edges() {
            for x in 0..nh {
                edges.push((u * nh + x, v * nh + x));
            }
        }
        for u in 0..ng {
            for (x, y) in h.edges() {
                edges.push((u * nh + x, u * nh + y));
            }
        }
        Graph::from_edges(n, edges)
    }
}

/// A graph known to be a tree, optionally rooted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    graph: Graph,
    root: Option<usize>,
}

impl Tree {
    pub fn new(graph: Graph) -> Result<Self> {
        if !graph.is_tree() {
            return Err(Error::NotATree {
                n: graph.n(),
                edges: graph.edge_count(),
            });
        }
        Ok(Tree { graph, root: None })
    }

    pub fn with_root(mut self, root: usize) -> Result<Self> {
        self.graph.check_vertex(root)?;
        self.root = Some(root);
        Ok(self)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}
