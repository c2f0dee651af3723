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

//! Recursive construction for trees via balanced routing cuts, and its use
//! on arbitrary connected graphs through a spanning tree.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Tree};
use crate::system::CategorySystem;

/// A vertex `r` with its tree neighbors split into `left` and `right`.
/// `left_tree` is `r` plus the components of `T - r` hanging off `left`;
/// `right_tree` likewise. Both sides hold between a third and two thirds of
/// the vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoutingCut {
    pub r: usize,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub left_tree: Vec<usize>,
    pub right_tree: Vec<usize>,
}

/// Recursion statistics of [`tree_system_with_stats`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TreeStats {
    /// Number of nested cuts on the longest recursion path.
    pub depth: usize,
    pub cuts: usize,
}

/// A subtree with compact local ids; `ids` is sorted so local order agrees
/// with global order.
struct SubTree {
    ids: Vec<usize>,
    adj: Vec<Vec<usize>>,
}

impl SubTree {
    fn whole(g: &Graph) -> Self {
        SubTree {
            ids: (0..g.n()).collect(),
            adj: (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect(),
        }
    }

    fn len(&self) -> usize {
        self.ids.len()
    }

    /// Restriction to the local vertices in `keep`.
    fn induced(&self, keep: &[usize]) -> SubTree {
        let mut local = vec![usize::MAX; self.len()];
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        for (i, &v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| local[w] != usize::MAX)
                    .map(|&w| local[w])
                    .collect()
            })
            .collect();
        SubTree {
            ids: keep.iter().map(|&v| self.ids[v]).collect(),
            adj,
        }
    }

    fn bfs(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        let mut queue = VecDeque::from([source]);
        dist[source] = 0;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Vertices reachable from `start` without passing through `blocked`.
    fn component(&self, start: usize, blocked: usize) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        seen[blocked] = true;
        seen[start] = true;
        let mut stack = vec![start];
        let mut out = Vec::new();
        while let Some(u) = stack.pop() {
            out.push(u);
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        out
    }

    /// Lowest-id vertex whose removal leaves components of at most `n/2`
    /// vertices, together with the size of the component behind each of its
    /// neighbors (in neighbor order).
    fn centroid(&self) -> (usize, Vec<usize>) {
        let n = self.len();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![0];
        let mut seen = vec![false; n];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            order.push(u);
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = u;
                    stack.push(v);
                }
            }
        }
        let mut size = vec![1usize; n];
        for &u in order.iter().rev() {
            if parent[u] != usize::MAX {
                size[parent[u]] += size[u];
            }
        }
        let branch = |u: usize, v: usize| if parent[v] == u { size[v] } else { n - size[u] };
        let r = (0..n)
            .find(|&u| self.adj[u].iter().all(|&v| 2 * branch(u, v) <= n))
            .expect("every tree has a centroid");
        let sizes = self.adj[r].iter().map(|&v| branch(r, v)).collect();
        (r, sizes)
    }

    /// Balanced routing cut in local ids. Requires at least three vertices.
    fn cut(&self) -> LocalCut {
        let n = self.len();
        debug_assert!(n >= 3);
        let (r, sizes) = self.centroid();
        let nbrs = &self.adj[r];
        // One component of at least (n-1)/3 vertices goes left on its own;
        // otherwise components are packed left in order until that much.
        let in_left: Vec<bool> = match sizes.iter().position(|&s| 3 * s >= n - 1) {
            Some(big) => (0..nbrs.len()).map(|i| i == big).collect(),
            None => {
                let mut acc = 0;
                sizes
                    .iter()
                    .map(|&s| {
                        let take = 3 * acc < n - 1;
                        if take {
                            acc += s;
                        }
                        take
                    })
                    .collect()
            }
        };
        let mut cut = LocalCut {
            r,
            left: Vec::new(),
            right: Vec::new(),
            left_tree: vec![r],
            right_tree: vec![r],
        };
        for (i, &x) in nbrs.iter().enumerate() {
            let comp = self.component(x, r);
            if in_left[i] {
                cut.left.push(x);
                cut.left_tree.extend(comp);
            } else {
                cut.right.push(x);
                cut.right_tree.extend(comp);
            }
        }
        cut.left_tree.sort_unstable();
        cut.right_tree.sort_unstable();
        cut
    }
}

struct LocalCut {
    r: usize,
    left: Vec<usize>,
    right: Vec<usize>,
    left_tree: Vec<usize>,
    right_tree: Vec<usize>,
}

/// Finds a cut whose sides each hold between `ceil(n/3)` and `ceil(2n/3)`
/// vertices, splitting at a centroid.
pub fn balanced_routing_cut(t: &Tree) -> Result<RoutingCut> {
    if t.n() < 3 {
        return Err(Error::InvalidParameter {
            family: "tree",
            reason: "a balanced routing cut needs at least 3 vertices".into(),
        });
    }
    // Whole-tree ids are the identity map.
    let cut = SubTree::whole(t.graph()).cut();
    Ok(RoutingCut {
        r: cut.r,
        left: cut.left,
        right: cut.right,
        left_tree: cut.left_tree,
        right_tree: cut.right_tree,
    })
}

fn build(sub: &SubTree, depth: usize, stats: &mut TreeStats) -> Vec<Vec<usize>> {
    stats.depth = stats.depth.max(depth);
    match sub.len() {
        1 => return Vec::new(),
        2 => return vec![vec![sub.ids[1]], vec![sub.ids[0]]],
        _ => {}
    }
    stats.cuts += 1;
    let cut = sub.cut();
    let dist = sub.bfs(cut.r);
    let mut cats = Vec::new();
    // Routing across the cut: each side plus a growing ball around r on the
    // other side. The ball that covers the whole other side would contain
    // every vertex, so it is left out.
    for (near, far) in [(&cut.left_tree, &cut.right_tree), (&cut.right_tree, &cut.left_tree)] {
        let reach = far.iter().map(|&v| dist[v]).max().unwrap_or(0);
        for k in 0..reach {
            let mut c: Vec<usize> = near.iter().map(|&v| sub.ids[v]).collect();
            c.extend(far.iter().filter(|&&v| dist[v] <= k && v != cut.r).map(|&v| sub.ids[v]));
            c.sort_unstable();
            cats.push(c);
        }
    }

    let root = sub.ids[cut.r];
    let left = build(&sub.induced(&cut.left_tree), depth + 1, stats);
    let right = build(&sub.induced(&cut.right_tree), depth + 1, stats);
    let (left_r, left_rest): (Vec<_>, Vec<_>) = left.into_iter().partition(|c| c.binary_search(&root).is_ok());
    let (right_r, right_rest): (Vec<_>, Vec<_>) = right.into_iter().partition(|c| c.binary_search(&root).is_ok());

    // Categories through r from the two halves only ever serve routing on
    // their own side, so they are paired up.
    let mut left_r = left_r.into_iter();
    let mut right_r = right_r.into_iter();
    loop {
        match (left_r.next(), right_r.next()) {
            (Some(mut a), Some(b)) => {
                a.extend(b);
                a.sort_unstable();
                a.dedup();
                cats.push(a);
            }
            (Some(a), None) | (None, Some(a)) => cats.push(a),
            (None, None) => break,
        }
    }
    cats.extend(left_rest);
    cats.extend(right_rest);
    cats
}

pub fn tree_system_with_stats(t: &Tree) -> (CategorySystem, TreeStats) {
    let mut stats = TreeStats::default();
    let cats = build(&SubTree::whole(t.graph()), 0, &mut stats);
    let sys = CategorySystem::new(t.n(), cats).expect("categories are valid subsets");
    (sys, stats)
}

/// Good system for a tree with memdim `O(d log(2n/d))`, `d` the diameter.
pub fn tree_system(t: &Tree) -> CategorySystem {
    tree_system_with_stats(t).0
}

/// [`tree_system`] on the BFS spanning tree rooted at a center of `g`. Tree
/// edges are graph edges, so the system stays good and connected in `g`.
pub fn general_system(g: &Graph) -> CategorySystem {
    tree_system(&g.spanning_tree())
}
