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

//! Exhaustive search for the minimum memdim of a good system on tiny graphs.
//!
//! Iterative deepening on the memdim budget `m`. At each node the search
//! picks the violated ordered pair `(s, t)` with the fewest repairs and
//! branches over them. A repair of `(s, t)` is a connected set `C` with
//! `t in C`, `s not in C` and some neighbor of `s` in `C`; every good
//! superset of the current system contains one, so the branching is
//! complete. Multisets already expanded at the current budget are skipped.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::system::CategorySystem;

/// Largest graph the searcher accepts.
pub const SEARCH_VERTEX_LIMIT: usize = 12;

#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub optimum: usize,
    pub witness: CategorySystem,
    pub nodes_explored: u64,
}

struct Search<'a> {
    n: usize,
    g: &'a Graph,
    subsets: Vec<u32>,
    /// Repairs for pair `(s, t)` at `s * n + t`.
    repairs: Vec<Vec<u16>>,
    /// `cd[x * n + t] = cdist(x, t)` for the current partial system.
    cd: Vec<u16>,
    counts: Vec<usize>,
    chosen: Vec<u16>,
    visited: HashSet<Vec<u16>>,
    category_cap: usize,
    truncated: bool,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, category_cap: usize) -> Self {
        let n = g.n();
        let nbr_mask: Vec<u32> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u)))
            .collect();
        let subsets: Vec<u32> = (1u32..(1u32 << n))
            .filter(|&mask| is_connected_mask(mask, &nbr_mask))
            .collect();
        let mut repairs = vec![Vec::new(); n * n];
        for (i, &c) in subsets.iter().enumerate() {
            for s in (0..n).filter(|&s| c & (1 << s) == 0 && c & nbr_mask[s] != 0) {
                for t in (0..n).filter(|&t| c & (1 << t) != 0) {
                    repairs[s * n + t].push(i as u16);
                }
            }
        }
        Search {
            n,
            g,
            subsets,
            repairs,
            cd: vec![0; n * n],
            counts: vec![0; n],
            chosen: Vec::new(),
            visited: HashSet::new(),
            category_cap,
            truncated: false,
            nodes: 0,
        }
    }

    fn reset(&mut self) {
        self.cd.iter_mut().for_each(|x| *x = 0);
        self.counts.iter_mut().for_each(|x| *x = 0);
        self.chosen.clear();
        self.visited.clear();
    }

    fn violated(&self, s: usize, t: usize) -> bool {
        let here = self.cd[s * self.n + t];
        !self.g.neighbors(s).iter().any(|&u| self.cd[u * self.n + t] < here)
    }

    fn fits(&self, c: u32, m: usize) -> bool {
        (0..self.n).all(|v| c & (1 << v) == 0 || self.counts[v] < m)
    }

    fn apply(&mut self, c: u32, sign: i32) {
        let n = self.n;
        for t in (0..n).filter(|&t| c & (1 << t) != 0) {
            for x in (0..n).filter(|&x| c & (1 << x) == 0) {
                let cell = &mut self.cd[x * n + t];
                *cell = (*cell as i32 + sign) as u16;
            }
        }
        for v in (0..n).filter(|&v| c & (1 << v) != 0) {
            self.counts[v] = (self.counts[v] as i32 + sign) as usize;
        }
    }

    fn dfs(&mut self, m: usize) -> bool {
        self.nodes += 1;
        let n = self.n;
        let mut best: Option<(usize, usize)> = None;
        for t in 0..n {
            for s in (0..n).filter(|&s| s != t) {
                if !self.violated(s, t) {
                    continue;
                }
                let pair = s * n + t;
                let feasible = self.repairs[pair]
                    .iter()
                    .filter(|&&i| self.fits(self.subsets[i as usize], m))
                    .count();
                if feasible == 0 {
                    return false;
                }
                if best.is_none_or(|(_, f)| feasible < f) {
                    best = Some((pair, feasible));
                }
            }
        }
        let Some((pair, _)) = best else {
            return true;
        };
        if self.chosen.len() >= self.category_cap {
            self.truncated = true;
            return false;
        }
        let options: Vec<u16> = self.repairs[pair]
            .iter()
            .copied()
            .filter(|&i| self.fits(self.subsets[i as usize], m))
            .collect();
        for i in options {
            let mut key = self.chosen.clone();
            key.push(i);
            key.sort_unstable();
            if !self.visited.insert(key) {
                continue;
            }
            let c = self.subsets[i as usize];
            self.apply(c, 1);
            self.chosen.push(i);
            if self.dfs(m) {
                return true;
            }
            self.chosen.pop();
            self.apply(c, -1);
        }
        false
    }

    fn witness(&self) -> Result<CategorySystem> {
        let cats = self
            .chosen
            .iter()
            .map(|&i| {
                let c = self.subsets[i as usize];
                (0..self.n).filter(|&v| c & (1 << v) != 0).collect()
            })
            .collect();
        CategorySystem::new(self.n, cats)
    }
}

fn is_connected_mask(mask: u32, nbr_mask: &[u32]) -> bool {
    let start = mask.trailing_zeros();
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = nbr_mask[v] & mask & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == mask
}

/// Minimum memdim over all good systems on `g`, with a witness.
///
/// Budgets run from the diameter up to `memdim_cap`. Fails with
/// [`Error::CapExhausted`] when no budget up to the cap succeeds, or when a
/// budget was cut short by `category_cap` before a solution was found.
pub fn exact_min_memdim(g: &Graph, memdim_cap: usize, category_cap: usize) -> Result<SearchResult> {
    if g.n() > SEARCH_VERTEX_LIMIT {
        return Err(Error::GraphTooLarge {
            n: g.n(),
            limit: SEARCH_VERTEX_LIMIT,
        });
    }
    if memdim_cap == 0 && g.n() > 1 || category_cap == 0 && g.n() > 1 {
        return Err(Error::CapExhausted {
            memdim_cap,
            category_cap,
        });
    }
    let mut search = Search::new(g, category_cap);
    for m in g.diameter()..=memdim_cap {
        search.reset();
        if search.dfs(m) {
            let witness = search.witness()?;
            return Ok(SearchResult {
                optimum: witness.memdim(),
                witness,
                nodes_explored: search.nodes,
            });
        }
        if search.truncated {
            break;
        }
    }
    Err(Error::CapExhausted {
        memdim_cap,
        category_cap,
    })
}
