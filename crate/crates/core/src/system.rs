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

//! The category model: categories, membership, `cdist` and memdim.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A sequence of categories over the vertices `0..n`, with the inverse
/// membership index kept in sync.
///
/// Categories are identified by index, so two categories with equal content
/// are still distinct and both count towards `cdist` and memdim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategorySystem {
    n: usize,
    categories: Vec<Vec<usize>>,
    membership: Vec<Vec<usize>>,
}

/// On-disk shape: `{"categories": [[v, ..], ..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SystemFile {
    pub categories: Vec<Vec<usize>>,
}

impl Serialize for CategorySystem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SystemFile {
            categories: self.categories.clone(),
        }
        .serialize(serializer)
    }
}

impl CategorySystem {
    /// Builds a system over `0..n`. Each category is sorted and deduplicated;
    /// empty categories and out-of-range ids are rejected.
    pub fn new(n: usize, categories: Vec<Vec<usize>>) -> Result<Self> {
        let mut categories = categories;
        for (i, c) in categories.iter_mut().enumerate() {
            c.sort_unstable();
            c.dedup();
            match c.last() {
                None => return Err(Error::EmptyCategory(i)),
                Some(&v) if v >= n => return Err(Error::InvalidVertex { vertex: v, n }),
                _ => {}
            }
        }
        let membership = invert(n, &categories);
        Ok(CategorySystem {
            n,
            categories,
            membership,
        })
    }

    pub fn empty(n: usize) -> Self {
        CategorySystem {
            n,
            categories: Vec::new(),
            membership: vec![Vec::new(); n],
        }
    }

    pub fn from_file(file: SystemFile, n: usize) -> Result<Self> {
        CategorySystem::new(n, file.categories)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of categories.
    pub fn len(&self) -> usize {
        self.categories.len()
    }

    pub fn is_empty(&self) -> bool {
        self.categories.is_empty()
    }

    pub fn categories(&self) -> &[Vec<usize>] {
        &self.categories
    }

    pub fn category(&self, index: usize) -> &[usize] {
        &self.categories[index]
    }

    /// Sorted indices of the categories containing `v` (`cat(v)`).
    pub fn memberships(&self, v: usize) -> &[usize] {
        &self.membership[v]
    }

    pub fn membership_count(&self, v: usize) -> usize {
        self.membership[v].len()
    }

    pub fn memdim(&self) -> usize {
        self.membership.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of categories containing `t` but not `u`.
    pub fn cdist(&self, u: usize, t: usize) -> Result<usize> {
        for v in [u, t] {
            if v >= self.n {
                return Err(Error::InvalidVertex { vertex: v, n: self.n });
            }
        }
        Ok(self.cdist_unchecked(u, t))
    }

    pub(crate) fn cdist_unchecked(&self, u: usize, t: usize) -> usize {
        let (a, b) = (&self.membership[t], &self.membership[u]);
        let (mut i, mut j, mut missing) = (0, 0, 0);
        while i < a.len() {
            if j == b.len() || a[i] < b[j] {
                missing += 1;
                i += 1;
            } else if a[i] == b[j] {
                i += 1;
                j += 1;
            } else {
                j += 1;
            }
        }
        missing
    }

    /// `cdist(v, t)` for every vertex `v` at once.
    pub fn cdist_to(&self, t: usize) -> Vec<usize> {
        let mut in_target = vec![false; self.categories.len()];
        for &c in &self.membership[t] {
            in_target[c] = true;
        }
        let total = self.membership[t].len();
        self.membership
            .iter()
            .map(|cats| total - cats.iter().filter(|&&c| in_target[c]).count())
            .collect()
    }

    /// Indices of categories whose induced subgraph in `g` is disconnected.
    pub fn validate_connected(&self, g: &Graph) -> Result<Vec<usize>> {
        if self.n > g.n() {
            if let Some(v) = self.categories.iter().flatten().find(|&&v| v >= g.n()) {
                return Err(Error::InvalidVertex { vertex: *v, n: g.n() });
            }
        }
        Ok(self
            .categories
            .iter()
            .enumerate()
            .filter(|(_, c)| !g.is_connected_subset(c))
            .map(|(i, _)| i)
            .collect())
    }

    /// Recomputes the membership index from the category list.
    pub fn rebuild_membership(&mut self) {
        self.membership = invert(self.n, &self.categories);
    }

    /// Same categories in a different order: `order[i]` is the old index of
    /// the new `i`-th category.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let cats = order.iter().map(|&i| self.categories[i].clone()).collect();
        CategorySystem::new(self.n, cats)
    }
}

fn invert(n: usize, categories: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut membership = vec![Vec::new(); n];
    for (i, c) in categories.iter().enumerate() {
        for &v in c {
            membership[v].push(i);
        }
    }
    membership
}
