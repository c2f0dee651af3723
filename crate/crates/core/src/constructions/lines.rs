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

//! Paths, cycles and products of them.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::system::CategorySystem;

/// Suffix and prefix categories along a vertex sequence: `{order[j..]}` for
/// `j = 1..len` followed by `{order[..=j]}` for `j = 0..len-1`.
pub fn line_categories(order: &[usize]) -> Vec<Vec<usize>> {
    let len = order.len();
    let mut cats: Vec<Vec<usize>> = (1..len).map(|j| order[j..].to_vec()).collect();
    cats.extend((0..len.saturating_sub(1)).map(|j| order[..=j].to_vec()));
    cats
}

/// Every vertex of `path(n)` lands in exactly `n - 1` categories and
/// `cdist(a, b) = |a - b|`.
pub fn path_system(n: usize) -> Result<CategorySystem> {
    if n < 2 {
        return Err(Error::InvalidParameter {
            family: "path",
            reason: "n must be at least 2".into(),
        });
    }
    let order: Vec<usize> = (0..n).collect();
    CategorySystem::new(n, line_categories(&order))
}

/// All `k` arcs of `ceil(k/2)` consecutive vertices of `cycle(k)`.
///
/// The arcs containing `t` but not `s` are exactly those starting strictly
/// between `s` and `t` on the shorter side, so `cdist` equals the cycle
/// distance and memdim is `ceil(k/2)`.
pub fn cycle_system(k: usize) -> Result<CategorySystem> {
    if k < 3 {
        return Err(Error::InvalidParameter {
            family: "cycle",
            reason: "k must be at least 3".into(),
        });
    }
    let arc = k.div_ceil(2);
    let cats = (0..k)
        .map(|start| (0..arc).map(|i| (start + i) % k).collect())
        .collect();
    CategorySystem::new(k, cats)
}

/// Lifts `sys_g` and `sys_h` to `g x h`: `c x V(h)` for every `c` in `sys_g`
/// and `V(g) x c'` for every `c'` in `sys_h`. Memdims add; routing fixes the
/// first coordinate, then the second.
pub fn product_system(sys_g: &CategorySystem, g: &Graph, sys_h: &CategorySystem, h: &Graph) -> Result<CategorySystem> {
    let (ng, nh) = (g.n(), h.n());
    let n = ng.checked_mul(nh).ok_or(Error::Overflow(ng, nh))?;
    let mut cats = Vec::with_capacity(sys_g.len() + sys_h.len());
    for c in sys_g.categories() {
        cats.push(c.iter().flat_map(|&u| (0..nh).map(move |x| u * nh + x)).collect());
    }
    for c in sys_h.categories() {
        cats.push((0..ng).flat_map(|u| c.iter().map(move |&x| u * nh + x)).collect());
    }
    CategorySystem::new(n, cats)
}

pub fn grid_system(a: usize, b: usize) -> Result<CategorySystem> {
    let (ga, gb) = (crate::generators::path(a)?, crate::generators::path(b)?);
    product_system(&path_system(a)?, &ga, &path_system(b)?, &gb)
}

pub fn torus_system(k: usize, l: usize) -> Result<CategorySystem> {
    let (gk, gl) = (crate::generators::cycle(k)?, crate::generators::cycle(l)?);
    product_system(&cycle_system(k)?, &gk, &cycle_system(l)?, &gl)
}

/// `d`-fold product of the two-vertex path system.
pub fn hypercube_system(d: usize) -> Result<CategorySystem> {
    let edge = crate::generators::path(2)?;
    let edge_sys = path_system(2)?;
    if d == 0 {
        return Err(Error::InvalidParameter {
            family: "hypercube",
            reason: "d must be at least 1".into(),
        });
    }
    let mut g = edge.clone();
    let mut sys = edge_sys.clone();
    for _ in 1..d {
        sys = product_system(&sys, &g, &edge_sys, &edge)?;
        g = g.cross_product(&edge)?;
    }
    Ok(sys)
}
