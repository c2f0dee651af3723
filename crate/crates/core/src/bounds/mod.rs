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

//! Lower bounds on the membership dimension of any good system, and a
//! report that sets them against an achieved system.
//!
//! Certified bounds hold for every good system on the graph; indicative
//! bounds are asymptotic shapes evaluated with constant 1.

mod search;

pub use search::{exact_min_memdim, SearchResult, SEARCH_VERTEX_LIMIT};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators;
use crate::graph::Graph;
use crate::routing::is_good;
use crate::system::CategorySystem;

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Smallest `k >= 1` with `C(k, floor(k/2)) >= l`: the optimal memdim of
/// the diameter-2 star with `l` leaves.
pub fn antichain_k(l: u64) -> usize {
    let target = BigUint::from(l);
    let mut k = 1u64;
    while binomial(k, k / 2) < target {
        k += 1;
    }
    k as usize
}

/// Any good system has memdim at least the diameter.
pub fn lb_diameter(g: &Graph) -> usize {
    g.diameter()
}

/// On a tree every vertex `v` needs `ceil(log2 deg v)` categories.
pub fn lb_degree_tree(g: &Graph) -> Result<usize> {
    if !g.is_tree() {
        return Err(Error::NotATree {
            n: g.n(),
            edges: g.edge_count(),
        });
    }
    Ok((0..g.n())
        .map(|v| g.degree(v))
        .filter(|&d| d > 0)
        .map(crate::constructions::ceil_log2)
        .max()
        .unwrap_or(0))
}

/// Lower bound on the number of categories containing the center of the
/// star with `l` arms of length `d`:
/// `d ln l / (32 (ln d + ln ln l))` for `l >= 3`, `d >= 2`.
/// For `d = 1` this is [`antichain_k`].
pub fn star_center_lb(l: usize, d: usize) -> Result<f64> {
    if d == 0 || l == 0 {
        return Err(Error::Domain("l and d must be positive".into()));
    }
    if d == 1 {
        return Ok(antichain_k(l as u64) as f64);
    }
    if l < 3 {
        return Err(Error::Domain(format!("needs l >= 3, got {l}")));
    }
    let (l, d) = (l as f64, d as f64);
    let denom = 32.0 * (d.ln() + l.ln().ln());
    if denom <= 0.0 {
        return Err(Error::Domain("non-positive denominator".into()));
    }
    Ok(d * l.ln() / denom)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UniversalBound {
    /// The diameter: the part of the bound with a known constant.
    pub certified: usize,
    /// `diam + log2 n / log2 max(2, delta)`.
    pub indicative: f64,
}

pub fn universal_lb(n: usize, delta: f64, diam: usize) -> UniversalBound {
    let base = delta.max(2.0);
    UniversalBound {
        certified: diam,
        indicative: diam as f64 + (n as f64).log2() / base.log2(),
    }
}

/// `Some((l, d))` when `g` is exactly `star(l, d)` in generator layout.
pub fn detect_star(g: &Graph) -> Option<(usize, usize)> {
    let l = g.degree(0);
    if l == 0 || !(g.n() - 1).is_multiple_of(l) || !g.is_tree() {
        return None;
    }
    let d = (g.n() - 1) / l;
    let reference = generators::star(l, d).ok()?;
    (reference.edges() == g.edges()).then_some((l, d))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedBound {
    pub name: String,
    pub value: f64,
}

impl NamedBound {
    fn new(name: &str, value: f64) -> Self {
        NamedBound {
            name: name.to_string(),
            value,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub n: usize,
    pub diameter: usize,
    pub average_degree: f64,
    pub certified_bounds: Vec<NamedBound>,
    pub indicative_bounds: Vec<NamedBound>,
    /// Memdim of the supplied system.
    pub achieved: Option<usize>,
    /// Goodness verdict of the supplied system.
    pub good: Option<bool>,
}

impl BoundsReport {
    /// A good system must meet every certified bound. Vacuously true when no
    /// good system was supplied.
    pub fn is_sound(&self) -> bool {
        match (self.achieved, self.good) {
            (Some(a), Some(true)) => self.certified_bounds.iter().all(|b| a as f64 >= b.value - 1e-9),
            _ => true,
        }
    }

    pub fn max_certified(&self) -> f64 {
        self.certified_bounds.iter().map(|b| b.value).fold(0.0, f64::max)
    }
}

/// Collects every bound that applies to `g`; tree bounds only for trees and
/// star bounds only for graphs in star generator layout.
pub fn bounds_report(g: &Graph, sys: Option<&CategorySystem>) -> Result<BoundsReport> {
    let diameter = g.diameter();
    let average_degree = g.average_degree();
    let mut certified = vec![NamedBound::new("diameter", diameter as f64)];
    if g.is_tree() {
        certified.push(NamedBound::new("tree_degree", lb_degree_tree(g)? as f64));
    }
    if let Some((l, d)) = detect_star(g) {
        if d == 1 && l >= 2 {
            certified.push(NamedBound::new("antichain_star", antichain_k(l as u64) as f64));
        }
        if l >= 3 {
            certified.push(NamedBound::new("star_center", star_center_lb(l, d)?));
        }
    }
    let universal = universal_lb(g.n(), average_degree, diameter);
    let indicative = vec![NamedBound::new("universal", universal.indicative)];
    let (achieved, good) = match sys {
        Some(s) => (Some(s.memdim()), Some(is_good(s, g)?.good)),
        None => (None, None),
    };
    Ok(BoundsReport {
        n: g.n(),
        diameter,
        average_degree,
        certified_bounds: certified,
        indicative_bounds: indicative,
        achieved,
        good,
    })
}
