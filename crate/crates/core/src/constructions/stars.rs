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

//! Systems for stars: the binary-digit system, the antichain system and the
//! long-star system with `d` shifted copies.
//!
//! Layouts follow [`crate::generators::star`]: center `0`, arm `i` at
//! `star_vertex(d, i, 1..=d)`, leaf `i` numbered `i` in the codes below.

use super::{ceil_log2, path_system};
use crate::bounds::antichain_k;
use crate::error::{Error, Result};
use crate::generators::star_vertex;
use crate::system::CategorySystem;

const CENTER: usize = 0;

fn too_few_leaves(min: usize) -> Error {
    Error::InvalidParameter {
        family: "star",
        reason: format!("need at least {min} leaves"),
    }
}

/// The first `count` `k`-bit numbers with exactly `weight` ones, ascending.
pub(crate) fn fixed_weight_codes(k: usize, weight: usize, count: usize) -> Result<Vec<u64>> {
    if k > 63 {
        return Err(Error::Domain(format!("code length {k} exceeds 63 bits")));
    }
    if weight == 0 || weight > k {
        return Err(Error::Domain(format!("weight {weight} invalid for length {k}")));
    }
    let limit = 1u64 << k;
    let mut out = Vec::with_capacity(count);
    let mut x: u64 = (1u64 << weight) - 1;
    while out.len() < count {
        if x >= limit {
            return Err(Error::Domain(format!(
                "only {} codes of length {k} and weight {weight}",
                out.len()
            )));
        }
        out.push(x);
        // Gosper: next larger integer with the same popcount.
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    Ok(out)
}

/// Code length `k = antichain_k(l)` and the first `l` `k`-bit strings with
/// `floor(k/2)` ones in lexicographic order. Strings of equal weight are
/// pairwise incomparable.
pub fn antichain_codes(l: usize) -> Result<(usize, Vec<u64>)> {
    if l < 2 {
        return Err(too_few_leaves(2));
    }
    let k = antichain_k(l as u64);
    Ok((k, fixed_weight_codes(k, k / 2, l)?))
}

/// Diameter-2 star: a singleton per leaf, and for every bit `i` below
/// `ceil(log2 l)` the categories `Z_i` / `O_i` holding the center plus the
/// leaves whose number has a zero / one there. Memdim `<= 1 + 2 ceil(log2 l)`.
///
/// With a single leaf the star is an edge and the path system is used.
pub fn star_binary_system(l: usize) -> Result<CategorySystem> {
    match l {
        0 => return Err(too_few_leaves(1)),
        1 => return path_system(2),
        _ => {}
    }
    let leaf = |i: usize| star_vertex(1, i, 1);
    let mut cats: Vec<Vec<usize>> = (0..l).map(|i| vec![leaf(i)]).collect();
    for bit in 0..ceil_log2(l) {
        for want in [0, 1] {
            let mut c = vec![CENTER];
            c.extend((0..l).filter(|i| (i >> bit) & 1 == want).map(leaf));
            cats.push(c);
        }
    }
    CategorySystem::new(l + 1, cats)
}

/// Optimal diameter-2 star system. Leaves get distinct `k`-bit strings of
/// weight `floor(k/2)`; category `h` is the center plus the leaves with bit
/// `h` set, and every leaf also has a singleton. The center is in `k`
/// categories, each leaf in `floor(k/2) + 1`.
pub fn star_antichain_system(l: usize) -> Result<CategorySystem> {
    let (k, codes) = antichain_codes(l)?;
    let leaf = |i: usize| star_vertex(1, i, 1);
    let mut cats: Vec<Vec<usize>> = (0..k)
        .map(|h| {
            let mut c = vec![CENTER];
            c.extend(
                codes
                    .iter()
                    .enumerate()
                    .filter(|(_, &code)| (code >> h) & 1 == 1)
                    .map(|(i, _)| leaf(i)),
            );
            c
        })
        .collect();
    cats.extend((0..l).map(|i| vec![leaf(i)]));
    CategorySystem::new(l + 1, cats)
}

/// Star with `l` arms of length `d`.
///
/// For each bit `i < ceil(log2 l)` and each reach `r = 0..d`, `O_i^(r)` holds
/// the full arms of leaves with bit `i` set plus the first `r` vertices of
/// every other arm (the center always included); `Z_i^(r)` is the mirror
/// image. Each arm also gets its `d` suffixes ending at the leaf, which carry
/// messages from the center outward. Reach `0` is needed: with reaches
/// `1..=d` the first vertex of every arm would share all bit categories with
/// the center.
///
/// The center sits in `2 d ceil(log2 l)` categories, which is the memdim.
pub fn long_star_system(l: usize, d: usize) -> Result<CategorySystem> {
    if l < 2 {
        return Err(too_few_leaves(2));
    }
    if d == 0 {
        return Err(Error::InvalidParameter {
            family: "star",
            reason: "d must be at least 1".into(),
        });
    }
    let n = 1 + l * d;
    let arm = |i: usize, upto: usize| (1..=upto).map(move |depth| star_vertex(d, i, depth));
    let mut cats = Vec::new();
    for bit in 0..ceil_log2(l) {
        for want in [1, 0] {
            for reach in 0..d {
                let mut c = vec![CENTER];
                for i in 0..l {
                    let full = (i >> bit) & 1 == want;
                    c.extend(arm(i, if full { d } else { reach }));
                }
                cats.push(c);
            }
        }
    }
    for i in 0..l {
        for len in 1..=d {
            cats.push(((d - len + 1)..=d).map(|depth| star_vertex(d, i, depth)).collect());
        }
    }
    CategorySystem::new(n, cats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::star;
    use crate::routing::{greedy_route, is_good, Route};

    #[test]
    fn binary_system_small_stars() {
        let sys = star_binary_system(4).unwrap();
        let g = star(4, 1).unwrap();
        assert!(sys.memdim() <= 5);
        assert!(is_good(&sys, &g).unwrap().good);
        assert_eq!(greedy_route(&sys, &g, 1, 3).unwrap(), Route::Delivered(vec![1, 0, 3]));
        // leaves differing in k bits: cdist(u, v) = 1 + k, cdist(c, v) = 1
        assert_eq!(sys.cdist(1, 4).unwrap(), 1 + 2);
        assert_eq!(sys.cdist(0, 4).unwrap(), 1);

        let one = star_binary_system(1).unwrap();
        assert_eq!(one.memdim(), 1);
        assert!(is_good(&one, &star(1, 1).unwrap()).unwrap().good);

        let eight = star_binary_system(8).unwrap();
        assert_eq!(eight.membership_count(0), 6);
    }

    #[test]
    fn antichain_codes_are_incomparable() {
        let (k, codes) = antichain_codes(6).unwrap();
        assert_eq!(k, 4);
        assert_eq!(codes, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        for (i, &a) in codes.iter().enumerate() {
            for &b in &codes[i + 1..] {
                assert!(a & !b != 0 && b & !a != 0);
            }
        }
        assert!(antichain_codes(1).is_err());
    }

    #[test]
    fn antichain_system_counts() {
        let sys = star_antichain_system(6).unwrap();
        assert_eq!(sys.membership_count(0), 4);
        assert!((1..=6).all(|v| sys.membership_count(v) == 3));
        assert_eq!(sys.memdim(), 4);
        assert!(is_good(&sys, &star(6, 1).unwrap()).unwrap().good);

        assert_eq!(star_antichain_system(3).unwrap().memdim(), 3);
        assert_eq!(star_antichain_system(2).unwrap().memdim(), 2);
    }

    #[test]
    fn long_star_small_cases() {
        for (l, d) in [(2, 1), (4, 2), (3, 3), (8, 3)] {
            let sys = long_star_system(l, d).unwrap();
            let g = star(l, d).unwrap();
            let report = is_good(&sys, &g).unwrap();
            assert!(
                report.good,
                "l={l} d={d}: {:?}",
                &report.counterexamples[..report.counterexamples.len().min(5)]
            );
            let b = ceil_log2(l);
            assert_eq!(sys.membership_count(0), 2 * d * b);
            assert!(sys.memdim() <= (2 * d + 1) * b + d);
            assert!(sys.memdim() >= 2 * d);
        }
        assert!(long_star_system(1, 2).is_err());
        assert!(long_star_system(3, 0).is_err());
    }

    #[test]
    fn reach_from_one_would_not_route() {
        // Reaches 1..=d instead of 0..d: the depth-1 vertex of every arm then
        // carries every bit category the center carries.
        let (l, d) = (4, 2);
        let arm = |i: usize, upto: usize| (1..=upto).map(move |depth| star_vertex(d, i, depth));
        let mut cats = Vec::new();
        for bit in 0..ceil_log2(l) {
            for want in [1, 0] {
                for reach in 1..=d {
                    let mut c = vec![CENTER];
                    for i in 0..l {
                        let full = (i >> bit) & 1 == want;
                        c.extend(arm(i, if full { d } else { reach }));
                    }
                    cats.push(c);
                }
            }
        }
        for i in 0..l {
            for len in 1..=d {
                cats.push(((d - len + 1)..=d).map(|depth| star_vertex(d, i, depth)).collect());
            }
        }
        let shifted = CategorySystem::new(1 + l * d, cats).unwrap();
        let report = is_good(&shifted, &star(l, d).unwrap()).unwrap();
        assert!(report
            .counterexamples
            .contains(&(star_vertex(d, 0, 1), star_vertex(d, 1, 2))));
    }
}
