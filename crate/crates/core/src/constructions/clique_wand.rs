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

//! System for the clique-wand graph (see
//! [`crate::generators::CliqueWandLayout`]).
//!
//! The clique and its outer vertices form a blob `B`; the wand is handled
//! like a path whose first position is `B - {u_0}`, second is `u_0`, then
//! the wand vertices in order. Suffix categories along that line carry
//! messages out along the wand, prefix categories (from `B` onwards) bring
//! them back.
//!
//! Inside the blob, outer vertex `i` has home `u_{i mod delta}` and rank
//! `i / delta`. Each home `u_h` with a group of `s` outer vertices gets
//! `k = antichain_k(s)` categories: `u_h` plus the group members whose
//! code has bit `b` set, codes being distinct `k`-bit strings of weight
//! `max(1, floor(k/2))`. A message between outer vertices hops to the home
//! of the target, which shares every group category with it and strictly
//! more than any other outer vertex does, then steps onto the target.
//! Every blob vertex except `u_0` also has a singleton category.
//!
//! Memberships: outer vertices `w + 1 + diam`, home `u_h` `k_h + 1 + diam`,
//! `u_0` `k_0 + 1 + diam`, wand vertices `diam + 1`, where `w` is the code
//! weight. Home `u_0` has the largest group, so the memdim is
//! `antichain_k(ceil(n/delta)) + diam + 1` once every code bit is in use.

use super::line_categories;
use super::stars::fixed_weight_codes;
use crate::bounds::antichain_k;
use crate::error::Result;
use crate::generators::CliqueWandLayout;
use crate::system::CategorySystem;

pub fn clique_wand_system(n: usize, delta: usize, diam: usize) -> Result<CategorySystem> {
    let layout = CliqueWandLayout::new(n, delta, diam)?;
    let mut cats = Vec::new();

    // Line: [B - u_0, u_0, wand_1, .., wand_diam]. Expanding the first
    // position into a vertex list gives the categories directly; the prefix
    // that is just B - u_0 is dropped, singletons already cover it.
    let rest_of_blob: Vec<usize> = (1..delta)
        .map(|j| layout.clique(j))
        .chain((0..n).map(|i| layout.outer_vertex(i)))
        .collect();
    let u0 = layout.clique(0);
    let positions: Vec<usize> = (0..diam + 2).collect();
    let expand = |pos: &[usize]| -> Vec<usize> {
        pos.iter()
            .flat_map(|&p| match p {
                0 => rest_of_blob.clone(),
                1 => vec![u0],
                j => vec![layout.wand(j - 1)],
            })
            .collect()
    };
    cats.extend(
        line_categories(&positions)
            .into_iter()
            .filter(|c| c.as_slice() != [0])
            .map(|c| expand(&c)),
    );

    for home in 0..delta {
        let group: Vec<usize> = (home..n).step_by(delta).collect();
        if group.is_empty() {
            continue;
        }
        let k = antichain_k(group.len() as u64);
        let codes = fixed_weight_codes(k, (k / 2).max(1), group.len())?;
        for bit in 0..k {
            let members: Vec<usize> = group
                .iter()
                .zip(&codes)
                .filter(|(_, &code)| (code >> bit) & 1 == 1)
                .map(|(&i, _)| layout.outer_vertex(i))
                .collect();
            if !members.is_empty() {
                let mut c = vec![layout.clique(home)];
                c.extend(members);
                cats.push(c);
            }
        }
    }

    cats.extend(rest_of_blob.iter().map(|&v| vec![v]));
    CategorySystem::new(layout.vertex_count(), cats)
}
