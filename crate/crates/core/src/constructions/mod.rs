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

//! Category-system constructions for every supported graph family.
//!
//! Each function returns a [`CategorySystem`] over the vertex layout of the
//! matching generator in [`crate::generators`]; goodness is checked
//! downstream with [`crate::routing::is_good`].

mod clique_wand;
mod lines;
mod stars;
mod tree;

pub use clique_wand::clique_wand_system;
pub use lines::{
    cycle_system, grid_system, hypercube_system, line_categories, path_system, product_system, torus_system,
};
pub use stars::{antichain_codes, long_star_system, star_antichain_system, star_binary_system};
pub use tree::{balanced_routing_cut, general_system, tree_system, tree_system_with_stats, RoutingCut, TreeStats};

/// `ceil(log2(x))` for `x >= 1`.
pub(crate) fn ceil_log2(x: usize) -> usize {
    debug_assert!(x >= 1);
    (usize::BITS - (x - 1).leading_zeros()) as usize
}
