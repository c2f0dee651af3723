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

//! Category systems that support greedy routing on graphs.
//!
//! A *category* is a set of vertices inducing a connected subgraph. Given a
//! system of categories, the distance from `s` to `t` is the number of
//! categories containing `t` but not `s`; the system is *good* when every
//! vertex other than the target has a neighbor strictly closer to it. The
//! *membership dimension* is the largest number of categories any single
//! vertex belongs to.
//!
//! The crate is organised as:
//!
//! * [`graph`] and [`generators`]: graphs, metrics, spanning trees, products
//!   and the generator families (paths, cycles, grids, tori, hypercubes,
//!   stars, clique-wands, random trees and random connected graphs).
//! * [`system`] and [`routing`]: the category model, the goodness check and
//!   the deterministic greedy router.
//! * [`constructions`]: category systems for every supported family, plus
//!   the recursive tree construction used for arbitrary connected graphs.
//! * [`bounds`]: lower-bound evaluators and an exhaustive optimum search for
//!   tiny graphs.
//! * [`io`]: JSON, CSV and DOT formats.

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod routing;
pub mod system;

pub use error::{Error, Result};
pub use generators::{generate, Family, GraphSpec};
pub use graph::{Graph, Tree};
pub use routing::{greedy_route, is_good, route_all_pairs, GoodnessReport, Route, RoutingReport};
pub use system::CategorySystem;
