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

use std::collections::BTreeSet;

use proptest::prelude::*;

use catroute::bounds::{antichain_k, binomial};
use catroute::constructions::{balanced_routing_cut, general_system, tree_system};
use catroute::generators::{random_connected, random_tree};
use catroute::io::{graph_from_json, system_from_json, to_json};
use catroute::{greedy_route, is_good, CategorySystem, Graph, Route};

/// Goodness straight from the definition, over category index sets.
fn naive_good_pairs(sys: &CategorySystem, g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let member: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| {
            sys.categories()
                .iter()
                .enumerate()
                .filter(|(_, c)| c.contains(&v))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let dist = |u: usize, t: usize| member[t].difference(&member[u]).count();
    let mut bad = Vec::new();
    for s in 0..n {
        for t in (0..n).filter(|&t| t != s) {
            if !g.neighbors(s).iter().any(|&u| dist(u, t) < dist(s, t)) {
                bad.push((s, t));
            }
        }
    }
    bad.sort();
    bad
}

fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..30, 0usize..40, any::<u64>()).prop_map(|(n, extra, seed)| {
        let m = (n - 1 + extra).min(n * (n - 1) / 2);
        random_connected(n, m, seed).unwrap()
    })
}

/// A random system of BFS balls, which are always connected.
fn ball_system(g: &Graph, picks: &[(usize, usize)]) -> CategorySystem {
    let cats = picks
        .iter()
        .map(|&(c, r)| {
            let c = c % g.n();
            let d = g.bfs_distances(c).unwrap();
            (0..g.n()).filter(|&v| d[v] <= r % 3).collect()
        })
        .collect();
    CategorySystem::new(g.n(), cats).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_families_have_requested_counts(n in 1usize..60, extra in 0usize..50, seed: u64) {
        let t = random_tree(n, seed).unwrap();
        prop_assert_eq!(t.graph().edge_count(), n - 1);
        prop_assert!(t.graph().is_tree());
        let m = (n - 1 + extra).min(n * (n - 1) / 2);
        let g = random_connected(n, m, seed).unwrap();
        prop_assert_eq!(g.n(), n);
        prop_assert_eq!(g.edge_count(), m);
        prop_assert_eq!(random_connected(n, m, seed).unwrap(), g);
    }

    #[test]
    fn bfs_is_a_metric(g in connected_graph()) {
        let d: Vec<Vec<usize>> = (0..g.n()).map(|v| g.bfs_distances(v).unwrap()).collect();
        for u in 0..g.n() {
            prop_assert_eq!(d[u][u], 0);
            for v in 0..g.n() {
                prop_assert_eq!(d[u][v], d[v][u]);
                for w in 0..g.n() {
                    prop_assert!(d[u][w] <= d[u][v] + d[v][w]);
                }
            }
        }
        prop_assert_eq!(g.diameter(), d.iter().flatten().copied().max().unwrap());
    }

    #[test]
    fn spanning_tree_preserves_root_distances(g in connected_graph()) {
        let t = g.spanning_tree();
        let root = t.root().unwrap();
        prop_assert_eq!(root, g.eccentricity_center());
        prop_assert!(t.graph().is_tree());
        prop_assert!(t.graph().edges().iter().all(|&(u, v)| g.has_edge(u, v)));
        prop_assert_eq!(t.graph().bfs_distances(root).unwrap(), g.bfs_distances(root).unwrap());
        prop_assert!(t.graph().diameter() <= 2 * g.diameter());
    }

    #[test]
    fn goodness_matches_definition(g in connected_graph(), picks in prop::collection::vec((0usize..30, 0usize..3), 1..25)) {
        let sys = ball_system(&g, &picks);
        let report = is_good(&sys, &g).unwrap();
        let naive = naive_good_pairs(&sys, &g);
        prop_assert_eq!(report.good, naive.is_empty());
        prop_assert_eq!(&report.counterexamples, &naive);
        if report.good {
            prop_assert!(sys.memdim() >= g.diameter());
        }
    }

    #[test]
    fn goodness_ignores_category_order(g in connected_graph(), picks in prop::collection::vec((0usize..30, 0usize..3), 1..25), seed: u64) {
        let sys = ball_system(&g, &picks);
        let mut order: Vec<usize> = (0..sys.len()).collect();
        let k = order.len();
        for i in 0..k {
            order.swap(i, (seed as usize).wrapping_mul(i + 7) % k);
        }
        let shuffled = sys.reordered(&order).unwrap();
        prop_assert_eq!(is_good(&sys, &g).unwrap(), is_good(&shuffled, &g).unwrap());
    }

    #[test]
    fn general_system_routes_with_decreasing_cdist(g in connected_graph(), s in 0usize..30, t in 0usize..30) {
        let sys = general_system(&g);
        prop_assert!(is_good(&sys, &g).unwrap().good);
        prop_assert!(sys.memdim() >= g.diameter());
        let (s, t) = (s % g.n(), t % g.n());
        let route = greedy_route(&sys, &g, s, t).unwrap();
        let Route::Delivered(path) = route else { panic!("good system got stuck") };
        for w in path.windows(2) {
            prop_assert!(g.has_edge(w[0], w[1]));
            prop_assert!(sys.cdist(w[1], t).unwrap() < sys.cdist(w[0], t).unwrap());
        }
        prop_assert!(path.len() - 1 <= sys.cdist(s, t).unwrap());
        prop_assert!(sys.cdist(s, t).unwrap() <= sys.memdim());
    }

    #[test]
    fn tree_cuts_are_balanced(n in 3usize..200, seed: u64) {
        let t = random_tree(n, seed).unwrap();
        let cut = balanced_routing_cut(&t).unwrap();
        let (lo, hi) = (n.div_ceil(3), (2 * n).div_ceil(3));
        for side in [cut.left_tree.len(), cut.right_tree.len()] {
            prop_assert!(lo <= side && side <= hi, "n={} side={}", n, side);
        }
        prop_assert_eq!(cut.left_tree.len() + cut.right_tree.len(), n + 1);
        prop_assert!(cut.left_tree.contains(&cut.r) && cut.right_tree.contains(&cut.r));
        let sys = tree_system(&t);
        prop_assert!(is_good(&sys, t.graph()).unwrap().good);
        prop_assert!(sys.validate_connected(t.graph()).unwrap().is_empty());
    }

    #[test]
    fn antichain_k_is_monotone(l in 1u64..100_000) {
        let k = antichain_k(l);
        prop_assert!(antichain_k(l + 1) >= k);
        prop_assert!(binomial(k as u64, k as u64 / 2) >= l.into());
        prop_assert!(k == 1 || binomial(k as u64 - 1, (k as u64 - 1) / 2) < l.into());
    }

    #[test]
    fn json_round_trips(g in connected_graph(), picks in prop::collection::vec((0usize..30, 0usize..3), 1..10)) {
        let text = to_json(&g).unwrap();
        prop_assert_eq!(graph_from_json(&text).unwrap(), g.clone());
        let sys = ball_system(&g, &picks);
        let text = to_json(&sys).unwrap();
        let back = system_from_json(&text, g.n()).unwrap();
        prop_assert_eq!(to_json(&back).unwrap(), text);
    }
}
