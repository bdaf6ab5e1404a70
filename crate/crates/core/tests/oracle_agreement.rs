mod common;

use ixcode::bounds::{
    bounds_report, chromatic_number, clique_cover_number, fractional_clique_cover, independence_number, mais,
};
use ixcode::generators;
use ixcode::rational::int;
use ixcode::{Limits, SideInfoGraph, UndirectedGraph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn digraph(n: usize, p: f64, seed: u64) -> SideInfoGraph {
    generators::random_digraph(n, p, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn graph(n: usize, p: f64, seed: u64) -> UndirectedGraph {
    generators::random_graph(n, p, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Largest vertex subset whose induced subgraph has no directed cycle.
fn brute_mais(g: &SideInfoGraph) -> usize {
    let n = g.n();
    (0u64..1 << n)
        .filter(|&m| {
            let mut left: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
            // peel sources until stuck
            loop {
                let src = left.iter().position(|&v| left.iter().all(|&u| u == v || !g.has_arc(u, v)));
                match src {
                    Some(i) => {
                        left.remove(i);
                    }
                    None => break,
                }
            }
            left.is_empty()
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mais_and_clique_cover_match_brute_force(n in 1usize..=9, p in 0.1f64..0.95, seed in any::<u64>()) {
        let lim = Limits::default();
        let g = digraph(n, p, seed);
        let (m, witness) = mais(&g, &lim).unwrap();
        prop_assert_eq!(m, brute_mais(&g));
        prop_assert!(common::is_topological(&g, witness.as_slice()));
        let (cc, parts) = clique_cover_number(&g, &lim).unwrap();
        prop_assert_eq!(cc, common::clique_partition(&g));
        prop_assert_eq!(parts.len(), cc);
    }

    #[test]
    fn alpha_and_chi_match_brute_force(n in 1usize..=11, p in 0.05f64..0.95, seed in any::<u64>()) {
        let lim = Limits::default();
        let g = graph(n, p, seed);
        let (a, set) = independence_number(&g, &lim).unwrap();
        prop_assert_eq!(a, common::alpha(&g));
        prop_assert!(common::is_independent(&g, set.as_slice()));
        let (chi, _) = chromatic_number(&g, &lim).unwrap();
        prop_assert_eq!(chi, common::chromatic(&g));
    }

    #[test]
    fn sandwich_holds(n in 1usize..=10, p in 0.1f64..0.95, seed in any::<u64>()) {
        let lim = Limits::default();
        let g = digraph(n, p, seed);
        let frac = fractional_clique_cover(&g, &lim).unwrap();
        let r = bounds_report(&g, &lim).unwrap();
        prop_assert!(int(r.mais as i64) <= frac.value);
        prop_assert!(frac.value <= int(r.clique_cover as i64));
        prop_assert!(r.clique_cover <= n);
    }

    #[test]
    fn adding_arcs_never_raises_the_bounds(n in 2usize..=8, p in 0.1f64..0.8, seed in any::<u64>(), extra in any::<u64>()) {
        let lim = Limits::default();
        let g = digraph(n, p, seed);
        let mut h = g.clone();
        let (u, v) = ((extra % n as u64) as usize, ((extra >> 8) % n as u64) as usize);
        if u != v {
            h.add_arc(u, v).unwrap();
        }
        prop_assert!(mais(&h, &lim).unwrap().0 <= mais(&g, &lim).unwrap().0);
        prop_assert!(clique_cover_number(&h, &lim).unwrap().0 <= clique_cover_number(&g, &lim).unwrap().0);
    }
}
