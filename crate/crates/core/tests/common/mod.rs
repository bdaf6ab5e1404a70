//! Brute-force oracles for integration tests; deliberately naive.
#![allow(dead_code)]

use ixcode::{SideInfoGraph, UndirectedGraph};

pub fn adjacent(g: &UndirectedGraph, u: usize, v: usize) -> bool {
    g.has_edge(u, v)
}

pub fn is_independent(g: &UndirectedGraph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(a, &u)| vs[a + 1..].iter().all(|&v| !adjacent(g, u, v)))
}

pub fn is_clique(g: &UndirectedGraph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(a, &u)| vs[a + 1..].iter().all(|&v| adjacent(g, u, v)))
}

fn alpha_rec(g: &UndirectedGraph, candidates: &[usize]) -> usize {
    let Some((&v, rest)) = candidates.split_first() else {
        return 0;
    };
    let without = alpha_rec(g, rest);
    let kept: Vec<usize> = rest.iter().copied().filter(|&u| !adjacent(g, u, v)).collect();
    without.max(1 + alpha_rec(g, &kept))
}

/// Independence number by include/exclude branching.
pub fn alpha(g: &UndirectedGraph) -> usize {
    let all: Vec<usize> = (0..g.n()).collect();
    alpha_rec(g, &all)
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Fewest parts in a partition of the vertices into sets with `ok(part)`,
/// by dynamic programming over subsets.
fn min_partition(n: usize, ok: impl Fn(&[usize]) -> bool) -> usize {
    let full = (1u64 << n) - 1;
    let good: Vec<bool> = (0..=full).map(|m| ok(&members(m))).collect();
    let mut best = vec![usize::MAX; (full + 1) as usize];
    best[0] = 0;
    for m in 1..=full {
        let low = m & m.wrapping_neg();
        let rest = m ^ low;
        let mut sub = rest;
        loop {
            let part = sub | low;
            if good[part as usize] && best[(m ^ part) as usize] != usize::MAX {
                best[m as usize] = best[m as usize].min(best[(m ^ part) as usize] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full as usize]
}

pub fn chromatic(g: &UndirectedGraph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    min_partition(g.n(), |p| is_independent(g, p))
}

/// Fewest sets of mutually bidirectional vertices partitioning the vertices.
pub fn clique_partition(g: &SideInfoGraph) -> usize {
    min_partition(g.n(), |p| {
        p.iter()
            .enumerate()
            .all(|(a, &u)| p[a + 1..].iter().all(|&v| g.has_arc(u, v) && g.has_arc(v, u)))
    })
}

/// True when no arc of `g` points backwards along `order`.
pub fn is_topological(g: &SideInfoGraph, order: &[usize]) -> bool {
    order
        .iter()
        .enumerate()
        .all(|(a, &u)| order[a + 1..].iter().all(|&w| !g.has_arc(w, u)))
}

pub fn is_bipartite(g: &UndirectedGraph) -> bool {
    let n = g.n();
    let mut side = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let su = side[u].unwrap();
            #[allow(clippy::needless_range_loop)]
            for v in 0..n {
                if u != v && adjacent(g, u, v) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            stack.push(v);
                        }
                        Some(sv) if sv == su => return false,
                        Some(_) => {}
                    }
                }
            }
        }
    }
    true
}

/// Chordal iff repeatedly deleting simplicial vertices empties the graph.
pub fn is_chordal(g: &UndirectedGraph) -> bool {
    let mut alive: Vec<usize> = (0..g.n()).collect();
    while !alive.is_empty() {
        let pick = alive.iter().position(|&v| {
            let nb: Vec<usize> = alive.iter().copied().filter(|&u| u != v && adjacent(g, u, v)).collect();
            is_clique(g, &nb)
        });
        match pick {
            Some(i) => {
                alive.remove(i);
            }
            None => return false,
        }
    }
    true
}
