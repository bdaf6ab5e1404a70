//! Named and random graph families.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::classify::planarity::is_planar_graph;
use crate::graph::{Mode, SideInfoGraph, UndirectedGraph};

fn undirected(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> UndirectedGraph {
    let mut g = UndirectedGraph::new(n).expect("generator order within limits");
    for (u, v) in edges {
        g.add_edge(u, v).expect("generator edges are valid");
    }
    g
}

pub fn empty(n: usize) -> UndirectedGraph {
    undirected(n, [])
}

pub fn complete(n: usize) -> UndirectedGraph {
    undirected(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn path(n: usize) -> UndirectedGraph {
    undirected(n, (1..n).map(|v| (v - 1, v)))
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> UndirectedGraph {
    undirected(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// Hub `0` joined to a rim cycle on `1..=rim`.
pub fn wheel(rim: usize) -> UndirectedGraph {
    let mut g = undirected(rim + 1, (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
    for v in 1..=rim {
        g.add_edge(0, v).unwrap();
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> UndirectedGraph {
    undirected(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

pub fn petersen() -> UndirectedGraph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    undirected(10, outer.chain(spokes).chain(inner))
}

/// Line graph: one vertex per edge of `root` (in sorted edge order).
pub fn line_graph_of(root: &UndirectedGraph) -> UndirectedGraph {
    let edges = root.edges();
    let mut g = empty(edges.len());
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

pub fn directed_cycle(n: usize) -> SideInfoGraph {
    let arcs: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    SideInfoGraph::from_arcs(n, Mode::Directed, &arcs).expect("valid cycle")
}

/// Tournament with every arc from lower to higher index.
pub fn transitive_tournament(n: usize) -> SideInfoGraph {
    let arcs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    SideInfoGraph::from_arcs(n, Mode::Directed, &arcs).expect("valid tournament")
}

pub fn random_tournament<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SideInfoGraph {
    let mut g = SideInfoGraph::new(n, Mode::Directed).expect("valid order");
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
            g.add_arc(a, b).unwrap();
        }
    }
    g
}

/// Each ordered pair is an arc independently with probability `p`.
pub fn random_digraph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> SideInfoGraph {
    let mut g = SideInfoGraph::new(n, Mode::Directed).expect("valid order");
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                g.add_arc(u, v).unwrap();
            }
        }
    }
    g
}

/// Unidirected random digraph: each pair gets no arc with probability `1 - p`,
/// otherwise one arc of random orientation.
pub fn random_oriented_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> SideInfoGraph {
    let mut g = SideInfoGraph::new(n, Mode::Directed).expect("valid order");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                let (a, b) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
                g.add_arc(a, b).unwrap();
            }
        }
    }
    g
}

pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> UndirectedGraph {
    let mut g = empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Connected planar graph: a random spanning tree, then random extra edges
/// kept only when the graph stays planar, up to a random target edge count
/// between `n - 1` and `3n - 6`.
pub fn random_connected_planar<R: Rng + ?Sized>(n: usize, rng: &mut R) -> UndirectedGraph {
    let mut g = empty(n);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    for i in 1..n {
        let parent = perm[rng.gen_range(0..i)];
        g.add_edge(perm[i], parent).unwrap();
    }
    if n < 3 {
        return g;
    }
    let target = rng.gen_range(n - 1..=3 * n - 6);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        if g.edge_count() >= target {
            break;
        }
        g.add_edge(u, v).unwrap();
        if !is_planar_graph(&g) {
            g.remove_edge(u, v);
        }
    }
    g
}
