//! Line-graph recognition by forbidden induced subgraphs.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{bit, bits, UndirectedGraph};
use crate::limits::Limits;

/// The nine minimal non-line graphs, as (order, edge list).
const FORBIDDEN: [(usize, &[(usize, usize)]); 9] = [
    (4, &[(0, 3), (1, 3), (2, 3)]),
    (5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4)]),
    (5, &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    (6, &[(0, 1), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (4, 5)]),
    (6, &[(0, 1), (0, 4), (0, 5), (1, 2), (1, 5), (2, 3), (2, 5), (3, 4)]),
    (6, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 5), (2, 3), (2, 5), (4, 5)]),
    (6, &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]),
    (6, &[(0, 1), (0, 4), (0, 5), (1, 2), (1, 5), (2, 3), (2, 5), (3, 4), (3, 5), (4, 5)]),
    (
        6,
        &[(0, 1), (0, 2), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 5), (3, 4), (3, 5), (4, 5)],
    ),
];

/// Adjacency masks of the forbidden graphs.
pub fn forbidden_graphs() -> Vec<UndirectedGraph> {
    FORBIDDEN
        .iter()
        .map(|&(n, edges)| UndirectedGraph::from_edges(n, edges).expect("static edge list"))
        .collect()
}

/// An induced copy of a forbidden graph: `vertices[i]` plays pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineObstruction {
    pub pattern: usize,
    #[serde(serialize_with = "one_based")]
    pub vertices: Vec<usize>,
}

fn one_based<S: serde::Serializer>(v: &[usize], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x + 1))
}

impl LineObstruction {
    pub fn verify(&self, g: &UndirectedGraph) -> bool {
        let Some(pattern) = forbidden_graphs().into_iter().nth(self.pattern) else {
            return false;
        };
        let k = pattern.n();
        let mut seen = 0u64;
        for &v in &self.vertices {
            if v >= g.n() || seen & bit(v) != 0 {
                return false;
            }
            seen |= bit(v);
        }
        self.vertices.len() == k
            && (0..k).all(|a| {
                (0..k).all(|b| {
                    a == b || pattern.has_edge(a, b) == g.has_edge(self.vertices[a], self.vertices[b])
                })
            })
    }
}

/// Finds an induced copy of `pattern` in `g`.
pub fn find_induced(g: &UndirectedGraph, pattern: &UndirectedGraph) -> Option<Vec<usize>> {
    fn extend(
        g: &UndirectedGraph,
        pattern: &UndirectedGraph,
        map: &mut Vec<usize>,
        used: u64,
    ) -> bool {
        let i = map.len();
        if i == pattern.n() {
            return true;
        }
        let mut cands = crate::graph::full_mask(g.n()) & !used;
        for (j, &fj) in map.iter().enumerate() {
            cands &= if pattern.has_edge(i, j) {
                g.neighbors(fj)
            } else {
                !g.neighbors(fj)
            };
        }
        let need = pattern.degree(i) as u32;
        for v in bits(cands) {
            if (g.degree(v) as u32) < need {
                continue;
            }
            map.push(v);
            if extend(g, pattern, map, used | bit(v)) {
                return true;
            }
            map.pop();
        }
        false
    }
    if pattern.n() > g.n() {
        return None;
    }
    let mut map = Vec::with_capacity(pattern.n());
    extend(g, pattern, &mut map, 0).then_some(map)
}

pub(crate) fn line_obstruction_unchecked(g: &UndirectedGraph) -> Option<LineObstruction> {
    forbidden_graphs().iter().enumerate().find_map(|(idx, p)| {
        find_induced(g, p).map(|vertices| LineObstruction {
            pattern: idx,
            vertices,
        })
    })
}

/// A forbidden induced subgraph, or `None` when `g` is a line graph.
pub fn line_graph_obstruction(g: &UndirectedGraph, limits: &Limits) -> Result<Option<LineObstruction>> {
    limits.check_exact("line graph recognition", g.n())?;
    Ok(line_obstruction_unchecked(g))
}

pub fn is_line_graph(g: &UndirectedGraph, limits: &Limits) -> Result<bool> {
    Ok(line_graph_obstruction(g, limits)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Edge set splits into cliques with every vertex in at most two of them.
    fn krausz(g: &UndirectedGraph) -> bool {
        fn go(g: &UndirectedGraph, covered: &mut Vec<u64>, count: &mut Vec<u8>) -> bool {
            let n = g.n();
            let Some((u, v)) = (0..n).find_map(|u| {
                bits(g.neighbors(u) & !covered[u] & !((1u64 << u) | ((1u64 << u) - 1)))
                    .next()
                    .map(|v| (u, v))
            }) else {
                return true;
            };
            if count[u] >= 2 || count[v] >= 2 {
                return false;
            }
            // extra members must be joined by uncovered edges to u, v and each other
            let free_masks: Vec<u64> = (0..n).map(|x| g.neighbors(x) & !covered[x]).collect();
            let free = |x: usize| free_masks[x];
            let pool: Vec<usize> = bits(free(u) & free(v)).filter(|&w| count[w] < 2).collect();
            for sub in 0u64..(1u64 << pool.len()) {
                let mut members = bit(u) | bit(v);
                for (i, &w) in pool.iter().enumerate() {
                    if sub & bit(i) != 0 {
                        members |= bit(w);
                    }
                }
                let ok = bits(members).all(|x| (free(x) | bit(x)) & members == members);
                if !ok {
                    continue;
                }
                for x in bits(members) {
                    covered[x] |= members & !bit(x);
                    count[x] += 1;
                }
                if go(g, covered, count) {
                    return true;
                }
                for x in bits(members) {
                    covered[x] &= !(members & !bit(x));
                    count[x] -= 1;
                }
            }
            false
        }
        go(g, &mut vec![0; g.n()], &mut vec![0; g.n()])
    }

    #[test]
    fn forbidden_graphs_are_minimal_non_line_graphs() {
        for (idx, h) in forbidden_graphs().iter().enumerate() {
            assert!(!krausz(h), "pattern {idx} is a line graph");
            for drop in 0..h.n() {
                let keep: Vec<usize> = (0..h.n()).filter(|&v| v != drop).collect();
                let sub = h.induced(&crate::graph::VertexSet::new(keep, h.n()).unwrap());
                assert!(krausz(&sub), "pattern {idx} not minimal");
            }
        }
    }

    #[test]
    fn agrees_with_krausz_on_all_small_graphs() {
        for order in 1..=6 {
            let total = 1u64 << UndirectedGraph::pair_count(order);
            for m in 0..total {
                let g = UndirectedGraph::from_pair_mask(order, m);
                let obs = line_obstruction_unchecked(&g);
                assert_eq!(obs.is_none(), krausz(&g), "order {order} mask {m}");
                if let Some(o) = obs {
                    assert!(o.verify(&g));
                }
            }
        }
    }

    #[test]
    fn named_examples() {
        let lim = Limits::default();
        // line graph of the diamond is the wheel on a 4-rim
        let diamond = UndirectedGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let l = generators::line_graph_of(&diamond);
        assert_eq!(l.n(), 5);
        assert!(is_line_graph(&l, &lim).unwrap());
        assert!(is_line_graph(&generators::wheel(4), &lim).unwrap());
        assert!(!is_line_graph(&generators::complete_bipartite(1, 3), &lim).unwrap());
        assert!(is_line_graph(&generators::complete(3), &lim).unwrap());
        assert!(!is_line_graph(&generators::petersen(), &lim).unwrap());
        assert!(is_line_graph(&generators::complete(20), &lim).unwrap());
        assert!(is_line_graph(&generators::complete(21), &lim).is_err());
    }

    #[test]
    fn random_line_graphs_accepted() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let lim = Limits::default();
        for _ in 0..100 {
            let n = rng.gen_range(2..=8);
            let root = generators::random_graph(n, 0.4, &mut rng);
            if root.edge_count() == 0 || root.edge_count() > 20 {
                continue;
            }
            let l = generators::line_graph_of(&root);
            assert!(is_line_graph(&l, &lim).unwrap());
            let mut rng2 = ChaCha8Rng::seed_from_u64(rng.gen());
            let keep: Vec<usize> = (0..l.n()).filter(|_| rng2.gen_bool(0.7)).collect();
            let sub = l.induced(&crate::graph::VertexSet::new(keep, l.n()).unwrap());
            assert!(is_line_graph(&sub, &lim).unwrap());
        }
    }
}
