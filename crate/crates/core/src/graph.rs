//! Side-information digraphs, undirected graphs and the instance file format.
//!
//! Vertices are `0..n` in the API and `1..=n` in files and reports. Both
//! graph types store one adjacency bitmask per vertex, so `n` is capped at
//! [`MAX_VERTICES`].

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::limits::MAX_VERTICES;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of `mask` in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::LimitExceeded {
            what: "vertex count",
            size: n,
            limit: MAX_VERTICES,
        });
    }
    Ok(())
}

/// An ordered list of distinct vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(vertices: Vec<usize>, n: usize) -> Result<Self> {
        let mut seen = 0u64;
        for &v in &vertices {
            if v >= n || v >= MAX_VERTICES {
                return Err(Error::VertexOutOfRange { vertex: v + 1, n });
            }
            if seen & bit(v) != 0 {
                return Err(Error::InvalidArgument(format!(
                    "vertex {} listed twice",
                    v + 1
                )));
            }
            seen |= bit(v);
        }
        Ok(VertexSet(vertices))
    }

    /// The vertices of `mask` in increasing order.
    pub fn from_mask(mask: u64) -> Self {
        VertexSet(bits(mask).collect())
    }

    pub fn all(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | bit(v))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }

    pub fn sorted(mut self) -> Self {
        self.0.sort_unstable();
        self
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("}")
    }
}

/// Simple undirected graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    n: usize,
    adj: Vec<u64>,
}

impl UndirectedGraph {
    pub fn new(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(UndirectedGraph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Number of vertex pairs of a graph on `order` vertices.
    pub fn pair_count(order: usize) -> usize {
        order * order.saturating_sub(1) / 2
    }

    /// The labeled graph on `order` vertices whose edge set is given by the
    /// bits of `pairs`, pairs numbered lexicographically: (0,1), (0,2), ...,
    /// (1,2), ...
    pub fn from_pair_mask(order: usize, pairs: u64) -> Self {
        let mut adj = vec![0u64; order];
        let mut idx = 0;
        for u in 0..order {
            for v in u + 1..order {
                if pairs & (1u64 << idx) != 0 {
                    adj[u] |= bit(v);
                    adj[v] |= bit(u);
                }
                idx += 1;
            }
        }
        UndirectedGraph { n: order, adj }
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        UndirectedGraph { n: adj.len(), adj }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: x + 1,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u + 1));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u] &= !bit(v);
            self.adj[v] &= !bit(u);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Self {
        let all = full_mask(self.n);
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & all & !bit(v))
            .collect();
        UndirectedGraph { n: self.n, adj }
    }

    /// Induced subgraph, relabeled `0..s.len()` in the order of `s`.
    pub fn induced(&self, s: &VertexSet) -> Self {
        let verts = s.as_slice();
        let mut adj = vec![0u64; verts.len()];
        for (a, &u) in verts.iter().enumerate() {
            for (b, &v) in verts.iter().enumerate() {
                if self.adj[u] & bit(v) != 0 {
                    adj[a] |= bit(b);
                }
            }
        }
        UndirectedGraph { n: verts.len(), adj }
    }

    pub fn is_clique(&self, mask: u64) -> bool {
        bits(mask).all(|v| (mask & !bit(v)) & !self.adj[v] == 0)
    }

    pub fn is_independent(&self, mask: u64) -> bool {
        bits(mask).all(|v| self.adj[v] & mask == 0)
    }

    /// Vertex masks of the connected components, ordered by lowest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let mut comp = bit(s);
            let mut frontier = bit(s);
            while frontier != 0 {
                let next = bits(frontier).fold(0, |m, v| m | self.adj[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The same graph as a side-information graph (each edge a bidirectional pair).
    pub fn to_side_info(&self) -> SideInfoGraph {
        SideInfoGraph::from_undirected(self)
    }
}

/// Declared orientation mode of an instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Directed,
    Undirected,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Directed => "directed",
            Mode::Undirected => "undirected",
        })
    }
}

/// Side-information graph: arc `i -> j` means receiver `j` already holds
/// message `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SideInfoGraph {
    n: usize,
    out: Vec<u64>,
    mode: Mode,
}

impl SideInfoGraph {
    pub fn new(n: usize, mode: Mode) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("graph needs at least one vertex".into()));
        }
        check_order(n)?;
        Ok(SideInfoGraph {
            n,
            out: vec![0; n],
            mode,
        })
    }

    pub fn from_arcs(n: usize, mode: Mode, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n, mode)?;
        for &(u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    pub fn from_undirected(g: &UndirectedGraph) -> Self {
        SideInfoGraph {
            n: g.n.max(1),
            out: if g.n == 0 { vec![0] } else { g.adj.clone() },
            mode: Mode::Undirected,
        }
    }

    pub(crate) fn from_out_masks(out: Vec<u64>, mode: Mode) -> Self {
        SideInfoGraph {
            n: out.len(),
            out,
            mode,
        }
    }

    /// Adds arc `u -> v`; in undirected mode also `v -> u`.
    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: x + 1,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u + 1));
        }
        self.out[u] |= bit(v);
        if self.mode == Mode::Undirected {
            self.out[v] |= bit(u);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u] & bit(v) != 0
    }

    pub fn out_mask(&self, v: usize) -> u64 {
        self.out[v]
    }

    pub fn out_masks(&self) -> &[u64] {
        &self.out
    }

    pub fn in_masks(&self) -> Vec<u64> {
        let mut inn = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.out[u]) {
                inn[v] |= bit(u);
            }
        }
        inn
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// All arcs, sorted lexicographically.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| bits(self.out[u]).map(move |v| (u, v)))
            .collect()
    }

    /// The side-information set `A_j` of receiver `j`.
    pub fn side_information(&self, j: usize) -> VertexSet {
        VertexSet::from_mask((0..self.n).filter(|&i| self.out[i] & bit(j) != 0).fold(0, |m, i| m | bit(i)))
    }

    /// Mask form of [`SideInfoGraph::side_information`].
    pub fn side_information_mask(&self, j: usize) -> u64 {
        (0..self.n)
            .filter(|&i| self.out[i] & bit(j) != 0)
            .fold(0, |m, i| m | bit(i))
    }

    /// Arc complement over all ordered pairs of distinct vertices.
    pub fn complement(&self) -> Self {
        let all = full_mask(self.n);
        SideInfoGraph {
            n: self.n,
            out: (0..self.n).map(|v| !self.out[v] & all & !bit(v)).collect(),
            mode: self.mode,
        }
    }

    /// `Un(G)`: an edge wherever at least one arc exists.
    pub fn underlying_undirected(&self) -> UndirectedGraph {
        let inn = self.in_masks();
        UndirectedGraph::from_adjacency((0..self.n).map(|v| self.out[v] | inn[v]).collect())
    }

    /// Edges exactly at the bidirectional pairs; its cliques are the cliques of `G`.
    pub fn bidirectional_core(&self) -> UndirectedGraph {
        let inn = self.in_masks();
        UndirectedGraph::from_adjacency((0..self.n).map(|v| self.out[v] & inn[v]).collect())
    }

    /// `G|_S`, relabeled `0..s.len()` in the order of `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::InvalidArgument("induced subgraph of an empty vertex set".into()));
        }
        let s = VertexSet::new(s.as_slice().to_vec(), self.n)?;
        let verts = s.as_slice();
        let mut out = vec![0u64; verts.len()];
        for (a, &u) in verts.iter().enumerate() {
            for (b, &v) in verts.iter().enumerate() {
                if self.out[u] & bit(v) != 0 {
                    out[a] |= bit(b);
                }
            }
        }
        Ok(SideInfoGraph::from_out_masks(out, self.mode))
    }

    /// A bidirectional pair `(u, v)`, `u < v`, if one exists.
    pub fn first_bidirectional_pair(&self) -> Option<(usize, usize)> {
        (0..self.n).find_map(|u| {
            let back = bits(self.out[u] & !full_mask(u + 1)).find(|&v| self.out[v] & bit(u) != 0);
            back.map(|v| (u, v))
        })
    }

    /// Every arc has its reverse.
    pub fn is_undirected(&self) -> bool {
        (0..self.n).all(|u| bits(self.out[u]).all(|v| self.out[v] & bit(u) != 0))
    }

    /// No arc has its reverse.
    pub fn is_unidirected(&self) -> bool {
        self.first_bidirectional_pair().is_none()
    }

    /// Topological order of `G|_mask` (lowest-index source first), or `None`
    /// if the induced subgraph has a cycle.
    pub fn topological_order(&self, mask: u64) -> Option<Vec<usize>> {
        topological_order(&self.out, mask)
    }

    pub fn is_acyclic_on(&self, mask: u64) -> bool {
        is_acyclic(&self.out, mask)
    }

    /// Canonical text form: header lines then sorted edge lines.
    pub fn to_canonical_string(&self) -> String {
        let mut s = format!("n {}\nmode {}\n", self.n, self.mode);
        match self.mode {
            Mode::Directed => {
                for (u, v) in self.arcs() {
                    s.push_str(&format!("e {} {}\n", u + 1, v + 1));
                }
            }
            Mode::Undirected => {
                for (u, v) in self.arcs().into_iter().filter(|(u, v)| u < v) {
                    s.push_str(&format!("e {} {}\n", u + 1, v + 1));
                }
            }
        }
        s
    }

    /// Parses the line-oriented instance format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut mode: Option<Mode> = None;
        let mut arcs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens[0] {
                "n" => {
                    let [_, count] = tokens[..] else {
                        return Err(Error::parse(line_no, "expected `n <count>`"));
                    };
                    let count: usize = count
                        .parse()
                        .map_err(|_| Error::parse(line_no, format!("bad vertex count `{count}`")))?;
                    if count == 0 {
                        return Err(Error::parse(line_no, "vertex count must be positive"));
                    }
                    match n {
                        Some(prev) if prev != count => {
                            return Err(Error::parse(
                                line_no,
                                format!("conflicting vertex count {count} (earlier {prev})"),
                            ))
                        }
                        Some(_) => {}
                        None if mode.is_some() || !arcs.is_empty() => {
                            return Err(Error::parse(line_no, "`n` must come first"))
                        }
                        None => n = Some(count),
                    }
                }
                "mode" => {
                    let [_, m] = tokens[..] else {
                        return Err(Error::parse(line_no, "expected `mode directed|undirected`"));
                    };
                    let m = match m {
                        "directed" => Mode::Directed,
                        "undirected" => Mode::Undirected,
                        other => return Err(Error::parse(line_no, format!("unknown mode `{other}`"))),
                    };
                    if n.is_none() {
                        return Err(Error::parse(line_no, "`n` must come before `mode`"));
                    }
                    match mode {
                        Some(prev) if prev != m => {
                            return Err(Error::parse(line_no, format!("conflicting mode `{m}`")))
                        }
                        Some(_) => {}
                        None if !arcs.is_empty() => {
                            return Err(Error::parse(line_no, "`mode` must come before edges"))
                        }
                        None => mode = Some(m),
                    }
                }
                "e" => {
                    let [_, u, v] = tokens[..] else {
                        return Err(Error::parse(line_no, "expected `e <u> <v>`"));
                    };
                    let Some(count) = n else {
                        return Err(Error::parse(line_no, "edge before `n`"));
                    };
                    if mode.is_none() {
                        return Err(Error::parse(line_no, "edge before `mode`"));
                    }
                    let parse_vertex = |tok: &str| -> Result<usize> {
                        let x: usize = tok
                            .parse()
                            .map_err(|_| Error::parse(line_no, format!("bad vertex `{tok}`")))?;
                        if x == 0 || x > count {
                            return Err(Error::VertexOutOfRange { vertex: x, n: count });
                        }
                        Ok(x - 1)
                    };
                    let (u, v) = (parse_vertex(u)?, parse_vertex(v)?);
                    if u == v {
                        return Err(Error::SelfLoop(u + 1));
                    }
                    arcs.push((u, v));
                }
                other => return Err(Error::parse(line_no, format!("unknown directive `{other}`"))),
            }
        }
        let n = n.ok_or_else(|| Error::parse(1, "missing `n <count>` line"))?;
        let mode = mode.ok_or_else(|| Error::parse(1, "missing `mode` line"))?;
        Self::from_arcs(n, mode, &arcs)
    }
}

impl FromStr for SideInfoGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for SideInfoGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

pub(crate) fn topological_order(out: &[u64], mask: u64) -> Option<Vec<usize>> {
    let mut remaining = mask;
    let mut order = Vec::with_capacity(mask.count_ones() as usize);
    let inn = in_within(out, mask);
    while remaining != 0 {
        let source = bits(remaining).find(|&v| inn[v] & remaining == 0)?;
        order.push(source);
        remaining &= !bit(source);
    }
    Some(order)
}

fn in_within(out: &[u64], mask: u64) -> Vec<u64> {
    let mut inn = vec![0u64; out.len()];
    for u in bits(mask) {
        for v in bits(out[u] & mask) {
            inn[v] |= bit(u);
        }
    }
    inn
}

/// Acyclicity of the subgraph induced by `mask`, by repeatedly peeling sources.
pub(crate) fn is_acyclic(out: &[u64], mask: u64) -> bool {
    let inn = in_within(out, mask);
    let mut remaining = mask;
    loop {
        if remaining == 0 {
            return true;
        }
        let sources = bits(remaining)
            .filter(|&v| inn[v] & remaining == 0)
            .fold(0u64, |m, v| m | bit(v));
        if sources == 0 {
            return false;
        }
        remaining &= !sources;
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn three_node() -> SideInfoGraph {
        "n 3\nmode directed\ne 2 1\ne 3 1\ne 1 2\ne 1 3\ne 2 3\n".parse().unwrap()
    }

    #[test]
    fn parses_three_node_instance() {
        let g = three_node();
        assert_eq!(g.n(), 3);
        assert_eq!(g.arc_count(), 5);
        assert_eq!(g.side_information(0).one_based(), vec![2, 3]);
        assert_eq!(g.side_information(1).one_based(), vec![1]);
        assert_eq!(g.side_information(2).one_based(), vec![1, 2]);
    }

    #[test]
    fn parses_edgeless_and_comments() {
        let g: SideInfoGraph = "# header\nn 3   # three\nmode directed\n\n".parse().unwrap();
        assert_eq!(g.arc_count(), 0);
        assert_eq!(g.n(), 3);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            "n 3\nmode directed\ne 1 1\n".parse::<SideInfoGraph>(),
            Err(Error::SelfLoop(1))
        );
        assert!(matches!(
            "n 3\nmode directed\ne 1 4\n".parse::<SideInfoGraph>(),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        ));
        assert!(matches!(
            "n 3\nn 4\nmode directed\n".parse::<SideInfoGraph>(),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            "n 3\nmode directed\nmode undirected\n".parse::<SideInfoGraph>(),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            "n 3\nmode directed\ne 1\n".parse::<SideInfoGraph>(),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!("mode directed\n".parse::<SideInfoGraph>(), Err(Error::Parse { .. })));
        assert!(matches!("n 0\nmode directed\n".parse::<SideInfoGraph>(), Err(Error::Parse { .. })));
        assert!(matches!(
            "n 65\nmode directed\n".parse::<SideInfoGraph>(),
            Err(Error::LimitExceeded { .. })
        ));
        // identical re-declaration is harmless, duplicate edges collapse
        let g: SideInfoGraph = "n 2\nn 2\nmode directed\ne 1 2\ne 1 2\n".parse().unwrap();
        assert_eq!(g.arc_count(), 1);
    }

    #[test]
    fn undirected_mode_symmetrizes() {
        let g: SideInfoGraph = "n 3\nmode undirected\ne 1 2\n".parse().unwrap();
        assert!(g.has_arc(0, 1) && g.has_arc(1, 0));
        assert_eq!(g.to_canonical_string(), "n 3\nmode undirected\ne 1 2\n");
    }

    #[test]
    fn canonical_form_sorts_edges() {
        let g: SideInfoGraph = "n 3\nmode directed\ne 3 1\ne 1 2\ne 2 1\n".parse().unwrap();
        assert_eq!(g.to_canonical_string(), "n 3\nmode directed\ne 1 2\ne 2 1\ne 3 1\n");
    }

    #[test]
    fn complement_examples() {
        let k3 = UndirectedGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap().to_side_info();
        assert_eq!(k3.complement().arc_count(), 0);
        assert_eq!(three_node().complement().arcs(), vec![(2, 1)]);

        let c6 = UndirectedGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
            .unwrap()
            .to_side_info();
        let comp = c6.complement();
        assert_eq!(comp.mode(), Mode::Undirected);
        assert!(comp.is_undirected());
        assert_eq!(comp.arc_count(), 2 * 9);
        assert!(comp.has_arc(0, 2) && !comp.has_arc(0, 1));
    }

    #[test]
    fn underlying_and_core_examples() {
        let g = three_node();
        assert_eq!(g.underlying_undirected().edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.bidirectional_core().edges(), vec![(0, 1), (0, 2)]);

        let two_cycle = SideInfoGraph::from_arcs(2, Mode::Directed, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(two_cycle.underlying_undirected().edges(), vec![(0, 1)]);

        let edgeless = SideInfoGraph::new(4, Mode::Directed).unwrap();
        assert_eq!(edgeless.underlying_undirected().edge_count(), 0);

        let tournament =
            SideInfoGraph::from_arcs(3, Mode::Directed, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tournament.bidirectional_core().edge_count(), 0);
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = three_node();
        let s = VertexSet::new(vec![1, 2], 3).unwrap();
        let h = g.induced_subgraph(&s).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.arcs(), vec![(0, 1)]);
        assert_eq!(g.induced_subgraph(&VertexSet::all(3)).unwrap(), g);
        let single = g.induced_subgraph(&VertexSet::new(vec![0], 3).unwrap()).unwrap();
        assert_eq!((single.n(), single.arc_count()), (1, 0));
        assert!(g.induced_subgraph(&VertexSet::default()).is_err());
        assert!(VertexSet::new(vec![3], 3).is_err());
        assert!(VertexSet::new(vec![1, 1], 3).is_err());
    }

    #[test]
    fn acyclicity_and_topological_order() {
        let g = three_node();
        assert!(g.is_acyclic_on(0b110));
        assert!(!g.is_acyclic_on(0b011));
        assert_eq!(g.topological_order(0b110), Some(vec![1, 2]));
        let cycle = SideInfoGraph::from_arcs(3, Mode::Directed, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(cycle.topological_order(0b111), None);
        assert!(cycle.is_acyclic_on(0b011));
    }

    #[test]
    fn pair_mask_enumeration_order() {
        let g = UndirectedGraph::from_pair_mask(4, 0b000001);
        assert_eq!(g.edges(), vec![(0, 1)]);
        let g = UndirectedGraph::from_pair_mask(4, 0b100000);
        assert_eq!(g.edges(), vec![(2, 3)]);
        assert_eq!(UndirectedGraph::pair_count(7), 21);
    }

    fn arb_digraph() -> impl Strategy<Value = SideInfoGraph> {
        (1usize..10).prop_flat_map(|n| {
            proptest::collection::vec(any::<u64>(), n).prop_map(move |rows| {
                let out = rows
                    .iter()
                    .enumerate()
                    .map(|(v, r)| r & full_mask(n) & !bit(v))
                    .collect();
                SideInfoGraph::from_out_masks(out, Mode::Directed)
            })
        })
    }

    proptest! {
        #[test]
        fn complement_is_involution(g in arb_digraph()) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn core_is_inside_underlying(g in arb_digraph()) {
            let un = g.underlying_undirected();
            let core = g.bidirectional_core();
            for (u, v) in core.edges() {
                prop_assert!(un.has_edge(u, v));
            }
            let sym = SideInfoGraph::from_undirected(&un);
            prop_assert_eq!(sym.underlying_undirected(), sym.bidirectional_core());
        }

        #[test]
        fn parse_roundtrips_canonical_text(g in arb_digraph()) {
            let text = g.to_canonical_string();
            prop_assert_eq!(text.parse::<SideInfoGraph>().unwrap(), g);
        }

        #[test]
        fn induction_composes(g in arb_digraph(), pick in any::<u64>(), pick2 in any::<u64>()) {
            let n = g.n();
            let s_mask = (pick & full_mask(n)) | 1;
            let s = VertexSet::from_mask(s_mask);
            let h = g.induced_subgraph(&s).unwrap();
            let t_mask = (pick2 & full_mask(h.n())) | 1;
            let t = VertexSet::from_mask(t_mask);
            let composed: Vec<usize> = t.iter().map(|i| s.as_slice()[i]).collect();
            let direct = g.induced_subgraph(&VertexSet::new(composed, n).unwrap()).unwrap();
            prop_assert_eq!(h.induced_subgraph(&t).unwrap(), direct);
        }
    }
}
