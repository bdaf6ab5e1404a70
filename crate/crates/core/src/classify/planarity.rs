//! Left-right planarity test with embedding construction, plus Kuratowski
//! subdivision extraction for non-planar inputs.
//!
//! Either answer carries a witness that is checked independently of the
//! test itself: a rotation system is accepted only if face tracing satisfies
//! Euler's formula on every component, and an obstruction is accepted only
//! if it is a subdivision of K5 or K3,3 inside the input graph.

use serde::Serialize;

use crate::graph::{bit, bits, UndirectedGraph};

type Edge = (usize, usize);

#[derive(Clone, Copy, Default, Debug)]
struct Interval {
    low: Option<Edge>,
    high: Option<Edge>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Default, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

const NONE: usize = usize::MAX;

/// Cyclic neighbor lists under construction.
struct RotationBuilder {
    n: usize,
    cw: Vec<usize>,
    ccw: Vec<usize>,
    first: Vec<Option<usize>>,
}

impl RotationBuilder {
    fn new(n: usize) -> Self {
        RotationBuilder {
            n,
            cw: vec![NONE; n * n],
            ccw: vec![NONE; n * n],
            first: vec![None; n],
        }
    }

    /// Inserts `w` clockwise right after `reference` around `v`.
    fn add_cw(&mut self, v: usize, w: usize, reference: Option<usize>) {
        let n = self.n;
        match reference {
            None => {
                self.cw[v * n + w] = w;
                self.ccw[v * n + w] = w;
                self.first[v] = Some(w);
            }
            Some(r) => {
                let after = self.cw[v * n + r];
                self.cw[v * n + r] = w;
                self.cw[v * n + w] = after;
                self.ccw[v * n + after] = w;
                self.ccw[v * n + w] = r;
            }
        }
    }

    /// Inserts `w` counter-clockwise right before `reference` around `v`.
    fn add_ccw(&mut self, v: usize, w: usize, reference: Option<usize>) {
        match reference {
            None => self.add_cw(v, w, None),
            Some(r) => {
                let before = self.ccw[v * self.n + r];
                self.add_cw(v, w, Some(before));
                if self.first[v] == Some(r) {
                    self.first[v] = Some(w);
                }
            }
        }
    }

    fn add_first(&mut self, v: usize, w: usize) {
        let reference = self.first[v];
        self.add_ccw(v, w, reference);
    }

    fn finish(self) -> PlanarEmbedding {
        let n = self.n;
        let rotation = (0..n)
            .map(|v| {
                let mut order = Vec::new();
                if let Some(start) = self.first[v] {
                    let mut w = start;
                    loop {
                        order.push(w);
                        w = self.cw[v * n + w];
                        if w == start || w == NONE {
                            break;
                        }
                    }
                }
                order
            })
            .collect();
        PlanarEmbedding { rotation }
    }
}

struct LeftRight<'a> {
    g: &'a UndirectedGraph,
    n: usize,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<Edge>>,
    oriented: Vec<bool>,
    out: Vec<Vec<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    ordered: Vec<Vec<usize>>,
    reference: Vec<Option<Edge>>,
    side: Vec<i64>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<Option<Edge>>,
    left_ref: Vec<usize>,
    right_ref: Vec<usize>,
    roots: Vec<usize>,
}

impl<'a> LeftRight<'a> {
    fn new(g: &'a UndirectedGraph) -> Self {
        let n = g.n();
        let nn = n * n;
        LeftRight {
            g,
            n,
            height: vec![None; n],
            parent_edge: vec![None; n],
            oriented: vec![false; nn],
            out: vec![Vec::new(); n],
            lowpt: vec![0; nn],
            lowpt2: vec![0; nn],
            nesting_depth: vec![0; nn],
            ordered: vec![Vec::new(); n],
            reference: vec![None; nn],
            side: vec![1; nn],
            stack: Vec::new(),
            stack_bottom: vec![0; nn],
            lowpt_edge: vec![None; nn],
            left_ref: vec![NONE; n],
            right_ref: vec![NONE; n],
            roots: Vec::new(),
        }
    }

    #[inline]
    fn id(&self, e: Edge) -> usize {
        e.0 * self.n + e.1
    }

    fn lowpt_of(&self, e: Edge) -> usize {
        self.lowpt[self.id(e)]
    }

    fn conflicting(&self, i: &Interval, b: Edge) -> bool {
        match i.high {
            Some(h) if !i.is_empty() => self.lowpt_of(h) > self.lowpt_of(b),
            _ => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt_of(r),
            (Some(l), None) => self.lowpt_of(l),
            (Some(l), Some(r)) => self.lowpt_of(l).min(self.lowpt_of(r)),
            (None, None) => usize::MAX,
        }
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        let hv = self.height[v].expect("visited");
        for w in bits(self.g.neighbors(v)) {
            if self.oriented[v * self.n + w] || self.oriented[w * self.n + v] {
                continue;
            }
            let vw = (v, w);
            let id = self.id(vw);
            self.oriented[id] = true;
            self.out[v].push(w);
            self.lowpt[id] = hv;
            self.lowpt2[id] = hv;
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(vw);
                    self.height[w] = Some(hv + 1);
                    self.orient(w);
                }
                Some(hw) => self.lowpt[id] = hw,
            }
            self.nesting_depth[id] = 2 * self.lowpt[id] as i64 + i64::from(self.lowpt2[id] < hv);
            if let Some(e) = e {
                let eid = self.id(e);
                if self.lowpt[id] < self.lowpt[eid] {
                    self.lowpt2[eid] = self.lowpt[eid].min(self.lowpt2[id]);
                    self.lowpt[eid] = self.lowpt[id];
                } else if self.lowpt[id] > self.lowpt[eid] {
                    self.lowpt2[eid] = self.lowpt2[eid].min(self.lowpt[id]);
                } else {
                    self.lowpt2[eid] = self.lowpt2[eid].min(self.lowpt2[id]);
                }
            }
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let hv = self.height[v].expect("visited");
        let adjs = self.ordered[v].clone();
        for (i, &w) in adjs.iter().enumerate() {
            let ei = (v, w);
            let id = self.id(ei);
            self.stack_bottom[id] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[id] = Some(ei);
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                });
            }
            if self.lowpt[id] < hv {
                let e = e.expect("return edge implies a parent");
                if i == 0 {
                    let eid = self.id(e);
                    self.lowpt_edge[eid] = self.lowpt_edge[id];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = e {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: Edge, e: Edge) -> bool {
        let mut p = ConflictPair::default();
        let bottom = self.stack_bottom[self.id(ei)];
        loop {
            let Some(mut q) = self.stack.pop() else {
                return false;
            };
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("nonempty interval");
            if self.lowpt_of(q_low) > self.lowpt_of(e) {
                if p.right.is_empty() {
                    p.right = q.right;
                } else if let Some(pl) = p.right.low {
                    let id = self.id(pl);
                    self.reference[id] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                let id = self.id(q_low);
                self.reference[id] = self.lowpt_edge[self.id(e)];
            }
            if self.stack.len() <= bottom {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("nonempty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(pl) = p.right.low {
                let id = self.id(pl);
                self.reference[id] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(pl) = p.left.low {
                let id = self.id(pl);
                self.reference[id] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: Edge) {
        let u = e.0;
        let hu = self.height[u].expect("visited");
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            let p = self.stack.pop().expect("nonempty");
            if let Some(l) = p.left.low {
                let id = self.id(l);
                self.side[id] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if h.1 != u {
                    break;
                }
                p.left.high = self.reference[self.id(h)];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    let id = self.id(l);
                    self.reference[id] = p.right.low;
                    self.side[id] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if h.1 != u {
                    break;
                }
                p.right.high = self.reference[self.id(h)];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    let id = self.id(r);
                    self.reference[id] = p.left.low;
                    self.side[id] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        let eid = self.id(e);
        if self.lowpt[eid] < hu {
            let top = self.stack.last().expect("return edge keeps a pair on the stack");
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[eid] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt_of(l) > self.lowpt_of(r) => Some(l),
                _ => hr,
            };
        }
    }

    fn sign(&mut self, e: Edge) -> i64 {
        let id = self.id(e);
        if let Some(r) = self.reference[id] {
            let s = self.sign(r);
            self.side[id] *= s;
            self.reference[id] = None;
        }
        self.side[id]
    }

    fn embed(&mut self, v: usize, rot: &mut RotationBuilder) {
        let adjs = self.ordered[v].clone();
        for w in adjs {
            let ei = (v, w);
            if self.parent_edge[w] == Some(ei) {
                rot.add_first(w, v);
                self.left_ref[v] = w;
                self.right_ref[v] = w;
                self.embed(w, rot);
            } else if self.side[self.id(ei)] == 1 {
                let r = self.right_ref[w];
                rot.add_cw(w, v, Some(r));
            } else {
                let l = self.left_ref[w];
                rot.add_ccw(w, v, Some(l));
                self.left_ref[w] = v;
            }
        }
    }

    fn sort_ordered(&mut self) {
        for v in 0..self.n {
            let mut adj = self.out[v].clone();
            adj.sort_by_key(|&w| self.nesting_depth[v * self.n + w]);
            self.ordered[v] = adj;
        }
    }

    /// Runs the test; builds the embedding only when `embed` is set.
    fn run(mut self, embed: bool) -> Option<Option<PlanarEmbedding>> {
        let n = self.n;
        let m = self.g.edge_count();
        if n > 2 && m > 3 * n - 6 {
            return None;
        }
        for v in 0..n {
            if self.height[v].is_none() {
                self.height[v] = Some(0);
                self.roots.push(v);
                self.orient(v);
            }
        }
        self.sort_ordered();
        for r in self.roots.clone() {
            if !self.test(r) {
                return None;
            }
        }
        if !embed {
            return Some(None);
        }
        for v in 0..n {
            for w in self.out[v].clone() {
                let s = self.sign((v, w));
                self.nesting_depth[v * n + w] *= s;
            }
        }
        self.sort_ordered();
        let mut rot = RotationBuilder::new(n);
        for v in 0..n {
            let mut prev = None;
            for &w in &self.ordered[v] {
                rot.add_cw(v, w, prev);
                prev = Some(w);
            }
        }
        for r in self.roots.clone() {
            self.embed(r, &mut rot);
        }
        Some(Some(rot.finish()))
    }
}

/// Planarity decision without a witness.
pub fn is_planar_graph(g: &UndirectedGraph) -> bool {
    LeftRight::new(g).run(false).is_some()
}

/// Clockwise neighbor order around every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarEmbedding {
    pub rotation: Vec<Vec<usize>>,
}

impl PlanarEmbedding {
    /// Number of faces traced by the rotation system.
    pub fn face_count(&self) -> usize {
        let n = self.rotation.len();
        let mut pos = vec![NONE; n * n];
        for (v, rot) in self.rotation.iter().enumerate() {
            for (i, &w) in rot.iter().enumerate() {
                pos[v * n + w] = i;
            }
        }
        let mut seen = vec![false; n * n];
        let mut faces = 0;
        for u in 0..n {
            for &v in &self.rotation[u] {
                if seen[u * n + v] {
                    continue;
                }
                faces += 1;
                let (mut a, mut b) = (u, v);
                while !seen[a * n + b] {
                    seen[a * n + b] = true;
                    let rot = &self.rotation[b];
                    let next = rot[(pos[b * n + a] + 1) % rot.len()];
                    a = b;
                    b = next;
                }
            }
        }
        faces
    }

    /// Checks that the rotation system lists exactly the neighbors of each
    /// vertex and that every component with an edge has genus zero.
    pub fn verify(&self, g: &UndirectedGraph) -> bool {
        let n = g.n();
        if self.rotation.len() != n {
            return false;
        }
        for v in 0..n {
            let rot = &self.rotation[v];
            let mask = rot.iter().fold(0u64, |m, &w| m | bit(w));
            if rot.len() != g.degree(v) || mask != g.neighbors(v) {
                return false;
            }
        }
        let comps: Vec<u64> = g.components().into_iter().filter(|c| c.count_ones() > 1).collect();
        let vertices: usize = comps.iter().map(|c| c.count_ones() as usize).sum();
        let euler = vertices as i64 - g.edge_count() as i64 + self.face_count() as i64;
        euler == 2 * comps.len() as i64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subgraph that is a subdivision of K5 or K3,3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiSubdivision {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl KuratowskiSubdivision {
    /// Determines the kind of an edge set, if it is a Kuratowski subdivision.
    fn recognize(n: usize, edges: &[(usize, usize)]) -> Option<(KuratowskiKind, Vec<usize>)> {
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u == v || u >= n || v >= n || adj[u] & bit(v) != 0 {
                return None;
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        let deg = |v: usize| adj[v].count_ones();
        if (0..n).any(|v| deg(v) == 1) {
            return None;
        }
        let branch: Vec<usize> = (0..n).filter(|&v| deg(v) >= 3).collect();
        let kind = match (branch.len(), branch.iter().map(|&v| deg(v)).max()) {
            (5, Some(4)) if branch.iter().all(|&v| deg(v) == 4) => KuratowskiKind::K5,
            (6, Some(3)) if branch.iter().all(|&v| deg(v) == 3) => KuratowskiKind::K33,
            _ => return None,
        };
        let branch_mask = branch.iter().fold(0u64, |m, &v| m | bit(v));
        // follow each branch path through degree-2 vertices
        let mut links = vec![0u64; n];
        let mut traversed = 0usize;
        for &s in &branch {
            for first in bits(adj[s]) {
                let (mut prev, mut cur) = (s, first);
                let mut steps = 1;
                while branch_mask & bit(cur) == 0 {
                    let next = bits(adj[cur] & !bit(prev)).next()?;
                    prev = cur;
                    cur = next;
                    steps += 1;
                    if steps > edges.len() {
                        return None;
                    }
                }
                if cur == s || links[s] & bit(cur) != 0 {
                    return None;
                }
                links[s] |= bit(cur);
                traversed += steps;
            }
        }
        // every path was walked from both ends
        if traversed != 2 * edges.len() {
            return None;
        }
        let ok = match kind {
            KuratowskiKind::K5 => branch.iter().all(|&v| links[v] == branch_mask & !bit(v)),
            KuratowskiKind::K33 => {
                let a = links[branch[0]];
                let side_a = branch_mask & !a;
                a.count_ones() == 3
                    && side_a.count_ones() == 3
                    && bits(side_a).all(|v| links[v] == a)
                    && bits(a).all(|v| links[v] == side_a)
            }
        };
        ok.then_some((kind, branch))
    }

    /// Checks the subdivision structure and that all edges belong to `g`.
    pub fn verify(&self, g: &UndirectedGraph) -> bool {
        self.edges.iter().all(|&(u, v)| g.has_edge(u, v))
            && Self::recognize(g.n(), &self.edges)
                .is_some_and(|(kind, branch)| kind == self.kind && branch == self.branch_vertices)
    }
}

/// Planarity answer with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Planarity {
    Planar(PlanarEmbedding),
    NonPlanar(KuratowskiSubdivision),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }

    pub fn verify(&self, g: &UndirectedGraph) -> bool {
        match self {
            Planarity::Planar(e) => e.verify(g),
            Planarity::NonPlanar(k) => k.verify(g),
        }
    }
}

impl Serialize for Planarity {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Emb<'a> {
            planar: bool,
            rotation: Vec<Vec<usize>>,
            #[serde(skip)]
            _p: std::marker::PhantomData<&'a ()>,
        }
        #[derive(Serialize)]
        struct Obs {
            planar: bool,
            obstruction: KuratowskiKind,
            branch_vertices: Vec<usize>,
            edges: Vec<(usize, usize)>,
        }
        match self {
            Planarity::Planar(e) => Emb {
                planar: true,
                rotation: e.rotation.iter().map(|r| r.iter().map(|v| v + 1).collect()).collect(),
                _p: std::marker::PhantomData,
            }
            .serialize(s),
            Planarity::NonPlanar(k) => Obs {
                planar: false,
                obstruction: k.kind,
                branch_vertices: k.branch_vertices.iter().map(|v| v + 1).collect(),
                edges: k.edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect(),
            }
            .serialize(s),
        }
    }
}

/// Exact planarity with a checkable witness.
pub fn planarity(g: &UndirectedGraph) -> Planarity {
    if let Some(Some(embedding)) = LeftRight::new(g).run(true) {
        return Planarity::Planar(embedding);
    }
    // edge-minimal non-planar subgraph: drop every edge whose removal keeps it non-planar
    let mut h = g.clone();
    for (u, v) in g.edges() {
        h.remove_edge(u, v);
        if is_planar_graph(&h) {
            h.add_edge(u, v).expect("edge came from the graph");
        }
    }
    let edges = h.edges();
    let (kind, branch_vertices) = KuratowskiSubdivision::recognize(g.n(), &edges)
        .expect("an edge-minimal non-planar graph is a Kuratowski subdivision");
    Planarity::NonPlanar(KuratowskiSubdivision {
        kind,
        branch_vertices,
        edges,
    })
}
