//! Exact computation of the bound sandwich
//! `MAIS(G) <= beta <= chi_f(complement of core) <= chi(complement of core)`.
//!
//! All routines are exponential and guarded by [`Limits::exact_vertices`].
//! Witnesses come out of deterministic searches, so repeated calls on the
//! same input return identical sets and colorings.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Mode, SideInfoGraph, UndirectedGraph, VertexSet};
use crate::limits::Limits;
use crate::lp::{CoveringLp, LpOutcome};
use crate::par::Exec;
use crate::rational::{self, int, Rational};

fn popcount(m: u64) -> usize {
    m.count_ones() as usize
}

fn clique_search(adj: &[u64], cur: u64, cands: u64, best: &mut u64) {
    if cands == 0 {
        if popcount(cur) > popcount(*best) {
            *best = cur;
        }
        return;
    }
    if popcount(cur) + popcount(cands) <= popcount(*best) {
        return;
    }
    let v = cands.trailing_zeros() as usize;
    clique_search(adj, cur | bit(v), cands & adj[v], best);
    clique_search(adj, cur, cands & !bit(v), best);
}

/// Maximum clique inside `cands`, no size guard.
pub(crate) fn max_clique_mask(adj: &[u64], cands: u64) -> u64 {
    let mut best = 0;
    clique_search(adj, 0, cands, &mut best);
    best
}

pub(crate) fn max_independent_mask(g: &UndirectedGraph) -> u64 {
    let comp = g.complement();
    max_clique_mask(comp.adjacency(), crate::graph::full_mask(g.n()))
}

/// `alpha(g)` with a maximum independent set.
pub fn independence_number(g: &UndirectedGraph, limits: &Limits) -> Result<(usize, VertexSet)> {
    limits.check_exact("independence number", g.n())?;
    let m = max_independent_mask(g);
    Ok((popcount(m), VertexSet::from_mask(m)))
}

/// `omega(g)` with a maximum clique.
pub fn clique_number(g: &UndirectedGraph, limits: &Limits) -> Result<(usize, VertexSet)> {
    limits.check_exact("clique number", g.n())?;
    let m = max_clique_mask(g.adjacency(), crate::graph::full_mask(g.n()));
    Ok((popcount(m), VertexSet::from_mask(m)))
}

const UNCOLORED: usize = usize::MAX;

struct ColorSearch<'a> {
    adj: &'a [u64],
    order: Vec<usize>,
    colors: Vec<usize>,
    best: usize,
    best_colors: Vec<usize>,
    lower: usize,
}

impl ColorSearch<'_> {
    fn forbidden(&self, v: usize) -> u64 {
        bits(self.adj[v])
            .filter(|&u| self.colors[u] != UNCOLORED)
            .fold(0u64, |m, u| m | bit(self.colors[u]))
    }

    /// Returns true once a coloring meeting the lower bound is found.
    fn search(&mut self, pos: usize, used: usize) -> bool {
        if pos == self.order.len() {
            if used < self.best {
                self.best = used;
                self.best_colors = self.colors.clone();
            }
            return self.best <= self.lower;
        }
        let v = self.order[pos];
        let forbidden = self.forbidden(v);
        for c in 0..used {
            if forbidden & bit(c) == 0 {
                self.colors[v] = c;
                if self.search(pos + 1, used) {
                    return true;
                }
            }
        }
        if used + 1 < self.best {
            self.colors[v] = used;
            if self.search(pos + 1, used + 1) {
                return true;
            }
        }
        self.colors[v] = UNCOLORED;
        false
    }
}

/// Exact chromatic number without a size guard. Vertices are colored in
/// order of decreasing degree, ties by index.
pub(crate) fn chromatic_unchecked(g: &UndirectedGraph) -> (usize, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (0, Vec::new());
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    // greedy upper bound in the same order
    let mut greedy = vec![UNCOLORED; n];
    let mut used = 0;
    for &v in &order {
        let forbidden = bits(g.neighbors(v))
            .filter(|&u| greedy[u] != UNCOLORED)
            .fold(0u64, |m, u| m | bit(greedy[u]));
        let c = (!forbidden).trailing_zeros() as usize;
        greedy[v] = c;
        used = used.max(c + 1);
    }
    let lower = popcount(max_clique_mask(g.adjacency(), crate::graph::full_mask(n)));
    if used == lower {
        return (used, greedy);
    }
    let mut search = ColorSearch {
        adj: g.adjacency(),
        order,
        colors: vec![UNCOLORED; n],
        best: used,
        best_colors: greedy,
        lower,
    };
    search.search(0, 0);
    (search.best, search.best_colors)
}

/// `chi(g)` with a proper coloring using colors `0..chi`.
pub fn chromatic_number(g: &UndirectedGraph, limits: &Limits) -> Result<(usize, Vec<usize>)> {
    limits.check_exact("chromatic number", g.n())?;
    Ok(chromatic_unchecked(g))
}

/// Color classes of a coloring, indexed by color.
pub fn color_classes(colors: &[usize], count: usize) -> Vec<VertexSet> {
    (0..count)
        .map(|c| VertexSet::from_mask(colors.iter().enumerate().filter(|(_, &x)| x == c).fold(0, |m, (v, _)| m | bit(v))))
        .collect()
}

pub fn is_proper_coloring(g: &UndirectedGraph, colors: &[usize]) -> bool {
    colors.len() == g.n() && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

/// An optimal b-fold coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BFoldColoring {
    pub fold: usize,
    pub colors_used: usize,
    /// For each vertex, its `fold` distinct colors in increasing order.
    pub colors: Vec<Vec<usize>>,
}

impl BFoldColoring {
    pub fn is_valid_for(&self, g: &UndirectedGraph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|cs| {
                cs.len() == self.fold
                    && cs.windows(2).all(|w| w[0] < w[1])
                    && cs.iter().all(|&c| c < self.colors_used)
            })
            && g.edges()
                .iter()
                .all(|&(u, v)| self.colors[u].iter().all(|c| !self.colors[v].contains(c)))
    }
}

/// The lexicographic product `g[K_b]`: copy `i` of vertex `v` is `v*b + i`.
pub fn blowup(g: &UndirectedGraph, b: usize) -> Result<UndirectedGraph> {
    let n = g.n();
    let mut h = UndirectedGraph::new(n * b)?;
    for v in 0..n {
        for i in 0..b {
            for j in i + 1..b {
                h.add_edge(v * b + i, v * b + j)?;
            }
        }
    }
    for (u, v) in g.edges() {
        for i in 0..b {
            for j in 0..b {
                h.add_edge(u * b + i, v * b + j)?;
            }
        }
    }
    Ok(h)
}

/// Exact `chi^(b)(g)` via the chromatic number of the b-blowup.
pub fn b_fold_chromatic(g: &UndirectedGraph, b: usize, limits: &Limits) -> Result<BFoldColoring> {
    if b == 0 {
        return Err(Error::InvalidArgument("fold count must be positive".into()));
    }
    if b > limits.max_fold {
        return Err(Error::LimitExceeded {
            what: "fold count",
            size: b,
            limit: limits.max_fold,
        });
    }
    limits.check_exact("b-fold blowup", g.n() * b)?;
    let h = blowup(g, b)?;
    let (count, colors) = chromatic_unchecked(&h);
    let per_vertex = (0..g.n())
        .map(|v| {
            let mut cs: Vec<usize> = (0..b).map(|i| colors[v * b + i]).collect();
            cs.sort_unstable();
            cs
        })
        .collect();
    Ok(BFoldColoring {
        fold: b,
        colors_used: count,
        colors: per_vertex,
    })
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = bits(p | x).max_by_key(|&u| popcount(p & adj[u])).unwrap_or(0);
    for v in bits(p & !adj[pivot]) {
        bron_kerbosch(adj, r | bit(v), p & adj[v], x & adj[v], out);
        p &= !bit(v);
        x |= bit(v);
    }
}

/// Maximal independent sets of `g`, ordered lexicographically by vertex list.
pub fn maximal_independent_sets(g: &UndirectedGraph) -> Vec<VertexSet> {
    let comp = g.complement();
    let mut masks = Vec::new();
    bron_kerbosch(comp.adjacency(), 0, crate::graph::full_mask(g.n()), 0, &mut masks);
    let mut sets: Vec<VertexSet> = masks.into_iter().map(VertexSet::from_mask).collect();
    sets.sort();
    sets
}

/// Weighted sets covering every vertex at least once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FractionalCover {
    pub entries: Vec<WeightedSet>,
    #[serde(serialize_with = "rational::serialize")]
    pub objective: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedSet {
    pub set: VertexSet,
    #[serde(serialize_with = "rational::serialize")]
    pub weight: Rational,
}

impl FractionalCover {
    /// Exact check that every vertex of `0..n` is covered with total weight `>= 1`
    /// and that the objective is the weight sum.
    pub fn covers(&self, n: usize) -> bool {
        let sum: Rational = self.entries.iter().map(|e| e.weight.clone()).sum();
        sum == self.objective
            && self.entries.iter().all(|e| e.weight >= Rational::zero())
            && (0..n).all(|v| {
                self.entries
                    .iter()
                    .filter(|e| e.set.contains(v))
                    .map(|e| e.weight.clone())
                    .sum::<Rational>()
                    >= Rational::one()
            })
    }
}

/// Exact `chi_f(g)` with the optimal independent-set weights and the dual
/// vertex weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FractionalChromatic {
    #[serde(serialize_with = "rational::serialize")]
    pub value: Rational,
    pub cover: FractionalCover,
    #[serde(serialize_with = "rational::serialize_vec")]
    pub vertex_weights: Vec<Rational>,
}

pub fn fractional_chromatic_number(g: &UndirectedGraph, limits: &Limits) -> Result<FractionalChromatic> {
    limits.check_exact("fractional chromatic number", g.n())?;
    let n = g.n();
    if n == 0 {
        return Ok(FractionalChromatic {
            value: Rational::zero(),
            cover: FractionalCover {
                entries: Vec::new(),
                objective: Rational::zero(),
            },
            vertex_weights: Vec::new(),
        });
    }
    let sets = maximal_independent_sets(g);
    let lp = CoveringLp {
        a: (0..n)
            .map(|v| sets.iter().map(|s| int(s.contains(v) as i64)).collect())
            .collect(),
        b: vec![Rational::one(); n],
        c: vec![Rational::one(); sets.len()],
    };
    let sol = match lp.solve()? {
        LpOutcome::Optimal(sol) => sol,
        other => return Err(Error::Invariant(format!("covering LP not optimal: {other:?}"))),
    };
    if !lp.certifies(&sol) {
        return Err(Error::Invariant("LP duality certificate failed".into()));
    }
    let entries = sets
        .into_iter()
        .zip(sol.primal)
        .filter(|(_, w)| !w.is_zero())
        .map(|(set, weight)| WeightedSet { set, weight })
        .collect();
    Ok(FractionalChromatic {
        value: sol.objective.clone(),
        cover: FractionalCover {
            entries,
            objective: sol.objective,
        },
        vertex_weights: sol.dual,
    })
}

/// Sorts each part and orders parts by their vertex lists.
pub(crate) fn canonical_partition(mut parts: Vec<VertexSet>) -> Vec<VertexSet> {
    parts = parts.into_iter().map(VertexSet::sorted).collect();
    parts.sort();
    parts
}

/// `b_CC(G)`: minimum number of cliques of `G` (sets whose pairs are all
/// bidirectional) partitioning the vertices, with an optimal partition.
pub fn clique_cover_number(g: &SideInfoGraph, limits: &Limits) -> Result<(usize, Vec<VertexSet>)> {
    limits.check_exact("clique cover", g.n())?;
    let target = g.bidirectional_core().complement();
    let (count, colors) = chromatic_unchecked(&target);
    Ok((count, canonical_partition(color_classes(&colors, count))))
}

/// True if every part is a clique of `g` and the parts partition the vertices.
pub fn is_clique_partition(g: &SideInfoGraph, parts: &[VertexSet]) -> bool {
    let core = g.bidirectional_core();
    let mut seen = 0u64;
    for p in parts {
        let m = p.mask();
        if p.is_empty() || seen & m != 0 || !core.is_clique(m) || p.iter().any(|v| v >= g.n()) {
            return false;
        }
        seen |= m;
    }
    seen == crate::graph::full_mask(g.n())
}

/// Fractional clique cover of `G`: `chi_f` of the complement of its
/// bidirectional core. The weighted sets are cliques of `G`.
pub fn fractional_clique_cover(g: &SideInfoGraph, limits: &Limits) -> Result<FractionalChromatic> {
    fractional_chromatic_number(&g.bidirectional_core().complement(), limits)
}

/// Size-`k` subsets of `0..n` as masks, in increasing numeric order.
fn subsets_of_size(n: usize, k: usize) -> Vec<u64> {
    if k == 0 || k > n {
        return if k == 0 { vec![0] } else { Vec::new() };
    }
    let limit = if n == 64 { u64::MAX } else { 1u64 << n };
    let mut out = Vec::new();
    let mut m: u64 = crate::graph::full_mask(k);
    loop {
        out.push(m);
        // Gosper's hack
        let c = m & m.wrapping_neg();
        let r = m.wrapping_add(c);
        if r == 0 {
            break;
        }
        m = (((r ^ m) >> 2) / c) | r;
        if m >= limit || m < r {
            break;
        }
    }
    out
}

/// Vertex-disjoint bidirectional pairs picked greedily; each forces one
/// vertex out of every acyclic set.
fn mais_upper_bound(g: &SideInfoGraph) -> usize {
    let core = g.bidirectional_core();
    let mut used = 0u64;
    let mut pairs = 0;
    for (u, v) in core.edges() {
        if used & (bit(u) | bit(v)) == 0 {
            used |= bit(u) | bit(v);
            pairs += 1;
        }
    }
    g.n() - pairs
}

/// Maximum acyclic induced subgraph, by subset enumeration in decreasing size.
/// The witness is listed in topological order.
pub fn mais(g: &SideInfoGraph, limits: &Limits) -> Result<(usize, VertexSet)> {
    mais_with(g, limits, Exec::default())
}

pub fn mais_with(g: &SideInfoGraph, limits: &Limits, exec: Exec) -> Result<(usize, VertexSet)> {
    limits.check_exact("maximum acyclic induced subgraph", g.n())?;
    let out = g.out_masks();
    for k in (1..=mais_upper_bound(g)).rev() {
        let candidates = subsets_of_size(g.n(), k);
        let hit = exec.find_map_first_in(&candidates, |&m| crate::graph::topological_order(out, m));
        if let Some((_, order)) = hit {
            return Ok((k, VertexSet::new(order, g.n())?));
        }
    }
    Err(Error::Invariant("no acyclic vertex set found".into()))
}

/// Asymptotic reference values printed next to the exact gap; they are not
/// guarantees at the instance size.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReferenceCurves {
    /// `n / log2 n`.
    pub n_over_log_n: Option<f64>,
    /// `n * log2 log2 n / log2 n`.
    pub n_loglog_over_log_n: Option<f64>,
}

impl ReferenceCurves {
    pub fn at(n: usize) -> Self {
        let nf = n as f64;
        let log = nf.log2();
        if n < 2 {
            return ReferenceCurves {
                n_over_log_n: None,
                n_loglog_over_log_n: None,
            };
        }
        ReferenceCurves {
            n_over_log_n: Some(nf / log),
            n_loglog_over_log_n: Some(nf * log.log2() / log),
        }
    }
}

/// The full bound sandwich for one instance, with witnesses.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub mode: Mode,
    pub mais: usize,
    /// Acyclic set in topological order.
    pub mais_witness: VertexSet,
    /// Independence number of `Un(G)`; its independent sets are acyclic.
    pub alpha_underlying: usize,
    pub alpha_underlying_witness: VertexSet,
    /// Independence number of the bidirectional core (equals `mais` for undirected input).
    pub alpha_of_bidirectional_core: usize,
    pub alpha_core_witness: VertexSet,
    /// Largest clique of `G`; `n / max_clique` bounds the fractional cover from below.
    pub max_clique: usize,
    pub max_clique_witness: VertexSet,
    pub clique_cover: usize,
    pub clique_partition: Vec<VertexSet>,
    #[serde(serialize_with = "rational::serialize")]
    pub fractional_clique_cover: Rational,
    pub fractional_cover: FractionalCover,
    #[serde(serialize_with = "rational::serialize")]
    pub gap_ratio: Rational,
    /// Set when the lower and upper bounds meet, pinning the broadcast rate.
    pub broadcast_rate: Option<usize>,
    /// For undirected input, whether `mais == alpha` held.
    pub mais_equals_alpha: Option<bool>,
    pub reference: ReferenceCurves,
}

pub fn bounds_report(g: &SideInfoGraph, limits: &Limits) -> Result<BoundsReport> {
    bounds_report_with(g, limits, Exec::default())
}

pub fn bounds_report_with(g: &SideInfoGraph, limits: &Limits, exec: Exec) -> Result<BoundsReport> {
    limits.check_exact("bounds report", g.n())?;
    let n = g.n();
    let core = g.bidirectional_core();
    let (mais, mais_witness) = mais_with(g, limits, exec)?;
    let (alpha_underlying, alpha_underlying_witness) = independence_number(&g.underlying_undirected(), limits)?;
    let (alpha_core, alpha_core_witness) = independence_number(&core, limits)?;
    let (max_clique, max_clique_witness) = clique_number(&core, limits)?;
    let (clique_cover, clique_partition) = clique_cover_number(g, limits)?;
    let frac = fractional_clique_cover(g, limits)?;
    let undirected = g.is_undirected();
    let report = BoundsReport {
        n,
        mode: g.mode(),
        mais,
        mais_witness,
        alpha_underlying,
        alpha_underlying_witness,
        alpha_of_bidirectional_core: alpha_core,
        alpha_core_witness,
        max_clique,
        max_clique_witness,
        clique_cover,
        clique_partition,
        fractional_clique_cover: frac.value.clone(),
        fractional_cover: frac.cover,
        gap_ratio: Rational::new((clique_cover as i64).into(), (mais as i64).into()),
        broadcast_rate: (mais == clique_cover).then_some(mais),
        mais_equals_alpha: undirected.then_some(mais == alpha_core),
        reference: ReferenceCurves::at(n),
    };
    report.validate(g)?;
    Ok(report)
}

impl BoundsReport {
    /// Re-validates every witness and the sandwich inequalities against `g`.
    pub fn validate(&self, g: &SideInfoGraph) -> Result<()> {
        let fail = |msg: &str| Err(Error::Invariant(msg.to_string()));
        let n = g.n();
        if self.n != n {
            return fail("vertex count mismatch");
        }
        if self.mais_witness.len() != self.mais || g.topological_order(self.mais_witness.mask()).is_none() {
            return fail("MAIS witness is not an acyclic set of the reported size");
        }
        let un = g.underlying_undirected();
        let core = g.bidirectional_core();
        if self.alpha_underlying_witness.len() != self.alpha_underlying
            || !un.is_independent(self.alpha_underlying_witness.mask())
        {
            return fail("independent-set witness of Un(G) invalid");
        }
        if self.alpha_core_witness.len() != self.alpha_of_bidirectional_core
            || !core.is_independent(self.alpha_core_witness.mask())
        {
            return fail("independent-set witness of the core invalid");
        }
        if self.max_clique_witness.len() != self.max_clique || !core.is_clique(self.max_clique_witness.mask()) {
            return fail("clique witness invalid");
        }
        if self.clique_partition.len() != self.clique_cover || !is_clique_partition(g, &self.clique_partition) {
            return fail("clique partition witness invalid");
        }
        if !self.fractional_cover.covers(n)
            || self.fractional_cover.objective != self.fractional_clique_cover
            || self.fractional_cover.entries.iter().any(|e| !core.is_clique(e.set.mask()))
        {
            return fail("fractional cover witness invalid");
        }
        let lower = int(self.mais as i64);
        let upper = int(self.clique_cover as i64);
        if !(self.alpha_underlying <= self.mais
            && lower <= self.fractional_clique_cover
            && self.fractional_clique_cover <= upper
            && self.clique_cover <= n)
        {
            return fail("bound sandwich violated");
        }
        if &self.fractional_clique_cover * int(self.max_clique as i64) < int(n as i64) {
            return fail("fractional cover below n / omega");
        }
        if self.mais_equals_alpha == Some(false) {
            return fail("MAIS differs from alpha on an undirected instance");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::rational::ratio;

    fn lim() -> Limits {
        Limits::default()
    }

    fn c5() -> UndirectedGraph {
        generators::cycle(5)
    }

    fn three_node() -> SideInfoGraph {
        "n 3\nmode directed\ne 2 1\ne 3 1\ne 1 2\ne 1 3\ne 2 3\n".parse().unwrap()
    }

    /// Brute force over all vertex subsets.
    fn brute_alpha(g: &UndirectedGraph) -> usize {
        (0u64..1 << g.n())
            .filter(|&m| g.is_independent(m))
            .map(popcount)
            .max()
            .unwrap()
    }

    /// Brute force over all colorings with k colors.
    fn brute_colorable(g: &UndirectedGraph, k: usize) -> bool {
        let n = g.n();
        let total = (k as u64).pow(n as u32);
        (0..total).any(|mut code| {
            let colors: Vec<usize> = (0..n)
                .map(|_| {
                    let c = (code % k as u64) as usize;
                    code /= k as u64;
                    c
                })
                .collect();
            is_proper_coloring(g, &colors)
        })
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&c5(), &lim()).unwrap().0, 2);
        assert_eq!(brute_alpha(&c5()), 2);
        assert_eq!(independence_number(&generators::complete(6), &lim()).unwrap().0, 1);
        let (a, w) = independence_number(&generators::empty(7), &lim()).unwrap();
        assert_eq!((a, w.len()), (7, 7));
        assert!(matches!(
            independence_number(&generators::empty(21), &lim()),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn chromatic_examples() {
        assert!(!brute_colorable(&c5(), 2));
        let (chi, colors) = chromatic_number(&c5(), &lim()).unwrap();
        assert_eq!(chi, 3);
        assert!(is_proper_coloring(&c5(), &colors));
        assert_eq!(chromatic_number(&generators::complete(4), &lim()).unwrap().0, 4);
        assert_eq!(chromatic_number(&generators::complete_bipartite(3, 4), &lim()).unwrap().0, 2);
        assert_eq!(chromatic_number(&generators::path(2), &lim()).unwrap().0, 2);
        assert_eq!(chromatic_number(&generators::petersen(), &lim()).unwrap().0, 3);
        assert_eq!(chromatic_number(&generators::empty(3), &lim()).unwrap().0, 1);
    }

    #[test]
    fn chromatic_is_deterministic() {
        let g = generators::petersen();
        assert_eq!(chromatic_number(&g, &lim()).unwrap(), chromatic_number(&g, &lim()).unwrap());
    }

    /// Exhaustive 2-fold colorings of C5 with `k` colors.
    fn brute_two_fold(k: usize) -> bool {
        let g = c5();
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).collect();
        let p = pairs.len() as u64;
        (0..p.pow(5)).any(|mut code| {
            let assign: Vec<(usize, usize)> = (0..5)
                .map(|_| {
                    let x = pairs[(code % p) as usize];
                    code /= p;
                    x
                })
                .collect();
            g.edges().iter().all(|&(u, v)| {
                let (a, b) = assign[u];
                let (c, d) = assign[v];
                a != c && a != d && b != c && b != d
            })
        })
    }

    #[test]
    fn b_fold_examples() {
        assert!(!brute_two_fold(4));
        assert!(brute_two_fold(5));
        let bf = b_fold_chromatic(&c5(), 2, &lim()).unwrap();
        assert_eq!(bf.colors_used, 5);
        assert!(bf.is_valid_for(&c5()));
        assert_eq!(b_fold_chromatic(&generators::complete(3), 3, &lim()).unwrap().colors_used, 9);
        let g = generators::petersen();
        let limits = lim().with_exact_vertices(20);
        assert_eq!(
            b_fold_chromatic(&g, 1, &limits).unwrap().colors_used,
            chromatic_number(&g, &limits).unwrap().0
        );
        assert!(b_fold_chromatic(&c5(), 0, &lim()).is_err());
        assert!(matches!(b_fold_chromatic(&c5(), 5, &lim()), Err(Error::LimitExceeded { .. })));
        assert!(matches!(b_fold_chromatic(&g, 3, &lim()), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn fractional_examples() {
        let fc = fractional_chromatic_number(&c5().complement(), &lim()).unwrap();
        assert_eq!(fc.value, ratio(5, 2));
        assert!(fc.cover.covers(5));
        assert_eq!(fractional_chromatic_number(&generators::complete(5), &lim()).unwrap().value, int(5));
        assert_eq!(fractional_chromatic_number(&generators::empty(5), &lim()).unwrap().value, int(1));
        assert_eq!(fractional_chromatic_number(&generators::petersen(), &lim()).unwrap().value, ratio(5, 2));
    }

    #[test]
    fn maximal_independent_sets_of_c5() {
        let sets = maximal_independent_sets(&c5());
        assert_eq!(sets.len(), 5);
        assert!(sets.iter().all(|s| s.len() == 2));
    }

    #[test]
    fn clique_cover_examples() {
        let (cc, parts) = clique_cover_number(&three_node(), &lim()).unwrap();
        assert_eq!(cc, 2);
        assert!(is_clique_partition(&three_node(), &parts));
        let one = [VertexSet::new(vec![0, 1], 3).unwrap(), VertexSet::new(vec![2], 3).unwrap()];
        let two = [VertexSet::new(vec![0, 2], 3).unwrap(), VertexSet::new(vec![1], 3).unwrap()];
        assert!(parts == one || parts == two);
        assert!(!is_clique_partition(&three_node(), &[VertexSet::all(3)]));

        let k = generators::complete(5).to_side_info();
        assert_eq!(clique_cover_number(&k, &lim()).unwrap().0, 1);
        let t = generators::transitive_tournament(6);
        assert_eq!(clique_cover_number(&t, &lim()).unwrap().0, 6);
    }

    #[test]
    fn mais_examples() {
        let (m, w) = mais(&three_node(), &lim()).unwrap();
        assert_eq!(m, 2);
        assert_eq!(w.one_based(), vec![2, 3]);
        assert_eq!(mais(&generators::directed_cycle(3), &lim()).unwrap().0, 2);
        let e = SideInfoGraph::new(6, Mode::Directed).unwrap();
        assert_eq!(mais(&e, &lim()).unwrap().0, 6);
        assert_eq!(mais(&generators::transitive_tournament(7), &lim()).unwrap().0, 7);
        let big = SideInfoGraph::new(21, Mode::Directed).unwrap();
        assert!(matches!(mais(&big, &lim()), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn mais_strategies_agree() {
        let g = generators::directed_cycle(9);
        assert_eq!(
            mais_with(&g, &lim(), Exec::Sequential).unwrap(),
            mais_with(&g, &lim(), Exec::Parallel).unwrap()
        );
    }

    #[test]
    fn subset_generation_counts() {
        assert_eq!(subsets_of_size(5, 2).len(), 10);
        assert_eq!(subsets_of_size(6, 6), vec![0b111111]);
        assert_eq!(subsets_of_size(64, 64), vec![u64::MAX]);
        assert_eq!(subsets_of_size(64, 63).len(), 64);
    }

    #[test]
    fn report_examples() {
        let r = bounds_report(&three_node(), &lim()).unwrap();
        assert_eq!((r.mais, r.clique_cover), (2, 2));
        assert_eq!(r.gap_ratio, int(1));
        assert_eq!(r.broadcast_rate, Some(2));

        let r = bounds_report(&c5().to_side_info(), &lim()).unwrap();
        assert_eq!((r.mais, r.clique_cover), (2, 3));
        assert_eq!(r.fractional_clique_cover, ratio(5, 2));
        assert_eq!(r.mais_equals_alpha, Some(true));
        assert_eq!(r.broadcast_rate, None);

        let r = bounds_report(&generators::complete(6).to_side_info(), &lim()).unwrap();
        assert_eq!((r.mais, r.clique_cover, r.broadcast_rate), (1, 1, Some(1)));
        assert_eq!(r.fractional_clique_cover, int(1));

        let single = SideInfoGraph::new(1, Mode::Directed).unwrap();
        let r = bounds_report(&single, &lim()).unwrap();
        assert_eq!((r.mais, r.clique_cover), (1, 1));
        assert_eq!(r.fractional_clique_cover, int(1));
        assert_eq!(r.reference.n_over_log_n, None);
    }

    #[test]
    fn report_serializes_rationals() {
        let r = bounds_report(&c5().to_side_info(), &lim()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["fractional_clique_cover"]["num"], 5);
        assert_eq!(v["fractional_clique_cover"]["den"], 2);
        assert_eq!(v["mais_witness"].as_array().unwrap().len(), 2);
    }
}
