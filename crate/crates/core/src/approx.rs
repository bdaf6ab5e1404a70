//! Approximation guarantees for the clique-cover scheme: the Ramsey-driven
//! gap with its two-case certificate, factor-four bounds for planar
//! instances, and acyclic-set extraction for unidirected instances.

use serde::Serialize;

use crate::bounds::{chromatic_number, clique_cover_number, color_classes, independence_number};
use crate::classify::is_planar_graph;
use crate::error::{Error, Result};
use crate::graph::{bit, bits, full_mask, SideInfoGraph, VertexSet};
use crate::limits::Limits;
use crate::rational::{self, ratio, Rational};

/// Constants of a bilinear Ramsey bound R(i, j) <= c i^a j^b.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassConstants {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl ClassConstants {
    /// a = b = c = 1: planar, line and fuzzy circular interval graphs.
    pub const BILINEAR: ClassConstants = ClassConstants { a: 1.0, b: 1.0, c: 1.0 };

    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) || a < 0.0 || b < 0.0 {
            return Err(Error::InvalidArgument("class exponents must be finite and nonnegative".into()));
        }
        if c <= 0.0 {
            return Err(Error::InvalidArgument(format!("class constant c must be positive, got {c}")));
        }
        Ok(ClassConstants { a, b, c })
    }

    fn exponent_sum(&self) -> f64 {
        self.a + self.b + 1.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GapParameters {
    pub n: usize,
    pub constants: ClassConstants,
    /// (n / c)^{1/(a+b+1)}
    pub k: f64,
    /// c^{1/(a+b+1)} n^{(a+b)/(a+b+1)}
    pub gap: f64,
}

pub fn gap_parameters(n: usize, constants: ClassConstants) -> Result<GapParameters> {
    let constants = ClassConstants::new(constants.a, constants.b, constants.c)?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let s = constants.exponent_sum();
    let nf = n as f64;
    Ok(GapParameters {
        n,
        constants,
        k: (nf / constants.c).powf(1.0 / s),
        gap: constants.c.powf(1.0 / s) * nf.powf((constants.a + constants.b) / s),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GapCase {
    /// chi(complement) < 2n/k: the clique partition itself is within the gap.
    CliqueCoverSmall,
    /// chi(complement) >= 2n/k: a large independent set pins the lower bound.
    IndependentSetLarge,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapCertificate {
    pub case: GapCase,
    pub parameters: GapParameters,
    /// Case 1: 2n/k. Case 2: (n / (c ceil(k)^{a+1}))^{1/b}.
    pub threshold: f64,
    /// Case 1: the clique partition size. Case 2: the independent set size.
    pub claimed_bound: usize,
    pub partition: Vec<VertexSet>,
    pub independent_set: VertexSet,
    /// Bounds on the broadcast rate backed by the two witnesses.
    pub lower: usize,
    pub upper: usize,
    pub achieved_ratio: f64,
    pub notes: Vec<String>,
}

impl GapCertificate {
    pub fn verify(&self, g: &SideInfoGraph) -> bool {
        let core = g.bidirectional_core();
        let structural = crate::bounds::is_clique_partition(g, &self.partition)
            && core.is_independent(self.independent_set.mask())
            && self.lower == self.independent_set.len()
            && self.upper == self.partition.len()
            && self.lower <= self.upper;
        let case_ok = match self.case {
            GapCase::CliqueCoverSmall => (self.partition.len() as f64) < self.threshold,
            GapCase::IndependentSetLarge => self.independent_set.len() as f64 >= self.threshold - 1e-9,
        };
        structural && case_ok
    }
}

/// Integer clique size used in the case-2 Ramsey expression.
fn integer_k(k: f64) -> f64 {
    (k - 1e-9).ceil().max(1.0)
}

/// Two-case certificate for an undirected instance of a class with the given
/// bilinear Ramsey constants (membership is the caller's assertion).
pub fn gap_certificate(g: &SideInfoGraph, constants: ClassConstants, limits: &Limits) -> Result<GapCertificate> {
    if !g.is_undirected() {
        return Err(Error::Precondition("gap certificate needs an undirected instance".into()));
    }
    limits.check_exact("gap certificate", g.n())?;
    let n = g.n();
    let parameters = gap_parameters(n, constants)?;
    let core = g.bidirectional_core();
    let (cc, partition) = clique_cover_number(g, limits)?;
    let (alpha, independent_set) = independence_number(&core, limits)?;
    let mut notes = Vec::new();
    if alpha == 1 {
        notes.push("instance is a clique: broadcast rate is 1".into());
    }
    let case1_threshold = 2.0 * n as f64 / parameters.k;
    let (case, threshold, claimed_bound) = if (cc as f64) < case1_threshold {
        (GapCase::CliqueCoverSmall, case1_threshold, cc)
    } else {
        let ClassConstants { a, b, c } = parameters.constants;
        let kc = integer_k(parameters.k);
        let required = if b == 0.0 {
            1.0
        } else {
            (n as f64 / (c * kc.powf(a + 1.0))).powf(1.0 / b)
        };
        notes.push(format!("case 2 uses integer clique size ceil(k) = {kc}"));
        if (alpha as f64) < required - 1e-9 {
            return Err(Error::ClassAssertion(format!(
                "independence number {alpha} is below the guaranteed {required:.4}; the instance is not in a class with these constants"
            )));
        }
        (GapCase::IndependentSetLarge, required, alpha)
    };
    Ok(GapCertificate {
        case,
        parameters,
        threshold,
        claimed_bound,
        partition,
        independent_set,
        lower: alpha,
        upper: cc,
        achieved_ratio: cc as f64 / alpha as f64,
        notes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanarRoute {
    /// G planar: n/4 <= n/chi(G) <= alpha(G) <= beta <= n.
    GraphPlanar,
    /// complement planar: 1 <= beta <= chi(complement) <= 4.
    ComplementPlanar,
    /// Un(G) planar: n/4 <= beta(Un G) <= beta(G) <= n.
    UnderlyingPlanar,
    /// Un(complement) planar: 1 <= beta <= chi(Un(complement)) <= 4.
    UnderlyingComplementPlanar,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundPair {
    pub route: PlanarRoute,
    #[serde(serialize_with = "rational::serialize")]
    pub lower: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub upper: Rational,
    /// Proper coloring with at most four colors backing the route.
    pub coloring: Option<Vec<VertexSet>>,
}

impl BoundPair {
    pub fn ratio(&self) -> Rational {
        &self.upper / &self.lower
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlanarBounds {
    pub best: BoundPair,
    pub alternatives: Vec<BoundPair>,
    pub notes: Vec<String>,
}

fn four_coloring(g: &crate::graph::UndirectedGraph, limits: &Limits) -> Result<Vec<VertexSet>> {
    let (count, colors) = chromatic_number(g, limits)?;
    if count > 4 {
        return Err(Error::Invariant(format!("planar graph needed {count} colors")));
    }
    Ok(color_classes(&colors, count))
}

fn graph_route(route: PlanarRoute, g: &crate::graph::UndirectedGraph, limits: &Limits) -> Result<BoundPair> {
    let n = g.n() as i64;
    let coloring = match limits.check_exact("four-coloring witness", g.n()) {
        Ok(()) => Some(four_coloring(g, limits)?),
        Err(_) => None,
    };
    Ok(BoundPair {
        route,
        lower: ratio(n, 4),
        upper: rational::int(n),
        coloring,
    })
}

fn complement_route(route: PlanarRoute, comp: &crate::graph::UndirectedGraph, limits: &Limits) -> Result<BoundPair> {
    let classes = four_coloring(comp, limits)?;
    Ok(BoundPair {
        route,
        lower: rational::int(1),
        upper: rational::int(classes.len().max(1) as i64),
        coloring: Some(classes),
    })
}

fn assemble(mut pairs: Vec<BoundPair>, prefer_first: bool, notes: Vec<String>) -> Result<PlanarBounds> {
    if pairs.is_empty() {
        return Err(Error::NoPlanarRoute);
    }
    if !prefer_first {
        // stable: earlier routes win ties
        let best = (0..pairs.len())
            .min_by(|&x, &y| pairs[x].ratio().cmp(&pairs[y].ratio()).then(x.cmp(&y)))
            .expect("nonempty");
        pairs.swap(0, best);
    }
    let best = pairs.remove(0);
    Ok(PlanarBounds {
        best,
        alternatives: pairs,
        notes,
    })
}

/// Factor-four bounds for an undirected instance whose graph or complement
/// is planar; the tighter pair is reported as `best`.
pub fn planar_bounds(g: &SideInfoGraph, limits: &Limits) -> Result<PlanarBounds> {
    if !g.is_undirected() {
        return Err(Error::Precondition("planar bounds need an undirected instance".into()));
    }
    let un = g.underlying_undirected();
    let comp = un.complement();
    let mut pairs = Vec::new();
    let mut notes = Vec::new();
    if is_planar_graph(&un) {
        pairs.push(graph_route(PlanarRoute::GraphPlanar, &un, limits)?);
    }
    if is_planar_graph(&comp) {
        pairs.push(complement_route(PlanarRoute::ComplementPlanar, &comp, limits)?);
    }
    if un.edge_count() == crate::graph::UndirectedGraph::pair_count(un.n()) {
        notes.push("instance is a clique: broadcast rate is 1".into());
    }
    assemble(pairs, false, notes)
}

/// Factor-four bounds for a directed instance with Un(G) or Un(complement)
/// planar; the Un(G) route is reported first when it applies.
pub fn directed_planar_bounds(g: &SideInfoGraph, limits: &Limits) -> Result<PlanarBounds> {
    let un = g.underlying_undirected();
    let un_comp = g.complement().underlying_undirected();
    let mut pairs = Vec::new();
    if is_planar_graph(&un) {
        pairs.push(graph_route(PlanarRoute::UnderlyingPlanar, &un, limits)?);
    }
    if is_planar_graph(&un_comp) {
        pairs.push(complement_route(PlanarRoute::UnderlyingComplementPlanar, &un_comp, limits)?);
    }
    assemble(pairs, true, Vec::new())
}

/// Acyclic vertex set found by pivoting on the lowest vertex of a completed
/// orientation; `vertices` is in topological order of the original graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AcyclicSet {
    pub vertices: VertexSet,
}

fn pivot_chain(out: &[u64], set: u64, chain: &mut Vec<usize>) {
    let Some(v) = bits(set).next() else {
        return;
    };
    let rest = set & !bit(v);
    let outs = out[v] & rest;
    let ins = rest & !outs;
    if outs.count_ones() >= ins.count_ones() {
        chain.push(v);
        pivot_chain(out, outs, chain);
    } else {
        pivot_chain(out, ins, chain);
        chain.push(v);
    }
}

pub fn extract_acyclic(g: &SideInfoGraph) -> Result<AcyclicSet> {
    if let Some((u, v)) = g.first_bidirectional_pair() {
        return Err(Error::NotUnidirected(u + 1, v + 1));
    }
    let n = g.n();
    let mut out = g.out_masks().to_vec();
    for (u, row) in out.iter_mut().enumerate() {
        for v in u + 1..n {
            if !g.has_arc(u, v) && !g.has_arc(v, u) {
                *row |= bit(v);
            }
        }
    }
    let mut chain = Vec::new();
    pivot_chain(&out, full_mask(n), &mut chain);
    let mask = chain.iter().fold(0u64, |m, &v| m | bit(v));
    let order = g
        .topological_order(mask)
        .ok_or_else(|| Error::Invariant("extracted set is not acyclic in the original graph".into()))?;
    Ok(AcyclicSet {
        vertices: VertexSet::new(order, n)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnidirectedBound {
    pub floor_log2_n: usize,
    pub witness: AcyclicSet,
    /// max(floor(log2 n), |witness|)
    pub bound: usize,
}

pub fn unidirected_lower_bound(g: &SideInfoGraph) -> Result<UnidirectedBound> {
    let witness = extract_acyclic(g)?;
    let floor_log2_n = g.n().ilog2() as usize;
    Ok(UnidirectedBound {
        floor_log2_n,
        bound: floor_log2_n.max(witness.vertices.len()),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::tests::three_node;
    use crate::graph::Mode;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parameter_arithmetic() {
        let p = gap_parameters(1000, ClassConstants::BILINEAR).unwrap();
        assert!((p.k - 10.0).abs() < 1e-9 && (p.gap - 100.0).abs() < 1e-9);
        let p = gap_parameters(64, ClassConstants::BILINEAR).unwrap();
        assert!((p.k - 4.0).abs() < 1e-9 && (p.gap - 16.0).abs() < 1e-9);
        let c = ClassConstants::new(2.0, 0.5, 3.0).unwrap();
        let p = gap_parameters(1, c).unwrap();
        assert!((p.gap - 3f64.powf(1.0 / 3.5)).abs() < 1e-12);
        assert!(ClassConstants::new(1.0, 1.0, 0.0).is_err());
        assert!(gap_parameters(0, ClassConstants::BILINEAR).is_err());
    }

    proptest! {
        #[test]
        fn gap_is_n_over_k(n in 1usize..100_000, a in 0.0f64..3.0, b in 0.0f64..3.0, c in 0.1f64..10.0) {
            let p = gap_parameters(n, ClassConstants::new(a, b, c).unwrap()).unwrap();
            prop_assert!((p.gap - n as f64 / p.k).abs() <= 1e-9 * p.gap.max(1.0));
        }
    }

    #[test]
    fn certificate_examples() {
        let lim = Limits::default();
        let k6 = generators::complete(6).to_side_info();
        let c = gap_certificate(&k6, ClassConstants::BILINEAR, &lim).unwrap();
        assert_eq!((c.case, c.claimed_bound), (GapCase::CliqueCoverSmall, 1));
        assert!(c.verify(&k6));

        let e8 = generators::empty(8).to_side_info();
        let c = gap_certificate(&e8, ClassConstants::BILINEAR, &lim).unwrap();
        assert_eq!((c.case, c.claimed_bound), (GapCase::IndependentSetLarge, 8));
        assert!(c.verify(&e8));

        let c5 = generators::cycle(5).to_side_info();
        let c = gap_certificate(&c5, ClassConstants::BILINEAR, &lim).unwrap();
        assert_eq!((c.case, c.claimed_bound), (GapCase::CliqueCoverSmall, 3));
        assert!(c.verify(&c5));

        assert!(gap_certificate(&three_node(), ClassConstants::BILINEAR, &lim).is_err());
    }

    #[test]
    fn certificate_ratio_within_twice_gap_on_planar_inputs() {
        let lim = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..40 {
            let n = rng.gen_range(1..=16);
            let g = generators::random_connected_planar(n, &mut rng).to_side_info();
            let c = gap_certificate(&g, ClassConstants::BILINEAR, &lim).unwrap();
            assert!(c.verify(&g));
            assert!(c.achieved_ratio <= 2.0 * c.parameters.gap + 1e-9);
        }
    }

    #[test]
    fn planar_examples() {
        let lim = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let g = generators::random_connected_planar(12, &mut rng);
        let comp_planar = is_planar_graph(&g.complement());
        let b = planar_bounds(&g.to_side_info(), &lim).unwrap();
        if !comp_planar {
            assert_eq!((b.best.lower.clone(), b.best.upper.clone()), (rational::int(3), rational::int(12)));
        }

        let b = planar_bounds(&generators::complete(5).to_side_info(), &lim).unwrap();
        assert_eq!(b.best.route, PlanarRoute::ComplementPlanar);
        assert_eq!((b.best.lower.clone(), b.best.upper.clone()), (rational::int(1), rational::int(1)));

        let b = planar_bounds(&generators::cycle(5).to_side_info(), &lim).unwrap();
        assert_eq!((b.best.lower.clone(), b.best.upper.clone()), (rational::int(1), rational::int(3)));
        assert_eq!(b.alternatives.len(), 1);
        assert_eq!((b.alternatives[0].lower.clone(), b.alternatives[0].upper.clone()), (ratio(5, 4), rational::int(5)));

        let petersen = generators::petersen().to_side_info();
        assert!(matches!(planar_bounds(&petersen, &lim), Err(Error::NoPlanarRoute)));
    }

    #[test]
    fn directed_examples() {
        let lim = Limits::default();
        let b = directed_planar_bounds(&three_node(), &lim).unwrap();
        assert_eq!(b.best.route, PlanarRoute::UnderlyingPlanar);
        assert_eq!((b.best.lower.clone(), b.best.upper.clone()), (ratio(3, 4), rational::int(3)));

        let t4 = generators::transitive_tournament(4);
        let b = directed_planar_bounds(&t4, &lim).unwrap();
        assert_eq!((b.best.lower.clone(), b.best.upper.clone()), (rational::int(1), rational::int(4)));

        let k9 = generators::complete(9).to_side_info();
        let b = directed_planar_bounds(&k9, &lim).unwrap();
        assert_eq!(b.best.route, PlanarRoute::UnderlyingComplementPlanar);
        assert_eq!((b.best.lower.clone(), b.best.upper.clone()), (rational::int(1), rational::int(1)));
    }

    #[test]
    fn factor_four_on_random_planar_graphs() {
        let lim = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..30 {
            let n = rng.gen_range(4..=18);
            let g = generators::random_connected_planar(n, &mut rng);
            let b = planar_bounds(&g.to_side_info(), &lim).unwrap();
            assert!(b.best.ratio() <= rational::int(4));
            let (alpha, _) = independence_number(&g, &lim).unwrap();
            assert!(4 * alpha >= n);
        }
    }

    #[test]
    fn acyclic_examples() {
        let t = generators::transitive_tournament(4);
        assert!(extract_acyclic(&t).unwrap().vertices.len() >= 2);
        let c4 = generators::directed_cycle(4);
        assert!(extract_acyclic(&c4).unwrap().vertices.len() >= 2);
        let one = SideInfoGraph::new(1, Mode::Directed).unwrap();
        assert_eq!(extract_acyclic(&one).unwrap().vertices.len(), 1);
        let b = unidirected_lower_bound(&one).unwrap();
        assert_eq!((b.floor_log2_n, b.bound), (0, 1));
        let c3 = generators::directed_cycle(3);
        let b = unidirected_lower_bound(&c3).unwrap();
        assert_eq!((b.floor_log2_n, b.bound), (1, 2));
        assert!(matches!(extract_acyclic(&three_node()), Err(Error::NotUnidirected(_, _))));
    }

    #[test]
    fn random_unidirected_extraction() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 1..=64 {
            for _ in 0..5 {
                let p = rng.gen_range(0.0..1.0);
                let g = generators::random_oriented_graph(n, p, &mut rng);
                let s = extract_acyclic(&g).unwrap();
                assert!(g.topological_order(s.vertices.mask()).is_some());
                assert!(g.is_acyclic_on(s.vertices.mask()));
                assert!(s.vertices.len() >= n.ilog2() as usize);
                let t = generators::random_tournament(n, &mut rng);
                let s = extract_acyclic(&t).unwrap();
                assert!(s.vertices.len() > n.ilog2() as usize);
                // listed order is a topological order of the original arcs
                let pos: Vec<usize> = s.vertices.iter().collect();
                for (x, &u) in pos.iter().enumerate() {
                    for &v in &pos[x + 1..] {
                        assert!(!t.has_arc(v, u));
                    }
                }
            }
        }
    }
}
