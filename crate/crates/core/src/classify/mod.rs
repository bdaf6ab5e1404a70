//! Graph-class recognition and the approximation guarantees each class unlocks.

pub mod line;
pub mod planarity;

use serde::Serialize;

use crate::error::Result;
use crate::graph::SideInfoGraph;
use crate::limits::Limits;

pub use line::{is_line_graph, line_graph_obstruction, LineObstruction};
pub use planarity::{
    is_planar_graph, planarity, KuratowskiKind, KuratowskiSubdivision, PlanarEmbedding, Planarity,
};

/// Approximation guarantees that can be invoked for an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Guarantee {
    /// Clique cover within c^{1/(a+b+1)} n^{(a+b)/(a+b+1)} for classes with a
    /// bilinear Ramsey bound; n^{2/3} with a = b = c = 1.
    RamseyGap,
    /// Undirected instance whose graph or complement is planar: factor 4.
    PlanarFactorFour,
    /// Directed instance with Un(G) or Un(complement) planar: factor 4.
    DirectedPlanarFactorFour,
    /// Unidirected instance: floor(log2 n) <= broadcast rate.
    UnidirectedLogBound,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassLabel {
    /// Planarity of Un(G); equals planarity of G for undirected instances.
    pub planar: bool,
    /// Planarity of Un(complement of G).
    pub complement_planar: bool,
    /// Line-graph membership of Un(G); `None` above the exact limit.
    pub line_graph: Option<bool>,
    pub undirected: bool,
    pub unidirected: bool,
    pub fuzzy_asserted: bool,
    pub guarantees: Vec<Guarantee>,
    pub notes: Vec<String>,
}

impl ClassLabel {
    pub fn applies(&self, g: Guarantee) -> bool {
        self.guarantees.contains(&g)
    }

    /// Member of a class with R(i,j) <= ij.
    pub fn bilinear_class(&self) -> bool {
        self.undirected && (self.planar || self.line_graph == Some(true) || self.fuzzy_asserted)
    }
}

pub fn is_unidirected(g: &SideInfoGraph) -> bool {
    g.is_unidirected()
}

pub fn is_undirected(g: &SideInfoGraph) -> bool {
    g.is_undirected()
}

pub fn classify(g: &SideInfoGraph, fuzzy_asserted: bool, limits: &Limits) -> Result<ClassLabel> {
    let un = g.underlying_undirected();
    let planar = is_planar_graph(&un);
    let complement_planar = is_planar_graph(&g.complement().underlying_undirected());
    let mut notes = Vec::new();
    let line_graph = match line_graph_obstruction(&un, limits) {
        Ok(obs) => Some(obs.is_none()),
        Err(crate::error::Error::LimitExceeded { limit, .. }) => {
            notes.push(format!("line graph test skipped: n = {} exceeds exact limit {limit}", g.n()));
            None
        }
        Err(e) => return Err(e),
    };
    let undirected = g.is_undirected();
    let unidirected = g.is_unidirected();
    if fuzzy_asserted {
        notes.push("fuzzy circular interval membership asserted, not checked".into());
    }
    if !undirected {
        notes.push("planarity and line graph membership refer to Un(G)".into());
    }
    let mut label = ClassLabel {
        planar,
        complement_planar,
        line_graph,
        undirected,
        unidirected,
        fuzzy_asserted,
        guarantees: Vec::new(),
        notes,
    };
    if label.bilinear_class() {
        label.guarantees.push(Guarantee::RamseyGap);
    }
    if undirected && (planar || complement_planar) {
        label.guarantees.push(Guarantee::PlanarFactorFour);
    }
    if !undirected && (planar || complement_planar) {
        label.guarantees.push(Guarantee::DirectedPlanarFactorFour);
    }
    if unidirected {
        label.guarantees.push(Guarantee::UnidirectedLogBound);
    }
    Ok(label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::chromatic_number;
    use crate::generators;
    use crate::graph::tests::three_node;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn examples() {
        let lim = Limits::default();
        let c5 = generators::cycle(5).to_side_info();
        let l = classify(&c5, false, &lim).unwrap();
        assert!(l.planar && l.undirected && !l.unidirected);
        assert!(l.applies(Guarantee::PlanarFactorFour));
        assert!(l.applies(Guarantee::RamseyGap));

        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let t = generators::random_tournament(9, &mut rng);
        let l = classify(&t, false, &lim).unwrap();
        assert!(l.unidirected && !l.undirected);
        assert!(l.applies(Guarantee::UnidirectedLogBound));

        let l = classify(&three_node(), false, &lim).unwrap();
        assert!(l.planar && !l.undirected && !l.unidirected);
        assert!(l.applies(Guarantee::DirectedPlanarFactorFour));
        assert!(!l.applies(Guarantee::RamseyGap));
    }

    #[test]
    fn edgeless_is_both_undirected_and_unidirected() {
        let g = generators::empty(4).to_side_info();
        let l = classify(&g, false, &Limits::default()).unwrap();
        assert!(l.undirected && l.unidirected);
        assert!(is_undirected(&g) && is_unidirected(&g));
        assert!(!is_unidirected(&three_node()));
        assert!(!is_undirected(&three_node()));
    }

    #[test]
    fn fuzzy_assertion_unlocks_gap_only_when_undirected() {
        let lim = Limits::default();
        let k6 = generators::complete_bipartite(3, 3).to_side_info();
        let plain = classify(&k6, false, &lim).unwrap();
        assert!(!plain.planar && plain.line_graph == Some(false));
        assert!(!plain.applies(Guarantee::RamseyGap));
        let asserted = classify(&k6, true, &lim).unwrap();
        assert!(asserted.applies(Guarantee::RamseyGap));
    }

    #[test]
    fn large_instance_skips_line_test() {
        let g = generators::cycle(30).to_side_info();
        let l = classify(&g, false, &Limits::default()).unwrap();
        assert_eq!(l.line_graph, None);
        assert!(l.planar);
    }

    #[test]
    fn planar_graphs_are_four_colorable() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let lim = Limits::default();
        for _ in 0..40 {
            let n = rng.gen_range(4..=16);
            let g = generators::random_connected_planar(n, &mut rng);
            assert!(is_planar_graph(&g));
            assert!(chromatic_number(&g, &lim).unwrap().0 <= 4);
        }
    }
}
