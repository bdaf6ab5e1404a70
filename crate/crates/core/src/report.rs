//! The structured document produced for one instance.

use serde::Serialize;

use crate::approx::{
    directed_planar_bounds, gap_certificate, gap_parameters, planar_bounds, unidirected_lower_bound, ClassConstants,
    GapCertificate, GapParameters, PlanarBounds, UnidirectedBound,
};
use crate::bounds::{b_fold_chromatic, BoundsReport, ReferenceCurves};
use crate::classify::{line_graph_obstruction, planarity, ClassLabel, Guarantee, LineObstruction, Planarity};
use crate::codec::{CodeVerdict, IndexCode};
use crate::error::{Error, Result};
use crate::graph::{Mode, SideInfoGraph};
use crate::limits::Limits;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceEcho {
    pub n: usize,
    pub mode: Mode,
    pub arcs: usize,
}

impl InstanceEcho {
    pub fn of(g: &SideInfoGraph) -> Self {
        InstanceEcho {
            n: g.n(),
            mode: g.mode(),
            arcs: g.arc_count(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapReport {
    pub parameters: GapParameters,
    pub certificate: Option<GapCertificate>,
    pub notes: Vec<String>,
}

/// Bounds from every guarantee that applies to an instance.
#[derive(Debug, Clone, PartialEq, Serialize, Default)]
pub struct GuaranteeReport {
    pub ramsey_gap: Option<GapReport>,
    pub planar_factor_four: Option<PlanarBounds>,
    pub directed_planar_factor_four: Option<PlanarBounds>,
    pub unidirected_log_bound: Option<UnidirectedBound>,
    pub reference: Option<ReferenceCurves>,
    pub reference_note: &'static str,
}

impl GuaranteeReport {
    pub fn is_empty(&self) -> bool {
        self.ramsey_gap.is_none()
            && self.planar_factor_four.is_none()
            && self.directed_planar_factor_four.is_none()
            && self.unidirected_log_bound.is_none()
    }
}

pub const REFERENCE_NOTE: &str = "asymptotic reference, not a guarantee at this n";

/// Evaluates each guarantee listed in `label` for `g`.
pub fn guarantee_report(
    g: &SideInfoGraph,
    label: &ClassLabel,
    constants: ClassConstants,
    limits: &Limits,
) -> Result<GuaranteeReport> {
    let mut out = GuaranteeReport {
        reference: Some(ReferenceCurves::at(g.n())),
        reference_note: REFERENCE_NOTE,
        ..GuaranteeReport::default()
    };
    if label.applies(Guarantee::RamseyGap) {
        let parameters = gap_parameters(g.n(), constants)?;
        let mut notes = Vec::new();
        let certificate = match gap_certificate(g, constants, limits) {
            Ok(c) => Some(c),
            Err(Error::LimitExceeded { limit, .. }) => {
                notes.push(format!("certificate skipped: n exceeds exact limit {limit}"));
                None
            }
            Err(e) => return Err(e),
        };
        out.ramsey_gap = Some(GapReport {
            parameters,
            certificate,
            notes,
        });
    }
    if label.applies(Guarantee::PlanarFactorFour) {
        out.planar_factor_four = Some(planar_bounds(g, limits)?);
    }
    if label.applies(Guarantee::DirectedPlanarFactorFour) {
        out.directed_planar_factor_four = Some(directed_planar_bounds(g, limits)?);
    }
    if label.applies(Guarantee::UnidirectedLogBound) {
        out.unidirected_log_bound = Some(unidirected_lower_bound(g)?);
    }
    Ok(out)
}

/// Rate of the optimal b-fold clique cover, chi^(b) / b.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FoldRate {
    pub b: usize,
    pub cliques: usize,
    #[serde(serialize_with = "rational::serialize")]
    pub rate: Rational,
}

/// Fold rates for b = 1..=b_max, stopping at the first b beyond the limits.
pub fn fold_rates(g: &SideInfoGraph, b_max: usize, limits: &Limits) -> Result<Vec<FoldRate>> {
    let target = g.bidirectional_core().complement();
    let mut out = Vec::new();
    for b in 1..=b_max {
        let coloring = match b_fold_chromatic(&target, b, limits) {
            Ok(c) => c,
            Err(Error::LimitExceeded { .. }) if b > 1 => break,
            Err(e) => return Err(e),
        };
        out.push(FoldRate {
            b,
            cliques: coloring.colors_used,
            rate: rational::ratio(coloring.colors_used as i64, b as i64),
        });
    }
    Ok(out)
}

/// Checkable witnesses behind the planarity and line-graph answers for Un(G).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassWitnesses {
    pub planarity: Planarity,
    pub complement_planarity: Planarity,
    pub line_obstruction: Option<LineObstruction>,
}

pub fn class_witnesses(g: &SideInfoGraph, limits: &Limits) -> Result<ClassWitnesses> {
    let un = g.underlying_undirected();
    let line_obstruction = match line_graph_obstruction(&un, limits) {
        Ok(o) => o,
        Err(Error::LimitExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(ClassWitnesses {
        planarity: planarity(&un),
        complement_planarity: planarity(&g.complement().underlying_undirected()),
        line_obstruction,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CodeReport {
    pub code: IndexCode,
    pub verdict: Option<CodeVerdict>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub seed: u64,
    pub exact_limit: usize,
    pub instance: InstanceEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<ClassLabel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_witnesses: Option<ClassWitnesses>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub fold_rates: Vec<FoldRate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub guarantees: Option<GuaranteeReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub code: Option<CodeReport>,
}

impl Report {
    pub fn new(g: &SideInfoGraph, seed: u64, limits: &Limits) -> Self {
        Report {
            tool: "ixcode",
            version: env!("CARGO_PKG_VERSION"),
            seed,
            exact_limit: limits.exact_vertices,
            instance: InstanceEcho::of(g),
            class: None,
            class_witnesses: None,
            bounds: None,
            fold_rates: Vec::new(),
            guarantees: None,
            code: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
