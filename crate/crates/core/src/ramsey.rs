//! Ramsey numbers of graph classes, the Erdős–Szekeres bound with its
//! constructive pivot extraction, and exhaustive small-order checks.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bounds::{max_clique_mask, max_independent_mask};
use crate::classify::{is_planar_graph, line::line_obstruction_unchecked};
use crate::error::{Error, Result};
use crate::graph::{bit, bits, full_mask, UndirectedGraph, VertexSet};
use crate::limits::Limits;
use crate::par::Exec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    Planar,
    Line,
    #[serde(rename = "fuzzy_circular_interval")]
    Fuzzy,
    /// All graphs; values are Erdős–Szekeres upper bounds.
    #[serde(rename = "general_upper_bound")]
    General,
}

impl GraphClass {
    pub const ALL: [GraphClass; 4] = [GraphClass::Planar, GraphClass::Line, GraphClass::Fuzzy, GraphClass::General];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Planar => "planar",
            GraphClass::Line => "line",
            GraphClass::Fuzzy => "fuzzy_circular_interval",
            GraphClass::General => "general_upper_bound",
        }
    }

    /// Membership test used by exhaustive enumeration.
    pub fn contains(self, g: &UndirectedGraph) -> Result<bool> {
        match self {
            GraphClass::Planar => Ok(is_planar_graph(g)),
            GraphClass::Line => Ok(line_obstruction_unchecked(g).is_none()),
            GraphClass::General => Ok(true),
            GraphClass::Fuzzy => Err(Error::InvalidArgument(
                "fuzzy circular interval membership cannot be recognized, only asserted".into(),
            )),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "planar" => Ok(GraphClass::Planar),
            "line" | "line_graph" => Ok(GraphClass::Line),
            "fuzzy" | "fuzzy_circular_interval" => Ok(GraphClass::Fuzzy),
            "general" | "general_upper" | "general_upper_bound" | "all" => Ok(GraphClass::General),
            other => Err(Error::InvalidArgument(format!("unknown graph class '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueKind {
    Exact,
    UpperBound,
}

/// Which closed form produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RamseyRule {
    /// R(1, j) = R(i, 1) = 1.
    Singleton,
    /// R(2, j) = j for classes holding all edgeless graphs.
    EdgelessBase,
    /// R(i, 2) = i for classes holding all complete graphs (and planar i <= 4).
    CompleteBase,
    /// Planar, i = 3: 3j - 3.
    PlanarTriangle,
    /// Planar, i >= 4: 4j - 3.
    PlanarLarge,
    /// Line graphs, i = 3: floor((5j - 3) / 2).
    LineTriangle,
    /// Line graphs, i >= 4, with j = tk + r, k = floor(i / 2).
    LineLarge,
    /// Fuzzy circular interval, i, j >= 3: (i - 1) j.
    FuzzyBilinear,
    /// C(i + j - 2, i - 1).
    ErdosSzekeres,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamseyValue {
    pub class: GraphClass,
    pub i: u64,
    pub j: u64,
    pub value: u64,
    pub kind: ValueKind,
    pub rule: RamseyRule,
    pub notes: Vec<String>,
}

fn overflow(what: &str) -> Error {
    Error::Overflow(what.to_string())
}

/// C(i + j - 2, i - 1), exact.
pub fn erdos_szekeres_bound(i: u64, j: u64) -> Result<u64> {
    if i == 0 || j == 0 {
        return Err(Error::InvalidArgument("Ramsey arguments must be positive".into()));
    }
    let (top, small) = (i + j - 2, (i - 1).min(j - 1));
    let mut acc: u128 = 1;
    for step in 1..=small {
        acc = acc
            .checked_mul(u128::from(top - small + step))
            .ok_or_else(|| overflow("binomial coefficient"))?
            / u128::from(step);
        if acc > u128::from(u64::MAX) {
            return Err(overflow("binomial coefficient"));
        }
    }
    Ok(acc as u64)
}

/// Ramsey number of a class (or the general upper bound).
pub fn class_ramsey(class: GraphClass, i: u64, j: u64) -> Result<RamseyValue> {
    if i == 0 || j == 0 {
        return Err(Error::InvalidArgument(format!("Ramsey arguments must be positive, got ({i}, {j})")));
    }
    let mut notes = Vec::new();
    let exact = |value, rule, notes| RamseyValue {
        class,
        i,
        j,
        value,
        kind: ValueKind::Exact,
        rule,
        notes,
    };
    if class == GraphClass::General {
        let value = erdos_szekeres_bound(i, j)?;
        let mut v = exact(value, RamseyRule::ErdosSzekeres, vec!["upper bound on R(i, j), not the exact value".into()]);
        v.kind = ValueKind::UpperBound;
        return Ok(v);
    }
    if i == 1 || j == 1 {
        if class == GraphClass::Planar && i == 3 {
            notes.push("3j - 3 gives 0 at j = 1; base case R(i, 1) = 1 applies".into());
        }
        return Ok(exact(1, RamseyRule::Singleton, notes));
    }
    if i == 2 {
        return Ok(exact(j, RamseyRule::EdgelessBase, notes));
    }
    let mul = |a: u64, b: u64| a.checked_mul(b).ok_or_else(|| overflow("Ramsey value"));
    let (value, rule) = match class {
        GraphClass::Planar => match (i, j) {
            (3, _) => (mul(3, j)? - 3, RamseyRule::PlanarTriangle),
            (4, 2) => (4, RamseyRule::CompleteBase),
            _ => (mul(4, j)? - 3, RamseyRule::PlanarLarge),
        },
        GraphClass::Line | GraphClass::Fuzzy if j == 2 => (i, RamseyRule::CompleteBase),
        GraphClass::Line if i == 3 => ((mul(5, j)? - 3) / 2, RamseyRule::LineTriangle),
        GraphClass::Line => {
            let k = i / 2;
            let t = (j - 1) / k;
            let r = j - t * k;
            let base = mul(i, j - 1)? + 2;
            let value = if i.is_multiple_of(2) { base - (t + r) } else { base - r };
            notes.push(format!("j = {t}*{k} + {r} with k = floor(i/2)"));
            (value, RamseyRule::LineLarge)
        }
        GraphClass::Fuzzy => (mul(i - 1, j)?, RamseyRule::FuzzyBilinear),
        GraphClass::General => unreachable!("handled above"),
    };
    Ok(exact(value, rule, notes))
}

/// max{ j : bound(k, j) <= m }, scanning j upward; capped at j = m since
/// every class value with k >= 2 is at least j.
pub fn t_k_of_m<F>(k: u64, m: u64, bound: F) -> u64
where
    F: Fn(u64, u64) -> Result<u64>,
{
    let mut best = 0;
    for j in 1..=m {
        match bound(k, j) {
            Ok(v) if v <= m => best = j,
            _ => break,
        }
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    Clique,
    IndependentSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamseyCertificate {
    pub kind: CertificateKind,
    pub vertices: VertexSet,
}

impl RamseyCertificate {
    pub fn verify(&self, g: &UndirectedGraph, i: u64, j: u64) -> bool {
        let mask = self.vertices.mask();
        let size = self.vertices.len() as u64;
        match self.kind {
            CertificateKind::Clique => size == i && g.is_clique(mask),
            CertificateKind::IndependentSet => size == j && g.is_independent(mask),
        }
    }
}

fn pivot(adj: &[u64], mask: u64, i: u64, j: u64) -> Result<(CertificateKind, u64)> {
    let v = bits(mask).next().ok_or_else(|| Error::Invariant("pivot ran out of vertices".into()))?;
    if i == 1 {
        return Ok((CertificateKind::Clique, bit(v)));
    }
    if j == 1 {
        return Ok((CertificateKind::IndependentSet, bit(v)));
    }
    let nbrs = adj[v] & mask;
    let rest = mask & !nbrs & !bit(v);
    if u64::from(nbrs.count_ones()) >= erdos_szekeres_bound(i - 1, j)? {
        let (kind, set) = pivot(adj, nbrs, i - 1, j)?;
        Ok(match kind {
            CertificateKind::Clique => (kind, set | bit(v)),
            CertificateKind::IndependentSet => (kind, set),
        })
    } else {
        let (kind, set) = pivot(adj, rest, i, j - 1)?;
        Ok(match kind {
            CertificateKind::IndependentSet => (kind, set | bit(v)),
            CertificateKind::Clique => (kind, set),
        })
    }
}

/// A clique of size `i` or an independent set of size `j`, found by
/// pivoting on the lowest-index vertex.
pub fn ramsey_extract(g: &UndirectedGraph, i: u64, j: u64) -> Result<RamseyCertificate> {
    let need = erdos_szekeres_bound(i, j)?;
    if (g.n() as u64) < need {
        return Err(Error::Precondition(format!(
            "extraction for ({i}, {j}) needs at least {need} vertices, graph has {}",
            g.n()
        )));
    }
    let (kind, mask) = pivot(g.adjacency(), full_mask(g.n()), i, j)?;
    let cert = RamseyCertificate {
        kind,
        vertices: VertexSet::from_mask(mask),
    };
    if !cert.verify(g, i, j) {
        return Err(Error::Invariant(format!("pivot extraction produced an invalid certificate {}", cert.vertices)));
    }
    Ok(cert)
}

/// Graph with neither an `i`-clique nor a `j`-independent set.
fn is_ramsey_counterexample(g: &UndirectedGraph, i: u64, j: u64) -> bool {
    let full = full_mask(g.n());
    u64::from(max_clique_mask(g.adjacency(), full).count_ones()) < i
        && u64::from(max_independent_mask(g).count_ones()) < j
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamseyVerdict {
    pub class: GraphClass,
    pub i: u64,
    pub j: u64,
    pub order: usize,
    pub holds: bool,
    /// Edges (1-based) of a class member with neither structure.
    pub counterexample: Option<Vec<(usize, usize)>>,
}

/// Exhaustively checks every labeled class member on `order` vertices for an
/// `i`-clique or a `j`-independent set.
pub fn verify_class_ramsey(
    class: GraphClass,
    i: u64,
    j: u64,
    order: usize,
    limits: &Limits,
    exec: Exec,
) -> Result<RamseyVerdict> {
    if i == 0 || j == 0 || order == 0 {
        return Err(Error::InvalidArgument("Ramsey arguments and order must be positive".into()));
    }
    if order > limits.enumeration_order {
        return Err(Error::LimitExceeded {
            what: "enumeration order",
            size: order,
            limit: limits.enumeration_order,
        });
    }
    class.contains(&UndirectedGraph::from_pair_mask(1, 0))?;
    let total = 1u64 << UndirectedGraph::pair_count(order);
    let found = exec.find_first(0..total, |m| {
        let g = UndirectedGraph::from_pair_mask(order, m);
        is_ramsey_counterexample(&g, i, j) && class.contains(&g).unwrap_or(false)
    });
    Ok(RamseyVerdict {
        class,
        i,
        j,
        order,
        holds: found.is_none(),
        counterexample: found.map(|m| {
            UndirectedGraph::from_pair_mask(order, m)
                .edges()
                .into_iter()
                .map(|(u, v)| (u + 1, v + 1))
                .collect()
        }),
    })
}

/// Confirms a formula value m0 from both sides: it holds at m0 and a class
/// counterexample exists at m0 - 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamseyConfirmation {
    pub value: RamseyValue,
    pub at_value: RamseyVerdict,
    pub below_value: Option<RamseyVerdict>,
}

impl RamseyConfirmation {
    pub fn confirmed(&self) -> bool {
        self.at_value.holds && self.below_value.as_ref().is_none_or(|v| !v.holds)
    }
}

pub fn confirm_class_ramsey(
    class: GraphClass,
    i: u64,
    j: u64,
    limits: &Limits,
    exec: Exec,
) -> Result<RamseyConfirmation> {
    let value = class_ramsey(class, i, j)?;
    let m0 = usize::try_from(value.value).map_err(|_| overflow("order"))?;
    let at_value = verify_class_ramsey(class, i, j, m0, limits, exec)?;
    let below_value = if m0 >= 2 {
        Some(verify_class_ramsey(class, i, j, m0 - 1, limits, exec)?)
    } else {
        None
    };
    Ok(RamseyConfirmation {
        value,
        at_value,
        below_value,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BilinearVerdict {
    pub class: GraphClass,
    pub i_max: u64,
    pub j_max: u64,
    pub holds: bool,
    /// First (i, j, value) with value > ij.
    pub first_violation: Option<(u64, u64, u64)>,
}

/// Checks R(i, j) <= ij over the grid [1, i_max] x [1, j_max].
pub fn bilinear_bound_check(class: GraphClass, i_max: u64, j_max: u64) -> Result<BilinearVerdict> {
    if class == GraphClass::General {
        return Err(Error::InvalidArgument("the bilinear bound is claimed for planar, line and fuzzy classes only".into()));
    }
    let mut first_violation = None;
    'grid: for i in 1..=i_max {
        for j in 1..=j_max {
            let v = class_ramsey(class, i, j)?.value;
            if v > i * j {
                first_violation = Some((i, j, v));
                break 'grid;
            }
        }
    }
    Ok(BilinearVerdict {
        class,
        i_max,
        j_max,
        holds: first_violation.is_none(),
        first_violation,
    })
}

/// Grid points where a class value decreases as i or j grows.
pub fn monotonicity_violations(class: GraphClass, max: u64) -> Result<Vec<(u64, u64)>> {
    let mut out = Vec::new();
    for i in 1..=max {
        for j in 1..=max {
            let v = class_ramsey(class, i, j)?.value;
            let down_i = i < max && class_ramsey(class, i + 1, j)?.value < v;
            let down_j = j < max && class_ramsey(class, i, j + 1)?.value < v;
            if down_i || down_j {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}
