use std::fmt::Write;

use ixcode::approx::{BoundPair, GapCase, GapCertificate, GapParameters, PlanarBounds, PlanarRoute, UnidirectedBound};
use ixcode::bounds::{BoundsReport, ReferenceCurves};
use ixcode::classify::{ClassLabel, Guarantee, KuratowskiKind, Planarity};
use ixcode::codec::{CodeVerdict, IndexCode};
use ixcode::ramsey::{GraphClass, RamseyConfirmation, RamseyRule, RamseyValue, RamseyVerdict, ValueKind};
use ixcode::report::{ClassWitnesses, FoldRate, GapReport, GuaranteeReport, Report, REFERENCE_NOTE};
use ixcode::rational;
use ixcode::VertexSet;

fn sets(parts: &[VertexSet]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Real number with at most nine decimals and no trailing zeros.
pub fn real(x: f64) -> String {
    let s = format!("{x:.9}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

pub fn header(r: &Report) -> String {
    format!(
        "ixcode {}, seed {}\ninstance: n = {}, mode = {}, arcs = {}\n",
        r.version, r.seed, r.instance.n, r.instance.mode, r.instance.arcs
    )
}

pub fn bounds(b: &BoundsReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "MAIS = {}, acyclic set in topological order {}", b.mais, b.mais_witness);
    let _ = writeln!(
        s,
        "alpha(Un G) = {} {}, alpha(bidirectional core) = {} {}",
        b.alpha_underlying, b.alpha_underlying_witness, b.alpha_of_bidirectional_core, b.alpha_core_witness
    );
    let _ = writeln!(s, "largest clique = {} {}", b.max_clique, b.max_clique_witness);
    let _ = writeln!(s, "clique cover = {}, partition {}", b.clique_cover, sets(&b.clique_partition));
    let _ = writeln!(s, "fractional clique cover = {}", b.fractional_clique_cover);
    for w in &b.fractional_cover.entries {
        let _ = writeln!(s, "  weight {} on clique {}", w.weight, w.set);
    }
    let _ = writeln!(s, "gap ratio (clique cover / MAIS) = {}", b.gap_ratio);
    let mais = rational::int(b.mais as i64);
    match b.broadcast_rate {
        Some(beta) => {
            let _ = writeln!(s, "β = {beta} (tight)");
        }
        None if mais == b.fractional_clique_cover => {
            let _ = writeln!(s, "β = {} (tight by fractional cover)", b.mais);
        }
        None => {
            let _ = writeln!(s, "{} ≤ β ≤ {}", b.mais, b.fractional_clique_cover);
        }
    }
    s
}

pub fn fold_rates(rates: &[FoldRate], b_max: usize) -> String {
    let mut s = String::new();
    if rates.is_empty() {
        return s;
    }
    let _ = writeln!(s, "b-fold clique cover rates:");
    for r in rates {
        let _ = writeln!(s, "  b = {}: {} cliques, rate {}", r.b, r.cliques, r.rate);
    }
    if rates.len() < b_max {
        let _ = writeln!(s, "  b > {} skipped: blowup exceeds the limits", rates.len());
    }
    s
}

fn planarity_line(p: &Planarity) -> String {
    match p {
        Planarity::Planar(e) => format!("yes (embedding with {} faces)", e.face_count()),
        Planarity::NonPlanar(k) => {
            let kind = match k.kind {
                KuratowskiKind::K5 => "K5",
                KuratowskiKind::K33 => "K3,3",
            };
            let branch = VertexSet::from_mask(k.branch_vertices.iter().fold(0u64, |m, &v| m | 1 << v));
            format!("no ({kind} subdivision, branch vertices {branch}, {} edges)", k.edges.len())
        }
    }
}

fn guarantee_name(g: Guarantee) -> &'static str {
    match g {
        Guarantee::RamseyGap => "ramsey gap",
        Guarantee::PlanarFactorFour => "planar factor four",
        Guarantee::DirectedPlanarFactorFour => "directed planar factor four",
        Guarantee::UnidirectedLogBound => "unidirected log bound",
    }
}

pub fn classification(label: &ClassLabel, w: &ClassWitnesses) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "Un(G) planar: {}", planarity_line(&w.planarity));
    let _ = writeln!(s, "Un(complement) planar: {}", planarity_line(&w.complement_planarity));
    let line = match (label.line_graph, &w.line_obstruction) {
        (Some(true), _) => "yes".to_string(),
        (Some(false), Some(o)) => {
            let set = VertexSet::from_mask(o.vertices.iter().fold(0u64, |m, &v| m | 1 << v));
            format!("no (forbidden induced subgraph {} of 9 on {set})", o.pattern + 1)
        }
        (Some(false), None) => "no".to_string(),
        (None, _) => "unknown (above the exact limit)".to_string(),
    };
    let _ = writeln!(s, "Un(G) line graph: {line}");
    let _ = writeln!(s, "undirected: {}", yes_no(label.undirected));
    let _ = writeln!(s, "unidirected: {}", yes_no(label.unidirected));
    let _ = writeln!(s, "fuzzy circular interval: {}", if label.fuzzy_asserted { "asserted" } else { "not asserted" });
    s += &guarantee_list(label);
    s
}

fn guarantee_list(label: &ClassLabel) -> String {
    let mut s = String::new();
    if label.guarantees.is_empty() {
        s += "guarantees: none\n";
    } else {
        let names: Vec<_> = label.guarantees.iter().map(|&g| guarantee_name(g)).collect();
        let _ = writeln!(s, "guarantees: {}", names.join(", "));
    }
    for n in &label.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}

fn rule_text(rule: RamseyRule) -> &'static str {
    match rule {
        RamseyRule::Singleton => "R(1, j) = R(i, 1) = 1",
        RamseyRule::EdgelessBase => "R(2, j) = j",
        RamseyRule::CompleteBase => "R(i, 2) = i",
        RamseyRule::PlanarTriangle => "planar, i = 3: 3j - 3",
        RamseyRule::PlanarLarge => "planar, i >= 4: 4j - 3",
        RamseyRule::LineTriangle => "line graphs, i = 3: floor((5j - 3) / 2)",
        RamseyRule::LineLarge => "line graphs, i >= 4: j = tk + r with k = floor(i / 2)",
        RamseyRule::FuzzyBilinear => "fuzzy circular interval: (i - 1) j",
        RamseyRule::ErdosSzekeres => "Erdős–Szekeres: C(i + j - 2, i - 1)",
    }
}

pub fn ramsey_value(v: &RamseyValue) -> String {
    let mut s = String::new();
    let rel = match v.kind {
        ValueKind::Exact => "=",
        ValueKind::UpperBound => "≤",
    };
    let _ = write!(s, "R({}, {}) {rel} {} for class {}", v.i, v.j, v.value, v.class.name());
    if v.kind == ValueKind::UpperBound {
        s += " (upper bound)";
    }
    let _ = writeln!(s, "\nrule: {}", rule_text(v.rule));
    for n in &v.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}

pub fn ramsey_verdict(v: &RamseyVerdict) -> String {
    if v.holds {
        format!(
            "order {}: holds, every {} graph has a {}-clique or a {}-independent set\n",
            v.order,
            v.class.name(),
            v.i,
            v.j
        )
    } else {
        let edges = v
            .counterexample
            .as_ref()
            .map(|es| es.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(" "))
            .unwrap_or_default();
        format!("order {}: fails, counterexample edges [{edges}]\n", v.order)
    }
}

pub fn ramsey_confirmation(c: &RamseyConfirmation) -> String {
    let mut s = ramsey_verdict(&c.at_value);
    if let Some(b) = &c.below_value {
        s += &ramsey_verdict(b);
    }
    let _ = writeln!(s, "confirmed: {}", yes_no(c.confirmed()));
    s
}

pub fn gap_parameters(p: &GapParameters) -> String {
    let c = p.constants;
    format!(
        "gap parameters for n = {} (a = {}, b = {}, c = {})\nk = {}\ngap = {}\n",
        p.n,
        real(c.a),
        real(c.b),
        real(c.c),
        real(p.k),
        real(p.gap)
    )
}

pub fn synthetic_class_note(class: Option<GraphClass>) -> String {
    match class {
        Some(GraphClass::Planar) => "factor 4 via planar bounds if an instance is supplied\n".into(),
        Some(GraphClass::Line) | Some(GraphClass::Fuzzy) => "two-case gap certificate if an instance is supplied\n".into(),
        _ => String::new(),
    }
}

pub fn reference(r: &ReferenceCurves) -> String {
    let mut s = format!("reference curves ({REFERENCE_NOTE}):\n");
    let fmt = |x: Option<f64>| x.map(|v| format!("{v:.3}")).unwrap_or_else(|| "undefined".into());
    let _ = writeln!(s, "  n / log2 n = {}", fmt(r.n_over_log_n));
    let _ = writeln!(s, "  n log2 log2 n / log2 n = {}", fmt(r.n_loglog_over_log_n));
    s
}

fn certificate(c: &GapCertificate) -> String {
    let mut s = String::new();
    match c.case {
        GapCase::CliqueCoverSmall => {
            let _ = writeln!(
                s,
                "  case: clique cover {} < 2n/k = {}, partition {}",
                c.claimed_bound,
                real(c.threshold),
                sets(&c.partition)
            );
        }
        GapCase::IndependentSetLarge => {
            let _ = writeln!(
                s,
                "  case: independent set {} >= {}, set {}",
                c.claimed_bound,
                real(c.threshold),
                c.independent_set
            );
        }
    }
    let _ = writeln!(
        s,
        "  {} ≤ β ≤ {}, achieved ratio {}",
        c.lower,
        c.upper,
        real(c.achieved_ratio)
    );
    for n in &c.notes {
        let _ = writeln!(s, "  note: {n}");
    }
    s
}

fn gap_report(g: &GapReport) -> String {
    let mut s = "ramsey gap:\n".to_string();
    match &g.certificate {
        Some(c) => s += &certificate(c),
        None => s += "  no certificate\n",
    }
    for n in &g.notes {
        let _ = writeln!(s, "  note: {n}");
    }
    s
}

fn route_name(r: PlanarRoute) -> &'static str {
    match r {
        PlanarRoute::GraphPlanar => "G planar",
        PlanarRoute::ComplementPlanar => "complement planar",
        PlanarRoute::UnderlyingPlanar => "Un(G) planar",
        PlanarRoute::UnderlyingComplementPlanar => "Un(complement) planar",
    }
}

fn bound_pair(p: &BoundPair) -> String {
    let mut s = format!(
        "  {} ≤ β ≤ {} via {}, ratio {}\n",
        p.lower,
        p.upper,
        route_name(p.route),
        p.ratio()
    );
    if let Some(c) = &p.coloring {
        let _ = writeln!(s, "  coloring {}", sets(c));
    }
    s
}

fn planar(title: &str, b: &PlanarBounds) -> String {
    let mut s = format!("{title}:\n");
    s += &bound_pair(&b.best);
    for alt in &b.alternatives {
        s += "  alternative:\n";
        s += &bound_pair(alt);
    }
    for n in &b.notes {
        let _ = writeln!(s, "  note: {n}");
    }
    s
}

pub fn unidirected(b: &UnidirectedBound) -> String {
    format!(
        "acyclic set of size {} in topological order {}\nfloor(log2 n) = {}\nlower bound {}: β ≥ {}\n",
        b.witness.vertices.len(),
        b.witness.vertices,
        b.floor_log2_n,
        b.bound,
        b.bound
    )
}

pub fn guarantees(label: &ClassLabel, g: &GuaranteeReport) -> String {
    let mut s = guarantee_list(label);
    if let Some(r) = &g.ramsey_gap {
        s += &gap_report(r);
    }
    if let Some(p) = &g.planar_factor_four {
        s += &planar("planar factor four", p);
    }
    if let Some(p) = &g.directed_planar_factor_four {
        s += &planar("directed planar factor four", p);
    }
    if let Some(u) = &g.unidirected_log_bound {
        s += "unidirected log bound:\n";
        s += &unidirected(u);
    }
    s
}

pub fn code_summary(c: &IndexCode) -> String {
    format!("rate = {} (t = {}, r = {})\n", c.rate(), c.t(), c.r())
}

pub fn verdict(v: &CodeVerdict) -> String {
    let mut s = String::new();
    let how = if v.exhaustive {
        format!("exhaustive over {} message vectors", v.cases)
    } else {
        format!("{} random message vectors, seed {}", v.cases, v.seed)
    };
    if v.passed {
        let _ = writeln!(s, "verification: pass ({how})");
    } else {
        let _ = writeln!(s, "verification: fail ({how})");
        if !v.non_clique_slots.is_empty() {
            let slots: Vec<_> = v.non_clique_slots.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "  non-clique slots: {}", slots.join(", "));
        }
        if let Some(f) = &v.failure {
            let _ = write!(s, "  first failing case {}", f.case);
            if let Some(fault) = &f.fault {
                let _ = write!(
                    s,
                    ": receiver {} cannot cancel message {} in slot {}",
                    fault.receiver, fault.message, fault.slot
                );
            }
            if let Some(r) = f.wrong_receiver {
                let _ = write!(s, ": receiver {r} decoded a wrong value");
            }
            s.push('\n');
        }
    }
    for n in &v.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}
