//! Text, JSON and DOT renderings of reports.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::datamodel::{DataSet, LiteralSet, MinSetReport, Polarity};
use crate::decompose::minsets;
use crate::design::{DesignReport, Guarantee};
use crate::ideals::{build_ideal, render_pseudomonomial, IdealKind};
use crate::oracle::{EdgeSign, WiringDiagram};
use crate::uniqueness::{Certificate, SignedVerdict, TypeClass, TypeOutcome};

/// Everything `minsets` prints: the minimized ideals and the resulting min-sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinSetsDocument {
    pub unsigned_ideal: Vec<LiteralSet>,
    pub extended_ideal: Vec<LiteralSet>,
    pub signed_ideal: Vec<String>,
    #[serde(flatten)]
    pub report: MinSetReport,
}

impl MinSetsDocument {
    pub fn new(data: &DataSet) -> MinSetsDocument {
        let extended = build_ideal(data, IdealKind::Extended);
        MinSetsDocument {
            unsigned_ideal: build_ideal(data, IdealKind::Unsigned).generators().to_vec(),
            signed_ideal: extended.generators().iter().map(render_pseudomonomial).collect(),
            extended_ideal: extended.generators().to_vec(),
            report: minsets(data),
        }
    }
}

fn ideal_text(gens: &[String]) -> String {
    format!("⟨{}⟩", gens.join(", "))
}

pub fn minsets_text(doc: &MinSetsDocument) -> String {
    let products = |g: &[LiteralSet]| g.iter().map(|m| m.product()).collect::<Vec<_>>();
    let mut out = String::new();
    writeln!(out, "unsigned ideal: {}", ideal_text(&products(&doc.unsigned_ideal))).unwrap();
    writeln!(out, "extended ideal: {}", ideal_text(&products(&doc.extended_ideal))).unwrap();
    writeln!(out, "signed ideal:   {}", ideal_text(&doc.signed_ideal)).unwrap();
    writeln!(out, "unsigned min-sets ({}):", doc.report.unsigned_minsets.len()).unwrap();
    for s in &doc.report.unsigned_minsets {
        writeln!(out, "  {s}").unwrap();
    }
    if doc.report.signed_consistent {
        writeln!(out, "signed min-sets ({}):", doc.report.signed_minsets.len()).unwrap();
        for s in &doc.report.signed_minsets {
            writeln!(out, "  {s}").unwrap();
        }
    } else {
        writeln!(out, "signed min-sets: none, no unate function fits the data").unwrap();
    }
    out
}

fn digraph(out: &mut String, name: &str, set: LiteralSet, signed: bool) {
    writeln!(out, "digraph {name} {{").unwrap();
    writeln!(out, "  f [shape=box];").unwrap();
    for lit in set.iter() {
        let attrs = match (signed, lit.polarity) {
            (false, _) => String::new(),
            (true, Polarity::Plain) => " [label=\"+\"]".to_string(),
            (true, Polarity::Barred) => " [label=\"−\", arrowhead=tee]".to_string(),
        };
        writeln!(out, "  x{} -> f{attrs};", lit.var + 1).unwrap();
    }
    writeln!(out, "}}").unwrap();
}

/// One digraph per min-set; signed edges carry `+` or `−`.
pub fn minsets_dot(report: &MinSetReport) -> String {
    let mut out = String::new();
    for (i, s) in report.unsigned_minsets.iter().enumerate() {
        digraph(&mut out, &format!("unsigned_{}", i + 1), *s, false);
    }
    for (i, s) in report.signed_minsets.iter().enumerate() {
        digraph(&mut out, &format!("signed_{}", i + 1), *s, true);
    }
    out
}

/// The wiring diagram of a whole system as a single digraph.
pub fn wiring_dot(wd: &WiringDiagram) -> String {
    let mut out = String::from("digraph wiring {\n");
    for e in &wd.edges {
        let attrs = match e.sign {
            EdgeSign::Activator => " [label=\"+\"]",
            EdgeSign::Inhibitor => " [label=\"−\", arrowhead=tee]",
            EdgeSign::Unsigned => "",
        };
        writeln!(out, "  x{} -> x{}{attrs};", e.from + 1, e.to + 1).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn certificate_text(c: &Certificate) -> String {
    let mut out = String::new();
    writeln!(out, "inputs: {} points in {{0..{}}}^{}", c.points, c.spec.q - 1, c.spec.n).unwrap();
    match &c.connectivity_witness {
        None => writeln!(out, "cylindrically connected: yes").unwrap(),
        Some(w) => writeln!(
            out,
            "cylindrically connected: no ({} and {} are separated in {})",
            w.from, w.to, w.cylinder
        )
        .unwrap(),
    }
    match &c.diagonal {
        None => writeln!(out, "diagonal: none").unwrap(),
        Some(d) => writeln!(
            out,
            "diagonal: length {} at {}{}",
            d.length,
            d.witness,
            if d.corner { " (corner)" } else { "" }
        )
        .unwrap(),
    }
    let class = match &c.type_class {
        TypeOutcome::Classified { class: TypeClass::Type1 } => "1".to_string(),
        TypeOutcome::Classified { class: TypeClass::Type2 { monomial, low, high } } => {
            format!("2 ({} from {low} < {high})", monomial.product())
        }
        TypeOutcome::Classified { class: TypeClass::Type3a } => "3a".to_string(),
        TypeOutcome::Classified { class: TypeClass::Type3b { .. } } => "3b".to_string(),
        TypeOutcome::Skipped { reason } => format!("skipped ({reason})"),
    };
    writeln!(out, "type: {class}").unwrap();
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    writeln!(out, "unique unsigned min-set for every output: {}", yes_no(c.unsigned_unique_for_all_outputs)).unwrap();
    let signed = match c.signed_at_most_one_for_all_outputs {
        SignedVerdict::Boolean(b) => yes_no(b).to_string(),
        SignedVerdict::Unknown { exhaustive: Some(b) } => format!("{} (by exhaustive check)", yes_no(b)),
        SignedVerdict::Unknown { exhaustive: None } => "open".to_string(),
    };
    writeln!(out, "at most one signed min-set for every output: {signed}").unwrap();
    out
}

pub fn design_text(r: &DesignReport) -> String {
    let mut out = String::new();
    if r.already_unique {
        out.push_str("already cylindrically connected; no experiments needed\n");
        return out;
    }
    if r.suggestions.is_empty() {
        out.push_str("no extension within budget\n");
    }
    for s in &r.suggestions {
        let pts: Vec<String> = s.added_points.iter().map(|p| p.to_string()).collect();
        writeln!(out, "add {}", pts.join(" ")).unwrap();
    }
    if r.guarantee == Guarantee::UnsignedOnly && !r.suggestions.is_empty() {
        out.push_str("guarantee: unsigned-unique; signed uniqueness open\n");
    }
    out
}
