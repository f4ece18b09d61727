//! Serializable reports and their text, JSON and DOT renderings.
//!
//! Reports contain no timings or other run-dependent data, so rendering the
//! same input twice yields identical bytes, and re-rendering a parsed JSON
//! document reproduces it exactly.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{self, AnnihilatorParts, AxiomReport};
use crate::classify::{self, ClassificationReport, Decomposition};
use crate::ideal::IdealLattice;
use crate::props::{CatalogMatrix, Counterexample, Outcome, Tag};
use crate::ring::FiniteRing;

pub const SCHEMA: &str = "pblring/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub schema: String,
    pub report: Report,
}

impl Document {
    pub fn new(report: Report) -> Document {
        Document {
            schema: SCHEMA.to_string(),
            report,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Document, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Report {
    Check(ClassificationReport),
    Ideals(IdealsReport),
    Algebra(AlgebraReport),
    Decompose(DecomposeReport),
    Props(PropsReport),
    Find(FindReport),
    Tables(TablesReport),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRow {
    pub index: usize,
    pub members: Vec<usize>,
    pub generators: Vec<usize>,
    pub ann_star: usize,
    pub ann_minus: usize,
    pub dense_star: bool,
    pub dense_minus: bool,
    pub annihilator_ideal: bool,
    pub prime: bool,
    pub maximal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealsReport {
    pub ring: String,
    pub order: usize,
    pub ideals: Vec<IdealRow>,
    /// Covering pairs `(lower, upper)` of the inclusion order.
    pub covers: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraReport {
    pub ring: String,
    pub size: usize,
    /// Members of each carrier element (an ideal), by index.
    pub carrier: Vec<Vec<usize>>,
    pub pseudo_bl: Vec<AxiomReport>,
    pub bl: Vec<AxiomReport>,
    pub pseudo_mv: Vec<AxiomReport>,
    pub mv_center: Vec<usize>,
    pub double_negation_fixed: Vec<usize>,
    pub parts: AnnihilatorParts,
    pub covers: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub ring: String,
    pub order: usize,
    pub ideals: Vec<Vec<usize>>,
    pub decomposition: Decomposition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropsReport {
    pub corpus: String,
    pub matrix: CatalogMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindReport {
    pub property: String,
    pub tag: Tag,
    pub searched: usize,
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablesReport {
    pub ring: String,
    pub order: usize,
    pub zero: usize,
    pub add: Vec<usize>,
    pub mul: Vec<usize>,
}

fn ring_name(r: &FiniteRing) -> String {
    r.provenance().unwrap_or("tables").to_string()
}

fn carrier(lat: &IdealLattice) -> Vec<Vec<usize>> {
    lat.indices().map(|i| lat.members(i).to_vec()).collect()
}

pub fn ideals_report(lat: &IdealLattice) -> IdealsReport {
    IdealsReport {
        ring: ring_name(lat.ring()),
        order: lat.ring().order(),
        ideals: lat
            .indices()
            .map(|i| {
                let d = lat.is_dense(i);
                IdealRow {
                    index: i,
                    members: lat.members(i).to_vec(),
                    generators: lat.generators(i),
                    ann_star: lat.ann_star(i),
                    ann_minus: lat.ann_minus(i),
                    dense_star: d.star,
                    dense_minus: d.minus,
                    annihilator_ideal: lat.is_annihilator_ideal(i).holds(),
                    prime: lat.is_prime(i),
                    maximal: lat.is_maximal(i),
                }
            })
            .collect(),
        covers: lat.covers(),
    }
}

pub fn algebra_report(lat: &IdealLattice) -> AlgebraReport {
    let alg = algebra::ideal_algebra(lat);
    AlgebraReport {
        ring: ring_name(lat.ring()),
        size: alg.size(),
        carrier: carrier(lat),
        pseudo_bl: algebra::check_pseudo_bl(&alg),
        bl: algebra::check_bl(&alg),
        pseudo_mv: algebra::check_pseudo_mv(&alg),
        mv_center: algebra::mv_center(&alg),
        double_negation_fixed: algebra::double_negation_fixed(&alg),
        parts: algebra::annihilator_parts(lat),
        covers: lat.covers(),
    }
}

pub fn decompose_report(lat: &IdealLattice) -> DecomposeReport {
    DecomposeReport {
        ring: ring_name(lat.ring()),
        order: lat.ring().order(),
        ideals: carrier(lat),
        decomposition: classify::subdirect_decomposition(lat),
    }
}

pub fn tables_report(r: &Arc<FiniteRing>) -> TablesReport {
    TablesReport {
        ring: ring_name(r),
        order: r.order(),
        zero: r.zero(),
        add: r.add_table(),
        mul: r.mul_table(),
    }
}

fn set(xs: &[usize]) -> String {
    let inner: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn list(xs: &[usize]) -> String {
    let inner: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("[{}]", inner.join(","))
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn axiom_lines(out: &mut String, title: &str, reports: &[AxiomReport]) {
    let _ = writeln!(
        out,
        "{title}: {}",
        if algebra::all_hold(reports) {
            "holds"
        } else {
            "fails"
        }
    );
    for r in reports {
        let _ = write!(
            out,
            "  {:<24} {}",
            r.axiom,
            if r.holds { "ok" } else { "FAIL" }
        );
        if let Some(law) = &r.law {
            let _ = write!(out, "  law {law} at {}", list(&r.witness));
        }
        out.push('\n');
    }
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Check(c) => {
                let _ = writeln!(out, "ring: {}", c.ring);
                let _ = writeln!(
                    out,
                    "order {}, {} ideals, commutative: {}, unital: {}",
                    c.order,
                    c.ideals,
                    yn(c.commutative),
                    yn(c.unital)
                );
                for p in &c.predicates {
                    let _ = write!(out, "{:<26} {}", format!("{}:", p.name), p.verdict);
                    if !p.witness.is_empty() {
                        let _ = write!(out, "  witness {}", list(&p.witness));
                    }
                    if let Some(n) = &p.notes {
                        let _ = write!(out, "  ({n})");
                    }
                    out.push('\n');
                }
            }
            Report::Ideals(r) => {
                let _ = writeln!(
                    out,
                    "ring: {}  order {}  {} ideals",
                    r.ring,
                    r.order,
                    r.ideals.len()
                );
                let _ = writeln!(
                    out,
                    "idx  ann*  ann-  dense  annih  prime  max  generators  members"
                );
                for row in &r.ideals {
                    let dense = match (row.dense_star, row.dense_minus) {
                        (true, true) => "both",
                        (true, false) => "*",
                        (false, true) => "-",
                        (false, false) => "no",
                    };
                    let _ = writeln!(
                        out,
                        "{:<4} {:<5} {:<5} {:<6} {:<6} {:<6} {:<4} {:<11} {}",
                        row.index,
                        row.ann_star,
                        row.ann_minus,
                        dense,
                        yn(row.annihilator_ideal),
                        yn(row.prime),
                        yn(row.maximal),
                        list(&row.generators),
                        set(&row.members)
                    );
                }
            }
            Report::Algebra(a) => {
                let _ = writeln!(out, "ring: {}  ideal algebra of size {}", a.ring, a.size);
                for (i, m) in a.carrier.iter().enumerate() {
                    let _ = writeln!(out, "  {i}: {}", set(m));
                }
                axiom_lines(&mut out, "pseudo BL-algebra", &a.pseudo_bl);
                axiom_lines(&mut out, "BL-algebra", &a.bl);
                axiom_lines(&mut out, "pseudo MV-algebra", &a.pseudo_mv);
                let _ = writeln!(out, "MV-center: {}", list(&a.mv_center));
                let _ = writeln!(
                    out,
                    "double-negation fixed: {}",
                    list(&a.double_negation_fixed)
                );
                let _ = writeln!(out, "AN*: {}", list(&a.parts.an_star));
                let _ = writeln!(out, "AN-: {}", list(&a.parts.an_minus));
                let _ = writeln!(out, "D*: {}", list(&a.parts.d_star));
                let _ = writeln!(out, "D-: {}", list(&a.parts.d_minus));
            }
            Report::Decompose(d) => {
                let dec = &d.decomposition;
                let _ = writeln!(out, "ring: {}  order {}", d.ring, d.order);
                let _ = writeln!(out, "pseudo BL-ring: {}", dec.pseudo_bl_input);
                let _ = writeln!(
                    out,
                    "intersection of kernels is zero: {}",
                    dec.intersection_is_zero
                );
                let _ = writeln!(out, "embedding injective: {}", dec.embedding_injective);
                for c in &dec.choices {
                    let _ = write!(out, "  K_{} = ideal {}", c.element, c.kernel);
                    if c.candidates.len() > 1 {
                        let _ = write!(out, "  (maximal excluders {})", list(&c.candidates));
                    }
                    out.push('\n');
                }
                let _ = writeln!(out, "{} factors:", dec.factors.len());
                for f in &dec.factors {
                    let _ = writeln!(
                        out,
                        "  R/{}: order {}, {} ideals, subdirectly irreducible: {}, pseudo BL-ring: {}",
                        set(&f.kernel_members),
                        f.order,
                        f.ideals,
                        f.subdirectly_irreducible,
                        f.pseudo_bl_ring
                    );
                    for (name, c) in f.checks.named() {
                        let _ = write!(
                            out,
                            "    {:<26} {}",
                            name,
                            if c.holds { "ok" } else { "FAIL" }
                        );
                        if !c.holds && !c.witness.is_empty() {
                            let _ = write!(out, "  witness {}", list(&c.witness));
                        }
                        out.push('\n');
                    }
                }
            }
            Report::Props(p) => {
                let m = &p.matrix;
                let _ = writeln!(
                    out,
                    "corpus: {} ({} rings), {} properties",
                    p.corpus,
                    m.rows.len(),
                    m.properties.len()
                );
                let _ = writeln!(
                    out,
                    "{:<22} {:<14} {:>5} {:>5} {:>8} {:>8}",
                    "property", "tag", "pass", "fail", "vacuous", "skipped"
                );
                for (i, info) in m.properties.iter().enumerate() {
                    let t = m.tally(i);
                    let tag = serde_json::to_value(info.tag)
                        .ok()
                        .and_then(|v| v.as_str().map(str::to_string))
                        .unwrap_or_default();
                    let _ = writeln!(
                        out,
                        "{:<22} {:<14} {:>5} {:>5} {:>8} {:>8}",
                        info.id, tag, t.pass, t.fail, t.vacuous, t.skipped
                    );
                }
                let failures = m.failures();
                if !failures.is_empty() {
                    let _ = writeln!(out, "failures:");
                    for f in failures {
                        let _ = writeln!(
                            out,
                            "  {} on {}: {} {}",
                            f.property,
                            f.ring,
                            f.detail,
                            if f.witness.is_empty() {
                                String::new()
                            } else {
                                list(&f.witness)
                            }
                        );
                    }
                }
                for row in &m.rows {
                    for (info, o) in m.properties.iter().zip(&row.outcomes) {
                        if let Outcome::SkippedTooLarge { reason } = o {
                            let _ = writeln!(out, "skipped {} on {}: {reason}", info.id, row.ring);
                        }
                    }
                }
                let theorem = m.theorem_failures().len();
                let _ = writeln!(out, "theorem failures: {theorem}");
            }
            Report::Find(f) => match &f.counterexample {
                None => {
                    let _ = writeln!(
                        out,
                        "{}: no counterexample among {} rings",
                        f.property, f.searched
                    );
                }
                Some(c) => {
                    let _ = writeln!(
                        out,
                        "{}: counterexample {} (order {})",
                        f.property, c.ring, c.order
                    );
                    let _ = writeln!(out, "  {}", c.detail);
                    if !c.witness.is_empty() {
                        let _ = writeln!(out, "  witness {}", list(&c.witness));
                    }
                    for (i, m) in c.ideals.iter().enumerate() {
                        let _ = writeln!(out, "  ideal {i}: {}", set(m));
                    }
                }
            },
            Report::Tables(t) => {
                let _ = writeln!(out, "# {}", t.ring);
                let _ = writeln!(out, "{}", t.order);
                let _ = writeln!(out, "{}", t.zero);
                for table in [&t.add, &t.mul] {
                    for row in table.chunks(t.order.max(1)) {
                        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
                        let _ = writeln!(out, "{}", cells.join(" "));
                    }
                }
            }
        }
        out
    }

    /// Hasse diagram for lattice-shaped reports.
    pub fn to_dot(&self) -> Option<String> {
        match self {
            Report::Ideals(r) => {
                let nodes: Vec<Vec<usize>> =
                    r.ideals.iter().map(|row| row.members.clone()).collect();
                Some(hasse_dot("ideals", &nodes, &r.covers))
            }
            Report::Algebra(a) => Some(hasse_dot("algebra", &a.carrier, &a.covers)),
            _ => None,
        }
    }
}

/// `digraph` with one node per set, labelled by its members, and one edge
/// per covering pair pointing upward.
pub fn hasse_dot(name: &str, nodes: &[Vec<usize>], covers: &[(usize, usize)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {name} {{");
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=box];");
    for (i, m) in nodes.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", set(m));
    }
    for (a, b) in covers {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}
