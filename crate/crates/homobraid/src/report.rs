//! Report construction: every command builds an ordered key-value report,
//! rendered either as the versioned line-oriented schema or as human text.
//! Both renderings come from the same entries, so they cannot drift.

use crate::braid::{render_word, BraidWord, GeneratorUsage, Sign};
use crate::chord::{ChordConfig, WitnessOutcome};
use crate::primeness::{prime_factorization, primeness_verdict, PrimenessVerdict};
use crate::surface::{seifert_surface_of_word, CombinatorialSurface};
use crate::tree::{
    primeness_certificate, CertStep, Essentiality, EssentialProvenance, OpenBookVertex,
    PrimenessCertificate, TreeError, TreeOfOpenBooks, Veering, VertexKind,
};

pub const SCHEMA_HEADER: &str = "homobraid-report 1";

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<(String, String)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

impl Report {
    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn render(&self, format: Format, color: bool) -> String {
        match format {
            Format::Structured => self.render_structured(),
            Format::Text => self.render_text(color),
        }
    }

    /// One `key value` line per entry under a version header.
    pub fn render_structured(&self) -> String {
        let mut out = String::from(SCHEMA_HEADER);
        out.push('\n');
        for (k, v) in &self.entries {
            out.push_str(k);
            out.push(' ');
            out.push_str(if v.is_empty() { "-" } else { v });
            out.push('\n');
        }
        out
    }

    pub fn render_text(&self, color: bool) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            let label = k.replace('.', " ");
            if color {
                out.push_str(&format!("\x1b[1m{label}:\x1b[0m {v}\n"));
            } else {
                out.push_str(&format!("{label}: {v}\n"));
            }
        }
        out
    }
}

fn sign_char(s: Sign) -> char {
    match s {
        Sign::Positive => '+',
        Sign::Negative => '-',
    }
}

fn veering_name(v: Veering) -> &'static str {
    match v {
        Veering::StrictlyRight => "right",
        Veering::StrictlyLeft => "left",
        Veering::Unknown => "unknown",
    }
}

fn essential_name(e: &Essentiality) -> &'static str {
    match e {
        Essentiality::Essential(EssentialProvenance::SeesawAtLeastFour) => "seesaw>=4",
        Essentiality::Essential(EssentialProvenance::AnnulusCocore) => "annulus-cocore",
        Essentiality::Essential(EssentialProvenance::AssertedByInput) => "asserted",
        Essentiality::NotEssential => "no",
    }
}

fn vertex_summary(v: &OpenBookVertex) -> String {
    let veering = veering_name(v.veering);
    match &v.kind {
        VertexKind::TorusBlock { k } => format!("torus k={k} veering={veering}"),
        VertexKind::HopfBand { sign } => {
            format!("hopf sign={} veering={veering}", sign_char(*sign))
        }
        VertexKind::Composite { members, symbols } => {
            let members: Vec<String> = members.iter().map(usize::to_string).collect();
            let symbols: String = symbols.iter().map(|&s| sign_char(s)).collect();
            format!(
                "composite members={} symbols={symbols} veering={veering}",
                members.join(",")
            )
        }
    }
}

pub fn push_tree(r: &mut Report, prefix: &str, t: &TreeOfOpenBooks) {
    r.push(format!("{prefix}vertices"), t.vertices().len());
    for (i, v) in t.vertices().iter().enumerate() {
        r.push(format!("{prefix}vertex.{i}"), vertex_summary(v));
    }
    for (j, e) in t.edges().iter().enumerate() {
        r.push(
            format!("{prefix}edge.{j}"),
            format!(
                "{}-{} region={}/{} sides={} rotation={} essential={}",
                e.a,
                e.b,
                e.region.face_a,
                e.region.face_b,
                e.region.sides,
                e.region.rotation,
                essential_name(&e.region.essential)
            ),
        );
    }
}

pub fn push_surface(r: &mut Report, prefix: &str, s: &CombinatorialSurface) {
    r.push(format!("{prefix}faces"), s.face_count());
    let inv = s.invariants();
    r.push(format!("{prefix}components"), inv.len());
    for (i, c) in inv.iter().enumerate() {
        r.push(
            format!("{prefix}component.{i}"),
            format!(
                "euler_char={} boundary={} genus={}",
                c.euler_char, c.boundary_components, c.genus
            ),
        );
    }
}

fn step_summary(s: &CertStep) -> String {
    match s {
        CertStep::BlockVeering { block, veering } => {
            format!("blockVeering {block} {}", veering_name(*veering))
        }
        CertStep::CrossVeeringSum { a, b } => format!("crossVeeringSum {a} {b}"),
        CertStep::BipartiteConclusion => "bipartiteConclusion".to_string(),
    }
}

pub fn push_certificate(r: &mut Report, cert: &PrimenessCertificate) {
    r.push("certificate", "ok");
    for (i, v) in cert.block_tree.vertices().iter().enumerate() {
        r.push(format!("certificate.block.{i}"), vertex_summary(v));
    }
    let growing: Vec<String> = cert.growing.0.iter().map(usize::to_string).collect();
    r.push("certificate.growing", growing.join(" "));
    let word: Vec<String> = cert
        .monodromy_word
        .iter()
        .map(|s| format!("{}{}", s.vertex, sign_char(s.sign)))
        .collect();
    r.push("certificate.monodromy", word.join(" "));
    for (i, s) in cert.steps.iter().enumerate() {
        r.push(format!("certificate.step.{i}"), step_summary(s));
    }
}

pub fn push_certificate_outcome(r: &mut Report, t: &TreeOfOpenBooks) {
    match primeness_certificate(t) {
        Ok(cert) => push_certificate(r, &cert),
        Err(e) => r.push("certificate.error", e),
    }
}

fn usage_summary(w: &BraidWord, i: usize, usage: GeneratorUsage) -> String {
    match usage {
        GeneratorUsage::Absent => "absent".to_string(),
        GeneratorUsage::Mixed => "mixed".to_string(),
        GeneratorUsage::OnlyPositive | GeneratorUsage::OnlyNegative => {
            format!("{:+}", w.signed_count(i))
        }
    }
}

/// Full analysis pipeline over one word; returns the report and the exit
/// code (0 prime, 10 composite, 11 inconclusive).
pub fn analysis_report(w: &BraidWord) -> (Report, u8) {
    let mut r = Report::default();
    r.push("word", render_word(w));
    r.push("strands", w.strands());
    let profile = w.homogeneity_profile();
    for (i, usage) in profile.iter() {
        r.push(format!("generator.{i}"), usage_summary(w, i, usage));
    }
    r.push("homogeneous", profile.is_homogeneous());
    r.push("split", w.is_split());
    for (c, comp) in w.split_components().iter().enumerate() {
        let p = format!("component.{c}.");
        r.push(format!("{p}word"), render_word(comp));
        r.push(format!("{p}strands"), comp.strands());
        let d = comp.destabilize_fully();
        r.push(format!("{p}destabilized"), render_word(&d.reduced));
        r.push(format!("{p}m_plus"), d.m_plus);
        r.push(format!("{p}m_minus"), d.m_minus);
        let seesaw: Vec<String> = d
            .reduced
            .seesaw_profile()
            .iter()
            .map(|(_, g)| g.to_string())
            .collect();
        r.push(format!("{p}seesaw"), seesaw.join(","));
        let strands: Vec<String> = d
            .reduced
            .decomposition_strands()
            .iter()
            .map(usize::to_string)
            .collect();
        r.push(format!("{p}decomposition_strands"), strands.join(","));
    }
    let stats = w.closure_stats();
    r.push("closure.components", stats.components);
    r.push("closure.euler_char", stats.euler_char);
    match stats.first_betti {
        Some(b) => r.push("closure.first_betti", b),
        None => r.push("closure.first_betti", "-"),
    }
    r.push("closure.genus", stats.genus.genus);
    r.push("closure.genus_minimal", stats.genus.minimal);
    r.push("closure.genus_split_sum", stats.genus.split_sum);

    let verdict = primeness_verdict(w);
    let code = match &verdict {
        PrimenessVerdict::Prime => {
            r.push("verdict", "prime");
            0
        }
        PrimenessVerdict::Composite { witness_strand, .. } => {
            r.push("verdict", "composite");
            r.push("witness_strand", witness_strand);
            10
        }
        PrimenessVerdict::InconclusiveNotHomogeneous => {
            r.push("verdict", "inconclusive");
            11
        }
    };
    if let Ok(f) = prime_factorization(w) {
        for (j, s) in f.summands.iter().enumerate() {
            r.push(format!("summand.{j}"), render_word(s));
        }
        r.push("unknot_components", f.unknot_components);
        for (j, s) in f.steps.iter().enumerate() {
            r.push(
                format!("cut.{j}"),
                format!("{} at strand {}", render_word(&s.word), s.strand),
            );
        }
    }
    if !w.is_split() {
        let reduced = w.destabilize_fully().reduced;
        match crate::tree::braid_tree(&reduced) {
            Ok(t) => {
                push_tree(&mut r, "tree.", &t);
                push_certificate_outcome(&mut r, &t);
            }
            Err(e) => r.push("tree.error", e),
        }
    }
    (r, code)
}

pub fn word_tree_report(w: &BraidWord, certify: bool) -> Result<Report, TreeError> {
    let reduced = w.destabilize_fully().reduced;
    let t = crate::tree::braid_tree(&reduced)?;
    let mut r = Report::default();
    r.push("word", render_word(w));
    if reduced != *w {
        r.push("destabilized", render_word(&reduced));
    }
    push_tree(&mut r, "", &t);
    push_page(&mut r, &t)?;
    if certify {
        push_certificate_outcome(&mut r, &t);
    }
    Ok(r)
}

fn push_page(r: &mut Report, t: &TreeOfOpenBooks) -> Result<(), TreeError> {
    let page = crate::tree::page_of_tree(t)?;
    let inv = page.invariants_connected();
    r.push(
        "page",
        format!(
            "euler_char={} boundary={} genus={}",
            inv.euler_char, inv.boundary_components, inv.genus
        ),
    );
    Ok(())
}

pub fn arborescent_report(text: &str, certify: bool) -> Result<Report, TreeError> {
    let g = crate::tree::parse_plane_tree(text)?;
    let t = crate::tree::arborescent_tree(&g)?;
    let mut r = Report::default();
    r.push("plane_tree", text.trim());
    push_tree(&mut r, "", &t);
    push_page(&mut r, &t)?;
    if certify {
        push_certificate_outcome(&mut r, &t);
    }
    Ok(r)
}

pub fn chords_report(cfg: &ChordConfig) -> Report {
    let mut r = Report::default();
    r.push("points", cfg.points().join(" "));
    r.push(
        "mode",
        if cfg.polygon_mode() { "polygon" } else { "disk" },
    );
    match crate::chord::find_witnesses(cfg) {
        WitnessOutcome::Equal => r.push("outcome", "equal"),
        WitnessOutcome::Pair(w) => {
            r.push("outcome", "witnesses");
            for (key, wit) in [("right", &w.right), ("left", &w.left)] {
                r.push(
                    format!("witness.{key}"),
                    format!(
                        "a={}-{} b={}-{} at={}",
                        wit.a.0, wit.a.1, wit.b.0, wit.b.1, wit.at
                    ),
                );
            }
            r.push("different_sides", w.different_sides);
        }
    }
    r
}

pub fn surface_report(w: &BraidWord) -> Report {
    let mut r = Report::default();
    r.push("word", render_word(w));
    r.push("strands", w.strands());
    push_surface(&mut r, "surface.", &seifert_surface_of_word(w));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn analysis_exit_codes() {
        assert_eq!(analysis_report(&fixtures::beta_prime()).1, 0);
        assert_eq!(analysis_report(&fixtures::beta_comp()).1, 10);
        let w = crate::braid::parse_word("1 1^-1", None).unwrap();
        assert_eq!(analysis_report(&w).1, 11);
    }

    #[test]
    fn analysis_entries() {
        let (r, _) = analysis_report(&fixtures::beta_comp());
        assert_eq!(r.get("verdict"), Some("composite"));
        assert_eq!(r.get("witness_strand"), Some("2"));
        assert_eq!(r.get("component.0.seesaw"), Some("2,2,2"));
        assert_eq!(r.get("generator.3"), Some("+5"));
        assert_eq!(r.get("closure.genus"), Some("5"));
        assert_eq!(r.get("certificate.error").is_some(), true);

        let (r, _) = analysis_report(&fixtures::beta_prime());
        assert_eq!(r.get("certificate"), Some("ok"));
        assert_eq!(
            r.get("certificate.block.0"),
            Some("torus k=-3 veering=left")
        );
    }

    #[test]
    fn renderings_share_data() {
        let (r, _) = analysis_report(&fixtures::knot_6_3());
        let structured = r.render_structured();
        assert!(structured.starts_with(SCHEMA_HEADER));
        let text = r.render_text(false);
        assert_eq!(structured.lines().count() - 1, text.lines().count());
        for (k, v) in r.entries() {
            assert!(structured.contains(&format!("{k} {v}")));
        }
        let colored = r.render_text(true);
        assert!(colored.contains("\x1b[1m"));
    }

    #[test]
    fn tree_reports() {
        let r = word_tree_report(&fixtures::beta_prime(), true).unwrap();
        assert_eq!(r.get("vertices"), Some("4"));
        assert_eq!(r.get("certificate"), Some("ok"));
        assert_eq!(r.get("page"), Some("euler_char=-9 boundary=1 genus=5"));

        let r = arborescent_report("(+(+))", true).unwrap();
        assert_eq!(r.get("vertices"), Some("2"));
        assert_eq!(r.get("certificate"), Some("ok"));
        assert_eq!(r.get("page"), Some("euler_char=-1 boundary=1 genus=1"));
    }

    #[test]
    fn chord_reports() {
        let cfg = ChordConfig::parse("points p1 p2 p3 p4\na p1 p2\na p3 p4\nb p1 p2\nb p3 p4")
            .unwrap();
        let r = chords_report(&cfg);
        assert_eq!(r.get("outcome"), Some("equal"));
    }
}
