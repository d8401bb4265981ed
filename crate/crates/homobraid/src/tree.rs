//! Trees of open books: vertices carry symbolic open books with veering
//! labels and combinatorial pages, edges carry polygonal summing regions.
//! Covers construction from braid words and from plane trees of Hopf bands,
//! growings, block contraction, monodromy words, and primeness certificates.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::braid::{BraidWord, Sign};
use crate::surface::{CombinatorialSurface, Side, SurfaceError};
use crate::trace::Dependence;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Veering {
    StrictlyRight,
    StrictlyLeft,
    Unknown,
}

impl Veering {
    pub fn of_sign(sign: Sign) -> Veering {
        match sign {
            Sign::Positive => Veering::StrictlyRight,
            Sign::Negative => Veering::StrictlyLeft,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexKind {
    /// Fiber of a torus link on two strands with |k| half-twisted bands.
    TorusBlock { k: i64 },
    HopfBand { sign: Sign },
    /// Contraction of a same-veering subtree; carries the merged twist
    /// expansion of its members in growing order.
    Composite { members: Vec<usize>, symbols: Vec<Sign> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenBookVertex {
    pub kind: VertexKind,
    pub veering: Veering,
    pub page: CombinatorialSurface,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EssentialProvenance {
    SeesawAtLeastFour,
    AnnulusCocore,
    AssertedByInput,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Essentiality {
    Essential(EssentialProvenance),
    NotEssential,
}

impl Essentiality {
    pub fn is_essential(&self) -> bool {
        matches!(self, Essentiality::Essential(_))
    }
}

/// Polygon along which two vertex pages are glued. Side `k` of `face_a` is
/// identified with side `k + rotation` of `face_b`; at every aligned index
/// exactly one of the two sides lies on its page's boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummingRegion {
    pub sides: usize,
    pub face_a: String,
    pub face_b: String,
    pub rotation: usize,
    pub essential: Essentiality,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub region: SummingRegion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeOfOpenBooks {
    vertices: Vec<OpenBookVertex>,
    edges: Vec<Edge>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("word is not homogeneous")]
    NotHomogeneous,
    #[error("word is split")]
    Split,
    #[error("word needs at least 2 strands")]
    TooFewStrands,
    #[error("generator {index} occurs once; word admits a destabilization")]
    Destabilizable { index: usize },
    #[error("vertex {vertex} has unknown veering")]
    UnknownVeering { vertex: usize },
    #[error("edge {a}-{b} (region {location}) is not essential")]
    NonEssentialEdge { a: usize, b: usize, location: String },
    #[error("vertex order is not a growing of the tree")]
    InvalidGrowing,
    #[error("face {face} already carries a summing region")]
    RegionOverlap { face: String },
    #[error("plumbing region not asserted essential")]
    NonEssentialRegion,
    #[error("malformed plane tree: {0}")]
    MalformedPlaneTree(String),
    #[error("malformed tree: {0}")]
    Structure(String),
    #[error("page gluing failed: {0}")]
    Surface(#[from] SurfaceError),
}

impl TreeOfOpenBooks {
    pub fn new(vertices: Vec<OpenBookVertex>, edges: Vec<Edge>) -> Result<TreeOfOpenBooks, TreeError> {
        if vertices.is_empty() {
            return Err(TreeError::Structure("no vertices".into()));
        }
        if edges.len() + 1 != vertices.len() {
            return Err(TreeError::Structure(format!(
                "{} vertices need {} edges, got {}",
                vertices.len(),
                vertices.len() - 1,
                edges.len()
            )));
        }
        let mut parent: Vec<usize> = (0..vertices.len()).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for e in &edges {
            if e.a >= vertices.len() || e.b >= vertices.len() {
                return Err(TreeError::Structure("edge endpoint out of range".into()));
            }
            let (ra, rb) = (find(&mut parent, e.a), find(&mut parent, e.b));
            if ra == rb {
                return Err(TreeError::Structure("edges form a cycle".into()));
            }
            parent[ra] = rb;
        }
        // regions at each vertex are pairwise disjoint: distinct faces
        for v in 0..vertices.len() {
            let mut used = BTreeSet::new();
            for e in &edges {
                for (end, face) in [(e.a, &e.region.face_a), (e.b, &e.region.face_b)] {
                    if end != v {
                        continue;
                    }
                    let sides = vertices[v]
                        .page
                        .face(face)
                        .ok_or_else(|| TreeError::Structure(format!("vertex {v} has no face {face}")))?;
                    if sides.len() != e.region.sides {
                        return Err(TreeError::Structure(format!(
                            "region {face} has {} sides, edge expects {}",
                            sides.len(),
                            e.region.sides
                        )));
                    }
                    if !used.insert(face.clone()) {
                        return Err(TreeError::RegionOverlap { face: face.clone() });
                    }
                }
            }
        }
        Ok(TreeOfOpenBooks { vertices, edges })
    }

    pub fn vertices(&self) -> &[OpenBookVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        adj
    }

    fn assemble(&self, subset: &BTreeSet<usize>) -> Result<CombinatorialSurface, TreeError> {
        let mut page = CombinatorialSurface::default();
        for &v in subset {
            page = page.merge(self.vertices[v].page.prefixed(&format!("v{v}:")))?;
        }
        for e in &self.edges {
            if subset.contains(&e.a) && subset.contains(&e.b) {
                page.glue_faces(
                    &format!("v{}:{}", e.a, e.region.face_a),
                    &format!("v{}:{}", e.b, e.region.face_b),
                    e.region.rotation,
                )?;
            }
        }
        Ok(page)
    }
}

/// Glue all vertex pages of `t` along its summing regions. Vertex `v`'s face
/// and edge names appear prefixed with `v{v}:`.
pub fn page_of_tree(t: &TreeOfOpenBooks) -> Result<CombinatorialSurface, TreeError> {
    t.assemble(&(0..t.vertices().len()).collect())
}

/// Maximal same-generator groups of the two-generator restriction of `w` to
/// indices j-1 and j, with global letter positions.
fn blocks_at(w: &BraidWord, j: usize) -> Vec<(usize, Vec<usize>)> {
    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    for (p, l) in w.letters().iter().enumerate() {
        if l.index + 1 != j && l.index != j {
            continue;
        }
        match groups.last_mut() {
            Some((g, ps)) if *g == l.index => ps.push(p),
            _ => groups.push((l.index, vec![p])),
        }
    }
    groups
}

/// For `g` groups, the inscribed region polygon has `s = g` sides when `g`
/// is even and `s = g - 1` when odd; side `t < s-1` spans group `t+1`, the
/// closing side spans the trailing groups together with group 0.
fn side_spans(g: usize) -> Vec<Vec<usize>> {
    let s = if g % 2 == 0 { g } else { g - 1 };
    (0..s)
        .map(|t| {
            if t < s - 1 {
                vec![t + 1]
            } else {
                (s..g).chain([0]).collect()
            }
        })
        .collect()
}

/// Faces of a disk subdivided by a region polygon: the region face plus one
/// lobe face per side whose band group belongs to this page (generator
/// `my_gen`); sides spanning the other generator's groups stay boundary.
fn region_disk_faces(
    j: usize,
    my_gen: usize,
    groups: &[(usize, Vec<usize>)],
    attach: &dyn Fn(usize) -> String,
) -> Vec<(String, Vec<Side>)> {
    let rg = format!("R{j}");
    let mut faces = Vec::new();
    let mut region = Vec::new();
    for (t, span) in side_spans(groups.len()).into_iter().enumerate() {
        let gen = groups[span[0]].0;
        debug_assert!(span.iter().all(|&s| groups[s].0 == gen));
        if gen == my_gen {
            let chord = format!("{rg}.c{t}");
            region.push(Side::fwd(&chord));
            let mut lobe = vec![Side::rev(&chord)];
            let mut free = 0usize;
            lobe.push(Side::fwd(format!("{rg}.L{t}.f{free}")));
            for &s in &span {
                for &p in &groups[s].1 {
                    lobe.push(Side::fwd(attach(p)));
                    free += 1;
                    lobe.push(Side::fwd(format!("{rg}.L{t}.f{free}")));
                }
            }
            faces.push((format!("{rg}.L{t}"), lobe));
        } else {
            region.push(Side::fwd(format!("{rg}.r{t}")));
        }
    }
    faces.push((rg, region));
    faces
}

fn plain_disk_face(name: &str, attaches: &[String]) -> (String, Vec<Side>) {
    let mut sides = Vec::new();
    for (q, a) in attaches.iter().enumerate() {
        sides.push(Side::fwd(format!("{name}.f{q}")));
        sides.push(Side::fwd(a.clone()));
    }
    if sides.is_empty() {
        sides.push(Side::fwd(format!("{name}.f0")));
    }
    (name.to_string(), sides)
}

/// Page of the block of generator `i` of `w`: disks `D{i}` and `D{i+1}` plus
/// one band per occurrence of generator i. A disk shared with a neighboring
/// block is subdivided by that edge's region polygon.
fn torus_block_page(w: &BraidWord, i: usize) -> CombinatorialSurface {
    let n = w.strands();
    let positions: Vec<usize> = w
        .letters()
        .iter()
        .enumerate()
        .filter(|(_, l)| l.index == i)
        .map(|(p, _)| p)
        .collect();
    let mut faces = Vec::new();

    let lower = |p: usize| format!("b{p}");
    let upper = |p: usize| format!("t{p}");
    if i >= 2 {
        faces.extend(region_disk_faces(i, i, &blocks_at(w, i), &lower));
    } else {
        let attaches: Vec<String> = positions.iter().map(|&p| lower(p)).collect();
        faces.push(plain_disk_face(&format!("D{i}"), &attaches));
    }
    if i + 2 <= n {
        faces.extend(region_disk_faces(i + 1, i, &blocks_at(w, i + 1), &upper));
    } else {
        let attaches: Vec<String> = positions.iter().map(|&p| upper(p)).collect();
        faces.push(plain_disk_face(&format!("D{}", i + 1), &attaches));
    }
    for &p in &positions {
        faces.push((
            format!("B{p}"),
            vec![
                Side::rev(lower(p)),
                Side::fwd(format!("B{p}.s0")),
                Side::rev(upper(p)),
                Side::fwd(format!("B{p}.s1")),
            ],
        ));
    }
    CombinatorialSurface::build(faces).expect("block page labels are disjoint")
}

/// The line-shaped tree of torus-block open books of a homogeneous,
/// non-split, fully destabilized word on at least 2 strands.
pub fn braid_tree(w: &BraidWord) -> Result<TreeOfOpenBooks, TreeError> {
    if !w.is_homogeneous() {
        return Err(TreeError::NotHomogeneous);
    }
    if w.strands() < 2 {
        return Err(TreeError::TooFewStrands);
    }
    if w.is_split() {
        return Err(TreeError::Split);
    }
    for i in 1..w.strands() {
        if w.occurrences(i) < 2 {
            return Err(TreeError::Destabilizable { index: i });
        }
    }
    let n = w.strands();
    let vertices: Vec<OpenBookVertex> = (1..n)
        .map(|i| {
            let k = w.signed_count(i);
            OpenBookVertex {
                kind: VertexKind::TorusBlock { k },
                veering: Veering::of_sign(if k > 0 { Sign::Positive } else { Sign::Negative }),
                page: torus_block_page(w, i),
            }
        })
        .collect();
    let seesaw = w.seesaw_profile();
    let edges: Vec<Edge> = (2..n)
        .map(|i| {
            let g = seesaw.get(i).expect("interior strand");
            let sides = if g % 2 == 0 { g } else { g - 1 };
            Edge {
                a: i - 2,
                b: i - 1,
                region: SummingRegion {
                    sides,
                    face_a: format!("R{i}"),
                    face_b: format!("R{i}"),
                    rotation: 0,
                    essential: if g >= 4 {
                        Essentiality::Essential(EssentialProvenance::SeesawAtLeastFour)
                    } else {
                        Essentiality::NotEssential
                    },
                },
            }
        })
        .collect();
    TreeOfOpenBooks::new(vertices, edges)
}

/// Annulus page with `regions` essential cocore 4-gons in circular order.
/// Returns the page and the region face names.
fn annulus_page(regions: usize) -> (CombinatorialSurface, Vec<String>) {
    if regions == 0 {
        let page = CombinatorialSurface::build(vec![(
            "A".into(),
            vec![
                Side::fwd("A.b"),
                Side::fwd("A.x"),
                Side::fwd("A.t"),
                Side::rev("A.x"),
            ],
        )])
        .expect("annulus");
        return (page, Vec::new());
    }
    let d = regions;
    let mut faces = Vec::new();
    let mut names = Vec::new();
    for j in 0..d {
        let prev = (j + d - 1) % d;
        faces.push((
            format!("Q{j}"),
            vec![
                Side::fwd(format!("Q{j}.b")),
                Side::fwd(format!("x{j}")),
                Side::fwd(format!("Q{j}.t")),
                Side::rev(format!("z{prev}")),
            ],
        ));
        faces.push((
            format!("C{j}"),
            vec![
                Side::fwd(format!("C{j}.b")),
                Side::fwd(format!("z{j}")),
                Side::fwd(format!("C{j}.t")),
                Side::rev(format!("x{j}")),
            ],
        ));
        names.push(format!("Q{j}"));
    }
    (
        CombinatorialSurface::build(faces).expect("annulus chain"),
        names,
    )
}

fn hopf_vertex(sign: Sign, regions: usize) -> (OpenBookVertex, Vec<String>) {
    let (page, names) = annulus_page(regions);
    (
        OpenBookVertex {
            kind: VertexKind::HopfBand { sign },
            veering: Veering::of_sign(sign),
            page,
        },
        names,
    )
}

/// A plane tree with a sign per vertex; child order is the circular order of
/// edges (after the parent edge, for non-root vertices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneTree {
    pub sign: Sign,
    pub children: Vec<PlaneTree>,
}

/// Parse the nested form `(+...)` / `(-...)`, children listed in circular
/// order, e.g. `(+(+)(-))`.
pub fn parse_plane_tree(text: &str) -> Result<PlaneTree, TreeError> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    fn node(chars: &[char], at: &mut usize) -> Result<PlaneTree, TreeError> {
        let err = |msg: &str, at: usize| TreeError::MalformedPlaneTree(format!("{msg} at {at}"));
        if chars.get(*at) != Some(&'(') {
            return Err(err("expected '('", *at));
        }
        *at += 1;
        let sign = match chars.get(*at) {
            Some('+') => Sign::Positive,
            Some('-') => Sign::Negative,
            _ => return Err(err("expected '+' or '-'", *at)),
        };
        *at += 1;
        let mut children = Vec::new();
        while chars.get(*at) == Some(&'(') {
            children.push(node(chars, at)?);
        }
        if chars.get(*at) != Some(&')') {
            return Err(err("expected ')'", *at));
        }
        *at += 1;
        Ok(PlaneTree { sign, children })
    }
    let mut at = 0;
    let tree = node(&chars, &mut at)?;
    if at != chars.len() {
        return Err(TreeError::MalformedPlaneTree(format!(
            "trailing input at {at}"
        )));
    }
    Ok(tree)
}

/// Tree of Hopf-band open books of a plane signed tree: one annulus per
/// vertex, one cocore 4-gon region per edge, placed in the circular order
/// given by the plane embedding.
pub fn arborescent_tree(g: &PlaneTree) -> Result<TreeOfOpenBooks, TreeError> {
    struct Flat {
        sign: Sign,
        degree: usize,
        parent: Option<usize>,
    }
    fn flatten(t: &PlaneTree, parent: Option<usize>, out: &mut Vec<Flat>) {
        let id = out.len();
        out.push(Flat {
            sign: t.sign,
            degree: t.children.len() + usize::from(parent.is_some()),
            parent,
        });
        for c in &t.children {
            flatten(c, Some(id), out);
        }
    }
    let mut flat = Vec::new();
    flatten(g, None, &mut flat);

    let mut vertices = Vec::new();
    let mut region_names: Vec<Vec<String>> = Vec::new();
    let mut next_slot: Vec<usize> = Vec::new();
    for f in &flat {
        let (v, names) = hopf_vertex(f.sign, f.degree);
        vertices.push(v);
        // slot 0 is the parent edge for non-root vertices
        next_slot.push(usize::from(f.parent.is_some()));
        region_names.push(names);
    }
    let mut edges = Vec::new();
    for (child, f) in flat.iter().enumerate() {
        let Some(parent) = f.parent else { continue };
        let slot = next_slot[parent];
        next_slot[parent] += 1;
        edges.push(Edge {
            a: parent,
            b: child,
            region: SummingRegion {
                sides: 4,
                face_a: region_names[parent][slot].clone(),
                face_b: region_names[child][0].clone(),
                rotation: 1,
                essential: Essentiality::Essential(EssentialProvenance::AnnulusCocore),
            },
        });
    }
    TreeOfOpenBooks::new(vertices, edges)
}

/// Tree of Hopf-band open books over an arbitrary edge list; the circular
/// order of regions at each vertex follows the edge list.
pub fn hopf_tree(signs: &[Sign], edge_list: &[(usize, usize)]) -> Result<TreeOfOpenBooks, TreeError> {
    let mut degree = vec![0usize; signs.len()];
    for &(a, b) in edge_list {
        for v in [a, b] {
            *degree
                .get_mut(v)
                .ok_or_else(|| TreeError::Structure(format!("no vertex {v}")))? += 1;
        }
    }
    let mut vertices = Vec::new();
    let mut region_names = Vec::new();
    let mut next_slot = vec![0usize; signs.len()];
    for (&sign, &d) in signs.iter().zip(&degree) {
        let (v, names) = hopf_vertex(sign, d);
        vertices.push(v);
        region_names.push(names);
    }
    let mut edges = Vec::new();
    for &(a, b) in edge_list {
        let mut slot = |v: usize| {
            let s = next_slot[v];
            next_slot[v] += 1;
            region_names[v][s].clone()
        };
        let (face_a, face_b) = (slot(a), slot(b));
        edges.push(Edge {
            a,
            b,
            region: SummingRegion {
                sides: 4,
                face_a,
                face_b,
                rotation: 1,
                essential: Essentiality::Essential(EssentialProvenance::AnnulusCocore),
            },
        });
    }
    TreeOfOpenBooks::new(vertices, edges)
}

/// Where to plumb: a boundary side of a face of the target vertex's page.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbSite {
    pub face: String,
    pub side: usize,
    /// Caller's assertion that the 4-gon around the plumbing arc is
    /// essential.
    pub essential: bool,
    /// Caller's assertion that every fixed essential arc of the target open
    /// book crosses the plumbing region.
    pub fixed_arcs_covered: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbOutcome {
    pub tree: TreeOfOpenBooks,
    /// Conclusion available when the caller asserted that all fixed
    /// essential arcs meet the region.
    pub no_fixed_essential_arcs: bool,
}

/// Plumb a positive then a negative Hopf band in a chain at a boundary side
/// of vertex `v`'s page.
pub fn figure_eight_plumb(
    t: &TreeOfOpenBooks,
    v: usize,
    site: &PlumbSite,
) -> Result<PlumbOutcome, TreeError> {
    if !site.essential {
        return Err(TreeError::NonEssentialRegion);
    }
    if v >= t.vertices.len() {
        return Err(TreeError::Structure(format!("no vertex {v}")));
    }
    for e in &t.edges {
        if (e.a == v && e.region.face_a == site.face) || (e.b == v && e.region.face_b == site.face)
        {
            return Err(TreeError::RegionOverlap {
                face: site.face.clone(),
            });
        }
    }
    let page = &t.vertices[v].page;
    let sides = page
        .face(&site.face)
        .ok_or_else(|| TreeError::Structure(format!("vertex {v} has no face {}", site.face)))?;
    let target = sides
        .get(site.side)
        .ok_or_else(|| TreeError::Structure(format!("face {} has no side {}", site.face, site.side)))?
        .clone();
    let occurrences = page
        .faces()
        .flat_map(|(_, s)| s.iter())
        .filter(|s| s.label == target.label)
        .count();
    if occurrences != 1 {
        return Err(TreeError::RegionOverlap {
            face: site.face.clone(),
        });
    }

    // subdivide the boundary side and cut the region 4-gon plus a bigon out
    // of the face
    let ns = format!("f8.{}", target.label);
    let mut faces: Vec<(String, Vec<Side>)> = page
        .faces()
        .map(|(n, s)| (n.to_string(), s.to_vec()))
        .collect();
    for (name, sides) in faces.iter_mut() {
        if *name != site.face {
            continue;
        }
        sides.splice(
            site.side..site.side + 1,
            [
                Side::fwd(format!("{ns}.sL")),
                Side::rev(format!("{ns}.c2")),
                Side::fwd(format!("{ns}.sR")),
            ],
        );
    }
    faces.push((
        format!("{ns}.R"),
        vec![
            Side::fwd(format!("{ns}.e1")),
            Side::fwd(format!("{ns}.c1")),
            Side::fwd(format!("{ns}.e2")),
            Side::fwd(format!("{ns}.c2")),
        ],
    ));
    faces.push((
        format!("{ns}.B"),
        vec![Side::fwd(format!("{ns}.sM")), Side::rev(format!("{ns}.c1"))],
    ));

    let mut vertices = t.vertices.clone();
    vertices[v].page = CombinatorialSurface::build(faces)?;
    let (p, p_names) = hopf_vertex(Sign::Positive, 2);
    let (nv, n_names) = hopf_vertex(Sign::Negative, 1);
    let p_id = vertices.len();
    vertices.push(p);
    let n_id = vertices.len();
    vertices.push(nv);
    let mut edges = t.edges.clone();
    edges.push(Edge {
        a: v,
        b: p_id,
        region: SummingRegion {
            sides: 4,
            face_a: format!("{ns}.R"),
            face_b: p_names[0].clone(),
            rotation: 1,
            essential: Essentiality::Essential(EssentialProvenance::AssertedByInput),
        },
    });
    edges.push(Edge {
        a: p_id,
        b: n_id,
        region: SummingRegion {
            sides: 4,
            face_a: p_names[1].clone(),
            face_b: n_names[0].clone(),
            rotation: 1,
            essential: Essentiality::Essential(EssentialProvenance::AnnulusCocore),
        },
    });
    Ok(PlumbOutcome {
        tree: TreeOfOpenBooks::new(vertices, edges)?,
        no_fixed_essential_arcs: site.fixed_arcs_covered,
    })
}

/// A vertex order whose every prefix spans a subtree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Growing(pub Vec<usize>);

pub fn is_growing(t: &TreeOfOpenBooks, gr: &Growing) -> bool {
    let n = t.vertices().len();
    if gr.0.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    let adj = t.adjacency();
    for (pos, &v) in gr.0.iter().enumerate() {
        if v >= n || seen[v] {
            return false;
        }
        if pos > 0 && !adj[v].iter().any(|&u| seen[u]) {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// All growings of the tree.
pub fn growings(t: &TreeOfOpenBooks) -> Vec<Growing> {
    let n = t.vertices().len();
    let adj = t.adjacency();
    let mut out = Vec::new();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    fn rec(
        n: usize,
        adj: &[Vec<usize>],
        order: &mut Vec<usize>,
        seen: &mut [bool],
        out: &mut Vec<Growing>,
    ) {
        if order.len() == n {
            out.push(Growing(order.clone()));
            return;
        }
        for v in 0..n {
            if seen[v] {
                continue;
            }
            if !order.is_empty() && !adj[v].iter().any(|&u| seen[u]) {
                continue;
            }
            seen[v] = true;
            order.push(v);
            rec(n, adj, order, seen, out);
            order.pop();
            seen[v] = false;
        }
    }
    rec(n, &adj, &mut order, &mut seen, &mut out);
    out
}

/// The monodromy composition word of a growing: vertex symbols listed
/// leftmost-composed first, i.e. reverse growing order, with the rightmost
/// entry applied first.
pub fn growing_word(t: &TreeOfOpenBooks, gr: &Growing) -> Result<Vec<usize>, TreeError> {
    if !is_growing(t, gr) {
        return Err(TreeError::InvalidGrowing);
    }
    Ok(gr.0.iter().rev().copied().collect())
}

/// Dependence relation for monodromy words of `t`: vertices sharing an edge
/// do not commute.
pub fn vertex_dependence(t: &TreeOfOpenBooks) -> Dependence {
    Dependence::new(
        t.vertices().len(),
        t.edges().iter().map(|e| (e.a, e.b)),
    )
}

/// One signed Dehn-twist symbol of a monodromy factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwistSymbol {
    pub vertex: usize,
    pub sign: Sign,
}

fn vertex_symbols(v: &OpenBookVertex) -> Vec<Sign> {
    match &v.kind {
        VertexKind::TorusBlock { k } => {
            let sign = if *k > 0 { Sign::Positive } else { Sign::Negative };
            vec![sign; (k.unsigned_abs() as usize) - 1]
        }
        VertexKind::HopfBand { sign } => vec![*sign],
        VertexKind::Composite { symbols, .. } => symbols.clone(),
    }
}

/// Expand each vertex of a growing into its twist symbols, concatenated in
/// growing order. The symbol count equals the first Betti number of the
/// glued page.
pub fn monodromy_factorization(
    t: &TreeOfOpenBooks,
    gr: &Growing,
) -> Result<Vec<TwistSymbol>, TreeError> {
    if !is_growing(t, gr) {
        return Err(TreeError::InvalidGrowing);
    }
    Ok(gr
        .0
        .iter()
        .flat_map(|&v| {
            vertex_symbols(&t.vertices()[v])
                .into_iter()
                .map(move |sign| TwistSymbol { vertex: v, sign })
        })
        .collect())
}

/// Contract every maximal same-veering subtree to a composite vertex whose
/// page is the glued page of the subtree. The result is bipartite in the
/// veering labels.
pub fn block_tree(t: &TreeOfOpenBooks) -> Result<TreeOfOpenBooks, TreeError> {
    for (v, vx) in t.vertices().iter().enumerate() {
        if vx.veering == Veering::Unknown {
            return Err(TreeError::UnknownVeering { vertex: v });
        }
    }
    let n = t.vertices().len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for e in t.edges() {
        if t.vertices()[e.a].veering == t.vertices()[e.b].veering {
            let (ra, rb) = (find(&mut parent, e.a), find(&mut parent, e.b));
            parent[ra] = rb;
        }
    }
    let mut block_of = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut root_block: std::collections::BTreeMap<usize, usize> = Default::default();
    for v in 0..n {
        let r = find(&mut parent, v);
        let b = *root_block.entry(r).or_insert_with(|| {
            blocks.push(Vec::new());
            blocks.len() - 1
        });
        block_of[v] = b;
        blocks[b].push(v);
    }

    let mut vertices = Vec::new();
    for members in &blocks {
        if members.len() == 1 {
            vertices.push(t.vertices()[members[0]].clone());
            continue;
        }
        let subset: BTreeSet<usize> = members.iter().copied().collect();
        let page = t.assemble(&subset)?;
        // expand members along a growing of the subtree
        let mut order = vec![members[0]];
        let adj = t.adjacency();
        while order.len() < members.len() {
            let next = members
                .iter()
                .copied()
                .find(|m| !order.contains(m) && adj[*m].iter().any(|u| order.contains(u)))
                .expect("subtree is connected");
            order.push(next);
        }
        let symbols = order
            .iter()
            .flat_map(|&m| vertex_symbols(&t.vertices()[m]))
            .collect();
        vertices.push(OpenBookVertex {
            kind: VertexKind::Composite {
                members: order,
                symbols,
            },
            veering: t.vertices()[members[0]].veering,
            page,
        });
    }
    let mut edges = Vec::new();
    for e in t.edges() {
        if t.vertices()[e.a].veering == t.vertices()[e.b].veering {
            continue;
        }
        let rename = |vertex: usize, face: &str| {
            if blocks[block_of[vertex]].len() == 1 {
                face.to_string()
            } else {
                format!("v{vertex}:{face}")
            }
        };
        edges.push(Edge {
            a: block_of[e.a],
            b: block_of[e.b],
            region: SummingRegion {
                face_a: rename(e.a, &e.region.face_a),
                face_b: rename(e.b, &e.region.face_b),
                ..e.region.clone()
            },
        });
    }
    TreeOfOpenBooks::new(vertices, edges)
}

/// A named deduction step recorded in a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertStep {
    /// An essential Murasugi sum of strictly same-veering open books veers
    /// strictly the same way, so the whole block does.
    BlockVeering { block: usize, veering: Veering },
    /// An essential sum of two strictly oppositely veering open books leaves
    /// no essential arc fixed across the region.
    CrossVeeringSum { a: usize, b: usize },
    /// A veering-bipartite tree with all regions essential yields an open
    /// book without fixed essential arcs, hence a prime binding.
    BipartiteConclusion,
}

/// Self-validating record that the open book of a tree is prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimenessCertificate {
    pub tree: TreeOfOpenBooks,
    pub block_tree: TreeOfOpenBooks,
    /// Growing of `tree` that exhausts each block before leaving it.
    pub growing: Growing,
    pub monodromy_word: Vec<TwistSymbol>,
    pub steps: Vec<CertStep>,
}

fn block_membership(bt: &TreeOfOpenBooks, n: usize) -> Vec<Vec<usize>> {
    bt.vertices()
        .iter()
        .enumerate()
        .map(|(b, v)| match &v.kind {
            VertexKind::Composite { members, .. } => members.clone(),
            _ => {
                // singleton blocks keep the original vertex; recover its id
                // by elimination
                let _ = n;
                vec![b]
            }
        })
        .collect()
}

/// Certify primeness of the open book of `t`: all vertices strictly veering
/// and all regions essential.
pub fn primeness_certificate(t: &TreeOfOpenBooks) -> Result<PrimenessCertificate, TreeError> {
    for (v, vx) in t.vertices().iter().enumerate() {
        if vx.veering == Veering::Unknown {
            return Err(TreeError::UnknownVeering { vertex: v });
        }
    }
    for e in t.edges() {
        if !e.region.essential.is_essential() {
            return Err(TreeError::NonEssentialEdge {
                a: e.a,
                b: e.b,
                location: e.region.face_a.clone(),
            });
        }
    }
    let bt = block_tree(t)?;
    let blocks = resolve_blocks(t, &bt);

    // grow block by block: exhaust each block's subtree before moving on
    let adj = t.adjacency();
    let mut order: Vec<usize> = Vec::new();
    let mut done_blocks = vec![false; blocks.len()];
    while order.len() < t.vertices().len() {
        let next_block = (0..blocks.len())
            .find(|&b| {
                !done_blocks[b]
                    && (order.is_empty()
                        || blocks[b]
                            .iter()
                            .any(|&m| adj[m].iter().any(|u| order.contains(u))))
            })
            .expect("tree is connected");
        let members = &blocks[next_block];
        let seed = if order.is_empty() {
            members[0]
        } else {
            members
                .iter()
                .copied()
                .find(|&m| adj[m].iter().any(|u| order.contains(u)))
                .expect("adjacent member exists")
        };
        order.push(seed);
        let mut grown = 1usize;
        while grown < members.len() {
            let m = members
                .iter()
                .copied()
                .find(|&m| !order.contains(&m) && adj[m].iter().any(|u| order.contains(u)))
                .expect("block subtree is connected");
            order.push(m);
            grown += 1;
        }
        done_blocks[next_block] = true;
    }
    let growing = Growing(order);
    let monodromy_word = monodromy_factorization(t, &growing)?;
    let mut steps: Vec<CertStep> = bt
        .vertices()
        .iter()
        .enumerate()
        .map(|(b, v)| CertStep::BlockVeering {
            block: b,
            veering: v.veering,
        })
        .collect();
    steps.extend(
        bt.edges()
            .iter()
            .map(|e| CertStep::CrossVeeringSum { a: e.a, b: e.b }),
    );
    steps.push(CertStep::BipartiteConclusion);
    let cert = PrimenessCertificate {
        tree: t.clone(),
        block_tree: bt,
        growing,
        monodromy_word,
        steps,
    };
    validate_certificate(&cert)?;
    Ok(cert)
}

/// Original-vertex membership of each block of `bt` relative to `t`.
fn resolve_blocks(t: &TreeOfOpenBooks, bt: &TreeOfOpenBooks) -> Vec<Vec<usize>> {
    let mut blocks = block_membership(bt, t.vertices().len());
    // singleton entries hold block ids, not vertex ids; fix them up
    let in_composite: BTreeSet<usize> = blocks
        .iter()
        .zip(bt.vertices())
        .filter(|(_, v)| matches!(v.kind, VertexKind::Composite { .. }))
        .flat_map(|(m, _)| m.iter().copied())
        .collect();
    let mut singles: Vec<usize> = (0..t.vertices().len())
        .filter(|v| !in_composite.contains(v))
        .collect();
    // singleton blocks appear in the same relative order as their vertices
    singles.sort_unstable();
    let mut si = 0usize;
    for (m, v) in blocks.iter_mut().zip(bt.vertices()) {
        if !matches!(v.kind, VertexKind::Composite { .. }) {
            *m = vec![singles[si]];
            si += 1;
        }
    }
    blocks
}

/// Re-check a certificate from its record alone.
pub fn validate_certificate(cert: &PrimenessCertificate) -> Result<(), TreeError> {
    let t = &cert.tree;
    for (v, vx) in t.vertices().iter().enumerate() {
        if vx.veering == Veering::Unknown {
            return Err(TreeError::UnknownVeering { vertex: v });
        }
    }
    for e in t.edges() {
        if !e.region.essential.is_essential() {
            return Err(TreeError::NonEssentialEdge {
                a: e.a,
                b: e.b,
                location: e.region.face_a.clone(),
            });
        }
    }
    for e in cert.block_tree.edges() {
        let va = cert.block_tree.vertices()[e.a].veering;
        let vb = cert.block_tree.vertices()[e.b].veering;
        if va == vb {
            return Err(TreeError::Structure(
                "block tree is not veering-bipartite".into(),
            ));
        }
    }
    if !is_growing(t, &cert.growing) {
        return Err(TreeError::InvalidGrowing);
    }
    // block-contiguity: the block of each vertex, in growing order, changes
    // only to unvisited blocks
    let blocks = resolve_blocks(t, &cert.block_tree);
    let mut block_of = vec![usize::MAX; t.vertices().len()];
    for (b, members) in blocks.iter().enumerate() {
        for &m in members {
            if m >= block_of.len() || block_of[m] != usize::MAX {
                return Err(TreeError::Structure("block membership is not a partition".into()));
            }
            block_of[m] = b;
        }
    }
    if block_of.iter().any(|&b| b == usize::MAX) {
        return Err(TreeError::Structure("block membership is not a partition".into()));
    }
    let mut finished: Vec<usize> = Vec::new();
    let mut current = usize::MAX;
    for &v in &cert.growing.0 {
        let b = block_of[v];
        if b != current {
            if finished.contains(&b) {
                return Err(TreeError::Structure(
                    "growing leaves and re-enters a block".into(),
                ));
            }
            if current != usize::MAX {
                finished.push(current);
            }
            current = b;
        }
    }
    if cert.monodromy_word != monodromy_factorization(t, &cert.growing)? {
        return Err(TreeError::Structure("monodromy word mismatch".into()));
    }
    let inv = page_of_tree(t)?.invariants_connected();
    if cert.monodromy_word.len() as i64 != 1 - inv.euler_char {
        return Err(TreeError::Structure(
            "monodromy length does not match the page".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_word;
    use crate::fixtures;
    use crate::surface::seifert_surface_of_word;

    #[test]
    fn braid_tree_beta_comp() {
        let t = braid_tree(&fixtures::beta_comp()).unwrap();
        let ks: Vec<i64> = t
            .vertices()
            .iter()
            .map(|v| match v.kind {
                VertexKind::TorusBlock { k } => k,
                _ => panic!("expected torus block"),
            })
            .collect();
        assert_eq!(ks, vec![-3, 3, 5, -3]);
        assert_eq!(t.edges().len(), 3);
        for e in t.edges() {
            assert_eq!(e.region.sides, 2);
            assert!(!e.region.essential.is_essential());
        }
    }

    #[test]
    fn braid_tree_beta_prime() {
        let t = braid_tree(&fixtures::beta_prime()).unwrap();
        let sides: Vec<usize> = t.edges().iter().map(|e| e.region.sides).collect();
        assert_eq!(sides, vec![4, 4, 6]);
        for e in t.edges() {
            assert_eq!(
                e.region.essential,
                Essentiality::Essential(EssentialProvenance::SeesawAtLeastFour)
            );
        }
    }

    #[test]
    fn braid_tree_odd_seesaw() {
        let w = parse_word("1 2 1 2 1", Some(3)).unwrap();
        assert_eq!(w.seesaw_profile().get(2), Some(5));
        let t = braid_tree(&w).unwrap();
        assert_eq!(t.edges()[0].region.sides, 4);
    }

    #[test]
    fn braid_tree_errors() {
        assert_eq!(
            braid_tree(&parse_word("1 1^-1", None).unwrap()),
            Err(TreeError::NotHomogeneous)
        );
        assert_eq!(
            braid_tree(&parse_word("1 3", Some(4)).unwrap()),
            Err(TreeError::Split)
        );
        assert_eq!(
            braid_tree(&parse_word("1^2 2 3^2", Some(4)).unwrap()),
            Err(TreeError::Destabilizable { index: 2 })
        );
        assert_eq!(
            braid_tree(&parse_word("", Some(1)).unwrap()),
            Err(TreeError::TooFewStrands)
        );
    }

    #[test]
    fn block_page_invariants() {
        let w = parse_word("1^5", Some(2)).unwrap();
        let t = braid_tree(&w).unwrap();
        let inv = t.vertices()[0].page.invariants_connected();
        assert_eq!(inv.euler_char, -3);
        assert_eq!(inv.boundary_components, 1);

        for v in braid_tree(&fixtures::beta_prime()).unwrap().vertices() {
            let k = match v.kind {
                VertexKind::TorusBlock { k } => k,
                _ => unreachable!(),
            };
            let inv = v.page.invariants_connected();
            assert_eq!(inv.euler_char, 2 - k.abs() as i64);
        }
    }

    #[test]
    fn braid_page_matches_seifert_surface() {
        for w in [
            fixtures::beta_prime(),
            fixtures::beta_comp(),
            fixtures::knot_6_3(),
            parse_word("1 2 1 2 1", Some(3)).unwrap(),
            parse_word("1^-2 2^3 3^-2", Some(4)).unwrap(),
        ] {
            let t = braid_tree(&w).unwrap();
            let page = page_of_tree(&t).unwrap();
            let got = page.invariants_connected();
            let want = seifert_surface_of_word(&w).invariants_connected();
            assert_eq!(got, want, "word {w}");
        }
    }

    #[test]
    fn block_tree_beta_prime() {
        let t = braid_tree(&fixtures::beta_prime()).unwrap();
        let bt = block_tree(&t).unwrap();
        let veerings: Vec<Veering> = bt.vertices().iter().map(|v| v.veering).collect();
        assert_eq!(
            veerings,
            vec![
                Veering::StrictlyLeft,
                Veering::StrictlyRight,
                Veering::StrictlyLeft
            ]
        );
        assert_eq!(bt.edges().len(), 2);
        // contracting again changes nothing structurally
        let bt2 = block_tree(&bt).unwrap();
        assert_eq!(bt2, bt);
    }

    #[test]
    fn block_tree_single_block() {
        let w = parse_word("1^2 2^3", Some(3)).unwrap();
        let t = braid_tree(&w).unwrap();
        let bt = block_tree(&t).unwrap();
        assert_eq!(bt.vertices().len(), 1);
        assert_eq!(bt.vertices()[0].veering, Veering::StrictlyRight);
        let single = arborescent_tree(&parse_plane_tree("(+)").unwrap()).unwrap();
        assert_eq!(block_tree(&single).unwrap(), single);
    }

    #[test]
    fn growings_counts() {
        let single = arborescent_tree(&parse_plane_tree("(+)").unwrap()).unwrap();
        assert_eq!(growings(&single).len(), 1);
        let pair = arborescent_tree(&parse_plane_tree("(+(+))").unwrap()).unwrap();
        assert_eq!(growings(&pair).len(), 2);
        let path3 = arborescent_tree(&parse_plane_tree("(+(+(+)))").unwrap()).unwrap();
        let gs: Vec<Vec<usize>> = growings(&path3).into_iter().map(|g| g.0).collect();
        assert_eq!(
            gs,
            vec![vec![0, 1, 2], vec![1, 0, 2], vec![1, 2, 0], vec![2, 1, 0]]
        );
    }

    #[test]
    fn growing_words() {
        let path3 = arborescent_tree(&parse_plane_tree("(+(+(+)))").unwrap()).unwrap();
        let w = growing_word(&path3, &Growing(vec![1, 0, 2])).unwrap();
        assert_eq!(w, vec![2, 0, 1]);
        assert_eq!(
            growing_word(&path3, &Growing(vec![0, 2, 1])),
            Err(TreeError::InvalidGrowing)
        );
    }

    #[test]
    fn growing_words_cyclically_trace_equivalent() {
        let star = arborescent_tree(&parse_plane_tree("(+(-)(+)(-))").unwrap()).unwrap();
        let dep = vertex_dependence(&star);
        let words: Vec<Vec<usize>> = growings(&star)
            .iter()
            .map(|g| growing_word(&star, g).unwrap())
            .collect();
        for w in &words {
            assert!(dep.cyclic_equivalent(&words[0], w).unwrap());
        }
    }

    #[test]
    fn monodromy_beta_comp() {
        let t = braid_tree(&fixtures::beta_comp()).unwrap();
        let gr = Growing(vec![0, 1, 2, 3]);
        let word = monodromy_factorization(&t, &gr).unwrap();
        let signs: Vec<Sign> = word.iter().map(|s| s.sign).collect();
        use Sign::{Negative as N, Positive as P};
        assert_eq!(signs, vec![N, N, P, P, P, P, P, P, N, N]);
        assert_eq!(word.len(), 10);
    }

    #[test]
    fn monodromy_length_is_one_minus_chi() {
        let trees = [
            braid_tree(&fixtures::beta_prime()).unwrap(),
            braid_tree(&fixtures::beta_comp()).unwrap(),
            arborescent_tree(&parse_plane_tree("(+(-)(+(+)))").unwrap()).unwrap(),
        ];
        for t in trees {
            let gr = growings(&t).into_iter().next().unwrap();
            let word = monodromy_factorization(&t, &gr).unwrap();
            let chi = page_of_tree(&t).unwrap().invariants_connected().euler_char;
            assert_eq!(word.len() as i64, 1 - chi);
        }
    }

    #[test]
    fn arborescent_pages() {
        let single = arborescent_tree(&parse_plane_tree("(+)").unwrap()).unwrap();
        let inv = page_of_tree(&single).unwrap().invariants_connected();
        assert_eq!((inv.euler_char, inv.boundary_components), (0, 2));

        let pair = arborescent_tree(&parse_plane_tree("(+(+))").unwrap()).unwrap();
        let inv = page_of_tree(&pair).unwrap().invariants_connected();
        assert_eq!((inv.euler_char, inv.boundary_components, inv.genus), (-1, 1, 1));

        let star = arborescent_tree(&parse_plane_tree("(-(+)(+)(+))").unwrap()).unwrap();
        let inv = page_of_tree(&star).unwrap().invariants_connected();
        assert_eq!(inv.euler_char, -3);
    }

    #[test]
    fn arborescent_always_certifies() {
        for text in ["(+)", "(+(+))", "(-(+)(+)(+))", "(+(-(+))(-))"] {
            let t = arborescent_tree(&parse_plane_tree(text).unwrap()).unwrap();
            let cert = primeness_certificate(&t).unwrap();
            validate_certificate(&cert).unwrap();
        }
    }

    #[test]
    fn certificate_beta_prime() {
        let t = braid_tree(&fixtures::beta_prime()).unwrap();
        let cert = primeness_certificate(&t).unwrap();
        let veerings: Vec<Veering> = cert
            .block_tree
            .vertices()
            .iter()
            .map(|v| v.veering)
            .collect();
        assert_eq!(
            veerings,
            vec![
                Veering::StrictlyLeft,
                Veering::StrictlyRight,
                Veering::StrictlyLeft
            ]
        );
        assert_eq!(cert.monodromy_word.len(), 10);
        validate_certificate(&cert).unwrap();
    }

    #[test]
    fn certificate_beta_comp_rejected() {
        let t = braid_tree(&fixtures::beta_comp()).unwrap();
        assert_eq!(
            primeness_certificate(&t),
            Err(TreeError::NonEssentialEdge {
                a: 0,
                b: 1,
                location: "R2".into()
            })
        );
    }

    #[test]
    fn plane_tree_parsing() {
        let t = parse_plane_tree("(+(-)(+))").unwrap();
        assert_eq!(t.sign, Sign::Positive);
        assert_eq!(t.children.len(), 2);
        assert_eq!(t.children[0].sign, Sign::Negative);
        assert!(parse_plane_tree("(+").is_err());
        assert!(parse_plane_tree("(+)x").is_err());
        assert!(parse_plane_tree("()").is_err());
    }

    #[test]
    fn figure_eight_on_hopf_band() {
        let t = arborescent_tree(&parse_plane_tree("(+)").unwrap()).unwrap();
        let site = PlumbSite {
            face: "A".into(),
            side: 0,
            essential: true,
            fixed_arcs_covered: true,
        };
        let out = figure_eight_plumb(&t, 0, &site).unwrap();
        assert!(out.no_fixed_essential_arcs);
        assert_eq!(out.tree.vertices().len(), 3);
        let inv = page_of_tree(&out.tree).unwrap().invariants_connected();
        assert_eq!(inv.euler_char, -2);
        primeness_certificate(&out.tree).unwrap();
    }

    #[test]
    fn figure_eight_on_braid_tree() {
        let t = braid_tree(&fixtures::beta_prime()).unwrap();
        // a boundary side of the bottom disk of the first block
        let site = PlumbSite {
            face: "D1.f0".into(),
            side: 0,
            essential: true,
            fixed_arcs_covered: false,
        };
        let face = t.vertices()[0]
            .page
            .faces()
            .find(|(n, _)| n.starts_with("D1"))
            .map(|(n, _)| n.to_string())
            .unwrap();
        let side = t.vertices()[0]
            .page
            .face(&face)
            .unwrap()
            .iter()
            .position(|s| s.label.contains(".f"))
            .unwrap();
        let site = PlumbSite {
            face,
            side,
            ..site
        };
        let out = figure_eight_plumb(&t, 0, &site).unwrap();
        assert!(!out.no_fixed_essential_arcs);
        assert_eq!(out.tree.vertices().len(), 6);
        let chi_before = page_of_tree(&t).unwrap().invariants_connected().euler_char;
        let chi_after = page_of_tree(&out.tree)
            .unwrap()
            .invariants_connected()
            .euler_char;
        assert_eq!(chi_after, chi_before - 2);
    }

    #[test]
    fn figure_eight_errors() {
        let t = arborescent_tree(&parse_plane_tree("(+(+))").unwrap()).unwrap();
        let not_essential = PlumbSite {
            face: "Q0".into(),
            side: 0,
            essential: false,
            fixed_arcs_covered: false,
        };
        assert_eq!(
            figure_eight_plumb(&t, 0, &not_essential),
            Err(TreeError::NonEssentialRegion)
        );
        let overlapping = PlumbSite {
            face: "Q0".into(),
            side: 0,
            essential: true,
            fixed_arcs_covered: false,
        };
        assert_eq!(
            figure_eight_plumb(&t, 0, &overlapping),
            Err(TreeError::RegionOverlap { face: "Q0".into() })
        );
    }
}
