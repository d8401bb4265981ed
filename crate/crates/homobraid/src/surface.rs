//! Combinatorial surfaces: polygon faces glued along like-labeled sides.
//!
//! Every face is traversed counterclockwise. A side label occurring once is a
//! boundary edge; occurring twice with opposite direction flags it is an
//! interior edge gluing the two occurrences. Same-direction double use is
//! rejected as non-orientable under this convention.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::braid::BraidWord;

/// One directed side of a polygon face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Side {
    pub label: String,
    pub reversed: bool,
}

impl Side {
    pub fn fwd(label: impl Into<String>) -> Side {
        Side {
            label: label.into(),
            reversed: false,
        }
    }

    pub fn rev(label: impl Into<String>) -> Side {
        Side {
            label: label.into(),
            reversed: true,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("face {0} has no sides")]
    EmptyFace(String),
    #[error("edge label {0} used more than twice")]
    LabelOverused(String),
    #[error("edge label {0} glued to itself without orientation reversal")]
    NonOrientable(String),
    #[error("duplicate face name {0}")]
    DuplicateFace(String),
    #[error("no face named {0}")]
    NoSuchFace(String),
    #[error("faces {0} and {1} have different side counts")]
    GlueSideCount(String, String),
    #[error("faces {0} and {1}: side {2} is not boundary-vs-interior compatible")]
    GlueParity(String, String, usize),
    #[error("face name {0} present in both surfaces")]
    FaceNameCollision(String),
    #[error("edge label {0} present in both surfaces")]
    LabelCollision(String),
}

/// Invariants of one connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceInvariants {
    pub euler_char: i64,
    pub boundary_components: usize,
    pub genus: u64,
    /// Whether the whole surface this component came from is connected.
    pub connected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CombinatorialSurface {
    faces: BTreeMap<String, Vec<Side>>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Occ {
    face: usize,
    slot: usize,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

impl CombinatorialSurface {
    pub fn build(faces: Vec<(String, Vec<Side>)>) -> Result<CombinatorialSurface, SurfaceError> {
        let mut map = BTreeMap::new();
        for (name, sides) in faces {
            if sides.is_empty() {
                return Err(SurfaceError::EmptyFace(name));
            }
            if map.insert(name.clone(), sides).is_some() {
                return Err(SurfaceError::DuplicateFace(name));
            }
        }
        let s = CombinatorialSurface { faces: map };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<(), SurfaceError> {
        let mut seen: BTreeMap<&str, Vec<bool>> = BTreeMap::new();
        for sides in self.faces.values() {
            for side in sides {
                seen.entry(&side.label).or_default().push(side.reversed);
            }
        }
        for (label, flags) in seen {
            match flags.len() {
                1 => {}
                2 => {
                    if flags[0] == flags[1] {
                        return Err(SurfaceError::NonOrientable(label.to_string()));
                    }
                }
                _ => return Err(SurfaceError::LabelOverused(label.to_string())),
            }
        }
        Ok(())
    }

    pub fn faces(&self) -> impl Iterator<Item = (&str, &[Side])> {
        self.faces.iter().map(|(n, s)| (n.as_str(), s.as_slice()))
    }

    pub fn face(&self, name: &str) -> Option<&[Side]> {
        self.faces.get(name).map(|v| v.as_slice())
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Copy with `prefix` prepended to every face name and edge label.
    pub fn prefixed(&self, prefix: &str) -> CombinatorialSurface {
        let faces = self
            .faces
            .iter()
            .map(|(name, sides)| {
                let sides = sides
                    .iter()
                    .map(|s| Side {
                        label: format!("{prefix}{}", s.label),
                        reversed: s.reversed,
                    })
                    .collect();
                (format!("{prefix}{name}"), sides)
            })
            .collect();
        CombinatorialSurface { faces }
    }

    /// Disjoint union; face names and edge labels must not clash.
    pub fn merge(mut self, other: CombinatorialSurface) -> Result<CombinatorialSurface, SurfaceError> {
        let mine: std::collections::BTreeSet<String> = self
            .faces
            .values()
            .flatten()
            .map(|s| s.label.clone())
            .collect();
        for (name, sides) in other.faces {
            for s in &sides {
                if mine.contains(&s.label) {
                    return Err(SurfaceError::LabelCollision(s.label.clone()));
                }
            }
            if self.faces.insert(name.clone(), sides).is_some() {
                return Err(SurfaceError::FaceNameCollision(name));
            }
        }
        self.validate()?;
        Ok(self)
    }

    fn face_list(&self) -> Vec<(&String, &Vec<Side>)> {
        self.faces.iter().collect()
    }

    fn occurrence_map<'a>(
        faces: &[(&'a String, &'a Vec<Side>)],
    ) -> BTreeMap<&'a str, Vec<Occ>> {
        let mut occs: BTreeMap<&str, Vec<Occ>> = BTreeMap::new();
        for (fi, (_, sides)) in faces.iter().enumerate() {
            for (slot, side) in sides.iter().enumerate() {
                occs.entry(&side.label).or_default().push(Occ { face: fi, slot });
            }
        }
        occs
    }

    pub fn is_connected(&self) -> bool {
        self.component_ids().1 <= 1
    }

    fn component_ids(&self) -> (Vec<usize>, usize) {
        let faces = self.face_list();
        let occs = Self::occurrence_map(&faces);
        let mut uf = UnionFind::new(faces.len());
        for pair in occs.values() {
            if pair.len() == 2 {
                uf.union(pair[0].face, pair[1].face);
            }
        }
        let mut ids = Vec::with_capacity(faces.len());
        let mut roots: Vec<usize> = Vec::new();
        for fi in 0..faces.len() {
            let r = uf.find(fi);
            let id = match roots.iter().position(|&x| x == r) {
                Some(p) => p,
                None => {
                    roots.push(r);
                    roots.len() - 1
                }
            };
            ids.push(id);
        }
        (ids, roots.len())
    }

    /// Euler characteristic, boundary count, and genus of each connected
    /// component, in order of first appearance of the component's faces.
    pub fn invariants(&self) -> Vec<SurfaceInvariants> {
        let faces = self.face_list();
        if faces.is_empty() {
            return Vec::new();
        }
        let occs = Self::occurrence_map(&faces);
        let (comp_of_face, ncomp) = self.component_ids();

        // corners: vertex at the start of each side slot
        let mut corner_base = Vec::with_capacity(faces.len());
        let mut total = 0usize;
        for (_, sides) in &faces {
            corner_base.push(total);
            total += sides.len();
        }
        let corner = |o: Occ| corner_base[o.face] + o.slot;
        let succ_corner = |o: Occ| {
            let len = faces[o.face].1.len();
            corner_base[o.face] + (o.slot + 1) % len
        };
        let is_rev = |o: Occ| faces[o.face].1[o.slot].reversed;

        let mut uf = UnionFind::new(total);
        for pair in occs.values() {
            if pair.len() == 2 {
                let ends = |o: Occ| {
                    if is_rev(o) {
                        (succ_corner(o), corner(o)) // (tail, head) along the label
                    } else {
                        (corner(o), succ_corner(o))
                    }
                };
                let (t0, h0) = ends(pair[0]);
                let (t1, h1) = ends(pair[1]);
                uf.union(t0, t1);
                uf.union(h0, h1);
            }
        }
        let mut vertex_roots: Vec<Vec<usize>> = vec![Vec::new(); ncomp];
        for (fi, (_, sides)) in faces.iter().enumerate() {
            for slot in 0..sides.len() {
                let r = uf.find(corner_base[fi] + slot);
                let c = comp_of_face[fi];
                if !vertex_roots[c].contains(&r) {
                    vertex_roots[c].push(r);
                }
            }
        }

        let mut e = vec![0i64; ncomp];
        for pair in occs.values() {
            e[comp_of_face[pair[0].face]] += 1;
        }
        let mut f = vec![0i64; ncomp];
        for fi in 0..faces.len() {
            f[comp_of_face[fi]] += 1;
        }

        // boundary cycles: from a free side, successor in face, skipping
        // through glued partners
        let partner = |o: Occ| -> Option<Occ> {
            let pair = &occs[faces[o.face].1[o.slot].label.as_str()];
            match pair.len() {
                2 => Some(if pair[0] == o { pair[1] } else { pair[0] }),
                _ => None,
            }
        };
        let succ = |o: Occ| -> Occ {
            let len = faces[o.face].1.len();
            Occ {
                face: o.face,
                slot: (o.slot + 1) % len,
            }
        };
        let free: Vec<Occ> = occs
            .values()
            .filter(|p| p.len() == 1)
            .map(|p| p[0])
            .collect();
        let mut visited = vec![false; total];
        let mut boundary = vec![0usize; ncomp];
        for &start in &free {
            if visited[corner(start)] {
                continue;
            }
            boundary[comp_of_face[start.face]] += 1;
            let mut h = start;
            let mut steps = 0usize;
            loop {
                assert!(!visited[corner(h)], "boundary walk revisited a side");
                visited[corner(h)] = true;
                let mut g = succ(h);
                while let Some(p) = partner(g) {
                    g = succ(p);
                }
                h = g;
                steps += 1;
                assert!(steps <= total, "boundary walk failed to close");
                if h == start {
                    break;
                }
            }
        }
        for o in free {
            assert!(visited[corner(o)], "boundary side missed by every walk");
        }

        (0..ncomp)
            .map(|c| {
                let chi = vertex_roots[c].len() as i64 - e[c] + f[c];
                let b = boundary[c] as i64;
                let twice_genus = 2 - b - chi;
                assert!(
                    twice_genus >= 0 && twice_genus % 2 == 0,
                    "genus relation failed: chi={chi} boundary={b}"
                );
                SurfaceInvariants {
                    euler_char: chi,
                    boundary_components: b as usize,
                    genus: (twice_genus / 2) as u64,
                    connected: ncomp == 1,
                }
            })
            .collect()
    }

    /// Invariants of a surface required to be connected.
    pub fn invariants_connected(&self) -> SurfaceInvariants {
        let inv = self.invariants();
        assert!(inv.len() == 1, "surface has {} components", inv.len());
        inv[0]
    }

    /// Glue two boundary-vs-interior complementary faces of equal side count:
    /// side k of `keep` is identified with side (k + rotation) of `drop`,
    /// whose face is deleted. Models a Murasugi sum along the polygon.
    pub fn glue_faces(
        &mut self,
        keep: &str,
        drop: &str,
        rotation: usize,
    ) -> Result<(), SurfaceError> {
        let fa = self
            .faces
            .get(keep)
            .ok_or_else(|| SurfaceError::NoSuchFace(keep.to_string()))?
            .clone();
        let fb = self
            .faces
            .get(drop)
            .ok_or_else(|| SurfaceError::NoSuchFace(drop.to_string()))?
            .clone();
        if fa.len() != fb.len() {
            return Err(SurfaceError::GlueSideCount(keep.to_string(), drop.to_string()));
        }
        let mut label_count: BTreeMap<&str, usize> = BTreeMap::new();
        for sides in self.faces.values() {
            for s in sides {
                *label_count.entry(&s.label).or_default() += 1;
            }
        }
        let glued = |s: &Side| label_count[s.label.as_str()] == 2;

        let n = fa.len();
        let mut renames: Vec<(String, String, bool)> = Vec::new(); // old, new, new flag
        for k in 0..n {
            let sa = &fa[k];
            let sb = &fb[(k + rotation) % n];
            match (glued(sa), glued(sb)) {
                (true, false) | (false, true) => {}
                _ => {
                    return Err(SurfaceError::GlueParity(
                        keep.to_string(),
                        drop.to_string(),
                        k,
                    ))
                }
            }
            if glued(sb) {
                // the partner occurrence of sb is re-glued to side k of `keep`
                renames.push((sb.label.clone(), sa.label.clone(), !sa.reversed));
            }
        }
        self.faces.remove(drop);
        for (name, sides) in self.faces.iter_mut() {
            for side in sides.iter_mut() {
                if name == keep {
                    continue;
                }
                if let Some((_, new, flag)) =
                    renames.iter().find(|(old, _, _)| *old == side.label)
                {
                    side.label = new.clone();
                    side.reversed = *flag;
                }
            }
        }
        self.validate()
    }
}

/// The Seifert-algorithm surface of a braid word: one disk per strand, one
/// twisted band per letter, attach arcs on each disk in word-position order.
pub fn seifert_surface_of_word(w: &BraidWord) -> CombinatorialSurface {
    let mut faces = Vec::new();
    for i in 1..=w.strands() {
        let mut sides = Vec::new();
        for (p, l) in w.letters().iter().enumerate() {
            let attach = if l.index == i {
                format!("b{p}")
            } else if l.index + 1 == i {
                format!("t{p}")
            } else {
                continue;
            };
            sides.push(Side::fwd(format!("D{i}.f{}", sides.len() / 2)));
            sides.push(Side::fwd(attach));
        }
        if sides.is_empty() {
            sides.push(Side::fwd(format!("D{i}.f0")));
        }
        faces.push((format!("D{i}"), sides));
    }
    for p in 0..w.len() {
        faces.push((
            format!("B{p}"),
            vec![
                Side::rev(format!("b{p}")),
                Side::fwd(format!("B{p}.s0")),
                Side::rev(format!("t{p}")),
                Side::fwd(format!("B{p}.s1")),
            ],
        ));
    }
    CombinatorialSurface::build(faces).expect("surface construction is label-disjoint")
}
